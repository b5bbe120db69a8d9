//! Identity sweeps: every counting identity checked against every other route
//! that computes the same quantity (closed form, recurrence, convolution,
//! brute-force enumeration), with counterexamples kept as data.

use std::collections::HashSet;
use std::fmt::{self, Display, Write as _};
use std::panic::{self, AssertUnwindSafe};

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::counting::{self, max_set_size, Engine, Nat};
use crate::cube::CubeGraph;
use crate::enumeration::{self, Enumerator, VertexMask};
use crate::error::{Error, Result};
use crate::graphs::{GapGraph, GraphKind};

/// Witnesses kept per identity; further failures are only counted.
const MAX_WITNESSES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepBounds {
    /// Largest `n` for algebraic identities.
    pub n_max: u32,
    /// Largest `h` for every identity.
    pub h_max: u32,
    /// Largest `n` for identities that enumerate independent sets.
    pub oracle_n_max: u32,
}

impl SweepBounds {
    pub const fn new(n_max: u32, h_max: u32, oracle_n_max: u32) -> Self {
        Self {
            n_max,
            h_max,
            oracle_n_max,
        }
    }
}

impl Default for SweepBounds {
    fn default() -> Self {
        Self::new(40, 10, 16)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// One counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub n: i64,
    pub h: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u32>,
    pub expected: String,
    pub actual: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub summary: String,
    pub bounds: SweepBounds,
    pub status: Status,
    /// Number of individual comparisons made.
    pub checked: u64,
    pub failure_count: u64,
    pub failures: Vec<Witness>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Case {
    n: i64,
    h: u32,
    k: Option<u32>,
    i: Option<u32>,
}

fn at(n: impl Into<i64>, h: u32) -> Case {
    Case {
        n: n.into(),
        h,
        k: None,
        i: None,
    }
}

impl Case {
    fn k(mut self, k: u32) -> Self {
        self.k = Some(k);
        self
    }

    fn i(mut self, i: u32) -> Self {
        self.i = Some(i);
        self
    }
}

#[derive(Debug, Default)]
struct Check {
    checked: u64,
    failure_count: u64,
    failures: Vec<Witness>,
}

impl Check {
    fn fail(&mut self, case: Case, expected: String, actual: String, note: Option<String>) {
        self.failure_count += 1;
        if self.failures.len() < MAX_WITNESSES {
            self.failures.push(Witness {
                n: case.n,
                h: case.h,
                k: case.k,
                i: case.i,
                expected,
                actual,
                note,
            });
        }
    }

    fn eq<T: PartialEq + Display>(&mut self, case: Case, expected: T, actual: T) {
        self.checked += 1;
        if expected != actual {
            self.fail(case, expected.to_string(), actual.to_string(), None);
        }
    }

    fn eq_noted<T: PartialEq + Display>(
        &mut self,
        case: Case,
        expected: T,
        actual: T,
        note: impl Fn() -> String,
    ) {
        self.checked += 1;
        if expected != actual {
            self.fail(case, expected.to_string(), actual.to_string(), Some(note()));
        }
    }

    fn holds(&mut self, case: Case, ok: bool, note: impl Fn() -> String) {
        self.eq_noted(case, true, ok, note);
    }

    /// Compares against a fallible route; an error counts as a failure.
    fn eq_result<T: PartialEq + Display>(&mut self, case: Case, expected: T, actual: Result<T>) {
        match actual {
            Ok(v) => self.eq(case, expected, v),
            Err(e) => {
                self.checked += 1;
                self.fail(
                    case,
                    expected.to_string(),
                    "error".into(),
                    Some(e.to_string()),
                );
            }
        }
    }
}

struct Ctx<'a> {
    engine: &'a Engine,
    bounds: SweepBounds,
    enumerator: Enumerator,
}

impl Ctx<'_> {
    fn oracle_graphs(&self, kind: GraphKind) -> impl Iterator<Item = GapGraph> + '_ {
        (0..=self.bounds.h_max).flat_map(move |h| {
            (0..=self.bounds.oracle_n_max).map(move |n| GapGraph::new(kind, n, h))
        })
    }

    fn grid(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        (0..=self.bounds.h_max).flat_map(move |h| (0..=self.bounds.n_max).map(move |n| (n, h)))
    }
}

/// A registered identity check.
pub struct Identity {
    pub id: &'static str,
    pub summary: &'static str,
    run: fn(&Ctx<'_>, &mut Check) -> Result<()>,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity").field("id", &self.id).finish()
    }
}

pub static IDENTITIES: &[Identity] = &[
    Identity {
        id: "binomial-convention",
        summary: "binom(m, k) counts k-subsets: 1 for k = 0, 0 for k < 0 or a negative top",
        run: binomial_convention,
    },
    Identity {
        id: "bounded-sum-tail",
        summary: "p(n,k) and c(n,k) vanish for k > ceil(n/(h+1)); cycle divisions are exact",
        run: bounded_sum_tail,
    },
    Identity {
        id: "path-count-recurrence",
        summary: "p_n = sum_k binom(n-hk+h, k) equals p_n = p_(n-1) + p_(n-h-1)",
        run: path_count_recurrence,
    },
    Identity {
        id: "cycle-count-recurrence",
        summary: "c_n = sum_k c(n,k) equals c_n = c_(n-1) + c_(n-h-1), base n+1 for n <= 2h+1",
        run: cycle_count_recurrence,
    },
    Identity {
        id: "coefficient-shift",
        summary: "p(n,k) at h equals p(n-k+1,k) at h-1",
        run: coefficient_shift,
    },
    Identity {
        id: "cycle-coefficient-cross",
        summary: "p(n-2h-1,k-1) + h p(n-3h-2,k-2) = c(n-h-1,k-1) for n > 3h+2",
        run: cycle_coefficient_cross,
    },
    Identity {
        id: "fibonacci-path-bridge",
        summary: "F_i = p_(i-h-1), clamped to p_0 for negative index",
        run: fibonacci_path_bridge,
    },
    Identity {
        id: "lucas-cycle-bridge",
        summary: "L_i = c_(i-1) for i > h+1",
        run: lucas_cycle_bridge,
    },
    Identity {
        id: "lucas-fibonacci-bridge",
        summary: "L_(n+1) = F_n + (h+1) F_(n-h) for n > h",
        run: lucas_fibonacci_bridge,
    },
    Identity {
        id: "extended-sequences-agree",
        summary: "extended F and L agree with the plain sequences on n >= 1 (h >= 2)",
        run: extended_sequences_agree,
    },
    Identity {
        id: "path-edges-convolution",
        summary: "H_n = sum_k k p(n,k) equals (F * F)(n)",
        run: path_edges_convolution,
    },
    Identity {
        id: "cycle-edges-closed-form",
        summary: "M_n = sum_k k c(n,k) equals n F_(n-h) for n > h",
        run: cycle_edges_closed_form,
    },
    Identity {
        id: "cycle-edges-convolution",
        summary: "M_n equals (F * L)(n-h) for n > h",
        run: cycle_edges_convolution,
    },
    Identity {
        id: "t-count-total",
        summary: "sum_i T(k,i) = k p(n,k) and sum_k sum_i T(k,i) = H_n",
        run: t_count_total,
    },
    Identity {
        id: "t-count-vertex-sum",
        summary: "sum_k T(k,i) = p_(i-h-1) p_(n-h-i), both clamped",
        run: t_count_vertex_sum,
    },
    Identity {
        id: "t-count-oracle",
        summary: "T(k,i) equals the enumerated number of k-sets containing v_i",
        run: t_count_oracle,
    },
    Identity {
        id: "classical-specializations",
        summary: "h = 1 gives Fibonacci/Lucas counts, h = 0 gives the hypercube",
        run: classical_specializations,
    },
    Identity {
        id: "graph-structure",
        summary: "edge counts, circular distance, path inside cycle, small cycles complete",
        run: graph_structure,
    },
    Identity {
        id: "path-count-oracle",
        summary: "enumerated path independent sets by size equal p(n,k) and p_n",
        run: path_count_oracle,
    },
    Identity {
        id: "cycle-count-oracle",
        summary: "enumerated cycle independent sets by size equal c(n,k) and c_n",
        run: cycle_count_oracle,
    },
    Identity {
        id: "path-cube-structure",
        summary: "path Hasse diagram has p_n vertices, H_n covers, covers = Hamming-1 pairs",
        run: path_cube_structure,
    },
    Identity {
        id: "cycle-cube-structure",
        summary:
            "cycle Hasse diagram has c_n vertices, M_n covers (n > h), covers = Hamming-1 pairs",
        run: cycle_cube_structure,
    },
    Identity {
        id: "bijection",
        summary:
            "the shift map is a bijection from k-subsets of {1..n-hk+h} onto independent k-sets",
        run: bijection,
    },
    Identity {
        id: "substring-characterization",
        summary: "gap condition, graph independence and forbidden substrings agree on all masks",
        run: substring_characterization,
    },
];

pub fn identity_ids() -> Vec<&'static str> {
    IDENTITIES.iter().map(|i| i.id).collect()
}

/// Runs the full suite with the standard engine and the default cap.
pub fn run_suite(bounds: SweepBounds) -> Result<Vec<IdentityReport>> {
    run_suite_with(counting::standard(), bounds)
}

/// Runs the full suite against `engine`. Reports are sorted by id.
pub fn run_suite_with(engine: &Engine, bounds: SweepBounds) -> Result<Vec<IdentityReport>> {
    let enumerator = oracle_enumerator(bounds)?;
    let ctx = Ctx {
        engine,
        bounds,
        enumerator,
    };
    let mut reports: Vec<IdentityReport> = IDENTITIES
        .par_iter()
        .map(|identity| run_one(&ctx, identity))
        .collect();
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}

/// Runs a single identity by id.
pub fn run_identity(engine: &Engine, id: &str, bounds: SweepBounds) -> Result<IdentityReport> {
    let identity = IDENTITIES
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown identity `{id}`")))?;
    let ctx = Ctx {
        engine,
        bounds,
        enumerator: oracle_enumerator(bounds)?,
    };
    Ok(run_one(&ctx, identity))
}

fn oracle_enumerator(bounds: SweepBounds) -> Result<Enumerator> {
    let cap = enumeration::DEFAULT_CAP;
    if bounds.oracle_n_max > cap {
        return Err(Error::Capacity {
            n: bounds.oracle_n_max,
            cap,
        });
    }
    Enumerator::with_cap(cap)
}

fn run_one(ctx: &Ctx<'_>, identity: &Identity) -> IdentityReport {
    let mut check = Check::default();
    // A broken convention can trip an internal assertion (for instance an
    // inexact cycle division); that is a failure of this identity, not of
    // the whole run.
    let outcome = panic::catch_unwind(AssertUnwindSafe(|| (identity.run)(ctx, &mut check)));
    let abort = match outcome {
        Ok(Ok(())) => None,
        Ok(Err(e)) => Some(format!("error: {e}")),
        Err(payload) => Some(format!("panicked: {}", panic_message(payload.as_ref()))),
    };
    if let Some(note) = abort {
        check.fail(at(-1, 0), "completion".into(), "aborted".into(), Some(note));
    }
    IdentityReport {
        id: identity.id.to_string(),
        summary: identity.summary.to_string(),
        bounds: ctx.bounds,
        status: if check.failure_count == 0 {
            Status::Pass
        } else {
            Status::Fail
        },
        checked: check.checked,
        failure_count: check.failure_count,
        failures: check.failures,
    }
}

fn panic_message(payload: &(dyn std::any::Any + Send)) -> String {
    payload
        .downcast_ref::<String>()
        .cloned()
        .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
        .unwrap_or_else(|| "non-string panic payload".into())
}

/// Every listed identity passed.
pub fn all_passed(reports: &[IdentityReport]) -> bool {
    reports.iter().all(IdentityReport::passed)
}

pub fn to_json(reports: &[IdentityReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
}

/// Tab-separated summary: one line per identity, then the first witness of
/// each failing identity.
pub fn summary_table(reports: &[IdentityReport]) -> String {
    let mut out = String::from("identity\tstatus\tchecked\tfailures\n");
    for r in reports {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}",
            r.id, r.status, r.checked, r.failure_count
        );
    }
    for r in reports.iter().filter(|r| !r.passed()) {
        if let Some(w) = r.failures.first() {
            let _ = write!(out, "# {}: n={} h={}", r.id, w.n, w.h);
            if let Some(k) = w.k {
                let _ = write!(out, " k={k}");
            }
            if let Some(i) = w.i {
                let _ = write!(out, " i={i}");
            }
            let _ = write!(out, " expected={} actual={}", w.expected, w.actual);
            if let Some(note) = &w.note {
                let _ = write!(out, " ({note})");
            }
            out.push('\n');
        }
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let _ = writeln!(out, "{passed}/{} identities pass", reports.len());
    out
}

// ---------------------------------------------------------------------------
// Independent reference values. These deliberately avoid the engine.

fn factorial(n: u64) -> Nat {
    (1..=n).fold(Nat::one(), |acc, i| acc * i)
}

fn subset_count(m: i64, k: i64) -> Nat {
    match (m, k) {
        (_, k) if k < 0 => Nat::zero(),
        (_, 0) => Nat::one(),
        (m, k) if m < 0 || k > m => Nat::zero(),
        (m, k) => factorial(m as u64) / (factorial(k as u64) * factorial((m - k) as u64)),
    }
}

/// Classical Fibonacci, `F_0 = 0, F_1 = F_2 = 1`.
fn classical_fibonacci(upto: usize) -> Vec<Nat> {
    let mut f = vec![Nat::zero(), Nat::one()];
    while f.len() <= upto {
        let next = &f[f.len() - 1] + &f[f.len() - 2];
        f.push(next);
    }
    f
}

/// Classical Lucas, `L_0 = 2, L_1 = 1`.
fn classical_lucas(upto: usize) -> Vec<Nat> {
    let mut l = vec![Nat::from(2u32), Nat::one()];
    while l.len() <= upto {
        let next = &l[l.len() - 1] + &l[l.len() - 2];
        l.push(next);
    }
    l
}

// ---------------------------------------------------------------------------

fn binomial_convention(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    let reach = i64::from(ctx.bounds.n_max);
    for m in -reach..=reach {
        for k in -1..=reach + 1 {
            let case = Case {
                n: m,
                h: 0,
                k: u32::try_from(k).ok(),
                i: None,
            };
            c.eq_noted(case, subset_count(m, k), ctx.engine.binom(m, k), || {
                format!("binom({m}, {k})")
            });
        }
    }
    Ok(())
}

fn bounded_sum_tail(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for (n, h) in ctx.grid() {
        let bound = max_set_size(n, h);
        for k in bound + 1..=bound + 3 {
            c.eq_noted(
                at(n, h).k(k),
                Nat::zero(),
                ctx.engine.path_count_k(n, h, k),
                || "path".into(),
            );
            c.eq_noted(
                at(n, h).k(k),
                Nat::zero(),
                ctx.engine.cycle_count_k(n, h, k),
                || "cycle".into(),
            );
        }
    }
    Ok(())
}

fn path_count_recurrence(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for (n, h) in ctx.grid() {
        c.eq(
            at(n, h),
            ctx.engine.path_count(n, h),
            ctx.engine.path_count_rec(n, h),
        );
    }
    Ok(())
}

fn cycle_count_recurrence(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for (n, h) in ctx.grid() {
        c.eq(
            at(n, h),
            ctx.engine.cycle_count(n, h),
            ctx.engine.cycle_count_rec(n, h),
        );
    }
    Ok(())
}

fn coefficient_shift(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for (n, h) in ctx.grid().filter(|&(_, h)| h >= 1) {
        for k in 0..=n + 1 {
            c.eq(
                at(n, h).k(k),
                ctx.engine.path_count_k(n, h, k),
                ctx.engine.path_count_k(n + 1 - k, h - 1, k),
            );
        }
    }
    Ok(())
}

fn cycle_coefficient_cross(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    let e = ctx.engine;
    for (n, h) in ctx.grid().filter(|&(n, h)| n > 3 * h + 2) {
        for k in 1..=max_set_size(n - h - 1, h) + 2 {
            let pair_term = if k >= 2 {
                e.path_count_k(n - 3 * h - 2, h, k - 2) * h
            } else {
                Nat::zero()
            };
            let lhs = e.path_count_k(n - 2 * h - 1, h, k - 1) + pair_term;
            c.eq(at(n, h).k(k), lhs, e.cycle_count_k(n - h - 1, h, k - 1));
        }
    }
    Ok(())
}

fn fibonacci_path_bridge(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for (n, h) in ctx.grid().filter(|&(n, _)| n >= 1) {
        let bridged = ctx
            .engine
            .path_count_clamped(i64::from(n) - i64::from(h) - 1, h);
        c.eq_result(at(n, h), bridged, ctx.engine.h_fibonacci(h, i64::from(n)));
    }
    Ok(())
}

fn lucas_cycle_bridge(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for (n, h) in ctx.grid().filter(|&(n, h)| n > h + 1) {
        c.eq_result(
            at(n, h),
            ctx.engine.cycle_count(n - 1, h),
            ctx.engine.h_lucas(h, i64::from(n)),
        );
    }
    Ok(())
}

fn lucas_fibonacci_bridge(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    let e = ctx.engine;
    for (n, h) in ctx.grid().filter(|&(n, h)| n > h) {
        let (ni, hi) = (i64::from(n), i64::from(h));
        let rhs = e.h_fibonacci(h, ni)? + e.h_fibonacci(h, ni - hi)? * (h + 1);
        c.eq_result(at(n, h), rhs, e.h_lucas(h, ni + 1));
    }
    Ok(())
}

fn extended_sequences_agree(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    let e = ctx.engine;
    for (n, h) in ctx.grid().filter(|&(n, h)| n >= 1 && h >= 2) {
        let ni = i64::from(n);
        c.eq_noted(
            at(n, h),
            e.h_fibonacci(h, ni)?,
            e.extended_fib(h, ni)?,
            || "F".into(),
        );
        c.eq_noted(
            at(n, h),
            num_bigint::BigInt::from(e.h_lucas(h, ni)?),
            e.extended_lucas(h, ni)?,
            || "L".into(),
        );
    }
    Ok(())
}

fn path_edges_convolution(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for (n, h) in ctx.grid() {
        c.eq_result(
            at(n, h),
            ctx.engine.path_edges(n, h),
            ctx.engine.path_edges_conv(n, h),
        );
    }
    Ok(())
}

fn cycle_edges_closed_form(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for (n, h) in ctx.grid().filter(|&(n, h)| n > h) {
        c.eq_result(
            at(n, h),
            ctx.engine.cycle_edges(n, h),
            ctx.engine.cycle_edges_closed(n, h),
        );
    }
    Ok(())
}

fn cycle_edges_convolution(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for (n, h) in ctx.grid().filter(|&(n, h)| n > h) {
        c.eq_result(
            at(n, h),
            ctx.engine.cycle_edges(n, h),
            ctx.engine.cycle_edges_conv(n, h),
        );
    }
    Ok(())
}

fn t_count_total(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    let e = ctx.engine;
    for (n, h) in ctx.grid().filter(|&(n, _)| n >= 1) {
        let mut total = Nat::zero();
        for k in 1..=max_set_size(n, h) {
            let mut per_k = Nat::zero();
            for i in 1..=n {
                per_k += e.t_count(n, h, k, i)?;
            }
            c.eq(at(n, h).k(k), e.path_count_k(n, h, k) * k, per_k.clone());
            total += per_k;
        }
        c.eq(at(n, h), e.path_edges(n, h), total);
    }
    Ok(())
}

fn t_count_vertex_sum(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    let e = ctx.engine;
    for (n, h) in ctx.grid().filter(|&(n, _)| n >= 1) {
        let (ni, hi) = (i64::from(n), i64::from(h));
        for i in 1..=n {
            let ii = i64::from(i);
            let mut sum = Nat::zero();
            for k in 1..=max_set_size(n, h) {
                sum += e.t_count(n, h, k, i)?;
            }
            let split =
                e.path_count_clamped(ii - hi - 1, h) * e.path_count_clamped(ni - hi - ii, h);
            c.eq(at(n, h).i(i), split, sum);
        }
    }
    Ok(())
}

fn t_count_oracle(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for g in ctx.oracle_graphs(GraphKind::Path).filter(|g| g.n >= 1) {
        let (n, h) = (g.n, g.h);
        let kmax = max_set_size(n, h) as usize;
        // containing[k][i - 1]
        let mut containing = vec![vec![0u64; n as usize]; kmax + 2];
        ctx.enumerator.for_each(&g, |m| {
            let k = m.size() as usize;
            for v in m.vertices() {
                containing[k][v as usize - 1] += 1;
            }
        })?;
        for k in 1..=kmax as u32 + 1 {
            for i in 1..=n {
                let seen = Nat::from(containing[k as usize][i as usize - 1]);
                c.eq_result(at(n, h).k(k).i(i), seen, ctx.engine.t_count(n, h, k, i));
            }
        }
    }
    Ok(())
}

fn classical_specializations(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    let e = ctx.engine;
    let n_max = ctx.bounds.n_max;
    let fib = classical_fibonacci(n_max as usize + 2);
    let luc = classical_lucas(n_max as usize);
    for n in 0..=n_max {
        let nu = n as usize;
        c.eq_noted(at(n, 1), fib[nu + 2].clone(), e.path_count(n, 1), || {
            "p_n = F_(n+2)".into()
        });
        if n > 1 {
            c.eq_noted(at(n, 1), luc[nu].clone(), e.cycle_count(n, 1), || {
                "c_n = L_n".into()
            });
            c.eq_noted(
                at(n, 1),
                fib[nu - 1].clone() * n,
                e.cycle_edges(n, 1),
                || "M_n = n F_(n-1)".into(),
            );
        }
        let conv: Nat = (1..=nu).map(|i| &fib[i] * &fib[nu - i + 1]).sum();
        c.eq_noted(at(n, 1), conv, e.path_edges(n, 1), || {
            "H_n = sum F_i F_(n-i+1)".into()
        });

        let cube_vertices = Nat::one() << n;
        let cube_edges = if n == 0 {
            Nat::zero()
        } else {
            (Nat::one() << (n - 1)) * n
        };
        c.eq_noted(at(n, 0), cube_vertices.clone(), e.path_count(n, 0), || {
            "p_n = 2^n".into()
        });
        c.eq_noted(at(n, 0), cube_vertices, e.cycle_count(n, 0), || {
            "c_n = 2^n".into()
        });
        c.eq_noted(at(n, 0), cube_edges.clone(), e.path_edges(n, 0), || {
            "H_n = n 2^(n-1)".into()
        });
        c.eq_noted(at(n, 0), cube_edges, e.cycle_edges(n, 0), || {
            "M_n = n 2^(n-1)".into()
        });
    }
    Ok(())
}

fn graph_structure(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for (n, h) in ctx.grid() {
        let path = GapGraph::path(n, h);
        let cycle = GapGraph::cycle(n, h);
        let path_edges = path.edges();
        let cycle_edges = cycle.edges();

        // Path: v_i has min(h, n - i) neighbours to its right.
        let expected: u32 = (1..=n).map(|i| h.min(n - i)).sum();
        c.eq_noted(at(n, h), expected as usize, path_edges.len(), || {
            "path edge count".into()
        });
        if n > 2 * h {
            c.eq_noted(
                at(n, h),
                n * h - h * (h + 1) / 2,
                path_edges.len() as u32,
                || "path edge closed form".into(),
            );
        }

        let mut circular = 0usize;
        for i in 1..=n {
            for j in 1..=n {
                let d = i.abs_diff(j);
                let near = i != j && d.min(n - d) <= h;
                if near && i < j {
                    circular += 1;
                }
                c.holds(at(n, h).i(i), cycle.is_edge(i, j)? == near, || {
                    format!("cycle adjacency ({i}, {j})")
                });
                c.holds(
                    at(n, h).i(i),
                    path.is_edge(i, j)? == path.is_edge(j, i)?,
                    || format!("path symmetry ({i}, {j})"),
                );
            }
        }
        c.eq_noted(at(n, h), circular, cycle_edges.len(), || {
            "cycle edge count".into()
        });

        let cycle_set: HashSet<(u32, u32)> = cycle_edges.pairs().iter().copied().collect();
        c.holds(
            at(n, h),
            path_edges.pairs().iter().all(|e| cycle_set.contains(e)),
            || "path edges inside cycle edges".into(),
        );
        if n <= 2 * h + 1 {
            c.eq_noted(
                at(n, h),
                (n * n.saturating_sub(1) / 2) as usize,
                cycle_edges.len(),
                || "small cycle power is complete".into(),
            );
        }
    }
    Ok(())
}

fn count_oracle(ctx: &Ctx<'_>, c: &mut Check, kind: GraphKind) -> Result<()> {
    for g in ctx.oracle_graphs(kind) {
        let (n, h) = (g.n, g.h);
        let histogram = ctx.enumerator.count_by_size(&g)?;
        for k in 0..=max_set_size(n, h) + 1 {
            let seen = histogram.get(&k).cloned().unwrap_or_default();
            c.eq(at(n, h).k(k), seen, ctx.engine.count_k(kind, n, h, k));
        }
        let total: Nat = histogram.values().sum();
        c.eq(at(n, h), total, ctx.engine.count(kind, n, h));
    }
    Ok(())
}

fn path_count_oracle(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    count_oracle(ctx, c, GraphKind::Path)
}

fn cycle_count_oracle(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    count_oracle(ctx, c, GraphKind::Cycle)
}

fn cube_structure(ctx: &Ctx<'_>, c: &mut Check, kind: GraphKind) -> Result<()> {
    let e = ctx.engine;
    for g in ctx.oracle_graphs(kind) {
        let (n, h) = (g.n, g.h);
        let cube = CubeGraph::build_with(&g, &ctx.enumerator)?;
        let vertices = Nat::from(cube.vertex_count());
        let covers = Nat::from(cube.edge_count());
        c.eq_noted(at(n, h), e.count(kind, n, h), vertices, || {
            "vertex count".into()
        });

        let weighted: Nat = cube
            .rank_profile()
            .into_iter()
            .map(|(k, count)| count * k)
            .sum();
        c.eq_noted(at(n, h), weighted, covers.clone(), || {
            "covers = sum k * rank size".into()
        });
        if kind == GraphKind::Path || n > h {
            c.eq_noted(at(n, h), e.edges(kind, n, h), covers.clone(), || {
                "cover count".into()
            });
        }
        c.eq_noted(at(n, h), covers, Nat::from(cube.hamming_pairs()), || {
            "Hamming-1 pairs".into()
        });

        let vs = cube.vertices();
        let bad_cover = cube.covers().iter().find(|&&(lo, hi)| {
            let (s, t) = (vs[lo as usize], vs[hi as usize]);
            s.bits() & !t.bits() != 0 || (s.bits() ^ t.bits()).count_ones() != 1
        });
        c.holds(at(n, h), bad_cover.is_none(), || {
            format!("cover {bad_cover:?} is not a one-element inclusion")
        });

        if kind == GraphKind::Cycle && n <= 2 * h + 1 {
            let star = cube.vertex_count() as u32 == n + 1
                && cube.edge_count() as u32 == n
                && cube.covers().iter().all(|&(lo, _)| lo == 0);
            c.holds(at(n, h), star, || "small cycle power gives a star".into());
        }
    }
    Ok(())
}

fn path_cube_structure(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    cube_structure(ctx, c, GraphKind::Path)
}

fn cycle_cube_structure(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    cube_structure(ctx, c, GraphKind::Cycle)
}

/// Calls `visit` with every strictly increasing `k`-subset of `1..=m`.
fn for_each_subset(m: u32, k: u32, visit: &mut impl FnMut(&[u32])) {
    fn go(next: u32, m: u32, k: usize, buf: &mut Vec<u32>, visit: &mut impl FnMut(&[u32])) {
        if buf.len() == k {
            visit(buf);
            return;
        }
        let need = (k - buf.len()) as u32;
        for v in next..=m + 1 - need {
            buf.push(v);
            go(v + 1, m, k, buf, visit);
            buf.pop();
        }
    }
    if k <= m {
        go(1, m, k as usize, &mut Vec::with_capacity(k as usize), visit);
    }
}

fn bijection(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for g in ctx.oracle_graphs(GraphKind::Path) {
        let (n, h) = (g.n, g.h);
        for k in 0..=max_set_size(n, h) + 1 {
            let room = i64::from(n) - i64::from(h) * i64::from(k) + i64::from(h);
            if room < 0 {
                continue;
            }
            let mut image: HashSet<VertexMask> = HashSet::new();
            let mut domain = 0u64;
            let mut broken: Option<String> = None;
            for_each_subset(room as u32, k, &mut |subset| {
                domain += 1;
                match enumeration::bijection_f(subset, n, h) {
                    Ok(m) => {
                        if broken.is_none() {
                            if !enumeration::gap_check(&m, h, false)
                                || !enumeration::is_independent(&g, &m).unwrap_or(false)
                            {
                                broken = Some(format!("{subset:?} maps to dependent set {m}"));
                            } else if enumeration::bijection_f_inv(&m, h).ok().as_deref()
                                != Some(subset)
                            {
                                broken =
                                    Some(format!("{subset:?} does not round-trip through {m}"));
                            }
                        }
                        image.insert(m);
                    }
                    Err(e) => {
                        broken.get_or_insert_with(|| format!("{subset:?}: {e}"));
                    }
                }
            });
            let case = at(n, h).k(k);
            c.holds(case, broken.is_none(), || {
                broken.clone().unwrap_or_default()
            });
            c.eq_noted(case, domain, image.len() as u64, || "injective".into());
            c.eq_noted(
                case,
                subset_count(room, i64::from(k)),
                Nat::from(image.len()),
                || "image size = binom(n-hk+h, k)".into(),
            );
        }
    }
    Ok(())
}

fn substring_characterization(ctx: &Ctx<'_>, c: &mut Check) -> Result<()> {
    for n in 0..=ctx.bounds.oracle_n_max {
        for h in 1..=ctx.bounds.h_max {
            for circular in [false, true] {
                let kind = if circular {
                    GraphKind::Cycle
                } else {
                    GraphKind::Path
                };
                let g = GapGraph::new(kind, n, h);
                let mut disagreements = 0u64;
                let mut first: Option<String> = None;
                for bits in 0..1u64 << n {
                    let m = VertexMask::new(n, bits)?;
                    let gap = enumeration::gap_check(&m, h, circular);
                    let graph = enumeration::is_independent(&g, &m)?;
                    let pattern = enumeration::avoids_substrings(&m, h, circular)?;
                    if gap != graph || gap != pattern {
                        disagreements += 1;
                        first.get_or_insert_with(|| {
                            format!("{m}: gap {gap}, graph {graph}, substrings {pattern}")
                        });
                    }
                }
                c.eq_noted(at(n, h), 0, disagreements, || {
                    format!("{kind}: {}", first.clone().unwrap_or_default())
                });
            }
        }
    }
    Ok(())
}
