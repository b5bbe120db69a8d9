//! Exact counting: independent `k`-subsets of path and cycle powers, Hasse
//! diagram edge counts, the `h`-Fibonacci and `h`-Lucas families, and the
//! convolution identities that tie them together.
//!
//! Everything is computed in arbitrary precision. Most callers use the free
//! functions, which go through a shared [`Engine`]; build a separate engine
//! when you need a private cache or an injected [`Mutation`].

mod binomial;
mod sequence;

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graphs::GraphKind;

pub use binomial::binom;
pub use sequence::{convolve, HSequence, SeqKind};

/// Arbitrary-precision nonnegative integer used for every count.
pub type Nat = BigUint;

/// Deliberate convention bugs, used to show that the identity suite notices
/// when a base case is wrong.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mutation {
    /// The `h`-Fibonacci run of leading ones starts with 2.
    FibonacciBase,
    /// The first `h`-Lucas term is `h` instead of `h + 1`.
    LucasBase,
    /// Binomials with a negative top return `|C(m, k)|` instead of 0.
    BinomialNegativeTop,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [
        Mutation::FibonacciBase,
        Mutation::LucasBase,
        Mutation::BinomialNegativeTop,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::FibonacciBase => "fibonacci-base",
            Mutation::LucasBase => "lucas-base",
            Mutation::BinomialNegativeTop => "binomial-negative-top",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|m| m.name() == name)
    }
}

/// `ceil(n / (h + 1))`, the largest possible independent set size.
pub fn max_set_size(n: u32, h: u32) -> u32 {
    n.div_ceil(h + 1)
}

/// Counting context: the binomial convention in force plus memo tables.
#[derive(Debug, Default)]
pub struct Engine {
    mutation: Option<Mutation>,
    sequences: RwLock<HashMap<(SeqKind, u32), Arc<HSequence>>>,
    path_memo: RwLock<HashMap<u32, Vec<Nat>>>,
    cycle_memo: RwLock<HashMap<u32, Vec<Nat>>>,
}

/// The process-wide engine with the correct conventions.
pub fn standard() -> &'static Engine {
    static ENGINE: OnceLock<Engine> = OnceLock::new();
    ENGINE.get_or_init(Engine::new)
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_mutation(mutation: Mutation) -> Self {
        Self {
            mutation: Some(mutation),
            ..Self::default()
        }
    }

    pub fn mutation(&self) -> Option<Mutation> {
        self.mutation
    }

    pub fn binom(&self, m: i64, k: i64) -> Nat {
        if self.mutation == Some(Mutation::BinomialNegativeTop) {
            binomial::binom_unsigned_extension(m, k)
        } else {
            binom(m, k)
        }
    }

    /// Shared, memoized instance of a sequence family.
    pub fn sequence(&self, kind: SeqKind, h: u32) -> Result<Arc<HSequence>> {
        if let Some(s) = self
            .sequences
            .read()
            .unwrap_or_else(|e| e.into_inner())
            .get(&(kind, h))
        {
            return Ok(s.clone());
        }
        let fresh = Arc::new(HSequence::with_mutation(kind, h, self.mutation)?);
        let mut map = self.sequences.write().unwrap_or_else(|e| e.into_inner());
        Ok(map.entry((kind, h)).or_insert(fresh).clone())
    }

    // Sum of `weight(k) * term(k)` for k in 0..=ceil(n/(h+1)). Terms past the
    // bound must vanish; a nonzero one means the binomial convention is broken.
    fn bounded_sum(&self, n: u32, h: u32, weighted: bool, term: impl Fn(u32) -> Nat) -> Nat {
        let bound = max_set_size(n, h);
        let mut total = Nat::zero();
        for k in 0..=bound {
            let t = term(k);
            total += if weighted { t * k } else { t };
        }
        let tail = term(bound + 1);
        assert!(
            tail.is_zero(),
            "term k = {} past the bound is {tail} (n = {n}, h = {h})",
            bound + 1
        );
        total
    }

    /// Independent `k`-subsets of the `h`-th power of the path on `n` vertices.
    pub fn path_count_k(&self, n: u32, h: u32, k: u32) -> Nat {
        self.path_count_k_signed(i64::from(n), h, k)
    }

    fn path_count_k_signed(&self, n: i64, h: u32, k: u32) -> Nat {
        let (h, k) = (i64::from(h), i64::from(k));
        self.binom(n - h * k + h, k)
    }

    /// `p_{m,k}` with negative `m` clamped to the empty path.
    pub fn path_count_k_clamped(&self, m: i64, h: u32, k: u32) -> Nat {
        self.path_count_k_signed(m.max(0), h, k)
    }

    pub fn path_count(&self, n: u32, h: u32) -> Nat {
        self.bounded_sum(n, h, false, |k| self.path_count_k(n, h, k))
    }

    /// Total path count with negative `m` clamped to the empty path.
    pub fn path_count_clamped(&self, m: i64, h: u32) -> Nat {
        self.path_count(m.max(0) as u32, h)
    }

    /// Total count through `p_n = p_{n-1} + p_{n-h-1}` with `p_n = n + 1`
    /// for `n <= h + 1`.
    pub fn path_count_rec(&self, n: u32, h: u32) -> Nat {
        let lag = h as usize + 1;
        memoized(&self.path_memo, h, n as usize, |prefix, m| {
            if m <= lag {
                Nat::from(m + 1)
            } else {
                &prefix[m - 1] + &prefix[m - lag]
            }
        })
    }

    /// Independent `k`-subsets of the `h`-th power of the cycle on `n` vertices.
    pub fn cycle_count_k(&self, n: u32, h: u32, k: u32) -> Nat {
        match k {
            0 => Nat::one(),
            1 => Nat::from(n),
            _ => {
                let (ni, hi, ki) = (i64::from(n), i64::from(h), i64::from(k));
                let through_one_vertex = self.binom(ni - hi * ki - 1, ki - 1);
                let (q, r) = (through_one_vertex * n).div_rem(&Nat::from(k));
                assert!(
                    r.is_zero(),
                    "inexact division in c(n = {n}, k = {k}) with h = {h}"
                );
                q
            }
        }
    }

    pub fn cycle_count(&self, n: u32, h: u32) -> Nat {
        self.bounded_sum(n, h, false, |k| self.cycle_count_k(n, h, k))
    }

    /// Total count through `c_n = c_{n-1} + c_{n-h-1}` with `c_n = n + 1`
    /// for `n <= 2h + 1`.
    pub fn cycle_count_rec(&self, n: u32, h: u32) -> Nat {
        let lag = h as usize + 1;
        memoized(&self.cycle_memo, h, n as usize, |prefix, m| {
            if m < 2 * lag {
                Nat::from(m + 1)
            } else {
                &prefix[m - 1] + &prefix[m - lag]
            }
        })
    }

    pub fn count(&self, kind: GraphKind, n: u32, h: u32) -> Nat {
        match kind {
            GraphKind::Path => self.path_count(n, h),
            GraphKind::Cycle => self.cycle_count(n, h),
        }
    }

    pub fn count_k(&self, kind: GraphKind, n: u32, h: u32, k: u32) -> Nat {
        match kind {
            GraphKind::Path => self.path_count_k(n, h, k),
            GraphKind::Cycle => self.cycle_count_k(n, h, k),
        }
    }

    pub fn h_fibonacci(&self, h: u32, n: i64) -> Result<Nat> {
        self.sequence(SeqKind::Fibonacci, h)?.nat(n)
    }

    pub fn h_lucas(&self, h: u32, n: i64) -> Result<Nat> {
        self.sequence(SeqKind::Lucas, h)?.nat(n)
    }

    pub fn extended_fib(&self, h: u32, n: i64) -> Result<Nat> {
        self.sequence(SeqKind::ExtendedFibonacci, h)?.nat(n)
    }

    /// Signed: the value at index `-h + 1` is `-h`.
    pub fn extended_lucas(&self, h: u32, n: i64) -> Result<BigInt> {
        self.sequence(SeqKind::ExtendedLucas, h)?.term(n)
    }

    /// Edges of the Hasse diagram of path independent sets: every `k`-set
    /// covers exactly `k` sets one size down.
    pub fn path_edges(&self, n: u32, h: u32) -> Nat {
        self.bounded_sum(n, h, true, |k| self.path_count_k(n, h, k))
    }

    /// Path edge count as the self-convolution of the `h`-Fibonacci sequence.
    pub fn path_edges_conv(&self, n: u32, h: u32) -> Result<Nat> {
        if n == 0 {
            return Ok(Nat::zero());
        }
        let f = self.sequence(SeqKind::Fibonacci, h)?;
        convolve(&f, &f, i64::from(n))
    }

    /// Edges of the Hasse diagram of cycle independent sets, by direct sum.
    /// Defined for every `n`, including `n <= h` where the diagram is a star.
    pub fn cycle_edges(&self, n: u32, h: u32) -> Nat {
        self.bounded_sum(n, h, true, |k| self.cycle_count_k(n, h, k))
    }

    /// `n * F_{n-h}`; requires `n > h`.
    pub fn cycle_edges_closed(&self, n: u32, h: u32) -> Result<Nat> {
        require_n_above_h(n, h)?;
        Ok(self.h_fibonacci(h, i64::from(n - h))? * n)
    }

    /// `(F * L)(n - h)`; requires `n > h`.
    pub fn cycle_edges_conv(&self, n: u32, h: u32) -> Result<Nat> {
        require_n_above_h(n, h)?;
        let f = self.sequence(SeqKind::Fibonacci, h)?;
        let l = self.sequence(SeqKind::Lucas, h)?;
        convolve(&f, &l, i64::from(n - h))
    }

    pub fn edges(&self, kind: GraphKind, n: u32, h: u32) -> Nat {
        match kind {
            GraphKind::Path => self.path_edges(n, h),
            GraphKind::Cycle => self.cycle_edges(n, h),
        }
    }

    /// Independent `k`-subsets of the path power containing vertex `v_i`.
    pub fn t_count(&self, n: u32, h: u32, k: u32, i: u32) -> Result<Nat> {
        if i < 1 || i > n {
            return Err(Error::IndexOutOfRange {
                what: "vertex",
                index: i64::from(i),
                min: 1,
                max: i64::from(n),
            });
        }
        if k < 1 {
            return Err(Error::InvalidArgument("t_count needs k >= 1".into()));
        }
        let (n, h, i) = (i64::from(n), i64::from(h), i64::from(i));
        let left = i - h - 1;
        let right = n - i - h;
        let hu = h as u32;
        Ok((0..k)
            .map(|r| {
                self.path_count_k_clamped(left, hu, r)
                    * self.path_count_k_clamped(right, hu, k - 1 - r)
            })
            .sum())
    }
}

fn require_n_above_h(n: u32, h: u32) -> Result<()> {
    if n <= h {
        Err(Error::InvalidArgument(format!(
            "closed forms for cycle edges need n > h (n = {n}, h = {h})"
        )))
    } else {
        Ok(())
    }
}

// Append-only memo keyed by h; `step(prefix, m)` computes entry m from 0..m.
fn memoized(
    memo: &RwLock<HashMap<u32, Vec<Nat>>>,
    h: u32,
    n: usize,
    step: impl Fn(&[Nat], usize) -> Nat,
) -> Nat {
    if let Some(v) = memo
        .read()
        .unwrap_or_else(|e| e.into_inner())
        .get(&h)
        .and_then(|row| row.get(n))
    {
        return v.clone();
    }
    let mut memo = memo.write().unwrap_or_else(|e| e.into_inner());
    let row = memo.entry(h).or_default();
    while row.len() <= n {
        let next = step(row, row.len());
        row.push(next);
    }
    row[n].clone()
}

pub fn path_count_k(n: u32, h: u32, k: u32) -> Nat {
    standard().path_count_k(n, h, k)
}

pub fn path_count(n: u32, h: u32) -> Nat {
    standard().path_count(n, h)
}

pub fn path_count_rec(n: u32, h: u32) -> Nat {
    standard().path_count_rec(n, h)
}

pub fn cycle_count_k(n: u32, h: u32, k: u32) -> Nat {
    standard().cycle_count_k(n, h, k)
}

pub fn cycle_count(n: u32, h: u32) -> Nat {
    standard().cycle_count(n, h)
}

pub fn cycle_count_rec(n: u32, h: u32) -> Nat {
    standard().cycle_count_rec(n, h)
}

pub fn h_fibonacci(h: u32, n: i64) -> Result<Nat> {
    standard().h_fibonacci(h, n)
}

pub fn h_lucas(h: u32, n: i64) -> Result<Nat> {
    standard().h_lucas(h, n)
}

pub fn extended_fib(h: u32, n: i64) -> Result<Nat> {
    standard().extended_fib(h, n)
}

pub fn extended_lucas(h: u32, n: i64) -> Result<BigInt> {
    standard().extended_lucas(h, n)
}

pub fn path_edges(n: u32, h: u32) -> Nat {
    standard().path_edges(n, h)
}

pub fn path_edges_conv(n: u32, h: u32) -> Result<Nat> {
    standard().path_edges_conv(n, h)
}

pub fn cycle_edges(n: u32, h: u32) -> Nat {
    standard().cycle_edges(n, h)
}

pub fn cycle_edges_closed(n: u32, h: u32) -> Result<Nat> {
    standard().cycle_edges_closed(n, h)
}

pub fn cycle_edges_conv(n: u32, h: u32) -> Result<Nat> {
    standard().cycle_edges_conv(n, h)
}

pub fn t_count(n: u32, h: u32, k: u32, i: u32) -> Result<Nat> {
    standard().t_count(n, h, k, i)
}

/// `p_{n,k}` or `c_{n,k}` for a fixed `h`, laid out as rows `n = 0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub kind: GraphKind,
    pub h: u32,
    entries: Vec<Vec<Nat>>,
}

impl CountTable {
    pub fn build(kind: GraphKind, h: u32, n_max: u32) -> Self {
        Self::build_with(standard(), kind, h, n_max)
    }

    pub fn build_with(engine: &Engine, kind: GraphKind, h: u32, n_max: u32) -> Self {
        let entries = (0..=n_max)
            .map(|n| {
                (0..=max_set_size(n, h))
                    .map(|k| engine.count_k(kind, n, h, k))
                    .collect()
            })
            .collect();
        Self { kind, h, entries }
    }

    pub fn n_max(&self) -> u32 {
        self.entries.len() as u32 - 1
    }

    /// Entry `(n, k)`; zero past the largest possible set size.
    pub fn get(&self, n: u32, k: u32) -> Nat {
        self.entries
            .get(n as usize)
            .and_then(|row| row.get(k as usize))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self, n: u32) -> &[Nat] {
        &self.entries[n as usize]
    }

    pub fn row_sum(&self, n: u32) -> Nat {
        self.row(n).iter().sum()
    }
}
