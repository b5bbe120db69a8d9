//! Acceptance gate. Runs every criterion at its stated tolerance and time
//! limit, prints one PASS/FAIL line per criterion, and exits nonzero if any
//! criterion fails.

mod common;

use std::collections::HashSet;
use std::time::{Duration, Instant};

use gapcube::counting::{self, Engine, Mutation};
use gapcube::enumeration::{self, Enumerator, VertexMask};
use gapcube::{CubeGraph, GapGraph, GraphKind, Nat};

use common::{gapcube, golden_path, published_table, GOLDEN_TABLES};

/// Mismatch log for one criterion; keeps the first few messages.
#[derive(Default)]
struct Log {
    checked: u64,
    failures: Vec<String>,
    failure_count: u64,
}

impl Log {
    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < 5 {
                self.failures.push(msg());
            }
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(
        &mut self,
        what: impl FnOnce() -> String,
        expected: T,
        actual: T,
    ) {
        let ok = expected == actual;
        self.check(ok, || {
            format!("{}: expected {expected:?}, got {actual:?}", what())
        });
    }
}

fn nat(v: u128) -> Nat {
    Nat::from(v)
}

/// Classical binomial in u128 for small arguments.
fn small_binom(m: u32, k: u32) -> u128 {
    if k > m {
        return 0;
    }
    (0..k).fold(1u128, |acc, j| acc * u128::from(m - j) / u128::from(j + 1))
}

/// `a(n) = a(n-1) + a(n-h-1)` seeded with `base` for `n = 1..=h+1`.
fn h_recurrence(h: usize, n_max: usize, base: impl Fn(usize) -> u128) -> Vec<u128> {
    let mut a = vec![0u128; n_max + 1];
    for n in 1..=n_max {
        a[n] = if n <= h + 1 {
            base(n)
        } else {
            a[n - 1] + a[n - h - 1]
        };
    }
    a
}

fn classical_fibonacci(n_max: usize) -> Vec<u128> {
    let mut f = vec![0u128, 1];
    while f.len() <= n_max {
        let next = f[f.len() - 1] + f[f.len() - 2];
        f.push(next);
    }
    f
}

fn classical_lucas(n_max: usize) -> Vec<u128> {
    let mut l = vec![2u128, 1];
    while l.len() <= n_max {
        let next = l[l.len() - 1] + l[l.len() - 2];
        l.push(next);
    }
    l
}

/// Independence by shifting: no two ones at linear distance `1..=h`.
fn brute_independent(bits: u64, n: u32, h: u32) -> bool {
    (1..=h.min(63)).all(|d| bits & (bits >> d) == 0) || n == 0
}

fn criterion_1(log: &mut Log) {
    for (file, args) in GOLDEN_TABLES {
        let expected = std::fs::read(golden_path(file)).expect("golden file");
        let out = published_table(args);
        log.check(out.status.success(), || {
            format!("{file}: exit {:?}", out.status.code())
        });
        log.check(out.stdout == expected, || {
            format!("{file}: output differs from golden")
        });
    }
}

fn criterion_2(e: &Engine, log: &mut Log) {
    for n in 0..=40 {
        for h in 0..=10 {
            log.eq(
                || format!("n={n} h={h}"),
                Ok(e.path_edges(n, h)),
                e.path_edges_conv(n, h).map_err(|x| x.to_string()),
            );
        }
    }
}

fn criterion_3(e: &Engine, log: &mut Log) {
    for h in 0..=10 {
        for n in h + 1..=40 {
            let sum = e.cycle_edges(n, h);
            log.eq(
                || format!("closed n={n} h={h}"),
                Ok(sum.clone()),
                e.cycle_edges_closed(n, h).map_err(|x| x.to_string()),
            );
            log.eq(
                || format!("conv n={n} h={h}"),
                Ok(sum),
                e.cycle_edges_conv(n, h).map_err(|x| x.to_string()),
            );
        }
    }
}

fn criterion_4(e: &Engine, log: &mut Log) {
    let en = Enumerator::default();
    for kind in [GraphKind::Path, GraphKind::Cycle] {
        for h in 0..=6 {
            for n in 0..=20 {
                let g = GapGraph::new(kind, n, h);
                let hist = en.count_by_size(&g).expect("within cap");
                if n <= 16 {
                    for k in 0..=n + 1 {
                        let seen = hist.get(&k).cloned().unwrap_or_default();
                        log.eq(
                            || format!("{kind} k n={n} h={h} k={k}"),
                            seen,
                            e.count_k(kind, n, h, k),
                        );
                    }
                }
                let total: Nat = hist.values().sum();
                log.eq(
                    || format!("{kind} total n={n} h={h}"),
                    total,
                    e.count(kind, n, h),
                );

                let cube = CubeGraph::build(&g).expect("within cap");
                log.eq(
                    || format!("{kind} cube vertices n={n} h={h}"),
                    nat(cube.vertex_count() as u128),
                    e.count(kind, n, h),
                );
                if kind == GraphKind::Path || n > h {
                    log.eq(
                        || format!("{kind} cube edges n={n} h={h}"),
                        nat(cube.edge_count() as u128),
                        e.edges(kind, n, h),
                    );
                }
            }
        }
    }
}

fn criterion_5(e: &Engine, log: &mut Log) {
    for h in 0..=4u32 {
        for n in 0..=14u32 {
            for k in 0..=n {
                let room = i64::from(n) - i64::from(h) * i64::from(k) + i64::from(h);
                if room < 0 {
                    continue;
                }
                let room = room as u32;
                let mut images = HashSet::new();
                let mut produced = 0u128;
                for sub in 0u64..1 << room {
                    if sub.count_ones() != k {
                        continue;
                    }
                    let subset: Vec<u32> = (0..room)
                        .filter(|b| sub >> b & 1 == 1)
                        .map(|b| b + 1)
                        .collect();
                    let image = match enumeration::bijection_f(&subset, n, h) {
                        Ok(m) => m,
                        Err(err) => {
                            log.check(false, || format!("f({subset:?}) n={n} h={h}: {err}"));
                            continue;
                        }
                    };
                    produced += 1;
                    log.check(enumeration::gap_check(&image, h, false), || {
                        format!("f({subset:?}) = {image} fails gap check")
                    });
                    log.eq(
                        || format!("inverse of {image}"),
                        Ok(subset.clone()),
                        enumeration::bijection_f_inv(&image, h).map_err(|x| x.to_string()),
                    );
                    images.insert(image.bits());
                }
                log.eq(
                    || format!("injective n={n} h={h} k={k}"),
                    produced,
                    images.len() as u128,
                );
                log.eq(
                    || format!("image size n={n} h={h} k={k}"),
                    small_binom(room, k),
                    images.len() as u128,
                );
                log.eq(
                    || format!("image size vs p_nk n={n} h={h} k={k}"),
                    nat(images.len() as u128),
                    e.path_count_k(n, h, k),
                );
            }
        }
    }
}

fn criterion_6(e: &Engine, log: &mut Log) {
    for h in 0..=4u32 {
        for n in 0..=16u32 {
            // containing[k][i - 1]
            let mut containing = vec![vec![0u128; n as usize]; n as usize + 2];
            for bits in 0u64..1 << n {
                if brute_independent(bits, n, h) {
                    for i in 0..n {
                        if bits >> i & 1 == 1 {
                            containing[bits.count_ones() as usize][i as usize] += 1;
                        }
                    }
                }
            }
            let mut total = Nat::default();
            for k in 1..=n + 1 {
                for i in 1..=n {
                    let t = e.t_count(n, h, k, i).expect("valid t_count arguments");
                    log.eq(
                        || format!("T n={n} h={h} k={k} i={i}"),
                        nat(containing[k as usize][i as usize - 1]),
                        t.clone(),
                    );
                    total += t;
                }
            }
            log.eq(|| format!("sum T n={n} h={h}"), e.path_edges(n, h), total);
        }
    }
}

fn criterion_7(log: &mut Log) {
    for n in 0..=14u32 {
        for h in 1..=5u32 {
            for circular in [false, true] {
                for bits in 0u64..1 << n {
                    let s = VertexMask::new(n, bits).expect("fits");
                    let gap = enumeration::gap_check(&s, h, circular);
                    let avoid =
                        enumeration::avoids_substrings(&s, h, circular).map_err(|x| x.to_string());
                    log.eq(|| format!("{s} h={h} circular={circular}"), Ok(gap), avoid);
                }
            }
        }
    }
}

fn criterion_8(e: &Engine, log: &mut Log) {
    for h in 0..=10u32 {
        let hu = h as usize;
        let fib = h_recurrence(hu, 41, |_| 1);
        let luc = h_recurrence(hu, 41, |n| if n == 1 { hu as u128 + 1 } else { 1 });
        for n in 1..=40i64 {
            let nu = n as usize;
            let f = e.h_fibonacci(h, n).expect("index in range");
            let l = e.h_lucas(h, n).expect("index in range");
            log.eq(|| format!("F oracle n={n} h={h}"), nat(fib[nu]), f.clone());
            log.eq(|| format!("L oracle n={n} h={h}"), nat(luc[nu]), l.clone());
            log.eq(
                || format!("F = pbar n={n} h={h}"),
                e.path_count_clamped(n - i64::from(h) - 1, h),
                f.clone(),
            );
            if n > i64::from(h) + 1 {
                log.eq(
                    || format!("L = c n={n} h={h}"),
                    e.cycle_count(n as u32 - 1, h),
                    l.clone(),
                );
            }
            if n > i64::from(h) {
                let rhs = f.clone() + e.h_fibonacci(h, n - i64::from(h)).unwrap() * (h + 1);
                log.eq(
                    || format!("L(n+1) n={n} h={h}"),
                    e.h_lucas(h, n + 1).unwrap(),
                    rhs,
                );
            }
            if h >= 2 {
                log.eq(
                    || format!("Fbar n={n} h={h}"),
                    Ok(f),
                    e.extended_fib(h, n).map_err(|x| x.to_string()),
                );
                log.eq(
                    || format!("Lbar n={n} h={h}"),
                    Ok(num_bigint::BigInt::from(l)),
                    e.extended_lucas(h, n).map_err(|x| x.to_string()),
                );
            }
        }
    }
}

fn criterion_9(e: &Engine, log: &mut Log) {
    let f = classical_fibonacci(42);
    let l = classical_lucas(40);
    for n in 0..=40u32 {
        let nu = n as usize;
        log.eq(|| format!("p n={n}"), nat(f[nu + 2]), e.path_count(n, 1));
        if n > 1 {
            log.eq(|| format!("c n={n}"), nat(l[nu]), e.cycle_count(n, 1));
            log.eq(
                || format!("M n={n}"),
                nat(n as u128 * f[nu - 1]),
                e.cycle_edges(n, 1),
            );
        }
        let conv: u128 = (1..=nu).map(|i| f[i] * f[nu - i + 1]).sum();
        log.eq(|| format!("H n={n}"), nat(conv), e.path_edges(n, 1));
        let cube_edges = if n == 0 { 0 } else { u128::from(n) << (n - 1) };
        log.eq(
            || format!("2^n path n={n}"),
            nat(1u128 << n),
            e.path_count(n, 0),
        );
        log.eq(
            || format!("2^n cycle n={n}"),
            nat(1u128 << n),
            e.cycle_count(n, 0),
        );
        log.eq(
            || format!("n 2^(n-1) path n={n}"),
            nat(cube_edges),
            e.path_edges(n, 0),
        );
        log.eq(
            || format!("n 2^(n-1) cycle n={n}"),
            nat(cube_edges),
            e.cycle_edges(n, 0),
        );
    }
}

fn criterion_10(log: &mut Log) {
    let clean = gapcube(&["verify"]);
    log.eq(
        || "unmutated verify exit".into(),
        Some(0),
        clean.status.code(),
    );
    for m in Mutation::ALL {
        let out = gapcube(&["verify", "--mutate", m.name()]);
        log.eq(
            || format!("verify --mutate {} exit", m.name()),
            Some(1),
            out.status.code(),
        );
    }
}

type Criterion<'a> = (&'static str, Duration, Box<dyn Fn(&mut Log) + 'a>);

fn main() {
    let e = counting::standard();
    let criteria: [Criterion; 10] = [
        (
            "table reproduction",
            Duration::from_secs(5),
            Box::new(criterion_1),
        ),
        (
            "path edges by convolution",
            Duration::from_secs(1),
            Box::new(|l| criterion_2(e, l)),
        ),
        (
            "cycle edges three ways",
            Duration::from_secs(1),
            Box::new(|l| criterion_3(e, l)),
        ),
        (
            "oracle equivalence",
            Duration::from_secs(60),
            Box::new(|l| criterion_4(e, l)),
        ),
        (
            "bijection",
            Duration::from_secs(30),
            Box::new(|l| criterion_5(e, l)),
        ),
        (
            "vertex-filtered counts",
            Duration::from_secs(30),
            Box::new(|l| criterion_6(e, l)),
        ),
        (
            "substring characterization",
            Duration::from_secs(30),
            Box::new(criterion_7),
        ),
        (
            "sequence bridges",
            Duration::from_secs(1),
            Box::new(|l| criterion_8(e, l)),
        ),
        (
            "classical specializations",
            Duration::from_secs(1),
            Box::new(|l| criterion_9(e, l)),
        ),
        (
            "mutation sensitivity",
            Duration::from_secs(120),
            Box::new(criterion_10),
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let mut log = Log::default();
        let start = Instant::now();
        run(&mut log);
        let elapsed = start.elapsed();
        let in_time = elapsed <= *limit;
        let pass = log.failure_count == 0 && log.checked > 0 && in_time;
        println!(
            "criterion {:>2} {:<28} {} checked={} failures={} time={:.3}s limit={}s",
            i + 1,
            name,
            if pass { "PASS" } else { "FAIL" },
            log.checked,
            log.failure_count,
            elapsed.as_secs_f64(),
            limit.as_secs(),
        );
        for msg in &log.failures {
            println!("    {msg}");
        }
        if !in_time {
            println!("    exceeded time limit");
        }
        if !pass {
            failed += 1;
        }
    }
    println!(
        "{}/{} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
