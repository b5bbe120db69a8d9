use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gapcube::counting::Engine;

fn counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("path_count");
    for n in [40u32, 200, 1000] {
        group.bench_with_input(BenchmarkId::new("sum", n), &n, |b, &n| {
            b.iter(|| Engine::new().path_count(black_box(n), 3))
        });
        group.bench_with_input(BenchmarkId::new("recurrence", n), &n, |b, &n| {
            b.iter(|| Engine::new().path_count_rec(black_box(n), 3))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("cycle_edges");
    for n in [40u32, 200] {
        group.bench_with_input(BenchmarkId::new("sum", n), &n, |b, &n| {
            b.iter(|| Engine::new().cycle_edges(black_box(n), 2))
        });
        group.bench_with_input(BenchmarkId::new("conv", n), &n, |b, &n| {
            b.iter(|| Engine::new().cycle_edges_conv(black_box(n), 2).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, counts);
criterion_main!(benches);
