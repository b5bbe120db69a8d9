use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gapcube::enumeration::count_by_size;
use gapcube::{build_cube, GapGraph};

fn enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_by_size");
    for h in [0u32, 1, 3] {
        let g = GapGraph::cycle(18, h);
        group.bench_with_input(BenchmarkId::new("cycle18", h), &g, |b, g| {
            b.iter(|| count_by_size(black_box(g)).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("build_cube");
    group.sample_size(20);
    for h in [1u32, 2] {
        let g = GapGraph::path(20, h);
        group.bench_with_input(BenchmarkId::new("path20", h), &g, |b, g| {
            b.iter(|| build_cube(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, enumerate);
criterion_main!(benches);
