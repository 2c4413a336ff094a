use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use pentagrow_core::exact::interiors_overlap;
use pentagrow_core::graph::{analyze, build_subdivision};
use pentagrow_core::growth::grow;
use pentagrow_core::{CycPoint, Orientation};

fn bench_grow(c: &mut Criterion) {
    let mut g = c.benchmark_group("grow");
    g.sample_size(10);
    for n in [1_000usize, 10_000, 100_000] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| grow(black_box(n), 7).unwrap())
        });
    }
    g.finish();
}

fn bench_graph(c: &mut Criterion) {
    let mut g = c.benchmark_group("graph");
    g.sample_size(10);
    for n in [1_000usize, 10_000] {
        let s = grow(n, 7).unwrap().into_structure();
        g.bench_with_input(BenchmarkId::new("subdivision", n), &s, |b, s| {
            b.iter(|| build_subdivision(black_box(s)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("faces", n), &s, |b, s| {
            b.iter(|| analyze(black_box(s)).unwrap())
        });
    }
    g.finish();
}

fn bench_overlap(c: &mut Criterion) {
    let pairs: Vec<(CycPoint, Orientation)> = (0..5)
        .flat_map(|k| {
            [
                (CycPoint::gluing_vector(k), Orientation::Down),
                (CycPoint::zeta_pow(k), Orientation::Up),
            ]
        })
        .collect();
    c.bench_function("interiors_overlap", |b| {
        b.iter(|| {
            pairs
                .iter()
                .filter(|(p, o)| {
                    interiors_overlap(&CycPoint::ZERO, Orientation::Up, black_box(p), *o)
                })
                .count()
        })
    });
}

criterion_group!(benches, bench_grow, bench_graph, bench_overlap);
criterion_main!(benches);
