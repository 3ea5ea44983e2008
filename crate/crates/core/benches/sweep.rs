use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use onecross::characterize::crossing_number_le_1_with;
use onecross::corpus::{connected_graphs, sweep_graphs, SweepOptions};
use onecross::generators::{complete, moebius_ladder};
use onecross::parallel::Parallelism;

const MODES: [(&str, Parallelism); 2] = [("sequential", Parallelism::Sequential), ("rayon", Parallelism::Rayon)];

fn corpus_sweep(c: &mut Criterion) {
    let graphs = connected_graphs(6);
    let mut group = c.benchmark_group("corpus_sweep_n6");
    group.sample_size(10);
    for (name, mode) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| sweep_graphs(&graphs, SweepOptions { parallelism: mode, ..Default::default() }))
        });
    }
    group.finish();
}

fn pair_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("decide");
    for (label, g) in [("k6", complete(6)), ("v8", moebius_ladder(4))] {
        for (name, mode) in MODES {
            group.bench_with_input(BenchmarkId::new(label, name), &mode, |b, &mode| {
                b.iter(|| crossing_number_le_1_with(&g, mode, u64::MAX))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, corpus_sweep, pair_sweep);
criterion_main!(benches);
