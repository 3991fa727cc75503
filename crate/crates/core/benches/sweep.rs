use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use oscgk::growth::{dk_factors, product_span_rank, sweep_all};
use oscgk::{catalog, ExecMode, HwModuleSpec, RepConfig, SweepOptions};

fn specs() -> Vec<HwModuleSpec> {
    [(4, 1, 3), (4, 2, 2), (4, 1, 4)]
        .iter()
        .flat_map(|&(n, n1, n2)| catalog(&RepConfig::new(n, n1, n2).unwrap(), 1).unwrap())
        .collect()
}

fn sweeps(c: &mut Criterion) {
    let specs = specs();
    let mut group = c.benchmark_group("filtration_sweep");
    group.sample_size(10);
    for mode in [ExecMode::Sequential, ExecMode::Parallel] {
        let opts = SweepOptions {
            mode,
            ..SweepOptions::default()
        };
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{mode:?}")),
            &opts,
            |b, opts| b.iter(|| black_box(sweep_all(&specs, opts))),
        );
    }
    group.finish();
}

fn spans(c: &mut Criterion) {
    let factors = dk_factors(&RepConfig::new(5, 2, 2).unwrap());
    let mut group = c.benchmark_group("product_span_rank");
    group.sample_size(10);
    for mode in [ExecMode::Sequential, ExecMode::Parallel] {
        group.bench_function(format!("{mode:?}"), |b| {
            b.iter(|| black_box(product_span_rank(&factors, 4, 5, mode).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, sweeps, spans);
criterion_main!(benches);
