//! Batch throughput: the rayon-backed executor against the sequential
//! path. Build with `--no-default-features` to measure the pure
//! sequential fallback; with the default `parallel` feature, `jobs = 1`
//! serves as the single-worker reference point.

use criterion::{criterion_group, criterion_main, Criterion};
use pcmlab::de::{CrossoverMethod, MutationStrategy};
use pcmlab::harness::{batch, RunConfig};
use pcmlab::problems::{make_problem, Problem};
use std::hint::black_box;

fn workload() -> Vec<(RunConfig, Problem)> {
    ["f05c09", "shade", "jade", "cde"]
        .iter()
        .flat_map(|pcm| {
            ["sphere", "rastrigin-rot"].iter().map(move |pid| {
                let mut cfg = RunConfig::new(
                    pcm,
                    MutationStrategy::Rand1,
                    CrossoverMethod::Binomial,
                );
                cfg.budget_multiplier = 500;
                cfg.n_runs = 4;
                cfg.seed = 99;
                (cfg, make_problem(pid, 8, 99).unwrap())
            })
        })
        .collect()
}

fn bench_batch(c: &mut Criterion) {
    let items = workload();
    let mut group = c.benchmark_group("batch");
    group.sample_size(10);
    group.bench_function("jobs_1", |b| {
        b.iter(|| black_box(batch(black_box(&items), 1)))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("jobs_4", |b| {
        b.iter(|| black_box(batch(black_box(&items), 4)))
    });
    group.finish();
}

criterion_group!(benches, bench_batch);
criterion_main!(benches);
