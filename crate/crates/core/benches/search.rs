use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use asd_eta::eta::{TupleSpec, BASES_8};
use asd_eta::search::{enumerate, pair_scan, prepare_candidates, scan_candidates, SearchConfig};

fn config(jobs: usize) -> SearchConfig {
    SearchConfig {
        exponent_bound: 14,
        n_bound: 300,
        prime_max: 31,
        jobs,
        ..SearchConfig::default()
    }
}

fn tuples(cfg: &SearchConfig) -> Vec<TupleSpec> {
    enumerate(cfg)
        .filter(|t| asd_eta::search::admissible(t, false))
        .collect()
}

fn modes() -> Vec<(&'static str, usize)> {
    let mut m = vec![("sequential", 1)];
    if asd_eta::par::AVAILABLE {
        m.push(("parallel", 0));
    }
    m
}

fn bench_prepare(c: &mut Criterion) {
    let mut group = c.benchmark_group("prepare_candidates");
    group.sample_size(10);
    for (name, jobs) in modes() {
        let cfg = config(jobs);
        let ts = tuples(&cfg);
        group.bench_with_input(BenchmarkId::new(name, ts.len()), &ts, |b, ts| {
            b.iter(|| prepare_candidates(black_box(ts), &cfg).unwrap())
        });
    }
    group.finish();
}

fn bench_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("scan_candidates");
    group.sample_size(10);
    let (candidates, _) = prepare_candidates(&tuples(&config(0)), &config(0)).unwrap();
    for (name, jobs) in modes() {
        let cfg = config(jobs);
        group.bench_with_input(
            BenchmarkId::new(name, candidates.len()),
            &candidates,
            |b, cs| b.iter(|| scan_candidates(black_box(cs), &cfg).unwrap()),
        );
    }
    group.finish();
}

fn bench_worked_pair(c: &mut Criterion) {
    let pair = [
        TupleSpec::cube_root(BASES_8, [-8, 12, 14, 0]),
        TupleSpec::cube_root(BASES_8, [8, -12, 22, 0]),
    ];
    let cfg = SearchConfig {
        denominator_filter: false,
        jobs: 1,
        ..SearchConfig::default()
    };
    c.bench_function("pair_scan/worked_example", |b| {
        b.iter(|| pair_scan(black_box(&pair), &cfg).unwrap())
    });
}

criterion_group!(benches, bench_prepare, bench_scan, bench_worked_pair);
criterion_main!(benches);
