use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use extremal_core::arith::radius_bits;
use extremal_core::extremal::{fibonacci_seed, xi_extending, ExtremalSequence};
use extremal_core::minimal::{minimal_points, minimal_polys, ScanConfig};
use extremal_core::relation::null_space;
use extremal_core::relation::MultiDegree;
use extremal_core::Execution;

fn scans(c: &mut Criterion) {
    let mut s = ExtremalSequence::new(fibonacci_seed(1, 2).unwrap());
    let xi = xi_extending(&mut s, &radius_bits(600), 60).unwrap();
    let mut g = c.benchmark_group("scans");
    g.sample_size(10);
    for exec in [Execution::Sequential, Execution::Parallel] {
        let cfg = ScanConfig::with_exec(exec);
        g.bench_with_input(BenchmarkId::new("minimal_points_1e5", format!("{exec:?}")), &cfg, |b, cfg| {
            b.iter(|| minimal_points(&xi, 100_000, cfg).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("minimal_polys_500", format!("{exec:?}")), &cfg, |b, cfg| {
            b.iter(|| minimal_polys(&xi, 500, cfg).unwrap())
        });
        let md = MultiDegree::new(vec![1, 1, 0, 2, 1], 5).unwrap();
        g.bench_with_input(BenchmarkId::new("relation_kernel", format!("{exec:?}")), &exec, |b, &exec| {
            b.iter(|| null_space(&md, exec))
        });
    }
    g.finish();
}

criterion_group!(benches, scans);
criterion_main!(benches);
