use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hstar_core::frames::{fd_curvature_oracle, Model, DEFAULT_FD_STEP};
use hstar_core::hyperbolic::cross_ratio_triple;
use hstar_core::parallel::map_indexed_seq;
use hstar_core::sampling::{chart_points, quadruples};

fn invariant_sweep(c: &mut Criterion) {
    let qs = quadruples(0, 1000);
    let mut group = c.benchmark_group("cross_ratios_1000");
    group.bench_function("sequential", |b| {
        b.iter(|| map_indexed_seq(qs.len(), |i| cross_ratio_triple(black_box(&qs[i])).unwrap()))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| hstar_core::parallel::map_indexed_par(qs.len(), |i| cross_ratio_triple(black_box(&qs[i])).unwrap()))
    });
    group.finish();
}

fn oracle_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("fd_oracle_100");
    group.sample_size(10);
    for model in [Model::HStar, Model::Cone] {
        let points = chart_points(model, 0, 100);
        group.bench_with_input(BenchmarkId::new("sequential", model.name()), &points, |b, pts| {
            b.iter(|| map_indexed_seq(pts.len(), |i| fd_curvature_oracle(model, &pts[i], DEFAULT_FD_STEP).unwrap()))
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", model.name()), &points, |b, pts| {
            b.iter(|| {
                hstar_core::parallel::map_indexed_par(pts.len(), |i| {
                    fd_curvature_oracle(model, &pts[i], DEFAULT_FD_STEP).unwrap()
                })
            })
        });
    }
    group.finish();
}

criterion_group!(benches, invariant_sweep, oracle_sweep);
criterion_main!(benches);
