use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use polyzeta::kernel::gamma::ln_gamma;
use polyzeta::kernel::quad::{quad_de, QuadratureConfig};
use polyzeta::polytope::j_numeric;
use polyzeta::symbolic::i_n_reduce;
use polyzeta::zeta_numeric::{mzv_ones, zeta_int, MZVIndex};
use polyzeta::HighPrecReal as R;

fn bench_ln_gamma(c: &mut Criterion) {
    let mut group = c.benchmark_group("ln_gamma");
    for digits in [30u32, 50] {
        let x = R::from_f64(0.731, digits);
        group.bench_with_input(BenchmarkId::from_parameter(digits), &digits, |b, &d| {
            b.iter(|| ln_gamma(&x, d).unwrap())
        });
    }
    group.finish();
}

fn bench_zeta(c: &mut Criterion) {
    let mut group = c.benchmark_group("zeta_int");
    for s in [3u32, 7] {
        group.bench_with_input(BenchmarkId::new("d50", s), &s, |b, &s| {
            b.iter(|| zeta_int(s, 50).unwrap())
        });
    }
    group.finish();
}

fn bench_mzv(c: &mut Criterion) {
    let mut group = c.benchmark_group("mzv_ones");
    group.sample_size(20);
    for (m, k) in [(2u32, 1u32), (2, 4), (5, 3)] {
        let idx = MZVIndex::new(m, k).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(format!("{m}_{k}")), &idx, |b, idx| {
            b.iter(|| mzv_ones(idx, 30).unwrap())
        });
    }
    group.finish();
}

fn bench_reduction(c: &mut Criterion) {
    let mut group = c.benchmark_group("i_n_reduce");
    group.sample_size(10);
    for n in [4u32, 8, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| i_n_reduce(n).unwrap())
        });
    }
    group.finish();
}

fn bench_quadrature(c: &mut Criterion) {
    let mut group = c.benchmark_group("quadrature");
    group.sample_size(10);
    group.bench_function("dilog_integrand_d30", |b| {
        let d = 30;
        let cfg = QuadratureConfig::for_digits(d);
        b.iter(|| {
            quad_de(
                |p| {
                    let neg_ln = -(-&p.dist_a).ln_1p().unwrap();
                    &neg_ln / &p.dist_b
                },
                &R::zero(d),
                &R::one(d),
                &cfg,
                d,
            )
        })
    });
    group.bench_function("j_numeric_2_3_d30", |b| b.iter(|| j_numeric(2, 3, 30).unwrap()));
    group.finish();
}

criterion_group!(
    benches,
    bench_ln_gamma,
    bench_zeta,
    bench_mzv,
    bench_reduction,
    bench_quadrature
);
criterion_main!(benches);
