use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_complex::Complex64;
use std::hint::black_box;

use thetalift::arith::{incomplete_gamma, polylog};
use thetalift::hyperbolic::{cycle_integral, PointH};
use thetalift::lattice::orbit_reps;
use thetalift::lifts::{phi, shimura_coeff, LiftConfig};
use thetalift::quad::QuadParams;
use thetalift::theta::{theta_kernel, ThetaTrunc};
use thetalift::weilrep::shadow_coeffs;
use thetalift::{DiscriminantPair, LatticeVector};
use thetalift_bench::{delta_form, example_input, sample_points};

fn special_functions(c: &mut Criterion) {
    let s = Complex64::from_polar(0.8, 1.1);
    c.bench_function("polylog k=3 |s|=0.8", |b| b.iter(|| polylog(3, black_box(s))));
    c.bench_function("incomplete gamma s=2.5 x=3", |b| b.iter(|| incomplete_gamma(black_box(2.5), black_box(3.0))));
}

fn lift(c: &mut Criterion) {
    let f = example_input();
    let cfg = LiftConfig::for_input(&f).unwrap();
    let pts: Vec<PointH> = sample_points(32).into_iter().map(|z| PointH::from_c(z).unwrap()).collect();
    c.bench_function("phi 32 points", |b| {
        b.iter(|| pts.iter().map(|&z| phi(z, &f, &cfg).unwrap().value).sum::<Complex64>())
    });
    let a = shadow_coeffs(&f);
    c.bench_function("shimura m=1..50", |b| {
        b.iter(|| (1..=50).map(|m| shimura_coeff(&a, m, &cfg).unwrap()).sum::<Complex64>())
    });
}

fn theta(c: &mut Criterion) {
    let mut group = c.benchmark_group("theta kernel");
    let z = PointH::new(0.1, 1.2).unwrap();
    let tau = Complex64::new(0.3, 0.8);
    for (n, d) in [(1, 5), (2, -7)] {
        let pair = DiscriminantPair::new(d, 1, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(format!("N={n} D={d}")), &pair, |b, pair| {
            b.iter(|| theta_kernel(black_box(tau), z, pair, 2, &ThetaTrunc::default()))
        });
    }
    group.finish();
}

fn lattice(c: &mut Criterion) {
    c.bench_function("orbit reps N=3 D=-47", |b| b.iter(|| orbit_reps(3, black_box(-47), 1).unwrap()));
    let g = delta_form(60);
    let q = QuadParams::with_tol(1e-14, 1e-12);
    let l = LatticeVector::new(-1, -1, 1, 1);
    c.bench_function("cycle integral D=5", |b| b.iter(|| cycle_integral(&g, black_box(&l), 6, &q).unwrap()));
}

criterion_group!(benches, special_functions, lift, theta, lattice);
criterion_main!(benches);
