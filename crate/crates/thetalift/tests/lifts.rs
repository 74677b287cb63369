mod common;

use num_rational::Ratio;
use thetalift::arith::{dirichlet_l, DiscriminantPair, C64};
use thetalift::hyperbolic::{cycle_integral_with, CycleScheme, PointH};
use thetalift::lattice::{orbit_reps, GenusCharacter};
use thetalift::lifts::{
    bernoulli_family, chamber_correction, phi, polylog_family, shimura_coeff, shintani_coeff, wall_jump, xi_phi_coeff,
    xi_phi_constant, xi_phi_expansion, LiftConfig,
};
use thetalift::quad::QuadParams;
use thetalift::verify::{default_step, fd_dbar, fd_laplacian, fd_xi, run_suite, synthetic_inputs, SuiteConfig};
use thetalift::weilrep::{shadow_coeffs, CuspForm, HarmonicMaassInput, VectorCuspForm};
use thetalift::{Error, LatticeVector};

use common::delta_form;

fn pair(n: i64, d: i64, r: i64) -> DiscriminantPair {
    DiscriminantPair::new(d, r, n).unwrap()
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn rel(a: C64, b: C64) -> f64 {
    if a == b {
        return 0.0;
    }
    (a - b).norm() / a.norm().max(b.norm())
}

/// Generic points away from every wall of the synthetic inputs.
const GENERIC: [(f64, f64); 4] = [(0.137, 0.611), (-0.291, 0.874), (0.402, 1.233), (-0.063, 0.437)];

#[test]
fn negative_n0_gives_zero() {
    let mut f = HarmonicMaassInput::new(2, pair(1, 5, 1));
    f.set_plus(Ratio::new(3, 4), 1, c(1.0, 0.0)).set_minus(Ratio::new(-5, 4), 1, c(0.3, 0.0));
    assert!(f.n0() < Ratio::from_integer(0));
    let cfg = LiftConfig::for_input(&f).unwrap();
    let v = phi(PointH::new(0.2, 0.7).unwrap(), &f, &cfg).unwrap();
    assert_eq!(v.value, c(0.0, 0.0));
}

#[test]
fn constant_term_forced_zero_for_odd_k_positive_delta() {
    let mut f = HarmonicMaassInput::new(1, pair(1, 5, 1));
    f.set_plus(Ratio::from_integer(0), 0, c(1.0, 0.0));
    assert!(matches!(f.validate(), Err(Error::SymmetryViolation { .. })));
    // k even keeps it, and the constant term is C₁c⁺(0,0)L(k, (Δ/·))
    let mut f = HarmonicMaassInput::new(2, pair(1, 5, 1));
    f.set_plus(Ratio::from_integer(0), 0, c(2.0, 0.0));
    f.validate().unwrap();
    let cfg = LiftConfig::for_input(&f).unwrap();
    let v = phi(PointH::new(0.1, 0.9).unwrap(), &f, &cfg).unwrap();
    let expected = cfg.constants().c1 * 2.0 * dirichlet_l(2, 5).unwrap();
    assert!(rel(v.value, expected) < 1e-14);
    assert!(rel(v.terms.constant, expected) < 1e-14);
}

#[test]
fn config_rejects_k_zero() {
    assert!(LiftConfig::new(0, pair(1, 1, 1)).is_err());
}

#[test]
fn wall_jump_examples() {
    let empty = HarmonicMaassInput::new(2, pair(1, 5, 1));
    let cfg = LiftConfig::for_input(&empty).unwrap();
    let l = LatticeVector::new(1, 5, 0, 1);
    assert_eq!(wall_jump(&l, &empty, &cfg, PointH::new(0.2, 1.0).unwrap()).unwrap(), c(0.0, 0.0));

    // N=1, Δ=1, k=1, c⁺(−1/4, 1) = 1 across x = 0: one admissible λ with χ = 1 and q_z⁰ = 1
    let mut f = HarmonicMaassInput::new(1, pair(1, 1, 1));
    f.set_plus(Ratio::new(-1, 4), 1, c(1.0, 0.0));
    let cfg = LiftConfig::for_input(&f).unwrap();
    for y in [0.5, 1.0, 3.0] {
        let j = wall_jump(&LatticeVector::new(0, 1, 0, 1), &f, &cfg, PointH::new(0.0, y).unwrap()).unwrap();
        assert!((j - c(2.0 * 2f64.sqrt(), 0.0)).norm() < 1e-14);
    }
    // for inputs with the ±h symmetry, reversing λ swaps the sides
    let mut nonzero = 0;
    for g in synthetic_inputs() {
        let cfg = LiftConfig::for_input(&g).unwrap();
        let z = PointH::new(0.0, 0.8).unwrap();
        for l in [LatticeVector::new(0, g.pair.delta.abs(), 0, g.pair.level), LatticeVector::new(1, 3, 1, g.pair.level)] {
            if l.disc() <= 0 {
                continue;
            }
            let a = wall_jump(&l, &g, &cfg, z).unwrap();
            let b = wall_jump(&l.scale(-1), &g, &cfg, z).unwrap();
            nonzero += usize::from(a.norm() > 0.1);
            assert!((a + b).norm() < 1e-14 * a.norm().max(1.0), "{l}: {a} vs {b}");
        }
    }
    assert!(nonzero >= 3);
    assert!(wall_jump(&LatticeVector::new(1, 0, 1, 1), &f, &cfg, PointH::new(0.0, 1.0).unwrap()).is_err());
}

#[test]
fn measured_jumps_match_on_vertical_and_semicircular_walls() {
    let r = run_suite("wallcross", &SuiteConfig::default()).unwrap();
    assert!(r.pass, "{r}");
    let vertical = r.cases.iter().filter(|c| c.label.contains(", 0) at")).count();
    assert!(vertical >= 1 && r.cases.len() - vertical >= 2, "{r}");
}

#[test]
fn empty_principal_part_wallcross_is_trivial() {
    let mut f = HarmonicMaassInput::new(2, pair(1, 5, 1));
    f.set_minus(Ratio::new(-5, 4), 1, c(0.3, 0.0));
    let cfg = SuiteConfig { input: Some(f), ..SuiteConfig::default() };
    let r = run_suite("wallcross", &cfg).unwrap();
    assert!(r.pass && r.max_residual == 0.0);
}

#[test]
fn each_family_is_harmonic_off_walls() {
    for f in synthetic_inputs() {
        let cfg = LiftConfig::for_input(&f).unwrap();
        let kappa = 2.0 - 2.0 * f.k as f64;
        for (x, y) in GENERIC {
            let z = C64::new(x, y);
            let at = |t: C64| PointH::from_c(t);
            let families: [(&str, Box<dyn Fn(C64) -> thetalift::Result<C64>>); 3] = [
                ("bernoulli", Box::new(|t| Ok(bernoulli_family(at(t)?, &f, &cfg).0))),
                ("polylog", Box::new(|t| Ok(polylog_family(at(t)?, &f, &cfg)?.0))),
                ("chamber", Box::new(|t| Ok(chamber_correction(at(t)?, &f, &cfg).0))),
            ];
            for (name, g) in families {
                let scale = g(z).unwrap().norm();
                if scale == 0.0 {
                    continue;
                }
                let lap = fd_laplacian(kappa, &g, z, default_step(z)).unwrap();
                assert!(lap.value.norm() < 1e-4 * scale, "{name} D={} k={} at {z}: {}", f.pair.delta, f.k, lap.value);
            }
        }
    }
}

#[test]
fn vertical_singularity_is_carried_by_bernoulli_terms() {
    // N=1, Δ=1, k=2: Bernoulli walls at x ∈ Z
    let f = &synthetic_inputs()[3];
    let cfg = LiftConfig::for_input(f).unwrap();
    let y = 1.1;
    let smooth = |x: f64| {
        let z = PointH::new(x, y).unwrap();
        phi(z, f, &cfg).unwrap().value - bernoulli_family(z, f, &cfg).0
    };
    let total = |x: f64| phi(PointH::new(x, y).unwrap(), f, &cfg).unwrap().value;
    let d = 1e-9;
    assert!((smooth(d) - smooth(-d)).norm() < 1e-7);
    assert!((total(d) - total(-d)).norm() > 1e-3);
}

#[test]
fn xi_link_and_holomorphy() {
    for f in synthetic_inputs() {
        let cfg = LiftConfig::for_input(&f).unwrap();
        for (x, y) in GENERIC {
            let z = PointH::new(x, y).unwrap();
            let zc = z.to_c();
            let g = |t: C64| Ok(phi(PointH::from_c(t)?, &f, &cfg)?.value);
            let lhs = 0.5 * fd_xi(g, 2.0 - 2.0 * f.k as f64, zc, default_step(zc)).unwrap().value;
            let rhs = xi_phi_expansion(z, &f, &cfg).unwrap();
            assert!(rel(lhs, rhs) < 1e-4, "D={} k={} at {zc}: {lhs} vs {rhs}", f.pair.delta, f.k);
            let h = |t: C64| xi_phi_expansion(PointH::from_c(t)?, &f, &cfg);
            let d = fd_dbar(h, zc, default_step(zc)).unwrap();
            assert!(d.value.norm() < 1e-8 * rhs.norm().max(1.0));
        }
    }
}

#[test]
fn xi_expansion_vanishes_without_nonholomorphic_part() {
    let mut f = HarmonicMaassInput::new(2, pair(1, 5, 1));
    f.set_plus(Ratio::new(-5, 4), 1, c(1.0, 0.0));
    let cfg = LiftConfig::for_input(&f).unwrap();
    assert_eq!(xi_phi_expansion(PointH::new(0.1, 0.5).unwrap(), &f, &cfg).unwrap(), c(0.0, 0.0));
}

#[test]
fn xi_constant_only_for_weight_one_and_delta_one() {
    let f = &synthetic_inputs()[1];
    let cfg = LiftConfig::for_input(f).unwrap();
    // (√2/i)·Σ m conj c⁺(−m²/8, m) over m = 1 only, since −17/8 is not of the form −m²/8
    assert!((xi_phi_constant(f, &cfg) - 2f64.sqrt() / C64::i()).norm() < 1e-15);
    let g = &synthetic_inputs()[3];
    assert_eq!(xi_phi_constant(g, &LiftConfig::for_input(g).unwrap()), c(0.0, 0.0));
}

#[test]
fn shimura_and_xi_constants_are_linked() {
    for (n, d, r) in [(1, 1, 1), (1, 5, 1), (1, -3, 1), (2, -7, 1), (2, 17, 1), (3, -8, 2)] {
        for k in 1..=5 {
            let cfg = LiftConfig::new(k, pair(n, d, r)).unwrap();
            let k5 = cfg.constants();
            let expected = -0.5 * k5.c4 * (std::f64::consts::PI * d.abs() as f64 / n as f64).powf(0.5 - k as f64);
            assert!(rel(k5.c5, expected) < 1e-13, "N={n} D={d} k={k}");
        }
    }
}

#[test]
fn shimura_coefficients_match_xi_expansion_of_shadow() {
    for f in synthetic_inputs() {
        let cfg = LiftConfig::for_input(&f).unwrap();
        let a = shadow_coeffs(&f);
        for m in 1..=20 {
            let lhs = xi_phi_coeff(&f, &cfg, m);
            let rhs = shimura_coeff(&a, m, &cfg).unwrap();
            assert!(rel(lhs, rhs) < 1e-12, "D={} m={m}: {lhs} vs {rhs}", f.pair.delta);
        }
    }
}

#[test]
fn shimura_examples() {
    let cfg = LiftConfig::new(2, pair(1, 1, 1)).unwrap();
    let c5 = cfg.constants().c5;
    let mut a = VectorCuspForm::new(1, 2);
    a.set(Ratio::new(1, 4), 1, c(1.0, 0.0));
    assert!(rel(shimura_coeff(&a, 1, &cfg).unwrap(), c5) < 1e-15);
    for m in 2..=8 {
        // only d = m survives
        let v = shimura_coeff(&a, m, &cfg).unwrap();
        assert!(rel(v, c5 * m as f64) < 1e-14, "m={m}");
    }
    assert!(shimura_coeff(&a, 0, &cfg).is_err());

    // (−3/3) = 0 drops the divisor d = 3 of m = 3
    let cfg = LiftConfig::new(2, pair(1, -3, 1)).unwrap();
    let mut a = VectorCuspForm::new(1, 2);
    a.set(Ratio::new(27, 4), 1, c(1.0, 0.0));
    a.set(Ratio::new(3, 4), 1, c(5.0, 0.0));
    let v = shimura_coeff(&a, 3, &cfg).unwrap();
    assert!(rel(v, cfg.constants().c5) < 1e-15);
}

#[test]
fn growth_is_polynomial_or_convergent() {
    for f in synthetic_inputs() {
        let cfg = LiftConfig::for_input(&f).unwrap();
        let xs = [-0.37, -0.11, 0.06, 0.29, 0.44];
        if f.k >= 2 {
            let fit = |ymax: f64| {
                let mut best: f64 = 0.0;
                let mut y = 2.0;
                while y <= ymax {
                    for x in xs {
                        let v = phi(PointH::new(x, y).unwrap(), &f, &cfg).unwrap().value;
                        best = best.max(v.norm() / y.powi(f.k as i32));
                    }
                    y *= 1.25;
                }
                best
            };
            let (c25, c50) = (fit(25.0), fit(50.0));
            assert!(c50 <= 1.05 * c25, "D={} k={}: {c25} {c50}", f.pair.delta, f.k);
        } else {
            for x in xs {
                let a = phi(PointH::new(x, 20.0).unwrap(), &f, &cfg).unwrap().value;
                let b = phi(PointH::new(x, 40.0).unwrap(), &f, &cfg).unwrap().value;
                assert!((a - b).norm() < 1e-8);
            }
        }
    }
}

#[test]
fn shintani_zero_form_and_dual_quadrature() {
    let q = QuadParams::with_tol(1e-14, 1e-12);
    let mut cfg = LiftConfig::new(6, pair(1, 1, 1)).unwrap();
    cfg.quad = q;
    let zero = CuspForm::zero(1, 12);
    assert_eq!(shintani_coeff(&zero, Ratio::new(-5, 4), 1, &cfg).unwrap().value, c(0.0, 0.0));

    let g = delta_form(60);
    for (d, m) in [(1, Ratio::new(-5, 4)), (5, Ratio::new(-1, 4))] {
        let mut cfg = LiftConfig::new(6, pair(1, d, 1)).unwrap();
        cfg.quad = q;
        let v = shintani_coeff(&g, m, 1, &cfg).unwrap();
        assert!(v.value.re.is_finite() && v.value.im.is_finite());
        assert_eq!(v.orbits.len(), orbit_reps(1, 5, 1).unwrap().len());
        // recompute with the arclength parametrization
        let chi = GenusCharacter::new(cfg.pair);
        let mut other = c(0.0, 0.0);
        for (l, x) in &v.orbits {
            assert_eq!(*x, chi.eval(l));
            if *x != 0 {
                other += *x as f64 * cycle_integral_with(&g, l, 6, CycleScheme::Arclength, None, &q).unwrap().value;
            }
        }
        other *= (d.abs() as f64 / 2.0).sqrt();
        assert!(rel(v.value, other) < 1e-8, "D={d}: {} vs {other}", v.value);
    }
    assert!(shintani_coeff(&g, Ratio::new(1, 4), 1, &LiftConfig::new(6, pair(1, 1, 1)).unwrap()).is_err());
}
