use std::f64::consts::PI;

use num_rational::Ratio;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::{
    default_step, fd_dbar, fd_laplacian, fd_lower, fd_raise, fd_xi, ft_closed_form, gamma_kernel_closed,
    gamma_kernel_quad, gamma_weighted_closed, gamma_weighted_quad, hermite_model, hermite_moment_closed,
    hermite_moment_quad, numeric_fourier_transform, synthetic_inputs, CaseRecord, GaussParams, SuiteReport,
};
use crate::arith::{gcd, hermite, incomplete_gamma, kronecker, DiscriminantPair, C64, I};
use crate::error::{Error, Result};
use crate::hyperbolic::{p_z, wall_disc, PointH};
use crate::lattice::{al_coset_action, atkin_lehner, is_square, LatticeVector};
use crate::lifts::{phi, shimura_coeff, wall_jump, xi_phi_coeff, xi_phi_expansion, LiftConfig};
use crate::quad::{integrate, QuadParams};
use crate::theta::{auto_coset_height, SublatticeFrame, ThetaKernel, ThetaTrunc};
use crate::weilrep::{eval_input, rho_tilde, shadow_coeffs, FiniteVector, Generator, HarmonicMaassInput};

pub const SUITES: [&str; 11] = [
    "fourier53",
    "gamma62",
    "gamma63",
    "gamma64",
    "theta_trafo",
    "poisson56",
    "harmonicity",
    "wallcross",
    "link73",
    "cusp54",
    "additional61",
];

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random sample points drawn by the kernel and lift suites.
    pub samples: usize,
    /// Input for the lift suites in place of the synthetic inputs.
    pub input: Option<HarmonicMaassInput>,
    /// Fixed `(τ, z)` for the kernel suites in place of random points.
    pub point: Option<(C64, PointH)>,
    /// Restricts the kernel suites to one level.
    pub level: Option<i64>,
    /// Restricts the kernel suites to one weight parameter.
    pub k: Option<u32>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self { seed: 7, samples: 10, input: None, point: None, level: None, k: None }
    }
}

pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Result<SuiteReport> {
    let (tol, cases) = match name {
        "fourier53" => (1e-8, fourier53(cfg)),
        "gamma62" => (1e-10, gamma62()),
        "gamma63" => (1e-8, gamma63()),
        "gamma64" => (1e-6, gamma64()),
        "theta_trafo" => (1e-7, theta_trafo(cfg)),
        "poisson56" => (1e-6, poisson56(cfg)),
        "harmonicity" => (1e-4, harmonicity(cfg)),
        "wallcross" => (1e-6, wallcross(cfg)),
        "link73" => (1e-4, link73(cfg)),
        "cusp54" => (1e-8, cusp54(cfg)),
        "additional61" => (1e-6, additional61(cfg)),
        _ => return Err(Error::UnknownSuite(name.to_string())),
    };
    Ok(SuiteReport::new(name, tol, cases))
}

/// Every suite, run concurrently and reported in the order of [`SUITES`].
pub fn run_all(cfg: &SuiteConfig) -> Vec<SuiteReport> {
    std::thread::scope(|s| {
        let handles: Vec<_> = SUITES.iter().map(|&n| s.spawn(move || run_suite(n, cfg))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("suite thread panicked").expect("listed suite names are known"))
            .collect()
    })
}

fn rel(a: C64, b: C64) -> f64 {
    if a == b {
        return 0.0;
    }
    (a - b).norm() / a.norm().max(b.norm())
}

fn max_diff(a: &FiniteVector, b: &FiniteVector) -> f64 {
    (a - b).max_abs()
}

fn random_point(rng: &mut StdRng, v: (f64, f64), y: (f64, f64)) -> (C64, PointH) {
    let tau = C64::new(rng.gen_range(-0.5..0.5), rng.gen_range(v.0..v.1));
    let z = PointH { x: rng.gen_range(-0.5..0.5), y: rng.gen_range(y.0..y.1) };
    (tau, z)
}

fn pair(n: i64, d: i64, r: i64) -> DiscriminantPair {
    DiscriminantPair::new(d, r, n).expect("suite pairs are admissible")
}

fn fourier53(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let tol = 1e-8;
    let quad = QuadParams::with_tol(0.0, 1e-13);
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let c = |re: f64, im: f64| C64::new(re, im);
    let mut out = Vec::new();
    let gauss = GaussParams { a: c(0.0, 0.5), b: c(0.0, 0.0), c: c(0.0, 0.0), d: c(1.0, 0.0), e: c(0.0, 0.0), f: c(0.0, 0.0), g: c(1.0, 0.0) };
    for xi in [0.0, 0.6, -1.3] {
        let w = gauss.window();
        let r = numeric_fourier_transform(|x| gauss.integrand(1, x), xi, (-w, w), &quad)
            .map(|v| rel(v.value, C64::from((-PI * xi * xi).exp())));
        out.push(CaseRecord::from_result(format!("self-dual gaussian xi={xi}"), r, tol));
        let r = numeric_fourier_transform(|x| x * gauss.integrand(1, x), xi, (-w, w), &quad)
            .map(|v| rel(v.value, I / (2.0 * PI.sqrt()) * hermite(1, PI.sqrt() * xi) * (-PI * xi * xi).exp()));
        out.push(CaseRecord::from_result(format!("x-weighted gaussian xi={xi}"), r, tol));
    }
    let mut sets = vec![(
        3,
        GaussParams { a: c(0.0, 0.5), b: c(1.0 / 3.0, 0.0), c: c(0.0, 0.0), d: c(1.0, 0.0), e: c(0.5, 0.0), f: c(1.0, 0.0), g: c(2.0, 0.0) },
        0.7,
    )];
    for _ in 0..24 {
        let k = rng.gen_range(1..=5u32);
        let a = c(rng.gen_range(-1.0..1.0), rng.gen_range(0.3..1.5));
        let mut small = || c(rng.gen_range(-0.5..0.5), rng.gen_range(-0.5..0.5));
        let (b, cc, e, f, g) = (small(), small(), small(), small(), small());
        let d = C64::from_polar(rng.gen_range(0.3..1.0), rng.gen_range(0.0..2.0 * PI));
        let xi = rng.gen_range(-1.5..1.5);
        sets.push((k, GaussParams { a, b, c: cc, d, e, f, g }, xi));
    }
    for (i, (k, p, xi)) in sets.into_iter().enumerate() {
        let w = p.window();
        let r = numeric_fourier_transform(|x| p.integrand(k, x), xi, (-w, w), &quad)
            .map(|v| rel(v.value, ft_closed_form(k, &p, xi)));
        out.push(CaseRecord::from_result(format!("set {i} k={k} xi={xi:.3}"), r, tol));
    }
    out
}

fn gamma62() -> Vec<CaseRecord> {
    let quad = QuadParams::with_tol(0.0, 1e-14);
    let mut out = Vec::new();
    for n in 0..=6 {
        for r in n..=8 {
            let exact = hermite_moment_closed(r, n);
            let q = hermite_moment_quad(r, n, &quad).map(|v| (v - exact).abs() / exact.abs());
            out.push(CaseRecord::from_result(format!("n={n} r={r}"), q, 1e-10));
        }
    }
    out
}

const ALPHAS: [f64; 2] = [0.5, 1.3];
const BETAS: [f64; 4] = [-0.7, -0.2, 0.4, 1.1];

fn gamma63() -> Vec<CaseRecord> {
    let quad = QuadParams::with_tol(0.0, 1e-12);
    let mut out = Vec::new();
    for kappa in 0..=4 {
        for alpha in ALPHAS {
            for beta in BETAS {
                let r = gamma_kernel_closed(kappa, alpha, beta)
                    .and_then(|c| gamma_kernel_quad(kappa, alpha, beta, &quad).map(|q| (q - c).abs() / c.abs()));
                out.push(CaseRecord::from_result(format!("kappa={kappa} alpha={alpha} beta={beta}"), r, 1e-8));
            }
        }
    }
    out
}

fn gamma64() -> Vec<CaseRecord> {
    let quad = QuadParams::with_tol(0.0, 1e-11);
    let mut out = Vec::new();
    for kappa in 0..=3 {
        for alpha in ALPHAS {
            for beta in BETAS {
                let r = gamma_weighted_closed(kappa, alpha, beta)
                    .and_then(|c| gamma_weighted_quad(kappa, alpha, beta, &quad).map(|q| (q - c).abs() / c.abs()));
                out.push(CaseRecord::from_result(format!("kappa={kappa} alpha={alpha} beta={beta}"), r, 1e-6));
            }
        }
    }
    out
}

const TRAFO_PAIRS: [(i64, i64, i64); 6] = [(1, 5, 1), (1, -3, 1), (2, -7, 1), (2, 1, 1), (3, -3, 3), (3, -8, 2)];

fn kernel_points(cfg: &SuiteConfig, salt: u64, v: (f64, f64), y: (f64, f64)) -> Vec<(C64, PointH)> {
    if let Some(p) = cfg.point {
        return vec![p];
    }
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ salt);
    (0..cfg.samples).map(|_| random_point(&mut rng, v, y)).collect()
}

fn weights(cfg: &SuiteConfig) -> Vec<u32> {
    cfg.k.map_or(vec![1, 2, 3], |k| vec![k])
}

/// Pairs of the point's level, cycling through the levels unless one is fixed.
fn pairs_for(cfg: &SuiteConfig, table: &[(i64, i64, i64)], i: usize) -> Vec<(i64, i64, i64)> {
    let mut levels: Vec<i64> = table.iter().map(|p| p.0).collect();
    levels.dedup();
    let n = cfg.level.unwrap_or(levels[i % levels.len()]);
    table.iter().copied().filter(|p| p.0 == n).collect()
}

fn theta_trafo(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let tr = ThetaTrunc { target: 1e-11 };
    let mut out = Vec::new();
    for (i, (tau, z)) in kernel_points(cfg, 0x7a, (0.6, 1.4), (0.6, 1.4)).into_iter().enumerate() {
        for (n, d, r) in pairs_for(cfg, &TRAFO_PAIRS, i) {
            for k in weights(cfg) {
                let kern = ThetaKernel::new(pair(n, d, r), k);
                let mut worst: f64 = 0.0;
                let mut tail: f64 = 0.0;
                for star in [false, true] {
                    let eval = |t: C64, z: PointH| if star { kern.theta_star(t, z, &tr) } else { kern.theta(t, z, &tr) };
                    let w = if star { 2 * k as i32 + 1 } else { 2 * k as i32 - 3 };
                    let base = eval(tau, z);
                    let scale = base.value.max_abs().max(1.0);
                    let shifted = eval(tau + 1.0, z);
                    let t = rho_tilde(Generator::T, n, d).apply(&base.value);
                    let img = eval(-1.0 / tau, z);
                    let s = &rho_tilde(Generator::S, n, d).apply(&base.value) * tau.sqrt().powi(w);
                    worst = worst.max(max_diff(&shifted.value, &t) / scale).max(max_diff(&img.value, &s) / scale);
                    tail = tail.max(base.tail).max(shifted.tail).max(img.tail);
                    if !star && n > 1 {
                        let al = atkin_lehner(n, n).expect("N exactly divides N");
                        let wz = PointH::from_c(al.apply(z.to_c())).expect("Atkin-Lehner preserves H");
                        let lhs = eval(tau, wz);
                        let j = al.j(z.to_c()).powi(2 - 2 * k as i32);
                        let rhs = FiniteVector::from_vec((0..2 * n).map(|h| base.value.get(al_coset_action(&al, h)) * j).collect());
                        worst = worst.max(max_diff(&lhs.value, &rhs) / scale);
                        tail = tail.max(lhs.tail);
                    }
                }
                if tail > 1e-9 {
                    worst = f64::INFINITY;
                }
                out.push(CaseRecord::new(format!("point {i} N={n} D={d} k={k}"), worst, 1e-7));
            }
        }
    }
    out
}

const POISSON_PAIRS: [(i64, i64, i64); 5] = [(1, 1, 1), (1, 5, 1), (1, -3, 1), (2, 1, 1), (2, -7, 1)];

fn poisson56(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let tr = ThetaTrunc { target: 1e-12 };
    let mut out = Vec::new();
    for (i, (tau, z)) in kernel_points(cfg, 0x56, (0.7, 1.3), (0.6, 1.3)).into_iter().enumerate() {
        for (n, d, r) in pairs_for(cfg, &POISSON_PAIRS, i) {
            let p = pair(n, d, r);
            let height = auto_coset_height(tau, z, &p, 1e-12);
            for k in weights(cfg) {
                let kern = ThetaKernel::new(p, k);
                let a = kern.theta(tau, z, &tr);
                let b = kern.poincare(tau, z, height, &tr);
                let res = max_diff(&a.value, &b.value) / a.value.max_abs().max(1.0);
                let extra = if k >= 2 && d == 1 { "with" } else { "without" };
                out.push(CaseRecord::new(format!("point {i} N={n} D={d} k={k} {extra} extra term"), res, 1e-6));
            }
        }
    }
    out
}

fn lift_inputs(cfg: &SuiteConfig) -> Vec<HarmonicMaassInput> {
    cfg.input.clone().map_or_else(synthetic_inputs, |f| vec![f])
}

/// The mode `m` with `n = −|Δ|m²/4N`, if any.
fn mode_of(pair: &DiscriminantPair, n: Ratio<i64>) -> Option<i64> {
    let t = -n * 4 * pair.level;
    if !t.is_integer() || t.to_integer() % pair.abs_delta() != 0 {
        return None;
    }
    let sq = t.to_integer() / pair.abs_delta();
    (sq > 0 && is_square(sq)).then(|| (sq as f64).sqrt().round() as i64)
}

/// A wall of the lift as a curve in H.
#[derive(Debug, Clone, Copy)]
enum Curve {
    Vertical(f64),
    Circle { centre: f64, radius: f64 },
}

impl Curve {
    fn distance(&self, z: PointH) -> f64 {
        match *self {
            Curve::Vertical(x0) => (z.x - x0).abs(),
            Curve::Circle { centre, radius } => ((z.x - centre).hypot(z.y) - radius).abs(),
        }
    }

    fn same(&self, o: &Curve) -> bool {
        match (*self, *o) {
            (Curve::Vertical(a), Curve::Vertical(b)) => (a - b).abs() < 1e-9,
            (Curve::Circle { centre: a, radius: r }, Curve::Circle { centre: b, radius: s }) => {
                (a - b).abs() < 1e-9 && (r - s).abs() < 1e-9
            }
            _ => false,
        }
    }
}

/// Walls of the lift within distance `r` of `z`: the vertical lines of the Bernoulli
/// family and the semicircles of the chamber correction.
fn walls_near(z: PointH, f: &HarmonicMaassInput, r: f64) -> Vec<(Curve, LatticeVector)> {
    let pair = f.pair;
    let n = pair.level;
    let two_n = 2 * n;
    let mut out = Vec::new();
    for (m, h, _) in f.principal_part() {
        if let Some(mode) = mode_of(&pair, m) {
            for b in 0..pair.abs_delta() {
                if kronecker(pair.delta, b) == 0 {
                    continue;
                }
                // m·x + b/Δ = j, that is x = (jΔ − b)/(Δm)
                let off = b as f64 / pair.delta as f64;
                let t = mode as f64 * z.x + off;
                for j in [t.floor() as i64, t.ceil() as i64] {
                    let x0 = (j as f64 - off) / mode as f64;
                    if (z.x - x0).abs() < r {
                        let (a, bb) = (j * pair.delta - b, pair.delta * mode);
                        let g = gcd(a, bb).abs().max(1);
                        out.push((Curve::Vertical(x0), LatticeVector::new(a / g, bb / g, 0, n)));
                    }
                }
            }
        }
        let d = wall_disc(&pair, m);
        let coset = (pair.r * h).rem_euclid(two_n);
        let sd = (d as f64).sqrt();
        let cmax = if z.y > r { (sd / (2.0 * n as f64 * (z.y - r))).floor() as i64 } else { 1000 };
        for c in 1..=cmax {
            let cf = c as f64;
            let radius = sd / (2.0 * n as f64 * cf);
            let lo = (2.0 * n as f64 * cf * (z.x - radius - r)).floor() as i64;
            let hi = (2.0 * n as f64 * cf * (z.x + radius + r)).ceil() as i64;
            let mut b = lo + (coset - lo).rem_euclid(two_n);
            while b <= hi {
                let num = b * b - d;
                if num % (4 * n * c) == 0 {
                    let l = LatticeVector::new(num / (4 * n * c), b, c, n);
                    let curve = Curve::Circle { centre: b as f64 / (2.0 * n as f64 * cf), radius };
                    if curve.distance(z) < r {
                        out.push((curve, l));
                    }
                }
                b += two_n;
            }
        }
    }
    out
}

fn generic_point(rng: &mut StdRng, f: &HarmonicMaassInput, y: (f64, f64), clearance: f64) -> PointH {
    loop {
        let z = PointH { x: rng.gen_range(-0.45..0.45), y: rng.gen_range(y.0..y.1) };
        if walls_near(z, f, clearance).is_empty() {
            return z;
        }
    }
}

fn phi_at<'a>(f: &'a HarmonicMaassInput, cfg: &'a LiftConfig) -> impl Fn(C64) -> Result<C64> + 'a {
    move |t: C64| Ok(phi(PointH::from_c(t)?, f, cfg)?.value)
}

fn harmonicity(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let inputs = lift_inputs(cfg);
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0x46);
    let mut out = Vec::new();
    for i in 0..2 * cfg.samples {
        let f = &inputs[i % inputs.len()];
        let r = (|| {
            let lc = LiftConfig::for_input(f)?;
            let z = generic_point(&mut rng, f, (0.3, 1.5), 0.03);
            let t = phi(z, f, &lc)?.terms;
            let scale = t.constant.norm() + t.bernoulli.norm() + t.polylog.norm() + t.chamber.norm();
            let zc = z.to_c();
            let lap = fd_laplacian(2.0 - 2.0 * f.k as f64, phi_at(f, &lc), zc, default_step(zc))?;
            Ok((z, lap.value.norm() / scale.max(f64::MIN_POSITIVE)))
        })();
        let label = format!("input {} N={} D={} k={}", i % inputs.len(), f.pair.level, f.pair.delta, f.k);
        match r {
            Ok((z, res)) => out.push(CaseRecord::new(format!("{label} z={:.3}+{:.3}i", z.x, z.y), res, 1e-4)),
            Err(e) => out.push(CaseRecord::from_result(label, Err(e), 1e-4)),
        }
    }
    out
}

/// Two-sided jump `Φ(z + δn) − Φ(z − δn)` along the unit normal `n` into the side where
/// `p_z(λ) > 0`, extrapolated to `δ → 0` from three step sizes.
fn measured_jump(l: &LatticeVector, z: PointH, f: &HarmonicMaassInput, cfg: &LiftConfig) -> Result<C64> {
    let eps = 1e-6;
    let gx = p_z(l, PointH { x: z.x + eps, y: z.y }) - p_z(l, PointH { x: z.x - eps, y: z.y });
    let gy = p_z(l, PointH { x: z.x, y: z.y + eps }) - p_z(l, PointH { x: z.x, y: z.y - eps });
    let norm = gx.hypot(gy);
    let nrm = C64::new(gx / norm, gy / norm);
    let jump = |d: f64| -> Result<C64> {
        let zc = z.to_c();
        Ok(phi(PointH::from_c(zc + d * nrm)?, f, cfg)?.value - phi(PointH::from_c(zc - d * nrm)?, f, cfg)?.value)
    };
    let d0 = 2e-3;
    let (j1, j2, j4) = (jump(d0)?, jump(d0 / 2.0)?, jump(d0 / 4.0)?);
    let (r1, r2) = (2.0 * j2 - j1, 2.0 * j4 - j2);
    Ok((4.0 * r2 - r1) / 3.0)
}

/// Isolated points on up to one vertical and two semicircular walls of `f`.
fn wall_points(f: &HarmonicMaassInput) -> Vec<(LatticeVector, PointH)> {
    let mut out = Vec::new();
    let isolated = |curve: &Curve, z: PointH| walls_near(z, f, 0.02).iter().all(|(c, _)| c.same(curve));
    'vertical: for y in [1.1, 0.93, 1.37, 0.71] {
        for x in [0.05, -0.17, 0.29, -0.41] {
            let z = PointH { x, y };
            if let Some((curve, l)) = walls_near(z, f, 0.5).into_iter().find(|(c, _)| matches!(c, Curve::Vertical(_))) {
                if let Curve::Vertical(x0) = curve {
                    let p = PointH { x: x0, y };
                    if x0.abs() <= 0.5 && isolated(&curve, p) {
                        out.push((l, p));
                        break 'vertical;
                    }
                }
            }
        }
    }
    let mut circles = 0;
    'circle: for y in [0.9, 0.6, 0.45, 0.3] {
        for x in [0.0, 0.21, -0.33, 0.4] {
            let z = PointH { x, y };
            for (curve, l) in walls_near(z, f, 0.5) {
                if let Curve::Circle { centre, radius } = curve {
                    if radius < 0.25 || centre.abs() > 0.5 || out.iter().any(|(m, _)| *m == l) {
                        continue;
                    }
                    for theta in [1.2, 1.9, 0.8, 2.4] {
                        let p = PointH { x: centre + radius * f64::cos(theta), y: radius * f64::sin(theta) };
                        if p.y > 0.2 && isolated(&curve, p) {
                            out.push((l, p));
                            circles += 1;
                            if circles == 2 {
                                break 'circle;
                            }
                            break;
                        }
                    }
                }
            }
        }
    }
    out
}

fn wallcross(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let mut out = Vec::new();
    for (i, f) in lift_inputs(cfg).iter().enumerate() {
        let lc = match LiftConfig::for_input(f) {
            Ok(c) => c,
            Err(e) => {
                out.push(CaseRecord::from_result(format!("input {i}"), Err(e), 1e-6));
                continue;
            }
        };
        if f.principal_part().next().is_none() {
            let l = LatticeVector::new(0, 1, 0, f.pair.level);
            let r = wall_jump(&l, f, &lc, PointH { x: 0.0, y: 1.0 }).map(|j| j.norm());
            out.push(CaseRecord::from_result(format!("input {i}: empty principal part"), r, 1e-6));
            continue;
        }
        for (l, z) in wall_points(f) {
            let r = measured_jump(&l, z, f, &lc)
                .and_then(|m| wall_jump(&l, f, &lc, z).map(|w| (m - w).norm() / w.norm().max(1.0)));
            out.push(CaseRecord::from_result(format!("input {i} wall {l} at {:.4}+{:.4}i", z.x, z.y), r, 1e-6));
        }
    }
    out
}

fn link73(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let inputs: Vec<_> = lift_inputs(cfg).into_iter().filter(|f| !f.c_minus.is_empty()).collect();
    let mut out = Vec::new();
    if inputs.is_empty() {
        return out;
    }
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0x73);
    for i in 0..cfg.samples {
        let f = &inputs[i % inputs.len()];
        let label = format!("input {} N={} D={} k={}", i % inputs.len(), f.pair.level, f.pair.delta, f.k);
        let lc = match LiftConfig::for_input(f) {
            Ok(c) => c,
            Err(e) => {
                out.push(CaseRecord::from_result(label, Err(e), 1e-4));
                continue;
            }
        };
        let z = generic_point(&mut rng, f, (0.35, 0.9), 0.03);
        let zc = z.to_c();
        let kappa = 2.0 - 2.0 * f.k as f64;
        let r = fd_xi(phi_at(f, &lc), kappa, zc, default_step(zc))
            .and_then(|x| xi_phi_expansion(z, f, &lc).map(|e| rel(0.5 * x.value, e)));
        out.push(CaseRecord::from_result(format!("{label} xi-link z={:.3}+{:.3}i", z.x, z.y), r, 1e-4));
        let expansion = |t: C64| xi_phi_expansion(PointH::from_c(t)?, f, &lc);
        let r = fd_dbar(expansion, zc, default_step(zc))
            .and_then(|d| xi_phi_expansion(z, f, &lc).map(|e| d.value.norm() / e.norm().max(1.0)));
        out.push(CaseRecord::from_result(format!("{label} holomorphy"), r, 1e-8));
    }
    for (i, f) in inputs.iter().enumerate() {
        let Ok(lc) = LiftConfig::for_input(f) else { continue };
        let shadow = shadow_coeffs(f);
        let worst = (1..=12).try_fold(0.0f64, |acc, m| {
            shimura_coeff(&shadow, m, &lc).map(|s| acc.max(rel(xi_phi_coeff(f, &lc, m), s)))
        });
        out.push(CaseRecord::from_result(format!("input {i} coefficients m<=12"), worst, 1e-12));
    }
    out
}

const CUSP_PAIRS: [(i64, i64, i64); 4] = [(1, 1, 1), (2, 1, 1), (1, 5, 1), (2, -7, 1)];

fn cusp54(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let tr = ThetaTrunc { target: 1e-14 };
    let mut rng = StdRng::seed_from_u64(cfg.seed ^ 0x54);
    let mut out = Vec::new();
    for (n, d, r) in CUSP_PAIRS {
        for k in weights(cfg) {
            let kern = ThetaKernel::new(pair(n, d, r), k);
            let (tau, z0) = random_point(&mut rng, (0.8, 1.2), (1.0, 2.0));
            // the omitted Poincaré terms are of size exp(−πNy²|cτ+d|²/(|Δ|v)) with |cτ+d| ≥ v
            let y = (45.0 * d.abs() as f64 / (PI * n as f64 * tau.im)).sqrt().max(4.0);
            let z = PointH { x: z0.x, y };
            let theta = kern.theta(tau, z, &tr).value;
            let frame = SublatticeFrame::new(n, z);
            let limit = if k >= 2 {
                &kern.xi(k - 2, tau, &frame, 0, 0, &tr).value * kern.czkj(&frame, 1)
            } else {
                FiniteVector::zeros(n)
            };
            let res = max_diff(&theta, &limit) / limit.max_abs().max(1.0);
            out.push(CaseRecord::new(format!("N={n} D={d} k={k} y={:.2}", z.y), res, 1e-8));
        }
    }
    out
}

/// Inputs with `Δ = 1`, `k ≥ 2` for the regularized-integral check.
fn additional_inputs(cfg: &SuiteConfig) -> Vec<HarmonicMaassInput> {
    if let Some(f) = &cfg.input {
        return if f.pair.delta == 1 && f.k >= 2 { vec![f.clone()] } else { Vec::new() };
    }
    let mut v: Vec<_> = synthetic_inputs().into_iter().filter(|f| f.pair.delta == 1 && f.k >= 2).collect();
    let mut f = HarmonicMaassInput::new(3, pair(2, 1, 1));
    let c = |re: f64| C64::new(re, 0.0);
    f.set_plus(Ratio::new(-1, 8), 1, c(1.0))
        .set_plus(Ratio::new(-1, 8), 3, c(-1.0))
        .set_plus(Ratio::new(-9, 8), 3, c(0.25))
        .set_plus(Ratio::new(-9, 8), 1, c(-0.25))
        .set_minus(Ratio::new(-1, 8), 1, c(0.2))
        .set_minus(Ratio::new(-1, 8), 3, c(-0.2));
    v.push(f);
    v
}

/// `Σ_b c(−b²/4N, b, t) t^{−k/2} H_k(b√(πt/N))` over `b ∈ Z` with `c(n, h, t) = c⁺(n, h) + c⁻(n, h)Γ(k−1/2, −4πnt)`:
/// the `0`-th coefficient of `⟨f, conj Ξ_k(τ, 0, 0, 0)⟩` at height `t`.
fn zeroth_coefficient(f: &HarmonicMaassInput, t: f64) -> Result<C64> {
    let n = f.pair.level;
    let k = f.k;
    let bmax = f.c_plus.keys().chain(f.c_minus.keys()).map(|(m, _)| (-*m * 4 * n).to_integer().abs()).max().unwrap_or(0);
    let mut acc = C64::default();
    let bmax = (bmax as f64).sqrt().ceil() as i64;
    for b in -bmax..=bmax {
        let m = Ratio::new(-b * b, 4 * n);
        let h = (f.pair.r * b).rem_euclid(2 * n);
        let mf = *m.numer() as f64 / *m.denom() as f64;
        let mut c = f.c_plus(m, h);
        let cm = f.c_minus(m, h);
        if cm != C64::default() {
            c += cm * incomplete_gamma(k as f64 - 0.5, -4.0 * PI * mf * t)?;
        }
        acc += c * t.powf(-(k as f64) / 2.0) * hermite(k, b as f64 * (PI * t / n as f64).sqrt());
    }
    Ok(acc)
}

/// `Σ_b c⁺(−b²/4N, b)/(k(k−1))·(2√π b/√N)^k`.
fn regularized_closed_form(f: &HarmonicMaassInput) -> C64 {
    let n = f.pair.level;
    let k = f.k;
    f.principal_part()
        .filter_map(|(m, h, c)| {
            let sq = (-m * 4 * n).to_integer();
            if !(-m * 4 * n).is_integer() || !is_square(sq) {
                return None;
            }
            let b0 = (sq as f64).sqrt().round() as i64;
            let s: f64 = [b0, -b0]
                .into_iter()
                .filter(|&b| (f.pair.r * b - h).rem_euclid(2 * n) == 0)
                .map(|b| (2.0 * PI.sqrt() * b as f64 / (n as f64).sqrt()).powi(k as i32))
                .sum();
            Some(c * s / (k * (k - 1)) as f64)
        })
        .sum()
}

fn additional61(cfg: &SuiteConfig) -> Vec<CaseRecord> {
    let tol = 1e-6;
    let mut out = Vec::new();
    let tau = C64::new(0.23, 0.81);
    let step = default_step(tau);
    for kappa in 2..=5u32 {
        for a in [0.7, 1.9] {
            let raise = fd_raise(|t| Ok(hermite_model(kappa - 2, a, t)), kappa as f64 - 1.5, tau, step)
                .map(|r| rel(r.value, -0.25 * hermite_model(kappa, a, tau)));
            out.push(CaseRecord::from_result(format!("raise model kappa={kappa} a={a}"), raise, tol));
            let lower = fd_lower(|t| Ok(hermite_model(kappa, a, t)), tau, step)
                .map(|r| rel(r.value, (kappa * (kappa - 1)) as f64 * hermite_model(kappa - 2, a, tau)));
            out.push(CaseRecord::from_result(format!("lower model kappa={kappa} a={a}"), lower, tol));
        }
    }
    let tr = ThetaTrunc { target: 1e-14 };
    for (i, f) in additional_inputs(cfg).iter().enumerate() {
        let k = f.k;
        let n = f.pair.level;
        let kern = ThetaKernel::new(f.pair, k);
        let frame = SublatticeFrame::new(n, PointH { x: 0.1, y: 0.9 });
        let xi_k = |kappa: u32, t: C64| kern.xi(kappa, t, &frame, 0, 0, &tr).value;
        let h = f.pair.r.rem_euclid(2 * n);
        let raise = fd_raise(|t| Ok(xi_k(k - 2, t).get(h)), k as f64 - 1.5, tau, step)
            .map(|r| rel(r.value, -0.25 * xi_k(k, tau).get(h)));
        out.push(CaseRecord::from_result(format!("input {i} raise Xi_{} to Xi_{k}", k - 2), raise, tol));
        for t in [0.9, 1.3] {
            let quad = QuadParams::with_tol(0.0, 1e-12);
            let integral = integrate(
                |u| {
                    let tau = C64::new(u, t);
                    match eval_input(f, tau, f64::INFINITY) {
                        Ok((fv, _)) => fv.comps.iter().zip(&xi_k(k, tau).comps).map(|(a, b)| a * b).sum(),
                        Err(_) => C64::new(f64::NAN, 0.0),
                    }
                },
                -0.5,
                0.5,
                &quad,
            );
            let r = integral.and_then(|q| zeroth_coefficient(f, t).map(|c| rel(q.value, c)));
            out.push(CaseRecord::from_result(format!("input {i} u-integral at t={t}"), r, tol));
        }
        let closed = regularized_closed_form(f);
        let r = zeroth_coefficient(f, 1e8).map(|c| rel(c / (k * (k - 1)) as f64, closed));
        out.push(CaseRecord::from_result(format!("input {i} large-t limit vs closed form"), r, tol));
    }
    out
}
