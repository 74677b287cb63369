//! Evaluation of the lift Φ through its Fourier expansion, wall-crossing jumps,
//! the ξ-image (the Shimura lift of the shadow) and Shintani coefficients.

use std::f64::consts::PI;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::arith::{
    bernoulli_poly_c, dirichlet_l, divisors, ec, gcd, kronecker, lift_constants, periodic_bernoulli, polylog,
    shifted_incomplete_polylog_scaled, DiscriminantPair, LiftConstants, C64, I,
};
use crate::error::{Error, Result};
use crate::hyperbolic::{cycle_integral, p_z, q_z, semicircles_containing, wall_disc, PointH, WALL_TOL};
use crate::lattice::{is_square, orbit_reps, GenusCharacter, LatticeVector};
use crate::quad::QuadParams;
use crate::weilrep::{CuspForm, HarmonicMaassInput, VectorCuspForm};

/// Parameters shared by the lift evaluators.
#[derive(Debug, Clone)]
pub struct LiftConfig {
    pub k: u32,
    pub pair: DiscriminantPair,
    /// Largest mode `m` used in the expansion; `None` uses every coefficient of the input.
    pub modes: Option<i64>,
    /// Relative cutoff for the infinite sums in the ξ-image.
    pub tol: f64,
    /// Global scalar applied to Shintani coefficients.
    pub shintani_scale: C64,
    pub quad: QuadParams,
}

impl LiftConfig {
    pub fn new(k: u32, pair: DiscriminantPair) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        Ok(Self { k, pair, modes: None, tol: 1e-15, shintani_scale: C64::new(1.0, 0.0), quad: QuadParams::default() })
    }

    pub fn for_input(f: &HarmonicMaassInput) -> Result<Self> {
        Self::new(f.k, f.pair)
    }

    pub fn constants(&self) -> LiftConstants {
        lift_constants(self.k, &self.pair).normalized()
    }

    fn check(&self, f: &HarmonicMaassInput) -> Result<()> {
        if f.k != self.k || f.pair != self.pair {
            return Err(Error::InvalidArgument("input does not match the lift configuration".into()));
        }
        Ok(())
    }
}

/// The four pieces of the expansion at a point.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct PhiTerms {
    /// `C₁c⁺(0,0)L(k, (Δ/·))`.
    pub constant: C64,
    /// The finite Bernoulli family from the principal part.
    pub bernoulli: C64,
    /// The polylogarithm family from `c⁻`.
    pub polylog: C64,
    /// Polynomial added below semicircular walls.
    pub chamber: C64,
}

/// One semicircular wall contributing to the chamber correction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChamberTerm {
    pub lambda: LatticeVector,
    pub m: Ratio<i64>,
    pub h: i64,
    /// 1 strictly inside the semicircle, 1/2 on it.
    pub weight: f64,
    pub value: C64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PhiValue {
    pub value: C64,
    pub terms: PhiTerms,
    /// Bound on the `c⁻` modes dropped by [`LiftConfig::modes`].
    pub tail: f64,
    pub chamber: Vec<ChamberTerm>,
    /// Whether `z` lies on a wall, in which case the value is the chamber average.
    pub on_wall: bool,
}

/// `(−|Δ|m²/4N, rm)`, the index pair of mode `m`.
fn mode_index(pair: &DiscriminantPair, m: i64) -> (Ratio<i64>, i64) {
    (Ratio::new(-pair.abs_delta() * m * m, 4 * pair.level), (pair.r * m).rem_euclid(2 * pair.level))
}

/// The mode `m ≥ 1` with `n = −|Δ|m²/4N`, if any.
fn mode_of(pair: &DiscriminantPair, n: Ratio<i64>) -> Option<i64> {
    let t = -n * 4 * pair.level;
    if !t.is_integer() || t.to_integer() % pair.abs_delta() != 0 {
        return None;
    }
    let sq = t.to_integer() / pair.abs_delta();
    if sq <= 0 || !is_square(sq) {
        return None;
    }
    let m = (sq as f64).sqrt().round() as i64;
    Some(m)
}

/// Largest mode carried by a coefficient table.
fn max_mode<'a>(pair: &DiscriminantPair, keys: impl Iterator<Item = &'a (Ratio<i64>, i64)>) -> i64 {
    keys.filter_map(|(n, _)| mode_of(pair, *n)).max().unwrap_or(0)
}

/// `C₁c⁺(0,0)L(k, (Δ/·))`.
pub fn constant_term(f: &HarmonicMaassInput, cfg: &LiftConfig) -> Result<C64> {
    let c00 = f.c_plus(Ratio::zero(), 0);
    if c00.is_zero() {
        return Ok(C64::zero());
    }
    Ok(cfg.constants().c1 * c00 * dirichlet_l(cfg.k, cfg.pair.delta)?)
}

/// The Bernoulli family and whether `z` sits on one of its vertical walls.
pub fn bernoulli_family(z: PointH, f: &HarmonicMaassInput, cfg: &LiftConfig) -> (C64, bool) {
    let pair = &cfg.pair;
    let k = cfg.k as usize;
    let (delta, ad) = (pair.delta, pair.abs_delta());
    let mut top = max_mode(pair, f.c_plus.keys());
    if let Some(cap) = cfg.modes {
        top = top.min(cap);
    }
    let mut acc = C64::zero();
    let mut on_wall = false;
    for m in 1..=top {
        let (n, h) = mode_index(pair, m);
        let c = f.c_plus(n, h);
        if c.is_zero() {
            continue;
        }
        let my = m as f64 * z.y;
        let w = I * my;
        for b in 0..ad {
            let chi = kronecker(delta, b);
            if chi == 0 {
                continue;
            }
            let x = m as f64 * z.x + b as f64 / delta as f64;
            let wall = (x - x.round()).abs() < WALL_TOL;
            on_wall |= wall;
            let bracket = if k == 1 {
                C64::from(if wall { 0.0 } else { periodic_bernoulli(1, x) })
            } else {
                let frac = if wall { 0.0 } else { x - x.floor() };
                let jump = if wall { 0.5 * k as f64 * w.powi(k as i32 - 1) } else { C64::zero() };
                bernoulli_poly_c(k, frac + w) + jump
            };
            acc += c * chi as f64 * bracket;
        }
    }
    (-cfg.constants().c2 * acc, on_wall)
}

/// The `c⁻` family of polylogarithms, with a bound on the modes dropped by the cap.
pub fn polylog_family(z: PointH, f: &HarmonicMaassInput, cfg: &LiftConfig) -> Result<(C64, f64)> {
    let pair = &cfg.pair;
    let k = cfg.k;
    let (delta, ad) = (pair.delta, pair.abs_delta());
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 } * pair.sign() as f64;
    let top = max_mode(pair, f.c_minus.keys());
    let cap = cfg.modes.map_or(top, |c| c.min(top));
    let c3 = cfg.constants().c3;
    let zc = z.to_c();
    let mut acc = C64::zero();
    let mut tail = 0.0;
    for m in 1..=top {
        let (n, h) = mode_index(pair, m);
        let c = f.c_minus(n, h);
        if c.is_zero() {
            continue;
        }
        let mf = m as f64;
        let shift = 4.0 * PI * mf * z.y;
        if m > cap {
            let r = (-2.0 * PI * mf * z.y).exp();
            let real = |kappa: i32| polylog(kappa, C64::from(r)).map(|v| v.re);
            let mut bound = real(k as i32)?;
            let mut coeff = 1.0;
            for j in 0..2 * k - 1 {
                if j > 0 {
                    coeff *= shift / j as f64;
                }
                bound += coeff * real(k as i32 - j as i32)?;
            }
            tail += c3.norm() * c.norm() * ad as f64 * bound;
            continue;
        }
        let mut inner = C64::zero();
        for b in 0..ad {
            let chi = kronecker(delta, b);
            if chi == 0 {
                continue;
            }
            let bd = b as f64 / delta as f64;
            let s1 = ec(mf * zc + bd);
            let w = ec(-(mf * zc.conj() - bd));
            let li = polylog(k as i32, s1)?;
            let shifted = shifted_incomplete_polylog_scaled(2 * k - 1, 1 - k as i32, shift, w)?;
            inner += chi as f64 * (li + sign * shifted);
        }
        acc += c * inner;
    }
    Ok((c3 * acc, tail))
}

/// Correction below the semicircular walls met on the way up to the cusp.
///
/// For each principal-part coefficient `c⁺(m, h)` and each `λ` of discriminant
/// `−4N|Δ|m` in the coset `rh` with `c > 0` whose semicircle contains `z`, this adds
/// `2√(2|Δ|)·c⁺(m,h)·χ_Δ(λ)·q_z(λ)^{k−1}`, halved when `z` lies on the semicircle.
pub fn chamber_correction(z: PointH, f: &HarmonicMaassInput, cfg: &LiftConfig) -> (C64, Vec<ChamberTerm>) {
    let pair = &cfg.pair;
    let chi = GenusCharacter::new(*pair);
    let pre = 2.0 * (2.0 * pair.abs_delta() as f64).sqrt();
    let zc = z.to_c();
    let mut terms = Vec::new();
    let mut acc = C64::zero();
    for (m, h, c) in f.principal_part() {
        let d = wall_disc(pair, m);
        let coset = (pair.r * h).rem_euclid(2 * pair.level);
        for l in semicircles_containing(z, pair.level, d, coset) {
            if l.c <= 0 {
                continue;
            }
            let x = chi.eval(&l);
            if x == 0 {
                continue;
            }
            let weight = if p_z(&l, z).abs() < WALL_TOL { 0.5 } else { 1.0 };
            let value = pre * weight * c * x as f64 * q_z(&l, zc).powu(cfg.k - 1);
            acc += value;
            terms.push(ChamberTerm { lambda: l, m, h, weight, value });
        }
    }
    (acc, terms)
}

/// `Φ_{Δ,r,k}(z, f)`.
pub fn phi(z: PointH, f: &HarmonicMaassInput, cfg: &LiftConfig) -> Result<PhiValue> {
    cfg.check(f)?;
    if f.n0().is_negative() {
        return Ok(PhiValue {
            value: C64::zero(),
            terms: PhiTerms::default(),
            tail: 0.0,
            chamber: Vec::new(),
            on_wall: false,
        });
    }
    let constant = constant_term(f, cfg)?;
    let (bernoulli, vertical) = bernoulli_family(z, f, cfg);
    let (polylog, tail) = polylog_family(z, f, cfg)?;
    let (chamber, terms) = chamber_correction(z, f, cfg);
    let on_wall = vertical || terms.iter().any(|t| t.weight < 1.0);
    let terms_sum = PhiTerms { constant, bernoulli, polylog, chamber };
    Ok(PhiValue { value: constant + bernoulli + polylog + chamber, terms: terms_sum, tail, chamber: terms, on_wall })
}

/// `Φ_{W₁}(z) − Φ_{W₂}(z)` across the wall of `λ_wall` at a point `z` on it,
/// where `W₁` is the side on which `p_z(λ_wall) > 0`.
pub fn wall_jump(lambda: &LatticeVector, f: &HarmonicMaassInput, cfg: &LiftConfig, z: PointH) -> Result<C64> {
    cfg.check(f)?;
    let pair = &cfg.pair;
    if lambda.level != pair.level {
        return Err(Error::LevelMismatch(lambda.level, pair.level));
    }
    if lambda.disc() <= 0 {
        return Err(Error::InvalidArgument(format!("{lambda} does not define a wall")));
    }
    let g = gcd(gcd(lambda.a, lambda.b), lambda.c).abs();
    let prim = LatticeVector::new(lambda.a / g, lambda.b / g, lambda.c / g, lambda.level);
    let d0 = prim.disc();
    let chi = GenusCharacter::new(*pair);
    let zc = z.to_c();
    let mut acc = C64::zero();
    for (m, h, c) in f.principal_part() {
        let d = wall_disc(pair, m);
        if d % d0 != 0 || !is_square(d / d0) {
            continue;
        }
        let t = ((d / d0) as f64).sqrt().round() as i64;
        let l = prim.scale(t);
        if l.coset() != (pair.r * h).rem_euclid(2 * pair.level) {
            continue;
        }
        acc += c * chi.eval(&l) as f64 * q_z(&l, zc).powu(cfg.k - 1);
    }
    Ok(2.0 * (2.0 * pair.abs_delta() as f64).sqrt() * acc)
}

/// Constant term of `½ξ_{2−2k}Φ`, nonzero only for `k = 1`, `Δ = 1`:
/// `(√2/i)Σ_m m·conj(c⁺(−m²/4N, rm))`.
pub fn xi_phi_constant(f: &HarmonicMaassInput, cfg: &LiftConfig) -> C64 {
    if cfg.k != 1 || cfg.pair.delta != 1 {
        return C64::zero();
    }
    let top = max_mode(&cfg.pair, f.c_plus.keys());
    let s: C64 = (1..=top)
        .map(|m| {
            let (n, h) = mode_index(&cfg.pair, m);
            m as f64 * f.c_plus(n, h).conj()
        })
        .sum();
    2f64.sqrt() / I * s
}

/// Fourier coefficient of `e(Mz)` in `½ξ_{2−2k}Φ`, for `M ≥ 1`.
pub fn xi_phi_coeff(f: &HarmonicMaassInput, cfg: &LiftConfig, big_m: i64) -> C64 {
    let pair = &cfg.pair;
    let k = cfg.k as i32;
    let half_c4 = 0.5 * cfg.constants().c4;
    let mut acc = C64::zero();
    for d in divisors(big_m) {
        let chi = kronecker(pair.delta, d);
        if chi == 0 {
            continue;
        }
        let (n, h) = mode_index(pair, big_m / d);
        let c = f.c_minus(n, h);
        if c.is_zero() {
            continue;
        }
        acc += chi as f64 * (big_m as f64).powi(2 * k - 1) / (d as f64).powi(k) * c.conj();
    }
    half_c4 * acc
}

/// `½ξ_{2−2k}Φ(z, f)`, the Shimura lift of the shadow of `f`, as a holomorphic `q`-series.
pub fn xi_phi_expansion(z: PointH, f: &HarmonicMaassInput, cfg: &LiftConfig) -> Result<C64> {
    cfg.check(f)?;
    let pair = &cfg.pair;
    let k = cfg.k as i32;
    let half_c4 = 0.5 * cfg.constants().c4;
    let zc = z.to_c();
    let top = max_mode(pair, f.c_minus.keys());
    let mut acc = C64::zero();
    // Σ_m c⁻(mode m) Σ_d (Δ/d) (md)^{2k−1}/d^k e(mdz), grouped by the mode m = M/d
    for m in 1..=top {
        let (n, h) = mode_index(pair, m);
        let c = f.c_minus(n, h);
        if c.is_zero() {
            continue;
        }
        let mut inner = C64::zero();
        for d in 1.. {
            let big = (m * d) as f64;
            let mag = big.powi(2 * k - 1) / (d as f64).powi(k) * (-2.0 * PI * big * z.y).exp();
            if d > 1 && mag < cfg.tol * inner.norm().max(f64::MIN_POSITIVE) {
                break;
            }
            let chi = kronecker(pair.delta, d);
            if chi != 0 {
                inner += chi as f64 * big.powi(2 * k - 1) / (d as f64).powi(k) * ec(big * zc);
            }
        }
        acc += c.conj() * inner;
    }
    Ok(half_c4 * acc + xi_phi_constant(f, cfg))
}

/// Coefficient of `e(mz)` in the Shimura lift of a cusp form of weight `k + 1/2`.
pub fn shimura_coeff(a: &VectorCuspForm, m: i64, cfg: &LiftConfig) -> Result<C64> {
    if m < 1 {
        return Err(Error::InvalidArgument(format!("Shimura coefficient index {m} < 1")));
    }
    if a.level != cfg.pair.level || a.k != cfg.k {
        return Err(Error::InvalidArgument("cusp form does not match the lift configuration".into()));
    }
    let pair = &cfg.pair;
    let mut acc = C64::zero();
    for d in divisors(m) {
        let chi = kronecker(pair.delta, d);
        if chi == 0 {
            continue;
        }
        let q = m / d;
        let n = Ratio::new(q * q * pair.abs_delta(), 4 * pair.level);
        acc += chi as f64 * (d as f64).powi(cfg.k as i32 - 1) * a.coeff(n, pair.r * q);
    }
    Ok(cfg.constants().c5 * acc)
}

/// Constant term of the Shimura lift of `ξf` for `k = 1`, `Δ = 1`, read off the principal part of `f`.
pub fn shimura_constant(f: &HarmonicMaassInput, cfg: &LiftConfig) -> C64 {
    xi_phi_constant(f, cfg)
}

#[derive(Debug, Clone, PartialEq)]
pub struct ShintaniValue {
    pub value: C64,
    /// Accumulated quadrature and truncation error.
    pub error: f64,
    /// Orbit representatives used, with their genus character.
    pub orbits: Vec<(LatticeVector, i64)>,
}

/// Shintani coefficient `√(|Δ|/2)·Σ χ_Δ(λ)∫_{C_λ} g(z) q_z(λ)^{k−1} dz` over the
/// Γ₀(N)-classes of discriminant `−4N|Δ|m` in the coset `rh`.
pub fn shintani_coeff(g: &CuspForm, m: Ratio<i64>, h: i64, cfg: &LiftConfig) -> Result<ShintaniValue> {
    let pair = &cfg.pair;
    if !m.is_negative() {
        return Err(Error::InvalidArgument(format!("Shintani index {m} must be negative")));
    }
    if !(m + Ratio::new(pair.sign() * h * h, 4 * pair.level)).is_integer() {
        return Err(Error::SupportViolation { n: m.to_string(), h });
    }
    let d = wall_disc(pair, m);
    let coset = (pair.r * h).rem_euclid(2 * pair.level);
    let chi = GenusCharacter::new(*pair);
    let mut value = C64::zero();
    let mut error = 0.0;
    let mut orbits = Vec::new();
    for l in orbit_reps(pair.level, d, coset)? {
        let x = chi.eval(&l);
        orbits.push((l, x));
        if x == 0 {
            continue;
        }
        let ci = cycle_integral(g, &l, cfg.k, &cfg.quad)?;
        value += x as f64 * ci.value;
        error += ci.error;
    }
    let pre = (pair.abs_delta() as f64 / 2.0).sqrt() * cfg.shintani_scale;
    Ok(ShintaniValue { value: pre * value, error: pre.norm() * error, orbits })
}
