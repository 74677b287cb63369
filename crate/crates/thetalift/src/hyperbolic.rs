//! The upper half-plane as the Grassmannian of negative lines: the projections `p_z`, `q_z`,
//! geodesics, Weyl-chamber bookkeeping and geodesic cycle integrals.

use std::cell::Cell;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use num_traits::Zero;

use crate::arith::{DiscriminantPair, C64, I};
use crate::error::{Error, Result};
use crate::lattice::{
    is_square, stabilizer_generator, GenusCharacter, LatticeVector, OrbitSet, Stabilizer,
};
use crate::quad::{integrate, QuadParams};
use crate::weilrep::{CuspForm, HarmonicMaassInput};

/// Tolerance below which `|p_z(λ)|` counts as lying on the wall of λ.
pub const WALL_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointH {
    pub x: f64,
    pub y: f64,
}

impl PointH {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !(y > 0.0) || !x.is_finite() || !y.is_finite() {
            return Err(Error::InvalidArgument(format!("({x}, {y}) is not in the upper half-plane")));
        }
        Ok(Self { x, y })
    }

    pub fn from_c(z: C64) -> Result<Self> {
        Self::new(z.re, z.im)
    }

    pub fn to_c(self) -> C64 {
        C64::new(self.x, self.y)
    }
}

impl fmt::Display for PointH {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.x, self.y)
    }
}

/// A real vector `(a, b, c) ↔ (b/2N, −a/N; c, −b/2N)` of `V(R)` at level `N`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealVector {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub level: i64,
}

impl RealVector {
    /// `(λ, μ) = bb′/2N − ac′ − ca′`.
    pub fn pairing(&self, o: &RealVector) -> f64 {
        let n = self.level as f64;
        self.b * o.b / (2.0 * n) - self.a * o.c - self.c * o.a
    }

    pub fn from_lattice(l: &LatticeVector) -> Self {
        Self { a: l.a as f64, b: l.b as f64, c: l.c as f64, level: l.level }
    }
}

/// `λ(z) = (1/(√(2N) y))·(−x, x² + y²; −1, x)`, normalized so that `(λ(z), λ(z)) = −1`.
pub fn special_point_vector(z: PointH, level: i64) -> RealVector {
    let n = level as f64;
    let s = 1.0 / ((2.0 * n).sqrt() * z.y);
    RealVector { a: -n * (z.x * z.x + z.y * z.y) * s, b: -2.0 * n * z.x * s, c: -s, level }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PqValues {
    /// `p_z(λ) = −(λ, λ(z))`.
    pub p: f64,
    /// `q_z(λ) = −(cNz² − bz + a)/√(2N)`.
    pub q: C64,
    /// `Q(λ_z) = −p²/2`.
    pub q_lz: f64,
    /// `Q(λ_{z⊥}) = |q|²/(2y²)`.
    pub q_lzperp: f64,
}

pub fn p_z(l: &LatticeVector, z: PointH) -> f64 {
    let n = l.level as f64;
    let (a, b, c) = (l.a as f64, l.b as f64, l.c as f64);
    -(c * n * (z.x * z.x + z.y * z.y) - b * z.x + a) / ((2.0 * n).sqrt() * z.y)
}

pub fn q_z(l: &LatticeVector, z: C64) -> C64 {
    let n = l.level as f64;
    let (a, b, c) = (l.a as f64, l.b as f64, l.c as f64);
    -(c * n * z * z - b * z + a) / (2.0 * n).sqrt()
}

/// The majorant `Q_z(λ) = Q(λ_{z⊥}) − Q(λ_z)`.
pub fn majorant(l: &LatticeVector, z: PointH) -> f64 {
    let n = l.level as f64;
    let (a, b, c) = (l.a as f64, l.b as f64, l.c as f64);
    let (x, y) = (z.x, z.y);
    let t = a - b * x + c * n * x * x;
    let s = b - 2.0 * c * n * x;
    t * t / (2.0 * n * y * y) + n * c * c * y * y / 2.0 + s * s / (4.0 * n)
}

pub fn pq_values(l: &LatticeVector, z: PointH) -> PqValues {
    let p = p_z(l, z);
    let q = q_z(l, z.to_c());
    PqValues { p, q, q_lz: -p * p / 2.0, q_lzperp: q.norm_sqr() / (2.0 * z.y * z.y) }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GeodesicKind {
    Vertical { x0: f64 },
    Semicircle { center: f64, radius: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicDescriptor {
    pub source: LatticeVector,
    pub kind: GeodesicKind,
    /// `+1` for counterclockwise semicircles (or upward vertical lines).
    pub orientation: i8,
}

/// The geodesic `D_λ = {z : cN|z|² − bx + a = 0}` of a vector with `Q(λ) > 0`.
pub fn geodesic(l: &LatticeVector) -> Result<GeodesicDescriptor> {
    let d = l.disc();
    if d <= 0 {
        return Err(Error::InvalidArgument(format!("{l} has Q <= 0 and no geodesic")));
    }
    let n = l.level as f64;
    let kind = if l.c == 0 {
        GeodesicKind::Vertical { x0: l.a as f64 / l.b as f64 }
    } else {
        GeodesicKind::Semicircle {
            center: l.b as f64 / (2.0 * l.c as f64 * n),
            radius: (d as f64).sqrt() / (2.0 * (l.c as f64).abs() * n),
        }
    };
    let key = if l.a != 0 {
        l.a
    } else if l.c != 0 {
        l.c
    } else {
        l.b
    };
    Ok(GeodesicDescriptor { source: *l, kind, orientation: key.signum() as i8 })
}

/// The sign of `p_z(λ)`, zero on the wall.
pub fn side(l: &LatticeVector, z: PointH) -> i8 {
    let p = p_z(l, z);
    if p.abs() < WALL_TOL {
        0
    } else {
        p.signum() as i8
    }
}

/// A wall of `Z′_{Δ,r}(f)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Wall {
    pub lambda: LatticeVector,
    /// `c⁺(m, h)·χ_Δ(λ)`.
    pub weight: C64,
    pub m: Ratio<i64>,
    pub h: i64,
    /// Index and representative of the Γ₀(N)-orbit of λ.
    pub orbit: (usize, LatticeVector),
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct SingularSet {
    pub walls: Vec<Wall>,
}

impl SingularSet {
    pub fn is_empty(&self) -> bool {
        self.walls.is_empty()
    }
}

/// Discriminant `b² − 4Nac = −4N|Δ|m` of the vectors carrying the wall of index `m < 0`.
pub fn wall_disc(pair: &DiscriminantPair, m: Ratio<i64>) -> i64 {
    let d = -m * 4 * pair.level * pair.abs_delta();
    debug_assert!(d.is_integer());
    d.to_integer()
}

/// All walls with `|a|, |b|, |c| ≤ bound` from the principal part of `f`.
pub fn singular_set(f: &HarmonicMaassInput, bound: i64) -> Result<SingularSet> {
    let pair = f.pair;
    let level = pair.level;
    let chi = GenusCharacter::new(pair);
    let mut orbit_sets: BTreeMap<(i64, i64), OrbitSet> = BTreeMap::new();
    let mut walls = Vec::new();
    for (m, h, c) in f.principal_part() {
        let d = wall_disc(&pair, m);
        let coset = (pair.r * h).rem_euclid(2 * level);
        for l in crate::lattice::enumerate(level, d, coset, bound) {
            let x = chi.eval(&l);
            if x == 0 {
                continue;
            }
            if !orbit_sets.contains_key(&(d, coset)) {
                orbit_sets.insert((d, coset), OrbitSet::build(level, d, coset)?);
            }
            let set = &orbit_sets[&(d, coset)];
            let idx = set
                .classify(&l)
                .ok_or_else(|| Error::OrbitBound(format!("could not classify {l}")))?;
            walls.push(Wall { lambda: l, weight: c * x as f64, m, h, orbit: (idx, set.reps[idx]) });
        }
    }
    Ok(SingularSet { walls })
}

/// Semicircular walls of the set met by the vertical ray from `z` to `i∞`, with the side of `z`.
pub fn walls_crossed(z: PointH, s: &SingularSet) -> Vec<(LatticeVector, i8)> {
    s.walls
        .iter()
        .filter(|w| w.lambda.c != 0 && inside_or_on(&w.lambda, z))
        .map(|w| (w.lambda, side(&w.lambda, z)))
        .collect()
}

fn inside_or_on(l: &LatticeVector, z: PointH) -> bool {
    // p_z(λ)·sgn(c) ≥ 0 exactly when z lies inside or on the semicircle
    p_z(l, z) * (l.c.signum() as f64) > -WALL_TOL
}

/// Every `λ` with `b² − 4Nac = d`, `b ≡ h (mod 2N)`, `c ≠ 0`, whose semicircle contains `z`
/// or passes through it.
pub fn semicircles_containing(z: PointH, level: i64, d: i64, h: i64) -> Vec<LatticeVector> {
    let mut out = Vec::new();
    if d <= 0 {
        return out;
    }
    let n = level as f64;
    let sd = (d as f64).sqrt();
    let cmax = (sd / (2.0 * n * z.y) * (1.0 + 1e-12)).floor() as i64;
    let two_n = 2 * level;
    for c in (-cmax..=cmax).filter(|&c| c != 0) {
        let ca = c.abs() as f64;
        let rho = sd / (2.0 * ca * n);
        let slack = 1e-9;
        let lo = (2.0 * c as f64 * n * (z.x - rho - slack)).min(2.0 * c as f64 * n * (z.x + rho + slack)).floor() as i64;
        let hi = (2.0 * c as f64 * n * (z.x - rho - slack)).max(2.0 * c as f64 * n * (z.x + rho + slack)).ceil() as i64;
        let start = lo + (h - lo).rem_euclid(two_n);
        let mut b = start;
        while b <= hi {
            let num = b * b - d;
            let den = 4 * level * c;
            if num % den == 0 {
                let l = LatticeVector::new(num / den, b, c, level);
                if inside_or_on(&l, z) {
                    out.push(l);
                }
            }
            b += two_n;
        }
    }
    out.sort();
    out
}

/// Parametrization used for a cycle integral.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleScheme {
    /// `z = x₀ + ρe^{iθ}` on semicircles, `z = x₀ + iy` with `y = e^t` on vertical lines.
    ArcAngle,
    /// Hyperbolic arclength `z = x₀ + ρ(tanh s + i sech s)`, or `y = tan φ` on vertical lines.
    Arclength,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleIntegral {
    pub value: C64,
    /// Quadrature error estimate plus the cusp-form truncation bound along the path.
    pub error: f64,
    pub evals: usize,
}

/// `∫_{C_λ} g(z) q_z(λ)^{k−1} dz` with the arc-angle scheme and the default base point.
pub fn cycle_integral(g: &CuspForm, l: &LatticeVector, k: u32, quad: &QuadParams) -> Result<CycleIntegral> {
    cycle_integral_with(g, l, k, CycleScheme::ArcAngle, None, quad)
}

/// Cycle integral with an explicit scheme and base point.
///
/// For nonsquare `D` the path runs along `D_λ` from `z₀` to `γz₀`, with `γ` the
/// stabilizer generator; by default `z₀` is placed so that the arc is centred on the
/// apex. For square `D` the integral is improper over the whole geodesic in the
/// direction of its orientation, and needs level 1.
pub fn cycle_integral_with(
    g: &CuspForm,
    l: &LatticeVector,
    k: u32,
    scheme: CycleScheme,
    base: Option<PointH>,
    quad: &QuadParams,
) -> Result<CycleIntegral> {
    if g.level != l.level {
        return Err(Error::LevelMismatch(g.level, l.level));
    }
    if g.weight != 2 * k {
        return Err(Error::InvalidArgument(format!("cusp form of weight {} for k = {k}", g.weight)));
    }
    let desc = geodesic(l)?;
    if g.coeffs.values().all(|a| a.is_zero()) {
        return Ok(CycleIntegral { value: C64::zero(), error: 0.0, evals: 0 });
    }
    let tail = Cell::new(0.0f64);
    let integrand = |z: C64, dz: C64| -> C64 {
        if !(z.im > 0.0) {
            return C64::zero();
        }
        let (v, t) = g.eval(z);
        let w = q_z(l, z).powu(k - 1) * dz;
        tail.set(tail.get().max(t * w.norm()));
        v * w
    };
    let d = l.disc();
    let (value, error, evals, span) = if !is_square(d) {
        let GeodesicKind::Semicircle { center, radius } = desc.kind else {
            unreachable!("nonsquare discriminants give semicircles")
        };
        let Stabilizer::Generator(gamma) = stabilizer_generator(l)? else {
            unreachable!("nonsquare discriminants have hyperbolic stabilizers")
        };
        let s_of = |z: C64| ((z.re - center) / radius).clamp(-1.0, 1.0).atanh();
        let z_of = |s: f64| C64::new(center + radius * s.tanh(), radius / s.cosh());
        let shift = s_of(gamma.apply(z_of(0.0)));
        let s0 = match base {
            Some(p) => s_of(p.to_c()),
            None => -shift / 2.0,
        };
        let s1 = s0 + shift;
        let r = match scheme {
            CycleScheme::ArcAngle => {
                let th = |s: f64| s.tanh().clamp(-1.0, 1.0).acos();
                integrate(
                    |t| {
                        let e = C64::from_polar(1.0, t);
                        integrand(center + radius * e, I * radius * e)
                    },
                    th(s0),
                    th(s1),
                    quad,
                )?
            }
            CycleScheme::Arclength => integrate(
                |s| {
                    let (sh, ch) = (s.tanh(), 1.0 / s.cosh());
                    integrand(z_of(s), C64::new(radius * ch * ch, -radius * ch * sh))
                },
                s0,
                s1,
                quad,
            )?,
        };
        (r.value, r.error, r.evals, (s1 - s0).abs().max(1.0))
    } else {
        if g.level != 1 {
            return Err(Error::InvalidArgument(
                "improper cycle integrals need cusp-form values at every cusp (level 1 only)".into(),
            ));
        }
        let sign = desc.orientation as f64;
        match (desc.kind, scheme) {
            (GeodesicKind::Semicircle { center, radius }, CycleScheme::ArcAngle) => {
                let f = |t: f64| {
                    let e = C64::from_polar(1.0, t);
                    integrand(center + radius * e, I * radius * e)
                };
                let (lo, hi) = trim(&f, 0.0, std::f64::consts::PI);
                let r = integrate(f, lo, hi, quad)?;
                (r.value * sign, r.error, r.evals, std::f64::consts::PI)
            }
            (GeodesicKind::Semicircle { center, radius }, CycleScheme::Arclength) => {
                // counterclockwise runs from s = +∞ to s = −∞
                let f = |s: f64| {
                    let (sh, ch) = (s.tanh(), 1.0 / s.cosh());
                    integrand(C64::new(center + radius * sh, radius * ch), C64::new(radius * ch * ch, -radius * ch * sh))
                };
                let (lo, hi) = trim(&f, -40.0, 40.0);
                let r = integrate(f, lo, hi, quad)?;
                (-r.value * sign, r.error, r.evals, hi - lo)
            }
            (GeodesicKind::Vertical { x0 }, CycleScheme::ArcAngle) => {
                let f = |t: f64| {
                    let y = t.exp();
                    integrand(C64::new(x0, y), I * y)
                };
                let (lo, hi) = trim(&f, -40.0, 10.0);
                let r = integrate(f, lo, hi, quad)?;
                (r.value * sign, r.error, r.evals, hi - lo)
            }
            (GeodesicKind::Vertical { x0 }, CycleScheme::Arclength) => {
                let f = |phi: f64| {
                    let y = phi.tan();
                    let c = phi.cos();
                    integrand(C64::new(x0, y), I / (c * c))
                };
                let (lo, hi) = trim(&f, 0.0, std::f64::consts::FRAC_PI_2);
                let r = integrate(f, lo, hi, quad)?;
                (r.value * sign, r.error, r.evals, hi - lo)
            }
        }
    };
    Ok(CycleIntegral { value, error: error + tail.get() * span, evals })
}

/// Shrinks `[lo, hi]` at both ends to where the integrand is negligible against its peak,
/// for integrands vanishing at the endpoints.
fn trim(f: &impl Fn(f64) -> C64, lo: f64, hi: f64) -> (f64, f64) {
    const SAMPLES: usize = 400;
    let step = (hi - lo) / SAMPLES as f64;
    let vals: Vec<f64> = (0..=SAMPLES).map(|i| f(lo + step * i as f64).norm()).collect();
    let peak = vals.iter().copied().fold(0.0, f64::max);
    if peak == 0.0 {
        return (lo, hi);
    }
    let cut = peak * 1e-18;
    let first = vals.iter().position(|&v| v > cut).unwrap_or(0);
    let last = vals.iter().rposition(|&v| v > cut).unwrap_or(SAMPLES);
    let a = lo + step * first.saturating_sub(1) as f64;
    let b = lo + step * (last + 1).min(SAMPLES) as f64;
    (a, b)
}
