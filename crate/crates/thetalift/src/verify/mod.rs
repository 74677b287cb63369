//! Finite-difference operators, quadrature oracles for the Fourier-transform and
//! integral identities, and the named verification suites.

mod inputs;
mod suites;

pub use inputs::synthetic_inputs;
pub use suites::{run_all, run_suite, SuiteConfig, SUITES};

use std::f64::consts::PI;
use std::fmt;

use crate::arith::{e, ec, factorial, hermite, hermite_c, incomplete_gamma, C64, I};
use crate::error::{Error, Result};
use crate::quad::{integrate, integrate_to_infinity, QuadParams};

/// A finite-difference value with its step-refinement error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdValue {
    pub value: C64,
    pub estimate: f64,
}

/// Base step `1e−3·max(1, |τ|)`.
pub fn default_step(tau: C64) -> f64 {
    1e-3 * tau.norm().max(1.0)
}

struct Partials {
    f0: C64,
    fu: FdValue,
    fv: FdValue,
    fuu: FdValue,
    fvv: FdValue,
}

fn richardson(coarse: C64, fine: C64) -> FdValue {
    let value = (4.0 * fine - coarse) / 3.0;
    FdValue { value, estimate: (value - fine).norm() }
}

/// Central differences at steps `h` and `h/2` along `u` and `v`, with one Richardson level.
fn partials<F: Fn(C64) -> Result<C64>>(f: &F, tau: C64, h: f64) -> Result<Partials> {
    if !(h > 0.0) || !(tau.im - h > 0.0) {
        return Err(Error::InvalidArgument(format!("stencil of step {h} at {tau} leaves the upper half-plane")));
    }
    let f0 = f(tau)?;
    let mut first = [[C64::default(); 2]; 2];
    let mut second = [[C64::default(); 2]; 2];
    for (axis, dir) in [C64::new(1.0, 0.0), I].into_iter().enumerate() {
        for (lvl, s) in [h, 0.5 * h].into_iter().enumerate() {
            let p = f(tau + dir * s)?;
            let m = f(tau - dir * s)?;
            first[axis][lvl] = (p - m) / (2.0 * s);
            second[axis][lvl] = (p - 2.0 * f0 + m) / (s * s);
        }
    }
    Ok(Partials {
        f0,
        fu: richardson(first[0][0], first[0][1]),
        fv: richardson(first[1][0], first[1][1]),
        fuu: richardson(second[0][0], second[0][1]),
        fvv: richardson(second[1][0], second[1][1]),
    })
}

/// `∂F/∂τ̄ = ½(∂_u + i∂_v)F`.
pub fn fd_dbar<F: Fn(C64) -> Result<C64>>(f: F, tau: C64, step: f64) -> Result<FdValue> {
    let p = partials(&f, tau, step)?;
    Ok(FdValue { value: 0.5 * (p.fu.value + I * p.fv.value), estimate: 0.5 * (p.fu.estimate + p.fv.estimate) })
}

/// `∂F/∂τ = ½(∂_u − i∂_v)F`.
pub fn fd_dtau<F: Fn(C64) -> Result<C64>>(f: F, tau: C64, step: f64) -> Result<FdValue> {
    let p = partials(&f, tau, step)?;
    Ok(FdValue { value: 0.5 * (p.fu.value - I * p.fv.value), estimate: 0.5 * (p.fu.estimate + p.fv.estimate) })
}

/// `ξ_κF = 2i v^κ conj(∂F/∂τ̄)`.
pub fn fd_xi<F: Fn(C64) -> Result<C64>>(f: F, kappa: f64, tau: C64, step: f64) -> Result<FdValue> {
    let d = fd_dbar(f, tau, step)?;
    let s = tau.im.powf(kappa);
    Ok(FdValue { value: 2.0 * I * s * d.value.conj(), estimate: 2.0 * s * d.estimate })
}

/// `Δ_κF = −v²(F_uu + F_vv) + iκv(F_u + iF_v)`.
pub fn fd_laplacian<F: Fn(C64) -> Result<C64>>(kappa: f64, f: F, tau: C64, step: f64) -> Result<FdValue> {
    let p = partials(&f, tau, step)?;
    let v = tau.im;
    let value = -v * v * (p.fuu.value + p.fvv.value) + I * kappa * v * (p.fu.value + I * p.fv.value);
    let estimate = v * v * (p.fuu.estimate + p.fvv.estimate) + kappa.abs() * v * (p.fu.estimate + p.fv.estimate);
    Ok(FdValue { value, estimate })
}

/// Raising operator `R_w F = 2i ∂F/∂τ + (w/v)F`.
pub fn fd_raise<F: Fn(C64) -> Result<C64>>(f: F, weight: f64, tau: C64, step: f64) -> Result<FdValue> {
    let p = partials(&f, tau, step)?;
    let dt = 0.5 * (p.fu.value - I * p.fv.value);
    Ok(FdValue { value: 2.0 * I * dt + weight / tau.im * p.f0, estimate: p.fu.estimate + p.fv.estimate })
}

/// Lowering operator `L F = −2i v² ∂F/∂τ̄`.
pub fn fd_lower<F: Fn(C64) -> Result<C64>>(f: F, tau: C64, step: f64) -> Result<FdValue> {
    let d = fd_dbar(f, tau, step)?;
    let v2 = tau.im * tau.im;
    Ok(FdValue { value: -2.0 * I * v2 * d.value, estimate: 2.0 * v2 * d.estimate })
}

/// Model function `v^{−κ/2}H_κ(a√v)e^{ia²τ/2}`, the shape of each term of Ξ_κ(τ, 0, 0, 0).
pub fn hermite_model(kappa: u32, a: f64, tau: C64) -> C64 {
    let v = tau.im;
    v.powf(-(kappa as f64) / 2.0) * hermite(kappa, a * v.sqrt()) * (I * a * a * tau / 2.0).exp()
}

/// Quadrature value of a Fourier transform with its error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FtValue {
    pub value: C64,
    pub error: f64,
}

/// Largest ratio `|f(edge)|/max|f|` accepted by [`numeric_fourier_transform`].
pub const DECAY_RATIO: f64 = 1e-15;

/// `f̂(ξ) = ∫ f(x)e(ξx) dx` over `window`, which must hold the support of `f` up to [`DECAY_RATIO`].
pub fn numeric_fourier_transform(
    f: impl Fn(f64) -> C64,
    xi: f64,
    window: (f64, f64),
    quad: &QuadParams,
) -> Result<FtValue> {
    let (a, b) = window;
    if !(a < b) {
        return Err(Error::InvalidArgument(format!("empty window [{a}, {b}]")));
    }
    let samples = 512;
    let peak = (0..=samples).map(|i| f(a + (b - a) * i as f64 / samples as f64).norm()).fold(0.0, f64::max);
    let edge = f(a).norm().max(f(b).norm());
    if edge > DECAY_RATIO * peak {
        return Err(Error::Divergence(format!(
            "insufficient decay: |f| = {edge:.3e} at the window edge against peak {peak:.3e}"
        )));
    }
    let r = integrate(|x| f(x) * e(xi * x), a, b, quad)?;
    Ok(FtValue { value: r.value, error: r.error + 2.0 * edge * (b - a).max(1.0) })
}

/// Parameters of `(G + Fx)(E + Dx)^{k−1}e(Ax² + Bx + C)` with `Im A > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussParams {
    pub a: C64,
    pub b: C64,
    pub c: C64,
    pub d: C64,
    pub e: C64,
    pub f: C64,
    pub g: C64,
}

impl GaussParams {
    pub fn integrand(&self, k: u32, x: f64) -> C64 {
        (self.g + self.f * x) * (self.e + self.d * x).powu(k - 1) * ec(self.a * x * x + self.b * x + self.c)
    }

    /// Half-width past which `|e(Ax² + Bx)|` times a degree-`k` polynomial is below `1e−19`.
    pub fn window(&self) -> f64 {
        let qa = self.a.im;
        let qb = self.b.im.abs();
        let l = (45.0 + 15.0) / (2.0 * PI);
        (qb + (qb * qb + 4.0 * qa * l).sqrt()) / (2.0 * qa) + 1.0
    }
}

/// Closed form of the Fourier transform of `(G + Fx)(E + Dx)^{k−1}e(Ax² + Bx + C)`:
/// `√(i/2A)^k (Di/2√π)^{k−1} Σ_{j=0,1} (G − F(ξ+B)/2A)^{1−j}(F(k−1)/(is))^j H_{k−1−j}(is((ξ+B)/2A − E/D))·e(C − (ξ+B)²/4A)`
/// with `s = √(−2πiA)`.
pub fn ft_closed_form(k: u32, p: &GaussParams, xi: f64) -> C64 {
    let s = (-2.0 * PI * p.a * I).sqrt();
    let pre = (I / (2.0 * p.a)).sqrt().powu(k) * (p.d * I / (2.0 * PI.sqrt())).powu(k - 1);
    let shift = (xi + p.b) / (2.0 * p.a);
    let mut tot = C64::default();
    for j in 0..2u32 {
        if k < 1 + j {
            continue;
        }
        let lead = if j == 0 { p.g - p.f * shift } else { p.f * (k - 1) as f64 / (I * s) };
        tot += lead * hermite_c(k - 1 - j, I * s * (shift - p.e / p.d));
    }
    pre * tot * ec(p.c - (xi + p.b) * (xi + p.b) / (4.0 * p.a))
}

/// `∫₀^∞ t^r H_n(t)e^{−t²} dt = r!/(2(r−n)!)·Γ((r−n+1)/2)` for `r ≥ n`.
pub fn hermite_moment_closed(r: u32, n: u32) -> f64 {
    factorial(r) / (2.0 * factorial(r - n)) * statrs::function::gamma::gamma((r - n + 1) as f64 / 2.0)
}

pub fn hermite_moment_quad(r: u32, n: u32, quad: &QuadParams) -> Result<f64> {
    Ok(integrate(|t| C64::from(t.powi(r as i32) * hermite(n, t) * (-t * t).exp()), 0.0, 40.0, quad)?.value.re)
}

/// `v^{−κ/2} Σ_{j=0,1} H_{κ−j}(−α/√v + β√v)(κ√v/α)^j e^{−α²/v}/v²`.
pub fn hermite_kernel(kappa: u32, alpha: f64, beta: f64, v: f64) -> f64 {
    if v <= 0.0 || alpha * alpha / v > 700.0 {
        return 0.0;
    }
    let sv = v.sqrt();
    let x = -alpha / sv + beta * sv;
    let mut s = hermite(kappa, x);
    if kappa >= 1 {
        s += hermite(kappa - 1, x) * kappa as f64 * sv / alpha;
    }
    v.powf(-(kappa as f64) / 2.0) * s * (-alpha * alpha / v).exp() / (v * v)
}

/// `∫₀^∞ hermite_kernel dv = e^{−2αβ}Γ(κ+1, −2αβ)/(−α)^{κ+2}`.
pub fn gamma_kernel_closed(kappa: u32, alpha: f64, beta: f64) -> Result<f64> {
    let x = -2.0 * alpha * beta;
    Ok(x.exp() * incomplete_gamma(kappa as f64 + 1.0, x)? / (-alpha).powi(kappa as i32 + 2))
}

/// The same integral weighted by `Γ(κ + 1/2, β²v)`:
/// `(−1)^κ(2κ)!√π/(4^κα^{κ+2})e^{−2αβ}` for `β > 0` and
/// `(−1)^κ√π/(4^κα^{κ+2})e^{−2αβ}Γ(2κ+1, −4αβ)` for `β < 0`.
pub fn gamma_weighted_closed(kappa: u32, alpha: f64, beta: f64) -> Result<f64> {
    let sign = if kappa % 2 == 0 { 1.0 } else { -1.0 };
    let base = sign * PI.sqrt() / (4f64.powi(kappa as i32) * alpha.powi(kappa as i32 + 2)) * (-2.0 * alpha * beta).exp();
    if beta > 0.0 {
        Ok(base * factorial(2 * kappa))
    } else {
        Ok(base * incomplete_gamma(2.0 * kappa as f64 + 1.0, -4.0 * alpha * beta)?)
    }
}

/// `∫₀^∞ g(v) dv` split at `v = 1`.
fn half_line(g: impl Fn(f64) -> f64 + Copy, quad: &QuadParams) -> Result<f64> {
    let a = integrate(|v| C64::from(g(v)), 0.0, 1.0, quad)?;
    let b = integrate_to_infinity(|v| C64::from(g(v)), 1.0, quad)?;
    Ok((a.value + b.value).re)
}

pub fn gamma_kernel_quad(kappa: u32, alpha: f64, beta: f64, quad: &QuadParams) -> Result<f64> {
    half_line(|v| hermite_kernel(kappa, alpha, beta, v), quad)
}

pub fn gamma_weighted_quad(kappa: u32, alpha: f64, beta: f64, quad: &QuadParams) -> Result<f64> {
    half_line(
        |v| {
            let w = hermite_kernel(kappa, alpha, beta, v);
            if w == 0.0 {
                0.0
            } else {
                w * incomplete_gamma(kappa as f64 + 0.5, beta * beta * v).unwrap_or(f64::NAN)
            }
        },
        quad,
    )
}

/// One checked case of a suite, with the tolerance it is held to.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseRecord {
    pub label: String,
    pub residual: f64,
    pub tolerance: f64,
}

impl CaseRecord {
    pub fn new(label: impl Into<String>, residual: f64, tolerance: f64) -> Self {
        Self { label: label.into(), residual, tolerance }
    }

    /// A case from a fallible check; an error becomes an infinite residual.
    pub fn from_result(label: impl Into<String>, r: Result<f64>, tolerance: f64) -> Self {
        match r {
            Ok(x) => Self::new(label, x, tolerance),
            Err(err) => Self::new(format!("{}: {err}", label.into()), f64::INFINITY, tolerance),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub name: String,
    pub cases: Vec<CaseRecord>,
    /// Largest case residual, rescaled to the suite tolerance for cases held to their own.
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl SuiteReport {
    /// A report whose pass flag is `max residual ≤ tolerance`; a NaN residual counts as infinite.
    pub fn new(name: &str, tolerance: f64, cases: Vec<CaseRecord>) -> Self {
        let max_residual = cases
            .iter()
            .map(|c| if c.residual.is_nan() { f64::INFINITY } else { c.residual * tolerance / c.tolerance })
            .fold(0.0, f64::max);
        Self { name: name.to_string(), cases, max_residual, tolerance, pass: max_residual <= tolerance }
    }

    /// `SUITE=<name> RESIDUAL=<float> TOL=<float> PASS=<0|1>`.
    pub fn machine_line(&self) -> String {
        format!(
            "SUITE={} RESIDUAL={:.6e} TOL={:.1e} PASS={}",
            self.name,
            self.max_residual,
            self.tolerance,
            u8::from(self.pass)
        )
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "suite {}: {} cases, max residual {:.3e} (tolerance {:.1e}) {}",
            self.name,
            self.cases.len(),
            self.max_residual,
            self.tolerance,
            if self.pass { "pass" } else { "FAIL" }
        )?;
        for c in &self.cases {
            writeln!(f, "  {:<56} {:.3e} / {:.0e}", c.label, c.residual, c.tolerance)?;
        }
        write!(f, "{}", self.machine_line())
    }
}
