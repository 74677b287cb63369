//! Truncated theta kernels: `Θ_{Δ,r,k}`, `Θ*_{Δ,r,k}`, the Hermite theta `Ξ_κ` of the
//! sublattice attached to the cusp ∞, and the coprime-pair rewriting of `Θ`.

use std::f64::consts::PI;

use crate::arith::{e, hermite_c, kronecker, DiscriminantPair, C64, I};
use crate::hyperbolic::{majorant, p_z, q_z, PointH};
use crate::lattice::{GenusCharacter, LatticeVector};
use crate::weilrep::FiniteVector;

/// Truncation control: terms are dropped once a certified bound for their sum is below `target`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThetaTrunc {
    pub target: f64,
}

impl Default for ThetaTrunc {
    fn default() -> Self {
        Self { target: 1e-12 }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThetaValue {
    pub value: FiniteVector,
    /// Upper bound for the sum of the absolute values of all omitted terms.
    pub tail: f64,
    pub terms: usize,
}

/// Closed-form data of the sublattice `K = L ∩ l^⊥ ∩ l′^⊥` at the cusp `l = l_∞`,
/// evaluated at a point `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SublatticeFrame {
    pub level: i64,
    pub z: PointH,
}

impl SublatticeFrame {
    pub fn new(level: i64, z: PointH) -> Self {
        Self { level, z }
    }

    /// `Q_z(l) = 1/(2Ny²)`.
    pub fn q_z_l(&self) -> f64 {
        1.0 / (2.0 * self.level as f64 * self.z.y * self.z.y)
    }

    /// `q_z(l) = 1/√(2N)`.
    pub fn q_l(&self) -> f64 {
        1.0 / (2.0 * self.level as f64).sqrt()
    }

    /// `(λ, μ_K)` for `λ ∈ K′` with `b`-coordinate `m`: `m·x`.
    pub fn mu_pairing(&self, m: f64) -> f64 {
        m * self.z.x
    }

    /// `(λ, 𝔴^⊥) = −m/(2Ny)` for `λ ∈ K′` with `b`-coordinate `m`.
    pub fn w_perp_pairing(&self, m: f64) -> f64 {
        -m / (2.0 * self.level as f64 * self.z.y)
    }

    /// `c_{z,k,j}`.
    pub fn czkj(&self, pair: &DiscriminantPair, k: u32, j: u32) -> C64 {
        let a = pair.abs_delta() as f64;
        let qz = self.q_z_l();
        let base = self.q_l() * I * a.sqrt() / (2.0 * (2.0 * PI * qz).sqrt());
        let jfac = (1.0 - k as f64) * (2.0 * a * qz).sqrt() / PI.sqrt();
        I / (2.0 * (2.0 * a).sqrt() * qz) * base.powu(k - 1) * jfac.powi(j as i32)
    }
}

/// Theta kernels for fixed `(Δ, r, N)` and weight parameter `k`, with a shared genus-character cache.
#[derive(Debug, Clone)]
pub struct ThetaKernel {
    pub pair: DiscriminantPair,
    pub k: u32,
    chi: GenusCharacter,
    /// `h` values for each `(b mod 2N, D mod 4N|Δ|)`.
    cosets: Vec<Vec<i64>>,
}

impl ThetaKernel {
    pub fn new(pair: DiscriminantPair, k: u32) -> Self {
        let n = pair.level;
        let a = pair.abs_delta();
        let (nb, nd) = (2 * n, 4 * n * a);
        let mut cosets = vec![Vec::new(); (nb * nd) as usize];
        for b in 0..nb {
            for d in 0..nd {
                for h in 0..nb {
                    if (b - pair.r * h).rem_euclid(nb) == 0 && (d - pair.delta * h * h).rem_euclid(nd) == 0 {
                        cosets[(b * nd + d) as usize].push(h);
                    }
                }
            }
        }
        Self { pair, k, chi: GenusCharacter::new(pair), cosets }
    }

    pub fn level(&self) -> i64 {
        self.pair.level
    }

    pub fn chi(&self, l: &LatticeVector) -> i64 {
        self.chi.eval(l)
    }

    /// Components `h` receiving the vector `λ`.
    pub fn cosets_of(&self, l: &LatticeVector) -> &[i64] {
        let n = self.level();
        let nd = 4 * n * self.pair.abs_delta();
        let b = l.b.rem_euclid(2 * n);
        let d = l.disc().rem_euclid(nd);
        &self.cosets[(b * nd + d) as usize]
    }

    /// `Θ(τ, z) = v^{3/2} Σ χ_Δ(λ) p_z(λ) q_z(λ)^{k−1} e(Q(λ)u/|Δ| + Q_z(λ)iv/|Δ|) 𝔢_h`.
    pub fn theta(&self, tau: C64, z: PointH, trunc: &ThetaTrunc) -> ThetaValue {
        let k = self.k;
        self.kernel_sum(tau, z, trunc, 1.5, k as f64, |l, zc| p_z(l, z) * q_z(l, zc).powu(k - 1))
    }

    /// `Θ*(τ, z) = v^{1/2} Σ χ_Δ(λ) (q_z(λ)/y²)^k e(...) 𝔢_h`.
    pub fn theta_star(&self, tau: C64, z: PointH, trunc: &ThetaTrunc) -> ThetaValue {
        let k = self.k;
        let y2 = z.y * z.y;
        self.kernel_sum(tau, z, trunc, 0.5, k as f64, |l, zc| (q_z(l, zc) / y2).powu(k))
    }

    /// Shared lattice sum. `degree` is the polynomial degree of the weight in `√Q_z`.
    fn kernel_sum(
        &self,
        tau: C64,
        z: PointH,
        trunc: &ThetaTrunc,
        v_power: f64,
        degree: f64,
        weight: impl Fn(&LatticeVector, C64) -> C64,
    ) -> ThetaValue {
        let n = self.level();
        let a = self.pair.abs_delta() as f64;
        let (u, v) = (tau.re, tau.im);
        let pre = v.powf(v_power);
        // |weight| ≤ max(1, y)^k · max(1, 1/y)^k · (2Q_z)^{k/2}
        let wscale = z.y.max(1.0 / z.y).powf(degree);
        let term_bound = |q: f64| pre * wscale * (2.0 * q).powf(degree / 2.0) * (-2.0 * PI * v * q / a).exp();
        let count = |r: f64| ball_count(n, z, r);
        let radius = certified_radius(term_bound, count, trunc.target, degree * a / (4.0 * PI * v));
        let tail = shell_tail(term_bound, count, radius);
        let zc = z.to_c();
        let mut out = FiniteVector::zeros(n);
        let mut terms = 0;
        for l in majorant_ball(n, z, radius) {
            let hs = self.cosets_of(&l);
            if hs.is_empty() {
                continue;
            }
            let x = self.chi(&l);
            if x == 0 {
                continue;
            }
            let q = *l.q_value().numer() as f64 / *l.q_value().denom() as f64;
            let ex = e(q * u / a) * (-2.0 * PI * majorant(&l, z) * v / a).exp();
            let t = weight(&l, zc) * ex * x as f64;
            for &h in hs {
                out[h as usize] += t;
            }
            terms += 1;
        }
        ThetaValue { value: &out * C64::new(pre, 0.0), tail, terms }
    }

    /// The Hermite theta `Ξ_κ(τ, μ_K, α, β)` on `K′/K ≅ Z/2NZ`.
    ///
    /// Sums over `λ = (−t, b, −β)` with `0 ≤ t < |Δ|`:
    /// `v^{−κ/2} Σ χ_Δ(λ) e(−αt/|Δ|) H_κ(√π(α − βτ̄ − 2v(λ+βμ_K, 𝔴^⊥))/√(2|Δ|vQ_z(l)))
    ///  · e(Q(λ+βμ_K)τ/|Δ| − α(λ + βμ_K/2, μ_K)/|Δ|)`.
    pub fn xi(&self, kappa: u32, tau: C64, frame: &SublatticeFrame, alpha: i64, beta: i64, trunc: &ThetaTrunc) -> ThetaValue {
        self.xi_impl(kappa, tau, frame, alpha, beta, trunc, false)
    }

    /// `Ξ_κ(τ, μ_K, α, 0)` with the sum over `t` replaced by the Gauss sum `(Δ/α)√Δ`.
    pub fn xi_gauss(&self, kappa: u32, tau: C64, frame: &SublatticeFrame, alpha: i64, trunc: &ThetaTrunc) -> ThetaValue {
        self.xi_impl(kappa, tau, frame, alpha, 0, trunc, true)
    }

    #[allow(clippy::too_many_arguments)]
    fn xi_impl(
        &self,
        kappa: u32,
        tau: C64,
        frame: &SublatticeFrame,
        alpha: i64,
        beta: i64,
        trunc: &ThetaTrunc,
        gauss: bool,
    ) -> ThetaValue {
        let n = self.level();
        let nf = n as f64;
        let delta = self.pair.delta;
        let ad = self.pair.abs_delta();
        let a = ad as f64;
        let (x, v) = (frame.z.x, tau.im);
        let qzl = frame.q_z_l();
        let denom = (2.0 * a * v * qzl).sqrt();
        let (af, bf) = (alpha as f64, beta as f64);
        let shift = 2.0 * nf * bf * x;
        let arg_of = |bb: f64| {
            PI.sqrt() * (af - bf * tau.conj() - 2.0 * v * frame.w_perp_pairing(bb)) / denom
        };
        let gauss_sum = if gauss { kronecker(delta, alpha) as f64 * self.pair.sqrt_delta() } else { C64::new(0.0, 0.0) };
        let mut out = FiniteVector::zeros(n);
        let pre = v.powf(-(kappa as f64) / 2.0);
        // |arg(bb)| ≤ arg0 + slope·|bb| keeps the envelope monotone in |bb|
        let arg0 = PI.sqrt() * (af - bf * tau.conj()).norm() / denom;
        let slope = PI.sqrt() * 2.0 * v * frame.w_perp_pairing(1.0).abs() / denom;
        let bound = |bb: f64| {
            pre * a * hermite_bound(kappa, arg0 + slope * bb.abs()) * (-PI * v * bb * bb / (2.0 * nf * a)).exp()
        };
        // b runs outward from the centre −2Nβx of the Gaussian
        let centre = (-shift).round() as i64;
        let mut terms = 0;
        let mut tail = 0.0;
        for side in [1i64, -1] {
            let mut step = if side == 1 { 0 } else { 1 };
            let mut prev = f64::INFINITY;
            loop {
                let b = centre + side * step;
                let bb = b as f64 + shift;
                let bnd = bound(bb);
                if bnd < 1e-3 * trunc.target && bnd <= prev && (bb.abs() * v).powi(2) > 1.0 {
                    // remaining bounds decay at least geometrically with ratio below 1/2
                    tail += 2.0 * bnd;
                    break;
                }
                prev = bnd;
                step += 1;
                let w = self.xi_b_weight(b, beta, alpha, gauss, gauss_sum);
                if w.iter().all(|(_, c)| c.norm() == 0.0) {
                    continue;
                }
                let h_val = hermite_c(kappa, arg_of(bb));
                let qlm = bb * bb / (4.0 * nf);
                let pairing = af * x * (b as f64 + nf * bf * x);
                let ex = e(-pairing / a) * (I * 2.0 * PI * qlm * tau / a).exp();
                for (h, c) in w {
                    out[h as usize] += c * h_val * ex;
                    terms += 1;
                }
            }
        }
        ThetaValue { value: &out * C64::new(pre, 0.0), tail, terms }
    }

    /// `Σ_t χ_Δ(−t, b, −β) e(−αt/|Δ|)` for each component `h` that `b` contributes to.
    fn xi_b_weight(&self, b: i64, beta: i64, alpha: i64, gauss: bool, gauss_sum: C64) -> Vec<(i64, C64)> {
        let n = self.level();
        let ad = self.pair.abs_delta();
        let mut out: Vec<(i64, C64)> = Vec::new();
        if gauss {
            let l = LatticeVector::new(0, b, 0, n);
            if b % ad != 0 {
                return out;
            }
            for &h in self.cosets_of(&l) {
                out.push((h, gauss_sum));
            }
            return out;
        }
        for t in 0..ad {
            let l = LatticeVector::new(-t, b, -beta, n);
            let hs = self.cosets_of(&l);
            if hs.is_empty() {
                continue;
            }
            let x = self.chi(&l);
            if x == 0 {
                continue;
            }
            let c = e(-(alpha * t) as f64 / ad as f64) * x as f64;
            for &h in hs {
                match out.iter_mut().find(|(hh, _)| *hh == h) {
                    Some(entry) => entry.1 += c,
                    None => out.push((h, c)),
                }
            }
        }
        out
    }

    /// The coprime-pair rewriting of `Θ`:
    /// `Σ_{(c,d) ≠ 0} Σ_j c_{z,k,j}(cτ + d)^{1−j} e(−|cτ+d|²/(4|Δ|ivQ_z(l))) Ξ_{k−1−j}(τ, μ_K, d, −c)`
    /// over `|c|, |d| ≤ coset_height`, plus `c_{z,k,1}Ξ_{k−2}(τ, 0, 0, 0)` when `k ≥ 2`.
    pub fn poincare(&self, tau: C64, z: PointH, coset_height: i64, trunc: &ThetaTrunc) -> ThetaValue {
        let k = self.k;
        let n = self.level();
        let frame = SublatticeFrame::new(n, z);
        let a = self.pair.abs_delta() as f64;
        let v = tau.im;
        let qzl = frame.q_z_l();
        let cz: Vec<C64> = (0..2).map(|j| self.czkj(&frame, j)).collect();
        let mut out = FiniteVector::zeros(n);
        let mut tail = 0.0;
        let mut terms = 0;
        for c in -coset_height..=coset_height {
            for d in -coset_height..=coset_height {
                let ctd = c as f64 * tau + d as f64;
                let g = ctd.norm_sqr();
                // e(−g/(4|Δ|ivQ)) = exp(−2πg/(4|Δ|vQ))
                let fac = (-2.0 * PI * g / (4.0 * a * v * qzl)).exp();
                for j in 0..2u32 {
                    if j + 1 > k || cz[j as usize].norm() == 0.0 {
                        continue;
                    }
                    let w = if c == 0 && d == 0 {
                        if j == 1 {
                            C64::new(1.0, 0.0)
                        } else {
                            continue;
                        }
                    } else {
                        ctd.powu(1 - j)
                    };
                    let f = if c == 0 && d == 0 { 1.0 } else { fac };
                    if f == 0.0 {
                        continue;
                    }
                    let xi = self.xi(k - 1 - j, tau, &frame, d, -c, trunc);
                    out = &out + &(&xi.value * (cz[j as usize] * w * f));
                    tail += (cz[j as usize] * w * f).norm() * xi.tail;
                    terms += xi.terms;
                }
            }
        }
        ThetaValue { value: out, tail, terms }
    }

    pub fn czkj(&self, frame: &SublatticeFrame, j: u32) -> C64 {
        frame.czkj(&self.pair, self.k, j)
    }
}

/// `max |H_n(w)|` over `|w| ≤ r`, bounded through the recurrence with absolute values.
fn hermite_bound(n: u32, r: f64) -> f64 {
    let (mut h0, mut h1) = (1.0, 2.0 * r);
    if n == 0 {
        return h0;
    }
    for m in 1..n {
        let h2 = 2.0 * r * h1 + 2.0 * m as f64 * h0;
        h0 = h1;
        h1 = h2;
    }
    h1
}

/// All `λ ∈ L′` with `Q_z(λ) ≤ r`.
pub fn majorant_ball(level: i64, z: PointH, r: f64) -> Vec<LatticeVector> {
    let n = level as f64;
    let (x, y) = (z.x, z.y);
    let mut out = Vec::new();
    let cmax = ((2.0 * r / n).sqrt() / y).floor() as i64;
    for c in -cmax..=cmax {
        let cf = c as f64;
        let r1 = r - n * cf * cf * y * y / 2.0;
        if r1 < 0.0 {
            continue;
        }
        let w = (4.0 * n * r1).sqrt();
        let b0 = 2.0 * cf * n * x;
        for b in (b0 - w).ceil() as i64..=(b0 + w).floor() as i64 {
            let db = b as f64 - b0;
            let r2 = r1 - db * db / (4.0 * n);
            if r2 < 0.0 {
                continue;
            }
            let w2 = (2.0 * n * y * y * r2).sqrt();
            let a0 = b as f64 * x - cf * n * x * x;
            for a in (a0 - w2).ceil() as i64..=(a0 + w2).floor() as i64 {
                out.push(LatticeVector::new(a, b, c, level));
            }
        }
    }
    out
}

/// Upper bound for `#{λ : Q_z(λ) ≤ r}` from the enumeration box.
fn ball_count(level: i64, z: PointH, r: f64) -> f64 {
    let n = level as f64;
    let y = z.y;
    (2.0 * (2.0 * r / n).sqrt() / y + 1.0) * (4.0 * (n * r).sqrt() + 1.0) * (2.0 * y * (2.0 * n * r).sqrt() + 1.0)
}

/// Bound for `Σ_{Q_z(λ) > r} f(Q_z(λ))` with `f` decreasing beyond `r`, summing over unit shells.
fn shell_tail(f: impl Fn(f64) -> f64, count: impl Fn(f64) -> f64, r: f64) -> f64 {
    let mut total = 0.0;
    let mut j = 0.0;
    loop {
        let t = count(r + j + 1.0) * f(r + j);
        total += t;
        if t < 1e-6 * total || t < 1e-300 {
            // shells decay at least geometrically from here on
            return total + t;
        }
        j += 1.0;
    }
}

fn certified_radius(f: impl Fn(f64) -> f64 + Copy, count: impl Fn(f64) -> f64 + Copy, target: f64, min_r: f64) -> f64 {
    let mut r = min_r.max(1.0);
    while shell_tail(f, count, r) > target {
        r *= 1.1;
    }
    r
}

pub fn theta_kernel(tau: C64, z: PointH, pair: &DiscriminantPair, k: u32, trunc: &ThetaTrunc) -> ThetaValue {
    ThetaKernel::new(*pair, k).theta(tau, z, trunc)
}

pub fn theta_star_kernel(tau: C64, z: PointH, pair: &DiscriminantPair, k: u32, trunc: &ThetaTrunc) -> ThetaValue {
    ThetaKernel::new(*pair, k).theta_star(tau, z, trunc)
}

pub fn xi_theta(
    kappa: u32,
    tau: C64,
    frame: &SublatticeFrame,
    alpha: i64,
    beta: i64,
    pair: &DiscriminantPair,
    trunc: &ThetaTrunc,
) -> ThetaValue {
    ThetaKernel::new(*pair, kappa.max(1)).xi(kappa, tau, frame, alpha, beta, trunc)
}

pub fn poincare_form(tau: C64, z: PointH, pair: &DiscriminantPair, k: u32, coset_height: i64, trunc: &ThetaTrunc) -> ThetaValue {
    ThetaKernel::new(*pair, k).poincare(tau, z, coset_height, trunc)
}

/// Smallest coset height whose outer ring of `(c, d)` has Gaussian factor below `target`.
pub fn auto_coset_height(tau: C64, z: PointH, pair: &DiscriminantPair, target: f64) -> i64 {
    let a = pair.abs_delta() as f64;
    let qzl = 1.0 / (2.0 * pair.level as f64 * z.y * z.y);
    let scale = 2.0 * PI / (4.0 * a * tau.im * qzl);
    let mut h = 1i64;
    loop {
        let ring_min = (-h..=h)
            .flat_map(|t| [(h, t), (-h, t), (t, h), (t, -h)])
            .map(|(c, d)| (c as f64 * tau + d as f64).norm_sqr())
            .fold(f64::INFINITY, f64::min);
        if (-scale * ring_min).exp() < target * 1e-4 || h > 200 {
            return h;
        }
        h += 1;
    }
}
