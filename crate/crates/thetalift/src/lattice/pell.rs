use super::{act, GammaElement, LatticeVector};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stabilizer {
    Generator(GammaElement),
    /// `D` is a perfect square: the geodesic joins two cusps and Γ_λ is trivial.
    InfiniteGeodesic,
}

pub(crate) fn isqrt(n: i128) -> i128 {
    if n < 0 {
        return -1;
    }
    let mut r = (n as f64).sqrt() as i128;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

pub fn is_square(n: i64) -> bool {
    n >= 0 && isqrt(n as i128).pow(2) == n as i128
}

/// Smallest `(t, u)` with `u > 0` and `t² − Du² = 4`, for nonsquare `D > 0`.
///
/// Runs the continued fraction of `(σ + √D)/2`, `σ ≡ D (mod 2)`, until the
/// complete quotient has denominator 2 again; that convergent gives the unit
/// of norm ±1, which is squared when its norm is −1.
pub fn pell_unit(d: i64) -> Result<(i128, i128)> {
    if d <= 0 || is_square(d) || !matches!(d.rem_euclid(4), 0 | 1) {
        return Err(Error::InvalidArgument(format!("no Pell unit for discriminant {d}")));
    }
    let d = d as i128;
    let s = isqrt(d);
    let sigma = d % 2;
    let (mut p_, mut q_) = (sigma, 2i128);
    let (mut pm2, mut pm1) = (0i128, 1i128);
    let (mut qm2, mut qm1) = (1i128, 0i128);
    let overflow = || Error::InvalidArgument(format!("Pell unit for {d} exceeds 128 bits"));
    for n in 0.. {
        debug_assert!(q_ > 0);
        let a = (p_ + s).div_euclid(q_);
        let p = a.checked_mul(pm1).and_then(|x| x.checked_add(pm2)).ok_or_else(overflow)?;
        let q = a.checked_mul(qm1).and_then(|x| x.checked_add(qm2)).ok_or_else(overflow)?;
        (pm2, pm1, qm2, qm1) = (pm1, p, qm1, q);
        p_ = a * q_ - p_;
        q_ = (d - p_ * p_) / q_;
        if q_ == 2 {
            let (t, u) = (2 * p - sigma * q, q);
            if n % 2 == 1 {
                return Ok((t, u));
            }
            let t2 = t.checked_mul(t).and_then(|x| x.checked_add(d * u * u)).ok_or_else(overflow)? / 2;
            return Ok((t2, t * u));
        }
    }
    unreachable!()
}

/// Generator of the stabilizer of λ in Γ₀(N).
///
/// For nonsquare `D` this is the automorph `((t − Bu)/2, −Cu; Au, (t + Bu)/2)` of
/// the form `[A, B, C] = [cN, −b, a]`, with `(t, u)` the fundamental solution of
/// `t² − Du² = 4`.
pub fn stabilizer_generator(l: &LatticeVector) -> Result<Stabilizer> {
    let d = l.disc();
    if d <= 0 {
        return Err(Error::InvalidArgument(format!("{l} has Q <= 0")));
    }
    if is_square(d) {
        return Ok(Stabilizer::InfiniteGeodesic);
    }
    let (t, u) = pell_unit(d)?;
    let (fa, fb, fc) = l.form();
    let (fa, fb, fc) = (fa as i128, fb as i128, fc as i128);
    let entries = [(t - fb * u) / 2, -fc * u, fa * u, (t + fb * u) / 2];
    let [a, b, c, dd] = entries.map(|x| i64::try_from(x).ok());
    let g = match (a, b, c, dd) {
        (Some(a), Some(b), Some(c), Some(dd)) => GammaElement::sl2(a, b, c, dd),
        _ => return Err(Error::InvalidArgument(format!("stabilizer of {l} exceeds 64 bits"))),
    };
    debug_assert!(g.in_gamma0(l.level));
    debug_assert_eq!(act(&g, l), *l);
    Ok(Stabilizer::Generator(g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let l = LatticeVector::new(-1, 0, 1, 1);
        assert_eq!(stabilizer_generator(&l).unwrap(), Stabilizer::InfiniteGeodesic);
        let l = LatticeVector::new(-1, -1, 1, 1);
        let g = GammaElement::sl2(1, 1, 1, 2);
        assert_eq!(stabilizer_generator(&l).unwrap(), Stabilizer::Generator(g));
        assert_eq!(act(&g, &l), l);
        assert!(stabilizer_generator(&LatticeVector::new(1, 0, 1, 1)).is_err());
    }

    #[test]
    fn pell_units_are_minimal() {
        for d in 2..=400i64 {
            if !matches!(d % 4, 0 | 1) || is_square(d) {
                continue;
            }
            let (t, u) = pell_unit(d).unwrap();
            assert_eq!(t * t - d as i128 * u * u, 4, "D = {d}");
            for v in 1..u.min(20_000) {
                let plus = d as i128 * v * v + 4;
                assert!(isqrt(plus).pow(2) != plus, "D = {d}: smaller solution u = {v}");
            }
        }
    }

    #[test]
    fn stabilizers_fix_their_vectors() {
        for n in 1..=6 {
            for a in -3..=3 {
                for b in -7..=7 {
                    for c in -3..=3 {
                        let l = LatticeVector::new(a, b, c, n);
                        if l.disc() <= 0 {
                            continue;
                        }
                        if let Stabilizer::Generator(g) = stabilizer_generator(&l).unwrap() {
                            assert_eq!(act(&g, &l), l);
                            assert!(g.in_gamma0(n));
                            assert_eq!(g.a as i128 * g.d as i128 - g.b as i128 * g.c as i128, 1);
                        }
                    }
                }
            }
        }
    }
}
