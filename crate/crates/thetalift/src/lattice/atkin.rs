use super::LatticeVector;
use crate::arith::{egcd, gcd, C64};
use crate::error::{Error, Result};

/// The Atkin–Lehner involution `W_m^N` with representative `(mα, β; N, m)` of determinant `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AtkinLehner {
    pub m: i64,
    pub level: i64,
    /// Entries `(mα, β, N, m)`.
    pub matrix: [i64; 4],
}

pub fn atkin_lehner(m: i64, level: i64) -> Result<AtkinLehner> {
    if m < 1 || level % m != 0 || gcd(m, level / m) != 1 {
        return Err(Error::NotExactDivisor { m, n: level });
    }
    // m·x + (N/m)·y = 1 gives mα·m − βN = m with α = x, β = −y.
    let (_, x, y) = egcd(m, level / m);
    Ok(AtkinLehner { m, level, matrix: [m * x, -y, level, m] })
}

impl AtkinLehner {
    pub fn apply(&self, z: C64) -> C64 {
        let [a, b, c, d] = self.matrix.map(|x| x as f64);
        (a * z + b) / (c * z + d)
    }

    /// `j(W, z) = (Nz + m)/√m`.
    pub fn j(&self, z: C64) -> C64 {
        (self.level as f64 * z + self.m as f64) / (self.m as f64).sqrt()
    }

    /// `WλW⁻¹`.
    pub fn act(&self, l: &LatticeVector) -> LatticeVector {
        let [a, b, c, d] = self.matrix.map(i128::from);
        let [p, q, r, s] = l.scaled_matrix().map(i128::from);
        let t = [a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s];
        // multiply by adj(W) = (d, −b; −c, a) and divide by det = m
        let m = self.m as i128;
        let out = [t[0] * d - t[1] * c, -t[0] * b + t[1] * a, t[2] * d - t[3] * c, -t[2] * b + t[3] * a];
        debug_assert!(out.iter().all(|x| x % m == 0));
        LatticeVector::from_scaled_matrix(out.map(|x| x / m), l.level)
            .expect("Atkin-Lehner involutions preserve the dual lattice")
    }
}

/// The permutation of `L′/L` induced by `W_m^N`.
pub fn al_coset_action(w: &AtkinLehner, h: i64) -> i64 {
    w.act(&LatticeVector::new(0, h, 0, w.level)).coset()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::q_value;

    #[test]
    fn representatives() {
        for n in 1..=30 {
            for m in 1..=n {
                match atkin_lehner(m, n) {
                    Ok(w) => {
                        let [a, b, c, d] = w.matrix;
                        assert_eq!(a * d - b * c, m);
                        assert_eq!(a % m, 0);
                        assert_eq!(d % m, 0);
                        assert_eq!(c % n, 0);
                    }
                    Err(_) => assert!(n % m != 0 || gcd(m, n / m) != 1),
                }
            }
        }
    }

    #[test]
    fn coset_actions() {
        for n in [1, 2, 3, 6, 10] {
            let w1 = atkin_lehner(1, n).unwrap();
            let wn = atkin_lehner(n, n).unwrap();
            for h in 0..2 * n {
                assert_eq!(al_coset_action(&w1, h), h);
                assert_eq!(al_coset_action(&wn, h), (-h).rem_euclid(2 * n));
            }
        }
    }

    #[test]
    fn wn_swaps_infinity_and_zero() {
        let w = atkin_lehner(5, 5).unwrap();
        let near_inf = w.apply(C64::new(0.2, 1e6));
        assert!(near_inf.norm() < 1e-6);
        // the isotropic line of ∞, spanned by (−1, 0, 0), goes to that of 0, spanned by (0, 0, 1)
        let l = w.act(&LatticeVector::new(-1, 0, 0, 5));
        assert_eq!((l.a, l.b), (0, 0));
    }

    #[test]
    fn involution_preserves_q() {
        let w = atkin_lehner(2, 6).unwrap();
        for (a, b, c) in [(1, 5, -2), (3, -1, 4), (0, 7, 1)] {
            let l = LatticeVector::new(a, b, c, 6);
            let img = w.act(&l);
            assert_eq!(q_value(&img), q_value(&l));
            let back = w.act(&img);
            assert_eq!(q_value(&back), q_value(&l));
        }
    }
}
