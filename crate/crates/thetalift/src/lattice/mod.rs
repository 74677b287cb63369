//! The lattice `L′ = {(b/2N, −a/N; c, −b/2N)}` and the action of Γ₀(N).

mod atkin;
mod genus;
mod orbits;
mod pell;

pub use atkin::{al_coset_action, atkin_lehner, AtkinLehner};
pub use genus::{genus_character, GenusCharacter};
pub use orbits::{coset_reps, orbit_reps, reduce_point, reduce_vector, same_orbit, OrbitSet};
pub use pell::{is_square, pell_unit, stabilizer_generator, Stabilizer};

use std::fmt;
use std::ops::{Add, Neg};

use num_rational::Ratio;

use crate::arith::C64;
use crate::error::{Error, Result};

/// A vector of the dual lattice at level `N`, stored as the integer triple `(a, b, c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub level: i64,
}

impl LatticeVector {
    pub const fn new(a: i64, b: i64, c: i64, level: i64) -> Self {
        Self { a, b, c, level }
    }

    pub fn zero(level: i64) -> Self {
        Self::new(0, 0, 0, level)
    }

    /// `b² − 4Nac = 4N·Q(λ)`, the discriminant of the form `[cN, −b, a]`.
    pub fn disc(&self) -> i64 {
        self.b * self.b - 4 * self.level * self.a * self.c
    }

    pub fn q_value(&self) -> Ratio<i64> {
        q_value(self)
    }

    /// The class of λ in `L′/L ≅ Z/2NZ`.
    pub fn coset(&self) -> i64 {
        self.b.rem_euclid(2 * self.level)
    }

    /// The binary quadratic form `[cN, −b, a]`.
    pub fn form(&self) -> (i64, i64, i64) {
        (self.c * self.level, -self.b, self.a)
    }

    pub fn scale(&self, t: i64) -> Self {
        Self::new(t * self.a, t * self.b, t * self.c, self.level)
    }

    /// Integer matrix `2N·λ = (b, −2a; 2Nc, −b)`.
    pub(crate) fn scaled_matrix(&self) -> [i64; 4] {
        [self.b, -2 * self.a, 2 * self.level * self.c, -self.b]
    }

    pub(crate) fn from_scaled_matrix(m: [i128; 4], level: i64) -> Option<Self> {
        let [p, q, r, _] = m;
        let two_n = 2 * level as i128;
        if q % 2 != 0 || r % two_n != 0 {
            return None;
        }
        Some(Self::new(
            i64::try_from(-q / 2).ok()?,
            i64::try_from(p).ok()?,
            i64::try_from(r / two_n).ok()?,
            level,
        ))
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

impl Neg for LatticeVector {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl Add for LatticeVector {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        debug_assert_eq!(self.level, o.level);
        Self::new(self.a + o.a, self.b + o.b, self.c + o.c, self.level)
    }
}

/// `Q(λ) = (b² − 4Nac)/(4N)`.
pub fn q_value(l: &LatticeVector) -> Ratio<i64> {
    Ratio::new(l.disc(), 4 * l.level)
}

/// `(λ, μ) = b b′/(2N) − a c′ − c a′`.
pub fn inner(l: &LatticeVector, m: &LatticeVector) -> Result<Ratio<i64>> {
    if l.level != m.level {
        return Err(Error::LevelMismatch(l.level, m.level));
    }
    let n = l.level;
    Ok(Ratio::new(l.b * m.b - 2 * n * (l.a * m.c + l.c * m.a), 2 * n))
}

/// An element `(a, b; c, d)` of SL₂(Z).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GammaElement {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl GammaElement {
    pub const IDENTITY: Self = Self { a: 1, b: 0, c: 0, d: 1 };
    pub const T: Self = Self { a: 1, b: 1, c: 0, d: 1 };
    pub const S: Self = Self { a: 0, b: -1, c: 1, d: 0 };

    /// Checked constructor for Γ₀(N).
    pub fn new(a: i64, b: i64, c: i64, d: i64, level: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::InvalidArgument(format!("det of ({a},{b};{c},{d}) is not 1")));
        }
        if c % level != 0 {
            return Err(Error::InvalidArgument(format!("({a},{b};{c},{d}) is not in Gamma0({level})")));
        }
        Ok(Self { a, b, c, d })
    }

    /// Unchecked constructor for an arbitrary element of SL₂(Z).
    pub const fn sl2(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self { a, b, c, d }
    }

    pub fn in_gamma0(&self, level: i64) -> bool {
        self.c % level == 0
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self {
            a: self.a * o.a + self.b * o.c,
            b: self.a * o.b + self.b * o.d,
            c: self.c * o.a + self.d * o.c,
            d: self.c * o.b + self.d * o.d,
        }
    }

    pub fn inverse(&self) -> Self {
        Self { a: self.d, b: -self.b, c: -self.c, d: self.a }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { *self };
        (0..n.abs()).fold(Self::IDENTITY, |acc, _| acc.mul(&base))
    }

    /// Möbius action `(az + b)/(cz + d)`.
    pub fn apply(&self, z: C64) -> C64 {
        (self.a as f64 * z + self.b as f64) / (self.c as f64 * z + self.d as f64)
    }

    /// Automorphy factor `cz + d`.
    pub fn j(&self, z: C64) -> C64 {
        self.c as f64 * z + self.d as f64
    }

    pub(crate) fn conj_matrix(&self, m: [i64; 4]) -> [i128; 4] {
        let [p, q, r, s] = m.map(i128::from);
        let (a, b, c, d) = (self.a as i128, self.b as i128, self.c as i128, self.d as i128);
        // γ m γ⁻¹ with γ⁻¹ = (d, −b; −c, a)
        let t = [a * p + b * r, a * q + b * s, c * p + d * r, c * q + d * s];
        [t[0] * d - t[1] * c, -t[0] * b + t[1] * a, t[2] * d - t[3] * c, -t[2] * b + t[3] * a]
    }

    /// `γλγ⁻¹` as real coordinates `(a, b, c)`; integral whenever `γ ∈ Γ₀(N)`.
    pub fn act_real(&self, l: &LatticeVector) -> (f64, f64, f64) {
        let [p, q, r, _] = self.conj_matrix(l.scaled_matrix());
        (-(q as f64) / 2.0, p as f64, r as f64 / (2 * l.level) as f64)
    }
}

impl fmt::Display for GammaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}; {}, {})", self.a, self.b, self.c, self.d)
    }
}

/// Conjugation action `λ ↦ γλγ⁻¹`.
///
/// Panics if the image leaves `L′`, which cannot happen for `γ ∈ Γ₀(N)`.
pub fn act(g: &GammaElement, l: &LatticeVector) -> LatticeVector {
    try_act(g, l).unwrap_or_else(|| panic!("{g} does not preserve the lattice at level {}", l.level))
}

/// Conjugation by an arbitrary element of SL₂(Z), if the image is in `L′`.
pub fn try_act(g: &GammaElement, l: &LatticeVector) -> Option<LatticeVector> {
    LatticeVector::from_scaled_matrix(g.conj_matrix(l.scaled_matrix()), l.level)
}

/// All `(a, b, c)` with `b ≡ h (mod 2N)`, `b² − 4Nac = D` and coordinates bounded by `bound`,
/// in lexicographic order.
pub fn enumerate(level: i64, d: i64, h: i64, bound: i64) -> Vec<LatticeVector> {
    let two_n = 2 * level;
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            if (b - h).rem_euclid(two_n) != 0 {
                continue;
            }
            let rest = b * b - d;
            if a == 0 {
                if rest == 0 {
                    out.extend((-bound..=bound).map(|c| LatticeVector::new(0, b, c, level)));
                }
                continue;
            }
            let den = 4 * level * a;
            if rest % den == 0 {
                let c = rest / den;
                if c.abs() <= bound {
                    out.push(LatticeVector::new(a, b, c, level));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_value_examples() {
        assert_eq!(q_value(&LatticeVector::zero(1)), Ratio::from_integer(0));
        assert_eq!(q_value(&LatticeVector::new(-1, 0, 1, 1)), Ratio::from_integer(1));
        assert_eq!(q_value(&LatticeVector::new(0, 1, 0, 1)), Ratio::new(1, 4));
    }

    #[test]
    fn inner_examples() {
        let x = LatticeVector::new(0, 1, 0, 1);
        let y = LatticeVector::new(-1, 0, 1, 1);
        assert_eq!(inner(&x, &y).unwrap(), Ratio::from_integer(0));
        let u = LatticeVector::new(1, 0, 0, 1);
        let w = LatticeVector::new(0, 0, 1, 1);
        assert_eq!(inner(&u, &w).unwrap(), Ratio::from_integer(-1));
        let v = LatticeVector::new(3, -5, 2, 3);
        assert_eq!(inner(&v, &v).unwrap(), q_value(&v) * 2);
        assert!(inner(&v, &x).is_err());
    }

    #[test]
    fn act_examples() {
        let l = LatticeVector::new(4, -3, 7, 1);
        assert_eq!(act(&GammaElement::IDENTITY, &l), l);
        assert_eq!(act(&GammaElement::T, &LatticeVector::new(0, 1, 0, 1)), LatticeVector::new(1, 1, 0, 1));
        assert_eq!(act(&GammaElement::S, &LatticeVector::new(1, 0, 0, 1)), LatticeVector::new(0, 0, 1, 1));
    }

    #[test]
    fn act_is_a_left_action() {
        let g = GammaElement::new(2, 1, 3, 2, 3).unwrap();
        let h = GammaElement::new(1, -2, 3, -5, 3).unwrap();
        let l = LatticeVector::new(2, 5, -1, 3);
        assert_eq!(act(&g.mul(&h), &l), act(&g, &act(&h, &l)));
    }

    #[test]
    fn enumerate_examples() {
        assert!(enumerate(1, 2, 0, 5).is_empty());
        assert!(enumerate(1, 4, 0, 1).contains(&LatticeVector::new(-1, 0, 1, 1)));
        assert_eq!(enumerate(1, 1, 1, 1).len(), 10);
        let v = enumerate(2, 17, 1, 6);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        assert!(v.iter().all(|l| l.disc() == 17 && l.coset() == 1));
    }
}
