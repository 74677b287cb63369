//! The Weil representation on `C[L′/L]` and vector-valued input data.

mod cusp;
mod input;

pub use cusp::{load_cusp_form, shadow_coeffs, CuspForm, VectorCuspForm};
pub use input::{eval_input, load_input, CoeffKey, HarmonicMaassInput};

use std::ops::{Add, Index, IndexMut, Mul, Sub};

use num_traits::Zero;

use crate::arith::{e, C64};
use crate::lattice::GammaElement;

/// A vector in `C[Z/2NZ]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteVector {
    pub comps: Vec<C64>,
}

impl FiniteVector {
    pub fn zeros(level: i64) -> Self {
        Self { comps: vec![C64::zero(); (2 * level) as usize] }
    }

    pub fn from_vec(comps: Vec<C64>) -> Self {
        Self { comps }
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    /// Component `h`, read modulo `2N`.
    pub fn get(&self, h: i64) -> C64 {
        self.comps[h.rem_euclid(self.len() as i64) as usize]
    }

    /// Standard sesquilinear pairing `Σ x_h conj(y_h)`.
    pub fn pairing(&self, o: &Self) -> C64 {
        self.comps.iter().zip(&o.comps).map(|(a, b)| a * b.conj()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.comps.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.comps.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn conj(&self) -> Self {
        Self { comps: self.comps.iter().map(|c| c.conj()).collect() }
    }

    pub fn map(&self, f: impl Fn(C64) -> C64) -> Self {
        Self { comps: self.comps.iter().map(|&c| f(c)).collect() }
    }
}

impl Index<usize> for FiniteVector {
    type Output = C64;
    fn index(&self, i: usize) -> &C64 {
        &self.comps[i]
    }
}

impl IndexMut<usize> for FiniteVector {
    fn index_mut(&mut self, i: usize) -> &mut C64 {
        &mut self.comps[i]
    }
}

impl Add for &FiniteVector {
    type Output = FiniteVector;
    fn add(self, o: &FiniteVector) -> FiniteVector {
        FiniteVector { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &FiniteVector {
    type Output = FiniteVector;
    fn sub(self, o: &FiniteVector) -> FiniteVector {
        FiniteVector { comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a - b).collect() }
    }
}

impl Mul<C64> for &FiniteVector {
    type Output = FiniteVector;
    fn mul(self, s: C64) -> FiniteVector {
        self.map(|c| c * s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    T,
    S,
}

/// A square complex matrix acting on `C[Z/2NZ]`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct WeilMatrix {
    pub dim: usize,
    pub data: Vec<C64>,
}

impl WeilMatrix {
    pub fn identity(dim: usize) -> Self {
        let mut data = vec![C64::zero(); dim * dim];
        for i in 0..dim {
            data[i * dim + i] = C64::new(1.0, 0.0);
        }
        Self { dim, data }
    }

    pub fn at(&self, i: usize, j: usize) -> C64 {
        self.data[i * self.dim + j]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.dim;
        let mut data = vec![C64::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                for j in 0..n {
                    data[i * n + j] += a * o.at(k, j);
                }
            }
        }
        Self { dim: n, data }
    }

    pub fn apply(&self, v: &FiniteVector) -> FiniteVector {
        let n = self.dim;
        FiniteVector {
            comps: (0..n).map(|i| (0..n).map(|j| self.at(i, j) * v.comps[j]).sum()).collect(),
        }
    }

    pub fn conj(&self) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|c| c.conj()).collect() }
    }

    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut data = vec![C64::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                data[j * n + i] = self.at(i, j).conj();
            }
        }
        Self { dim: n, data }
    }

    pub fn scale(&self, s: C64) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|c| c * s).collect() }
    }

    /// Largest entry of `M − O` in absolute value.
    pub fn distance(&self, o: &Self) -> f64 {
        self.data.iter().zip(&o.data).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// `ρ_L(T)` or `ρ_L(S)` on `C[Z/2NZ]` for signature (2,1); the conjugate representation if requested.
pub fn rho_generator(gen: Generator, level: i64, conjugated: bool) -> WeilMatrix {
    let n = (2 * level) as usize;
    let mut m = WeilMatrix { dim: n, data: vec![C64::zero(); n * n] };
    let four_n = (4 * level) as f64;
    match gen {
        Generator::T => {
            for h in 0..n {
                m.data[h * n + h] = e((h * h) as f64 / four_n);
            }
        }
        Generator::S => {
            let pref = e(-1.0 / 8.0) / (n as f64).sqrt();
            for h in 0..n {
                for hp in 0..n {
                    m.data[hp * n + h] = pref * e(-((h * hp) as f64) / (2 * level) as f64);
                }
            }
        }
    }
    if conjugated {
        m.conj()
    } else {
        m
    }
}

/// A word in the metaplectic generators `T = ((1,1;0,1), 1)` and `S = ((0,−1;1,0), √τ)`,
/// times an optional central sign `(I, −1)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MetaplecticWord {
    pub gens: Vec<Generator>,
    pub negated: bool,
}

impl MetaplecticWord {
    pub fn new(gens: Vec<Generator>) -> Self {
        Self { gens, negated: false }
    }

    /// The underlying element of SL₂(Z).
    pub fn matrix(&self) -> GammaElement {
        self.gens.iter().fold(GammaElement::IDENTITY, |acc, g| {
            acc.mul(match g {
                Generator::T => &GammaElement::T,
                Generator::S => &GammaElement::S,
            })
        })
    }

    /// The branch `φ(τ)` of `√j(γ, τ)` carried by the word, using
    /// `(g₁, φ₁)(g₂, φ₂) = (g₁g₂, φ₁(g₂τ)φ₂(τ))`.
    pub fn phi(&self, tau: C64) -> C64 {
        let mut phi = C64::new(if self.negated { -1.0 } else { 1.0 }, 0.0);
        let mut t = tau;
        for g in self.gens.iter().rev() {
            if *g == Generator::S {
                phi *= t.sqrt();
                t = -1.0 / t;
            } else {
                t += 1.0;
            }
        }
        phi
    }

    pub fn apply(&self, tau: C64) -> C64 {
        self.matrix().apply(tau)
    }
}

/// `ρ(w)` for a metaplectic word.
pub fn rho_word(w: &MetaplecticWord, level: i64, conjugated: bool) -> WeilMatrix {
    let t = rho_generator(Generator::T, level, conjugated);
    let s = rho_generator(Generator::S, level, conjugated);
    let m = w.gens.iter().fold(WeilMatrix::identity((2 * level) as usize), |acc, g| {
        acc.mul(if *g == Generator::T { &t } else { &s })
    });
    if w.negated {
        m.scale(C64::new(-1.0, 0.0))
    } else {
        m
    }
}

/// `ρ̃_L`: `ρ_L` for `Δ > 0` and its conjugate for `Δ < 0`.
pub fn rho_tilde(gen: Generator, level: i64, delta: i64) -> WeilMatrix {
    rho_generator(gen, level, delta < 0)
}
