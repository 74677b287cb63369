use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::BufRead;

use num_rational::Ratio;
use num_traits::Zero;

use super::input::{CoeffKey, HarmonicMaassInput};
use crate::arith::{e, C64};
use crate::error::{Error, Result};
use crate::lattice::reduce_point;

/// A scalar cusp form `g = Σ_{n≥1} a(n) qⁿ` of even weight on Γ₀(N), known up to a truncation.
#[derive(Debug, Clone, PartialEq)]
pub struct CuspForm {
    pub level: i64,
    pub weight: u32,
    pub coeffs: BTreeMap<i64, C64>,
    /// Exponent α with `|a(n)| ≤ C·n^α`, used for tail bounds.
    pub growth: f64,
}

impl CuspForm {
    pub fn new(level: i64, weight: u32, coeffs: BTreeMap<i64, C64>) -> Result<Self> {
        if level < 1 || weight == 0 || weight % 2 == 1 {
            return Err(Error::InvalidArgument(format!("cusp form of level {level} and weight {weight}")));
        }
        if let Some(n) = coeffs.keys().find(|&&n| n < 1) {
            return Err(Error::InvalidArgument(format!("cusp form coefficient index {n} < 1")));
        }
        // Hecke's bound a(n) = O(n^{w/2}) holds for every cusp form.
        Ok(Self { level, weight, coeffs, growth: weight as f64 / 2.0 })
    }

    pub fn zero(level: i64, weight: u32) -> Self {
        Self { level, weight, coeffs: BTreeMap::new(), growth: weight as f64 / 2.0 }
    }

    pub fn truncation(&self) -> i64 {
        self.coeffs.keys().next_back().copied().unwrap_or(0)
    }

    pub fn coeff(&self, n: i64) -> C64 {
        self.coeffs.get(&n).copied().unwrap_or_default()
    }

    /// Upper bound for `Σ_{n>M} |a(n)| e^{−2πny}` from the growth exponent, with `M` the truncation.
    pub fn tail_bound(&self, y: f64) -> f64 {
        let m = self.truncation();
        if m == 0 {
            return 0.0;
        }
        let alpha = self.growth;
        let c = self.coeffs.iter().map(|(&n, a)| a.norm() / (n as f64).powf(alpha)).fold(0.0, f64::max);
        let mf = m as f64;
        let first = c * (mf + 1.0).powf(alpha) * (-2.0 * PI * (mf + 1.0) * y).exp();
        let ratio = ((mf + 2.0) / (mf + 1.0)).powf(alpha) * (-2.0 * PI * y).exp();
        if ratio >= 1.0 {
            f64::INFINITY
        } else {
            first / (1.0 - ratio)
        }
    }

    /// Evaluates the truncated series directly, returning the value and the tail bound.
    pub fn eval_series(&self, z: C64) -> (C64, f64) {
        let v: C64 = self.coeffs.iter().map(|(&n, &a)| a * e(n as f64 * z.re) * (-2.0 * PI * n as f64 * z.im).exp()).sum();
        (v, self.tail_bound(z.im))
    }

    /// Evaluates `g(z)`. At level 1 the point is first moved into the standard fundamental
    /// domain, where the series converges fastest.
    pub fn eval(&self, z: C64) -> (C64, f64) {
        if self.level != 1 {
            return self.eval_series(z);
        }
        let (g, w) = reduce_point(z);
        let (v, tail) = self.eval_series(w);
        // g(δz) = (cz + d)^w g(z)
        let j = g.j(z).powi(self.weight as i32);
        (v / j, tail / j.norm())
    }

    pub fn to_file_string(&self) -> String {
        let mut out = format!("CUSP N={} WEIGHT={} GROWTH={:?}\n", self.level, self.weight, self.growth);
        for (n, a) in &self.coeffs {
            writeln!(out, "A {n} {:?} {:?}", a.re, a.im).unwrap();
        }
        out
    }
}

/// Reads a cusp-form file: header `CUSP N=<int> WEIGHT=<int> [GROWTH=<float>]`, records `A n re im`.
pub fn load_cusp_form(reader: impl BufRead) -> Result<CuspForm> {
    let mut form: Option<CuspForm> = None;
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let perr = |msg: String| Error::Parse { line: line_no, msg };
        let toks: Vec<&str> = body.split_whitespace().collect();
        match (toks[0], form.as_mut()) {
            ("CUSP", None) => {
                let mut level = None;
                let mut weight = None;
                let mut growth = None;
                for tok in &toks[1..] {
                    let (key, val) = tok.split_once('=').ok_or_else(|| perr(format!("bad header field '{tok}'")))?;
                    let bad = || perr(format!("bad value in '{tok}'"));
                    match key {
                        "N" => level = Some(val.parse::<i64>().map_err(|_| bad())?),
                        "WEIGHT" => weight = Some(val.parse::<u32>().map_err(|_| bad())?),
                        "GROWTH" => growth = Some(val.parse::<f64>().map_err(|_| bad())?),
                        _ => return Err(perr(format!("unknown header field '{key}'"))),
                    }
                }
                let (Some(level), Some(weight)) = (level, weight) else {
                    return Err(perr("header needs N and WEIGHT".into()));
                };
                let mut g = CuspForm::new(level, weight, BTreeMap::new()).map_err(|e| perr(e.to_string()))?;
                if let Some(a) = growth {
                    g.growth = a;
                }
                form = Some(g);
            }
            ("CUSP", Some(_)) => return Err(perr("duplicate header".into())),
            (_, None) => return Err(perr("missing CUSP header".into())),
            ("A", Some(g)) => {
                if toks.len() != 4 {
                    return Err(perr("A record needs 3 fields".into()));
                }
                let n: i64 = toks[1].parse().map_err(|_| perr(format!("bad index '{}'", toks[1])))?;
                let re: f64 = toks[2].parse().map_err(|_| perr(format!("bad number '{}'", toks[2])))?;
                let im: f64 = toks[3].parse().map_err(|_| perr(format!("bad number '{}'", toks[3])))?;
                if n < 1 {
                    return Err(perr(format!("index {n} < 1")));
                }
                if g.coeffs.insert(n, C64::new(re, im)).is_some() {
                    return Err(perr(format!("duplicate index {n}")));
                }
            }
            (tok, Some(_)) => return Err(perr(format!("unknown record type '{tok}'"))),
        }
    }
    form.ok_or(Error::Parse { line: 0, msg: "empty cusp form file".into() })
}

/// A vector-valued cusp form `Σ a(n, h) e(nτ) 𝔢_h` of weight `k + 1/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorCuspForm {
    pub level: i64,
    pub k: u32,
    pub coeffs: BTreeMap<CoeffKey, C64>,
}

impl VectorCuspForm {
    pub fn new(level: i64, k: u32) -> Self {
        Self { level, k, coeffs: BTreeMap::new() }
    }

    pub fn coeff(&self, n: Ratio<i64>, h: i64) -> C64 {
        self.coeffs.get(&(n, h.rem_euclid(2 * self.level))).copied().unwrap_or_default()
    }

    pub fn set(&mut self, n: Ratio<i64>, h: i64, v: C64) {
        self.coeffs.insert((n, h.rem_euclid(2 * self.level)), v);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.values().all(|v| v.is_zero())
    }
}

/// Coefficients of `ξ_κ f` with `κ = 3/2 − k`: `a(n, h) = −(4πn)^{1−κ} conj(c⁻(−n, h))`.
pub fn shadow_coeffs(f: &HarmonicMaassInput) -> VectorCuspForm {
    let mut out = VectorCuspForm::new(f.level(), f.k);
    let expo = f.k as f64 - 0.5;
    for (&(n, h), &c) in &f.c_minus {
        if c.is_zero() {
            continue;
        }
        let m = -n;
        let mf = *m.numer() as f64 / *m.denom() as f64;
        out.set(m, h, -(4.0 * PI * mf).powf(expo) * c.conj());
    }
    out
}
