use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::io::BufRead;

use num_rational::Ratio;
use num_traits::{Signed, Zero};

use super::FiniteVector;
use crate::arith::{e, incomplete_gamma, DiscriminantPair, C64};
use crate::error::{Error, Result};

/// Coefficient index `(n, h)` with `n` rational and `h ∈ [0, 2N)`.
pub type CoeffKey = (Ratio<i64>, i64);

/// Coefficients `c±(n, h)` of a harmonic Maass form of weight `3/2 − k` for `ρ̃_L`.
#[derive(Debug, Clone, PartialEq)]
pub struct HarmonicMaassInput {
    pub k: u32,
    pub pair: DiscriminantPair,
    pub c_plus: BTreeMap<CoeffKey, C64>,
    pub c_minus: BTreeMap<CoeffKey, C64>,
}

impl HarmonicMaassInput {
    /// An empty table. Call [`validate`](Self::validate) after filling it in.
    pub fn new(k: u32, pair: DiscriminantPair) -> Self {
        Self { k, pair, c_plus: BTreeMap::new(), c_minus: BTreeMap::new() }
    }

    pub fn level(&self) -> i64 {
        self.pair.level
    }

    fn key(&self, n: Ratio<i64>, h: i64) -> CoeffKey {
        (n, h.rem_euclid(2 * self.level()))
    }

    pub fn set_plus(&mut self, n: Ratio<i64>, h: i64, v: C64) -> &mut Self {
        let key = self.key(n, h);
        self.c_plus.insert(key, v);
        self
    }

    pub fn set_minus(&mut self, n: Ratio<i64>, h: i64, v: C64) -> &mut Self {
        let key = self.key(n, h);
        self.c_minus.insert(key, v);
        self
    }

    pub fn c_plus(&self, n: Ratio<i64>, h: i64) -> C64 {
        self.c_plus.get(&self.key(n, h)).copied().unwrap_or_default()
    }

    pub fn c_minus(&self, n: Ratio<i64>, h: i64) -> C64 {
        self.c_minus.get(&self.key(n, h)).copied().unwrap_or_default()
    }

    /// Sign `ε` in `c±(n, h) = ε c±(n, −h)`.
    pub fn symmetry_sign(&self) -> f64 {
        let s = if self.k % 2 == 0 { 1.0 } else { -1.0 };
        s * self.pair.sign() as f64
    }

    /// `n₀ = −min{n : c⁺(n, ·) ≠ 0}`, or 0 for an empty table.
    pub fn n0(&self) -> Ratio<i64> {
        self.c_plus
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((n, _), _)| -*n)
            .max()
            .unwrap_or_else(Ratio::zero)
    }

    /// Principal part: the nonzero `c⁺(n, h)` with `n < 0`.
    pub fn principal_part(&self) -> impl Iterator<Item = (Ratio<i64>, i64, C64)> + '_ {
        self.c_plus
            .iter()
            .filter(|((n, _), v)| n.is_negative() && !v.is_zero())
            .map(|(&(n, h), &v)| (n, h, v))
    }

    /// Checks support, the `±h` symmetry and the vanishing of `c⁻(n, ·)` for `n ≥ 0`.
    pub fn validate(&self) -> Result<()> {
        let four_n = 4 * self.level();
        let sign = self.pair.sign();
        let eps = self.symmetry_sign();
        for (table, is_minus) in [(&self.c_plus, false), (&self.c_minus, true)] {
            for (&(n, h), &v) in table {
                if v.is_zero() {
                    continue;
                }
                // n + sgn(Δ)·h²/4N ∈ Z
                if !(n + Ratio::new(sign * h * h, four_n)).is_integer() {
                    return Err(Error::SupportViolation { n: n.to_string(), h });
                }
                if is_minus && !n.is_negative() {
                    return Err(Error::SupportViolation { n: n.to_string(), h });
                }
                let partner = table.get(&self.key(n, -h)).copied().unwrap_or_default();
                let tol = 1e-12 * v.norm().max(partner.norm());
                if (v - eps * partner).norm() > tol {
                    return Err(Error::SymmetryViolation { n: n.to_string(), h });
                }
            }
        }
        Ok(())
    }

    /// Serializes to the coefficient file format.
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        let p = &self.pair;
        writeln!(out, "VVMF N={} K={} DELTA={} R={}", p.level, self.k, p.delta, p.r).unwrap();
        for (tag, table) in [("CP", &self.c_plus), ("CM", &self.c_minus)] {
            for (&(n, h), v) in table {
                writeln!(out, "{tag} {h} {} {} {:?} {:?}", n.numer(), n.denom(), v.re, v.im).unwrap();
            }
        }
        out
    }
}

fn header_field(line: usize, tok: &str, key: &str) -> Result<i64> {
    tok.strip_prefix(key)
        .and_then(|s| s.strip_prefix('='))
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::Parse { line, msg: format!("expected {key}=<int>, found '{tok}'") })
}

/// Reads and validates a coefficient file.
pub fn load_input(reader: impl BufRead) -> Result<HarmonicMaassInput> {
    let mut input: Option<HarmonicMaassInput> = None;
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let perr = |msg: String| Error::Parse { line: line_no, msg };
        match (toks[0], input.as_mut()) {
            ("VVMF", None) => {
                if toks.len() != 5 {
                    return Err(perr("header must be VVMF N=.. K=.. DELTA=.. R=..".into()));
                }
                let level = header_field(line_no, toks[1], "N")?;
                let k = header_field(line_no, toks[2], "K")?;
                let delta = header_field(line_no, toks[3], "DELTA")?;
                let r = header_field(line_no, toks[4], "R")?;
                if k < 1 {
                    return Err(perr(format!("K = {k} must be at least 1")));
                }
                let pair = DiscriminantPair::new(delta, r, level).map_err(|e| perr(e.to_string()))?;
                input = Some(HarmonicMaassInput::new(k as u32, pair));
            }
            ("VVMF", Some(_)) => return Err(perr("duplicate header".into())),
            (_, None) => return Err(perr("missing VVMF header".into())),
            (tag @ ("CP" | "CM"), Some(f)) => {
                if toks.len() != 6 {
                    return Err(perr(format!("{tag} record needs 5 fields")));
                }
                let int = |s: &str| s.parse::<i64>().map_err(|_| perr(format!("bad integer '{s}'")));
                let float = |s: &str| s.parse::<f64>().map_err(|_| perr(format!("bad number '{s}'")));
                let (h, num, den) = (int(toks[1])?, int(toks[2])?, int(toks[3])?);
                if den == 0 {
                    return Err(perr("zero denominator".into()));
                }
                let v = C64::new(float(toks[4])?, float(toks[5])?);
                let key = f.key(Ratio::new(num, den), h);
                let table = if tag == "CP" { &mut f.c_plus } else { &mut f.c_minus };
                if table.insert(key, v).is_some() {
                    return Err(perr(format!("duplicate {tag} record")));
                }
            }
            (tok, Some(_)) => return Err(perr(format!("unknown record type '{tok}'"))),
        }
    }
    let f = input.ok_or(Error::Parse { line: 0, msg: "empty coefficient file".into() })?;
    f.validate()?;
    Ok(f)
}

/// `Σ c(n, h, v) e(nτ) 𝔢_h` over `|n| ≤ trunc` with
/// `c(n, h, v) = c⁺(n, h) + c⁻(n, h) Γ(k − 1/2, −4πnv)`.
///
/// The second return value is the sum of the absolute values of the omitted terms.
pub fn eval_input(f: &HarmonicMaassInput, tau: C64, trunc: f64) -> Result<(FiniteVector, f64)> {
    if tau.im <= 0.0 {
        return Err(Error::InvalidArgument("tau must lie in the upper half-plane".into()));
    }
    let (u, v) = (tau.re, tau.im);
    let mut out = FiniteVector::zeros(f.level());
    let mut tail = 0.0;
    let s = f.k as f64 - 0.5;
    let mut add = |n: Ratio<i64>, h: i64, c: C64, out: &mut FiniteVector| {
        let nf = *n.numer() as f64 / *n.denom() as f64;
        let term = c * e(nf * u) * (-2.0 * PI * nf * v).exp();
        if nf.abs() <= trunc {
            out[h as usize] += term;
        } else {
            tail += term.norm();
        }
    };
    for (&(n, h), &c) in &f.c_plus {
        add(n, h, c, &mut out);
    }
    for (&(n, h), &c) in &f.c_minus {
        let nf = *n.numer() as f64 / *n.denom() as f64;
        let g = incomplete_gamma(s, -4.0 * PI * nf * v)?;
        add(n, h, c * g, &mut out);
    }
    Ok((out, tail))
}
