//! Globally adaptive Gauss–Kronrod (7, 15) quadrature for complex-valued integrands.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::arith::C64;
use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadParams {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_evals: usize,
}

impl Default for QuadParams {
    fn default() -> Self {
        Self { abs_tol: 1e-10, rel_tol: 1e-12, max_evals: 2_000_000 }
    }
}

impl QuadParams {
    pub fn with_tol(abs_tol: f64, rel_tol: f64) -> Self {
        Self { abs_tol, rel_tol, ..Self::default() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: C64,
    pub error: f64,
    pub evals: usize,
}

struct Segment {
    a: f64,
    b: f64,
    value: C64,
    error: f64,
}

impl PartialEq for Segment {
    fn eq(&self, o: &Self) -> bool {
        self.error == o.error
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Segment {
    fn cmp(&self, o: &Self) -> Ordering {
        self.error.total_cmp(&o.error)
    }
}

fn gk15(f: &mut impl FnMut(f64) -> C64, a: f64, b: f64) -> Segment {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (j, &x) in XGK[..7].iter().enumerate() {
        let s = f(c - h * x) + f(c + h * x);
        kron += s * WGK[j];
        if j % 2 == 1 {
            gauss += s * WG[j / 2];
        }
    }
    let value = kron * h;
    let error = ((kron - gauss) * h).norm();
    Segment { a, b, value, error }
}

/// `∫_a^b f(x) dx` to within `max(abs_tol, rel_tol·|I|)`.
pub fn integrate(mut f: impl FnMut(f64) -> C64, a: f64, b: f64, p: &QuadParams) -> Result<QuadResult> {
    if a == b {
        return Ok(QuadResult { value: C64::new(0.0, 0.0), error: 0.0, evals: 0 });
    }
    let mut heap = BinaryHeap::new();
    let first = gk15(&mut f, a, b);
    let mut value = first.value;
    let mut error = first.error;
    let mut evals = 15;
    heap.push(first);
    loop {
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::Quadrature(format!("non-finite integrand on [{a}, {b}]")));
        }
        if error <= p.abs_tol.max(p.rel_tol * value.norm()) {
            return Ok(QuadResult { value, error, evals });
        }
        if evals + 30 > p.max_evals {
            return Err(Error::Quadrature(format!(
                "error estimate {error:.3e} after {evals} evaluations on [{a}, {b}]"
            )));
        }
        let worst = heap.pop().expect("segment heap is never empty");
        let m = 0.5 * (worst.a + worst.b);
        if m == worst.a || m == worst.b {
            return Err(Error::Quadrature(format!("interval [{}, {}] cannot be split", worst.a, worst.b)));
        }
        let l = gk15(&mut f, worst.a, m);
        let r = gk15(&mut f, m, worst.b);
        evals += 30;
        value += l.value + r.value - worst.value;
        error += l.error + r.error - worst.error;
        heap.push(l);
        heap.push(r);
        if evals % 3000 == 15 || error <= p.abs_tol.max(p.rel_tol * value.norm()) {
            // resum to remove drift from repeated updates
            value = heap.iter().map(|s| s.value).sum();
            error = heap.iter().map(|s| s.error).sum();
        }
    }
}

/// `∫_a^∞ f(x) dx` through `x = a + t/(1 − t)`.
pub fn integrate_to_infinity(mut f: impl FnMut(f64) -> C64, a: f64, p: &QuadParams) -> Result<QuadResult> {
    integrate(
        |t| {
            let s = 1.0 - t;
            let v = f(a + t / s) / (s * s);
            if v.re.is_finite() && v.im.is_finite() {
                v
            } else {
                C64::new(0.0, 0.0)
            }
        },
        0.0,
        1.0,
        p,
    )
}

/// `∫_R f(x) dx` through `x = t/(1 − t²)`.
pub fn integrate_line(mut f: impl FnMut(f64) -> C64, p: &QuadParams) -> Result<QuadResult> {
    integrate(
        |t| {
            let s = 1.0 - t * t;
            let v = f(t / s) * (1.0 + t * t) / (s * s);
            if v.re.is_finite() && v.im.is_finite() {
                v
            } else {
                C64::new(0.0, 0.0)
            }
        },
        -1.0,
        1.0,
        p,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomials_are_exact() {
        let r = integrate(|x| C64::new(x.powi(5) - 3.0 * x * x, x), -1.0, 2.0, &QuadParams::default()).unwrap();
        assert!((r.value - C64::new(10.5 - 9.0, 1.5)).norm() < 1e-13);
        assert_eq!(r.evals, 15);
    }

    #[test]
    fn oscillatory_and_peaked() {
        let p = QuadParams::with_tol(1e-12, 1e-12);
        let r = integrate(|x| C64::new((20.0 * x).cos(), 0.0), 0.0, PI, &p).unwrap();
        assert!(r.value.norm() < 1e-11);
        let r = integrate(|x| C64::new(1.0 / (1e-4 + x * x), 0.0), -1.0, 1.0, &p).unwrap();
        let exact = 2.0 * 100.0 * (100.0f64).atan();
        assert!((r.value.re - exact).abs() < 1e-9 * exact);
    }

    #[test]
    fn infinite_ranges() {
        let p = QuadParams::with_tol(1e-13, 1e-13);
        let r = integrate_to_infinity(|x| C64::new((-x).exp(), 0.0), 0.0, &p).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-12);
        let r = integrate_line(|x| C64::new((-PI * x * x).exp(), 0.0), &p).unwrap();
        assert!((r.value.re - 1.0).abs() < 1e-12);
    }

    #[test]
    fn evaluation_cap() {
        let p = QuadParams { abs_tol: 1e-15, rel_tol: 0.0, max_evals: 100 };
        assert!(matches!(integrate(|x| C64::new(x.abs().sqrt(), 0.0), -1.0, 1.0, &p), Err(Error::Quadrature(_))));
    }
}
