//! Shared fixtures for the kernel benchmarks.

use std::collections::BTreeMap;

use num_complex::Complex64;
use thetalift::weilrep::{CuspForm, HarmonicMaassInput};
use thetalift::{DiscriminantPair, Ratio};

/// Deterministic points in the strip `|x| ≤ 1/2`, `0.4 ≤ y ≤ 1.6`.
pub fn sample_points(n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|i| {
            let t = i as f64 / n.max(1) as f64;
            Complex64::new(-0.5 + 0.987 * t, 0.4 + 1.2 * ((7.0 * t) % 1.0))
        })
        .collect()
}

/// Weight-2 input at level 1 for `Δ = 5` with one principal-part term and two `c⁻` terms.
pub fn example_input() -> HarmonicMaassInput {
    let mut f = HarmonicMaassInput::new(2, DiscriminantPair::new(5, 1, 1).expect("admissible pair"));
    f.set_plus(Ratio::new(-5, 4), 1, Complex64::new(1.0, 0.3))
        .set_minus(Ratio::new(-5, 4), 1, Complex64::new(0.4, -0.2))
        .set_minus(Ratio::from_integer(-5), 0, Complex64::new(-0.1, 0.05));
    f
}

/// Ramanujan's Δ with `len` coefficients.
pub fn delta_form(len: usize) -> CuspForm {
    let mut poly = vec![0i128; len + 1];
    poly[0] = 1;
    for n in 1..=len {
        for _ in 0..24 {
            for i in (n..=len).rev() {
                poly[i] -= poly[i - n];
            }
        }
    }
    let coeffs: BTreeMap<i64, Complex64> = (1..=len).map(|n| (n as i64, Complex64::new(poly[n - 1] as f64, 0.0))).collect();
    CuspForm::new(1, 12, coeffs).expect("valid cusp form")
}
