#![allow(dead_code)]

use std::collections::BTreeMap;

use thetalift::weilrep::CuspForm;
use thetalift::C64;

/// Ramanujan's τ(n) for `n ≤ len`, from the product `q∏(1 − qⁿ)²⁴`.
pub fn ramanujan_tau(len: usize) -> Vec<i128> {
    let mut poly = vec![0i128; len + 1];
    poly[0] = 1;
    for n in 1..=len {
        for _ in 0..24 {
            for i in (n..=len).rev() {
                poly[i] -= poly[i - n];
            }
        }
    }
    // coefficient of q^n in q∏ is poly[n − 1]
    (0..=len).map(|n| if n == 0 { 0 } else { poly[n - 1] }).collect()
}

/// The weight-12 cusp form of level 1 with `len` coefficients.
pub fn delta_form(len: usize) -> CuspForm {
    let tau = ramanujan_tau(len);
    let coeffs: BTreeMap<i64, C64> = (1..=len).map(|n| (n as i64, C64::new(tau[n] as f64, 0.0))).collect();
    CuspForm::new(1, 12, coeffs).unwrap()
}
