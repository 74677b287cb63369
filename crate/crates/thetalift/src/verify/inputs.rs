use num_rational::Ratio;

use crate::arith::{DiscriminantPair, C64};
use crate::weilrep::HarmonicMaassInput;

fn build(k: u32, delta: i64, r: i64, level: i64, plus: &[(i64, i64, i64, C64)], minus: &[(i64, i64, i64, C64)]) -> HarmonicMaassInput {
    let pair = DiscriminantPair::new(delta, r, level).expect("synthetic pair is admissible");
    let mut f = HarmonicMaassInput::new(k, pair);
    for &(num, den, h, v) in plus {
        f.set_plus(Ratio::new(num, den), h, v);
    }
    for &(num, den, h, v) in minus {
        f.set_minus(Ratio::new(num, den), h, v);
    }
    f.validate().expect("synthetic input satisfies support and symmetry");
    f
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Coefficient tables with nonempty principal part that satisfy the support and
/// `±h` symmetry rules. They are not modular; the lift expansion is evaluated
/// termwise, which is all the local identities need.
pub fn synthetic_inputs() -> Vec<HarmonicMaassInput> {
    vec![
        build(
            2,
            5,
            1,
            1,
            &[(-5, 4, 1, c(1.0, 0.3))],
            &[(-5, 4, 1, c(0.4, -0.2)), (-5, 1, 0, c(-0.1, 0.05))],
        ),
        build(
            1,
            1,
            1,
            2,
            &[(-1, 8, 1, c(1.0, 0.0)), (-1, 8, 3, c(-1.0, 0.0)), (-17, 8, 1, c(0.5, 0.0)), (-17, 8, 3, c(-0.5, 0.0))],
            &[(-1, 8, 1, c(0.3, 0.0)), (-1, 8, 3, c(-0.3, 0.0)), (-9, 8, 3, c(0.0, 0.1)), (-9, 8, 1, c(0.0, -0.1))],
        ),
        build(
            1,
            -3,
            1,
            1,
            &[(-3, 4, 1, c(1.0, 0.0)), (-7, 4, 1, c(0.7, 0.0))],
            &[(-3, 4, 1, c(0.2, 0.1)), (-3, 1, 0, c(0.05, 0.0))],
        ),
        build(
            2,
            1,
            1,
            1,
            &[(-1, 4, 1, c(1.0, 0.0)), (-5, 4, 1, c(0.5, 0.0))],
            &[(-1, 4, 1, c(0.3, 0.0)), (-1, 1, 0, c(0.1, 0.0))],
        ),
        build(
            2,
            -7,
            1,
            2,
            &[(-7, 8, 1, c(1.0, 0.0)), (-7, 8, 3, c(-1.0, 0.0))],
            &[(-7, 8, 1, c(0.0, 0.2)), (-7, 8, 3, c(0.0, -0.2))],
        ),
        build(3, -4, 0, 1, &[(-1, 1, 0, c(1.0, 0.0))], &[(-1, 1, 0, c(0.1, 0.0))]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthetic_inputs_are_valid() {
        let v = synthetic_inputs();
        assert_eq!(v.len(), 6);
        assert!(v.iter().all(|f| f.principal_part().next().is_some() && !f.c_minus.is_empty()));
    }
}
