//! Modified Bessel function of the second kind via its cosh integral
//! representation, for real positive argument and complex order.

use crate::special::quad::GaussLegendre;
use crate::{C64, HoamError, Result};

/// `K_s(x) = int_0^infty e^{-x cosh u} cosh(s u) du`, `x > 0`.
///
/// The integrand decays like `exp(-x cosh u + |Re s| u)`, so truncating at
/// `cosh U = 1 + (60 + 10 |s|) / x` keeps the dropped tail below the target
/// accuracy relative to the `e^{-x}` scale of the answer.
pub fn bessel_k(s: C64, x: f64) -> Result<C64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(HoamError::domain("bessel_k requires x > 0"));
    }
    let cutoff = 1.0 + (60.0 + 10.0 * s.norm()) / x;
    let u_max = (cutoff + (cutoff * cutoff - 1.0).sqrt()).ln(); // acosh
    let gl = GaussLegendre::new(32);
    let panels = 10usize;
    let mut acc = C64::new(0.0, 0.0);
    for p in 0..panels {
        let a = u_max * p as f64 / panels as f64;
        let b = u_max * (p + 1) as f64 / panels as f64;
        acc += gl.integrate_segment(
            |t| {
                let u = t.re;
                (s * u).cosh() * (-x * u.cosh()).exp()
            },
            C64::new(a, 0.0),
            C64::new(b, 0.0),
            1,
        );
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn half_integer_order_is_elementary() {
        for &x in &[0.3, 1.0, 5.0] {
            let k = bessel_k(C64::new(0.5, 0.0), x).unwrap();
            let expect = (PI / (2.0 * x)).sqrt() * (-x).exp();
            assert!((k.re - expect).abs() < 1e-12 * expect, "x = {x}: {k}");
            assert!(k.im.abs() < 1e-14);
        }
    }

    #[test]
    fn order_zero_reference_value() {
        let k = bessel_k(C64::new(0.0, 0.0), 1.0).unwrap();
        assert!((k.re - 0.42102443824070834).abs() < 1e-12);
    }

    #[test]
    fn even_in_the_order() {
        let s = C64::new(0.3, 0.7);
        let a = bessel_k(s, 1.2).unwrap();
        let b = bessel_k(-s, 1.2).unwrap();
        assert!((a - b).norm() < 1e-12 * a.norm());
    }

    #[test]
    fn three_term_recurrence() {
        let s = C64::new(0.25, 0.5);
        let x = 0.8;
        let km = bessel_k(s - 1.0, x).unwrap();
        let k0 = bessel_k(s, x).unwrap();
        let kp = bessel_k(s + 1.0, x).unwrap();
        let diff = kp - km - 2.0 * s / x * k0;
        assert!(diff.norm() < 1e-11 * kp.norm(), "residual {}", diff.norm());
    }
}
