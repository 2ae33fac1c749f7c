//! Riemann zeta on the complex plane and the completed function
//! `Lambda(u) = pi^{-u/2} Gamma(u/2) zeta(u)` with its local expansion data.

use super::gamma::gamma;
use super::quad::taylor_coefficients;
use crate::C64;
use std::f64::consts::PI;

/// Riemann zeta: accelerated alternating series for `Re s >= 0.5`, the
/// functional equation below. Not for use at `s = 1`.
pub fn zeta(s: C64) -> C64 {
    if s.norm() < 1e-8 {
        // The reflection product below degenerates to 0 * inf at s = 0;
        // expand there instead: zeta(0) = -1/2, zeta'(0) = -ln(2 pi)/2.
        return C64::new(-0.5, 0.0) - s * (0.5 * (2.0 * PI).ln());
    }
    if s.re >= 0.5 {
        zeta_alternating(s)
    } else {
        // zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s) zeta(1 - s)
        let one = C64::new(1.0, 0.0);
        C64::new(2.0, 0.0).powc(s)
            * C64::new(PI, 0.0).powc(s - 1.0)
            * (PI / 2.0 * s).sin()
            * gamma(one - s)
            * zeta_alternating(one - s)
    }
}

/// Chebyshev-accelerated alternating series: `eta(s) / (1 - 2^{1-s})`.
/// The weights follow the classic three-term recurrence for acceleration by
/// Chebyshev polynomial moments; the error decays like `(3 + sqrt 8)^{-n}`.
fn zeta_alternating(s: C64) -> C64 {
    let n = 48;
    let nf = n as f64;
    let mut d = (3.0 + 8.0f64.sqrt()).powi(n);
    d = 0.5 * (d + 1.0 / d);
    let mut b = -1.0f64;
    let mut c = -d;
    let mut acc = C64::new(0.0, 0.0);
    for k in 0..n {
        let kf = k as f64;
        c = b - c;
        acc += c * (-s * (kf + 1.0).ln()).exp();
        b *= (kf + nf) * (kf - nf) / ((kf + 0.5) * (kf + 1.0));
    }
    let denom = 1.0 - C64::new(2.0, 0.0).powc(1.0 - s);
    acc / (d * denom)
}

/// Completed zeta `Lambda(u) = pi^{-u/2} Gamma(u/2) zeta(u)`, symmetric
/// under `u <-> 1 - u`; simple poles at `u = 0` and `u = 1`.
pub fn lambda_completed(u: C64) -> C64 {
    C64::new(PI, 0.0).powc(-u / 2.0) * gamma(u / 2.0) * zeta(u)
}

/// Constant term of `Lambda(1 + h) - 1/h` at `h = 0`, extracted by a circle
/// average of the regular part.
pub fn lambda_laurent_a0() -> f64 {
    let c = taylor_coefficients(
        |h| lambda_completed(C64::new(1.0, 0.0) + h) - 1.0 / h,
        C64::new(0.0, 0.0),
        0.25,
        0,
        48,
    );
    c[0].re
}

/// Derivative `Lambda'(2)`, by a circle average around `u = 2`.
pub fn lambda_prime_at_2() -> f64 {
    let c = taylor_coefficients(|u| lambda_completed(u), C64::new(2.0, 0.0), 0.5, 1, 48);
    c[1].re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_classical_values() {
        assert!((zeta(C64::new(2.0, 0.0)).re - PI * PI / 6.0).abs() < 1e-13);
        assert!((zeta(C64::new(3.0, 0.0)).re - 1.2020569031595942).abs() < 1e-13);
        assert!((zeta(C64::new(4.0, 0.0)).re - PI.powi(4) / 90.0).abs() < 1e-13);
        // via the functional equation branch
        assert!((zeta(C64::new(-1.0, 0.0)).re + 1.0 / 12.0).abs() < 1e-13);
        assert!((zeta(C64::new(0.0, 0.0)).re + 0.5).abs() < 1e-13);
        assert!((zeta(C64::new(-2.0, 0.0)).re).abs() < 1e-13);
    }

    #[test]
    fn completed_zeta_functional_equation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for _ in 0..20 {
            // arrange for the two sides to use different algorithm branches
            let u = C64::new(rng.gen_range(0.05..0.45), rng.gen_range(-2.0..2.0));
            let l1 = lambda_completed(u);
            let l2 = lambda_completed(C64::new(1.0, 0.0) - u);
            assert!((l1 - l2).norm() < 1e-10 * (1.0 + l1.norm()), "u = {u}");
        }
        // Lambda(2) = pi/6 * Gamma(1) * pi^-1 ... = zeta(2)/pi = pi/6
        assert!((lambda_completed(C64::new(2.0, 0.0)).re - PI / 6.0).abs() < 1e-13);
    }

    #[test]
    fn laurent_constant_matches_closed_form() {
        // Lambda(1+h) = 1/h + (gamma_Euler - ln 4 pi)/2 + O(h)
        const EULER: f64 = 0.5772156649015329;
        let expect = (EULER - (4.0 * PI).ln()) / 2.0;
        assert!((lambda_laurent_a0() - expect).abs() < 1e-10);
    }

    #[test]
    fn derivative_at_two_matches_richardson_limit() {
        // independent oracle: Richardson-extrapolated central differences
        let f = |x: f64| lambda_completed(C64::new(x, 0.0)).re;
        let d = |h: f64| (f(2.0 + h) - f(2.0 - h)) / (2.0 * h);
        let d1 = d(1e-3);
        let d2 = d(5e-4);
        let richardson = (4.0 * d2 - d1) / 3.0;
        assert!((lambda_prime_at_2() - richardson).abs() < 1e-9);
    }
}
