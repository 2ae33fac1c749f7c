//! Whittaker W function on the cut plane, complex in all three slots.
//!
//! Four evaluation routes, tried in order, each exact on its domain:
//! a terminating Laguerre form when the first index exceeds the second by a
//! half-integer step, a tilted-ray integral when the Gamma prefactor is
//! safely finite, a two-term Kummer-series combination when the second index
//! is not half an integer, and a Hankel-loop contour on the real half line
//! for the remaining degenerate cases. On the negative real axis every route
//! uses `arg z = +pi`, i.e. the limit from the upper half plane.

use std::f64::consts::PI;

use crate::covering::arg_principal;
use crate::special::gamma::gamma;
use crate::special::quad::{exp_sinh, GaussLegendre};
use crate::{C64, HoamError, Result};

/// Principal log with the negative real axis assigned `arg = +pi`.
pub(crate) fn ln_branch(z: C64) -> C64 {
    C64::new(z.norm().ln(), arg_principal(z.im, z.re))
}

/// Confluent hypergeometric `1F1(a; b; z)` by direct series; for `Re z < 0`
/// the reflection `1F1(a;b;z) = e^z 1F1(b-a;b;-z)` avoids cancellation.
pub fn hyp1f1(a: C64, b: C64, z: C64) -> Result<C64> {
    if z.re < 0.0 {
        return Ok(z.exp() * hyp1f1(b - a, b, -z)?);
    }
    let mut term = C64::new(1.0, 0.0);
    let mut acc = C64::new(1.0, 0.0);
    for k in 0..700 {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        acc += term;
        if term.norm() < 1e-17 * (1.0 + acc.norm()) {
            return Ok(acc);
        }
    }
    Err(HoamError::convergence("1F1 series did not converge"))
}

/// `1 / Gamma(z)`, explicitly zero at the poles of Gamma.
fn recip_gamma(z: C64) -> C64 {
    if z.im.abs() < 1e-12 && z.re < 0.5 && (z.re - z.re.round()).abs() < 1e-12 {
        return C64::new(0.0, 0.0);
    }
    1.0 / gamma(z)
}

/// `W_{kappa, s}(z)`, symmetric in `s <-> -s`, `z` anywhere off the origin
/// (negative reals taken as the limit from above).
pub fn whittaker_w(kappa: C64, s: C64, z: C64) -> Result<C64> {
    if z.norm() == 0.0 {
        return Err(HoamError::domain("whittaker_w requires z != 0"));
    }
    // Terminating case: kappa - mu - 1/2 a small non-negative integer.
    for mu in [s, -s] {
        let n = kappa - mu - 0.5;
        if n.im.abs() < 1e-9 && (n.re - n.re.round()).abs() < 1e-9 && (-0.5..60.5).contains(&n.re)
        {
            return Ok(w_laguerre(mu, n.re.round() as usize, z));
        }
    }
    // Ray integral whenever its Gamma prefactor is comfortably finite.
    for mu in [s, -s] {
        if (mu - kappa + 0.5).re > 0.05 {
            return w_ray(kappa, mu, z);
        }
    }
    // Kummer combination unless 2s sits (nearly) on an integer.
    let two_s = 2.0 * s;
    if (two_s.re - two_s.re.round()).hypot(two_s.im) > 0.05 {
        return w_kummer(kappa, s, z);
    }
    // Loop contour: real argument on the half line.
    if z.im == 0.0 && z.re >= 0.5 {
        return w_loop(kappa, s, z.re);
    }
    Err(HoamError::domain(
        "whittaker_w: argument off the half line with degenerate indices",
    ))
}

/// `W = (-1)^n n! e^{-z/2} z^{mu + 1/2} L_n^{(2 mu)}(z)` for
/// `kappa = n + mu + 1/2`.
pub(crate) fn w_laguerre(mu: C64, n: usize, z: C64) -> C64 {
    let alpha = 2.0 * mu;
    let mut lag = C64::new(0.0, 0.0);
    for k in 0..=n {
        // (-1)^k C(n + alpha, n - k) z^k / k!
        let mut c = C64::new(1.0, 0.0);
        for i in 1..=n - k {
            c *= (alpha + (k + i) as f64) / i as f64;
        }
        let mut zk = C64::new(1.0, 0.0);
        for j in 1..=k {
            zk *= z / j as f64;
        }
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        lag += sign * c * zk;
    }
    let mut pref = if n % 2 == 0 { 1.0 } else { -1.0 };
    for j in 1..=n {
        pref *= j as f64;
    }
    pref * (-z / 2.0).exp() * (ln_branch(z) * (mu + 0.5)).exp() * lag
}

/// Integral along the ray `arg u = phi`, tilted off the positive axis when
/// `z` is not, so the factor `1 + e^{i phi} u / z` never crosses its cut:
/// `W = e^{-z/2} z^kappa e^{i phi (mu - kappa + 1/2)} / Gamma(mu - kappa + 1/2)
///      int_0^inf e^{-e^{i phi} u} u^{mu - kappa - 1/2}
///                (1 + e^{i phi} u / z)^{mu + kappa - 1/2} du`.
pub(crate) fn w_ray(kappa: C64, mu: C64, z: C64) -> Result<C64> {
    let phi = if z.re > 0.2 * z.norm() {
        0.0
    } else if z.im >= 0.0 {
        PI / 4.0
    } else {
        -PI / 4.0
    };
    let rot = C64::from_polar(1.0, phi);
    let a = mu - kappa - 0.5;
    let b = mu + kappa - 0.5;
    let integral = exp_sinh(
        |u| (-rot * u).exp() * (a * u.ln()).exp() * ((1.0 + rot * u / z).ln() * b).exp(),
        0.0,
        1.0,
        1e-13,
    )?;
    let pref = (-z / 2.0).exp()
        * (ln_branch(z) * kappa).exp()
        * (C64::i() * phi * (mu - kappa + 0.5)).exp()
        / gamma(mu - kappa + 0.5);
    Ok(pref * integral)
}

/// `W = Gamma(-2s)/Gamma(1/2 - s - kappa) M_{kappa, s}
///    + Gamma(2s)/Gamma(1/2 + s - kappa) M_{kappa, -s}` with
/// `M_{kappa, mu} = e^{-z/2} z^{1/2 + mu} 1F1(1/2 + mu - kappa; 1 + 2 mu; z)`.
pub(crate) fn w_kummer(kappa: C64, s: C64, z: C64) -> Result<C64> {
    let mut out = C64::new(0.0, 0.0);
    for mu in [s, -s] {
        let coef = gamma(-2.0 * mu) * recip_gamma(0.5 - mu - kappa);
        if coef.norm() == 0.0 {
            continue;
        }
        let m = (-z / 2.0).exp()
            * (ln_branch(z) * (0.5 + mu)).exp()
            * hyp1f1(0.5 + mu - kappa, 1.0 + 2.0 * mu, z)?;
        out += coef * m;
    }
    Ok(out)
}

/// Hankel-loop contour for real `t >= 1/2`: a half-line piece weighted by
/// `2 i sin(pi a)` plus the circle `|x| = 1/2` with the branch
/// `(-x)^a = (1/2)^a e^{i a (phi - pi)}`. Survives `a` integral, where only
/// the circle contributes.
pub(crate) fn w_loop(kappa: C64, s: C64, t: f64) -> Result<C64> {
    let a = s - kappa - 0.5;
    let b = s + kappa - 0.5;
    let line = exp_sinh(
        |x| (a * x.ln()).exp() * (-x).exp() * (b * (1.0 + x / t).ln()).exp(),
        0.5,
        1.0,
        1e-13,
    )?;
    let gl = GaussLegendre::new(32);
    let circle = gl.integrate_segment(
        |phi| {
            let p = phi.re;
            let x = C64::from_polar(0.5, p);
            let branch = (a * (0.5f64.ln() + C64::i() * (p - PI))).exp();
            let dx = C64::i() * x;
            (-x).exp() * branch * ((1.0 + x / t).ln() * b).exp() * dx
        },
        C64::new(0.0, 0.0),
        C64::new(2.0 * PI, 0.0),
        4,
    );
    let total = C64::i() * 2.0 * (PI * a).sin() * line + circle;
    Ok(-gamma(kappa + 0.5 - s) / (C64::i() * 2.0 * PI)
        * (-t / 2.0).exp()
        * C64::new(t, 0.0).powc(kappa)
        * total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::bessel::bessel_k;
    use crate::special::gamma::gamma_upper0;
    use crate::special::quad::taylor_coefficients;

    fn w(kappa: f64, s: f64, t: f64) -> C64 {
        whittaker_w(C64::new(kappa, 0.0), C64::new(s, 0.0), C64::new(t, 0.0)).unwrap()
    }

    #[test]
    fn terminating_cases_are_elementary() {
        for &t in &[0.7, 3.0] {
            assert!((w(0.0, 0.5, t) - (-t / 2.0).exp()).norm() < 1e-14);
            assert!((w(1.0, 0.5, t) - t * (-t / 2.0).exp()).norm() < 1e-14);
        }
        // Negative argument: the exponential grows.
        assert!((w(0.0, 0.5, -4.0).re - 2f64.exp()).abs() < 1e-12);
    }

    #[test]
    fn ray_and_kummer_routes_agree() {
        let cases = [
            (C64::new(0.3, 0.0), C64::new(0.35, 0.2), C64::new(2.4, 1.1)),
            (C64::new(-0.2, 0.0), C64::new(0.3, 0.15), C64::new(-3.0, 0.0)),
            (C64::new(0.1, 0.0), C64::new(0.4, 0.0), C64::new(-1.5, -2.0)),
        ];
        for (kappa, s, z) in cases {
            let ray = w_ray(kappa, s, z).unwrap();
            let kum = w_kummer(kappa, s, z).unwrap();
            assert!(
                (ray - kum).norm() < 1e-10 * ray.norm(),
                "kappa {kappa} s {s} z {z}: {ray} vs {kum}"
            );
        }
    }

    #[test]
    fn loop_route_agrees_on_the_half_line() {
        let generic = w_loop(C64::new(-0.3, 0.0), C64::new(0.27, 0.0), 1.7).unwrap();
        let ray = w_ray(C64::new(-0.3, 0.0), C64::new(0.27, 0.0), C64::new(1.7, 0.0)).unwrap();
        assert!((generic - ray).norm() < 1e-10 * ray.norm());

        // Integer exponent: the half-line piece drops out entirely.
        let degenerate = w_loop(C64::new(2.5, 0.0), C64::new(1.0, 0.0), 2.3).unwrap();
        let lag = w_laguerre(C64::new(1.0, 0.0), 1, C64::new(2.3, 0.0));
        assert!((degenerate - lag).norm() < 1e-10 * lag.norm());
    }

    #[test]
    fn kappa_zero_reduces_to_macdonald() {
        let s = C64::new(0.3, 0.7);
        let x = 1.6;
        let lhs = whittaker_w(C64::new(0.0, 0.0), s, C64::new(x, 0.0)).unwrap();
        let rhs = (x / PI).sqrt() * bessel_k(s, x / 2.0).unwrap();
        assert!((lhs - rhs).norm() < 1e-10 * rhs.norm());
    }

    #[test]
    fn s_derivative_at_half_is_an_incomplete_gamma() {
        let t = 1.3;
        let coeffs = taylor_coefficients(
            |s| whittaker_w(C64::new(0.0, 0.0), s, C64::new(t, 0.0)).unwrap(),
            C64::new(0.5, 0.0),
            0.1,
            1,
            24,
        );
        let expect = (t / 2.0).exp() * gamma_upper0(t).unwrap();
        assert!((coeffs[0] - (-t / 2.0f64).exp()).norm() < 1e-11);
        assert!(
            (coeffs[1].re - expect).abs() < 1e-9,
            "dW/ds = {} vs {expect}",
            coeffs[1]
        );
    }

    #[test]
    fn satisfies_the_radial_differential_equation() {
        // h(y) = W_{r/2, s}(4 pi nu y) solves
        // -y^2 h'' + (4 pi^2 nu^2 y^2 - 2 pi nu r y + s^2 - 1/4) h = 0.
        let (r, s, nu, y) = (1.2, 0.37, 1.0, 0.9);
        let h = |yy: f64| w(r / 2.0, s, 4.0 * PI * nu * yy);
        let dh = 0.01;
        let d2 = (-h(y - 2.0 * dh) - h(y + 2.0 * dh) + 16.0 * (h(y - dh) + h(y + dh))
            - 30.0 * h(y))
            / (12.0 * dh * dh);
        let pot = 4.0 * PI * PI * nu * nu * y * y - 2.0 * PI * nu * r * y + s * s - 0.25;
        let residual = -y * y * d2 + pot * h(y);
        let scale = (4.0 * PI * PI * nu * nu * y * y * h(y)).norm();
        assert!(residual.norm() < 1e-6 * scale, "residual {residual}");
    }

    #[test]
    fn decays_like_the_leading_asymptotic_term() {
        let (kappa, s, t) = (0.3, 0.2, 40.0);
        let ratio = w(kappa, s, t) / ((-t / 2.0).exp() * t.powf(kappa));
        assert!((ratio.re - 1.0).abs() < 0.05 && ratio.im.abs() < 1e-12, "{ratio}");
    }
}
