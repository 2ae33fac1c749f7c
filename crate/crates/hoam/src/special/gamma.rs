//! Gamma function (Lanczos) and the exponential integral `Gamma(0, t)`.

use crate::error::{HoamError, Result};
use crate::C64;
use std::f64::consts::PI;

// Lanczos coefficients, g = 7, n = 9
const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

/// Gamma function on the complex plane (poles at the nonpositive integers
/// come out as huge or infinite values, never NaN for finite input off the
/// poles).
pub fn gamma(z: C64) -> C64 {
    if z.re < 0.5 {
        // reflection
        let s = (PI * z).sin();
        if s.norm() == 0.0 {
            return C64::new(f64::INFINITY, 0.0);
        }
        return PI / (s * gamma(C64::new(1.0, 0.0) - z));
    }
    let z = z - 1.0;
    let mut x = C64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powc(z + 0.5) * (-t).exp() * x
}

/// `Gamma(0, t) = E_1(t)` for `t > 0`: power series for small `t`, modified
/// Lentz continued fraction beyond.
pub fn gamma_upper0(t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(HoamError::domain(format!("Gamma(0, {t}) needs t > 0")));
    }
    const EULER: f64 = 0.5772156649015329;
    if t <= 1.2 {
        // E1(t) = -gamma - ln t + sum_{k>=1} (-1)^{k+1} t^k / (k k!)
        let mut term = 1.0;
        let mut acc = 0.0;
        for k in 1..60 {
            term *= -t / k as f64;
            let add = -term / k as f64;
            acc += add;
            if add.abs() < 1e-17 * (1.0 + acc.abs()) {
                break;
            }
        }
        Ok(-EULER - t.ln() + acc)
    } else {
        // E1(t) = e^{-t} / (t + 1/(1 + 1/(t + 2/(1 + 2/(t + ...)))))
        let tiny = 1e-300;
        let mut f = tiny;
        let mut c = f;
        let mut d = 0.0;
        for i in 0..200 {
            // continued fraction in the standard a_i/b_i normal form
            let (a, b) = if i == 0 {
                (1.0, t)
            } else if i % 2 == 1 {
                (((i + 1) / 2) as f64, 1.0)
            } else {
                ((i / 2) as f64, t)
            };
            d = b + a * d;
            if d.abs() < tiny {
                d = tiny;
            }
            c = b + a / c;
            if c.abs() < tiny {
                c = tiny;
            }
            d = 1.0 / d;
            let delta = c * d;
            f *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                return Ok((-t).exp() * f);
            }
        }
        Err(HoamError::convergence("continued fraction for Gamma(0,t)"))
    }
}
