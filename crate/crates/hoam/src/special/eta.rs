//! Dedekind eta: principal logarithm with exact branch bookkeeping, complex
//! powers, and integer q-expansion coefficients of integer powers.

use std::f64::consts::PI;

use crate::{C64, HoamError, Result};

/// `sigma_{-1}(n) = sum_{d | n} 1/d`.
pub fn sigma_minus1(n: u64) -> f64 {
    let mut acc = 0.0;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            acc += 1.0 / d as f64;
            let e = n / d;
            if e != d {
                acc += 1.0 / e as f64;
            }
        }
        d += 1;
    }
    acc
}

/// `sum_{d | n} d^p` for complex exponent `p`.
pub fn divisor_power_sum(n: u64, p: C64) -> C64 {
    let mut acc = C64::new(0.0, 0.0);
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            acc += C64::new(d as f64, 0.0).powc(p);
            let e = n / d;
            if e != d {
                acc += C64::new(e as f64, 0.0).powc(p);
            }
        }
        d += 1;
    }
    acc
}

/// `log eta(z) = pi i z / 12 - sum_{n >= 1} sigma_{-1}(n) q^n`, `q = e^{2 pi i z}`.
/// Direct series; accurate only when `Im z` is comfortably positive.
pub(crate) fn log_eta_raw(z: C64) -> C64 {
    let q = (C64::i() * 2.0 * PI * z).exp();
    let mut qn = C64::new(1.0, 0.0);
    let mut acc = C64::new(0.0, 0.0);
    for n in 1..=120u64 {
        qn *= q;
        let term = qn * sigma_minus1(n);
        acc += term;
        if term.norm() < 1e-18 * (1.0 + acc.norm()) {
            break;
        }
    }
    C64::i() * PI * z / 12.0 - acc
}

/// Continuous branch of `log eta` on the upper half plane, by reducing `z`
/// toward the fundamental domain. Uses `eta(z + 1) = e^{pi i / 12} eta(z)`
/// and `eta(-1/z) = sqrt(-iz) eta(z)` with the principal square root, so the
/// result satisfies both exactly (no stray multiples of `2 pi i`).
pub fn log_eta(z: C64) -> Result<C64> {
    if !(z.im > 0.0) {
        return Err(HoamError::domain("log_eta requires Im z > 0"));
    }
    let mut w = z;
    let mut acc = C64::new(0.0, 0.0);
    for _ in 0..200 {
        let k = w.re.round();
        if k != 0.0 {
            w.re -= k;
            acc += C64::i() * PI / 12.0 * k;
        }
        if w.norm() < 1.0 {
            // log eta(w) = log eta(-1/w) - (1/2) Log(-i w)
            acc -= 0.5 * (-C64::i() * w).ln();
            w = -1.0 / w;
        } else {
            return Ok(acc + log_eta_raw(w));
        }
    }
    Err(HoamError::convergence("log_eta reduction did not terminate"))
}

/// `eta(z)^r = exp(r log eta(z))` on the continuous branch.
pub fn eta_pow(z: C64, r: C64) -> Result<C64> {
    Ok((r * log_eta(z)?).exp())
}

/// Integer coefficients `c_0..=c_nmax` of `prod_{n >= 1} (1 - q^n)^r`.
pub fn eta_power_series(r: u32, nmax: usize) -> Vec<i64> {
    let mut c = vec![0i128; nmax + 1];
    c[0] = 1;
    for n in 1..=nmax {
        let mut nc = vec![0i128; nmax + 1];
        let mut binom = 1i128; // C(r, j), built incrementally
        for j in 0..=r as usize {
            let off = n * j;
            if off > nmax {
                break;
            }
            let sign = if j % 2 == 0 { 1 } else { -1 };
            for k in 0..=nmax - off {
                nc[k + off] += sign * binom * c[k];
            }
            binom = binom * (r as i128 - j as i128) / (j as i128 + 1);
        }
        c = nc;
    }
    c.into_iter()
        .map(|v| i64::try_from(v).expect("series coefficient overflows i64"))
        .collect()
}
