//! The doubly periodic building blocks living on the quotient torus of the
//! hexagonal lattice: a lacunary logarithmic series `S`, its single-valued
//! real combination `T`, the biperiodic-up-to-affine function `b11`, and the
//! two-variable generating series whose double contour coefficient recovers
//! `b11` — kept as an independent route for cross-checking.

use std::f64::consts::PI;

use crate::{C64, HoamError, Result};

pub struct STorus {
    pub varpi: f64,
    pub rho: C64,
    /// Nome of the hexagonal lattice: `q = -e^{-pi sqrt 3}`.
    pub q: f64,
}

impl STorus {
    pub fn new(varpi: f64) -> Self {
        STorus {
            varpi,
            rho: C64::from_polar(1.0, PI / 3.0),
            q: -(-PI * 3f64.sqrt()).exp(),
        }
    }

    /// `sum_{m >= 1} xi^m / (m (q^m - 1))`, `xi = e^{2 pi i u / varpi}`.
    /// Caller keeps `Im u` bounded away from zero so the series converges.
    fn s_series(&self, u: C64) -> Result<C64> {
        let xi = (C64::i() * 2.0 * PI * u / self.varpi).exp();
        let mut xim = C64::new(1.0, 0.0);
        let mut qm = 1.0f64;
        let mut acc = C64::new(0.0, 0.0);
        for m in 1..=20_000u64 {
            xim *= xi;
            qm *= self.q;
            let term = xim / ((qm - 1.0) * m as f64);
            acc += term;
            if m > 40 && term.norm() < 1e-18 * (1.0 + acc.norm()) {
                return Ok(acc);
            }
        }
        Err(HoamError::convergence("s_series did not converge"))
    }

    /// `S(u)`, extended below the convergence strip by
    /// `S(u) = S(u + varpi rho) + Log(1 - e^{2 pi i u / varpi})`
    /// (principal logarithm, so cuts appear below the real axis).
    pub fn s_func(&self, u: C64) -> Result<C64> {
        let mut u = u;
        let mut acc = C64::new(0.0, 0.0);
        for _ in 0..200 {
            if u.im >= 0.05 * self.varpi {
                return Ok(acc + self.s_series(u)?);
            }
            let xi = (C64::i() * 2.0 * PI * u / self.varpi).exp();
            let w = 1.0 - xi;
            if w.norm() < 1e-12 {
                return Err(HoamError::domain("s_func: logarithmic singularity"));
            }
            acc += w.ln();
            u += self.rho * self.varpi;
        }
        Err(HoamError::convergence("s_func extension did not terminate"))
    }

    /// `S'(u) = (2 pi i / varpi) P(e^{2 pi i u / varpi})`.
    pub fn s_prime(&self, u: C64) -> Result<C64> {
        let xi = (C64::i() * 2.0 * PI * u / self.varpi).exp();
        Ok(C64::i() * 2.0 * PI / self.varpi * self.cap_p(xi)?)
    }

    /// `P(xi) = sum_{m >= 1} xi^m / (q^m - 1)`, continued outside the unit
    /// disk by `P(xi) = P(q xi) + xi / (xi - 1)`.
    pub fn cap_p(&self, xi: C64) -> Result<C64> {
        let mut xi = xi;
        let mut acc = C64::new(0.0, 0.0);
        for _ in 0..40 {
            if xi.norm() < 0.5 {
                let mut xim = C64::new(1.0, 0.0);
                let mut qm = 1.0f64;
                let mut series = C64::new(0.0, 0.0);
                for m in 1..=2000u64 {
                    xim *= xi;
                    qm *= self.q;
                    let term = xim / (qm - 1.0);
                    series += term;
                    if m > 40 && term.norm() < 1e-18 * (1.0 + series.norm()) {
                        return Ok(acc + series);
                    }
                }
                return Err(HoamError::convergence("cap_p series did not converge"));
            }
            if (xi - 1.0).norm() < 1e-12 {
                return Err(HoamError::domain("cap_p: pole at xi = 1"));
            }
            acc += xi / (xi - 1.0);
            xi *= self.q;
        }
        Err(HoamError::convergence("cap_p contraction did not terminate"))
    }

    /// `T(u) = S(u) + S(-conj u) = 2 Re S(u)`, continued to all of the plane
    /// minus the lower lattice translates by
    /// `T(u) = T(u + varpi rho) + 2 ln |1 - e^{2 pi i u / varpi}|`.
    /// Single-valued and real, unlike `S` itself.
    pub fn t_func(&self, u: C64) -> Result<f64> {
        let mut u = u;
        let mut acc = 0.0f64;
        for _ in 0..200 {
            if u.im >= 0.05 * self.varpi {
                return Ok(acc + 2.0 * self.s_series(u)?.re);
            }
            let xi = (C64::i() * 2.0 * PI * u / self.varpi).exp();
            let d = (1.0 - xi).norm();
            if d < 1e-12 {
                return Err(HoamError::domain("t_func: logarithmic singularity"));
            }
            acc += 2.0 * d.ln();
            u += self.rho * self.varpi;
        }
        Err(HoamError::convergence("t_func extension did not terminate"))
    }

    /// The real biperiodic-up-to-affine function: a quadratic polynomial in
    /// `(u, conj u)` plus `T(u) + T(varpi rho - u)`.
    pub fn b11(&self, u: C64) -> Result<f64> {
        let w = u / self.varpi - C64::new(0.0, 3f64.sqrt() / 2.0);
        let poly = PI / 3f64.sqrt() * (2.0 * (w * w).re + 1.0);
        Ok(poly + self.t_func(u)? + self.t_func(self.varpi * self.rho - u)?)
    }

    /// One slot of the generating series:
    /// `G_mu(u, w) = sum_{m in Z} xi^{mu + m} / ((mu + m)(eta q^m - 1))` with
    /// `xi^t = exp(t 2 pi i u / varpi)` and `eta = e^{-w varpi sqrt 3}`.
    /// Valid for `mu` off the integers and `0 < Im u < varpi sqrt(3)/2`; the
    /// `m <= -1` half is summed as `xi^{mu-m} q^m / ((mu - m)(eta - q^m))` to
    /// dodge overflow in `q^{-m}`.
    pub fn g_mu(&self, mu: C64, u: C64, w: C64) -> Result<C64> {
        let xi_exp = C64::i() * 2.0 * PI * u / self.varpi;
        let eta = (-w * self.varpi * 3f64.sqrt()).exp();
        let mut acc = C64::new(0.0, 0.0);
        let mut qm = 1.0f64;
        for m in 0..=2000u64 {
            let idx = mu + m as f64;
            if idx.norm() < 1e-9 {
                return Err(HoamError::domain("g_mu: index collides with an integer"));
            }
            let den = eta * qm - 1.0;
            if den.norm() < 1e-12 {
                return Err(HoamError::domain("g_mu: pole in the eta variable"));
            }
            let term = (idx * xi_exp).exp() / (idx * den);
            acc += term;
            if m > 40 && term.norm() < 1e-18 * (1.0 + acc.norm()) {
                break;
            }
            qm *= self.q;
        }
        let mut qmp = 1.0f64;
        for mp in 1..=2000u64 {
            qmp *= self.q;
            let idx = mu - mp as f64;
            let den = eta - qmp;
            if den.norm() < 1e-12 {
                return Err(HoamError::domain("g_mu: pole in the eta variable"));
            }
            let term = (idx * xi_exp).exp() * qmp / (idx * den);
            acc += term;
            if mp > 40 && term.norm() < 1e-18 * (1.0 + acc.norm()) {
                return Ok(acc);
            }
        }
        Err(HoamError::convergence("g_mu did not converge"))
    }

    /// The full two-variable generating series
    /// `h(v, w; u) = G_mu(u, w) + G_{-mu}(-conj u, -v)`,
    /// `mu = (v + w) varpi / (2 pi)`.
    pub fn h_gen(&self, v: C64, w: C64, u: C64) -> Result<C64> {
        let mu = (v + w) * self.varpi / (2.0 * PI);
        Ok(self.g_mu(mu, u, w)? + self.g_mu(-mu, -u.conj(), -v)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::weier::EquianharmonicLattice;

    fn torus() -> STorus {
        STorus::new(EquianharmonicLattice::new().varpi)
    }

    #[test]
    fn b11_is_the_torus_mean_of_the_generating_series() {
        // The constant double-contour coefficient of h over circles of
        // distinct radii (|v| > |w| fixes the expansion region) equals the
        // closed-form b11 — two disjoint formula pipelines.
        let st = torus();
        let u = st.varpi * C64::new(0.23, 0.31);
        let n = 96;
        let mut mean = C64::new(0.0, 0.0);
        for j in 0..n {
            let v = C64::from_polar(0.11, 2.0 * PI * j as f64 / n as f64);
            for k in 0..n {
                let w = C64::from_polar(0.09, 2.0 * PI * k as f64 / n as f64);
                mean += st.h_gen(v, w, u).unwrap();
            }
        }
        mean /= (n * n) as f64;
        let closed = st.b11(u).unwrap();
        assert!(mean.im.abs() < 1e-10);
        assert!(
            (mean.re - closed).abs() < 1e-10,
            "mean {} vs closed {closed}",
            mean.re
        );
    }

    #[test]
    fn b11_difference_relations() {
        let st = torus();
        let a = 2.0 * PI / (st.varpi * 3f64.sqrt());
        let om1 = C64::new(st.varpi, 0.0);
        let om2 = st.rho * st.varpi;
        let b = |u: C64| st.b11(u).unwrap();
        for &u in &[st.varpi * C64::new(0.23, 0.19), st.varpi * C64::new(0.41, 0.27)] {
            // First differences are affine with slope a and offset a varpi.
            let d1 = b(u + om1) - b(u) - a * ((u + u.conj()).re + st.varpi);
            assert!(d1.abs() < 1e-9, "d1 = {d1}");
            let d2 = b(u + om2) - b(u)
                - a * ((st.rho.conj() * u + st.rho * u.conj()).re + st.varpi);
            assert!(d2.abs() < 1e-9, "d2 = {d2}");
            // Second differences are constant.
            let dd11 = b(u + 2.0 * om1) - 2.0 * b(u + om1) + b(u);
            let dd12 = b(u + om1 + om2) - b(u + om1) - b(u + om2) + b(u);
            let dd22 = b(u + 2.0 * om2) - 2.0 * b(u + om2) + b(u);
            assert!((dd11 - 2.0 * a * st.varpi).abs() < 1e-9);
            assert!((dd12 - a * st.varpi).abs() < 1e-9);
            assert!((dd22 - 2.0 * a * st.varpi).abs() < 1e-9);
        }
    }

    #[test]
    fn extension_identity_holds_inside_the_strip() {
        // Both sides summed directly — the identity, not the implementation.
        let st = torus();
        let u = st.varpi * C64::new(0.17, 0.28);
        let lhs = st.s_series(u).unwrap();
        let xi = (C64::i() * 2.0 * PI * u / st.varpi).exp();
        let rhs = st.s_series(u + st.rho * st.varpi).unwrap() + (1.0 - xi).ln();
        assert!((lhs - rhs).norm() < 1e-13);
    }

    #[test]
    fn s_prime_differentiates_s() {
        let st = torus();
        let u = st.varpi * C64::new(0.13, 0.33);
        let h = 1e-4;
        let fd = (8.0 * (st.s_func(u + h).unwrap() - st.s_func(u - h).unwrap())
            - (st.s_func(u + 2.0 * h).unwrap() - st.s_func(u - 2.0 * h).unwrap()))
            / (12.0 * h);
        let p = st.s_prime(u).unwrap();
        assert!((fd - p).norm() < 1e-10 * (1.0 + p.norm()));
        // Contraction identity for the continued series.
        let xi = C64::new(0.4, 0.1);
        let lhs = st.cap_p(xi).unwrap() - st.cap_p(st.q * xi).unwrap();
        assert!((lhs - xi / (xi - 1.0)).norm() < 1e-14);
        // Continuation reaches outside the unit disk smoothly.
        let big = st.cap_p(C64::new(3.0, 2.0)).unwrap();
        assert!(big.norm() < 10.0 && big.norm() > 0.0);
    }
}
