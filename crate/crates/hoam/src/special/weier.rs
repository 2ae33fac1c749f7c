//! Weierstrass zeta and p-function on the hexagonal lattice
//! `varpi (Z + rho Z)`, `rho = e^{i pi / 3}`, the period lattice with
//! sixfold symmetry (so the quartic invariant vanishes and only every third
//! Eisenstein weight survives).
//!
//! Evaluation is nearest-point reduction into the Voronoi cell (circumradius
//! `varpi / sqrt 3`) followed by the Laurent series, whose coefficients come
//! from the quadratic recursion seeded by the weight-six sum alone. The zeta
//! function picks up the quasi-period homomorphism on the way back.

use std::f64::consts::PI;

use crate::special::gamma::gamma;
use crate::{C64, HoamError, Result};

const KMAX: usize = 45;

pub struct EquianharmonicLattice {
    pub varpi: f64,
    pub rho: C64,
    /// Quasi-periods along `varpi` and `rho varpi`.
    pub eta1: C64,
    pub eta_rho: C64,
    /// `c_k = (2k - 1) G_{2k}`, the Laurent coefficients of the p-function.
    coeffs: Vec<f64>,
}

impl EquianharmonicLattice {
    pub fn new() -> Self {
        let varpi = PI.sqrt() * gamma(C64::new(1.0 / 6.0, 0.0)).re
            / (6.0 * 3f64.sqrt() * gamma(C64::new(2.0 / 3.0, 0.0)).re);
        let rho = C64::from_polar(1.0, PI / 3.0);

        // Weight-six sum from the discriminant-free q-series at tau = rho:
        // q = -e^{-pi sqrt 3}, so thirty terms are far beyond double range.
        let q = -(-PI * 3f64.sqrt()).exp();
        let mut e6 = 1.0;
        let mut qn = 1.0;
        for n in 1..=30u64 {
            qn *= q;
            e6 -= 504.0 * sigma5(n) * qn;
        }
        let g6 = 2.0 * PI.powi(6) / 945.0 * e6 / varpi.powi(6);

        // c_2 = 0 (sixfold symmetry), c_3 = 5 G_6, then
        // c_k = 3 / ((2k + 1)(k - 3)) sum_{m=2}^{k-2} c_m c_{k-m}.
        let mut coeffs = vec![0.0f64; KMAX + 1];
        coeffs[3] = 5.0 * g6;
        for k in 4..=KMAX {
            let mut s = 0.0;
            for m in 2..=k - 2 {
                s += coeffs[m] * coeffs[k - m];
            }
            coeffs[k] = 3.0 / ((2 * k + 1) as f64 * (k - 3) as f64) * s;
        }

        let mut lat = EquianharmonicLattice {
            varpi,
            rho,
            eta1: C64::new(0.0, 0.0),
            eta_rho: C64::new(0.0, 0.0),
            coeffs,
        };
        lat.eta1 = 2.0 * lat.zeta_laurent(C64::new(varpi / 2.0, 0.0));
        lat.eta_rho = 2.0 * lat.zeta_laurent(rho * varpi / 2.0);
        lat
    }

    pub fn lattice_point(&self, m: i64, n: i64) -> C64 {
        self.varpi * (C64::new(m as f64, 0.0) + self.rho * n as f64)
    }

    /// `m eta1 + n eta_rho`: the additive character the zeta function gains
    /// under translation by `lattice_point(m, n)`.
    pub fn hbar(&self, m: i64, n: i64) -> C64 {
        self.eta1 * m as f64 + self.eta_rho * n as f64
    }

    /// `hbar` evaluated at a point that should lie on the lattice; rejects
    /// points farther than `1e-6` from it.
    pub fn hbar_at(&self, omega: C64) -> Result<C64> {
        let (u0, m, n) = self.reduce(omega);
        if u0.norm() > 1e-6 {
            return Err(HoamError::domain("hbar_at: point is not on the lattice"));
        }
        Ok(self.hbar(m, n))
    }

    /// Write `u = u0 + lattice_point(m, n)` with `u0` in the Voronoi cell of
    /// the origin. Returns `(u0, m, n)`.
    pub fn reduce(&self, u: C64) -> (C64, i64, i64) {
        let b = u.im / (self.varpi * 3f64.sqrt() / 2.0);
        let a = (u.re - b * self.varpi * 0.5) / self.varpi;
        let (m0, n0) = (a.round() as i64, b.round() as i64);
        let mut best = (u, 0i64, 0i64);
        let mut best_d = f64::INFINITY;
        for dm in -1..=1 {
            for dn in -1..=1 {
                let (m, n) = (m0 + dm, n0 + dn);
                let d = (u - self.lattice_point(m, n)).norm();
                if d < best_d {
                    best_d = d;
                    best = (u - self.lattice_point(m, n), m, n);
                }
            }
        }
        best
    }

    /// `1/u - sum_{k >= 2} c_k u^{2k-1} / (2k - 1)`; caller guarantees `u`
    /// is inside the convergence disk `|u| < varpi`.
    fn zeta_laurent(&self, u: C64) -> C64 {
        let u2 = u * u;
        let mut upow = u; // u^{2k-1}, starting at k = 1
        let mut acc = 1.0 / u;
        for k in 2..=KMAX {
            upow *= u2;
            acc -= self.coeffs[k] / (2 * k - 1) as f64 * upow;
        }
        acc
    }

    /// Weierstrass zeta: odd, `1/u` pole at each lattice point, and
    /// `zeta(u + omega) = zeta(u) + hbar(omega)`.
    pub fn zeta_w(&self, u: C64) -> Result<C64> {
        let (u0, m, n) = self.reduce(u);
        if u0.norm() < 1e-9 {
            return Err(HoamError::domain("zeta_w: pole at a lattice point"));
        }
        Ok(self.zeta_laurent(u0) + self.hbar(m, n))
    }

    /// Weierstrass p-function: even, doubly periodic, `-zeta'`.
    pub fn wp(&self, u: C64) -> Result<C64> {
        let (u0, _, _) = self.reduce(u);
        if u0.norm() < 1e-9 {
            return Err(HoamError::domain("wp: pole at a lattice point"));
        }
        let u2 = u0 * u0;
        let mut upow = C64::new(1.0, 0.0); // u^{2k-2}, starting at k = 1
        let mut acc = 1.0 / u2;
        for k in 2..=KMAX {
            upow *= u2;
            acc += self.coeffs[k] * upow;
        }
        Ok(acc)
    }
}

impl Default for EquianharmonicLattice {
    fn default() -> Self {
        Self::new()
    }
}

fn sigma5(n: u64) -> f64 {
    let mut acc = 0u64;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            acc += d.pow(5);
            let e = n / d;
            if e != d {
                acc += e.pow(5);
            }
        }
        d += 1;
    }
    acc as f64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk_points(lat: &EquianharmonicLattice, radius: f64) -> Vec<C64> {
        let r = (radius / lat.varpi).ceil() as i64 + 2;
        let mut pts = Vec::new();
        for m in -2 * r..=2 * r {
            for n in -2 * r..=2 * r {
                if m == 0 && n == 0 {
                    continue;
                }
                let w = lat.lattice_point(m, n);
                if w.norm() <= radius {
                    pts.push(w);
                }
            }
        }
        pts
    }

    #[test]
    fn quasi_periods_satisfy_the_legendre_relation() {
        let lat = EquianharmonicLattice::new();
        let lhs = lat.eta1 * lat.rho * lat.varpi - lat.eta_rho * lat.varpi;
        let expect = C64::new(0.0, 2.0 * PI);
        assert!((lhs - expect).norm() < 1e-9, "legendre defect {}", (lhs - expect).norm());
        // Closed form forced by the sixfold symmetry.
        let closed = 2.0 * PI / (3f64.sqrt() * lat.varpi);
        assert!((lat.eta1 - closed).norm() < 1e-11);
        assert!((lat.eta_rho - lat.rho.conj() * lat.eta1).norm() < 1e-11);
    }

    #[test]
    fn eisenstein_sums_match_brute_force() {
        let lat = EquianharmonicLattice::new();
        let pts = disk_points(&lat, 80.0 * lat.varpi);
        let mut g4 = C64::new(0.0, 0.0);
        let mut g6 = C64::new(0.0, 0.0);
        let mut g12 = C64::new(0.0, 0.0);
        for w in &pts {
            let w2 = w * w;
            let w4 = w2 * w2;
            g4 += 1.0 / w4;
            g6 += 1.0 / (w4 * w2);
            g12 += 1.0 / (w4 * w4 * w4);
        }
        let scale = lat.varpi.powi(-4);
        assert!(g4.norm() < 1e-10 * scale, "G4 = {g4}");
        let c3 = 5.0;
        let g6_series = lat.coeffs[3] / c3;
        assert!((g6 - g6_series).norm() < 1e-6 * g6_series.abs());
        let g12_series = lat.coeffs[6] / 11.0;
        assert!((g12 - g12_series).norm() < 1e-8 * g12_series.abs());
        // Sixfold symmetry kills everything off the weight-six ladder.
        for k in [2usize, 4, 5, 7, 8] {
            assert_eq!(lat.coeffs[k], 0.0, "c_{k}");
        }
    }

    #[test]
    fn zeta_matches_regularized_lattice_sum() {
        let lat = EquianharmonicLattice::new();
        let pts = disk_points(&lat, 150.0 * lat.varpi);
        for &u in &[
            C64::new(0.31, 0.12) * lat.varpi,
            (C64::new(1.3, 0.0) + C64::new(0.9, 0.0) * lat.rho) * lat.varpi + C64::new(0.21, 0.17),
        ] {
            let mut brute = 1.0 / u;
            for w in &pts {
                brute += 1.0 / (u - w) + 1.0 / w + u / (w * w);
            }
            let fast = lat.zeta_w(u).unwrap();
            assert!(
                (brute - fast).norm() < 1e-3 * fast.norm().max(1.0),
                "u = {u}: {brute} vs {fast}"
            );
        }
    }

    #[test]
    fn wp_matches_brute_sum_outside_the_fundamental_cell() {
        let lat = EquianharmonicLattice::new();
        let pts = disk_points(&lat, 150.0 * lat.varpi);
        let u = C64::new(1.82, 1.11) * lat.varpi;
        let mut brute = 1.0 / (u * u);
        for w in &pts {
            let d = u - w;
            brute += 1.0 / (d * d) - 1.0 / (w * w);
        }
        let fast = lat.wp(u).unwrap();
        assert!((brute - fast).norm() < 1e-3 * fast.norm().max(1.0));
    }

    #[test]
    fn zeta_is_odd_and_wp_is_minus_its_derivative() {
        let lat = EquianharmonicLattice::new();
        let u = C64::new(0.23, 0.31) * lat.varpi + C64::new(0.9, 0.4) * lat.varpi;
        assert!((lat.zeta_w(-u).unwrap() + lat.zeta_w(u).unwrap()).norm() < 1e-12);

        let h = 1e-3;
        let z = |x: f64| lat.zeta_w(u + C64::new(x, 0.0)).unwrap();
        let d1 = (8.0 * (z(h) - z(-h)) - (z(2.0 * h) - z(-2.0 * h))) / (12.0 * h);
        let wp = lat.wp(u).unwrap();
        assert!((d1 + wp).norm() < 1e-9 * wp.norm(), "defect {}", (d1 + wp).norm());
    }

    #[test]
    fn quasi_period_homomorphism_at_lattice_points() {
        let lat = EquianharmonicLattice::new();
        let w = lat.lattice_point(2, -3);
        let h = lat.hbar_at(w + C64::new(1e-9, -1e-9)).unwrap();
        assert!((h - (2.0 * lat.eta1 - 3.0 * lat.eta_rho)).norm() < 1e-12);
        assert!(lat.hbar_at(w + C64::new(0.1, 0.0)).is_err());
    }
}
