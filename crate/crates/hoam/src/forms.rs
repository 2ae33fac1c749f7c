//! The concrete function zoo: the logarithm-of-eta form on the covering
//! group, and the tower over the free commutator subgroup — a holomorphic
//! period map `H` onto the complement of the hexagonal lattice, its
//! Weierstrass-zeta composite `W`, the iterated integral `K`, and the
//! real-analytic pair `A`, `B` splitting the biperiodic pullback `B11`.
//!
//! Each carries a simple translation law layer by layer: `H` gains a lattice
//! period, `W` gains the quasi-period character, `K` and `A` gain terms one
//! multiplicative level up, which is what the verifier measures.

use std::f64::consts::PI;

use crate::covering::CoveringElement;
use crate::special::eta::{eta_pow, eta_power_series, log_eta};
use crate::special::quad::GaussLegendre;
use crate::special::storus::STorus;
use crate::special::weier::EquianharmonicLattice;
use crate::{C64, HoamError, Result};

/// Moebius action of a real 2x2 matrix on the upper half plane.
pub fn moebius(m: &[f64; 4], z: C64) -> C64 {
    (m[0] * z + m[1]) / (m[2] * z + m[3])
}

/// Free generators of the commutator subgroup of the modular group.
pub const COMM_C: [f64; 4] = [2.0, -1.0, -1.0, 1.0];
pub const COMM_D: [f64; 4] = [2.0, 1.0, 1.0, 1.0];

pub fn mat_mul(a: &[f64; 4], b: &[f64; 4]) -> [f64; 4] {
    [
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    ]
}

pub struct ExplicitForms {
    pub lat: EquianharmonicLattice,
    pub torus: STorus,
    gl: GaussLegendre,
    eta4: Vec<f64>,
    anchor: C64,
    anchor_a: C64,
}

impl ExplicitForms {
    pub fn new() -> Result<Self> {
        let lat = EquianharmonicLattice::new();
        let torus = STorus::new(lat.varpi);
        let eta4: Vec<f64> = eta_power_series(4, 600).iter().map(|&c| c as f64).collect();
        let anchor = C64::new(-1.5, 3.0);
        let h0 = h_series(&eta4, anchor)?;
        let anchor_a = strip_a(&torus, h0)?;
        Ok(ExplicitForms {
            lat,
            torus,
            gl: GaussLegendre::new(32),
            eta4,
            anchor,
            anchor_a,
        })
    }

    /// `H(z) = -sum_k c_k e^{2 pi i (k + 1/6) z} / (k + 1/6)`: the primitive
    /// of `-2 pi i eta^4` vanishing at the cusp. Maps the upper half plane
    /// onto the complement of the period lattice.
    pub fn h_form(&self, z: C64) -> Result<C64> {
        h_series(&self.eta4, z)
    }

    /// `H'(z) = -2 pi i eta(z)^4`.
    pub fn h_prime(&self, z: C64) -> Result<C64> {
        Ok(-C64::i() * 2.0 * PI * eta_pow(z, C64::new(4.0, 0.0))?)
    }

    /// `W = zeta_w o H`: inherits a quasi-period character from each lattice
    /// period that `H` gains.
    pub fn w_form(&self, z: C64) -> Result<C64> {
        self.lat.zeta_w(self.h_form(z)?)
    }

    /// The period `H(gamma z) - H(z)`, a lattice point independent of `z`.
    pub fn lambda_of(&self, m: &[f64; 4]) -> Result<C64> {
        let z = C64::new(0.11, 1.3);
        Ok(self.h_form(moebius(m, z))? - self.h_form(z)?)
    }

    /// Iterated integral `K(z) = int W dH` from the anchor point. Its second
    /// multiplicative difference is the asymmetric pairing
    /// `hbar(lambda(gamma)) lambda(delta)`.
    pub fn k_form(&self, z: C64) -> Result<C64> {
        self.integrate_path(|t| Ok(self.w_form(t)? * self.h_prime(t)?), self.anchor, z)
    }

    /// Derivative of the strip primitive underlying `A`.
    fn a_prime(&self, u: C64) -> Result<C64> {
        let lead = 2.0 * PI / (3f64.sqrt() * self.lat.varpi)
            * (u / self.lat.varpi - C64::new(0.0, 3f64.sqrt() / 2.0));
        Ok(lead + self.torus.s_prime(u)?
            - self
                .torus
                .s_prime(self.lat.varpi * self.torus.rho - u)?)
    }

    /// `A(z)`: anchored integral of `a'(H) H'`, single-valued on the whole
    /// upper half plane because the integrand is holomorphic there (the
    /// poles of `a'` sit on the lattice, which `H` omits).
    pub fn a_form(&self, z: C64) -> Result<C64> {
        let i = self.integrate_path(
            |t| Ok(self.a_prime(self.h_form(t)?)? * self.h_prime(t)?),
            self.anchor,
            z,
        )?;
        Ok(self.anchor_a + i)
    }

    /// Pullback of the real biperiodic-up-to-affine function along `H`.
    pub fn b11_form(&self, z: C64) -> Result<f64> {
        self.torus.b11(self.h_form(z)?)
    }

    /// `B = B11 - A`; globally equals `conj A`, which the tests confirm.
    pub fn b_form(&self, z: C64) -> Result<C64> {
        Ok(self.b11_form(z)? - self.a_form(z)?)
    }

    fn integrate_path<F>(&self, f: F, a: C64, b: C64, ) -> Result<C64>
    where
        F: Fn(C64) -> Result<C64>,
    {
        let panels = (3.0 * (b - a).norm()).ceil().max(6.0) as usize;
        let step = (b - a) / panels as f64;
        let mut acc = C64::new(0.0, 0.0);
        for p in 0..panels {
            let lo = a + step * p as f64;
            let half = step * 0.5;
            let mid = lo + half;
            for (x, w) in self.gl.nodes.iter().zip(&self.gl.weights) {
                acc += half * *w * f(mid + half * *x)?;
            }
        }
        Ok(acc)
    }
}

/// `(pi / (2 sqrt 3)) + (pi / sqrt 3)(u / varpi - i sqrt(3)/2)^2
///  + S(u) + S(varpi rho - u)`: valid in the horizontal period strip.
fn strip_a(torus: &STorus, u: C64) -> Result<C64> {
    let w = u / torus.varpi - C64::new(0.0, 3f64.sqrt() / 2.0);
    Ok(PI / (2.0 * 3f64.sqrt()) + PI / 3f64.sqrt() * w * w
        + torus.s_func(u)?
        + torus.s_func(torus.varpi * torus.rho - u)?)
}

fn h_series(coeffs: &[f64], z: C64) -> Result<C64> {
    if z.im < 0.02 {
        return Err(HoamError::domain("h_form: too close to the real axis"));
    }
    let q = (C64::i() * 2.0 * PI * z).exp();
    let lead = (C64::i() * PI * z / 3.0).exp(); // e^{2 pi i z / 6}
    let mut qk = C64::new(1.0, 0.0);
    let mut acc = C64::new(0.0, 0.0);
    for (k, &c) in coeffs.iter().enumerate() {
        let term = c / (k as f64 + 1.0 / 6.0) * qk;
        acc += term;
        if term.norm() < 1e-18 * acc.norm() {
            return Ok(-lead * acc);
        }
        qk *= q;
    }
    Err(HoamError::convergence("h_form series truncated too early"))
}

/// `L(z, theta) = (1/2) log y + 2 log eta(z) + i theta` on the covering
/// space; shifts by `i alpha(gamma)` under the covering group.
pub fn l_form(z: C64, theta: f64) -> Result<C64> {
    Ok(0.5 * z.im.ln() + 2.0 * log_eta(z)? + C64::new(0.0, theta))
}

/// `e^{r L} = y^{r/2} eta(z)^{2r} e^{i r theta}` for complex `r`.
pub fn exp_r_l(r: C64, z: C64, theta: f64) -> Result<C64> {
    Ok((r * l_form(z, theta)?).exp())
}

/// The additive character `alpha`: `L(g(z, theta)) - L(z, theta) = i alpha(g)`.
pub fn alpha_of(g: &CoveringElement) -> Result<f64> {
    let (z, theta) = (C64::new(0.3, 1.7), 0.4);
    let (zi, ti) = g.apply(z, theta);
    let d = l_form(zi, ti)? - l_form(z, theta)?;
    if d.re.abs() > 1e-9 {
        return Err(HoamError::check_failed(format!(
            "alpha_of: difference not purely imaginary (re = {})",
            d.re
        )));
    }
    Ok(d.im)
}
