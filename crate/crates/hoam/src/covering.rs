//! The universal covering group of `SL2(R)` and its action on `H x R`.
//!
//! An element is stored as a genuine `SL2(R)` matrix together with an integer
//! winding number. For a fixed matrix the principal argument of `c z + d` is
//! continuous on the upper half plane (the sign of its imaginary part is the
//! sign of `c`), so
//!
//! ```text
//! (z, th) |-> ( (a z + b) / (c z + d),  th - Arg(c z + d) + 2 pi winding )
//! ```
//!
//! is a well-defined continuous action and `(matrix, winding)` parametrizes
//! the covering group faithfully. Matrices are *not* normalized up to sign:
//! the lifts of `-I` with winding `0` and `1` are the two central elements
//! `k(-pi)` and `k(pi)`, which differ by a full turn.
//!
//! Composition and inversion multiply matrices exactly and recover the new
//! winding by comparing the action at one base point; by continuity the
//! result is then correct at every point.

use crate::error::{HoamError, Result};
use crate::C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Principal argument in `(-pi, pi]` of `re + i im`, with the convention that
/// negative reals (including `im == -0.0`) get `+pi`.
pub(crate) fn arg_principal(im: f64, re: f64) -> f64 {
    if im == 0.0 {
        if re < 0.0 {
            PI
        } else {
            0.0
        }
    } else {
        im.atan2(re)
    }
}

/// Element of the covering group: row-major `[a, b, c, d]` with `ad - bc = 1`
/// plus a winding number counting full turns of the angle coordinate.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CoveringElement {
    pub mat: [f64; 4],
    pub winding: i64,
}

const BASE: C64 = C64::new(0.0, 1.0);

impl CoveringElement {
    pub fn identity() -> Self {
        CoveringElement { mat: [1.0, 0.0, 0.0, 1.0], winding: 0 }
    }

    /// Principal lift of a matrix: winding zero. The determinant must be
    /// positive; it is renormalized to one.
    pub fn lift(mat: [f64; 4]) -> Result<Self> {
        let det = mat[0] * mat[3] - mat[1] * mat[2];
        if !(det.is_finite() && det > 0.0) {
            return Err(HoamError::domain(format!("matrix determinant {det} must be positive")));
        }
        let s = det.sqrt();
        Ok(CoveringElement {
            mat: [mat[0] / s, mat[1] / s, mat[2] / s, mat[3] / s],
            winding: 0,
        })
    }

    /// Horizontal translation `z |-> z + x`.
    pub fn n(x: f64) -> Self {
        CoveringElement { mat: [1.0, x, 0.0, 1.0], winding: 0 }
    }

    /// Dilation `z |-> y z` for `y > 0`.
    pub fn a(y: f64) -> Result<Self> {
        if !(y.is_finite() && y > 0.0) {
            return Err(HoamError::domain(format!("dilation parameter {y} must be positive")));
        }
        let r = y.sqrt();
        Ok(CoveringElement { mat: [r, 0.0, 0.0, 1.0 / r], winding: 0 })
    }

    /// One-parameter rotation subgroup: `k(th)` fixes `i` and adds `th` to
    /// the angle coordinate. `th` is unrestricted; full turns go into the
    /// winding number.
    pub fn k(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        let mat = [c, s, -s, c];
        let winding = solve_winding(&mat, BASE, 0.0, theta);
        CoveringElement { mat, winding }
    }

    /// The standard lifted generators of the modular group:
    /// `t = n(1)` and `s = k(-pi/2)`, the principal lift of `[[0,-1],[1,0]]`.
    pub fn modular_t() -> Self {
        Self::n(1.0)
    }

    pub fn modular_s() -> Self {
        Self::lift([0.0, -1.0, 1.0, 0.0]).expect("unit determinant")
    }

    /// Central generator of the lifted modular group: `zeta = k(pi)`, the lift
    /// of `-I` that adds `+pi` to the angle coordinate.
    pub fn zeta() -> Self {
        Self::k(PI)
    }

    /// Elliptic generators: `eps1 = t^-1 s^-1` of order three modulo the
    /// center (`eps1^3 = zeta`), `eps2 = s^-1 = k(pi/2)` of order two
    /// (`eps2^2 = zeta`).
    pub fn eps1() -> Self {
        Self::modular_t().inverse().compose(&Self::modular_s().inverse())
    }

    pub fn eps2() -> Self {
        Self::modular_s().inverse()
    }

    /// Free generators of the commutator subgroup of the modular group.
    pub fn commutator_c() -> Self {
        Self::lift([2.0, -1.0, -1.0, 1.0]).expect("unit determinant")
    }

    pub fn commutator_d() -> Self {
        Self::lift([2.0, 1.0, 1.0, 1.0]).expect("unit determinant")
    }

    /// Mobius action on the upper half plane alone.
    pub fn apply_z(&self, z: C64) -> C64 {
        let [a, b, c, d] = self.mat;
        (a * z + b) / (c * z + d)
    }

    /// Full action on `H x R`.
    pub fn apply(&self, z: C64, theta: f64) -> (C64, f64) {
        let [a, b, c, d] = self.mat;
        let den = c * z + d;
        let znew = (a * z + b) / den;
        let tnew = theta - arg_principal(den.im, den.re) + 2.0 * PI * self.winding as f64;
        (znew, tnew)
    }

    /// Image of the base point `(i, 0)`; a global coordinate on the group.
    pub fn base_point(&self) -> (C64, f64) {
        self.apply(BASE, 0.0)
    }

    /// `self` after `other`: the element acting as `p |-> self(other(p))`.
    pub fn compose(&self, other: &Self) -> Self {
        let [a1, b1, c1, d1] = self.mat;
        let [a2, b2, c2, d2] = other.mat;
        let mut mat = [
            a1 * a2 + b1 * c2,
            a1 * b2 + b1 * d2,
            c1 * a2 + d1 * c2,
            c1 * b2 + d1 * d2,
        ];
        // undo determinant drift from repeated products
        let det = mat[0] * mat[3] - mat[1] * mat[2];
        let s = det.sqrt();
        for e in &mut mat {
            *e /= s;
        }
        let (z1, t1) = other.base_point();
        let (_, t2) = self.apply(z1, t1);
        let winding = solve_winding(&mat, BASE, 0.0, t2);
        CoveringElement { mat, winding }
    }

    pub fn inverse(&self) -> Self {
        let [a, b, c, d] = self.mat;
        let mat = [d, -b, -c, a];
        // the inverse sends the image of the base point back to (i, 0)
        let (z1, t1) = self.base_point();
        let winding = solve_winding(&mat, z1, t1, 0.0);
        CoveringElement { mat, winding }
    }

    /// Integer power by repeated squaring.
    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self.inverse().pow(-e);
        }
        let mut acc = Self::identity();
        let mut base = *self;
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Coordinates `(x, y, theta)` with `self = n(x) a(y) k(theta)`; `theta`
    /// is real-valued, not reduced mod `2 pi`.
    pub fn iwasawa(&self) -> (f64, f64, f64) {
        let (z, theta) = self.base_point();
        (z.re, z.im, theta)
    }

    /// Agreement of the action at the base point within `tol` — complete
    /// because the action is simply transitive.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        let (z1, t1) = self.base_point();
        let (z2, t2) = other.base_point();
        (z1 - z2).norm() <= tol && (t1 - t2).abs() <= tol
    }
}

impl std::fmt::Display for CoveringElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let [a, b, c, d] = self.mat;
        write!(f, "[[{a:.6}, {b:.6}], [{c:.6}, {d:.6}]] + {} turns", self.winding)
    }
}

/// Winding number that makes the element with matrix `mat` send
/// `(z_in, th_in)` to angle `th_out`. Exact up to rounding because the
/// candidate differs from an integer multiple of `2 pi` only by float noise.
fn solve_winding(mat: &[f64; 4], z_in: C64, th_in: f64, th_out: f64) -> i64 {
    let den = mat[2] * z_in + mat[3];
    let raw = (th_out - th_in + arg_principal(den.im, den.re)) / (2.0 * PI);
    raw.round() as i64
}

/// Invariant differential operators in the coordinates `(x, y, theta)`,
/// applied by high-order central finite differences.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LieOp {
    /// `d/dx`
    X,
    /// `2 y d/dy`
    H,
    /// `d/dtheta`
    W,
    /// `e^{2 i theta} ( 2 i y d/dx + 2 y d/dy - i d/dtheta)`
    EPlus,
    /// `e^{-2 i theta} (-2 i y d/dx + 2 y d/dy + i d/dtheta)`
    EMinus,
    /// `-y^2 (d^2/dx^2 + d^2/dy^2) + y d^2/dx dtheta`
    Casimir,
}

/// Fourth-order central first derivative of `f` along `t` at `0`.
fn d1<F: Fn(f64) -> C64>(f: F, h: f64) -> C64 {
    (f(-2.0 * h) - f(2.0 * h) + 8.0 * (f(h) - f(-h))) / (12.0 * h)
}

/// Fourth-order central second derivative of `f` along `t` at `0`.
fn d2<F: Fn(f64) -> C64>(f: F, h: f64) -> C64 {
    (-f(-2.0 * h) - f(2.0 * h) + 16.0 * (f(-h) + f(h)) - 30.0 * f(0.0)) / (12.0 * h * h)
}

/// Apply `op` to a function on `H x R` at `(z, theta)` with step `h`.
pub fn lie_apply<F>(op: LieOp, f: &F, z: C64, theta: f64, h: f64) -> C64
where
    F: Fn(C64, f64) -> C64,
{
    let x = z.re;
    let y = z.im;
    let fx = |t: f64| f(C64::new(x + t, y), theta);
    let fy = |t: f64| f(C64::new(x, y + t), theta);
    let fth = |t: f64| f(z, theta + t);
    match op {
        LieOp::X => d1(fx, h),
        LieOp::H => 2.0 * y * d1(fy, h),
        LieOp::W => d1(fth, h),
        LieOp::EPlus | LieOp::EMinus => {
            let sign = if op == LieOp::EPlus { 1.0 } else { -1.0 };
            let i = C64::new(0.0, 1.0);
            let phase = (sign * 2.0 * i * theta).exp();
            phase * (sign * 2.0 * i * y * d1(fx, h) + 2.0 * y * d1(fy, h) - sign * i * d1(fth, h))
        }
        LieOp::Casimir => {
            let dxx = d2(fx, h);
            let dyy = d2(fy, h);
            // mixed x-theta derivative: nested fourth-order first differences
            let dxth = d1(
                |t: f64| d1(|u: f64| f(C64::new(x + u, y), theta + t), h),
                h,
            );
            -y * y * (dxx + dyy) + y * dxth
        }
    }
}

/// Weight-`k` hyperbolic Laplacian on functions of `z` alone:
/// `-y^2 (d^2/dx^2 + d^2/dy^2) + i k y d/dx - k y d/dy + (k/2)(1 - k/2)`.
/// This is the conjugate `y^{-k/2} D_k y^{k/2}` of the classical weight-`k`
/// operator, so a holomorphic function is an eigenfunction with eigenvalue
/// `(k/2)(1 - k/2)` — zero exactly in weight two.
pub fn weight_laplacian<F>(k: f64, f: &F, z: C64, h: f64) -> C64
where
    F: Fn(C64) -> C64,
{
    let x = z.re;
    let y = z.im;
    let fx = |t: f64| f(C64::new(x + t, y));
    let fy = |t: f64| f(C64::new(x, y + t));
    let i = C64::new(0.0, 1.0);
    -y * y * (d2(fx, h) + d2(fy, h)) + i * k * y * d1(fx, h) - k * y * d1(fy, h)
        + (k / 2.0) * (1.0 - k / 2.0) * f(z)
}
