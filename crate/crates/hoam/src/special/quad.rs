//! Quadrature kernels: Gauss-Legendre panels, double-exponential maps for
//! endpoint singularities and half-infinite ranges, and circle averages for
//! Taylor coefficients.

use crate::error::{HoamError, Result};
use crate::C64;
use std::f64::consts::PI;

/// Gauss-Legendre nodes and weights on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n {
            // Newton iteration from the Chebyshev-like initial guess
            let mut x = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(n, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(n, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        GaussLegendre { nodes, weights }
    }

    /// Integral over the straight segment from `a` to `b` in the plane,
    /// split into `panels` equal pieces.
    pub fn integrate_segment<F>(&self, f: F, a: C64, b: C64, panels: usize) -> C64
    where
        F: Fn(C64) -> C64,
    {
        let mut acc = C64::new(0.0, 0.0);
        let step = (b - a) / panels as f64;
        for p in 0..panels {
            let lo = a + step * p as f64;
            let half = step * 0.5;
            let mid = lo + half;
            for (x, w) in self.nodes.iter().zip(&self.weights) {
                acc += half * *w * f(mid + half * *x);
            }
        }
        acc
    }

    /// Real-interval version.
    pub fn integrate_real<F>(&self, f: F, a: f64, b: f64, panels: usize) -> C64
    where
        F: Fn(f64) -> C64,
    {
        self.integrate_segment(|z| f(z.re), C64::new(a, 0.0), C64::new(b, 0.0), panels)
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, dp)
}

/// `int_a^b f`, tolerating integrable endpoint singularities, via the
/// tanh-sinh map with step halving until two consecutive levels agree.
pub fn tanh_sinh<F>(f: F, a: f64, b: f64, tol: f64) -> Result<C64>
where
    F: Fn(f64) -> C64,
{
    let half = 0.5 * (b - a);
    let tmax = 3.8f64;
    let eval = |t: f64| -> C64 {
        let g = 0.5 * PI * t.sinh();
        // Distance to the nearer endpoint via 1 - |tanh g| = 2/(e^{2|g|}+1):
        // stays accurate long after tanh itself saturates to +-1.
        let delta = half * 2.0 / ((2.0 * g.abs()).exp() + 1.0);
        if delta <= 0.0 {
            return C64::new(0.0, 0.0);
        }
        let x = if g >= 0.0 { b - delta } else { a + delta };
        let w = half * 0.5 * PI * t.cosh() / g.cosh().powi(2);
        if !w.is_finite() || w == 0.0 {
            return C64::new(0.0, 0.0);
        }
        let v = f(x);
        if !v.re.is_finite() || !v.im.is_finite() {
            return C64::new(0.0, 0.0);
        }
        w * v
    };
    let mut h = 1.0f64;
    let mut prev = C64::new(f64::NAN, 0.0);
    for _level in 0..9 {
        let steps = (tmax / h).ceil() as i64;
        let mut acc = eval(0.0);
        for k in 1..=steps {
            acc += eval(k as f64 * h) + eval(-(k as f64) * h);
        }
        let acc = acc * h;
        if prev.re.is_finite() && (acc - prev).norm() <= tol * (1.0 + acc.norm()) {
            return Ok(acc);
        }
        prev = acc;
        h *= 0.5;
    }
    Err(HoamError::convergence("tanh-sinh quadrature did not stabilize"))
}

/// `int_a^infty f` for integrands decaying at least exponentially, via the
/// exp-sinh map `x = a + scale * exp((pi/2) sinh t)`.
pub fn exp_sinh<F>(f: F, a: f64, scale: f64, tol: f64) -> Result<C64>
where
    F: Fn(f64) -> C64,
{
    // Large enough that even x^{-0.95}-type endpoint singularities (whose
    // transformed tail decays only like exp(-0.05 (pi/2) e^{|t|})) are
    // negligible at the cutoff.
    let tmax = 6.5f64;
    let eval = |t: f64| -> C64 {
        let g = 0.5 * PI * t.sinh();
        if g > 690.0 {
            return C64::new(0.0, 0.0);
        }
        let e = g.exp();
        let w = scale * 0.5 * PI * t.cosh() * e;
        if !w.is_finite() || w == 0.0 {
            return C64::new(0.0, 0.0);
        }
        let v = f(a + scale * e);
        if !v.re.is_finite() || !v.im.is_finite() {
            return C64::new(0.0, 0.0);
        }
        w * v
    };
    let mut h = 0.5f64;
    let mut prev = C64::new(f64::NAN, 0.0);
    for _level in 0..11 {
        let steps = (tmax / h).ceil() as i64;
        let mut acc = eval(0.0);
        for k in 1..=steps {
            acc += eval(k as f64 * h) + eval(-(k as f64) * h);
        }
        let acc = acc * h;
        if prev.re.is_finite() && (acc - prev).norm() <= tol * (1.0 + acc.norm()) {
            return Ok(acc);
        }
        prev = acc;
        h *= 0.5;
    }
    Err(HoamError::convergence("exp-sinh quadrature did not stabilize"))
}

/// Taylor coefficients `c_0..=c_max` of `f` at `center` from `n` samples on
/// the circle of radius `r`: `c_k = (1/n) sum_j f(center + r e^{i phi_j})
/// e^{-i k phi_j} / r^k`. Exponentially accurate for analytic `f`.
pub fn taylor_coefficients<F>(f: F, center: C64, r: f64, max_order: usize, n: usize) -> Vec<C64>
where
    F: Fn(C64) -> C64,
{
    let vals: Vec<C64> = (0..n)
        .map(|j| {
            let phi = 2.0 * PI * j as f64 / n as f64;
            f(center + C64::from_polar(r, phi))
        })
        .collect();
    (0..=max_order)
        .map(|k| {
            let mut acc = C64::new(0.0, 0.0);
            for (j, v) in vals.iter().enumerate() {
                let phi = 2.0 * PI * j as f64 / n as f64;
                acc += v * C64::from_polar(1.0, -(k as f64) * phi);
            }
            acc / (n as f64 * r.powi(k as i32))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gauss_legendre_is_exact_on_polynomials() {
        let gl = GaussLegendre::new(8);
        // int_0^1 x^10 dx = 1/11 needs n >= 6; n = 8 per panel is exact
        let v = gl.integrate_real(|x| C64::new(x.powi(10), 0.0), 0.0, 1.0, 1);
        assert!((v.re - 1.0 / 11.0).abs() < 1e-14);
        // complex segment: int_0^{1+i} 2 z dz = (1+i)^2 = 2i
        let v = gl.integrate_segment(|z| 2.0 * z, C64::new(0.0, 0.0), C64::new(1.0, 1.0), 2);
        assert!((v - C64::new(0.0, 2.0)).norm() < 1e-13);
    }

    #[test]
    fn tanh_sinh_handles_endpoint_singularity() {
        let v = tanh_sinh(|x| C64::new(1.0 / x.sqrt(), 0.0), 0.0, 1.0, 1e-13).unwrap();
        assert!((v.re - 2.0).abs() < 1e-11, "{v}");
        let v = tanh_sinh(|x| C64::new((1.0 - x * x).sqrt(), 0.0), -1.0, 1.0, 1e-13).unwrap();
        assert!((v.re - PI / 2.0).abs() < 1e-11);
    }

    #[test]
    fn exp_sinh_on_half_line() {
        let v = exp_sinh(|x| C64::new((-x).exp(), 0.0), 0.0, 1.0, 1e-13).unwrap();
        assert!((v.re - 1.0).abs() < 1e-12, "{v}");
        // endpoint singularity and exponential tail together
        let v = exp_sinh(|x| C64::new((-x).exp() / x.sqrt(), 0.0), 0.0, 1.0, 1e-13).unwrap();
        assert!((v.re - PI.sqrt()).abs() < 1e-11, "{v}");
        // shifted lower end
        let v = exp_sinh(|x| C64::new((-x).exp(), 0.0), 2.0, 1.0, 1e-13).unwrap();
        assert!((v.re - (-2.0f64).exp()).abs() < 1e-13);
    }

    #[test]
    fn circle_average_recovers_taylor_coefficients() {
        let cs = taylor_coefficients(|z| z.exp(), C64::new(0.0, 0.0), 0.5, 6, 32);
        let mut fact = 1.0;
        for (k, c) in cs.iter().enumerate() {
            if k > 0 {
                fact *= k as f64;
            }
            assert!((c - C64::new(1.0 / fact, 0.0)).norm() < 1e-12, "k={k} c={c}");
        }
    }
}
