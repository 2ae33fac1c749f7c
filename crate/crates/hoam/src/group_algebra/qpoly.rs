//! The difference-equation polynomials `Q_q`.
//!
//! `Q_0 = 1`, `Q_{q+1}(X+1) - Q_{q+1}(X) = Q_q(X)`, `Q_q(0) = 0` for
//! `q >= 1`. The unique solution is the binomial polynomial
//! `Q_q(X) = X(X-1)...(X-q+1)/q!`, kept with exact rational coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact polynomial with rational coefficients, ascending degree order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPolynomial {
    pub coeffs: Vec<BigRational>,
}

fn br(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QPolynomial {
    /// `Q_q` built as the product `X(X-1)...(X-q+1)` divided by `q!`.
    pub fn binomial(q: usize) -> Self {
        let mut coeffs = vec![BigRational::one()];
        for k in 0..q {
            // multiply by (X - k)
            let mut next = vec![BigRational::zero(); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= c * br(k as i64);
            }
            coeffs = next;
        }
        let mut fact = BigRational::one();
        for k in 1..=q {
            fact *= br(k as i64);
        }
        for c in &mut coeffs {
            *c /= fact.clone();
        }
        QPolynomial { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn eval_i64(&self, x: i64) -> BigRational {
        self.eval(&br(x))
    }

    /// Evaluate with f64 coefficients (for the numeric layers).
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            let cf = rational_to_f64(c);
            acc = acc * x + cf;
        }
        acc
    }

    /// Evaluate at a complex argument with f64 coefficients.
    pub fn eval_c64(&self, x: crate::C64) -> crate::C64 {
        let mut acc = crate::C64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    /// `p(X+1)` as a polynomial (used by the difference-equation tests).
    pub fn shift_one(&self) -> QPolynomial {
        let n = self.coeffs.len();
        let mut out = vec![BigRational::zero(); n];
        // binomial expansion of (X+1)^i
        for (i, c) in self.coeffs.iter().enumerate() {
            let mut binom = BigRational::one();
            for (j, o) in out.iter_mut().take(i + 1).enumerate() {
                *o += c.clone() * binom.clone();
                // next: C(i, j+1) = C(i,j) * (i-j)/(j+1)
                binom = binom * br((i - j) as i64) / br(j as i64 + 1);
            }
        }
        QPolynomial { coeffs: out }
    }

    pub fn sub(&self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c.clone();
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c.clone();
        }
        while out.len() > 1 && out.last().map(|c| c.is_zero()) == Some(true) {
            out.pop();
        }
        QPolynomial { coeffs: out }
    }
}

pub(crate) fn rational_to_f64(r: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q2_matches_brute_force_difference_solution() {
        // oracle: solve Q(X+1)-Q(X) = X with Q(0) = 0 over degree-2 ansatz
        // aX^2 + bX: (a(X+1)^2 + b(X+1)) - (aX^2+bX) = 2aX + a + b = X
        // => a = 1/2, b = -1/2; that is X(X-1)/2.
        let q2 = QPolynomial::binomial(2);
        assert_eq!(q2.coeffs, vec![br(0), -br(1) / br(2), br(1) / br(2)]);
    }

    #[test]
    fn difference_equation_holds_as_polynomial_identity() {
        for q in 0..8usize {
            let qq = QPolynomial::binomial(q);
            let qn = QPolynomial::binomial(q + 1);
            let diff = qn.shift_one().sub(&qn);
            assert_eq!(diff, qq, "difference equation fails at q={q}");
        }
    }

    #[test]
    fn vanishing_at_zero_and_integer_values() {
        for q in 1..8usize {
            let p = QPolynomial::binomial(q);
            assert!(p.eval_i64(0).is_zero());
            // binomial(n, q) at integers: Q_3(5) = 10
        }
        assert_eq!(QPolynomial::binomial(3).eval_i64(5), br(10));
        assert_eq!(QPolynomial::binomial(1).eval_i64(7), br(7));
    }

    #[test]
    fn rational_argument() {
        // Q_2(1/2) = (1/2)(-1/2)/2 = -1/8
        let q2 = QPolynomial::binomial(2);
        assert_eq!(q2.eval(&(br(1) / br(2))), -br(1) / br(8));
    }
}
