//! Truncated noncommutative power series in `Xi_1..Xi_r`.
//!
//! Used as the evaluation device for the free-group dual functions: the map
//! sending the `j`-th free generator to `1 + Xi_j` embeds the free group into
//! the units of the series ring truncated above total degree `max_deg`, and
//! the coefficient of `Xi_{i_1}...Xi_{i_q}` in the image of a word is exactly
//! the dual value `g_i(word)`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Series with rational coefficients on noncommutative monomials (tuples of
/// letter indices) of total degree `<= max_deg`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedNcSeries {
    pub max_deg: usize,
    /// Monomial -> coefficient; absent monomials are zero.
    pub terms: BTreeMap<Vec<u8>, BigRational>,
}

fn br_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl TruncatedNcSeries {
    pub fn zero(max_deg: usize) -> Self {
        TruncatedNcSeries { max_deg, terms: BTreeMap::new() }
    }

    pub fn one(max_deg: usize) -> Self {
        let mut t = BTreeMap::new();
        t.insert(Vec::new(), BigRational::one());
        TruncatedNcSeries { max_deg, terms: t }
    }

    pub fn coeff(&self, monomial: &[u8]) -> BigRational {
        self.terms.get(monomial).cloned().unwrap_or_else(BigRational::zero)
    }

    fn insert_add(&mut self, mon: Vec<u8>, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mon).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            // keep the map sparse
            let key: Vec<u8> = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .unwrap();
            self.terms.remove(&key);
        }
    }

    pub fn mul(&self, rhs: &TruncatedNcSeries) -> TruncatedNcSeries {
        let mut out = TruncatedNcSeries::zero(self.max_deg);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                if m1.len() + m2.len() > self.max_deg {
                    continue;
                }
                let mut mon = m1.clone();
                mon.extend_from_slice(m2);
                out.insert_add(mon, c1.clone() * c2.clone());
            }
        }
        out
    }

    /// Image of a single generator power `(1 + Xi_j)^e`, `e` any integer:
    /// the finite binomial series `sum_l C(e, l) Xi_j^l` with generalized
    /// binomial coefficients (exact for negative `e` as well).
    pub fn gen_power(j: u8, e: i64, max_deg: usize) -> TruncatedNcSeries {
        let mut out = TruncatedNcSeries::zero(max_deg);
        let mut binom = BigRational::one();
        for l in 0..=max_deg {
            if !binom.is_zero() {
                out.insert_add(vec![j; l], binom.clone());
            }
            // C(e, l+1) = C(e, l) * (e - l) / (l + 1)
            binom = binom * br_int(e - l as i64) / br_int(l as i64 + 1);
        }
        out
    }

    /// Image of a free-part word: letters are `(index, exponent)` pairs with
    /// `index` in `1..=rank`.
    pub fn word_image(letters: &[(u8, i64)], max_deg: usize) -> TruncatedNcSeries {
        let mut acc = TruncatedNcSeries::one(max_deg);
        for &(j, e) in letters {
            if e == 0 {
                continue;
            }
            acc = acc.mul(&TruncatedNcSeries::gen_power(j, e, max_deg));
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn product_of_two_generators() {
        // (1+Xi1)(1+Xi2) = 1 + Xi1 + Xi2 + Xi1 Xi2
        let s = TruncatedNcSeries::word_image(&[(1, 1), (2, 1)], 2);
        assert_eq!(s.coeff(&[]), br(1, 1));
        assert_eq!(s.coeff(&[1]), br(1, 1));
        assert_eq!(s.coeff(&[2]), br(1, 1));
        assert_eq!(s.coeff(&[1, 2]), br(1, 1));
        assert_eq!(s.coeff(&[2, 1]), br(0, 1));
    }

    #[test]
    fn inverse_letter_uses_alternating_binomials() {
        // (1+Xi)^{-1} = 1 - Xi + Xi^2 - ...
        let s = TruncatedNcSeries::gen_power(1, -1, 3);
        assert_eq!(s.coeff(&[1]), br(-1, 1));
        assert_eq!(s.coeff(&[1, 1]), br(1, 1));
        assert_eq!(s.coeff(&[1, 1, 1]), br(-1, 1));
    }

    #[test]
    fn group_inverse_images_multiply_to_one() {
        let w = [(1u8, 2i64), (2, -3), (1, 1)];
        let winv = [(1u8, -1i64), (2, 3), (1, -2)];
        let a = TruncatedNcSeries::word_image(&w, 3);
        let b = TruncatedNcSeries::word_image(&winv, 3);
        assert_eq!(a.mul(&b), TruncatedNcSeries::one(3));
    }

    #[test]
    fn commutator_lowest_term_is_bracket() {
        // image of [g1, g2] = 1 + (Xi1 Xi2 - Xi2 Xi1) + higher order
        let w = [(1u8, 1i64), (2, 1), (1, -1), (2, -1)];
        let s = TruncatedNcSeries::word_image(&w, 2);
        assert_eq!(s.coeff(&[1]), br(0, 1));
        assert_eq!(s.coeff(&[2]), br(0, 1));
        assert_eq!(s.coeff(&[1, 2]), br(1, 1));
        assert_eq!(s.coeff(&[2, 1]), br(-1, 1));
    }
}
