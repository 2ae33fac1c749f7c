//! Dual function systems evaluated exactly.
//!
//! Three families, all rational-valued on words:
//!
//! * `g_i` on the free part, via the truncated noncommutative series device
//!   (the coefficient of `Xi_{i(1)}..Xi_{i(q)}` in the image of the word
//!   under `a_j -> 1 + Xi_j`);
//! * `f_i` on the whole group: for `i = (i', n, .., n)` with `m` trailing
//!   central entries, `f_i(w) = g_{i'}(w0) * Q_m(psi(w))` where `w0` drops
//!   central and elliptic letters and `psi` is the homomorphism with
//!   `psi(z) = 1`, `psi(e_j) = 1/v_j`, `psi(a_j) = 0`;
//! * `phi^(l,m)` on a rank-two abelian group: `phi(a,b) = Q_l(a) Q_m(b)`.
//!
//! The ordered difference product `f |(w_1 - 1)...(w_q - 1)` is expanded by
//! inclusion-exclusion over subsets with the factors kept in order.

use super::magnus::TruncatedNcSeries;
use super::presentation::{GenId, GroupWord, Presentation};
use super::qpoly::QPolynomial;
use super::tuples::{enumerate_basis_tuples, QTuple};
use crate::error::{HoamError, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// The free-part projection: drop central and elliptic letters, keep `a_j`.
fn free_letters(w: &GroupWord) -> Vec<(u8, i64)> {
    w.0.iter()
        .filter_map(|&(g, e)| match g {
            GenId::Alpha(j) => Some((j, e)),
            _ => None,
        })
        .collect()
}

/// The homomorphism to the rationals with `psi(z) = 1`, `psi(e_j) = 1/v_j`
/// and `psi(a_j) = 0`.
pub fn psi_central(w: &GroupWord, pres: &Presentation) -> Result<BigRational> {
    let mut acc = BigRational::zero();
    for &(g, e) in &w.0 {
        match g {
            GenId::Alpha(_) => {}
            GenId::Zeta => acc += BigRational::from_integer(BigInt::from(e)),
            GenId::Eps(j) => {
                let j = j as usize;
                if j == 0 || j > pres.nell() {
                    return Err(HoamError::domain(format!("e{j} out of range")));
                }
                acc += BigRational::new(BigInt::from(e), BigInt::from(pres.ell_orders[j - 1]));
            }
        }
    }
    Ok(acc)
}

/// `g_i(w)`: dual function on the free part. Tuple entries must lie in
/// `1..=ngen-1`; central or elliptic letters of `w` are projected away.
pub fn g_value(i: &QTuple, w: &GroupWord, pres: &Presentation) -> Result<BigRational> {
    let ngen = pres.ngen() as u8;
    if i.0.iter().any(|&e| e == 0 || e >= ngen.max(1)) {
        return Err(HoamError::domain(format!(
            "g is indexed by tuples over the free letters 1..={}",
            ngen.saturating_sub(1)
        )));
    }
    let letters = free_letters(w);
    let img = TruncatedNcSeries::word_image(&letters, i.len());
    Ok(img.coeff(&i.0))
}

/// `f_i(w)`: dual function on the whole group.
pub fn f_value(i: &QTuple, w: &GroupWord, pres: &Presentation) -> Result<BigRational> {
    let ngen = pres.ngen() as u8;
    let (prefix, m) = i.split_central(ngen)?;
    let g = if prefix.is_empty() {
        BigRational::one()
    } else {
        g_value(&prefix, w, pres)?
    };
    if g.is_zero() && m == 0 {
        return Ok(g);
    }
    let qm = QPolynomial::binomial(m).eval(&psi_central(w, pres)?);
    Ok(g * qm)
}

/// `phi^(l,m)` on the abelian group of pairs: `Q_l(a) * Q_m(b)`.
pub fn phi_lm_value(l: usize, m: usize, a: i64, b: i64) -> BigRational {
    QPolynomial::binomial(l).eval_i64(a) * QPolynomial::binomial(m).eval_i64(b)
}

/// Ordered difference product over words, exactly:
/// `sum_{S subset of 1..q} (-1)^{q-|S|} f(prod_{i in S, ascending} w_i * base)`.
pub fn difference_product_exact<F>(
    f: F,
    words: &[GroupWord],
    base: &GroupWord,
) -> Result<BigRational>
where
    F: Fn(&GroupWord) -> Result<BigRational>,
{
    let q = words.len();
    let mut acc = BigRational::zero();
    for mask in 0u64..(1u64 << q) {
        let mut w = GroupWord::identity();
        for (i, word) in words.iter().enumerate() {
            if mask & (1 << i) != 0 {
                w = w.concat(word);
            }
        }
        w = w.concat(base);
        let sign_neg = (q - (mask.count_ones() as usize)) % 2 == 1;
        let v = f(&w)?;
        if sign_neg {
            acc -= v;
        } else {
            acc += v;
        }
    }
    Ok(acc)
}

/// All `(ngen-1)^q` tuples over the free letters, lexicographic.
fn free_tuples(ngen: usize, q: usize) -> Vec<QTuple> {
    let rank = ngen - 1;
    let mut out = Vec::new();
    let total = (rank as u64).pow(q as u32);
    for code in 0..total {
        let mut c = code;
        let mut t = vec![0u8; q];
        for slot in t.iter_mut().rev() {
            *slot = (c % rank as u64) as u8 + 1;
            c /= rank as u64;
        }
        out.push(QTuple(t));
    }
    out
}

/// Exact dual-system matrix on the free part: rows `g_i`, columns the basis
/// difference products `(a_{j(1)} - 1)...(a_{j(q)} - 1)` evaluated at the
/// identity. Must be the identity matrix.
pub fn dual_system_matrix(ngen: usize, q: usize) -> Result<Vec<Vec<BigRational>>> {
    if ngen < 2 {
        return Err(HoamError::domain("free dual system needs ngen >= 2"));
    }
    let pres = Presentation::new(ngen, 0, vec![])?; // npar = ngen, genus 0: free rank ngen-1
    let tuples = free_tuples(ngen, q);
    let mut rows = Vec::with_capacity(tuples.len());
    for i in &tuples {
        let mut row = Vec::with_capacity(tuples.len());
        for j in &tuples {
            let words: Vec<GroupWord> = j
                .0
                .iter()
                .map(|&l| GroupWord::gen(GenId::Alpha(l), 1))
                .collect();
            let v = difference_product_exact(
                |w| g_value(i, w, &pres),
                &words,
                &GroupWord::identity(),
            )?;
            row.push(v);
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Exact dual-system matrix for the whole group: rows `f_i`, columns the
/// difference products over the basis words (`a_l` for `l < ngen`, `z` for
/// `l = ngen`), indexed by the valid tuples of length `q`.
pub fn dual_system_matrix_full(pres: &Presentation, q: usize) -> Result<Vec<Vec<BigRational>>> {
    let ngen = pres.ngen();
    let tuples = enumerate_basis_tuples(ngen, q)?;
    let word_for = |l: u8| -> GroupWord {
        if (l as usize) == ngen {
            GroupWord::gen(GenId::Zeta, 1)
        } else {
            GroupWord::gen(GenId::Alpha(l), 1)
        }
    };
    let mut rows = Vec::with_capacity(tuples.len());
    for i in &tuples {
        let mut row = Vec::with_capacity(tuples.len());
        for j in &tuples {
            let words: Vec<GroupWord> = j.0.iter().map(|&l| word_for(l)).collect();
            let v = difference_product_exact(
                |w| f_value(i, w, pres),
                &words,
                &GroupWord::identity(),
            )?;
            row.push(v);
        }
        rows.push(row);
    }
    Ok(rows)
}
