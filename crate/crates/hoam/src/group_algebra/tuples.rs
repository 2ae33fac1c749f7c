//! Basis tuples for `I^q / I^{q+1}` and the dimension count.

use crate::error::{HoamError, Result};
use serde::{Deserialize, Serialize};

/// An index tuple with entries in `1..=ngen`; entries equal to `ngen` (the
/// central generator) may only appear as a trailing block.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QTuple(pub Vec<u8>);

impl QTuple {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Split off the trailing block of `ngen` entries: returns the prefix
    /// (entries `< ngen`) and the number of trailing central entries.
    /// Errors if a `ngen` entry appears before a smaller one.
    pub fn split_central(&self, ngen: u8) -> Result<(QTuple, usize)> {
        let mut m = 0;
        for &e in self.0.iter().rev() {
            if e == ngen {
                m += 1;
            } else {
                break;
            }
        }
        let prefix = &self.0[..self.0.len() - m];
        if prefix.iter().any(|&e| e == ngen) {
            return Err(HoamError::domain(format!(
                "central entries must be trailing in {:?}",
                self.0
            )));
        }
        if self.0.iter().any(|&e| e == 0 || e > ngen) {
            return Err(HoamError::domain(format!(
                "tuple entry out of range 1..={ngen} in {:?}",
                self.0
            )));
        }
        Ok((QTuple(prefix.to_vec()), m))
    }
}

/// Dimension of the space of forms of order `q+1`-ish data: the number of
/// valid tuples of length `q`, `sum_{m=0}^{q} (ngen-1)^m`.
///
/// Exact integer arithmetic; `ngen = 1` gives 1, `ngen = 2` gives `q+1`.
pub fn n_dim(ngen: usize, q: usize) -> Result<u128> {
    if ngen == 0 {
        return Err(HoamError::domain("ngen must be >= 1"));
    }
    let base = (ngen - 1) as u128;
    let mut total: u128 = 0;
    let mut pow: u128 = 1; // base^0
    for m in 0..=q {
        total = total
            .checked_add(pow)
            .ok_or_else(|| HoamError::domain("dimension overflows u128"))?;
        if m < q {
            pow = pow
                .checked_mul(base)
                .ok_or_else(|| HoamError::domain("dimension overflows u128"))?;
        }
    }
    Ok(total)
}

/// All valid tuples of length exactly `q`, in lexicographic order.
pub fn enumerate_basis_tuples(ngen: usize, q: usize) -> Result<Vec<QTuple>> {
    if ngen == 0 || ngen > 250 {
        return Err(HoamError::domain("ngen out of supported range"));
    }
    let ngen8 = ngen as u8;
    let mut out = Vec::new();
    // m trailing central entries, free prefix of length q - m
    for m in 0..=q {
        let plen = q - m;
        if ngen == 1 && plen > 0 {
            continue; // no free letters available
        }
        let mut prefix = vec![1u8; plen];
        loop {
            let mut t = prefix.clone();
            t.extend(std::iter::repeat(ngen8).take(m));
            out.push(QTuple(t));
            // next prefix in lexicographic order over 1..=ngen-1
            let mut i = plen;
            loop {
                if i == 0 {
                    prefix.clear();
                    break;
                }
                i -= 1;
                if prefix[i] < ngen8 - 1 {
                    prefix[i] += 1;
                    for v in prefix.iter_mut().skip(i + 1) {
                        *v = 1;
                    }
                    break;
                }
            }
            if plen == 0 || prefix.is_empty() {
                break;
            }
        }
    }
    out.sort();
    let expected = n_dim(ngen, q)?;
    debug_assert_eq!(out.len() as u128, expected);
    Ok(out)
}
