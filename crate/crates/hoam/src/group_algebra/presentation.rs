//! Group presentations, words, and the reduction
//! (free cancellation + central `z` + `eps_j^{v_j} = z`).

use crate::error::{HoamError, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// One canonical generator.
///
/// `Alpha(j)` is a free-part generator (`1 <= j <= ngen-1`), `Zeta` the
/// central generator, `Eps(j)` an elliptic generator of order `v_j`
/// (`1 <= j <= nell`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenId {
    Alpha(u8),
    Zeta,
    Eps(u8),
}

/// Shape of a presentation by canonical generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    /// Number of cusp classes (parabolic generators).
    pub npar: usize,
    /// Genus; contributes `2*genus` hyperbolic generators.
    pub genus: usize,
    /// Orders `v_j >= 2` of the elliptic generators.
    pub ell_orders: Vec<u32>,
}

impl Presentation {
    pub fn new(npar: usize, genus: usize, ell_orders: Vec<u32>) -> Result<Self> {
        if npar == 0 {
            return Err(HoamError::domain("need at least one cusp class"));
        }
        if ell_orders.iter().any(|&v| v < 2) {
            return Err(HoamError::domain("elliptic orders must be >= 2"));
        }
        Ok(Presentation { npar, genus, ell_orders })
    }

    /// `ngen = npar + 2*genus`: count of `a_j` generators including the
    /// central one (`a_ngen = z`). The free part has rank `ngen - 1`.
    pub fn ngen(&self) -> usize {
        self.npar + 2 * self.genus
    }

    pub fn nell(&self) -> usize {
        self.ell_orders.len()
    }

    /// Modular-group shape: one cusp, genus 0, elliptic orders 3 and 2.
    pub fn modular() -> Self {
        Presentation { npar: 1, genus: 0, ell_orders: vec![3, 2] }
    }

    /// Commutator-subgroup shape: one cusp, genus 1, torsion free.
    pub fn commutator() -> Self {
        Presentation { npar: 1, genus: 1, ell_orders: vec![] }
    }

    fn check_gen(&self, g: GenId) -> Result<()> {
        match g {
            GenId::Alpha(j) => {
                if j == 0 || (j as usize) >= self.ngen() {
                    Err(HoamError::domain(format!(
                        "a{} out of range (free part is a1..a{})",
                        j,
                        self.ngen() - 1
                    )))
                } else {
                    Ok(())
                }
            }
            GenId::Zeta => Ok(()),
            GenId::Eps(j) => {
                if j == 0 || (j as usize) > self.nell() {
                    Err(HoamError::domain(format!("e{} out of range", j)))
                } else {
                    Ok(())
                }
            }
        }
    }
}

/// A word in the canonical generators: letters with nonzero integer
/// exponents. The identity is the empty word.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupWord(pub Vec<(GenId, i64)>);

impl GroupWord {
    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    pub fn gen(g: GenId, e: i64) -> Self {
        if e == 0 {
            GroupWord::identity()
        } else {
            GroupWord(vec![(g, e)])
        }
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation `self * rhs` (no reduction).
    pub fn concat(&self, rhs: &GroupWord) -> GroupWord {
        let mut v = self.0.clone();
        v.extend(rhs.0.iter().cloned());
        GroupWord(v)
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    /// Reduction to the canonical form: free cancellation among letters,
    /// `z` moved to the tail (it is central), and `e_j^{v_j}` rewritten to a
    /// power of `z`, with elliptic exponents normalized into `[0, v_j)`.
    pub fn reduce(&self, pres: &Presentation) -> Result<GroupWord> {
        for &(g, _) in &self.0 {
            pres.check_gen(g)?;
        }
        let mut zexp: i64 = 0;
        // non-z letters in order
        let mut seq: Vec<(GenId, i64)> = Vec::with_capacity(self.0.len());
        for &(g, e) in &self.0 {
            if e == 0 {
                continue;
            }
            match g {
                GenId::Zeta => zexp += e,
                _ => seq.push((g, e)),
            }
        }
        // stabilize: merge adjacent equal letters, normalize elliptic exponents
        loop {
            let mut changed = false;
            let mut out: Vec<(GenId, i64)> = Vec::with_capacity(seq.len());
            for (g, e) in seq.drain(..) {
                let (g, mut e) = (g, e);
                if let GenId::Eps(j) = g {
                    let v = pres.ell_orders[(j - 1) as usize] as i64;
                    let r = e.rem_euclid(v);
                    let q = (e - r) / v;
                    if q != 0 {
                        zexp += q;
                        changed = true;
                    }
                    e = r;
                }
                if e == 0 {
                    changed = true;
                    continue;
                }
                if let Some(last) = out.last_mut() {
                    if last.0 == g {
                        last.1 += e;
                        changed = true;
                        continue;
                    }
                }
                out.push((g, e));
            }
            seq = out;
            if !changed {
                break;
            }
        }
        if zexp != 0 {
            seq.push((GenId::Zeta, zexp));
        }
        Ok(GroupWord(seq))
    }

    /// Parse the ASCII form, e.g. `a1*a2^-1*z^2` or `e1^2*a1`; `1` is the
    /// identity.
    pub fn parse(s: &str) -> Result<GroupWord> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(GroupWord::identity());
        }
        let mut letters = Vec::new();
        for tok in s.split('*') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(HoamError::parse(format!("empty factor in word '{s}'")));
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| HoamError::parse(format!("bad exponent '{e}' in '{tok}'")))?;
                    (n, exp)
                }
                None => (tok, 1),
            };
            let g = if name == "z" {
                GenId::Zeta
            } else if let Some(j) = name.strip_prefix('a') {
                GenId::Alpha(
                    j.parse()
                        .map_err(|_| HoamError::parse(format!("bad generator '{name}'")))?,
                )
            } else if let Some(j) = name.strip_prefix('e') {
                GenId::Eps(
                    j.parse()
                        .map_err(|_| HoamError::parse(format!("bad generator '{name}'")))?,
                )
            } else {
                return Err(HoamError::parse(format!("unknown generator '{name}'")));
            };
            if exp != 0 {
                letters.push((g, exp));
            }
        }
        Ok(GroupWord(letters))
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(g, e)| {
                let name = match g {
                    GenId::Alpha(j) => format!("a{j}"),
                    GenId::Zeta => "z".to_string(),
                    GenId::Eps(j) => format!("e{j}"),
                };
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        for s in ["1", "a1", "a1*a2^-1*z^2", "e1^2*a1*z^-1"] {
            let w = GroupWord::parse(s).unwrap();
            assert_eq!(w.to_string(), s);
        }
    }

    #[test]
    fn parse_rejects_junk() {
        assert!(GroupWord::parse("b2").is_err());
        assert!(GroupWord::parse("a1^x").is_err());
        assert!(GroupWord::parse("a1**a2").is_err());
    }

    #[test]
    fn reduce_cancels_and_centralizes() {
        // z*e1^3*z^-1 with v1 = 3 reduces to z
        let pres = Presentation::modular();
        let w = GroupWord::parse("z*e1^3*z^-1").unwrap();
        assert_eq!(w.reduce(&pres).unwrap().to_string(), "z");

        // free cancellation cascades across a removed elliptic block
        let pres2 = Presentation::new(2, 0, vec![2]).unwrap();
        let w = GroupWord::parse("a1*e1^2*a1^-1*z^-1").unwrap();
        assert_eq!(w.reduce(&pres2).unwrap().to_string(), "1");
    }

    #[test]
    fn reduce_normalizes_negative_elliptic_exponent() {
        let pres = Presentation::modular();
        // e1^-1 = e1^2 * z^-1 when v1 = 3
        let w = GroupWord::parse("e1^-1").unwrap();
        assert_eq!(w.reduce(&pres).unwrap().to_string(), "e1^2*z^-1");
    }

    #[test]
    fn reduce_rejects_out_of_range_generator() {
        let pres = Presentation::modular(); // ngen = 1: no free letters at all
        assert!(GroupWord::parse("a1").unwrap().reduce(&pres).is_err());
    }
}
