//! Exact combinatorics of canonical generators and dual function systems.
//!
//! A cofinite Fuchsian group with cusps is presented by parabolic generators
//! `pi_1..pi_npar`, hyperbolic pairs `eta_1..eta_2g`, elliptic generators
//! `eps_j` of order `v_j` with `eps_j^{v_j} = z`, and a central `z` (the
//! generator of the center of the lifted group). The distinguished alphabet is
//! `a_1..a_{ngen-1}` (the free part, `ngen = npar + 2g`) together with
//! `a_ngen = z`.
//!
//! Everything in this module is exact: words, basis tuples for the quotients
//! `I^q / I^{q+1}` of powers of the augmentation ideal, the binomial-type
//! polynomials `Q_q`, truncated noncommutative series, and the dual function
//! families evaluated over arbitrary-precision rationals.

mod presentation;
mod tuples;
mod qpoly;
mod magnus;
mod dual;

pub use presentation::{GenId, GroupWord, Presentation};
pub use tuples::{enumerate_basis_tuples, n_dim, QTuple};
pub use qpoly::QPolynomial;
pub use magnus::TruncatedNcSeries;
pub use dual::{
    difference_product_exact, dual_system_matrix, dual_system_matrix_full, f_value, g_value,
    phi_lm_value, psi_central,
};
