//! Workbench for higher-order automorphic forms.
//!
//! The crate has three layers:
//!
//! * exact group algebra: presentations of cofinite Fuchsian groups by
//!   canonical generators, basis tuples for powers of the augmentation ideal,
//!   and the dual function systems `g_i` / `f_i` / `phi^(l,m)` evaluated in
//!   arbitrary-precision rational arithmetic ([`group_algebra`]);
//! * the universal covering group of `SL2(R)` with its lifted action on
//!   `H x R`, Iwasawa coordinates and Lie/Casimir operators ([`covering`]);
//! * floating-point analysis: special functions ([`special`]), explicit
//!   invariants of low order such as `log eta`, the lattice-valued `H`, the
//!   Weierstrass pieces `W`, `K`, the harmonic `b_{1,1}` family and its `A`/`B`
//!   split ([`forms`]), Fourier term bases and perturbed terms ([`fourier`]),
//!   generic difference-product verification ([`verifier`]) and the Goldfeld
//!   style `L'` computation for a rank-one newform ([`lfunc`]).
//!
//! Everything numerical is cross-checked two ways: each construction comes
//! with an independent oracle (brute-force sum, quadrature, contour, or
//! recursion) and the verification reports in [`report`] are deterministic
//! for a fixed seed.

pub mod config;
pub mod error;
pub mod group_algebra;
pub mod covering;
pub mod special;

pub use config::PrecisionConfig;
pub use error::{HoamError, Result};

/// Complex double shorthand used across the numeric layers.
pub type C64 = num_complex::Complex64;
