//! Special functions and quadrature.
//!
//! Everything here is double precision and comes in pairs: a production
//! evaluator plus (in the tests) an independent oracle — a brute-force sum,
//! a second integral representation, a closed form, or a recurrence — so a
//! wrong constant or branch cannot survive the suite.

pub mod bessel;
pub mod eta;
pub mod gamma;
pub mod quad;
pub mod storus;
pub mod weier;
pub mod whittaker;
pub mod zeta;

pub use bessel::bessel_k;
pub use eta::{eta_pow, eta_power_series, log_eta, sigma_minus1};
pub use gamma::{gamma, gamma_upper0};
pub use whittaker::{hyp1f1, whittaker_w};
pub use zeta::{lambda_completed, zeta};
