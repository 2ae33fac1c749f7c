//! Precision knobs shared by the numeric evaluators.

/// Target tolerances for series truncation and quadrature.
///
/// `target_tol` is the absolute error a single special-function evaluation
/// aims for; composite checks then compare against the looser tolerances
/// pinned in the test suite (1e-10 exact-identity / 1e-8 quadrature /
/// 1e-6 composed-pipeline).
#[derive(Clone, Copy, Debug)]
pub struct PrecisionConfig {
    /// Absolute truncation/quadrature target per evaluation.
    pub target_tol: f64,
    /// Hard cap on series terms before reporting non-convergence.
    pub max_terms: usize,
    /// Nodes per Gauss-Legendre panel or per contour circle.
    pub quad_nodes: usize,
}

impl Default for PrecisionConfig {
    fn default() -> Self {
        PrecisionConfig {
            target_tol: 1e-13,
            max_terms: 20_000,
            quad_nodes: 32,
        }
    }
}

impl PrecisionConfig {
    /// Same configuration with the truncation target halved; used by the
    /// stability checks (halving the tolerance must move results by less
    /// than the tolerance itself).
    pub fn halved(self) -> Self {
        PrecisionConfig {
            target_tol: self.target_tol / 2.0,
            ..self
        }
    }
}
