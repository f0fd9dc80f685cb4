//! Gegenbauer operator stack and classical spectral reprojection.
//!
//! A Fourier partial sum of a smooth non-periodic signal oscillates near the
//! boundary (Gibbs phenomenon). Re-expanding that partial sum in Gegenbauer
//! polynomials C_l^λ, orthogonal under w_λ(x) = (1−x²)^{λ−1/2}, removes the
//! oscillation: high Fourier modes have exponentially small projections onto
//! the low Gegenbauer modes, so truncating at degree m discards the ringing
//! while keeping the signal.
//!
//! [`OperatorSet`] materializes the three matrices the whole stack runs on:
//!
//! * synthesis `S` (N×(m+1)): `S[j][l] = C_l^λ(x_j)`,
//! * analysis `(2/N)·H·Sᵀ·W`: trapezoid quadrature of the weighted
//!   Gegenbauer inner products, normalized by 1/h_l^λ,
//! * Bessel projection ((m+1)×N, complex): the closed-form continuous
//!   projection of each Fourier mode e^{ikπx} onto C_l^λ, expressed through
//!   J_{l+λ}(π|k|).
//!
//! The Bessel path maps Fourier coefficients straight to Gegenbauer
//! coefficients with no quadrature error; the analysis path is the discrete
//! projection of a sampled signal and is what the Bayesian estimators use as
//! their forward operator.

use thiserror::Error;

mod operators;

pub use operators::{build_operators, GegCoeffs, OperatorSet};

/// Errors from operator construction and application.
#[derive(Debug, Error)]
pub enum ReprojError {
    #[error("configuration error: {message}")]
    Config { message: String },
    #[error("shape mismatch in {op}: expected length {expected}, got {got}")]
    Shape {
        op: &'static str,
        expected: usize,
        got: usize,
    },
    #[error(transparent)]
    SpecFun(#[from] degibbs_specfun::SpecFunError),
    #[error(transparent)]
    Linalg(#[from] degibbs_linalg::LinalgError),
}

pub(crate) fn config(message: impl Into<String>) -> ReprojError {
    ReprojError::Config {
        message: message.into(),
    }
}
