//! Special functions required by the Gegenbauer reprojection operator stack:
//! the Gamma function, Bessel functions of the first kind with real
//! non-negative order, Gegenbauer polynomials, and Gegenbauer norms.
//!
//! All evaluations are deterministic pure functions of their arguments and
//! are safe to call concurrently.

mod bessel;
mod gamma;
mod gegenbauer;

pub use bessel::{bessel_j, bessel_j_orders, bessel_j_orders_ln, LogMagnitude};
pub use gamma::{gamma_fn, ln_gamma};
pub use gegenbauer::{geg_norm_h, gegenbauer_at_one, gegenbauer_eval, gegenbauer_eval_batch};

use thiserror::Error;

/// Errors produced by the special-function kernel.
#[derive(Debug, Error)]
pub enum SpecFunError {
    /// Argument outside the supported domain.
    #[error("domain error in {op}: {message}")]
    Domain { op: &'static str, message: String },
    /// An internal iteration failed to converge; the message carries the
    /// arguments and the state that triggered the failure.
    #[error("{op} failed to converge: {diagnostics}")]
    NonConvergence {
        op: &'static str,
        diagnostics: String,
    },
}

pub(crate) fn domain(op: &'static str, message: impl Into<String>) -> SpecFunError {
    SpecFunError::Domain {
        op,
        message: message.into(),
    }
}

/// Gegenbauer reprojection parameters: weight exponent λ and truncation
/// degree m. The weight is w_λ(x) = (1−x²)^{λ−1/2}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GegParams {
    pub lambda: f64,
    pub m: usize,
}

impl GegParams {
    /// Validates λ ≥ 0 and finiteness.
    pub fn new(lambda: f64, m: usize) -> Result<Self, SpecFunError> {
        if !lambda.is_finite() || lambda < 0.0 {
            return Err(domain(
                "GegParams::new",
                format!("lambda must be a finite non-negative real, got {lambda}"),
            ));
        }
        Ok(Self { lambda, m })
    }

    /// Compares m/N and λ/N against the exponential-accuracy guidance bound
    /// κ < πe/27. Violations are advisory: reconstructions still run, the
    /// asymptotic error guarantee just no longer applies.
    pub fn kappa_report(&self, n: usize) -> KappaReport {
        let n = n as f64;
        KappaReport {
            bound: std::f64::consts::PI * std::f64::consts::E / 27.0,
            m_ratio: self.m as f64 / n,
            lambda_ratio: self.lambda / n,
        }
    }
}

/// Advisory report comparing the reprojection parameters against the
/// κ < πe/27 proportionality guidance.
#[derive(Debug, Clone, Copy)]
pub struct KappaReport {
    /// The guidance bound πe/27 ≈ 0.3163.
    pub bound: f64,
    /// m / N.
    pub m_ratio: f64,
    /// λ / N.
    pub lambda_ratio: f64,
}

impl KappaReport {
    pub fn within_bound(&self) -> bool {
        self.m_ratio < self.bound && self.lambda_ratio < self.bound
    }
}

impl std::fmt::Display for KappaReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "kappa guidance: m/N = {:.4}, lambda/N = {:.4}, bound = {:.4} ({})",
            self.m_ratio,
            self.lambda_ratio,
            self.bound,
            if self.within_bound() {
                "within bound"
            } else {
                "outside bound; exponential-accuracy guidance does not apply"
            }
        )
    }
}
