use degibbs_fourier::RealSignal;

use crate::{domain, InferenceError};

/// Default Gamma hyperprior shape c.
pub const DEFAULT_SHAPE: f64 = 1.0;
/// Default Gamma hyperprior rate d.
pub const DEFAULT_RATE: f64 = 1e-4;

/// Precision pair (likelihood γ or γ̃, prior β) plus the shared Gamma
/// hyperprior shape/rate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperParams {
    pub likelihood_precision: f64,
    pub prior_precision: f64,
    pub shape: f64,
    pub rate: f64,
}

impl HyperParams {
    /// Positive precisions with the default shape/rate (c = 1, d = 1e-4).
    pub fn new(likelihood_precision: f64, prior_precision: f64) -> Result<Self, InferenceError> {
        let hp = Self {
            likelihood_precision,
            prior_precision,
            shape: DEFAULT_SHAPE,
            rate: DEFAULT_RATE,
        };
        hp.validate()?;
        Ok(hp)
    }

    /// Overrides the Gamma hyperprior. Rate 0 is the improper flat limit;
    /// it is accepted here so closed-form identities can be exercised, but
    /// the precision updates then require a nonzero residual.
    pub fn with_shape_rate(mut self, shape: f64, rate: f64) -> Result<Self, InferenceError> {
        self.shape = shape;
        self.rate = rate;
        self.validate()?;
        Ok(self)
    }

    pub(crate) fn validate(&self) -> Result<(), InferenceError> {
        for (name, v) in [
            ("likelihood_precision", self.likelihood_precision),
            ("prior_precision", self.prior_precision),
            ("shape", self.shape),
        ] {
            if !v.is_finite() || v <= 0.0 {
                return Err(domain(
                    "HyperParams",
                    format!("{name} must be a finite positive real, got {v}"),
                ));
            }
        }
        if !self.rate.is_finite() || self.rate < 0.0 {
            return Err(domain(
                "HyperParams",
                format!("rate must be finite and non-negative, got {}", self.rate),
            ));
        }
        Ok(())
    }
}

/// Block-coordinate-descent knobs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BcdConfig {
    /// Relative threshold applied to both the objective change and the
    /// iterate change per sweep.
    pub rel_tol: f64,
    pub max_iter: usize,
    /// Starting (likelihood, prior) precisions.
    pub init_precisions: (f64, f64),
}

impl BcdConfig {
    pub fn new(
        rel_tol: f64,
        max_iter: usize,
        init_precisions: (f64, f64),
    ) -> Result<Self, InferenceError> {
        if rel_tol <= 0.0 || !rel_tol.is_finite() {
            return Err(domain(
                "BcdConfig",
                format!("rel_tol must be a finite positive real, got {rel_tol}"),
            ));
        }
        if max_iter == 0 {
            return Err(domain("BcdConfig", "max_iter must be at least 1"));
        }
        let (g0, b0) = init_precisions;
        if g0 <= 0.0 || b0 <= 0.0 || !g0.is_finite() || !b0.is_finite() {
            return Err(domain(
                "BcdConfig",
                format!("init precisions must be finite and positive, got ({g0}, {b0})"),
            ));
        }
        Ok(Self {
            rel_tol,
            max_iter,
            init_precisions,
        })
    }
}

impl Default for BcdConfig {
    fn default() -> Self {
        Self {
            rel_tol: 1e-8,
            max_iter: 100,
            init_precisions: (1.0, 1.0),
        }
    }
}

/// Output of a MAP run: the estimate, the final hyperparameters, and the
/// objective value before iteration plus after each completed sweep.
#[derive(Debug, Clone)]
pub struct MapResult {
    pub estimate: RealSignal,
    pub hyper: HyperParams,
    pub objective_trace: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}
