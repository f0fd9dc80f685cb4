//! Experiment harness: scenario configuration, the test-signal library,
//! method dispatch, SNR and λ sweeps, metric computation, and CSV/plot-data
//! emission.
//!
//! Everything here is deterministic given the scenario file: noise draws,
//! posterior sampling, and trial replication all derive their seeds from the
//! configured base seed, so re-running a scenario reproduces the output
//! files byte for byte (wall-clock `runtime_ms` columns aside).

use std::path::PathBuf;

use thiserror::Error;

mod config;
mod plotdata;
mod run;
mod signals;
mod sweep;

pub use config::{MethodKind, Noise, ScenarioConfig};
pub use plotdata::{emit_plotdata, BandCell, PlotLayout};
pub use run::{
    evaluate_scenario, run_sample_posterior, run_scenario, run_synthesize, write_metrics_csv,
    MethodOutcome, MetricsRecord, ScenarioOutcome,
};
pub use signals::Signal;
pub use sweep::{collect_records, derive_seed, sweep_lambda, sweep_snr};

/// Harness errors. Config problems exit with code 2, everything else
/// (numerics, I/O) with code 3.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {message}")]
    Config { message: String },
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error(transparent)]
    Fourier(#[from] degibbs_fourier::FourierError),
    #[error(transparent)]
    Reproj(#[from] degibbs_reprojection::ReprojError),
    #[error(transparent)]
    Inference(#[from] degibbs_inference::InferenceError),
    #[error(transparent)]
    SpecFun(#[from] degibbs_specfun::SpecFunError),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config { .. } => 2,
            _ => 3,
        }
    }
}

pub(crate) fn config_err(message: impl Into<String>) -> CliError {
    CliError::Config {
        message: message.into(),
    }
}

pub(crate) fn io_err(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> CliError {
    let path = path.into();
    move |source| CliError::Io { path, source }
}
