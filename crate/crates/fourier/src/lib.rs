//! Uniform-grid Fourier layer: the grid on [-1, 1), the N-mode DFT pair,
//! clean-coefficient synthesis on a refined mesh, circular complex noise,
//! and the SNR convention tying signal power to noise precision.
//!
//! Conventions used throughout the workspace:
//! - grid points x_j = -1 + 2j/N for j = 0..N-1 (the +1 endpoint is the
//!   periodic image of -1 and is excluded),
//! - coefficients are indexed by wavenumber k = -N/2 .. N/2-1,
//! - forward transform rows are (1/N) e^{-ik pi x_j}; the partial-sum
//!   synthesis uses e^{+ik pi x_j} with no 1/N.

mod grid;
mod io;
mod noise;
mod spectral;

pub use grid::{make_grid, Grid, RealSignal};
pub use io::{read_spectral, read_xy, write_signal, write_spectral};
pub use noise::{add_noise, NoiseModel};
pub use spectral::{
    dft_forward, dft_matrix, fourier_partial_sum, inv_variance_for_snr, inverse_dft_matrix,
    snr_db, synthesize_clean_coeffs, SpectralData, SpectralKind,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum FourierError {
    #[error("configuration error: {message}")]
    Config { message: String },
    #[error("domain error in {op}: {message}")]
    Domain { op: &'static str, message: String },
    #[error("shape mismatch in {op}: expected length {expected}, got {got}")]
    Shape {
        op: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub(crate) fn config(message: impl Into<String>) -> FourierError {
    FourierError::Config {
        message: message.into(),
    }
}

pub(crate) fn domain(op: &'static str, message: impl Into<String>) -> FourierError {
    FourierError::Domain {
        op,
        message: message.into(),
    }
}
