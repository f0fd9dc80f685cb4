//! The uniform spatial grid and real signals sampled on it.

use crate::{config, FourierError};

/// Uniform grid x_j = -1 + 2j/N, j = 0..N-1. N is even so the wavenumber
/// range -N/2..N/2-1 is symmetric; +1 is excluded as the periodic image
/// of -1.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    n: usize,
    points: Vec<f64>,
}

impl Grid {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }
}

/// Builds the uniform grid; n must be even and at least 4.
pub fn make_grid(n: usize) -> Result<Grid, FourierError> {
    if !n.is_multiple_of(2) || n < 4 {
        return Err(config(format!(
            "grid size must be an even integer >= 4, got {n}"
        )));
    }
    let points = (0..n).map(|j| -1.0 + 2.0 * j as f64 / n as f64).collect();
    Ok(Grid { n, points })
}

/// Real samples f(x_j) on a grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RealSignal {
    pub values: Vec<f64>,
}

impl RealSignal {
    pub fn from_values(values: Vec<f64>) -> Self {
        Self { values }
    }

    /// Samples a function on the grid points.
    pub fn from_fn(grid: &Grid, f: impl Fn(f64) -> f64) -> Self {
        Self {
            values: grid.points().iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}
