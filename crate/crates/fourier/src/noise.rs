//! Circularly-symmetric complex Gaussian measurement noise.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::spectral::{SpectralData, SpectralKind};
use crate::{domain, FourierError};

/// Noise description: precision alpha (the total complex variance is
/// alpha^{-1}) and the RNG seed that makes a realization reproducible.
/// An infinite precision is the noiseless limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseModel {
    pub inv_variance: f64,
    pub seed: u64,
}

impl NoiseModel {
    pub fn new(inv_variance: f64, seed: u64) -> Result<Self, FourierError> {
        if inv_variance <= 0.0 || inv_variance.is_nan() {
            return Err(domain(
                "NoiseModel::new",
                format!("noise precision must be positive, got {inv_variance}"),
            ));
        }
        Ok(Self { inv_variance, seed })
    }
}

/// Adds i.i.d. CN(0, alpha^{-1}) noise: real and imaginary parts each
/// N(0, alpha^{-1}/2), drawn from a ChaCha stream seeded by the model, so
/// identical inputs produce bit-identical output.
pub fn add_noise(data: &SpectralData, noise: &NoiseModel) -> Result<SpectralData, FourierError> {
    if data.kind != SpectralKind::Clean {
        return Err(domain(
            "add_noise",
            "input already carries noise; noise is added to clean coefficients only".to_string(),
        ));
    }
    let sigma = (0.5 / noise.inv_variance).sqrt();
    let coeffs = if sigma == 0.0 {
        data.coeffs.clone()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(noise.seed);
        data.coeffs
            .iter()
            .map(|c| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                c + Complex64::new(sigma * re, sigma * im)
            })
            .collect()
    };
    Ok(SpectralData {
        coeffs,
        kind: SpectralKind::Noisy,
    })
}
