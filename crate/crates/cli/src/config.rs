use std::fmt;
use std::path::PathBuf;

use degibbs_inference::BcdConfig;

use crate::signals::Signal;
use crate::{config_err, CliError};

/// Reconstruction methods a scenario can request.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodKind {
    Fourier,
    Gegenbauer,
    Bsr,
    Gbsr,
}

impl MethodKind {
    pub const ALL: [MethodKind; 4] = [
        MethodKind::Fourier,
        MethodKind::Gegenbauer,
        MethodKind::Bsr,
        MethodKind::Gbsr,
    ];

    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text.trim() {
            "fourier" => Ok(MethodKind::Fourier),
            "gegenbauer" => Ok(MethodKind::Gegenbauer),
            "bsr" => Ok(MethodKind::Bsr),
            "gbsr" => Ok(MethodKind::Gbsr),
            other => Err(config_err(format!(
                "methods: unknown `{other}`, expected fourier, gegenbauer, bsr, gbsr"
            ))),
        }
    }

    /// True for the Bayesian methods that carry a posterior and a band.
    pub fn has_band(self) -> bool {
        matches!(self, MethodKind::Bsr | MethodKind::Gbsr)
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MethodKind::Fourier => "fourier",
            MethodKind::Gegenbauer => "gegenbauer",
            MethodKind::Bsr => "bsr",
            MethodKind::Gbsr => "gbsr",
        };
        write!(f, "{name}")
    }
}

/// Noise level, given either as a target SNR or directly as the noise
/// precision α (the coefficient noise variance is α⁻¹). Absent means
/// noiseless data.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Noise {
    SnrDb(f64),
    InvVariance(f64),
}

/// Full description of one experiment: signal, discretization, noise,
/// methods, and output knobs. Built from defaults, then a config file, then
/// command-line overrides, each layer applied through [`ScenarioConfig::set`].
#[derive(Debug, Clone)]
pub struct ScenarioConfig {
    pub signal: Signal,
    pub n: usize,
    pub m: usize,
    pub lambda: f64,
    pub noise: Option<Noise>,
    pub seed: u64,
    pub methods: Vec<MethodKind>,
    pub refine: usize,
    pub bcd: BcdConfig,
    pub credible_level: f64,
    pub samples: usize,
    pub trials: usize,
    pub output_dir: PathBuf,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        Self {
            signal: Signal::ExpSin,
            n: 128,
            m: 9,
            lambda: 4.0,
            noise: None,
            seed: 0,
            methods: MethodKind::ALL.to_vec(),
            refine: 8,
            bcd: BcdConfig::default(),
            credible_level: 0.999,
            samples: 10_000,
            trials: 1,
            output_dir: PathBuf::from("out"),
        }
    }
}

impl ScenarioConfig {
    /// Parses the flat key-value scenario format: one `key = value` per
    /// line, `#` starts a comment, unknown keys are errors.
    pub fn from_text(text: &str) -> Result<Self, CliError> {
        let mut cfg = ScenarioConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                config_err(format!("line {}: expected `key = value`, got `{line}`", idx + 1))
            })?;
            cfg.set(key.trim(), value.trim())
                .map_err(|e| config_err(format!("line {}: {e}", idx + 1)))?;
        }
        Ok(cfg)
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(crate::io_err(path))?;
        Self::from_text(&text)
    }

    /// Applies one assignment. Field names match the struct; `snr_db` and
    /// `inv_variance` are mutually exclusive spellings of `noise`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        fn num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError>
        where
            T::Err: fmt::Display,
        {
            value
                .parse::<T>()
                .map_err(|e| config_err(format!("{key}: bad value `{value}`: {e}")))
        }

        match key {
            "signal" => self.signal = Signal::parse(value)?,
            "n" => self.n = num(key, value)?,
            "m" => self.m = num(key, value)?,
            "lambda" => self.lambda = num(key, value)?,
            "snr_db" => {
                if matches!(self.noise, Some(Noise::InvVariance(_))) {
                    return Err(config_err("snr_db: inv_variance is already set"));
                }
                self.noise = Some(Noise::SnrDb(num(key, value)?));
            }
            "inv_variance" => {
                if matches!(self.noise, Some(Noise::SnrDb(_))) {
                    return Err(config_err("inv_variance: snr_db is already set"));
                }
                let v: f64 = num(key, value)?;
                if !(v.is_finite() && v > 0.0) {
                    return Err(config_err(format!(
                        "inv_variance: must be positive, got {v}"
                    )));
                }
                self.noise = Some(Noise::InvVariance(v));
            }
            "seed" => self.seed = num(key, value)?,
            "methods" => {
                let mut methods = Vec::new();
                for part in value.split(',') {
                    let method = MethodKind::parse(part)?;
                    if !methods.contains(&method) {
                        methods.push(method);
                    }
                }
                self.methods = methods;
            }
            "refine" => self.refine = num(key, value)?,
            "rel_tol" => self.bcd.rel_tol = num(key, value)?,
            "max_iter" => self.bcd.max_iter = num(key, value)?,
            "credible_level" => self.credible_level = num(key, value)?,
            "samples" => self.samples = num(key, value)?,
            "trials" => self.trials = num(key, value)?,
            "output_dir" => self.output_dir = PathBuf::from(value),
            other => {
                return Err(config_err(format!(
                    "unknown field `{other}`; known fields: signal, n, m, lambda, snr_db, \
                     inv_variance, seed, methods, refine, rel_tol, max_iter, credible_level, \
                     samples, trials, output_dir"
                )))
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if !self.n.is_multiple_of(2) || self.n < 4 {
            return Err(config_err(format!("n: must be even and >= 4, got {}", self.n)));
        }
        if self.m + 1 > self.n {
            return Err(config_err(format!(
                "m: need m + 1 <= n, got m = {}, n = {}",
                self.m, self.n
            )));
        }
        if !self.lambda.is_finite() || self.lambda < 0.5 {
            return Err(config_err(format!(
                "lambda: must be >= 0.5, got {}",
                self.lambda
            )));
        }
        if let Some(Noise::SnrDb(db)) = self.noise {
            if !db.is_finite() {
                return Err(config_err(format!("snr_db: must be finite, got {db}")));
            }
        }
        if self.methods.is_empty() {
            return Err(config_err("methods: need at least one method"));
        }
        if self.refine < 1 {
            return Err(config_err("refine: must be >= 1"));
        }
        BcdConfig::new(self.bcd.rel_tol, self.bcd.max_iter, self.bcd.init_precisions)
            .map_err(|e| config_err(format!("bcd: {e}")))?;
        if !(self.credible_level > 0.0 && self.credible_level < 1.0) {
            return Err(config_err(format!(
                "credible_level: must lie in (0, 1), got {}",
                self.credible_level
            )));
        }
        if self.samples < 2 {
            return Err(config_err("samples: must be >= 2"));
        }
        if self.trials < 1 {
            return Err(config_err("trials: must be >= 1"));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_text_round_trips_into_a_config() {
        let text = "
            # experiment
            signal = cos_shift
            n = 48
            m = 9
            lambda = 4
            snr_db = 10   # decibels
            seed = 7
            methods = gegenbauer,gbsr
            samples = 500
        ";
        let cfg = ScenarioConfig::from_text(text).unwrap();
        cfg.validate().unwrap();
        assert_eq!(cfg.signal, Signal::CosShift);
        assert_eq!(cfg.n, 48);
        assert_eq!(cfg.noise, Some(Noise::SnrDb(10.0)));
        assert_eq!(cfg.methods, vec![MethodKind::Gegenbauer, MethodKind::Gbsr]);
        assert_eq!(cfg.samples, 500);
        assert_eq!(cfg.trials, 1);
    }

    #[test]
    fn unknown_fields_and_malformed_lines_are_named() {
        let err = ScenarioConfig::from_text("bogus = 1").unwrap_err();
        assert!(err.to_string().contains("bogus"), "{err}");
        let err = ScenarioConfig::from_text("n 48").unwrap_err();
        assert!(err.to_string().contains("key = value"), "{err}");
    }

    #[test]
    fn snr_and_inv_variance_are_mutually_exclusive() {
        let err = ScenarioConfig::from_text("snr_db = 10\ninv_variance = 0.002").unwrap_err();
        assert!(err.to_string().contains("already set"), "{err}");
        let cfg = ScenarioConfig::from_text("inv_variance = 0.002").unwrap();
        assert_eq!(cfg.noise, Some(Noise::InvVariance(0.002)));
    }

    #[test]
    fn validation_rejects_bad_discretizations() {
        let mut cfg = ScenarioConfig {
            n: 47,
            ..ScenarioConfig::default()
        };
        assert!(cfg.validate().is_err());
        cfg.n = 8;
        cfg.m = 9;
        assert!(cfg.validate().is_err());
        cfg.m = 3;
        cfg.lambda = 0.2;
        assert!(cfg.validate().is_err());
        cfg.lambda = 2.0;
        cfg.validate().unwrap();
    }
}
