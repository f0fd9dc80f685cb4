use std::fs;
use std::io::Write as _;
use std::path::Path;
use std::time::Instant;

use degibbs_fourier::{
    add_noise, dft_forward, fourier_partial_sum, inv_variance_for_snr, make_grid, snr_db,
    synthesize_clean_coeffs, Grid, NoiseModel, RealSignal, SpectralData,
};
use degibbs_inference::{
    bsr_map, credible_band, fixed_posterior, gbsr_map, sample_posterior, MapResult, Method,
};
use degibbs_reprojection::{build_operators, OperatorSet};
use degibbs_specfun::GegParams;
use serde::Serialize;

use crate::config::{MethodKind, Noise, ScenarioConfig};
use crate::sweep::derive_seed;
use crate::{io_err, CliError};

/// Error summary for one method in one scenario cell. The three l2 metrics
/// are plain Euclidean norms over the stated grid subsets; `snr_db` is the
/// realized value (also filled when the config gave a raw variance), empty
/// for noiseless runs.
#[derive(Debug, Clone, Serialize)]
pub struct MetricsRecord {
    pub method: String,
    pub lambda: f64,
    pub snr_db: Option<f64>,
    pub l2_full: f64,
    pub err_at_minus1: f64,
    pub err_at_minus08: f64,
    pub l2_interior: f64,
    pub runtime_ms: f64,
    pub iterations: usize,
}

impl MetricsRecord {
    pub const CSV_HEADER: &'static str =
        "method,lambda,snr_db,l2_full,err_at_minus1,err_at_minus08,l2_interior,runtime_ms,iterations";

    pub fn csv_row(&self) -> String {
        let snr = self.snr_db.map(|v| v.to_string()).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.method,
            self.lambda,
            snr,
            self.l2_full,
            self.err_at_minus1,
            self.err_at_minus08,
            self.l2_interior,
            self.runtime_ms,
            self.iterations
        )
    }
}

/// Reconstruction produced by one method, with the posterior band when the
/// method defines one.
#[derive(Debug, Clone)]
pub struct MethodOutcome {
    pub method: MethodKind,
    pub estimate: Vec<f64>,
    pub band: Option<(Vec<f64>, Vec<f64>)>,
    pub iterations: usize,
    pub converged: bool,
    pub hyper: Option<(f64, f64)>,
    pub objective_trace: Vec<f64>,
    pub sampling_seed: Option<u64>,
}

/// Everything a scenario produced, before any files are written. With
/// `trials > 1` the metrics are averages over per-trial noise draws while
/// estimates, bands, and iteration counts come from trial 0.
#[derive(Debug, Clone)]
pub struct ScenarioOutcome {
    pub xs: Vec<f64>,
    pub truth: Vec<f64>,
    pub clean: SpectralData,
    pub data: SpectralData,
    pub inv_variance: Option<f64>,
    pub snr_db: Option<f64>,
    pub x_at_minus08: f64,
    pub methods: Vec<MethodOutcome>,
    pub metrics: Vec<MetricsRecord>,
}

pub(crate) struct Prepared {
    pub grid: Grid,
    pub truth: RealSignal,
    pub clean: SpectralData,
    pub inv_variance: Option<f64>,
    pub snr_db: Option<f64>,
}

pub(crate) fn prepare(cfg: &ScenarioConfig) -> Result<Prepared, CliError> {
    cfg.validate()?;
    let grid = make_grid(cfg.n)?;
    let truth = RealSignal::from_fn(&grid, |x| cfg.signal.eval(x));
    let clean = synthesize_clean_coeffs(|x| cfg.signal.eval(x), cfg.n, cfg.refine)?;
    // SNR pairs against the plain transform of the sampled truth (Parseval
    // norm), while the data itself is synthesized on the refine mesh.
    let truth_coeffs = dft_forward(&truth, &grid)?;
    let inv_variance = match cfg.noise {
        Some(Noise::SnrDb(db)) => Some(inv_variance_for_snr(&truth_coeffs, db)?),
        Some(Noise::InvVariance(v)) => Some(v),
        None => None,
    };
    let realized_snr = match inv_variance {
        Some(alpha) => Some(snr_db(&truth_coeffs, alpha)?),
        None => None,
    };
    Ok(Prepared {
        grid,
        truth,
        clean,
        inv_variance,
        snr_db: realized_snr,
    })
}

pub(crate) fn trial_data(
    prep: &Prepared,
    cfg: &ScenarioConfig,
    trial: usize,
) -> Result<SpectralData, CliError> {
    match prep.inv_variance {
        Some(alpha) => {
            let noise = NoiseModel::new(alpha, derive_seed(cfg.seed, trial as u64))?;
            Ok(add_noise(&prep.clean, &noise)?)
        }
        None => Ok(prep.clean.clone()),
    }
}

struct Estimate {
    values: RealSignal,
    map: Option<MapResult>,
}

fn estimate_for(
    method: MethodKind,
    data: &SpectralData,
    grid: &Grid,
    ops: Option<&OperatorSet>,
    cfg: &ScenarioConfig,
) -> Result<Estimate, CliError> {
    let ops = || ops.expect("operators built for every non-Fourier method");
    let estimate = match method {
        MethodKind::Fourier => Estimate {
            values: fourier_partial_sum(data, grid)?,
            map: None,
        },
        MethodKind::Gegenbauer => Estimate {
            values: ops().gegenbauer_reconstruct(data)?,
            map: None,
        },
        MethodKind::Bsr => {
            let map = bsr_map(data, ops(), &cfg.bcd)?;
            Estimate {
                values: map.estimate.clone(),
                map: Some(map),
            }
        }
        MethodKind::Gbsr => {
            let map = gbsr_map(data, ops(), &cfg.bcd)?;
            Estimate {
                values: map.estimate.clone(),
                map: Some(map),
            }
        }
    };
    Ok(estimate)
}

fn l2_over(indices: &[usize], est: &[f64], truth: &[f64]) -> f64 {
    indices
        .iter()
        .map(|&j| (est[j] - truth[j]).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Runs every requested method and computes metrics, without touching the
/// filesystem. Sweeps call this once per cell.
pub fn evaluate_scenario(cfg: &ScenarioConfig) -> Result<ScenarioOutcome, CliError> {
    let prep = prepare(cfg)?;
    let grid = &prep.grid;
    let xs = grid.points().to_vec();
    let truth = &prep.truth.values;

    let needs_ops = cfg.methods.iter().any(|m| *m != MethodKind::Fourier);
    let ops = if needs_ops {
        let params = GegParams::new(cfg.lambda, cfg.m)?;
        Some(build_operators(grid, params)?)
    } else {
        None
    };

    let all: Vec<usize> = (0..cfg.n).collect();
    let interior: Vec<usize> = xs
        .iter()
        .enumerate()
        .filter(|(_, &x)| (-0.5..=0.5).contains(&x))
        .map(|(j, _)| j)
        .collect();
    let idx_minus08 = xs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| (*a + 0.8).abs().total_cmp(&(*b + 0.8).abs()))
        .map(|(j, _)| j)
        .expect("grid is non-empty");

    let mut methods = Vec::new();
    let mut sums = vec![[0.0f64; 5]; cfg.methods.len()];
    for trial in 0..cfg.trials {
        let data = trial_data(&prep, cfg, trial)?;
        for (mi, &method) in cfg.methods.iter().enumerate() {
            let started = Instant::now();
            let est = estimate_for(method, &data, grid, ops.as_ref(), cfg)?;
            let runtime_ms = started.elapsed().as_secs_f64() * 1e3;

            let values = &est.values.values;
            sums[mi][0] += l2_over(&all, values, truth);
            sums[mi][1] += (values[0] - truth[0]).abs();
            sums[mi][2] += (values[idx_minus08] - truth[idx_minus08]).abs();
            sums[mi][3] += l2_over(&interior, values, truth);
            sums[mi][4] += runtime_ms;

            if trial == 0 {
                let (band, sampling_seed) = match (&est.map, method) {
                    (Some(map), MethodKind::Bsr | MethodKind::Gbsr) => {
                        let kind = if method == MethodKind::Bsr {
                            Method::Bsr
                        } else {
                            Method::Gbsr
                        };
                        let seed = derive_seed(cfg.seed, 1_000_000 + mi as u64);
                        let post = fixed_posterior(kind, &map.hyper, &data, ops.as_ref().unwrap())?;
                        let samples = sample_posterior(&post, cfg.samples, seed)?;
                        let band = credible_band(&samples, cfg.credible_level)?;
                        (
                            Some((band.lower.values.clone(), band.upper.values.clone())),
                            Some(seed),
                        )
                    }
                    _ => (None, None),
                };
                methods.push(MethodOutcome {
                    method,
                    estimate: values.clone(),
                    band,
                    iterations: est.map.as_ref().map_or(0, |m| m.iterations),
                    converged: est.map.as_ref().is_none_or(|m| m.converged),
                    hyper: est
                        .map
                        .as_ref()
                        .map(|m| (m.hyper.likelihood_precision, m.hyper.prior_precision)),
                    objective_trace: est.map.as_ref().map_or(Vec::new(), |m| {
                        m.objective_trace.clone()
                    }),
                    sampling_seed,
                });
            }
        }
    }

    let scale = 1.0 / cfg.trials as f64;
    let metrics = cfg
        .methods
        .iter()
        .zip(&sums)
        .zip(&methods)
        .map(|((method, s), outcome)| MetricsRecord {
            method: method.to_string(),
            lambda: cfg.lambda,
            snr_db: prep.snr_db,
            l2_full: s[0] * scale,
            err_at_minus1: s[1] * scale,
            err_at_minus08: s[2] * scale,
            l2_interior: s[3] * scale,
            runtime_ms: s[4] * scale,
            iterations: outcome.iterations,
        })
        .collect();

    let data0 = trial_data(&prep, cfg, 0)?;
    Ok(ScenarioOutcome {
        xs,
        truth: truth.clone(),
        clean: prep.clean,
        data: data0,
        inv_variance: prep.inv_variance,
        snr_db: prep.snr_db,
        x_at_minus08: grid.points()[idx_minus08],
        methods,
        metrics,
    })
}

/// Evaluates the scenario and writes one estimate CSV per method, the
/// metrics table, and the run manifest into the configured output directory.
pub fn run_scenario(cfg: &ScenarioConfig) -> Result<ScenarioOutcome, CliError> {
    let outcome = evaluate_scenario(cfg)?;
    let dir = &cfg.output_dir;
    fs::create_dir_all(dir).map_err(io_err(dir.clone()))?;

    for method in &outcome.methods {
        write_method_csv(&dir.join(format!("{}.csv", method.method)), &outcome, method)?;
    }
    write_metrics_csv(&dir.join("metrics.csv"), &outcome.metrics)?;
    write_manifest(&dir.join("manifest.json"), cfg, &outcome)?;
    Ok(outcome)
}

fn write_method_csv(
    path: &Path,
    outcome: &ScenarioOutcome,
    method: &MethodOutcome,
) -> Result<(), CliError> {
    let mut text = String::new();
    if let Some((lower, upper)) = &method.band {
        text.push_str("x,truth,estimate,lower,upper\n");
        for j in 0..outcome.xs.len() {
            text.push_str(&format!(
                "{},{},{},{},{}\n",
                outcome.xs[j], outcome.truth[j], method.estimate[j], lower[j], upper[j]
            ));
        }
    } else {
        text.push_str("x,truth,estimate\n");
        for j in 0..outcome.xs.len() {
            text.push_str(&format!(
                "{},{},{}\n",
                outcome.xs[j], outcome.truth[j], method.estimate[j]
            ));
        }
    }
    fs::write(path, text).map_err(io_err(path))
}

pub fn write_metrics_csv(path: &Path, records: &[MetricsRecord]) -> Result<(), CliError> {
    let mut w = std::io::BufWriter::new(fs::File::create(path).map_err(io_err(path))?);
    writeln!(w, "{}", MetricsRecord::CSV_HEADER).map_err(io_err(path))?;
    for r in records {
        writeln!(w, "{}", r.csv_row()).map_err(io_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

/// Writes the scenario's clean coefficients, and the trial-0 noisy draw when
/// noise is configured. Returns the written paths.
pub fn run_synthesize(cfg: &ScenarioConfig) -> Result<Vec<std::path::PathBuf>, CliError> {
    let prep = prepare(cfg)?;
    fs::create_dir_all(&cfg.output_dir).map_err(io_err(cfg.output_dir.clone()))?;
    let clean_path = cfg.output_dir.join("clean.csv");
    degibbs_fourier::write_spectral(&prep.clean, &clean_path)?;
    let mut written = vec![clean_path];
    if prep.inv_variance.is_some() {
        let noisy = trial_data(&prep, cfg, 0)?;
        let noisy_path = cfg.output_dir.join("noisy.csv");
        degibbs_fourier::write_spectral(&noisy, &noisy_path)?;
        written.push(noisy_path);
    }
    Ok(written)
}

/// Runs one Bayesian method to convergence, freezes its hyperparameters,
/// and writes the posterior band: sampled by default, the exact Gaussian
/// band with `analytic`. Returns the CSV and manifest paths.
pub fn run_sample_posterior(
    cfg: &ScenarioConfig,
    method: MethodKind,
    analytic: bool,
) -> Result<Vec<std::path::PathBuf>, CliError> {
    if !method.has_band() {
        return Err(crate::config_err(format!(
            "sample-posterior: method must be bsr or gbsr, got {method}"
        )));
    }
    let prep = prepare(cfg)?;
    let data = trial_data(&prep, cfg, 0)?;
    let params = GegParams::new(cfg.lambda, cfg.m)?;
    let ops = build_operators(&prep.grid, params)?;
    let (map, kind) = if method == MethodKind::Bsr {
        (bsr_map(&data, &ops, &cfg.bcd)?, Method::Bsr)
    } else {
        (gbsr_map(&data, &ops, &cfg.bcd)?, Method::Gbsr)
    };
    let post = fixed_posterior(kind, &map.hyper, &data, &ops)?;
    let (band, sampling_seed) = if analytic {
        (degibbs_inference::analytic_band(&post, cfg.credible_level)?, None)
    } else {
        let seed = derive_seed(cfg.seed, 1_000_000);
        let samples = sample_posterior(&post, cfg.samples, seed)?;
        (credible_band(&samples, cfg.credible_level)?, Some(seed))
    };

    fs::create_dir_all(&cfg.output_dir).map_err(io_err(cfg.output_dir.clone()))?;
    let csv_path = cfg.output_dir.join(format!("posterior_{method}.csv"));
    let mut text = String::from("x,truth,mean,lower,upper\n");
    for (j, &x) in prep.grid.points().iter().enumerate() {
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            x, prep.truth.values[j], post.mean()[j], band.lower.values[j], band.upper.values[j]
        ));
    }
    fs::write(&csv_path, text).map_err(io_err(&csv_path))?;

    #[derive(Serialize)]
    struct PosteriorManifest {
        method: String,
        analytic: bool,
        credible_level: f64,
        samples: usize,
        sampling_seed: Option<u64>,
        likelihood_precision: f64,
        prior_precision: f64,
        iterations: usize,
        converged: bool,
    }
    let manifest = PosteriorManifest {
        method: method.to_string(),
        analytic,
        credible_level: cfg.credible_level,
        samples: cfg.samples,
        sampling_seed,
        likelihood_precision: map.hyper.likelihood_precision,
        prior_precision: map.hyper.prior_precision,
        iterations: map.iterations,
        converged: map.converged,
    };
    let json_path = cfg.output_dir.join(format!("posterior_{method}.json"));
    fs::write(&json_path, serde_json::to_string_pretty(&manifest)? + "\n")
        .map_err(io_err(&json_path))?;
    Ok(vec![csv_path, json_path])
}

#[derive(Serialize)]
struct Manifest<'a> {
    signal: String,
    n: usize,
    m: usize,
    lambda: f64,
    refine: usize,
    seed: u64,
    trials: usize,
    methods: Vec<String>,
    inv_variance: Option<f64>,
    snr_db: Option<f64>,
    rel_tol: f64,
    max_iter: usize,
    credible_level: f64,
    samples: usize,
    err_at_minus08_grid_point: f64,
    metrics_are_trial_averages: bool,
    runs: Vec<RunManifest<'a>>,
}

#[derive(Serialize)]
struct RunManifest<'a> {
    method: String,
    iterations: usize,
    converged: bool,
    likelihood_precision: Option<f64>,
    prior_precision: Option<f64>,
    objective_trace: &'a [f64],
    sampling_seed: Option<u64>,
}

pub(crate) fn write_manifest(
    path: &Path,
    cfg: &ScenarioConfig,
    outcome: &ScenarioOutcome,
) -> Result<(), CliError> {
    let manifest = Manifest {
        signal: cfg.signal.to_string(),
        n: cfg.n,
        m: cfg.m,
        lambda: cfg.lambda,
        refine: cfg.refine,
        seed: cfg.seed,
        trials: cfg.trials,
        methods: cfg.methods.iter().map(|m| m.to_string()).collect(),
        inv_variance: outcome.inv_variance,
        snr_db: outcome.snr_db,
        rel_tol: cfg.bcd.rel_tol,
        max_iter: cfg.bcd.max_iter,
        credible_level: cfg.credible_level,
        samples: cfg.samples,
        err_at_minus08_grid_point: outcome.x_at_minus08,
        metrics_are_trial_averages: cfg.trials > 1,
        runs: outcome
            .methods
            .iter()
            .map(|m| RunManifest {
                method: m.method.to_string(),
                iterations: m.iterations,
                converged: m.converged,
                likelihood_precision: m.hyper.map(|h| h.0),
                prior_precision: m.hyper.map(|h| h.1),
                objective_trace: &m.objective_trace,
                sampling_seed: m.sampling_seed,
            })
            .collect(),
    };
    let text = serde_json::to_string_pretty(&manifest)?;
    fs::write(path, text + "\n").map_err(io_err(path))
}
