use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use degibbs_cli::{
    collect_records, emit_plotdata, run_sample_posterior, run_scenario, run_synthesize,
    sweep_lambda, sweep_snr, write_metrics_csv, BandCell, CliError, MethodKind, MetricsRecord,
    Noise, PlotLayout, ScenarioConfig, Signal,
};

/// Reconstructs smooth signals from noisy Fourier coefficients: classical
/// Gegenbauer reprojection plus Bayesian MAP variants with credible bands.
#[derive(Parser)]
#[command(name = "degibbs", version)]
struct Cli {
    #[command(flatten)]
    overrides: Overrides,
    #[command(subcommand)]
    command: Command,
}

/// Scenario fields. A `--config` file is applied first, then any explicit
/// flags on top of it.
#[derive(Args)]
struct Overrides {
    /// Scenario file: one `key = value` per line, `#` comments
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// exp_sin, cos_shift, or poly:c0,c1,...
    #[arg(long, global = true)]
    signal: Option<String>,
    /// Number of Fourier modes / grid points (even)
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Reprojection polynomial degree
    #[arg(long, global = true)]
    m: Option<usize>,
    /// Reprojection weight exponent (>= 0.5)
    #[arg(long, global = true)]
    lambda: Option<f64>,
    /// Noise level as a target SNR in dB
    #[arg(long, global = true, conflicts_with = "inv_variance")]
    snr_db: Option<f64>,
    /// Noise precision alpha; the coefficient noise variance is 1/alpha
    #[arg(long, global = true)]
    inv_variance: Option<f64>,
    /// Base seed for every random draw in the run
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Comma-separated subset of fourier,gegenbauer,bsr,gbsr
    #[arg(long, global = true)]
    methods: Option<String>,
    /// Oversampling factor for clean coefficient synthesis
    #[arg(long, global = true)]
    refine: Option<usize>,
    /// Relative convergence tolerance of the MAP iteration
    #[arg(long, global = true)]
    rel_tol: Option<f64>,
    /// Sweep cap for the MAP iteration
    #[arg(long, global = true)]
    max_iter: Option<usize>,
    /// Credible band mass in (0, 1)
    #[arg(long, global = true)]
    credible_level: Option<f64>,
    /// Posterior sample count for the empirical band
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Independent noise draws to average metrics over
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Output directory
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Write the scenario's clean (and noisy) Fourier coefficients
    Synthesize,
    /// Run the configured methods; write estimates, metrics, and a manifest
    Reconstruct {
        /// Run a single method instead of the configured set
        #[arg(long)]
        method: Option<String>,
    },
    /// Evaluate the scenario at each SNR; write a long metrics table and
    /// log-error panel CSVs
    SweepSnr {
        #[arg(long, value_delimiter = ',', required = true)]
        snr_list: Vec<f64>,
        /// Also write a gnuplot script for the panels
        #[arg(long)]
        gnuplot: bool,
    },
    /// Evaluate the scenario at each lambda (optionally crossed with SNRs);
    /// write a long metrics table and optional posterior band files
    SweepLambda {
        #[arg(long, value_delimiter = ',', required = true)]
        lambda_list: Vec<f64>,
        /// Cross the lambda list with these SNR values
        #[arg(long, value_delimiter = ',')]
        snr_list: Option<Vec<f64>>,
        /// Write one band CSV per (noise, lambda, Bayesian method) cell
        #[arg(long)]
        bands: bool,
        /// Also write a gnuplot script for the bands
        #[arg(long)]
        gnuplot: bool,
    },
    /// Fit one Bayesian method, freeze its hyperparameters, and write the
    /// posterior mean and credible band
    SamplePosterior {
        /// bsr or gbsr
        #[arg(long)]
        method: String,
        /// Use the exact Gaussian band instead of sampling
        #[arg(long)]
        analytic: bool,
    },
    /// Parse and validate the scenario configuration, then exit
    ValidateConfig,
}

fn build_config(ov: &Overrides) -> Result<ScenarioConfig, CliError> {
    let mut cfg = match &ov.config {
        Some(path) => ScenarioConfig::from_file(path)?,
        None => ScenarioConfig::default(),
    };
    if let Some(signal) = &ov.signal {
        cfg.signal = Signal::parse(signal)?;
    }
    if let Some(n) = ov.n {
        cfg.n = n;
    }
    if let Some(m) = ov.m {
        cfg.m = m;
    }
    if let Some(lambda) = ov.lambda {
        cfg.lambda = lambda;
    }
    // A noise flag replaces whatever the file configured, either kind.
    if let Some(db) = ov.snr_db {
        cfg.noise = Some(Noise::SnrDb(db));
    }
    if let Some(v) = ov.inv_variance {
        cfg.noise = Some(Noise::InvVariance(v));
    }
    if let Some(seed) = ov.seed {
        cfg.seed = seed;
    }
    if let Some(methods) = &ov.methods {
        cfg.set("methods", methods)?;
    }
    if let Some(refine) = ov.refine {
        cfg.refine = refine;
    }
    if let Some(rel_tol) = ov.rel_tol {
        cfg.bcd.rel_tol = rel_tol;
    }
    if let Some(max_iter) = ov.max_iter {
        cfg.bcd.max_iter = max_iter;
    }
    if let Some(level) = ov.credible_level {
        cfg.credible_level = level;
    }
    if let Some(samples) = ov.samples {
        cfg.samples = samples;
    }
    if let Some(trials) = ov.trials {
        cfg.trials = trials;
    }
    if let Some(out) = &ov.out {
        cfg.output_dir = out.clone();
    }
    cfg.validate()?;
    Ok(cfg)
}

fn print_metrics(records: &[MetricsRecord]) {
    println!("{}", MetricsRecord::CSV_HEADER);
    for r in records {
        println!("{}", r.csv_row());
    }
}

fn band_cells(outcomes: &[degibbs_cli::ScenarioOutcome]) -> Vec<BandCell> {
    let mut cells = Vec::new();
    for outcome in outcomes {
        for method in &outcome.methods {
            if let Some((lower, upper)) = &method.band {
                cells.push(BandCell {
                    snr_db: outcome.snr_db,
                    lambda: outcome
                        .metrics
                        .first()
                        .map(|m| m.lambda)
                        .unwrap_or(f64::NAN),
                    method: method.method.to_string(),
                    xs: outcome.xs.clone(),
                    truth: outcome.truth.clone(),
                    estimate: method.estimate.clone(),
                    lower: lower.clone(),
                    upper: upper.clone(),
                });
            }
        }
    }
    cells
}

fn dispatch(cli: &Cli) -> Result<(), CliError> {
    let cfg = build_config(&cli.overrides)?;
    match &cli.command {
        Command::Synthesize => {
            for path in run_synthesize(&cfg)? {
                println!("wrote {}", path.display());
            }
        }
        Command::Reconstruct { method } => {
            let mut cfg = cfg;
            if let Some(name) = method {
                cfg.methods = vec![MethodKind::parse(name)?];
            }
            let outcome = run_scenario(&cfg)?;
            print_metrics(&outcome.metrics);
            println!("wrote {}", cfg.output_dir.join("manifest.json").display());
        }
        Command::SweepSnr { snr_list, gnuplot } => {
            let outcomes = sweep_snr(&cfg, snr_list)?;
            let records = collect_records(&outcomes);
            std::fs::create_dir_all(&cfg.output_dir)
                .map_err(|e| CliError::Io { path: cfg.output_dir.clone(), source: e })?;
            let table = cfg.output_dir.join("sweep_snr.csv");
            write_metrics_csv(&table, &records)?;
            println!("wrote {}", table.display());
            for path in emit_plotdata(&PlotLayout::SnrPanels(&records), &cfg.output_dir, *gnuplot)? {
                println!("wrote {}", path.display());
            }
        }
        Command::SweepLambda {
            lambda_list,
            snr_list,
            bands,
            gnuplot,
        } => {
            let mut outcomes = Vec::new();
            match snr_list {
                Some(snrs) if !snrs.is_empty() => {
                    for (i, &db) in snrs.iter().enumerate() {
                        let mut base = cfg.clone();
                        base.noise = Some(Noise::SnrDb(db));
                        base.seed = degibbs_cli::derive_seed(cfg.seed, i as u64);
                        outcomes.extend(sweep_lambda(&base, lambda_list)?);
                    }
                }
                _ => outcomes = sweep_lambda(&cfg, lambda_list)?,
            }
            let records = collect_records(&outcomes);
            std::fs::create_dir_all(&cfg.output_dir)
                .map_err(|e| CliError::Io { path: cfg.output_dir.clone(), source: e })?;
            let table = cfg.output_dir.join("sweep_lambda.csv");
            write_metrics_csv(&table, &records)?;
            println!("wrote {}", table.display());
            if *bands {
                let cells = band_cells(&outcomes);
                for path in
                    emit_plotdata(&PlotLayout::BandGrid(&cells), &cfg.output_dir, *gnuplot)?
                {
                    println!("wrote {}", path.display());
                }
            }
        }
        Command::SamplePosterior { method, analytic } => {
            let kind = MethodKind::parse(method)?;
            for path in run_sample_posterior(&cfg, kind, *analytic)? {
                println!("wrote {}", path.display());
            }
        }
        Command::ValidateConfig => {
            println!("config ok");
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
