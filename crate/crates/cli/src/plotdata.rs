use std::fs;
use std::path::{Path, PathBuf};

use crate::run::MetricsRecord;
use crate::{config_err, io_err, CliError};

/// Log-plot floor: metric values below this are clamped in plot files only;
/// metrics tables always carry the raw values.
const LOG_FLOOR: f64 = 1e-16;

/// One posterior band in an (SNR, λ) grid, ready to plot.
#[derive(Debug, Clone)]
pub struct BandCell {
    /// Realized SNR of the cell; `None` marks a noiseless run.
    pub snr_db: Option<f64>,
    pub lambda: f64,
    pub method: String,
    pub xs: Vec<f64>,
    pub truth: Vec<f64>,
    pub estimate: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
}

impl BandCell {
    fn noise_label(&self) -> String {
        match self.snr_db {
            Some(v) => format!("snr{v}"),
            None => "clean".to_string(),
        }
    }
}

/// Shapes `emit_plotdata` can write: per-metric panels over an SNR sweep, or
/// one band file per (SNR, λ, method) cell.
pub enum PlotLayout<'a> {
    SnrPanels(&'a [MetricsRecord]),
    BandGrid(&'a [BandCell]),
}

/// Writes tidy plot CSVs for the chosen layout, plus a gnuplot script when
/// asked for one. Returns every path written.
pub fn emit_plotdata(
    layout: &PlotLayout<'_>,
    dir: &Path,
    gnuplot: bool,
) -> Result<Vec<PathBuf>, CliError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    match layout {
        PlotLayout::SnrPanels(records) => emit_snr_panels(records, dir, gnuplot),
        PlotLayout::BandGrid(cells) => emit_band_grid(cells, dir, gnuplot),
    }
}

const PANELS: [&str; 4] = ["l2_full", "err_at_minus1", "err_at_minus08", "l2_interior"];

fn metric_value(record: &MetricsRecord, panel: &str) -> f64 {
    match panel {
        "l2_full" => record.l2_full,
        "err_at_minus1" => record.err_at_minus1,
        "err_at_minus08" => record.err_at_minus08,
        "l2_interior" => record.l2_interior,
        other => unreachable!("unknown panel {other}"),
    }
}

fn emit_snr_panels(
    records: &[MetricsRecord],
    dir: &Path,
    gnuplot: bool,
) -> Result<Vec<PathBuf>, CliError> {
    if records.is_empty() {
        return Err(config_err("plot data: no metrics records"));
    }
    let mut methods: Vec<&str> = Vec::new();
    let mut snrs: Vec<f64> = Vec::new();
    for r in records {
        let snr = r
            .snr_db
            .ok_or_else(|| config_err("plot data: SNR panels need noisy records"))?;
        if !methods.contains(&r.method.as_str()) {
            methods.push(&r.method);
        }
        if !snrs.contains(&snr) {
            snrs.push(snr);
        }
    }
    snrs.sort_by(|a, b| a.total_cmp(b));

    let mut written = Vec::new();
    for panel in PANELS {
        let mut text = format!("snr_db,{}\n", methods.join(","));
        for &snr in &snrs {
            text.push_str(&snr.to_string());
            for &method in &methods {
                let value = records
                    .iter()
                    .find(|r| r.method == method && r.snr_db == Some(snr))
                    .map(|r| metric_value(r, panel));
                match value {
                    Some(v) => text.push_str(&format!(",{}", v.max(LOG_FLOOR).log10())),
                    None => text.push(','),
                }
            }
            text.push('\n');
        }
        let path = dir.join(format!("panel_{panel}.csv"));
        fs::write(&path, text).map_err(io_err(&path))?;
        written.push(path);
    }

    if gnuplot {
        let mut script = String::from(
            "set datafile separator \",\"\n\
             set key autotitle columnhead outside\n\
             set xlabel \"SNR (dB)\"\n\
             set ylabel \"log10 error\"\n\
             set term pngcairo size 1400,1000\n\
             set output \"panels.png\"\n\
             set multiplot layout 2,2\n",
        );
        for panel in PANELS {
            script.push_str(&format!("set title \"{panel}\"\n"));
            let cols: Vec<String> = (0..methods.len())
                .map(|i| {
                    format!(
                        "\"panel_{panel}.csv\" using 1:{} with linespoints",
                        i + 2
                    )
                })
                .collect();
            script.push_str(&format!("plot {}\n", cols.join(", ")));
        }
        script.push_str("unset multiplot\n");
        let path = dir.join("panels.gp");
        fs::write(&path, script).map_err(io_err(&path))?;
        written.push(path);
    }
    Ok(written)
}

fn emit_band_grid(
    cells: &[BandCell],
    dir: &Path,
    gnuplot: bool,
) -> Result<Vec<PathBuf>, CliError> {
    if cells.is_empty() {
        return Err(config_err("plot data: no band cells"));
    }
    let mut written = Vec::new();
    for cell in cells {
        let mut text = String::from("x,truth,estimate,lower,upper\n");
        for j in 0..cell.xs.len() {
            text.push_str(&format!(
                "{},{},{},{},{}\n",
                cell.xs[j], cell.truth[j], cell.estimate[j], cell.lower[j], cell.upper[j]
            ));
        }
        let path = dir.join(format!(
            "band_{}_lambda{}_{}.csv",
            cell.noise_label(),
            cell.lambda,
            cell.method
        ));
        fs::write(&path, text).map_err(io_err(&path))?;
        written.push(path);
    }

    if gnuplot {
        let cols = (cells.len() as f64).sqrt().ceil() as usize;
        let rows = cells.len().div_ceil(cols);
        let mut script = format!(
            "set datafile separator \",\"\n\
             set term pngcairo size 1600,1200\n\
             set output \"bands.png\"\n\
             set multiplot layout {rows},{cols}\n"
        );
        for (cell, path) in cells.iter().zip(&written) {
            let file = path.file_name().unwrap().to_string_lossy();
            script.push_str(&format!(
                "set title \"{} {} lambda={}\"\n\
                 plot \"{}\" using 1:4:5 with filledcurves fc rgb \"#ccccff\" notitle, \
                 \"\" using 1:2 with lines title \"truth\", \
                 \"\" using 1:3 with lines title \"estimate\"\n",
                cell.method,
                cell.noise_label(),
                cell.lambda,
                file
            ));
        }
        script.push_str("unset multiplot\n");
        let path = dir.join("bands.gp");
        fs::write(&path, script).map_err(io_err(&path))?;
        written.push(path);
    }
    Ok(written)
}
