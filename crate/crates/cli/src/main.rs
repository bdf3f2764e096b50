mod dataset;
mod figures;
mod grid;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, ValueEnum};
use serde_json::json;
use susyosc::hilbert::verify_numerics;
use susyosc::susy::{verify_all, Report, SusyModel, STANDARD_DELETED_LEVEL, STANDARD_SEEDS};

use dataset::Dataset;
use grid::Grid;

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(n) if n >= 1 => Ok(n),
        _ => Err(format!("`{s}` is not a positive integer")),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

/// Datasets and verification suites for the rational extension of the
/// truncated oscillator with seeds {2,3,4,5} and its coherent states.
#[derive(Clone, Debug, Parser)]
#[command(name = "susyosc", version)]
pub struct RunConfig {
    /// verify, tables, or fig3 .. fig11
    #[arg(long)]
    pub command: String,
    /// Modulus of the coherent-state eigenvalue z.
    #[arg(long)]
    pub z_abs: Option<f64>,
    /// Phase of z in degrees.
    #[arg(long, default_value_t = 0.0)]
    pub z_arg_deg: f64,
    #[arg(long, value_name = "a:b:n")]
    pub grid_x: Option<Grid>,
    #[arg(long, value_name = "a:b:n")]
    pub grid_t: Option<Grid>,
    #[arg(long, value_name = "a:b:n")]
    pub grid_p: Option<Grid>,
    /// Sweep of real z, `a:b:n` or `log:a:b:n`.
    #[arg(long, value_name = "a:b:n")]
    pub grid_z: Option<Grid>,
    /// Number of retained terms k = 0..K-1 for densities (12) and moments (7).
    #[arg(long = "trunc-K", value_parser = positive)]
    pub trunc_k: Option<usize>,
    /// Terms of the Wigner double sum at the reference truncation (1).
    #[arg(long = "trunc-Kw", value_parser = positive)]
    pub trunc_kw: Option<usize>,
    /// Photon-number cutoff of the beamsplitter table.
    #[arg(long, default_value_t = 20)]
    pub nmax: usize,
    /// kappa and r cutoff of the entropy sums.
    #[arg(long, default_value_t = 10, value_parser = positive)]
    pub entropy_cutoff: usize,
    /// Seed set for verify.
    #[arg(long, value_delimiter = ',', default_values_t = STANDARD_SEEDS.to_vec())]
    pub seeds: Vec<i64>,
    /// Highest nonnegative level used by verify.
    #[arg(long, default_value_t = 11)]
    pub max_nu: i64,
    /// Output file; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

fn emit(cfg: &RunConfig, body: &str) -> Result<()> {
    match &cfg.out {
        Some(path) => fs::write(path, body).with_context(|| format!("writing {}", path.display())),
        None => {
            std::io::stdout().write_all(body.as_bytes())?;
            Ok(())
        }
    }
}

fn render(cfg: &RunConfig, d: &Dataset) -> String {
    match cfg.format {
        Format::Csv => d.to_csv(),
        Format::Json => d.to_json(),
    }
}

fn verify(cfg: &RunConfig) -> Result<bool> {
    let model = SusyModel::new(&cfg.seeds, STANDARD_DELETED_LEVEL).context("building the rational extension")?;
    let mut report: Report = verify_all(&model, cfg.max_nu)?;
    let standard = cfg.seeds == STANDARD_SEEDS;
    if standard {
        report.extend(verify_numerics(&model, 7, 5)?);
    }
    let failures = report.failures();
    for f in &failures {
        eprintln!(
            "FAIL {} operator={} nu={}: {}",
            f.check,
            f.operator.as_deref().unwrap_or("-"),
            f.nu.map_or("-".to_string(), |n| n.to_string()),
            f.residual_description
        );
    }
    let body = serde_json::to_string_pretty(&json!({
        "seeds": cfg.seeds,
        "numeric_checks": standard,
        "checks": report.records.len(),
        "failures": failures.len(),
        "flagged": report.flagged().len(),
        "records": report.records,
    }))?;
    emit(cfg, &(body + "\n"))?;
    Ok(report.all_pass())
}

fn run(cfg: &RunConfig) -> Result<bool> {
    match cfg.command.as_str() {
        "verify" => verify(cfg),
        "tables" => {
            emit(cfg, &render(cfg, &figures::tables()))?;
            Ok(true)
        }
        name if figures::FIGURES.contains(&name) => {
            let d = figures::run(name, cfg)?;
            emit(cfg, &render(cfg, &d))?;
            Ok(true)
        }
        other => bail!(
            "unknown command `{other}` (expected verify, tables, {})",
            figures::FIGURES.join(", ")
        ),
    }
}

fn main() -> ExitCode {
    let cfg = RunConfig::parse();
    match run(&cfg) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
