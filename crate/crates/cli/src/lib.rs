//! Command-line front end: metric ingestion, detector selection and report output.

pub mod metric_file;
pub mod report;

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, ValueEnum};
use pseudosym_core::catalog::{self, CatalogError, CatalogParams, Hints};
use pseudosym_core::classify::{full_report, Selection, Settings};
use pseudosym_core::{CurvatureError, Metric};

pub use metric_file::{MetricFile, MetricFileError};
pub use report::{ReportDocument, Timing};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Machine,
    Text,
}

#[derive(Debug, Clone, Parser)]
#[command(name = "pseudosym", version, about = "Decide curvature conditions of a metric exactly")]
pub struct Args {
    /// Built-in metric name or path to a TOML metric file.
    #[arg(long)]
    pub metric: String,
    /// `all`, or a comma list of detector names and group ids.
    #[arg(long, default_value = "all")]
    pub checks: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Derivative order registered for unknown functions.
    #[arg(long, default_value_t = 4)]
    pub jet_depth: usize,
    /// Seed for the random spot checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random exact evaluations cross-checking each solved identity.
    #[arg(long, default_value_t = 8)]
    pub trials: usize,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Include wall-clock timings (makes output run-dependent).
    #[arg(long)]
    pub timing: bool,
    /// Override a built-in parameter, as NAME=EXPR.
    #[arg(long = "param", value_name = "NAME=EXPR")]
    pub params: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("--metric: `{0}` is neither a built-in metric ({1}) nor a readable file")]
    UnknownMetric(String, String),
    #[error("--metric {path}: {source}")]
    MetricFile { path: String, source: MetricFileError },
    #[error("--metric: {0}")]
    Catalog(#[from] CatalogError),
    #[error("--param: expected NAME=EXPR, got `{0}`")]
    BadParam(String),
    #[error("--param applies only to built-in metrics")]
    ParamOnFile,
    #[error("--jet-depth: must be at least 1")]
    JetDepth,
    #[error("curvature: {0}")]
    Curvature(#[from] CurvatureError),
    #[error("--out {path}: {source}")]
    Output { path: String, source: std::io::Error },
}

fn load(args: &Args) -> Result<(Metric, Hints), CliError> {
    if catalog::names().contains(&args.metric.as_str()) {
        let mut params = CatalogParams::default().jet_depth(args.jet_depth);
        for p in &args.params {
            let (k, v) = p.split_once('=').ok_or_else(|| CliError::BadParam(p.clone()))?;
            params = params.with(k.trim(), v.trim());
        }
        let built = catalog::builtin(&args.metric, &params)?;
        return Ok((built.metric, built.hints));
    }
    let path = Path::new(&args.metric);
    if !path.is_file() {
        return Err(CliError::UnknownMetric(args.metric.clone(), catalog::names().join(", ")));
    }
    if !args.params.is_empty() {
        return Err(CliError::ParamOnFile);
    }
    let wrap = |source| CliError::MetricFile {
        path: args.metric.clone(),
        source,
    };
    let metric = MetricFile::read(path).and_then(|f| f.build(args.jet_depth)).map_err(wrap)?;
    Ok((metric, Hints::default()))
}

/// Runs the battery and renders the report.
pub fn run(args: &Args) -> Result<String, CliError> {
    if args.jet_depth == 0 {
        return Err(CliError::JetDepth);
    }
    let start = Instant::now();
    let (metric, hints) = load(args)?;
    let ctx = metric.context().clone();
    let built = start.elapsed();
    let settings = Settings {
        jet_depth: args.jet_depth,
        trials: args.trials,
        seed: args.seed,
    };
    let report = full_report(metric, &hints, settings, &Selection::parse(&args.checks))?;
    let mut doc = ReportDocument::new(&report, &ctx);
    if args.timing {
        doc.timing = Some(Timing {
            build_ms: built.as_millis() as u64,
            battery_ms: (start.elapsed() - built).as_millis() as u64,
        });
    }
    Ok(match args.format {
        Format::Machine => doc.to_json(),
        Format::Text => doc.to_text(),
    })
}

/// Runs and writes to `--out` or standard output.
pub fn execute(args: &Args) -> Result<(), CliError> {
    let text = run(args)?;
    match &args.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Output {
            path: path.display().to_string(),
            source,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
