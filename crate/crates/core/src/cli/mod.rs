//! The `hypercut` command line: `generate`, `check`, `render` and `spectrum`.
//!
//! Exit codes: 0 success, 1 I/O or unexpected failure, 2 configuration error,
//! 3 insufficient depth or exhausted node budget (with `error.json`), 4 a
//! consistency check that the theory guarantees has failed.

pub mod commands;
pub mod config;
pub mod export;
pub mod svg;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

pub use config::{GeodesicSpec, Layers, RhoMode, RunConfig, SvgOptions};

use crate::cutproject::CutProjectError;
use crate::fuchsian::FuchsianError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),
    #[error("{message}")]
    Depth { kind: &'static str, message: String, required: Option<f64>, available: Option<f64> },
    #[error("consistency checks failed: {}", .0.join("; "))]
    CheckFailed(Vec<String>),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("{0}")]
    Other(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Depth { .. } => 3,
            CliError::CheckFailed(_) => 4,
            CliError::Io(_) | CliError::Other(_) => 1,
        }
    }
}

impl From<FuchsianError> for CliError {
    fn from(e: FuchsianError) -> Self {
        match e {
            FuchsianError::BudgetExceeded { cap } => CliError::Depth {
                kind: "BudgetExceeded",
                message: format!("node budget of {cap} exhausted (raise HYPERCUT_BUDGET or shrink the window)"),
                required: None,
                available: Some(cap as f64),
            },
            FuchsianError::RadiusTooLarge { .. } => {
                CliError::Depth { kind: "RadiusTooLarge", message: e.to_string(), required: None, available: None }
            }
            FuchsianError::InvalidSignature(_) | FuchsianError::BadWord(_) | FuchsianError::WordTooLong { .. } => {
                CliError::Config(e.to_string())
            }
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<CutProjectError> for CliError {
    fn from(e: CutProjectError) -> Self {
        match e {
            CutProjectError::InsufficientDepth { required, available } => CliError::Depth {
                kind: "InsufficientDepth",
                message: e.to_string(),
                required: Some(required),
                available: Some(available),
            },
            CutProjectError::Fuchsian(f) => f.into(),
            CutProjectError::InvalidRho(_) | CutProjectError::InvalidWindow(..) | CutProjectError::BeyondHorizon { .. } => CliError::Config(e.to_string()),
            other => CliError::Other(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "hypercut", version, about = "Cut-and-project sets from hyperbolic triangle groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the point set (points.csv) and its metadata (meta.json).
    Generate(RunArgs),
    /// Run the consistency diagnostics and write diagnostics.json.
    Check(RunArgs),
    /// Draw the disc, tiling, tube and projected points to render.svg.
    Render(RunArgs),
    /// Write length_spectrum.csv and tile_lengths.csv.
    Spectrum(RunArgs),
}

#[derive(Debug, Clone, Default, Args)]
pub struct RunArgs {
    /// JSON configuration file; flags override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Signature m1,m2,m3.
    #[arg(long, allow_hyphen_values = true)]
    pub sig: Option<String>,
    /// quad or hex.
    #[arg(long)]
    pub domain: Option<String>,
    /// Tube width: a value, a fraction of the inradius (0.9i or 90%i), or auto.
    #[arg(long)]
    pub rho: Option<String>,
    /// seed:<n>, side:<i>, axis:<word> or endpoints:<θ1,θ2>.
    #[arg(long, allow_hyphen_values = true)]
    pub geodesic: Option<String>,
    /// Parameter window a,b.
    #[arg(long, allow_hyphen_values = true)]
    pub window: Option<String>,
    /// Half-width of the band enumerated around the geodesic.
    #[arg(long)]
    pub depth: Option<f64>,
    /// Output directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Word-length bound for the length spectrum.
    #[arg(long)]
    pub max_word: Option<usize>,
    /// SVG layers: all, none, or a list from tiles,domain,orbit,tube,geodesic,feet.
    #[arg(long)]
    pub layers: Option<String>,
}

impl RunArgs {
    pub fn resolve(&self) -> Result<RunConfig, CliError> {
        let file = match &self.config {
            Some(p) => config::FileConfig::load(p)?,
            None => config::FileConfig::default(),
        };
        let flags = config::Overrides {
            signature: self.sig.clone(),
            domain: self.domain.clone(),
            rho: self.rho.clone(),
            geodesic: self.geodesic.clone(),
            window: self.window.clone(),
            depth: self.depth,
            seed: self.seed,
            out: self.out.clone(),
            max_word: self.max_word,
            layers: self.layers.clone(),
        };
        RunConfig::resolve(file, flags)
    }
}

/// Runs one command and returns the process exit code. Human-readable text goes to stderr.
pub fn run(cli: Cli) -> i32 {
    let (name, args) = match &cli.command {
        Command::Generate(a) => ("generate", a),
        Command::Check(a) => ("check", a),
        Command::Render(a) => ("render", a),
        Command::Spectrum(a) => ("spectrum", a),
    };
    let cfg = match args.resolve() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("hypercut {name}: {e}");
            return e.exit_code();
        }
    };
    let result = match cli.command {
        Command::Generate(_) => commands::generate(&cfg),
        Command::Check(_) => commands::check(&cfg),
        Command::Render(_) => commands::render(&cfg),
        Command::Spectrum(_) => commands::spectrum(&cfg),
    };
    match result {
        Ok(summary) => {
            eprintln!("hypercut {name}: {summary}");
            0
        }
        Err(e) => {
            if let CliError::Depth { .. } = &e {
                if let Err(io) = export::write_error(&cfg.out, name, &e) {
                    eprintln!("hypercut {name}: could not write error.json: {io}");
                }
            }
            eprintln!("hypercut {name}: {e}");
            e.exit_code()
        }
    }
}
