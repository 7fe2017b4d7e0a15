//! `pcm`: analyze pairwise comparison matrices from the command line.
//!
//! Subcommands: `analyze` (eigenpair, consistency, perturbation structure,
//! efficiency verdict), `generate` (matrix families to stdout) and `digraph`
//! (DOT export of the preference digraph of a matrix and its principal
//! eigenvector).
//!
//! Exit codes: 0 on success, 2 on file/parse/validation errors, 3 on
//! numerical failures.

mod doc;
mod dot;
mod report;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use pcm_core::{
    build_digraph_with_tolerance, build_simple_perturbed, parametric_inefficient,
    perron_eigenpair, PairwiseComparisonMatrix, PerturbationSpec, WeightVector,
};

use doc::{DocFormat, MatrixDocument};
use report::{analyze, AnalyzeOptions};

#[derive(Debug)]
pub enum CliError {
    /// File, parse or matrix validation problem (exit code 2).
    Validation(String),
    /// Numerical failure inside the analysis (exit code 3).
    Numerical(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) | CliError::Numerical(msg) => write!(f, "{msg}"),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "pcm",
    version,
    about = "Pairwise comparison matrix analysis: eigenvectors, consistency, \
             perturbation structure and Pareto efficiency"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a matrix: eigenpair, consistency, perturbation detection and
    /// efficiency verdict
    Analyze {
        /// Matrix file (CSV rows or a JSON document; fractions like 1/3 allowed)
        input: PathBuf,
        /// Input document format
        #[arg(long, value_enum, default_value_t = DocFormat::Csv)]
        format: DocFormat,
        /// Emit the report as one JSON object instead of key-value text
        #[arg(long)]
        json: bool,
        /// Dominance-search trials to run as a cross-check (0 skips the search)
        #[arg(long, default_value_t = 0)]
        trials: usize,
        /// Seed for the dominance search
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Relative tolerance for digraph arc inclusion
        #[arg(long = "eps-arc", default_value_t = pcm_core::efficiency::ARC_TOL)]
        eps_arc: f64,
    },
    /// Generate a matrix and print it as a document
    Generate {
        #[command(subcommand)]
        kind: GenerateKind,
    },
    /// Export the preference digraph of a matrix and its principal
    /// eigenvector in DOT format
    Digraph {
        /// Matrix file (CSV rows or a JSON document)
        input: PathBuf,
        /// Input document format
        #[arg(long, value_enum, default_value_t = DocFormat::Csv)]
        format: DocFormat,
        /// Relative tolerance for digraph arc inclusion
        #[arg(long = "eps-arc", default_value_t = pcm_core::efficiency::ARC_TOL)]
        eps_arc: f64,
    },
}

#[derive(Args)]
struct EmitArgs {
    /// Output document format
    #[arg(long, value_enum, default_value_t = DocFormat::Csv)]
    format: DocFormat,
    /// Label stored in JSON documents
    #[arg(long)]
    label: Option<String>,
}

#[derive(Subcommand)]
enum GenerateKind {
    /// A consistent matrix with one entry (and its reciprocal) scaled by a
    /// factor
    SimplePerturbed {
        /// Matrix order; must equal the number of ratios plus one
        #[arg(long)]
        n: usize,
        /// First-row ratios of the consistent base, comma-separated
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<f64>,
        /// Perturbation factor (positive, different from 1)
        #[arg(long)]
        delta: f64,
        /// Perturbed entry as a one-based "i,j" pair (default 1,2)
        #[arg(long, value_delimiter = ',')]
        position: Option<Vec<usize>>,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// The parametric family whose principal eigenvector is inefficient
    ParametricPq {
        /// Matrix order (at least 4)
        #[arg(long)]
        n: usize,
        /// First-row value
        #[arg(long)]
        p: f64,
        /// Cycle value through the remaining block (different from 1)
        #[arg(long)]
        q: f64,
        #[command(flatten)]
        emit: EmitArgs,
    },
    /// The consistent matrix generated by a weight vector
    Consistent {
        /// Weights, comma-separated
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<f64>,
        #[command(flatten)]
        emit: EmitArgs,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Numerical(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze {
            input,
            format,
            json,
            trials,
            seed,
            eps_arc,
        } => {
            let (matrix, label) = load_matrix(&input, format)?;
            let options = AnalyzeOptions {
                arc_tolerance: eps_arc,
                trials,
                seed,
            };
            let report = analyze(&matrix, label, &options)?;
            print!(
                "{}",
                if json {
                    report.render_json()
                } else {
                    report.render_text()
                }
            );
            Ok(())
        }
        Command::Generate { kind } => {
            let (matrix, emit) = generate(kind)?;
            let document = MatrixDocument::from_matrix(&matrix, emit.label.clone());
            print!("{}", document.render(emit.format));
            Ok(())
        }
        Command::Digraph {
            input,
            format,
            eps_arc,
        } => {
            let (matrix, _) = load_matrix(&input, format)?;
            let pair =
                perron_eigenpair(&matrix).map_err(|e| CliError::Numerical(e.to_string()))?;
            let digraph = build_digraph_with_tolerance(&matrix, &pair.eigenvector, eps_arc)
                .map_err(|e| CliError::Numerical(e.to_string()))?;
            print!("{}", dot::render(&digraph));
            Ok(())
        }
    }
}

fn load_matrix(
    path: &Path,
    format: DocFormat,
) -> Result<(PairwiseComparisonMatrix, Option<String>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read {}: {e}", path.display())))?;
    let document = MatrixDocument::parse(&text, format)?;
    let matrix = document.to_matrix()?;
    Ok((matrix, document.label))
}

fn generate(kind: GenerateKind) -> Result<(PairwiseComparisonMatrix, EmitArgs), CliError> {
    match kind {
        GenerateKind::SimplePerturbed {
            n,
            x,
            delta,
            position,
            emit,
        } => {
            if n != x.len() + 1 {
                return Err(CliError::Validation(format!(
                    "--n {n} does not match {} ratios (need n - 1)",
                    x.len()
                )));
            }
            let position = match position {
                None => (0, 1),
                Some(pair) => {
                    if pair.len() != 2 {
                        return Err(CliError::Validation(
                            "--position needs exactly two indices, like 1,2".into(),
                        ));
                    }
                    let (i, j) = (pair[0], pair[1]);
                    if i == 0 || j == 0 || i > n || j > n {
                        return Err(CliError::Validation(format!(
                            "--position {i},{j} is out of range for order {n} (one-based)"
                        )));
                    }
                    (i - 1, j - 1)
                }
            };
            let spec = PerturbationSpec::with_position(x, delta, position)
                .map_err(|e| CliError::Validation(e.to_string()))?;
            Ok((build_simple_perturbed(&spec), emit))
        }
        GenerateKind::ParametricPq { n, p, q, emit } => {
            let matrix =
                parametric_inefficient(n, p, q).map_err(|e| CliError::Validation(e.to_string()))?;
            Ok((matrix, emit))
        }
        GenerateKind::Consistent { weights, emit } => {
            let w =
                WeightVector::new(&weights).map_err(|e| CliError::Validation(e.to_string()))?;
            Ok((PairwiseComparisonMatrix::from_weights(&w), emit))
        }
    }
}
