use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use k3fib_core::admissibility::{emit_report, run_pipeline, OutputFormat, PipelineConfig, DEFAULT_TRUNCATION};
use k3fib_core::exact_ring::{parse_rational, Rational};

#[derive(Parser)]
#[command(name = "k3fib", version, about = "Build and check the relative canonical algebra of a 5-tuple")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run every construction step and check on a 5-tuple document.
    Check {
        input: PathBuf,
        /// Highest degree for Hilbert function and rank table checks.
        #[arg(long, default_value_t = 6)]
        max_degree: u32,
        #[arg(long, value_delimiter = ',', default_value = "2,3,4,5")]
        torsion_degrees: Vec<u32>,
        /// Base points for fibre checks; points of tau are added.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "-1,1/2,2", value_parser = rational)]
        samples: Vec<Rational>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true)]
        inject_torsion_fault: bool,
    },
}

fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s.trim()).ok_or_else(|| format!("not a rational number: {s}"))
}

fn truncation() -> Result<u32, String> {
    match std::env::var("K3FIB_TRUNCATION") {
        Ok(v) => v.trim().parse().ok().filter(|&d| d > 0).ok_or_else(|| format!("K3FIB_TRUNCATION: bad value {v:?}")),
        Err(_) => Ok(DEFAULT_TRUNCATION),
    }
}

fn main() -> ExitCode {
    let Command::Check { input, max_degree, torsion_degrees, samples, format, out, inject_torsion_fault } =
        Cli::parse().command;
    let truncation = match truncation() {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let format = match format {
        Format::Text => OutputFormat::Text,
        Format::Json => OutputFormat::Json,
    };
    let config = PipelineConfig {
        max_check_degree: max_degree,
        torsion_degrees,
        sample_points: samples,
        format,
        truncation,
        inject_torsion_fault,
        ..PipelineConfig::new(input)
    };
    let results = match run_pipeline(&config) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let doc = emit_report(&results, format);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(&path, &doc) {
                eprintln!("error: write: {}: {e}", path.display());
                return ExitCode::from(4);
            }
        }
        None => print!("{doc}"),
    }
    for f in &results.invariant_failures {
        eprintln!("invariant violated: {f}");
    }
    ExitCode::from(results.exit_code() as u8)
}
