//! `descartes`: sign patterns, admissible pairs and exact realizations.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use descartes_core::polycore::{parse_rational, Rational};
use descartes_core::signs::SignPattern;
use num_traits::Signed;

mod commands;

use commands::{CliError, Outcome};

#[derive(Parser, Debug)]
#[command(name = "descartes", version, about = "Sign patterns, admissible pairs and exact realizations under Descartes' rule of signs")]
struct Cli {
    #[command(flatten)]
    opts: Options,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Options {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Candidates the randomized search may score.
    #[arg(long, global = true, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub budget: u64,
    /// Searched root magnitudes stay in [1/radius, radius].
    #[arg(long, global = true, default_value = "1024", value_parser = positive_rational)]
    pub radius: Rational,
    /// Sample points for exact identity checks.
    #[arg(long, global = true, default_value_t = 200, value_parser = clap::value_parser!(u64).range(1..))]
    pub points: u64,
    /// Worker threads for catalogs and checks.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Leave out the creation time so output is byte-identical across runs.
    #[arg(long, global = true)]
    pub deterministic: bool,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Descartes pair and all admissible pairs of a pattern.
    Pairs {
        #[arg(allow_hyphen_values = true, value_parser = pattern)]
        pattern: SignPattern,
    },
    /// Every member of a couple's orbit under reversal and mirroring.
    Orbit {
        #[arg(allow_hyphen_values = true, value_parser = pattern)]
        pattern: SignPattern,
        pos: usize,
        neg: usize,
    },
    /// Constructs and certifies a polynomial realizing a couple.
    Realize {
        #[arg(allow_hyphen_values = true, value_parser = pattern)]
        pattern: SignPattern,
        pos: usize,
        neg: usize,
    },
    /// Checks whether given coefficients realize a couple.
    Verify {
        #[arg(allow_hyphen_values = true, value_parser = pattern)]
        pattern: SignPattern,
        pos: usize,
        neg: usize,
        /// Coefficients, leading first, separated by commas or spaces.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "file", conflicts_with = "file")]
        coeffs: Option<String>,
        /// File with coefficients as text, a JSON array, or `realize` JSON output.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Every couple of one degree with its realizability status.
    Catalog {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=9))]
        degree: u8,
    },
    /// Runs one named check, or all of them, and writes a JSON manifest.
    PaperVerify {
        #[arg(default_value = "all")]
        check: String,
    },
    /// Signs of H*, a5*, a4* on a (t, w) grid, as CSV.
    FigureData {
        #[arg(long, default_value = "-5", allow_hyphen_values = true, value_parser = rational)]
        t_min: Rational,
        #[arg(long, default_value = "5", allow_hyphen_values = true, value_parser = rational)]
        t_max: Rational,
        #[arg(long, default_value = "-5", allow_hyphen_values = true, value_parser = rational)]
        w_min: Rational,
        #[arg(long, default_value = "5", allow_hyphen_values = true, value_parser = rational)]
        w_max: Rational,
        /// Grid nodes along t.
        #[arg(long, default_value_t = 101)]
        nt: usize,
        /// Grid nodes along w.
        #[arg(long, default_value_t = 101)]
        nw: usize,
    },
}

fn pattern(text: &str) -> Result<SignPattern, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

fn positive_rational(text: &str) -> Result<Rational, String> {
    let q = rational(text)?;
    if q.is_positive() {
        Ok(q)
    } else {
        Err("must be positive".to_string())
    }
}

fn run(cli: Cli) -> Result<Outcome, CliError> {
    let opts = &cli.opts;
    if let Some(jobs) = opts.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs as usize)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Pairs { pattern } => Ok(commands::pairs(&pattern)),
        Command::Orbit { pattern, pos, neg } => commands::orbit(pattern, pos, neg),
        Command::Realize { pattern, pos, neg } => commands::realize(pattern, pos, neg, opts),
        Command::Verify { pattern, pos, neg, coeffs, file } => {
            let text = match (coeffs, file) {
                (Some(text), _) => text,
                (None, Some(path)) => std::fs::read_to_string(&path).map_err(|e| CliError::Io(path.display().to_string(), e))?,
                (None, None) => return Err(CliError::Usage("give --coeffs or --file".to_string())),
            };
            commands::verify(pattern, pos, neg, &text)
        }
        Command::Catalog { degree } => Ok(commands::catalog(degree as usize, opts)),
        Command::PaperVerify { check } => commands::paper_verify(&check, opts),
        Command::FigureData { t_min, t_max, w_min, w_max, nt, nw } => commands::figure_data(t_min, t_max, w_min, w_max, nt, nw),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, format) = (cli.opts.out.clone(), cli.opts.format);
    match run(cli).and_then(|outcome| outcome.emit(format, out.as_deref())) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}
