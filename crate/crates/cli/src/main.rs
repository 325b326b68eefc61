//! `isotwist`: run the verification suites, normalize expressions, and
//! print twisted coproducts and antipodes.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or input error.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use isotwist::cli::{parse_expression, parse_presentation, run_suite, CliError, Format, Input, Options, Suite};
use isotwist::sampling::SampleSpec;
use isotwist::symmetry::{CartanData, OpExpr, OpWord};
use isotwist::twist::{Coproduct, HopfStructure};
use num::BigRational;

#[derive(Parser)]
#[command(name = "isotwist", version, about = "Exact checks for Cartan-twisted isospectral deformations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Algebra,
    Hopf,
    Calculus,
    Spectral,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Run a check suite on presentation (.alg) and symmetry (.sym) files.
    ///
    /// Missing inputs default to the bundled T2.alg, C3.alg and A2.sym; a
    /// path naming one of those that does not exist on disk also resolves to
    /// the bundled copy.
    Check {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        files: Vec<String>,
        #[arg(long, default_value_t = 5)]
        max_degree: u32,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        cutoff: i64,
        #[arg(long, default_value = "1/5")]
        theta: String,
        #[arg(long, value_enum, default_value = "human")]
        format: FormatArg,
        /// Record wall time (the report is then not reproducible).
        #[arg(long)]
        timing: bool,
    },
    /// Print an expression in canonical normal-ordered form.
    Normalize { file: String, expression: String },
    /// Print the coproduct of an operator word such as `X1+` or `H1 X2-`.
    Coproduct {
        word: String,
        /// Use the untwisted coproduct.
        #[arg(long)]
        classical: bool,
        #[command(flatten)]
        cartan: CartanArgs,
    },
    /// Print the antipode of an operator word.
    Antipode {
        word: String,
        #[arg(long)]
        classical: bool,
        #[command(flatten)]
        cartan: CartanArgs,
    },
}

#[derive(clap::Args)]
struct CartanArgs {
    /// Cartan matrix rows separated by `;`, e.g. "2 -1; -1 2" (default A2).
    #[arg(long)]
    cartan: Option<String>,
    /// The two grading Cartan generators, 1-based.
    #[arg(long, num_args = 2, default_values_t = [1, 2])]
    pick_h: Vec<usize>,
}

enum Failure {
    Checks,
    Usage(String),
}

impl From<CliError> for Failure {
    fn from(e: CliError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn cartan(args: &CartanArgs) -> Result<CartanData, Failure> {
    let matrix = match &args.cartan {
        None => CartanData::a2().matrix().to_vec(),
        Some(text) => text
            .split(';')
            .map(|row| row.split_whitespace().map(str::parse).collect::<Result<Vec<i64>, _>>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Failure::Usage(format!("--cartan: {e}")))?,
    };
    let (i, j) = (args.pick_h[0], args.pick_h[1]);
    if i == 0 || j == 0 {
        return Err(Failure::Usage("--pick-h indices start at 1".into()));
    }
    CartanData::new(matrix, (i - 1, j - 1)).map_err(|e| Failure::Usage(e.to_string()))
}

fn hopf(classical: bool, args: &CartanArgs) -> Result<HopfStructure, Failure> {
    let kind = if classical { Coproduct::Classical } else { Coproduct::Twisted };
    Ok(HopfStructure::new(cartan(args)?, kind))
}

fn word(text: &str) -> Result<OpExpr, Failure> {
    OpWord::parse(text).map(OpExpr::word).map_err(|e| Failure::Usage(e.to_string()))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Check { suite, files, max_degree, trials, seed, cutoff, theta, format, timing } => {
            let suite = match suite {
                SuiteArg::Algebra => Suite::Algebra,
                SuiteArg::Hopf => Suite::Hopf,
                SuiteArg::Calculus => Suite::Calculus,
                SuiteArg::Spectral => Suite::Spectral,
                SuiteArg::All => Suite::All,
            };
            let theta: BigRational =
                theta.parse().map_err(|_| Failure::Usage(format!("--theta: `{theta}` is not a rational")))?;
            let options = Options { sample: SampleSpec { max_degree, trials, seed }, cutoff, theta, timing };
            let inputs = files.iter().map(|f| Input::load(f)).collect::<Result<Vec<_>, _>>()?;
            let report = run_suite(suite, &inputs, &options)?;
            let format = match format {
                FormatArg::Human => Format::Human,
                FormatArg::Json => Format::Json,
            };
            print!("{}", report.emit(format));
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Normalize { file, expression } => {
            let input = Input::load(&file)?;
            let p = parse_presentation(&input.text)
                .map_err(|error| CliError::Load { file: input.name.clone(), error })?
                .algebra();
            let e = parse_expression(&expression, &p).map_err(|e| Failure::Usage(format!("expression: {e}")))?;
            println!("{e}");
            Ok(())
        }
        Command::Coproduct { word: w, classical, cartan } => {
            let delta = hopf(classical, &cartan)?.coproduct(&word(&w)?).map_err(|e| Failure::Usage(e.to_string()))?;
            println!("{delta}");
            Ok(())
        }
        Command::Antipode { word: w, classical, cartan } => {
            let s = hopf(classical, &cartan)?.antipode(&word(&w)?).map_err(|e| Failure::Usage(e.to_string()))?;
            println!("{s}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
