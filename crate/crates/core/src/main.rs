use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use distinct_gf::output::{self, ConstantRequest, Precision, DEFAULT_DIGITS};
use distinct_gf::verify::{self, Depth};

#[derive(Parser)]
#[command(
    name = "distinct-gf",
    version,
    about = "Coefficients of prod (1 + x^k/k) and the constant they approach"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct DigitsArg {
    /// Decimals for real-valued output.
    #[arg(long, default_value_t = DEFAULT_DIGITS)]
    digits: usize,
}

#[derive(Subcommand)]
enum Command {
    /// CSV of k, r(k).
    R {
        #[arg(long)]
        max_k: usize,
        /// Exact rationals p/q (default).
        #[arg(long, conflicts_with = "float")]
        exact: bool,
        /// Double-precision values.
        #[arg(long)]
        float: bool,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// CSV of k, q(k): partitions of k into distinct parts.
    Q {
        #[arg(long)]
        max_k: usize,
    },
    /// Reproduce table 1 (Delta_m, C_m), 2 (q_n(k)) or 3 (r_n(k)).
    Tables {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=3))]
        which: u8,
    },
    /// Report Delta_m, C_m and C with an error bound.
    Constant {
        /// Use exactly this many series terms.
        #[arg(long, conflicts_with = "tol")]
        terms: Option<u32>,
        /// Use the fewest terms meeting this error bound (default 1e-10).
        #[arg(long)]
        tol: Option<f64>,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// CSV of k, r(k), C for plotting.
    Figure {
        #[arg(long)]
        max_k: usize,
        #[command(flatten)]
        digits: DigitsArg,
    },
    /// Run the self-check suite; exits nonzero on any failure.
    Verify {
        #[arg(long, value_enum, default_value_t = DepthArg::Quick)]
        depth: DepthArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum DepthArg {
    Quick,
    Full,
}

fn emit(text: &str) -> ExitCode {
    let mut stdout = std::io::stdout().lock();
    match stdout
        .write_all(text.as_bytes())
        .and_then(|_| stdout.flush())
    {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::R {
            max_k,
            float,
            digits,
            ..
        } => {
            let precision = if float {
                Precision::Float {
                    digits: digits.digits,
                }
            } else {
                Precision::Exact
            };
            output::r_csv(max_k, precision)
        }
        Command::Q { max_k } => output::q_csv(max_k),
        Command::Tables { which } => output::table(which),
        Command::Constant { terms, tol, digits } => {
            let request = match terms {
                Some(m) => ConstantRequest::Terms(m),
                None => ConstantRequest::Tol(tol.unwrap_or(1e-10)),
            };
            output::constant_report(request, digits.digits)
        }
        Command::Figure { max_k, digits } => output::figure_csv(max_k, digits.digits),
        Command::Verify { depth } => {
            let depth = match depth {
                DepthArg::Quick => Depth::Quick,
                DepthArg::Full => Depth::Full,
            };
            let report = verify::run(depth);
            let code = emit(&format!("{report}\n"));
            if !report.all_passed() {
                eprintln!("verification failed");
                return ExitCode::FAILURE;
            }
            return code;
        }
    };
    match result {
        Ok(text) => emit(&text),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
