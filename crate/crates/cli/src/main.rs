use clap::{Parser, Subcommand, ValueEnum};
use dehnsurg_cli::verify::{self, VerifyOptions, VerifyOutcome};
use dehnsurg_cli::{build_invariants_document, build_repvar_document, render_invariants, render_repvar, Format};
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "dehnsurg",
    about = "Exact gauge-theoretic invariants of 1/k surgeries on (2,q) torus knots",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Pretty,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Pretty => Format::Pretty,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Invariant table of every flat connection on 1/k surgery on the
    /// (2,q) torus knot, with the SU(3) Casson block when available
    Invariants {
        /// Odd q >= 3 of the (2,q) torus knot
        #[arg(long)]
        q: u32,
        /// Surgery coefficient: 1/k surgery (k may be negative; 0 is the
        /// three-sphere)
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
        #[arg(long, value_enum, default_value_t = FormatArg::Pretty)]
        format: FormatArg,
    },
    /// Cross-check the geometric engine against the closed-form formulas,
    /// the Casson tables and the gauge group algebra
    Verify {
        /// Comma-separated odd q values
        #[arg(long = "q-set", value_delimiter = ',', default_values_t = vec![3u32, 5, 7, 9])]
        q_set: Vec<u32>,
        /// Check all surgery coefficients with |k| up to this bound
        #[arg(long = "k-max", default_value_t = 4)]
        k_max: i64,
    },
    /// Describe the SU(2) representation variety of a (p,q) torus knot
    /// complement
    Repvar {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Pretty)]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Invariants { q, k, format } => {
            if q < 3 || q % 2 == 0 {
                eprintln!("error: q must be odd and >= 3, got {}", q);
                eprintln!("usage: dehnsurg invariants --q <odd q >= 3> --k <integer> [--format json|csv|pretty]");
                return ExitCode::from(2);
            }
            match build_invariants_document(q, k) {
                Ok(doc) => {
                    print!("{}", render_invariants(&doc, format.into()));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {}", e);
                    ExitCode::from(2)
                }
            }
        }
        Command::Verify { q_set, k_max } => {
            if k_max < 1 {
                eprintln!("error: --k-max must be at least 1");
                return ExitCode::from(2);
            }
            for &q in &q_set {
                if q < 3 || q % 2 == 0 {
                    eprintln!("error: q must be odd and >= 3, got {}", q);
                    return ExitCode::from(2);
                }
            }
            match verify::run(&VerifyOptions { q_set, k_max }) {
                VerifyOutcome::Pass => {
                    println!("all suites passed");
                    ExitCode::SUCCESS
                }
                VerifyOutcome::Mismatch(m) => {
                    eprintln!("FAIL: {}", m);
                    ExitCode::from(1)
                }
            }
        }
        Command::Repvar { p, q, format } => match build_repvar_document(p, q) {
            Ok(doc) => {
                print!("{}", render_repvar(&doc, format.into()));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {}", e);
                eprintln!("usage: dehnsurg repvar --p <p> --q <q> [--format json|csv|pretty]");
                ExitCode::from(2)
            }
        },
    }
}
