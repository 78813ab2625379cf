use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use zollstock::base_algebra::BaseOperad;
use zollstock::basis::{evaluate_expansion, expand, format_expansion, BasisKind};
use zollstock::verify::{run_suite, Options};
use zollstock::{Result, RT0Element};

#[derive(Parser)]
#[command(name = "zollstock", version, about = "Exact arithmetic in R[t0] and verification of its identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Normalize an element of R[t0].
    Eval {
        expr: String,
        /// Also list the components (n, polynomial) with t0 kept as a variable.
        #[arg(long)]
        components: bool,
    },
    /// The product x · y.
    Dot { x: String, y: String },
    /// The product x ⊙ y.
    Odot { x: String, y: String },
    /// The involution ι(x).
    Iota { expr: String },
    /// Expand x in a ⊙-word basis.
    Basis {
        expr: String,
        #[arg(long, value_enum, default_value = "structure")]
        which: Which,
    },
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Structure,
    IotaBasis,
}

#[derive(Args)]
struct VerifyArgs {
    /// ring, iota, odot, dim, identity, structure, super, vowa, important, operad-axioms or all
    suite: String,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long)]
    max_arity: Option<usize>,
    #[arg(long)]
    dim: Option<usize>,
    /// Base operad configuration file.
    #[arg(long)]
    base: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse(s: &str) -> Result<RT0Element> {
    s.parse()
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Eval { expr, components } => {
            let x = parse(&expr)?;
            println!("{x}");
            if components {
                for (n, p) in x.components() {
                    println!("({n}, {p})");
                }
            }
        }
        Command::Dot { x, y } => println!("{}", parse(&x)?.dot_mul(&parse(&y)?)),
        Command::Odot { x, y } => println!("{}", parse(&x)?.try_odot(&parse(&y)?)?),
        Command::Iota { expr } => println!("{}", parse(&expr)?.iota()),
        Command::Basis { expr, which } => {
            let kind = match which {
                Which::Structure => BasisKind::Structure,
                Which::IotaBasis => BasisKind::Iota,
            };
            let x = parse(&expr)?;
            let terms = expand(&x, kind)?;
            if evaluate_expansion(&terms, kind) != x {
                return Err(zollstock::Error::Internal("expansion does not re-evaluate to the input".into()));
            }
            println!("{}", format_expansion(&terms, kind));
        }
        Command::Verify(a) => {
            let base = a.base.as_deref().map(BaseOperad::load_config).transpose()?;
            let opts = Options {
                max_degree: a.max_degree,
                max_n: a.max_n,
                max_arity: a.max_arity,
                dim: a.dim,
                base,
                seed: a.seed,
            };
            let report = run_suite(&a.suite, &opts)?;
            if a.json {
                println!("{}", report.to_json());
            } else {
                println!("{report}");
            }
            return Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) });
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
