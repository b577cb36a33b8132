mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use equinoether::RelationKind;

use commands::{CliError, Outcome};

const DEFAULT_SEED: u64 = 2024;

#[derive(Parser, Debug)]
#[command(name = "equinoether", version, about = "Equivariant Groebner bases, orbit counts and section checks")]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized validations.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads for parallel kernels; results do not depend on it.
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    threads: Option<u16>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct BudgetArg {
    /// Maximum number of S-polynomials reduced during completion.
    #[arg(long, env = "EQUINOETHER_BUDGET", value_parser = clap::value_parser!(u64).range(1..))]
    budget: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Orbit counts on tuples and subsets.
    Growth {
        #[arg(long, value_parser = parse_kind)]
        kind: RelationKind,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
    /// Whether a finite partial injection preserves a relation.
    Extend {
        #[arg(long, value_parser = parse_kind)]
        kind: RelationKind,
        /// Pairs such as `1->4,3->7`.
        #[arg(long)]
        map: String,
    },
    /// Equivariant divisibility of two monomials.
    Divides {
        #[arg(long)]
        symmetry: String,
        #[arg(long)]
        rows: Option<u32>,
        divisor: String,
        target: String,
    },
    /// Completes an ideal file to an equivariant Groebner basis.
    Gb {
        #[arg(long)]
        ideal: PathBuf,
        /// Also write the basis file here.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Decides ideal membership.
    Member {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        poly: String,
        /// Exit with status 1 when the polynomial is not a member.
        #[arg(long)]
        assert: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Checks where an ascending chain of ideals stops growing.
    Chain {
        /// Ideal files, one per stage.
        #[arg(long = "stage", conflicts_with = "builtin")]
        stages: Vec<PathBuf>,
        /// A built-in pair chain.
        #[arg(long, value_parser = ["diagonal", "cycle"])]
        builtin: Option<String>,
        /// Number of stages of the built-in chain.
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
        length: u32,
        /// Last stage to compare with its successor; defaults to all stages.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        horizon: Option<u64>,
        /// Exit with status 1 when no stabilization is found.
        #[arg(long)]
        expect_stabilize: bool,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Morphisms between orbits G/H_T and G/H_L.
    Hom {
        #[arg(long, value_parser = parse_kind, default_value = "full")]
        kind: RelationKind,
        /// Points of T, comma separated (may be empty).
        #[arg(long = "t", allow_hyphen_values = true)]
        t: String,
        /// Points of L, comma separated (may be empty).
        #[arg(long = "l")]
        l: String,
        /// Largest symmetric group for the brute-force count.
        #[arg(long, default_value_t = 8)]
        m_max: usize,
        /// List the witness injections.
        #[arg(long)]
        list: bool,
    },
    /// Sections of the structure sheaf or of a free module over G/H_L.
    Sheaf {
        /// Tuple length of the variables, or of the basis with `--module`.
        #[arg(long)]
        d: usize,
        #[arg(long = "l")]
        l: String,
        #[arg(long, default_value_t = 6)]
        m: u32,
        /// Describe the free module on injections instead of the ring.
        #[arg(long)]
        module: bool,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Samples the skew group ring axioms and the support witness.
    SkewCheck {
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..=8))]
        m: u32,
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..=12))]
        support_m: u32,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

fn parse_kind(s: &str) -> Result<RelationKind, String> {
    s.parse().map_err(|e: equinoether::Error| e.to_string())
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n as usize)
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    match &cli.command {
        Command::Growth { kind, n } => commands::growth(*kind, *n as usize),
        Command::Extend { kind, map } => commands::extend(*kind, map),
        Command::Divides { symmetry, rows, divisor, target } => {
            commands::divides(symmetry, *rows, divisor, target)
        }
        Command::Gb { ideal, output, budget } => commands::gb(ideal, output.as_deref(), budget.budget),
        Command::Member { ideal, poly, assert, budget } => {
            commands::member(ideal, poly, *assert, budget.budget)
        }
        Command::Chain { stages, builtin, length, horizon, expect_stabilize, budget } => {
            commands::chain(stages, builtin.as_deref(), *length, *horizon, *expect_stabilize, budget.budget)
        }
        Command::Hom { kind, t, l, m_max, list } => commands::hom(*kind, t, l, *m_max, *list),
        Command::Sheaf { d, l, m, module, samples } => {
            commands::sheaf(*d, l, *m, *module, *samples, cli.seed)
        }
        Command::SkewCheck { m, support_m, samples } => {
            commands::skew_check(*m, *support_m, *samples, cli.seed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&outcome.json).expect("JSON values serialize"));
            } else {
                print!("{}", outcome.text);
            }
            ExitCode::from(if outcome.ok { 0 } else { 1 })
        }
        Err(err) => {
            if cli.json {
                let doc = serde_json::json!({ "error": { "kind": err.kind(), "message": err.to_string() } });
                println!("{}", serde_json::to_string_pretty(&doc).expect("JSON values serialize"));
            }
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
