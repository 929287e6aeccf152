//! prismforge: exact delta-ring calculus on polynomial rings, prism
//! hypothesis checking, and symbolic perfectoid-tower reports.
//!
//! Exit codes: 0 success/holds, 1 a hypothesis or axiom fails (valid run),
//! 2 input error, 3 resource bound exceeded.

mod commands;
mod report;
mod specfile;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use prismforge_core::groebner::EngineLimits;
use prismforge_core::tower::RootsKind;
use prismforge_core::{Error as CoreError, MonomialOrder};

use report::OutputFormat;
use specfile::{digest, LoadedSpec, RingSpecFile};

#[derive(Parser)]
#[command(name = "prismforge", version, about = "delta-rings, prisms, and perfectoid towers, symbolically")]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,

    /// Cap on Buchberger pairs (env PRISMFORGE_MAX_PAIRS overrides the default)
    #[arg(long, global = true)]
    max_pairs: Option<usize>,

    /// Cap on total degree of basis elements
    #[arg(long, global = true)]
    max_degree: Option<u64>,

    /// Monomial order for printed bases
    #[arg(long, global = true, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Lex,
    Grevlex,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    P,
    Unity,
}

#[derive(Subcommand)]
enum Command {
    /// Apply delta and phi to a polynomial
    Delta {
        file: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Compute the delta-stabilization of the spec ideal
    Stabilize {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_iter: u32,
    },
    /// Check the perfectoid-tower hypotheses of a prism spec
    CheckPrism {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        levels: u32,
    },
    /// Emit tower levels with optional tilt, pillar, and axiom reports
    Tower {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        levels: u32,
        #[arg(long)]
        fractional: bool,
        #[arg(long)]
        tilt: bool,
        #[arg(long)]
        pillars: bool,
        #[arg(long)]
        axioms: bool,
        /// Emit even when the hypotheses fail (report is tagged)
        #[arg(long)]
        force: bool,
    },
    /// Toric ideal of an affine semigroup (inline matrix or spec file)
    Toric {
        /// Generator matrix, e.g. `[[2],[3]]`
        #[arg(long, conflicts_with = "file")]
        matrix: Option<String>,
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
    /// Adjoin p-power roots of p or of unity to the spec ring
    Roots {
        file: PathBuf,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, default_value_t = 2)]
        levels: u32,
        #[arg(long)]
        fractional: bool,
    },
    /// Validate a spec file (parsing, lift, delta-stability)
    Validate { file: PathBuf },
}

fn limits_from(cli: &Cli) -> EngineLimits {
    let mut limits = EngineLimits::default();
    if let Ok(v) = std::env::var("PRISMFORGE_MAX_PAIRS") {
        if let Ok(n) = v.parse() {
            limits.max_pairs = n;
        }
    }
    if let Some(n) = cli.max_pairs {
        limits.max_pairs = n;
    }
    if let Some(d) = cli.max_degree {
        limits.max_degree = d;
    }
    limits
}

fn read_spec(path: &PathBuf) -> Result<(LoadedSpec, String), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file = RingSpecFile::parse(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    let spec = file
        .load()
        .map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((spec, digest(text.as_bytes())))
}

fn run(cli: &Cli) -> Result<report::Report, RunError> {
    let limits = limits_from(cli);
    let order = match cli.order {
        OrderArg::Lex => MonomialOrder::Lex,
        OrderArg::Grevlex => MonomialOrder::GrevLex,
    };
    match &cli.command {
        Command::Delta { file, poly } => {
            let (spec, dg) = read_spec(file).map_err(RunError::Input)?;
            commands::cmd_delta(&spec, &dg, poly).map_err(RunError::Core)
        }
        Command::Stabilize { file, max_iter } => {
            let (spec, dg) = read_spec(file).map_err(RunError::Input)?;
            commands::cmd_stabilize(&spec, &dg, *max_iter, &limits, order).map_err(RunError::Core)
        }
        Command::CheckPrism { file, levels } => {
            let (spec, dg) = read_spec(file).map_err(RunError::Input)?;
            commands::cmd_check_prism(&spec, &dg, *levels, &limits).map_err(RunError::Core)
        }
        Command::Tower {
            file,
            levels,
            fractional,
            tilt,
            pillars,
            axioms,
            force,
        } => {
            let (spec, dg) = read_spec(file).map_err(RunError::Input)?;
            commands::cmd_tower(
                &spec, &dg, *levels, *fractional, *tilt, *pillars, *axioms, *force, &limits,
            )
            .map_err(RunError::Core)
        }
        Command::Toric { matrix, file, p } => {
            let (sg, dg, prime) = match (matrix, file) {
                (Some(m), None) => {
                    let rows: Vec<Vec<u64>> = serde_json::from_str(m)
                        .map_err(|e| RunError::Input(format!("bad matrix: {e}")))?;
                    let sg = prismforge_core::prism::SemigroupSpec::new(rows)
                        .map_err(RunError::Core)?;
                    (sg, digest(m.as_bytes()), *p)
                }
                (None, Some(path)) => {
                    let (spec, dg) = read_spec(path).map_err(RunError::Input)?;
                    let sg = spec.semigroup.clone().ok_or_else(|| {
                        RunError::Input(format!(
                            "{} has no semigroup block",
                            path.display()
                        ))
                    })?;
                    (sg, dg, spec.prime)
                }
                _ => {
                    return Err(RunError::Input(
                        "toric needs either --matrix or a spec file".into(),
                    ))
                }
            };
            commands::cmd_toric(&sg, &dg, prime, &limits).map_err(RunError::Core)
        }
        Command::Roots {
            file,
            kind,
            levels,
            fractional,
        } => {
            let (spec, dg) = read_spec(file).map_err(RunError::Input)?;
            let kind = match kind {
                KindArg::P => RootsKind::RootsOfP,
                KindArg::Unity => RootsKind::RootsOfUnity,
            };
            commands::cmd_roots(&spec, &dg, kind, *levels, *fractional, &limits)
                .map_err(RunError::Core)
        }
        Command::Validate { file } => {
            let (spec, dg) = read_spec(file).map_err(RunError::Input)?;
            commands::cmd_validate(&spec, &dg, &limits).map_err(RunError::Core)
        }
    }
}

enum RunError {
    Input(String),
    Core(CoreError),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = match cli.format {
        FormatArg::Text => OutputFormat::Text,
        FormatArg::Json => OutputFormat::Json,
    };
    match run(&cli) {
        Ok(report) => {
            print!("{}", report.render(format));
            ExitCode::from(report.exit_code as u8)
        }
        Err(RunError::Input(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
        Err(RunError::Core(e)) => {
            let code = if e.is_resource_bound() || matches!(e, CoreError::Inconclusive { .. }) {
                3
            } else {
                2
            };
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
