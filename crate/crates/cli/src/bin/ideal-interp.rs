use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ideal_interp::commands::{run_command, Command, LawCheckOptions};
use ideal_interp::error::{CliError, Result};
use ideal_interp::limits::max_degree_from_env;
use ideal_interp::problem::{load_problem_capped, parse_order};

#[derive(Parser)]
#[command(
    name = "ideal-interp",
    version,
    about = "Exact ideal interpolation: Gröbner bases, error formulas and certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// Problem file (JSON).
    #[arg(short = 'i', long = "input")]
    input: PathBuf,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Reduced Gröbner basis of the kernel.
    Gbasis {
        #[command(flatten)]
        common: Common,
        /// lex1 … lexd or grlex.
        #[arg(long)]
        order: Option<String>,
    },
    /// Standard monomials of the kernel.
    Escalier {
        #[command(flatten)]
        common: Common,
        #[arg(long, conflicts_with = "all_lex")]
        order: Option<String>,
        /// Escaliers under every rotated lex order.
        #[arg(long)]
        all_lex: bool,
    },
    /// Decide whether the kernel basis is order independent.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Project test functions.
    Interpolate {
        #[command(flatten)]
        common: Common,
        /// Expression to project; defaults to the problem's test functions.
        #[arg(short = 'f', long = "function")]
        expr: Option<String>,
    },
    /// Write f − Pf as a combination of the kernel generators.
    Decompose {
        #[command(flatten)]
        common: Common,
        #[arg(short = 'f', long = "function")]
        expr: Option<String>,
    },
    /// Check the dual pairing and kernel containment.
    Certify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        degree_bound: Option<u32>,
    },
    /// Degree-reduction and minimal-degree report.
    MinimalDegree {
        #[command(flatten)]
        common: Common,
    },
    /// Randomized check of the ideal projector laws.
    CheckLaws {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = LawCheckOptions::default().samples)]
        samples: usize,
        #[arg(long, default_value_t = LawCheckOptions::default().max_degree)]
        max_degree: u32,
        #[arg(long, default_value_t = LawCheckOptions::default().seed)]
        seed: u64,
    },
}

impl Cmd {
    fn common(&self) -> &Common {
        match self {
            Cmd::Gbasis { common, .. }
            | Cmd::Escalier { common, .. }
            | Cmd::Classify { common }
            | Cmd::Interpolate { common, .. }
            | Cmd::Decompose { common, .. }
            | Cmd::Certify { common, .. }
            | Cmd::MinimalDegree { common }
            | Cmd::CheckLaws { common, .. } => common,
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    let cap = max_degree_from_env()?;
    let common = cli.command.common();
    let spec = load_problem_capped(&common.input, cap)?;
    let order = |name: &Option<String>| name.as_deref().map(|o| parse_order(o, spec.dim())).transpose();
    let command = match &cli.command {
        Cmd::Gbasis { order: o, .. } => Command::Gbasis { order: order(o)? },
        Cmd::Escalier { order: o, all_lex, .. } => Command::Escalier {
            order: order(o)?,
            all_lex: *all_lex,
        },
        Cmd::Classify { .. } => Command::Classify,
        Cmd::Interpolate { expr, .. } => Command::Interpolate { expr: expr.clone() },
        Cmd::Decompose { expr, .. } => Command::Decompose { expr: expr.clone() },
        Cmd::Certify { degree_bound, .. } => Command::Certify {
            degree_bound: *degree_bound,
        },
        Cmd::MinimalDegree { .. } => Command::MinimalDegree,
        Cmd::CheckLaws {
            samples,
            max_degree,
            seed,
            ..
        } => Command::CheckLaws(LawCheckOptions {
            samples: *samples,
            max_degree: *max_degree,
            seed: *seed,
        }),
    };
    let doc = run_command(&command, &spec, cap)?;
    if common.json {
        println!("{}", doc.json);
    } else {
        print!("{}", doc.text);
    }
    if let Some(d) = &doc.diagnostic {
        eprintln!("{d}");
    }
    Ok(doc.exit_code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            report(&e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn report(e: &CliError) {
    eprintln!("{}: {e}", e.kind());
}
