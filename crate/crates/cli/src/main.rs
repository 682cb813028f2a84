//! `hlzeta`: evaluate multiple zeta-functions and their desingularizations,
//! print identities, special values, p-adic L-values and verification
//! suites.
//!
//! Exit status: 0 on success, 1 when a verification check fails, 2 on a
//! parameter error, 3 on a pole or region error, 4 on an accuracy failure,
//! 5 on an internal consistency failure.

mod commands;
mod input;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hlzeta::Error;

use input::{eval_config, load_data, parse_grid, parse_point, parse_u32_list};
use output::{Format, Report};
use verify::Suite;

#[derive(Parser)]
#[command(name = "hlzeta", version, about = "Desingularized multiple zeta-functions of Hurwitz-Lerch type")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    /// Absolute target accuracy (default from HLZETA_PRECISION, else 1e-12).
    #[arg(long, global = true)]
    tol: Option<f64>,
    /// Disable data parallelism.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the zeta-function (or its desingularization) at a point.
    Eval {
        /// Builtin (ez2, ez3, mt2, a2) or path to HLData JSON.
        #[arg(long)]
        data: String,
        /// Comma-separated point, complex entries as `re+imi`.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        #[arg(long)]
        des: bool,
        /// Mordell-Tornheim c-matrix parameter.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Print the desingularization identity (JSON, text and LaTeX).
    DesingIdentity {
        #[arg(long)]
        data: String,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
    },
    /// Exact value of the desingularized zeta at (-lambda_1, ..., -lambda_d).
    Special {
        #[arg(long)]
        data: String,
        #[arg(long)]
        lambda: String,
    },
    /// p-adic multiple L-value at non-positive integers.
    Padic {
        /// Depth; a single --n entry is repeated r times.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        n: String,
        #[arg(long)]
        c: u64,
        #[arg(long)]
        p: u64,
        /// Compare with the Kubota-Leopoldt closed form (depth one).
        #[arg(long)]
        kl_check: bool,
    },
    /// Singular hyperplanes of the Euler-Zagier-Lerch zeta for given twists.
    Singularities {
        /// Comma-separated twists: 1, -1, i, -i, e(k/n) or complex.
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long, default_value_t = 5)]
        lmax: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        /// Extra points for the trivial-relations suite.
        #[arg(long, allow_hyphen_values = true)]
        at: Vec<String>,
    },
    /// Values on an integer grid, one row per cell with its method tag.
    Table {
        #[arg(long)]
        data: String,
        /// Inclusive ranges per coordinate, e.g. "-3..3,-3..3".
        #[arg(long, allow_hyphen_values = true)]
        grid: String,
        #[arg(long)]
        des: bool,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parameter(_) | Error::Unsupported(_) | Error::UseZetaPath => 2,
        Error::Pole(_) | Error::Region(_) => 3,
        Error::Accuracy { .. } => 4,
        Error::Consistency(_) => 5,
    }
}

fn run(cli: Cli) -> hlzeta::Result<(Report, bool)> {
    let cfg = eval_config(cli.tol, cli.sequential)?;
    let done = |r: Report| Ok((r, true));
    match cli.command {
        Command::Eval { data, at, des, a, b } => {
            let loaded = load_data(&data)?;
            let s = parse_point(&at, loaded.data.d())?;
            done(commands::eval(&loaded, &s, des, &cfg, a.as_deref(), b.as_deref())?)
        }
        Command::DesingIdentity { data, a, b } => {
            done(commands::identity(&load_data(&data)?, a.as_deref(), b.as_deref())?)
        }
        Command::Special { data, lambda } => done(commands::special(&load_data(&data)?, parse_u32_list(&lambda)?)?),
        Command::Padic { r, n, c, p, kl_check } => commands::padic(r, parse_u32_list(&n)?, c, p, kl_check, &cfg),
        Command::Singularities { xi, lmax } => done(commands::singularities(&xi, lmax)?),
        Command::Verify { suite, at } => {
            let extra = at.iter().map(|s| parse_point(s, 3)).collect::<hlzeta::Result<Vec<_>>>()?;
            Ok(verify::run(suite, &cfg, &extra))
        }
        Command::Table { data, grid, des } => done(commands::table(&load_data(&data)?, parse_grid(&grid)?, des, &cfg)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli) {
        Ok((report, ok)) => {
            // A closed pipe (e.g. `| head`) is not an error.
            let _ = writeln!(std::io::stdout().lock(), "{}", report.render(format).trim_end());
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("hlzeta: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
