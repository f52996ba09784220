use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use slopestab::golden::{Suite, TAGS};
use slopestab::report::{profile_csv, render, scan, timestamp_footer};
use slopestab::scenario::{analyse, parse_grid, shipped, Scenario, SHIPPED};

/// Exact slope stability of polarised varieties.
#[derive(Parser)]
#[command(name = "slopestab", version)]
struct Cli {
    /// Append a timestamp after the report body.
    #[arg(long, global = true)]
    footer_timestamps: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyse a scenario file and print the report.
    Run {
        /// Scenario path, or the name of a shipped scenario.
        scenario: PathBuf,
    },
    /// Run the built-in worked examples.
    VerifyPaper {
        /// Only run checks with this tag.
        #[arg(long)]
        only: Option<String>,
    },
    /// Print mu_c(I_Z), mu_c(O_Z), mu(X), N(c) and F1 as CSV.
    Csv {
        scenario: PathBuf,
        /// Comma-separated values of c, e.g. "1/4,1/2,1". Default: 8 points in (0, eps].
        #[arg(long)]
        grid: Option<String>,
    },
    /// Rank torus-invariant subschemes of a toric scenario by Futaki invariant.
    Scan {
        scenario: PathBuf,
        /// Largest multiplicity to try.
        #[arg(long, default_value_t = 2)]
        budget: u32,
        /// Number of c samples in (0, eps] per candidate.
        #[arg(long, default_value_t = 8)]
        grid: u32,
    },
}

fn load(path: &Path) -> Result<Scenario> {
    if !path.exists() {
        if let Some(text) = path.to_str().and_then(shipped) {
            return Ok(Scenario::parse(text)?);
        }
        let names: Vec<&str> = SHIPPED.iter().map(|(n, _)| *n).collect();
        bail!("{} not found (shipped scenarios: {})", path.display(), names.join(", "));
    }
    Scenario::load(path).with_context(|| format!("loading {}", path.display()))
}

fn emit(body: &str, footer: bool) {
    print!("{body}");
    if footer {
        print!("{}", timestamp_footer());
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Run { scenario } => {
            let a = analyse(&load(&scenario)?)?;
            emit(&render(&a), cli.footer_timestamps);
            Ok(a.exit_code())
        }
        Command::VerifyPaper { only } => {
            if let Some(t) = &only {
                if !TAGS.contains(&t.as_str()) {
                    bail!("unknown tag {t:?} (tags: {})", TAGS.join(", "));
                }
            }
            let suite = Suite::run(only.as_deref());
            emit(&suite.render(), cli.footer_timestamps);
            Ok(suite.exit_code())
        }
        Command::Csv { scenario, grid } => {
            let scn = load(&scenario)?;
            let grid = grid.as_deref().map(parse_grid).transpose()?;
            print!("{}", profile_csv(&scn, grid.as_deref())?);
            Ok(0)
        }
        Command::Scan { scenario, budget, grid } => {
            if grid == 0 {
                bail!("--grid must be at least 1");
            }
            let s = scan(&load(&scenario)?, budget, grid)?;
            emit(&s.render(), cli.footer_timestamps);
            Ok(s.exit_code())
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
