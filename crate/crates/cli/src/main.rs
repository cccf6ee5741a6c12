use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use fgtqft::FiniteGroup;
use fgtqft_cli::{
    cmd_classes, cmd_compose, cmd_example, cmd_homs, cmd_tqft, cmd_verify, parse_group, Format, JobConfig, Output,
};

/// Finite-group TQFT on cospans of finitely presented groupoids.
#[derive(Parser, Debug)]
#[command(name = "fgtqft", version)]
struct Cli {
    /// Target group: shorthand (Z3, S3, D4), inline JSON descriptor, or descriptor file.
    #[arg(long, global = true)]
    group: Option<String>,

    /// Maximum number of candidate assignments (|G|^#generators).
    #[arg(long, global = true, default_value_t = fgtqft::homs::DEFAULT_BUDGET,
          value_parser = clap::value_parser!(u64).range(1..))]
    budget: u64,

    #[arg(long, global = true, default_value = "json")]
    format: Format,

    /// Seed for randomized verification suites.
    #[arg(long, global = true, default_value_t = fgtqft::verify::DEFAULT_SEED)]
    seed: u64,

    /// Worker threads for enumeration.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    parallel: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List all homomorphisms from a presentation into the group.
    Homs {
        presentation: PathBuf,
        /// Report only the number of homomorphisms.
        #[arg(long)]
        count: bool,
    },
    /// Homomorphisms up to natural isomorphism, with class sizes.
    Classes { presentation: PathBuf },
    /// Evaluate the functor on a cospan.
    Tqft {
        cospan: PathBuf,
        /// Also emit the raw counting matrix.
        #[arg(long)]
        raw: bool,
        /// Also emit the normalized counting matrix.
        #[arg(long)]
        normalized: bool,
    },
    /// Compose cospans left to right; with --group, check the matrix product.
    Compose {
        #[arg(required = true)]
        cospans: Vec<PathBuf>,
    },
    /// Run an invariant suite.
    Verify {
        suite: String,
        /// Number of random trials for randomized suites.
        #[arg(long)]
        trials: Option<usize>,
    },
    /// Emit the cospan JSON of a builder example.
    Example { name: String, params: Vec<String> },
}

fn need_group(g: &Option<FiniteGroup>) -> Result<&FiniteGroup> {
    g.as_ref().context("this command needs --group")
}

fn run(cli: Cli) -> Result<Output> {
    let cfg = JobConfig { format: cli.format, budget: cli.budget, parallelism: cli.parallel as usize, seed: cli.seed };
    let group = cli.group.as_deref().map(parse_group).transpose()?;
    match cli.command {
        Command::Homs { presentation, count } => cmd_homs(&presentation, need_group(&group)?, count, &cfg),
        Command::Classes { presentation } => cmd_classes(&presentation, need_group(&group)?, &cfg),
        Command::Tqft { cospan, raw, normalized } => cmd_tqft(&cospan, need_group(&group)?, raw, normalized, &cfg),
        Command::Compose { cospans } => cmd_compose(&cospans, group.as_ref(), &cfg),
        Command::Verify { suite, trials } => cmd_verify(&suite, need_group(&group)?, trials, &cfg),
        Command::Example { name, params } => cmd_example(&name, &params, &cfg),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{}", out.text);
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
