use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};
use graphprod_cli::commands;
use graphprod_cli::config::{defaults_help, parse_config, RunConfig};
use serde::Serialize;

/// Graph products of groups: normal forms, the glued function phi_Gamma and
/// its numerical certification.
///
/// Exit status: 0 on success, 1 when a verification check fails, 2 on
/// invalid input or I/O errors.
#[derive(Parser, Debug)]
#[command(name = "graphprod", version)]
struct Cli {
    /// JSON run configuration describing the graph and suite parameters.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Override the sampling seed from the configuration.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Override the report output path from the configuration.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical normal form and reduced length of a word.
    Normalize {
        /// Word such as "v0:1; v1:-2; v0:x1 x2^-1"; "e" is the identity.
        word: String,
    },
    /// Print l_r, phi~ and phi_Gamma of a word.
    Phi { word: String },
    /// List the Cayley ball with word length, l_r and phi_Gamma.
    Ball {
        /// Ball radius [default: suite radius from the configuration].
        #[arg(long)]
        radius: Option<usize>,
        /// Maximal number of elements [default: suite cap from the configuration].
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Run the certification suite and write the JSON report.
    Verify,
    /// Render a previously written JSON report as a table.
    Report {
        /// Path of the report JSON.
        path: PathBuf,
    },
}

enum Outcome {
    Success,
    ChecksFailed,
}

fn load_config(cli: &Cli) -> Result<(String, RunConfig)> {
    let path = cli
        .config
        .as_deref()
        .context("this command needs --config <PATH>")?;
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let mut config = parse_config(&text)?;
    if let Some(seed) = cli.seed {
        config.suite.seed = seed;
    }
    if let Some(out) = &cli.out {
        config.output = Some(out.clone());
    }
    Ok((suite_name(path), config))
}

fn suite_name(path: &Path) -> String {
    path.file_stem()
        .map_or_else(|| "run".to_string(), |s| s.to_string_lossy().into_owned())
}

fn print<T: Serialize>(json: bool, value: &T, text: impl FnOnce(&T) -> String) -> Result<()> {
    if json {
        println!("{}", serde_json::to_string_pretty(value)?);
    } else {
        print!("{}", text(value));
    }
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Normalize { word } => {
            let (_, config) = load_config(cli)?;
            let out = commands::normalize(&config.graph, word)?;
            print(cli.json, &out, |o| o.render())?;
        }
        Command::Phi { word } => {
            let (_, config) = load_config(cli)?;
            let out = commands::phi(&config.graph, word)?;
            print(cli.json, &out, |o| o.render())?;
        }
        Command::Ball { radius, cap } => {
            let (_, config) = load_config(cli)?;
            let out = commands::ball(
                &config.graph,
                radius.unwrap_or(config.suite.radius),
                cap.unwrap_or(config.suite.cap),
            )?;
            print(cli.json, &out, |o| o.render())?;
        }
        Command::Verify => {
            let (name, config) = load_config(cli)?;
            let report = commands::verify(&name, &config)?;
            print(cli.json, &report, |r| r.summary_table())?;
            if !report.pass {
                return Ok(Outcome::ChecksFailed);
            }
        }
        Command::Report { path } => {
            let report = commands::read_report(path)?;
            print(cli.json, &report, |r| r.summary_table())?;
            if !report.pass {
                return Ok(Outcome::ChecksFailed);
            }
        }
    }
    Ok(Outcome::Success)
}

fn main() -> ExitCode {
    let command = Cli::command().after_help(defaults_help());
    let cli = match Cli::from_arg_matches(&command.get_matches()) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(&cli) {
        Ok(Outcome::Success) => ExitCode::SUCCESS,
        Ok(Outcome::ChecksFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
