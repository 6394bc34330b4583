//! `scrollar`: polytopes, enumeration, constructions, densities and figure
//! data for scrollar invariants, written as versioned JSON/CSV files.

mod commands;
mod config;
mod error;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use commands::{ConstructArgs, DensityArgs, EnumerateArgs, FigureArgs, PolytopeArgs};
use config::{Config, ConfigFile, Overrides, OUT_DIR_ENV};
use error::CliResult;
use output::RunManifest;

#[derive(Debug, Parser)]
#[command(name = "scrollar", version, about = "Scrollar invariants of covers of the projective line")]
struct Cli {
    /// JSON settings file; flags override it.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory (also read from SCROLLAR_OUT_DIR).
    #[arg(long, global = true)]
    out_dir: Option<PathBuf>,
    /// Seed of the sampling stream.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Prime modulus of the coefficient field.
    #[arg(long, global = true)]
    prime: Option<u64>,
    /// Sample over the rationals instead of a prime field.
    #[arg(long, global = true)]
    rationals: bool,
    /// Maximum number of draws per construction.
    #[arg(long, global = true)]
    retries: Option<u32>,
    /// Normalization of the Hurwitz space dimension: fixed-base or modulo-aut.
    #[arg(long, global = true, value_parser = commands::parse_convention)]
    convention: Option<scrollar::Convention>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Write an invariant region (H-representation, optionally vertices).
    Polytope(PolytopeArgs),
    /// List candidate profiles of degree d and genus g.
    Enumerate(EnumerateArgs),
    /// Run a construction pipeline from a JSON spec.
    Construct(ConstructArgs),
    /// Emit a density grid as CSV.
    Density(DensityArgs),
    /// Emit plotting data.
    Figures(FigureArgs),
    /// Re-run the invocation recorded in a manifest and compare verdicts.
    Replay {
        manifest: PathBuf,
    },
}

fn resolve(cli: &Cli) -> CliResult<Config> {
    let file = match &cli.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let flags = Overrides {
        rationals: cli.rationals,
        prime: cli.prime,
        seed: cli.seed,
        retries: cli.retries,
        convention: cli.convention,
        out_dir: cli.out_dir.clone(),
    };
    Config::resolve(file, &flags, std::env::var_os(OUT_DIR_ENV).map(PathBuf::from))
}

fn dispatch(command: &Command, config: &Config, args: Vec<String>) -> CliResult<RunManifest> {
    match command {
        Command::Polytope(a) => commands::polytope(a, config, args),
        Command::Enumerate(a) => commands::enumerate(a, config, args),
        Command::Construct(a) => commands::construct(a, config, args),
        Command::Density(a) => commands::density(a, config, args),
        Command::Figures(a) => commands::figures(a, config, args),
        Command::Replay { manifest } => replay(manifest, config),
    }
}

fn replay(path: &std::path::Path, config: &Config) -> CliResult<RunManifest> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| error::CliError::Io { path: path.display().to_string(), source })?;
    let recorded: RunManifest = serde_json::from_str(&text)?;
    let mut argv = vec!["scrollar".to_string(), recorded.command.clone()];
    argv.extend(recorded.args.iter().cloned());
    let cli = Cli::try_parse_from(&argv).map_err(|e| error::CliError::Usage(e.to_string()))?;
    if matches!(cli.command, Command::Replay { .. }) {
        return error::usage("a replay manifest cannot replay itself");
    }
    let mut settings = recorded.config.clone();
    settings.out_dir = config.out_dir.join("replay");
    let fresh = dispatch(&cli.command, &settings, recorded.args.clone())?;
    if fresh.verdicts != recorded.verdicts {
        return Err(error::CliError::Verdict(format!(
            "replay differs: recorded {:?}, got {:?}",
            recorded.verdicts, fresh.verdicts
        )));
    }
    println!("replay of {} matches {} recorded verdicts", recorded.command, recorded.verdicts.len());
    Ok(fresh)
}

/// Subcommand name and its arguments, with global flags removed.
fn subcommand_args(raw: &[String]) -> Vec<String> {
    const VALUED: [&str; 6] = ["--config", "--out-dir", "--seed", "--prime", "--retries", "--convention"];
    let mut out = Vec::new();
    let mut iter = raw.iter().skip(1);
    let mut seen_command = false;
    while let Some(arg) = iter.next() {
        if VALUED.contains(&arg.as_str()) {
            iter.next();
            continue;
        }
        if arg == "--rationals" || VALUED.iter().any(|f| arg.starts_with(&format!("{f}="))) {
            continue;
        }
        if !seen_command {
            seen_command = true;
            continue;
        }
        out.push(arg.clone());
    }
    out
}

fn main() -> ExitCode {
    let raw: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&raw) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = resolve(&cli).and_then(|config| dispatch(&cli.command, &config, subcommand_args(&raw)));
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
