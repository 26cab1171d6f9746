use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use normdyn_cli::{load_config, run_command, CliError};

/// Run one model described by a TOML config file.
#[derive(Debug, Parser)]
#[command(name = "norm-dynamics", version)]
struct Args {
    /// Path to the run configuration.
    config: PathBuf,
    /// Directory for output files; overrides `out_dir` in the config.
    #[arg(long)]
    out_dir: Option<PathBuf>,
    /// Overrides `seed` in the config.
    #[arg(long)]
    seed: Option<u64>,
}

fn run(args: Args) -> Result<(), CliError> {
    let mut cfg = load_config(&args.config)?;
    if let Some(dir) = args.out_dir {
        cfg.out_dir = dir;
    }
    if let Some(seed) = args.seed {
        cfg.seed = seed;
    }
    for path in run_command(&cfg)? {
        println!("{}", path.display());
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Args::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("norm-dynamics: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
