use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use ellbundle::command::{eval, Command, CommandError, Verb, DEFAULT_MAX_POWER};

/// Exact calculator for semifinite bundles on an elliptic curve.
///
/// Verbs: normalize, tensor, dual, rank, det, hom, gamma, jh, classify,
/// summands, closedform, group, ringdim, oracle-check.
#[derive(Parser, Debug)]
#[command(name = "ellbundle", version)]
struct Cli {
    /// Emit a structured JSON record instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Tensor-power cutoff for `summands`.
    #[arg(long, default_value_t = DEFAULT_MAX_POWER, value_parser = clap::value_parser!(u32).range(1..))]
    max_power: u32,

    /// Cyclic torsion order used by `oracle-check`.
    #[arg(long)]
    modulus: Option<u64>,

    /// Read expression arguments from a file, one per non-empty line.
    #[arg(long)]
    file: Option<PathBuf>,

    verb: String,

    /// Expressions, e.g. "E[3]*L[1/3,0] + 2*E[1]".
    exprs: Vec<String>,
}

fn run(cli: Cli) -> Result<String, CommandError> {
    let verb: Verb = cli.verb.parse()?;
    let mut args = cli.exprs;
    if let Some(path) = &cli.file {
        let content = std::fs::read_to_string(path)
            .map_err(|e| CommandError::Usage(format!("cannot read {}: {e}", path.display())))?;
        args.extend(
            content
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from),
        );
    }
    let cmd = Command {
        verb,
        args,
        max_power: cli.max_power,
        modulus: cli.modulus,
    };
    let record = eval(&cmd)?;
    Ok(if cli.json {
        record.to_json()
    } else {
        record.text
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
