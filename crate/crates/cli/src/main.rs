//! `supergroup`: JSON-in, JSON-out front end to the evaluators and the
//! verification suites.
//!
//! Exit codes: 0 pass, 1 verification mismatch, 2 usage or input error,
//! 3 numerical failure.

mod args;
mod commands;
mod report;

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde::Deserialize;
use supergroup::precision::{Precision, DEFAULT_BITS, DEFAULT_GUARD_BITS, DEFAULT_TRUNCATION_CAP};

use args::{Cli, GlobalArgs};
use commands::{execute, Failure};
use report::{echo, Report};

const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    prec_bits: Option<u32>,
    trunc_cap: Option<usize>,
    seed: Option<u64>,
}

fn load_config(path: Option<&Path>) -> Result<FileConfig, Failure> {
    let Some(path) = path else {
        return Ok(FileConfig::default());
    };
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("malformed config {}: {e}", path.display())))
}

/// Flags win over the environment, which wins over the config file.
fn resolve(g: &GlobalArgs) -> Result<(Precision, u64), Failure> {
    let file = load_config(g.config.as_deref())?;
    let bits = g.prec_bits.or(file.prec_bits).unwrap_or(DEFAULT_BITS);
    let cap = g.trunc_cap.or(file.trunc_cap).unwrap_or(DEFAULT_TRUNCATION_CAP);
    let prec = Precision::new(bits, DEFAULT_GUARD_BITS, cap).map_err(Failure::from)?;
    Ok((prec, g.seed.or(file.seed).unwrap_or(DEFAULT_SEED)))
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let started = Instant::now();
    let (prec, seed) = resolve(&cli.global)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = cli.global.jobs {
        pool = pool.num_threads(jobs as usize);
    }
    let pool = pool.build().map_err(|e| Failure::Usage(format!("cannot start workers: {e}")))?;
    let outcome = pool.install(|| execute(&cli.command, &prec, seed))?;

    let mut report = Report::new(echo(cli.command.name(), &prec, seed, outcome.arguments), outcome.pass, outcome.result);
    if cli.global.timing {
        report.wall_time_ms = Some(started.elapsed().as_millis());
    }
    report
        .write(cli.global.json_out.as_deref())
        .map_err(|e| Failure::Usage(format!("cannot write report: {e}")))?;
    Ok(outcome.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification mismatch; see report");
            ExitCode::from(1)
        }
        Err(f) => {
            eprintln!("supergroup {}: {f}", cli.command.name());
            ExitCode::from(f.exit_code() as u8)
        }
    }
}
