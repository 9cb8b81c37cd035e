use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use supergroup::precision::Precision;

pub const SCHEMA: &str = "supergroup-report/1";

/// Settings echoed into every report. The worker count is left out on
/// purpose: reports must not depend on it.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub command: &'static str,
    pub precision_bits: u32,
    pub guard_bits: u32,
    pub truncation_cap: usize,
    pub seed: u64,
    pub arguments: Value,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub tool: Tool,
    pub config: ConfigEcho,
    pub pass: bool,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

#[derive(Debug, Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

impl Report {
    pub fn new(config: ConfigEcho, pass: bool, result: Value) -> Self {
        Report {
            schema: SCHEMA,
            tool: Tool { name: "supergroup", version: env!("CARGO_PKG_VERSION") },
            config,
            pass,
            result,
            wall_time_ms: None,
        }
    }

    pub fn write(&self, out: Option<&Path>) -> std::io::Result<()> {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        match out {
            Some(path) => fs::write(path, text),
            None => std::io::stdout().lock().write_all(text.as_bytes()),
        }
    }
}

pub fn echo(command: &'static str, prec: &Precision, seed: u64, arguments: Value) -> ConfigEcho {
    ConfigEcho {
        command,
        precision_bits: prec.bits,
        guard_bits: prec.guard_bits,
        truncation_cap: prec.truncation_cap,
        seed,
        arguments,
    }
}
