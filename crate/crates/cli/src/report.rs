//! The report printed by every subcommand.

use std::fmt::Write as _;

use k3_quartic::{CoreError, VerificationReport};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(_) => 1,
        }
    }
}

/// Inputs, module-specific results and the ordered verification ledger.
#[derive(Debug)]
pub struct Report {
    pub command: Vec<String>,
    pub inputs: Value,
    pub results: Value,
    pub ledger: Vec<VerificationReport>,
}

impl Report {
    pub fn new(inputs: Value, results: Value, ledger: Vec<VerificationReport>) -> Self {
        Report { command: Vec::new(), inputs, results, ledger }
    }

    pub fn with_command(mut self, args: Vec<String>) -> Self {
        self.command = args;
        self
    }

    pub fn all_pass(&self) -> bool {
        self.ledger.iter().all(|r| r.pass)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "verificationLedger": self.ledger.iter().map(|r| r.to_json()).collect::<Vec<_>>(),
            "versions": {
                "k3-quartic-lab": env!("CARGO_PKG_VERSION"),
            },
        })
    }

    /// Results as indented JSON followed by one line per ledger entry.
    pub fn summary(&self) -> String {
        let mut out = serde_json::to_string_pretty(&self.results).expect("serializable");
        out.push('\n');
        for r in &self.ledger {
            let status = if r.pass { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {}", r.name);
            if let Some(w) = &r.witness {
                let _ = write!(out, ": {w}");
            }
            out.push('\n');
        }
        if !self.ledger.is_empty() {
            let passed = self.ledger.iter().filter(|r| r.pass).count();
            let _ = writeln!(out, "{passed}/{} checks passed", self.ledger.len());
        }
        out
    }
}
