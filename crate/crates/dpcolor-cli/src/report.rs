//! The machine-readable run report written by every subcommand.

use std::path::Path;

use serde::Serialize;
use serde_json::Value;

/// Outcome of one invocation. `Stuck` means the constructive reduction ran
/// out of moves; the report then carries the remainder as a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Ok,
    Unsat,
    Stuck,
    Error,
}

impl Outcome {
    /// Process exit code contract: 0 ok, 1 unsat/violation, 2 input error,
    /// 3 stuck.
    pub fn exit_code(self) -> i32 {
        match self {
            Outcome::Ok => 0,
            Outcome::Unsat => 1,
            Outcome::Error => 2,
            Outcome::Stuck => 3,
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub schema_version: &'static str,
    pub command: &'static str,
    pub inputs: Value,
    pub outcome: Outcome,
    /// Present exactly when the outcome is ok, unsat, or stuck. Depends only
    /// on the inputs and seed, never on timing.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(command: &'static str, inputs: Value) -> RunReport {
        RunReport {
            schema_version: "1",
            command,
            inputs,
            outcome: Outcome::Error,
            certificate: None,
            message: None,
            wall_time_ms: 0.0,
        }
    }

    pub fn resolve(&mut self, outcome: Outcome, certificate: Option<Value>) {
        self.outcome = outcome;
        self.certificate = certificate;
    }

    pub fn write(&self, path: &Path) -> std::io::Result<()> {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        std::fs::write(path, text)
    }
}
