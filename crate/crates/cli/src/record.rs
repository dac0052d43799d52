use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

/// A theoretical claim checked at the scale of this run.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub claim: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(claim: &'static str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            claim,
            passed,
            detail: detail.into(),
        }
    }
}

/// What a subcommand produced before it is wrapped in a [`RunRecord`].
pub struct Outcome {
    pub results: Value,
    pub checks: Vec<Check>,
    /// Replaces the JSON record when CSV output was requested.
    pub csv: Option<String>,
}

impl Outcome {
    pub fn json(results: Value, checks: Vec<Check>) -> Self {
        Self {
            results,
            checks,
            csv: None,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Serialize)]
pub struct Tool {
    pub name: &'static str,
    pub version: &'static str,
}

#[derive(Serialize)]
pub struct RunRecord {
    pub schema: u32,
    pub tool: Tool,
    pub config: Value,
    pub timing_ms: f64,
    pub checks: Vec<Check>,
    pub results: Value,
}

impl RunRecord {
    pub fn new(config: Value, timing_ms: f64, outcome: Outcome) -> Self {
        Self {
            schema: SCHEMA_VERSION,
            tool: Tool {
                name: "qhslab",
                version: env!("CARGO_PKG_VERSION"),
            },
            config,
            timing_ms,
            checks: outcome.checks,
            results: outcome.results,
        }
    }
}
