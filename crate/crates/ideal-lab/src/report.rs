//! Check reports with deterministic JSON and text renderings.

use exact_linalg::Scalar;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            pass: true,
            witness: None,
        }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            pass: false,
            witness: Some(witness.into()),
        }
    }

    pub fn from_condition(name: impl Into<String>, ok: bool, witness: impl Into<String>) -> Check {
        if ok {
            Check::pass(name)
        } else {
            Check::fail(name, witness)
        }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub system: Option<String>,
    pub checks: Vec<Check>,
    /// Populated only on request; timing is excluded by default so that
    /// identical invocations emit identical bytes.
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: impl Into<String>, system: Option<String>) -> Report {
        Report {
            command: command.into(),
            system,
            checks: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                json!({
                    "name": c.name,
                    "pass": c.pass,
                    "witness": c.witness,
                })
            })
            .collect();
        let mut out = json!({
            "command": self.command,
            "system": self.system,
            "checks": checks,
        });
        if let Some(ms) = self.timing_ms {
            out["timing_ms"] = json!(ms);
        }
        out
    }

    pub fn render_text(&self) -> String {
        let mut lines = Vec::new();
        let header = match &self.system {
            Some(system) => format!("{} ({system})", self.command),
            None => self.command.clone(),
        };
        lines.push(header);
        for c in &self.checks {
            match (&c.pass, &c.witness) {
                (true, _) => lines.push(format!("  {}: PASS", c.name)),
                (false, Some(w)) => lines.push(format!("  {}: FAIL ({w})", c.name)),
                (false, None) => lines.push(format!("  {}: FAIL", c.name)),
            }
        }
        lines.push(format!(
            "result: {}",
            if self.passed() {
                "all checks passed"
            } else {
                "CHECK FAILURES"
            }
        ));
        if let Some(ms) = self.timing_ms {
            lines.push(format!("timing_ms: {ms}"));
        }
        lines.join("\n")
    }
}

/// Exact `[numerator, denominator]` encoding. Values beyond 128 bits fall
/// back to decimal strings; nothing is ever rounded.
pub fn scalar_to_json(s: &Scalar) -> Value {
    let encode = |n: &num_bigint::BigInt| -> Value {
        match n.to_i128() {
            Some(v) => json!(v),
            None => json!(n.to_string()),
        }
    };
    json!([encode(s.numer()), encode(s.denom())])
}
