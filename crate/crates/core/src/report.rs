//! Pass/fail records shared by every verification routine.

use serde_json::{json, Value};

/// Outcome of one exact or numeric check. A failing report always carries
/// a witness (a nonzero residual, a violated congruence, a counterexample).
#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub name: String,
    pub pass: bool,
    pub witness: Option<String>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn pass(name: impl Into<String>) -> Self {
        VerificationReport { name: name.into(), pass: true, witness: None, notes: Vec::new() }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            pass: false,
            witness: Some(witness.into()),
            notes: Vec::new(),
        }
    }

    /// Pass when `ok`, otherwise fail with the lazily built witness.
    pub fn check(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass(name)
        } else {
            Self::fail(name, witness())
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    /// Folds sub-checks into one report that passes iff all of them pass.
    pub fn all(name: impl Into<String>, parts: Vec<VerificationReport>) -> Self {
        let failed: Vec<String> = parts
            .iter()
            .filter(|p| !p.pass)
            .map(|p| format!("{}: {}", p.name, p.witness.clone().unwrap_or_default()))
            .collect();
        let mut out = if failed.is_empty() {
            Self::pass(name)
        } else {
            Self::fail(name, failed.join("; "))
        };
        for p in parts {
            out.notes.extend(p.notes);
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "check": self.name,
            "pass": self.pass,
            "witness": self.witness,
            "notes": self.notes,
        })
    }
}
