//! Structured verification reports.
//!
//! Every axiom checker in the crate produces a [`Report`]: one
//! [`CheckResult`] per verified identity, carrying the axiom's anchor tag
//! (for example `(a2)` or `(YD)`), a pass/fail flag, and on failure a
//! witness with the offending basis indices and the residual vector.

use std::fmt;
use std::time::Instant;

use crate::kernel::Scalar;

/// Where and by how much an identity failed.
#[derive(Debug, Clone)]
pub struct Witness {
    /// Basis indices of the first failing input tuple.
    pub indices: Vec<usize>,
    /// Left-hand side minus right-hand side at that tuple.
    pub residual: Vec<Scalar>,
}

impl Witness {
    pub fn new(indices: Vec<usize>, residual: Vec<Scalar>) -> Self {
        Witness { indices, residual }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    /// Stable machine-readable identifier, for example `wba.weak_unit`.
    pub id: String,
    /// Human-readable anchor naming the axiom or equation tag.
    pub anchor: String,
    pub pass: bool,
    pub witness: Option<Witness>,
    pub millis: u128,
}

/// An ordered list of check results.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    /// Runs one timed check. The closure returns `None` on pass or a
    /// witness on failure.
    pub fn run(&mut self, id: &str, anchor: &str, f: impl FnOnce() -> Option<Witness>) {
        let start = Instant::now();
        let witness = f();
        self.checks.push(CheckResult {
            id: id.to_string(),
            anchor: anchor.to_string(),
            pass: witness.is_none(),
            witness,
            millis: start.elapsed().as_millis(),
        });
    }

    /// Records an already-evaluated boolean outcome.
    pub fn record(&mut self, id: &str, anchor: &str, pass: bool) {
        self.checks.push(CheckResult {
            id: id.to_string(),
            anchor: anchor.to_string(),
            pass,
            witness: None,
            millis: 0,
        });
    }

    pub fn merge(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            if !prefix.is_empty() {
                c.id = format!("{prefix}.{id}", id = c.id);
            }
            self.checks.push(c);
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn passed(&self, id: &str) -> bool {
        self.get(id).map(|c| c.pass).unwrap_or(false)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            if c.pass {
                writeln!(f, "[PASS] {} {}", c.id, c.anchor)?;
            } else {
                write!(f, "[FAIL] {} {}", c.id, c.anchor)?;
                if let Some(w) = &c.witness {
                    let nonzero: Vec<String> = w
                        .residual
                        .iter()
                        .enumerate()
                        .filter(|(_, s)| !s.is_zero())
                        .take(4)
                        .map(|(i, s)| format!("[{i}]={s}"))
                        .collect();
                    write!(f, " at basis {:?}, residual {}", w.indices, nonzero.join(" "))?;
                }
                writeln!(f)?;
            }
        }
        Ok(())
    }
}
