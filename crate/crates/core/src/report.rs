//! Verdict records emitted by the verification suites.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

/// One checked identity instance (or a family summarized into one record).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub pass: bool,
    /// Present exactly when `pass` is false.
    pub counterexample: Option<String>,
}

impl Check {
    pub fn new<K, V, I>(id: impl Into<String>, params: I, failure: Option<String>) -> Self
    where
        I: IntoIterator<Item = (K, V)>,
        K: Into<String>,
        V: Into<String>,
    {
        Check {
            id: id.into(),
            params: params.into_iter().map(|(k, v)| (k.into(), v.into())).collect(),
            pass: failure.is_none(),
            counterexample: failure,
        }
    }

    pub fn equal<T: PartialEq + fmt::Display>(
        id: impl Into<String>,
        params: Vec<(&str, String)>,
        lhs: &T,
        rhs: &T,
    ) -> Self {
        let failure = (lhs != rhs).then(|| format!("lhs = {lhs}, rhs = {rhs}"));
        Check::new(id, params, failure)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub schema: u32,
    pub suite: String,
    pub seed: u64,
    pub bounds: BTreeMap<String, String>,
    pub checks: Vec<Check>,
    pub totals: Totals,
    pub duration_ms: u64,
}

impl VerdictReport {
    pub fn new(suite: &str, seed: u64, bounds: BTreeMap<String, String>, checks: Vec<Check>, duration_ms: u64) -> Self {
        let passed = checks.iter().filter(|c| c.pass).count();
        VerdictReport {
            schema: SCHEMA_VERSION,
            suite: suite.to_string(),
            seed,
            bounds,
            totals: Totals { checks: checks.len(), passed, failed: checks.len() - passed },
            checks,
            duration_ms,
        }
    }

    pub fn passed(&self) -> bool {
        self.totals.failed == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for VerdictReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bounds: Vec<String> = self.bounds.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(f, "suite {} (seed {}, {})", self.suite, self.seed, bounds.join(", "))?;
        for c in &self.checks {
            let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(f, "  [{}] {} {}", if c.pass { "pass" } else { "FAIL" }, c.id, params.join(" "))?;
            if let Some(ce) = &c.counterexample {
                writeln!(f, "         counterexample: {ce}")?;
            }
        }
        write!(
            f,
            "{} checks, {} passed, {} failed in {} ms",
            self.totals.checks, self.totals.passed, self.totals.failed, self.duration_ms
        )
    }
}
