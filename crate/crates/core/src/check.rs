//! Outcome records shared by every verification routine.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

/// One verified identity. `counterexample` is rendered in canonical element
/// syntax; `residual` is set only by numeric checks.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub id: String,
    pub status: Status,
    pub counterexample: Option<String>,
    pub residual: Option<f64>,
}

impl CheckEntry {
    pub fn pass(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            status: Status::Pass,
            counterexample: None,
            residual: None,
        }
    }

    pub fn fail(id: impl Into<String>, counterexample: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            status: Status::Fail,
            counterexample: Some(counterexample.into()),
            residual: None,
        }
    }

    pub fn error(id: impl Into<String>, message: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            status: Status::Error,
            counterexample: Some(message.into()),
            residual: None,
        }
    }

    /// Pass iff `counterexample` is `None`.
    pub fn from_counterexample(id: impl Into<String>, counterexample: Option<String>) -> Self {
        match counterexample {
            None => Self::pass(id),
            Some(c) => Self::fail(id, c),
        }
    }

    pub fn with_residual(mut self, residual: f64) -> Self {
        self.residual = Some(residual);
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

pub fn all_pass(entries: &[CheckEntry]) -> bool {
    entries.iter().all(CheckEntry::passed)
}

/// Runs `f` on every sample (in parallel) and reports the first sample, in
/// sample order, that yields a counterexample or an error.
pub fn check_samples<T: Sync>(
    id: impl Into<String>,
    samples: &[T],
    f: impl Fn(&T) -> Result<Option<String>, String> + Sync,
) -> CheckEntry {
    use rayon::prelude::*;
    let first = samples.par_iter().find_map_first(|s| match f(s) {
        Ok(None) => None,
        Ok(Some(ce)) => Some(Ok(ce)),
        Err(e) => Some(Err(e)),
    });
    match first {
        None => CheckEntry::pass(id),
        Some(Ok(ce)) => CheckEntry::fail(id, ce),
        Some(Err(e)) => CheckEntry::error(id, e),
    }
}

/// `Some("{label}: lhs = …, rhs = …")` when the two sides differ.
pub fn mismatch<T: PartialEq + std::fmt::Display>(label: &str, lhs: &T, rhs: &T) -> Option<String> {
    (lhs != rhs).then(|| format!("{label}: lhs = {lhs}, rhs = {rhs}"))
}
