use std::fmt::Write;

use serde::Serialize;

use crate::check::{CheckEntry, Status};
use crate::spectral::SpectralSummary;

/// Outcome of one suite run. Field order is the JSON key order; entries are
/// sorted by id so that equal inputs and seed give identical bytes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub suite: String,
    pub inputs: Vec<String>,
    pub seed: u64,
    pub max_degree: u32,
    pub trials: usize,
    pub cutoffs: Vec<i64>,
    pub theta: Option<String>,
    pub status: Status,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub entries: Vec<CheckEntry>,
    pub spectral: Option<SpectralSummary>,
    /// Seconds; only recorded on request since it breaks determinism.
    pub wall_time: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
}

impl CheckReport {
    pub fn new(suite: &str, inputs: Vec<String>) -> Self {
        Self {
            suite: suite.to_string(),
            inputs,
            seed: 0,
            max_degree: 0,
            trials: 0,
            cutoffs: Vec::new(),
            theta: None,
            status: Status::Pass,
            passed: 0,
            failed: 0,
            errors: 0,
            entries: Vec::new(),
            spectral: None,
            wall_time: None,
        }
    }

    /// Sorts entries, fills the counters and the overall status.
    pub fn finish(&mut self) {
        self.entries.sort_by(|a, b| a.id.cmp(&b.id));
        let count = |s| self.entries.iter().filter(|e| e.status == s).count();
        self.passed = count(Status::Pass);
        self.failed = count(Status::Fail);
        self.errors = count(Status::Error);
        self.status = if self.errors > 0 {
            Status::Error
        } else if self.failed > 0 {
            Status::Fail
        } else {
            Status::Pass
        };
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(CheckEntry::passed)
    }

    pub fn entry(&self, id: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn emit(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Human => self.human(),
        }
    }

    fn human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "suite: {}", self.suite);
        let _ = writeln!(out, "inputs: {}", self.inputs.join(" "));
        let _ = write!(
            out,
            "seed: {}  max-degree: {}  trials: {}",
            self.seed, self.max_degree, self.trials
        );
        if let Some(theta) = &self.theta {
            let cutoffs: Vec<String> = self.cutoffs.iter().map(i64::to_string).collect();
            let _ = write!(out, "  cutoffs: {}  theta: {theta}", cutoffs.join(","));
        }
        out.push('\n');
        let width = self
            .entries
            .iter()
            .map(|e| e.id.chars().count())
            .max()
            .unwrap_or(0);
        for e in &self.entries {
            let pad = width - e.id.chars().count();
            let _ = write!(
                out,
                "{}{}  status: {}",
                e.id,
                " ".repeat(pad),
                e.status.as_str()
            );
            if let Some(r) = e.residual {
                let _ = write!(out, "  residual: {r:e}");
            }
            out.push('\n');
            if let Some(c) = &e.counterexample {
                let _ = writeln!(out, "    {c}");
            }
        }
        if let Some(s) = &self.spectral {
            let _ = writeln!(
                out,
                "spectrum of D (N = {}): dimension {}, {} distinct |eigenvalues|",
                s.cutoff, s.spectrum.dimension, s.spectrum.distinct
            );
            for r in &s.commutator_norms {
                let _ = writeln!(
                    out,
                    "  ‖{}‖ at N = {}: deformed {:.15}, undeformed {:.15}",
                    r.operator, r.cutoff, r.deformed, r.undeformed
                );
            }
        }
        if let Some(t) = self.wall_time {
            let _ = writeln!(out, "wall time: {t:.3} s");
        }
        let _ = writeln!(
            out,
            "status: {}  ({} pass, {} fail, {} error)",
            self.status.as_str(),
            self.passed,
            self.failed,
            self.errors
        );
        out
    }
}
