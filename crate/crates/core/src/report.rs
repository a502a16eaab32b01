//! Verification reports: one residual per equation instance.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::Serialize;

use crate::graded_geometry::VectorField;
use crate::symbolic::Poly;

/// One residual of one equation instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    /// Identifier of the equation family.
    pub equation_id: String,
    /// 1-based indices of the instance.
    pub indices: Vec<usize>,
    /// Printed residual; `0` when the equation holds.
    pub residual: String,
    /// Whether the residual vanishes.
    pub pass: bool,
}

/// Ordered list of residuals with an overall verdict.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    /// What was checked.
    pub title: String,
    /// Every residual in deterministic order.
    pub checks: Vec<Check>,
    /// Conjunction of all pass flags.
    pub verdict: bool,
    /// Non-fatal remarks such as unmet preconditions.
    pub warnings: Vec<String>,
    /// Wall-clock time spent building the report.
    pub elapsed_ms: f64,
}

impl VerificationReport {
    /// Empty passing report.
    pub fn new(title: impl Into<String>) -> Self {
        VerificationReport {
            title: title.into(),
            checks: Vec::new(),
            verdict: true,
            warnings: Vec::new(),
            elapsed_ms: 0.0,
        }
    }

    /// Records a residual given as text.
    pub fn push(&mut self, equation_id: &str, indices: &[usize], residual: String, pass: bool) {
        self.verdict &= pass;
        self.checks.push(Check {
            equation_id: equation_id.to_string(),
            indices: indices.iter().map(|i| i + 1).collect(),
            residual,
            pass,
        });
    }

    /// Records a polynomial residual; indices are 0-based.
    pub fn push_poly(&mut self, equation_id: &str, indices: &[usize], residual: &Poly, names: &[String]) {
        self.push(
            equation_id,
            indices,
            residual.to_string_with(names),
            residual.is_zero(),
        );
    }

    /// Records a vector-field residual; indices are 0-based.
    pub fn push_field(&mut self, equation_id: &str, indices: &[usize], residual: &VectorField) {
        self.push(equation_id, indices, residual.to_string(), residual.is_zero());
    }

    /// Records a residual made of several polynomial components.
    pub fn push_components(&mut self, equation_id: &str, indices: &[usize], residual: &[Poly], names: &[String]) {
        let pass = residual.iter().all(Poly::is_zero);
        let text = if pass {
            "0".to_string()
        } else {
            let parts: Vec<String> = residual.iter().map(|p| p.to_string_with(names)).collect();
            format!("({})", parts.join(", "))
        };
        self.push(equation_id, indices, text, pass);
    }

    /// Adds a warning.
    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    /// Appends the checks and warnings of another report.
    pub fn absorb(&mut self, other: VerificationReport) {
        self.verdict &= other.verdict;
        self.checks.extend(other.checks);
        self.warnings.extend(other.warnings);
        self.elapsed_ms += other.elapsed_ms;
    }

    /// Overall verdict.
    pub fn passed(&self) -> bool {
        self.verdict
    }

    /// Whether every check of a family passes (vacuously true if absent).
    pub fn family_passes(&self, equation_id: &str) -> bool {
        self.checks
            .iter()
            .filter(|c| c.equation_id == equation_id)
            .all(|c| c.pass)
    }

    /// Families present, in first-occurrence order.
    pub fn families(&self) -> Vec<String> {
        let mut seen = BTreeSet::new();
        self.checks
            .iter()
            .filter(|c| seen.insert(c.equation_id.clone()))
            .map(|c| c.equation_id.clone())
            .collect()
    }

    /// Families with at least one failing check.
    pub fn failed_families(&self) -> BTreeSet<String> {
        self.checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.equation_id.clone())
            .collect()
    }

    /// Number of failing checks.
    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }
}

/// Runs `build` and stamps the elapsed time on its report.
pub fn timed(title: &str, build: impl FnOnce(&mut VerificationReport)) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new(title);
    build(&mut report);
    report.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}
