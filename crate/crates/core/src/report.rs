//! Structured checker verdicts.
//!
//! Every suite returns a `CheckReport`: one verdict per axiom, with the
//! lexicographically first counterexample tuples and their exact residual
//! vectors. A pass means the residual is literally zero on every tuple,
//! never "small".

use crate::linalg::Vector;

/// How many counterexamples a verdict retains before truncating.
pub const DEFAULT_MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Clone, Debug)]
pub struct CheckOptions {
    pub max_counterexamples: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            max_counterexamples: DEFAULT_MAX_COUNTEREXAMPLES,
        }
    }
}

/// A basis-index tuple on which an axiom fails, with the exact residual.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub tuple: Vec<usize>,
    pub residual: Vector,
}

#[derive(Clone, Debug)]
pub struct AxiomVerdict {
    pub axiom_id: String,
    pub passed: bool,
    /// Lexicographically first failures, truncated at the configured cap.
    pub counterexamples: Vec<Counterexample>,
    /// Total number of failing tuples, including truncated ones.
    pub total_counterexamples: u64,
    pub checked_tuples: u64,
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub suite_id: String,
    /// True iff every (non-informational) axiom verdict passed.
    pub passed: bool,
    pub axiom_verdicts: Vec<AxiomVerdict>,
    /// Verdicts reported for information only; they never affect `passed`.
    pub info_verdicts: Vec<AxiomVerdict>,
    pub checked_tuples: u64,
}

impl CheckReport {
    pub fn new(suite_id: impl Into<String>, axiom_verdicts: Vec<AxiomVerdict>) -> Self {
        Self::with_info(suite_id, axiom_verdicts, Vec::new())
    }

    pub fn with_info(
        suite_id: impl Into<String>,
        axiom_verdicts: Vec<AxiomVerdict>,
        info_verdicts: Vec<AxiomVerdict>,
    ) -> Self {
        let passed = axiom_verdicts.iter().all(|v| v.passed);
        let checked_tuples = axiom_verdicts
            .iter()
            .chain(&info_verdicts)
            .map(|v| v.checked_tuples)
            .sum();
        CheckReport {
            suite_id: suite_id.into(),
            passed,
            axiom_verdicts,
            info_verdicts,
            checked_tuples,
        }
    }

    pub fn axiom(&self, axiom_id: &str) -> Option<&AxiomVerdict> {
        self.axiom_verdicts.iter().find(|v| v.axiom_id == axiom_id)
    }

    /// First failing (axiom, tuple) pair, if any.
    pub fn first_failure(&self) -> Option<(&str, &[usize])> {
        self.axiom_verdicts
            .iter()
            .filter(|v| !v.passed)
            .find_map(|v| {
                v.counterexamples
                    .first()
                    .map(|c| (v.axiom_id.as_str(), c.tuple.as_slice()))
            })
    }
}

/// Accumulates residuals for one axiom while a checker sweeps its tuple
/// space in lexicographic order.
pub(crate) struct AxiomCheck {
    axiom_id: String,
    cap: usize,
    kept: Vec<Counterexample>,
    total: u64,
    checked: u64,
}

impl AxiomCheck {
    pub fn new(axiom_id: impl Into<String>, opts: &CheckOptions) -> Self {
        AxiomCheck {
            axiom_id: axiom_id.into(),
            cap: opts.max_counterexamples,
            kept: Vec::new(),
            total: 0,
            checked: 0,
        }
    }

    pub fn record(&mut self, tuple: &[usize], residual: Vector) {
        self.checked += 1;
        if residual.is_zero() {
            return;
        }
        self.total += 1;
        if self.kept.len() < self.cap {
            self.kept.push(Counterexample {
                tuple: tuple.to_vec(),
                residual,
            });
        }
    }

    pub fn finish(mut self) -> AxiomVerdict {
        // Sweeps run in lexicographic tuple order, so the kept list is
        // already sorted; keep the sort as a guard for future callers.
        self.kept.sort_by(|a, b| a.tuple.cmp(&b.tuple));
        AxiomVerdict {
            passed: self.total == 0,
            axiom_id: self.axiom_id,
            counterexamples: self.kept,
            total_counterexamples: self.total,
            checked_tuples: self.checked,
        }
    }
}
