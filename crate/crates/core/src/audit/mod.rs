//! Cross-verification of every identity the crate relies on, and a
//! comparison of published example matrices against recomputed tables.
//!
//! Each identity produces a list of [`Comparison`]s between two independent
//! computations; it passes when every pair is equal as λ-polynomials.
//! Mismatches in the printed-matrix corpus are findings, not failures.

mod identities;
mod printed;

pub use identities::{identity_names, Limits};
pub use printed::{printed_corpus, MatrixId, PrintedEntry};

use rayon::prelude::*;

use crate::algorithms::{build_table_with_width, AlgorithmKind};
use crate::exact::LambdaPoly;

/// One equality claimed by an identity at one index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparison {
    pub label: String,
    pub left: LambdaPoly,
    pub right: LambdaPoly,
}

impl Comparison {
    pub fn new(label: impl Into<String>, left: LambdaPoly, right: LambdaPoly) -> Self {
        Self {
            label: label.into(),
            left,
            right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityResult {
    pub name: String,
    /// Tested range, e.g. `n<=10` or `order<=20`.
    pub range: String,
    pub checked: usize,
    pub passed: bool,
    /// First failing comparison (or construction error), if any.
    pub failure: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixResult {
    pub entry: PrintedEntry,
    pub recomputed: LambdaPoly,
    pub matches: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AuditReport {
    pub identity_results: Vec<IdentityResult>,
    pub matrix_results: Vec<MatrixResult>,
}

impl AuditReport {
    pub fn all_identities_pass(&self) -> bool {
        self.identity_results.iter().all(|r| r.passed)
    }

    pub fn identity(&self, name: &str) -> Option<&IdentityResult> {
        self.identity_results.iter().find(|r| r.name == name)
    }

    pub fn matrix_entry(&self, matrix: MatrixId, row: usize, col: usize) -> Option<&MatrixResult> {
        self.matrix_results
            .iter()
            .find(|r| r.entry.matrix == matrix && r.entry.row == row && r.entry.col == col)
    }
}

/// Knobs for [`run_identity_suite_with`].
#[derive(Debug, Clone, Default)]
pub struct SuiteOptions {
    /// Name of an identity whose first left-hand value gets perturbed, to
    /// exercise the failure path.
    pub inject_fault: Option<String>,
}

pub fn run_identity_suite(nmax: usize, order: usize) -> AuditReport {
    run_identity_suite_with(nmax, order, &SuiteOptions::default())
}

pub fn run_identity_suite_with(nmax: usize, order: usize, options: &SuiteOptions) -> AuditReport {
    let limits = Limits { nmax, order };
    let ctx = identities::Context::new(limits);
    let identity_results = identities::registry()
        .par_iter()
        .map(|identity| {
            let outcome = (identity.run)(&ctx);
            let faulty = options.inject_fault.as_deref() == Some(identity.name.as_str());
            evaluate(&identity.name, (identity.range)(&limits), outcome, faulty)
        })
        .collect();
    AuditReport {
        identity_results,
        matrix_results: Vec::new(),
    }
}

fn evaluate(
    name: &str,
    range: String,
    outcome: crate::Result<Vec<Comparison>>,
    faulty: bool,
) -> IdentityResult {
    let mut comparisons = match outcome {
        Ok(c) => c,
        Err(err) => {
            return IdentityResult {
                name: name.to_string(),
                range,
                checked: 0,
                passed: false,
                failure: Some(err.to_string()),
            }
        }
    };
    if faulty {
        match comparisons.first_mut() {
            Some(first) => first.left += &LambdaPoly::one(),
            None => comparisons.push(Comparison::new(
                "injected",
                LambdaPoly::one(),
                LambdaPoly::zero(),
            )),
        }
    }
    let failure = comparisons
        .iter()
        .find(|c| c.left != c.right)
        .map(|c| format!("{}: {} != {}", c.label, c.left, c.right));
    IdentityResult {
        name: name.to_string(),
        range,
        checked: comparisons.len(),
        passed: failure.is_none(),
        failure,
    }
}

/// Pairs every printed entry with the value the B-recurrence gives.
pub fn audit_printed_matrices() -> AuditReport {
    let corpus = printed_corpus();
    let matrix_results = MatrixId::ALL
        .iter()
        .flat_map(|&id| {
            let entries: Vec<&PrintedEntry> = corpus.iter().filter(|e| e.matrix == id).collect();
            let rows = entries.iter().map(|e| e.row).max().unwrap_or(0);
            let width = entries.iter().map(|e| e.row + e.col).max().unwrap_or(0);
            let table = build_table_with_width(AlgorithmKind::B, &id.seed(), rows, width)
                .expect("shipped seeds are unbounded");
            entries
                .into_iter()
                .map(|e| {
                    let recomputed = table
                        .entry(e.row, e.col)
                        .cloned()
                        .expect("width covers every printed cell");
                    MatrixResult {
                        matches: recomputed == e.printed,
                        entry: e.clone(),
                        recomputed,
                    }
                })
                .collect::<Vec<_>>()
        })
        .collect();
    AuditReport {
        identity_results: Vec::new(),
        matrix_results,
    }
}

/// Identity suite plus printed-matrix audit.
pub fn full_audit(nmax: usize, order: usize) -> AuditReport {
    let mut report = run_identity_suite(nmax, order);
    report.matrix_results = audit_printed_matrices().matrix_results;
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suite_passes() {
        let report = run_identity_suite(6, 6);
        for r in &report.identity_results {
            assert!(r.passed, "{} failed: {:?}", r.name, r.failure);
        }
        assert_eq!(report.identity_results.len(), identity_names().len());
    }

    #[test]
    fn degenerate_limits_pass() {
        assert!(run_identity_suite(0, 0).all_identities_pass());
    }

    #[test]
    fn fault_injection_names_identity() {
        let name = identity_names()[0].clone();
        let options = SuiteOptions {
            inject_fault: Some(name.clone()),
        };
        let report = run_identity_suite_with(4, 4, &options);
        let failed: Vec<_> = report.identity_results.iter().filter(|r| !r.passed).collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].name, name);
        assert!(failed[0].failure.is_some());
    }

    #[test]
    fn printed_audit_covers_corpus() {
        let report = audit_printed_matrices();
        assert_eq!(report.matrix_results.len(), printed_corpus().len());
        let m = report.matrix_entry(MatrixId::BernoulliB, 1, 1).unwrap();
        assert!(m.matches);
        let m = report.matrix_entry(MatrixId::HalfPowersB, 2, 0).unwrap();
        assert!(!m.matches);
        assert_eq!(m.recomputed.to_string(), "1/2*L");
    }
}
