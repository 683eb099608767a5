//! Verification reports and their JSONL form.

use serde::Serialize;

use crate::harness::verify::Target;

/// Outcome counts. Each count is a number of digraphs except `subchecks`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Totals {
    pub enumerated: u64,
    pub strong: u64,
    /// Strong and meeting the target's hypothesis.
    pub condition_ok: u64,
    pub found: u64,
    #[serde(rename = "exception_DB")]
    pub exception_db: u64,
    #[serde(rename = "exception_DL")]
    pub exception_dl: u64,
    pub exception_pure_cycle: u64,
    /// Finder errors, or certificates disagreeing with the oracle.
    pub unresolved: u64,
    /// Pairs or configurations inspected by the lemma targets.
    #[serde(skip_serializing_if = "is_zero")]
    pub subchecks: u64,
}

fn is_zero(x: &u64) -> bool {
    *x == 0
}

impl Totals {
    pub fn merge(&mut self, other: &Totals) {
        self.enumerated += other.enumerated;
        self.strong += other.strong;
        self.condition_ok += other.condition_ok;
        self.found += other.found;
        self.exception_db += other.exception_db;
        self.exception_dl += other.exception_dl;
        self.exception_pure_cycle += other.exception_pure_cycle;
        self.unresolved += other.unresolved;
        self.subchecks += other.subchecks;
    }

    pub fn exceptions(&self) -> u64 {
        self.exception_db + self.exception_dl + self.exception_pure_cycle
    }

    /// `enumerated >= strong >= condition_ok = found + exceptions + unresolved`.
    pub fn is_conserved(&self) -> bool {
        self.enumerated >= self.strong
            && self.strong >= self.condition_ok
            && self.condition_ok == self.found + self.exceptions() + self.unresolved
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub target: Target,
    pub n: usize,
    pub totals: Totals,
    /// digraph6 strings, sorted.
    pub counterexamples: Vec<String>,
    pub elapsed_ms: Option<u64>,
    pub seed: Option<u64>,
    /// digraph6 strings of the digraphs counted in `totals.unresolved`, sorted.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub unresolved: Vec<String>,
}

impl VerificationReport {
    pub fn is_verified(&self) -> bool {
        self.counterexamples.is_empty()
    }

    pub fn to_jsonl(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

/// One shard's share of a report.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PartialReport {
    pub totals: Totals,
    pub counterexamples: Vec<String>,
    pub unresolved: Vec<String>,
}

impl PartialReport {
    pub fn merge(mut self, other: PartialReport) -> PartialReport {
        self.totals.merge(&other.totals);
        self.counterexamples.extend(other.counterexamples);
        self.unresolved.extend(other.unresolved);
        self
    }

    pub fn finish(mut self, target: Target, n: usize, seed: Option<u64>, elapsed_ms: Option<u64>) -> VerificationReport {
        self.counterexamples.sort();
        self.counterexamples.dedup();
        self.unresolved.sort();
        self.unresolved.dedup();
        VerificationReport {
            target,
            n,
            totals: self.totals,
            counterexamples: self.counterexamples,
            elapsed_ms,
            seed,
            unresolved: self.unresolved,
        }
    }
}
