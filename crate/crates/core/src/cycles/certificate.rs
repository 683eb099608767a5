//! Certificates returned by the constructive finders and their errors.

use serde::Serialize;
use thiserror::Error;

use crate::digraph::{Digraph, VertexCycle};
use crate::family::FamilyLabel;
use crate::vertex_set::Vertex;

/// Whether the finders re-check each inequality of the underlying argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ProofMode {
    #[default]
    Fast,
    Verify,
}

impl ProofMode {
    pub fn verifying(self) -> bool {
        self == ProofMode::Verify
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum Outcome {
    Found { cycle: VertexCycle },
    Exception { family: FamilyLabel },
}

/// A cycle of the requested length, or a checkable exceptional-family label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCertificate {
    pub target_length: usize,
    #[serde(flatten)]
    pub outcome: Outcome,
}

impl CycleCertificate {
    pub fn found(cycle: VertexCycle) -> Self {
        CycleCertificate { target_length: cycle.length(), outcome: Outcome::Found { cycle } }
    }

    pub fn exception(target_length: usize, family: FamilyLabel) -> Self {
        CycleCertificate { target_length, outcome: Outcome::Exception { family } }
    }

    pub fn is_found(&self) -> bool {
        matches!(self.outcome, Outcome::Found { .. })
    }

    pub fn cycle(&self) -> Option<&VertexCycle> {
        match &self.outcome {
            Outcome::Found { cycle } => Some(cycle),
            Outcome::Exception { .. } => None,
        }
    }

    pub fn family(&self) -> Option<&FamilyLabel> {
        match &self.outcome {
            Outcome::Found { .. } => None,
            Outcome::Exception { family } => Some(family),
        }
    }

    /// The cycle has the target length and lies in `d`, or the label's
    /// evidence checks out.
    pub fn validates(&self, d: &Digraph) -> bool {
        match &self.outcome {
            Outcome::Found { cycle } => {
                cycle.length() == self.target_length && d.validate_cycle(cycle)
            }
            Outcome::Exception { family } => !family.is_none() && family.validates(d),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PreconditionError {
    #[error("order {n} is below the minimum {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("digraph is not strong")]
    NotStrong,
    #[error("degree condition fails at vertex {vertex} (degree {degree})")]
    ConditionFails { vertex: Vertex, degree: usize },
    #[error("digraph has a 3-cycle")]
    HasThreeCycle,
    #[error("no two-way arc between {u} and {v}")]
    MissingTwoCycle { u: Vertex, v: Vertex },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("not a cycle of the digraph")]
    InvalidCycle,
    #[error("cycle is too long: {len} vertices, at most {max} allowed")]
    CycleTooLong { len: usize, max: usize },
    #[error("cycle is not a longest nonhamiltonian cycle")]
    NotLongest,
    #[error("vertex {0} lies on the cycle")]
    VertexOnCycle(Vertex),
    #[error("vertex {0} has no neighbour on the cycle")]
    NotAdjacentToCycle(Vertex),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FinderError {
    #[error("precondition: {0}")]
    Precondition(#[from] PreconditionError),
    /// An inequality or structural claim of the argument failed.
    #[error("assertion '{step}' failed: {detail}")]
    ProofAssertion { step: &'static str, detail: String },
    /// Neither a cycle nor an exceptional label could be produced.
    #[error("unclassified: {0}")]
    Unclassified(String),
}

/// Fails with a [`FinderError::ProofAssertion`] in verification mode.
pub(crate) fn check(
    mode: ProofMode,
    step: &'static str,
    holds: impl FnOnce() -> bool,
    detail: impl FnOnce() -> String,
) -> Result<(), FinderError> {
    if mode.verifying() && !holds() {
        return Err(FinderError::ProofAssertion { step, detail: detail() });
    }
    Ok(())
}

pub(crate) fn require_condition(d: &Digraph) -> Result<(), PreconditionError> {
    let verdict = crate::conditions::conjecture1_condition_holds(d);
    match verdict.violations.first() {
        None => Ok(()),
        Some(v) => Err(PreconditionError::ConditionFails { vertex: v.vertex, degree: v.degree }),
    }
}
