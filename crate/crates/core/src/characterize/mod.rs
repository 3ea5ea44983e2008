//! Crossing pairs: the planarization gadget, the two Kuratowski conditions
//! and their comparison, the crossing-number-one decision, explicit
//! drawings, and pairs that cross in every Kuratowski subgraph.

mod conditions;
mod construct;
mod decide;
mod drawing;
mod oracle;
mod potential;

use thiserror::Error;

pub use conditions::{
    check_theorem3, check_theorem3_with, condition_ii, condition_ii_with, condition_iii, condition_iii_with, Clause,
    ConditionReport, ExistentialCondition, UniversalCondition, WitnessSource,
};
pub use construct::{
    build_one_drawing_constructive, build_with_witness, Construction, ConstructionTrace, ProofClaim, SideTrace,
};
pub use decide::{crossing_number_le_1, crossing_number_le_1_with, CrossingVerdict, FailureReason, PairFailure};
pub use drawing::{planarize, DrawingError, OneDrawing, Planarization};
pub use oracle::oracle_crossing_pair;
pub(crate) use oracle::gadget_holds;
pub use potential::{potential_crossing_pairs, PotentialPair, PotentialReport};

use crate::bridges::BridgeError;
use crate::graph::{EdgePair, GraphError};
use crate::kuratowski::KuratowskiError;
use crate::planarity::ConstrainedError;
use crate::separation::SeparationError;

#[derive(Debug, Clone, Error)]
pub enum CharacterizeError {
    #[error("input graph is planar")]
    PlanarInput,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Separation(#[from] SeparationError),
    #[error(transparent)]
    Kuratowski(#[from] KuratowskiError),
    #[error(transparent)]
    Bridges(#[from] BridgeError),
    #[error(transparent)]
    Constrained(#[from] ConstrainedError),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("construction step failed: {0}")]
    ProofStep(String),
    #[error("the three conditions disagree on {}", .0.pair)]
    Inconsistency(Box<ConditionReport>),
    #[error("{0} crosses in every Kuratowski subgraph and is not separated, yet the crossing number is at least two")]
    PotentialPairNotSeparated(EdgePair),
}

impl CharacterizeError {
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            CharacterizeError::Separation(SeparationError::Budget(_))
                | CharacterizeError::Kuratowski(KuratowskiError::Budget(_))
        )
    }
}
