//! Crossing number at most one, decided from a single Kuratowski subgraph.
//!
//! Any crossing pair of the graph is a crossing pair of every Kuratowski
//! subgraph, so only the crossing pairs of one subgraph `H` need checking:
//! a pair of `H` is a crossing pair of the graph exactly when both
//! single-edge deletions are planar and its edges are not separated by
//! cycles.

use serde::Serialize;

use super::conditions::{condition_iii_with, Clause, WitnessSource};
use super::construct::build_with_witness;
use super::drawing::OneDrawing;
use super::CharacterizeError;
use crate::budget::Budget;
use crate::graph::{EdgePair, Multigraph};
use crate::kuratowski::BranchStructure;
use crate::parallel::{map, Parallelism};
use crate::planarity::{test_planarity, KuratowskiCert, Planarity, RotationSystem};
use crate::separation::SeparationWitness;

#[derive(Clone, Debug, Serialize)]
pub enum FailureReason {
    DeletingENonplanar,
    DeletingFNonplanar,
    Separated(SeparationWitness),
}

#[derive(Clone, Debug, Serialize)]
pub struct PairFailure {
    pub pair: EdgePair,
    pub reason: FailureReason,
}

#[derive(Clone, Debug)]
pub enum CrossingVerdict {
    Planar(RotationSystem),
    ExactlyOne {
        drawing: Box<OneDrawing>,
        kuratowski: KuratowskiCert,
    },
    /// Every crossing pair of `kuratowski` fails for the listed reason.
    AtLeastTwo {
        kuratowski: KuratowskiCert,
        failures: Vec<PairFailure>,
    },
}

impl CrossingVerdict {
    pub fn label(&self) -> &'static str {
        match self {
            CrossingVerdict::Planar(_) => "planar",
            CrossingVerdict::ExactlyOne { .. } => "exactly_one",
            CrossingVerdict::AtLeastTwo { .. } => "at_least_two",
        }
    }

    /// 0 when planar, 1 for crossing number one, 2 for at least two.
    pub fn crossing_number_bound(&self) -> u8 {
        match self {
            CrossingVerdict::Planar(_) => 0,
            CrossingVerdict::ExactlyOne { .. } => 1,
            CrossingVerdict::AtLeastTwo { .. } => 2,
        }
    }
}

pub fn crossing_number_le_1(g: &Multigraph) -> Result<CrossingVerdict, CharacterizeError> {
    crossing_number_le_1_with(g, Parallelism::default(), Budget::DEFAULT_STEPS)
}

/// As [`crossing_number_le_1`]; each pair's separation search gets its own
/// budget of `steps_per_pair`.
pub fn crossing_number_le_1_with(
    g: &Multigraph,
    mode: Parallelism,
    steps_per_pair: u64,
) -> Result<CrossingVerdict, CharacterizeError> {
    let h = match test_planarity(g) {
        Planarity::Planar(r) => return Ok(CrossingVerdict::Planar(r)),
        Planarity::NonPlanar(h) => h,
    };
    let pairs: Vec<EdgePair> = BranchStructure::new(h.clone())
        .crossing_pairs()
        .into_iter()
        .map(|(e, f)| EdgePair::new(e, f).expect("distinct edges"))
        .collect();
    let outcomes = map(&pairs, mode, |&p| {
        condition_iii_with(g, p, WitnessSource::Given(&h), &mut Budget::new(steps_per_pair))
    });
    let mut failures = Vec::new();
    for (&p, outcome) in pairs.iter().zip(outcomes) {
        let cond = outcome?;
        if cond.holds {
            let built = build_with_witness(g, p, &h)?;
            return Ok(CrossingVerdict::ExactlyOne {
                drawing: Box::new(built.drawing),
                kuratowski: h,
            });
        }
        let reason = match cond.failed {
            Some(Clause::DeletingENonplanar) => FailureReason::DeletingENonplanar,
            Some(Clause::DeletingFNonplanar) => FailureReason::DeletingFNonplanar,
            Some(Clause::Separated) => FailureReason::Separated(
                cond.separation
                    .and_then(|s| s.witness().cloned())
                    .expect("separated pairs carry a witness"),
            ),
            other => unreachable!("crossing pairs of the subgraph itself cannot fail with {other:?}"),
        };
        failures.push(PairFailure { pair: p, reason });
    }
    Ok(CrossingVerdict::AtLeastTwo { kuratowski: h, failures })
}
