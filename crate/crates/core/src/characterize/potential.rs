//! Pairs that cross in every Kuratowski subgraph.

use serde::Serialize;

use super::decide::crossing_number_le_1;
use super::CharacterizeError;
use crate::budget::Budget;
use crate::graph::{EdgePair, Multigraph};
use crate::kuratowski::KuratowskiFamily;
use crate::planarity::is_planar;
use crate::separation::{separated_by_cycles_with_budget, Separation};

#[derive(Clone, Debug, Serialize)]
pub struct PotentialPair {
    pub pair: EdgePair,
    pub separation: Separation,
}

#[derive(Clone, Debug, Serialize)]
pub struct PotentialReport {
    pub kuratowski_count: usize,
    pub pairs: Vec<PotentialPair>,
    pub crossing_number_one: bool,
}

/// Every potential crossing pair with its separation verdict. When the
/// crossing number is at least two, a listed pair that is not separated
/// would be a crossing pair after all; that is reported as an
/// inconsistency.
pub fn potential_crossing_pairs(g: &Multigraph) -> Result<PotentialReport, CharacterizeError> {
    if is_planar(g) {
        return Err(CharacterizeError::PlanarInput);
    }
    let mut budget = Budget::default();
    let family = KuratowskiFamily::enumerate(g, &mut budget)?;
    let first = family.members().first().expect("nonplanar graphs have a Kuratowski subgraph");
    let mut pairs = Vec::new();
    for (e, f) in first.crossing_pairs() {
        if family.first_failure(e, f).is_some() {
            continue;
        }
        let pair = EdgePair::new(e, f).expect("distinct edges");
        let separation = separated_by_cycles_with_budget(g, pair, &mut budget)?;
        pairs.push(PotentialPair { pair, separation });
    }
    let crossing_number_one = crossing_number_le_1(g)?.crossing_number_bound() == 1;
    if !crossing_number_one {
        if let Some(bad) = pairs.iter().find(|p| !p.separation.is_separated()) {
            return Err(CharacterizeError::PotentialPairNotSeparated(bad.pair));
        }
    }
    Ok(PotentialReport {
        kuratowski_count: family.len(),
        pairs,
        crossing_number_one,
    })
}
