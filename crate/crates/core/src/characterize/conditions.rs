//! The universal and existential Kuratowski conditions for a crossing pair,
//! and the three-way comparison with the gadget.

use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::Serialize;

use super::drawing::OneDrawing;
use super::oracle::gadget;
use super::CharacterizeError;
use crate::budget::Budget;
use crate::graph::{EdgePair, Multigraph};
use crate::kuratowski::{for_each_kuratowski, BranchStructure, KuratowskiFamily};
use crate::planarity::{is_planar, kuratowski_by_deletion, test_planarity, KuratowskiCert};
use crate::separation::{separated_by_cycles_with_budget, Separation};

/// Every Kuratowski subgraph has the pair as a crossing pair, and the two
/// edges are not separated by cycles.
#[derive(Clone, Debug, Serialize)]
pub struct UniversalCondition {
    pub holds: bool,
    pub kuratowski_count: usize,
    pub every_kuratowski_crosses: bool,
    /// A Kuratowski subgraph in which the pair is not a crossing pair.
    pub failing: Option<KuratowskiCert>,
    pub separation: Separation,
}

/// The clause of the existential condition that failed first.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Clause {
    Adjacent,
    DeletingENonplanar,
    DeletingFNonplanar,
    Separated,
    NoKuratowskiWitness,
}

/// Both single-edge deletions are planar, the edges are not separated by
/// cycles, and some Kuratowski subgraph has the pair as a crossing pair.
/// Clauses are evaluated in the order of [`Clause`] and unevaluated ones
/// are `None`.
#[derive(Clone, Debug, Serialize)]
pub struct ExistentialCondition {
    pub holds: bool,
    pub failed: Option<Clause>,
    pub g_minus_e_planar: Option<bool>,
    pub g_minus_f_planar: Option<bool>,
    pub separation: Option<Separation>,
    pub witness: Option<KuratowskiCert>,
}

impl ExistentialCondition {
    fn failed(clause: Clause) -> Self {
        Self {
            holds: false,
            failed: Some(clause),
            g_minus_e_planar: None,
            g_minus_f_planar: None,
            separation: None,
            witness: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub pair: EdgePair,
    pub cond_i: bool,
    pub drawing: Option<OneDrawing>,
    pub cond_ii: UniversalCondition,
    pub cond_iii: ExistentialCondition,
}

impl ConditionReport {
    pub fn agree(&self) -> bool {
        self.cond_i == self.cond_ii.holds && self.cond_ii.holds == self.cond_iii.holds
    }
}

fn require_nonplanar(g: &Multigraph) -> Result<(), CharacterizeError> {
    if is_planar(g) {
        Err(CharacterizeError::PlanarInput)
    } else {
        Ok(())
    }
}

fn check_pair(g: &Multigraph, p: EdgePair) -> Result<(), CharacterizeError> {
    for e in [p.e(), p.f()] {
        if !g.contains_edge(e) {
            return Err(crate::graph::GraphError::UnknownEdge(e).into());
        }
    }
    Ok(())
}

pub fn condition_ii(g: &Multigraph, p: EdgePair) -> Result<UniversalCondition, CharacterizeError> {
    require_nonplanar(g)?;
    check_pair(g, p)?;
    let mut budget = Budget::default();
    let family = KuratowskiFamily::enumerate(g, &mut budget)?;
    condition_ii_with(g, &family, p, &mut budget)
}

pub fn condition_ii_with(
    g: &Multigraph,
    family: &KuratowskiFamily,
    p: EdgePair,
    budget: &mut Budget,
) -> Result<UniversalCondition, CharacterizeError> {
    let failing = family.first_failure(p.e(), p.f());
    let separation = separated_by_cycles_with_budget(g, p, budget)?;
    let every = failing.is_none();
    Ok(UniversalCondition {
        holds: every && !separation.is_separated(),
        kuratowski_count: family.len(),
        every_kuratowski_crosses: every,
        failing: failing.map(|i| family.members()[i].cert().clone()),
        separation,
    })
}

/// Where the existential search looks for a Kuratowski subgraph.
pub enum WitnessSource<'a> {
    /// Heuristic deletion orders, then full enumeration.
    Search,
    /// Members of a precomputed family, in order.
    Family(&'a KuratowskiFamily),
    /// Only this subgraph.
    Given(&'a KuratowskiCert),
}

pub fn condition_iii(g: &Multigraph, p: EdgePair) -> Result<ExistentialCondition, CharacterizeError> {
    require_nonplanar(g)?;
    check_pair(g, p)?;
    condition_iii_with(g, p, WitnessSource::Search, &mut Budget::default())
}

pub fn condition_iii_with(
    g: &Multigraph,
    p: EdgePair,
    source: WitnessSource<'_>,
    budget: &mut Budget,
) -> Result<ExistentialCondition, CharacterizeError> {
    if g.edges_touch(p.e(), p.f()) {
        return Ok(ExistentialCondition::failed(Clause::Adjacent));
    }
    let ge = is_planar(&g.delete_edges(&[p.e()])?);
    if !ge {
        return Ok(ExistentialCondition {
            g_minus_e_planar: Some(false),
            ..ExistentialCondition::failed(Clause::DeletingENonplanar)
        });
    }
    let gf = is_planar(&g.delete_edges(&[p.f()])?);
    if !gf {
        return Ok(ExistentialCondition {
            g_minus_e_planar: Some(true),
            g_minus_f_planar: Some(false),
            ..ExistentialCondition::failed(Clause::DeletingFNonplanar)
        });
    }
    let separation = separated_by_cycles_with_budget(g, p, budget)?;
    if separation.is_separated() {
        return Ok(ExistentialCondition {
            g_minus_e_planar: Some(true),
            g_minus_f_planar: Some(true),
            separation: Some(separation),
            ..ExistentialCondition::failed(Clause::Separated)
        });
    }
    let witness = find_witness(g, p, source, budget)?;
    Ok(ExistentialCondition {
        holds: witness.is_some(),
        failed: witness.is_none().then_some(Clause::NoKuratowskiWitness),
        g_minus_e_planar: Some(true),
        g_minus_f_planar: Some(true),
        separation: Some(separation),
        witness,
    })
}

fn crosses(cert: &KuratowskiCert, p: EdgePair) -> bool {
    BranchStructure::new(cert.clone())
        .is_crossing_pair(p.e(), p.f())
        .unwrap_or(false)
}

const HEURISTIC_ORDERS: u64 = 8;

fn find_witness(
    g: &Multigraph,
    p: EdgePair,
    source: WitnessSource<'_>,
    budget: &mut Budget,
) -> Result<Option<KuratowskiCert>, CharacterizeError> {
    match source {
        WitnessSource::Given(h) => Ok(crosses(h, p).then(|| h.clone())),
        WitnessSource::Family(family) => Ok(family
            .first_witness(p.e(), p.f())
            .map(|i| family.members()[i].cert().clone())),
        WitnessSource::Search => {
            if let Some(h) = test_planarity(g).certificate() {
                if crosses(&h, p) {
                    return Ok(Some(h));
                }
            }
            // random deletion orders, keeping e and f to the end
            let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
            let mut others: Vec<_> = g.edge_ids().filter(|&x| !p.contains(x)).collect();
            for _ in 0..HEURISTIC_ORDERS {
                others.shuffle(&mut rng);
                if let Some(h) = kuratowski_by_deletion(g, &others) {
                    if crosses(&h, p) {
                        return Ok(Some(h));
                    }
                }
            }
            let mut found = None;
            let _ = for_each_kuratowski(g, budget, |h| {
                if crosses(&h, p) {
                    found = Some(h);
                    ControlFlow::Break(())
                } else {
                    ControlFlow::Continue(())
                }
            })?;
            Ok(found)
        }
    }
}

/// Evaluates the gadget and both Kuratowski conditions and insists that
/// they agree.
pub fn check_theorem3(g: &Multigraph, p: EdgePair) -> Result<ConditionReport, CharacterizeError> {
    require_nonplanar(g)?;
    check_pair(g, p)?;
    let mut budget = Budget::default();
    let family = KuratowskiFamily::enumerate(g, &mut budget)?;
    check_theorem3_with(g, &family, p, &mut budget)
}

pub fn check_theorem3_with(
    g: &Multigraph,
    family: &KuratowskiFamily,
    p: EdgePair,
    budget: &mut Budget,
) -> Result<ConditionReport, CharacterizeError> {
    let drawing = gadget(g, p)?;
    let cond_ii = condition_ii_with(g, family, p, budget)?;
    let cond_iii = condition_iii_with(g, p, WitnessSource::Family(family), budget)?;
    let report = ConditionReport {
        pair: p,
        cond_i: drawing.is_some(),
        drawing,
        cond_ii,
        cond_iii,
    };
    if report.agree() {
        Ok(report)
    } else {
        Err(CharacterizeError::Inconsistency(Box::new(report)))
    }
}
