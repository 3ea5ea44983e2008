//! Embeddings in which a prescribed cycle bounds a face, optionally with a
//! vertex sharing a face with a prescribed edge of that cycle.
//!
//! Each cycle edge is subdivided and a hub is joined to every vertex of the
//! subdivided cycle. That wheel embeds uniquely, so the hub sits in a face
//! bounded by the cycle and no bridge with two or more attachments can share
//! it. Bridges with at most one attachment are set aside first and glued
//! back at their attachment afterwards.

use thiserror::Error;

use super::{test_planarity, RotationSystem};
use crate::bridges::decompose;
use crate::graph::{EdgeId, Multigraph, Path, PathError, Subgraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstrainedError {
    #[error("not a cycle of the graph: {0}")]
    NotACycle(PathError),
    #[error("{0} is not an edge of the cycle")]
    EdgeNotOnCycle(EdgeId),
    #[error("{0} lies in a bridge with fewer than two attachments")]
    VertexInPendantBridge(VertexId),
}

/// An embedding of `g` in which `c` bounds a face, or `None` when no planar
/// embedding has that property.
pub fn embed_with_outer_cycle(g: &Multigraph, c: &Path) -> Result<Option<RotationSystem>, ConstrainedError> {
    constrained(g, c, None)
}

/// Like [`embed_with_outer_cycle`], and additionally `x` lies on a face
/// incident with the cycle edge `f`.
pub fn embed_with_outer_cycle_and_cofacial(
    g: &Multigraph,
    c: &Path,
    x: VertexId,
    f: EdgeId,
) -> Result<Option<RotationSystem>, ConstrainedError> {
    constrained(g, c, Some((x, f)))
}

fn constrained(
    g: &Multigraph,
    c: &Path,
    cofacial: Option<(VertexId, EdgeId)>,
) -> Result<Option<RotationSystem>, ConstrainedError> {
    c.validate_cycle(g).map_err(ConstrainedError::NotACycle)?;
    let k = c.len();
    let f_index = match cofacial {
        Some((_, f)) => Some(c.edges.iter().position(|&e| e == f).ok_or(ConstrainedError::EdgeNotOnCycle(f))?),
        None => None,
    };
    let on_c = Subgraph::from_path(g, c);
    let bridges = decompose(g, &on_c);
    let (pendant, kept): (Vec<_>, Vec<_>) = bridges.into_iter().partition(|b| b.attachments.len() < 2);
    // the constraint is vacuous for a vertex of the cycle
    let apex_target = cofacial.filter(|&(x, _)| !on_c.contains_vertex(x));
    if let Some((x, _)) = apex_target {
        if pendant.iter().any(|b| b.in_nucleus(x)) {
            return Err(ConstrainedError::VertexInPendantBridge(x));
        }
    }

    let mut core_edges = on_c.clone();
    for b in &kept {
        for &e in &b.edges {
            core_edges.insert_edge(g, e);
        }
    }
    let core = g.spanning_subgraph(&core_edges);

    // auxiliary graph: core minus the cycle edges, subdivided cycle, hub, apex
    let mut aux = core.delete_edges(&c.edges).expect("cycle edges are present");
    let mut lifted: Vec<(EdgeId, EdgeId)> = Vec::new();
    let mut subdivision = Vec::with_capacity(k);
    for i in 0..k {
        let s = aux.add_vertex();
        let to_s = aux.add_edge(c.vertices[i], s).expect("valid");
        let from_s = aux.add_edge(s, c.vertices[i + 1]).expect("valid");
        lifted.push((to_s, c.edges[i]));
        lifted.push((from_s, c.edges[i]));
        subdivision.push(s);
    }
    let hub = aux.add_vertex();
    for i in 0..k {
        aux.add_edge(hub, c.vertices[i]).expect("valid");
        aux.add_edge(hub, subdivision[i]).expect("valid");
    }
    if let (Some((x, _)), Some(j)) = (apex_target, f_index) {
        let apex = aux.add_vertex();
        aux.add_edge(apex, x).expect("valid");
        aux.add_edge(apex, subdivision[j]).expect("valid");
    }
    let Some(r) = test_planarity(&aux).embedding() else {
        return Ok(None);
    };

    let bound = g.edge_bound();
    let lift = |e: EdgeId| -> Option<EdgeId> {
        if e.0 < bound {
            Some(e)
        } else {
            lifted.iter().find(|(a, _)| *a == e).map(|&(_, orig)| orig)
        }
    };
    let mut rotation: Vec<Vec<EdgeId>> = g
        .vertices()
        .map(|v| r.rotation(v).iter().filter_map(|&e| lift(e)).collect())
        .collect();

    // glue the set-aside bridges back in one block each, outside the cycle face
    let partial = RotationSystem::new(core, rotation.clone()).expect("lifted rotation covers the core");
    let cycle_face = partial.face_bounded_by(c).expect("the hub face is bounded by the cycle");
    for b in &pendant {
        let piece = g.filter_edges(|e| b.contains_edge(e));
        let Some(pr) = test_planarity(&piece).embedding() else {
            return Ok(None);
        };
        for &v in &b.nucleus {
            rotation[v.0] = pr.rotation(v).to_vec();
        }
        if let Some(&at) = b.attachments.first() {
            let corner = cycle_face
                .0
                .darts
                .iter()
                .find(|d| d.from == at)
                .expect("attachment lies on the cycle");
            let out = corner.edge;
            let pos = rotation[at.0].iter().position(|&e| e == out).expect("cycle edge in rotation");
            let block = pr.rotation(at).to_vec();
            rotation[at.0].splice(pos + 1..pos + 1, block);
        }
    }
    let r = RotationSystem::new(g.clone(), rotation).expect("every edge placed once");
    debug_assert!(r.is_planar());
    debug_assert!(r.face_bounded_by(c).is_some());
    Ok(Some(r))
}
