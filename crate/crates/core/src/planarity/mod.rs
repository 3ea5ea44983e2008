//! Planarity decision with certificates on both answers: a rotation system
//! when the graph is planar, a Kuratowski subdivision when it is not.

mod cert;
mod constrained;
mod embedding;
pub(crate) mod lr;

pub use cert::{CertError, KuratowskiCert, KuratowskiKind};
pub use constrained::{embed_with_outer_cycle, embed_with_outer_cycle_and_cofacial, ConstrainedError};
pub use embedding::{Dart, EmbeddingError, Face, RotationSystem};

use crate::graph::{EdgeId, Multigraph};

#[derive(Clone, Debug)]
pub enum Planarity {
    Planar(RotationSystem),
    NonPlanar(KuratowskiCert),
}

impl Planarity {
    pub fn is_planar(&self) -> bool {
        matches!(self, Planarity::Planar(_))
    }

    pub fn embedding(self) -> Option<RotationSystem> {
        match self {
            Planarity::Planar(r) => Some(r),
            Planarity::NonPlanar(_) => None,
        }
    }

    pub fn certificate(self) -> Option<KuratowskiCert> {
        match self {
            Planarity::Planar(_) => None,
            Planarity::NonPlanar(c) => Some(c),
        }
    }
}

/// The simple reduction of `g` as an index-based edge list, with the host
/// edge id of each entry.
fn simple_edge_list(g: &Multigraph) -> (Vec<(usize, usize)>, Vec<EdgeId>) {
    let s = g.simplify();
    let mut pairs = Vec::with_capacity(s.edge_count());
    let mut ids = Vec::with_capacity(s.edge_count());
    for (e, u, v) in s.edges() {
        pairs.push((u.0, v.0));
        ids.push(e);
    }
    (pairs, ids)
}

/// Planarity bit only; parallel edges never matter.
pub fn is_planar(g: &Multigraph) -> bool {
    let (pairs, _) = simple_edge_list(g);
    lr::is_planar(g.vertex_count(), &pairs)
}

pub fn test_planarity(g: &Multigraph) -> Planarity {
    let n = g.vertex_count();
    let (pairs, ids) = simple_edge_list(g);
    match lr::planar_rotation(n, &pairs) {
        Some(rot) => Planarity::Planar(expand_parallels(g, &rot, &ids)),
        None => Planarity::NonPlanar(extract_kuratowski(g, &pairs, &ids)),
    }
}

/// Lifts a rotation of the simple reduction back to `g`: every parallel class
/// sits where its representative was, in opposite orders at its two ends.
fn expand_parallels(g: &Multigraph, rot: &[Vec<usize>], ids: &[EdgeId]) -> RotationSystem {
    let mut class: Vec<Vec<EdgeId>> = vec![Vec::new(); g.edge_bound()];
    let mut rep_of = std::collections::HashMap::new();
    for &e in ids {
        let (u, v) = g.endpoints(e);
        rep_of.insert((u.min(v), u.max(v)), e);
        class[e.0].push(e);
    }
    for (e, u, v) in g.edges() {
        let rep = rep_of[&(u.min(v), u.max(v))];
        if rep != e {
            class[rep.0].push(e);
        }
    }
    let rotation = g
        .vertices()
        .map(|v| {
            let mut out = Vec::with_capacity(g.degree(v));
            for &i in &rot[v.0] {
                let rep = ids[i];
                let members = &class[rep.0];
                let (a, _) = g.endpoints(rep);
                if a == v {
                    out.extend(members.iter().copied());
                } else {
                    out.extend(members.iter().rev().copied());
                }
            }
            out
        })
        .collect();
    let r = RotationSystem::new(g.clone(), rotation).expect("expanded rotation lists every edge");
    assert!(r.is_planar(), "left-right embedding failed the Euler check");
    r
}

/// Deletes edges one at a time while nonplanarity survives; what remains
/// is a minimal nonplanar subgraph, i.e. a Kuratowski subdivision.
fn extract_kuratowski(g: &Multigraph, pairs: &[(usize, usize)], ids: &[EdgeId]) -> KuratowskiCert {
    let n = g.vertex_count();
    let mut keep = vec![true; pairs.len()];
    let mut scratch = Vec::with_capacity(pairs.len());
    for i in 0..pairs.len() {
        keep[i] = false;
        scratch.clear();
        scratch.extend(pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(p, _)| *p));
        if lr::is_planar(n, &scratch) {
            keep[i] = true;
        }
    }
    let edges: Vec<EdgeId> = ids.iter().zip(&keep).filter(|(_, &k)| k).map(|(e, _)| *e).collect();
    KuratowskiCert::from_edge_set(g, &edges).expect("minimal nonplanar subgraphs are Kuratowski subdivisions")
}

/// A Kuratowski subgraph found by trying to delete the edges of `g` in the
/// given order (edges not listed are tried last, by id), keeping each edge
/// whose removal would make the graph planar. `None` for planar `g`.
pub fn kuratowski_by_deletion(g: &Multigraph, order: &[EdgeId]) -> Option<KuratowskiCert> {
    if is_planar(g) {
        return None;
    }
    let mut sequence: Vec<EdgeId> = order.iter().copied().filter(|&e| g.contains_edge(e)).collect();
    let listed: std::collections::HashSet<EdgeId> = sequence.iter().copied().collect();
    sequence.extend(g.edge_ids().filter(|e| !listed.contains(e)));
    let mut keep = vec![false; g.edge_bound()];
    for e in g.edge_ids() {
        keep[e.0] = true;
    }
    for e in sequence {
        keep[e.0] = false;
        if is_planar(&g.filter_edges(|x| keep[x.0])) {
            keep[e.0] = true;
        }
    }
    let edges: Vec<EdgeId> = g.edge_ids().filter(|e| keep[e.0]).collect();
    Some(KuratowskiCert::from_edge_set(g, &edges).expect("minimal nonplanar subgraphs are Kuratowski subdivisions"))
}
