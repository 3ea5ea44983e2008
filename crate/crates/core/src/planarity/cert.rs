use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Multigraph, Path, Subgraph, VertexId};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum KuratowskiKind {
    K5,
    K33,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertError {
    #[error("expected {expected} branch vertices, found {found}")]
    BranchVertexCount { expected: usize, found: usize },
    #[error("branch vertex degrees do not match K5 or K3,3")]
    NotKuratowski,
    #[error("branch {index} is not a valid path: {reason}")]
    BadBranch { index: usize, reason: String },
    #[error("branch {index} joins the wrong branch vertices")]
    WrongEnds { index: usize },
    #[error("vertex {0} is shared by two branches as an internal vertex")]
    SharedInternal(VertexId),
    #[error("edge {0} is used by two branches")]
    SharedEdge(EdgeId),
    #[error("edges outside the branches: {0:?}")]
    Uncovered(Vec<EdgeId>),
}

/// A subdivision of K5 or K3,3 inside a host graph.
///
/// For K5 `branch_vertices` holds the five branch vertices in increasing
/// order and `branches` lists the paths for the pairs `(i, j)`, `i < j`, in
/// lexicographic order. For K3,3 the first three branch vertices form the
/// part containing the smallest branch vertex, the last three the other
/// part, and `branches` runs over `A x B` lexicographically, each path
/// oriented from `A` to `B`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct KuratowskiCert {
    pub kind: KuratowskiKind,
    pub branch_vertices: Vec<VertexId>,
    pub branches: Vec<Path>,
}

impl KuratowskiCert {
    /// Branch-vertex pairs in the order `branches` uses.
    pub fn expected_pairs(kind: KuratowskiKind, bv: &[VertexId]) -> Vec<(VertexId, VertexId)> {
        match kind {
            KuratowskiKind::K5 => {
                let mut out = Vec::with_capacity(10);
                for i in 0..5 {
                    for j in i + 1..5 {
                        out.push((bv[i], bv[j]));
                    }
                }
                out
            }
            KuratowskiKind::K33 => {
                let mut out = Vec::with_capacity(9);
                for &a in &bv[..3] {
                    for &b in &bv[3..] {
                        out.push((a, b));
                    }
                }
                out
            }
        }
    }

    pub fn edges(&self) -> Vec<EdgeId> {
        let mut es: Vec<EdgeId> = self.branches.iter().flat_map(|p| p.edges.iter().copied()).collect();
        es.sort();
        es
    }

    pub fn subgraph(&self, g: &Multigraph) -> Subgraph {
        Subgraph::from_edges(g, self.edges())
    }

    pub fn parts(&self) -> Option<(&[VertexId], &[VertexId])> {
        match self.kind {
            KuratowskiKind::K33 => Some((&self.branch_vertices[..3], &self.branch_vertices[3..])),
            KuratowskiKind::K5 => None,
        }
    }

    /// Recognizes the spanning subgraph on `edges` as a Kuratowski
    /// subdivision and lays out its branches canonically.
    pub fn from_edge_set(g: &Multigraph, edges: &[EdgeId]) -> Result<Self, CertError> {
        let sub = g.filter_edges(|e| edges.contains(&e));
        let branch: Vec<VertexId> = sub.vertices().filter(|&v| sub.degree(v) >= 3).collect();
        let kind = match branch.len() {
            5 if branch.iter().all(|&v| sub.degree(v) == 4) => KuratowskiKind::K5,
            6 if branch.iter().all(|&v| sub.degree(v) == 3) => KuratowskiKind::K33,
            5 | 6 => return Err(CertError::NotKuratowski),
            found => {
                return Err(CertError::BranchVertexCount {
                    expected: if found < 6 { 5 } else { 6 },
                    found,
                })
            }
        };
        let is_branch = |v: VertexId| branch.contains(&v);
        let mut traced: Vec<Path> = Vec::new();
        let mut covered = BTreeSet::new();
        for &b in &branch {
            for &first in sub.incident(b) {
                if covered.contains(&first) {
                    continue;
                }
                let mut vertices = vec![b];
                let mut es = vec![first];
                let mut cur = sub.other_end(first, b);
                let mut last = first;
                while !is_branch(cur) {
                    if sub.degree(cur) != 2 {
                        return Err(CertError::NotKuratowski);
                    }
                    vertices.push(cur);
                    let next = *sub
                        .incident(cur)
                        .iter()
                        .find(|&&x| x != last)
                        .expect("degree two");
                    es.push(next);
                    last = next;
                    cur = sub.other_end(next, cur);
                }
                vertices.push(cur);
                covered.extend(es.iter().copied());
                traced.push(Path { vertices, edges: es });
            }
        }
        let uncovered: Vec<EdgeId> = sub.edge_ids().filter(|e| !covered.contains(e)).collect();
        if !uncovered.is_empty() {
            return Err(CertError::Uncovered(uncovered));
        }
        let branch_vertices = match kind {
            KuratowskiKind::K5 => branch.clone(),
            KuratowskiKind::K33 => {
                // neighbours in the contracted graph of the smallest branch vertex form part B
                let s = branch[0];
                let mut b_side: Vec<VertexId> = traced
                    .iter()
                    .filter_map(|p| {
                        if p.start() == s {
                            Some(p.end())
                        } else if p.end() == s {
                            Some(p.start())
                        } else {
                            None
                        }
                    })
                    .collect();
                b_side.sort();
                b_side.dedup();
                let mut a_side: Vec<VertexId> =
                    branch.iter().copied().filter(|v| !b_side.contains(v)).collect();
                a_side.sort();
                if a_side.len() != 3 || b_side.len() != 3 {
                    return Err(CertError::NotKuratowski);
                }
                a_side.extend(b_side);
                a_side
            }
        };
        let pairs = Self::expected_pairs(kind, &branch_vertices);
        let mut branches = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let pos = traced
                .iter()
                .position(|p| (p.start() == a && p.end() == b) || (p.start() == b && p.end() == a))
                .ok_or(CertError::NotKuratowski)?;
            let mut p = traced.swap_remove(pos);
            if p.start() != a {
                p.vertices.reverse();
                p.edges.reverse();
            }
            branches.push(p);
        }
        if !traced.is_empty() {
            return Err(CertError::NotKuratowski);
        }
        let cert = Self {
            kind,
            branch_vertices,
            branches,
        };
        debug_assert_eq!(cert.verify(g), Ok(()));
        Ok(cert)
    }

    /// Checks every certificate invariant against the host graph.
    pub fn verify(&self, g: &Multigraph) -> Result<(), CertError> {
        let expected = match self.kind {
            KuratowskiKind::K5 => 5,
            KuratowskiKind::K33 => 6,
        };
        let mut bv = self.branch_vertices.clone();
        bv.sort();
        bv.dedup();
        if bv.len() != expected || self.branch_vertices.len() != expected {
            return Err(CertError::BranchVertexCount {
                expected,
                found: bv.len(),
            });
        }
        let pairs = Self::expected_pairs(self.kind, &self.branch_vertices);
        if pairs.len() != self.branches.len() {
            return Err(CertError::NotKuratowski);
        }
        let mut internal = BTreeSet::new();
        let mut used = BTreeSet::new();
        for (index, (p, &(a, b))) in self.branches.iter().zip(&pairs).enumerate() {
            p.validate_path(g).map_err(|e| CertError::BadBranch {
                index,
                reason: e.to_string(),
            })?;
            if p.is_empty() || p.start() != a || p.end() != b {
                return Err(CertError::WrongEnds { index });
            }
            for &v in p.internal_vertices() {
                if bv.binary_search(&v).is_ok() || !internal.insert(v) {
                    return Err(CertError::SharedInternal(v));
                }
            }
            for &e in &p.edges {
                if !used.insert(e) {
                    return Err(CertError::SharedEdge(e));
                }
            }
        }
        Ok(())
    }
}
