//! Branches of Kuratowski subdivisions, crossing pairs inside one of them,
//! and exhaustive enumeration of the Kuratowski subgraphs of a small graph.

use std::ops::ControlFlow;

use thiserror::Error;

use crate::budget::{Budget, BudgetExhausted};
use crate::graph::{EdgeId, Multigraph, Path, VertexId};
use crate::planarity::{KuratowskiCert, KuratowskiKind};

/// Largest vertex count accepted by the enumerator.
pub const MAX_ENUMERATION_VERTICES: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KuratowskiError {
    #[error("{0} is not an edge of the subdivision")]
    EdgeNotInSubdivision(EdgeId),
    #[error("enumeration is limited to {MAX_ENUMERATION_VERTICES} vertices, graph has {0}")]
    TooLarge(usize),
    #[error(transparent)]
    Budget(#[from] BudgetExhausted),
}

/// Branch labelling of one certificate.
#[derive(Clone, Debug)]
pub struct BranchStructure {
    cert: KuratowskiCert,
    branch_of: Vec<Option<usize>>,
}

impl BranchStructure {
    pub fn new(cert: KuratowskiCert) -> Self {
        let bound = cert.edges().last().map_or(0, |e| e.0 + 1);
        let mut branch_of = vec![None; bound];
        for (i, p) in cert.branches.iter().enumerate() {
            for &e in &p.edges {
                branch_of[e.0] = Some(i);
            }
        }
        Self { cert, branch_of }
    }

    pub fn cert(&self) -> &KuratowskiCert {
        &self.cert
    }

    pub fn branch_count(&self) -> usize {
        self.cert.branches.len()
    }

    pub fn branch_of(&self, e: EdgeId) -> Option<usize> {
        self.branch_of.get(e.0).copied().flatten()
    }

    pub fn branch_ends(&self, i: usize) -> (VertexId, VertexId) {
        let p = &self.cert.branches[i];
        (p.start(), p.end())
    }

    /// Two branches are adjacent when they share a branch vertex.
    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        let (a, b) = self.branch_ends(i);
        let (c, d) = self.branch_ends(j);
        i != j && (a == c || a == d || b == c || b == d)
    }

    /// `e` and `f` lie in distinct, nonadjacent branches.
    pub fn is_crossing_pair(&self, e: EdgeId, f: EdgeId) -> Result<bool, KuratowskiError> {
        let i = self.branch_of(e).ok_or(KuratowskiError::EdgeNotInSubdivision(e))?;
        let j = self.branch_of(f).ok_or(KuratowskiError::EdgeNotInSubdivision(f))?;
        Ok(i != j && !self.adjacent(i, j))
    }

    /// Every crossing pair of the subdivision, as sorted edge pairs.
    pub fn crossing_pairs(&self) -> Vec<(EdgeId, EdgeId)> {
        let edges = self.cert.edges();
        let mut out = Vec::new();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if self.is_crossing_pair(e, f).expect("edges of the subdivision") {
                    out.push((e, f));
                }
            }
        }
        out
    }
}

pub fn branch_structure(cert: KuratowskiCert) -> BranchStructure {
    BranchStructure::new(cert)
}

pub fn is_crossing_pair_in_kuratowski(bs: &BranchStructure, e: EdgeId, f: EdgeId) -> Result<bool, KuratowskiError> {
    bs.is_crossing_pair(e, f)
}

struct Search<'a, F> {
    g: &'a Multigraph,
    kind: KuratowskiKind,
    branch_vertices: Vec<VertexId>,
    pairs: Vec<(VertexId, VertexId)>,
    is_branch: Vec<bool>,
    used_vertex: Vec<bool>,
    used_edge: Vec<bool>,
    sorted_incident: &'a [Vec<EdgeId>],
    paths: Vec<Path>,
    budget: &'a mut Budget,
    visit: F,
}

impl<F: FnMut(KuratowskiCert) -> ControlFlow<()>> Search<'_, F> {
    fn branch(&mut self, i: usize) -> Result<ControlFlow<()>, BudgetExhausted> {
        if i == self.pairs.len() {
            let cert = KuratowskiCert {
                kind: self.kind,
                branch_vertices: self.branch_vertices.clone(),
                branches: self.paths.clone(),
            };
            return Ok((self.visit)(cert));
        }
        let (a, b) = self.pairs[i];
        self.paths.push(Path::trivial(a));
        let flow = self.extend(i, a, b);
        self.paths.pop();
        flow
    }

    fn extend(&mut self, i: usize, cur: VertexId, target: VertexId) -> Result<ControlFlow<()>, BudgetExhausted> {
        self.budget.tick()?;
        for k in 0..self.sorted_incident[cur.0].len() {
            let e = self.sorted_incident[cur.0][k];
            if self.used_edge[e.0] {
                continue;
            }
            let w = self.g.other_end(e, cur);
            let reaches = w == target;
            if !reaches && (self.is_branch[w.0] || self.used_vertex[w.0]) {
                continue;
            }
            self.used_edge[e.0] = true;
            let path = self.paths.last_mut().expect("open path");
            path.edges.push(e);
            path.vertices.push(w);
            let flow = if reaches {
                self.branch(i + 1)?
            } else {
                self.used_vertex[w.0] = true;
                let flow = self.extend(i, w, target)?;
                self.used_vertex[w.0] = false;
                flow
            };
            let path = self.paths.last_mut().expect("open path");
            path.edges.pop();
            path.vertices.pop();
            self.used_edge[e.0] = false;
            if flow.is_break() {
                return Ok(flow);
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

fn subsets(pool: &[VertexId], k: usize, out: &mut Vec<Vec<VertexId>>) {
    fn go(pool: &[VertexId], k: usize, start: usize, cur: &mut Vec<VertexId>, out: &mut Vec<Vec<VertexId>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..pool.len() {
            if pool.len() - i < k - cur.len() {
                break;
            }
            cur.push(pool[i]);
            go(pool, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(pool, k, 0, &mut Vec::with_capacity(k), out);
}

/// Calls `visit` on every Kuratowski subgraph of `g` (each edge set once):
/// K5 subdivisions by branch-vertex set, then K3,3 subdivisions by
/// bipartition, each in lexicographic order of its path system.
pub fn for_each_kuratowski(
    g: &Multigraph,
    budget: &mut Budget,
    mut visit: impl FnMut(KuratowskiCert) -> ControlFlow<()>,
) -> Result<ControlFlow<()>, KuratowskiError> {
    let n = g.vertex_count();
    if n > MAX_ENUMERATION_VERTICES {
        return Err(KuratowskiError::TooLarge(n));
    }
    let sorted_incident: Vec<Vec<EdgeId>> = g
        .vertices()
        .map(|v| {
            let mut inc = g.incident(v).to_vec();
            inc.sort();
            inc
        })
        .collect();
    let simple_degree = |v: VertexId| {
        let mut nb: Vec<VertexId> = g.neighbors(v).collect();
        nb.sort();
        nb.dedup();
        nb.len()
    };
    for kind in [KuratowskiKind::K5, KuratowskiKind::K33] {
        let (size, min_degree) = match kind {
            KuratowskiKind::K5 => (5, 4),
            KuratowskiKind::K33 => (6, 3),
        };
        let pool: Vec<VertexId> = g.vertices().filter(|&v| simple_degree(v) >= min_degree).collect();
        let mut sets = Vec::new();
        subsets(&pool, size, &mut sets);
        for set in sets {
            let layouts: Vec<Vec<VertexId>> = match kind {
                KuratowskiKind::K5 => vec![set.clone()],
                KuratowskiKind::K33 => {
                    let mut partners = Vec::new();
                    subsets(&set[1..], 2, &mut partners);
                    partners
                        .into_iter()
                        .map(|two| {
                            let mut layout = vec![set[0], two[0], two[1]];
                            layout.extend(set.iter().copied().filter(|v| !two.contains(v) && *v != set[0]));
                            layout
                        })
                        .collect()
                }
            };
            for bv in layouts {
                let mut is_branch = vec![false; n];
                for &v in &bv {
                    is_branch[v.0] = true;
                }
                let mut search = Search {
                    g,
                    kind,
                    pairs: KuratowskiCert::expected_pairs(kind, &bv),
                    branch_vertices: bv,
                    is_branch,
                    used_vertex: vec![false; n],
                    used_edge: vec![false; g.edge_bound()],
                    sorted_incident: &sorted_incident,
                    paths: Vec::new(),
                    budget: &mut *budget,
                    visit: &mut visit,
                };
                if search.branch(0)?.is_break() {
                    return Ok(ControlFlow::Break(()));
                }
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// Up to `limit` Kuratowski subgraphs of `g`, in enumeration order.
pub fn enumerate_kuratowski(
    g: &Multigraph,
    limit: Option<usize>,
    budget: &mut Budget,
) -> Result<Vec<KuratowskiCert>, KuratowskiError> {
    let mut out = Vec::new();
    let _ = for_each_kuratowski(g, budget, |c| {
        out.push(c);
        if limit.is_some_and(|l| out.len() >= l) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(out)
}

/// All Kuratowski subgraphs of one graph, with branch labels precomputed
/// for fast pair queries.
#[derive(Clone, Debug)]
pub struct KuratowskiFamily {
    members: Vec<BranchStructure>,
}

impl KuratowskiFamily {
    pub fn enumerate(g: &Multigraph, budget: &mut Budget) -> Result<Self, KuratowskiError> {
        let certs = enumerate_kuratowski(g, None, budget)?;
        Ok(Self {
            members: certs.into_iter().map(BranchStructure::new).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[BranchStructure] {
        &self.members
    }

    /// Index of the first member in which `{e, f}` is not a crossing pair.
    pub fn first_failure(&self, e: EdgeId, f: EdgeId) -> Option<usize> {
        self.members
            .iter()
            .position(|bs| !bs.is_crossing_pair(e, f).unwrap_or(false))
    }

    /// Index of the first member in which `{e, f}` is a crossing pair.
    pub fn first_witness(&self, e: EdgeId, f: EdgeId) -> Option<usize> {
        self.members
            .iter()
            .position(|bs| bs.is_crossing_pair(e, f).unwrap_or(false))
    }
}
