//! Whether two edges lie on vertex-disjoint cycles.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::budget::{Budget, BudgetExhausted};
use crate::graph::{EdgeId, EdgePair, Multigraph, Path, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeparationError {
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error(transparent)]
    Budget(#[from] BudgetExhausted),
}

/// Two vertex-disjoint cycles, through `e` and through `f` respectively.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationWitness {
    pub cycle_e: Path,
    pub cycle_f: Path,
}

impl SeparationWitness {
    pub fn verify(&self, g: &Multigraph, p: EdgePair) -> Result<(), String> {
        self.cycle_e.validate_cycle(g).map_err(|e| format!("cycle through e: {e}"))?;
        self.cycle_f.validate_cycle(g).map_err(|e| format!("cycle through f: {e}"))?;
        if !self.cycle_e.contains_edge(p.e()) || !self.cycle_f.contains_edge(p.f()) {
            return Err("cycles miss their edges".into());
        }
        if let Some(v) = self
            .cycle_e
            .distinct_vertices()
            .iter()
            .find(|v| self.cycle_f.contains_vertex(**v))
        {
            return Err(format!("cycles share {v}"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Separation {
    Separated(SeparationWitness),
    NotSeparated,
}

impl Separation {
    pub fn is_separated(&self) -> bool {
        matches!(self, Separation::Separated(_))
    }

    pub fn witness(&self) -> Option<&SeparationWitness> {
        match self {
            Separation::Separated(w) => Some(w),
            Separation::NotSeparated => None,
        }
    }
}

pub fn separated_by_cycles(g: &Multigraph, p: EdgePair) -> Result<Separation, SeparationError> {
    separated_by_cycles_with_budget(g, p, &mut Budget::default())
}

/// Exhaustive search: grows the path closing the cycle through `e` by
/// iterative deepening on its length, pruning as soon as the ends of `f`
/// fall apart, and closes the cycle through `f` with a shortest path.
pub fn separated_by_cycles_with_budget(
    g: &Multigraph,
    p: EdgePair,
    budget: &mut Budget,
) -> Result<Separation, SeparationError> {
    let (e, f) = (p.e(), p.f());
    let (a1, b1) = g.try_endpoints(e).ok_or(SeparationError::UnknownEdge(e))?;
    let (a2, b2) = g.try_endpoints(f).ok_or(SeparationError::UnknownEdge(f))?;
    if g.edges_touch(e, f) {
        return Ok(Separation::NotSeparated);
    }
    let n = g.vertex_count();
    let mut search = Search {
        g,
        e,
        f,
        a2,
        b2,
        target: b1,
        blocked: vec![false; n],
        vertices: vec![a1],
        edges: Vec::new(),
        sorted_incident: g
            .vertices()
            .map(|v| {
                let mut inc = g.incident(v).to_vec();
                inc.sort();
                inc
            })
            .collect(),
        budget,
    };
    search.blocked[a1.0] = true;
    if !search.f_ends_connected() {
        return Ok(Separation::NotSeparated);
    }
    for length in 1..n {
        if let Some(w) = search.deepen(length)? {
            return Ok(Separation::Separated(w));
        }
    }
    Ok(Separation::NotSeparated)
}

struct Search<'a> {
    g: &'a Multigraph,
    e: EdgeId,
    f: EdgeId,
    a2: VertexId,
    b2: VertexId,
    target: VertexId,
    blocked: Vec<bool>,
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    sorted_incident: Vec<Vec<EdgeId>>,
    budget: &'a mut Budget,
}

impl Search<'_> {
    /// Shortest `a2 b2` path in `g - f` avoiding blocked vertices.
    fn f_path(&self) -> Option<Vec<EdgeId>> {
        let n = self.g.vertex_count();
        let mut via: Vec<Option<EdgeId>> = vec![None; n];
        let mut seen = vec![false; n];
        seen[self.a2.0] = true;
        let mut queue = VecDeque::from([self.a2]);
        while let Some(v) = queue.pop_front() {
            if v == self.b2 {
                let mut out = Vec::new();
                let mut cur = v;
                while let Some(e) = via[cur.0] {
                    out.push(e);
                    cur = self.g.other_end(e, cur);
                }
                out.reverse();
                return Some(out);
            }
            for &e in &self.sorted_incident[v.0] {
                let w = self.g.other_end(e, v);
                if e != self.f && !seen[w.0] && !self.blocked[w.0] {
                    seen[w.0] = true;
                    via[w.0] = Some(e);
                    queue.push_back(w);
                }
            }
        }
        None
    }

    fn f_ends_connected(&self) -> bool {
        self.f_path().is_some()
    }

    fn deepen(&mut self, remaining: usize) -> Result<Option<SeparationWitness>, BudgetExhausted> {
        self.budget.tick()?;
        let tip = *self.vertices.last().expect("path starts at a1");
        for k in 0..self.sorted_incident[tip.0].len() {
            let h = self.sorted_incident[tip.0][k];
            if h == self.e || h == self.f {
                continue;
            }
            let w = self.g.other_end(h, tip);
            if w == self.target {
                if remaining != 1 {
                    continue;
                }
                self.blocked[w.0] = true;
                let closing = self.f_path();
                self.blocked[w.0] = false;
                if let Some(fp) = closing {
                    let mut ce = self.edges.clone();
                    ce.push(h);
                    ce.push(self.e);
                    let mut cf = fp;
                    cf.push(self.f);
                    let start = self.vertices[0];
                    return Ok(Some(SeparationWitness {
                        cycle_e: Path::from_edges(self.g, start, &ce),
                        cycle_f: Path::from_edges(self.g, self.a2, &cf),
                    }));
                }
                continue;
            }
            if remaining == 1 || self.blocked[w.0] || w == self.a2 || w == self.b2 {
                continue;
            }
            self.blocked[w.0] = true;
            if self.f_ends_connected() {
                self.vertices.push(w);
                self.edges.push(h);
                let found = self.deepen(remaining - 1)?;
                self.vertices.pop();
                self.edges.pop();
                if found.is_some() {
                    self.blocked[w.0] = false;
                    return Ok(found);
                }
            }
            self.blocked[w.0] = false;
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete_bipartite;
    use crate::generators::siran_labels::*;
    use crate::generators::{complete, siran};

    fn edge(g: &Multigraph, a: usize, b: usize) -> EdgeId {
        g.edges_between(VertexId(a), VertexId(b))[0]
    }

    #[test]
    fn siran_pairs() {
        let g = siran();
        let p = EdgePair::new(edge(&g, U, X), edge(&g, W, Z)).unwrap();
        match separated_by_cycles(&g, p).unwrap() {
            Separation::Separated(w) => {
                w.verify(&g, p).unwrap();
                assert_eq!(w.cycle_e.len() + w.cycle_f.len(), 6);
            }
            Separation::NotSeparated => panic!("ux and wz lie on disjoint triangles"),
        }
        let q = EdgePair::new(edge(&g, U, Y), edge(&g, W, Z)).unwrap();
        assert_eq!(separated_by_cycles(&g, q).unwrap(), Separation::NotSeparated);
    }

    #[test]
    fn adjacent_edges_are_never_separated() {
        let g = complete(6);
        let p = EdgePair::new(EdgeId(0), EdgeId(1)).unwrap();
        assert_eq!(separated_by_cycles(&g, p).unwrap(), Separation::NotSeparated);
    }

    #[test]
    fn k6_disjoint_triangles() {
        let g = complete(6);
        let p = EdgePair::new(edge(&g, 0, 1), edge(&g, 2, 3)).unwrap();
        let s = separated_by_cycles(&g, p).unwrap();
        s.witness().unwrap().verify(&g, p).unwrap();
    }

    #[test]
    fn k34_is_never_separated() {
        let g = complete_bipartite(3, 4);
        for e in g.edge_ids() {
            for f in g.edge_ids().filter(|&f| f > e) {
                let p = EdgePair::new(e, f).unwrap();
                assert_eq!(separated_by_cycles(&g, p).unwrap(), Separation::NotSeparated);
            }
        }
    }

    #[test]
    fn digon_counts_as_a_cycle() {
        let g = Multigraph::build(4, [(0, 1), (0, 1), (2, 3), (2, 3)]).unwrap();
        let p = EdgePair::new(EdgeId(0), EdgeId(2)).unwrap();
        assert!(separated_by_cycles(&g, p).unwrap().is_separated());
    }

    #[test]
    fn budget_cuts_off() {
        let g = complete(8);
        let p = EdgePair::new(edge(&g, 0, 1), edge(&g, 2, 3)).unwrap();
        assert!(matches!(
            separated_by_cycles_with_budget(&g, p, &mut Budget::new(0)),
            Err(SeparationError::Budget(_))
        ));
    }
}
