//! Small-graph corpora and the equivalence sweep over them.
//!
//! Graphs are generated up to isomorphism by adding one edge at a time and
//! keeping canonical representatives. Canonical forms come from colour
//! refinement with individualization, taking the least adjacency code over
//! all leaves of the search tree.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::budget::Budget;
use crate::characterize::{check_theorem3_with, crossing_number_le_1_with, gadget_holds, CharacterizeError};
use crate::graph::{EdgeId, EdgePair, Multigraph};
use crate::kuratowski::{KuratowskiFamily, MAX_ENUMERATION_VERTICES};
use crate::parallel::{map, Parallelism};
use crate::planarity::is_planar;

/// Largest vertex count for canonical forms and exhaustive generation.
pub const MAX_CANONICAL_VERTICES: usize = 16;
/// Largest vertex count accepted for an exhaustive sweep.
pub const MAX_EXHAUSTIVE_VERTICES: usize = 8;
/// Largest vertex count accepted for a random sweep.
pub const MAX_RANDOM_VERTICES: usize = MAX_ENUMERATION_VERTICES;

/// A simple graph on at most 16 vertices as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u16>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_CANONICAL_VERTICES, "at most {MAX_CANONICAL_VERTICES} vertices");
        Self { n, adj: vec![0; n] }
    }

    /// Parallel edges collapse to one.
    pub fn from_multigraph(g: &Multigraph) -> Self {
        let mut s = Self::empty(g.vertex_count());
        for (_, u, v) in g.edges() {
            s.add_edge(u.0, v.0);
        }
        s
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph::build(self.n, self.edge_list()).expect("simple graphs have no loops")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let all = if self.n == 16 { u16::MAX } else { (1u16 << self.n) - 1 };
        let mut seen = 1u16;
        let mut frontier = 1u16;
        while frontier != 0 {
            let mut next = 0u16;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Upper-triangle adjacency code under `label`, where `label[v]` is the
    /// new name of `v`. Bit order: pairs `(i, j)`, `i < j`, row-major.
    fn code(&self, label: &[usize]) -> u128 {
        let mut inv = vec![0; self.n];
        for (v, &l) in label.iter().enumerate() {
            inv[l] = v;
        }
        let mut code = 0u128;
        for i in 0..self.n {
            for j in i + 1..self.n {
                code <<= 1;
                if self.has_edge(inv[i], inv[j]) {
                    code |= 1;
                }
            }
        }
        code
    }

    /// The isomorphism-invariant relabelled copy.
    pub fn canonical(&self) -> SimpleGraph {
        let label = canonical_labelling(self);
        let mut out = SimpleGraph::empty(self.n);
        for (u, v) in self.edge_list() {
            out.add_edge(label[u], label[v]);
        }
        out
    }

    pub fn canonical_code(&self) -> u128 {
        self.code(&canonical_labelling(self))
    }
}

type Partition = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into every cell until stable.
fn refine(g: &SimpleGraph, mut cells: Partition) -> Partition {
    loop {
        let mut cell_mask = Vec::with_capacity(cells.len());
        for c in &cells {
            cell_mask.push(c.iter().fold(0u16, |m, &v| m | 1 << v));
        }
        let mut next: Partition = Vec::with_capacity(cells.len());
        for c in &cells {
            if c.len() == 1 {
                next.push(c.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = c
                .iter()
                .map(|&v| (cell_mask.iter().map(|m| (g.adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|k| k.1).collect());
                    start = i;
                }
            }
        }
        if next.len() == cells.len() {
            return next;
        }
        cells = next;
    }
}

fn twins(g: &SimpleGraph, a: usize, b: usize) -> bool {
    let mask = !(1u16 << a | 1u16 << b);
    g.adj[a] & mask == g.adj[b] & mask
}

fn canonical_labelling(g: &SimpleGraph) -> Vec<usize> {
    let start = refine(g, vec![(0..g.n).collect()]);
    let mut best: Option<(u128, Vec<usize>)> = None;
    search(g, start, &mut best);
    best.map(|b| b.1).unwrap_or_default()
}

fn search(g: &SimpleGraph, cells: Partition, best: &mut Option<(u128, Vec<usize>)>) {
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let mut label = vec![0; g.n];
        for (pos, c) in cells.iter().enumerate() {
            label[c[0]] = pos;
        }
        let code = g.code(&label);
        if best.as_ref().map_or(true, |b| code < b.0) {
            *best = Some((code, label));
        }
        return;
    };
    let cell = &cells[t];
    let all_twins = cell.iter().all(|&a| cell.iter().all(|&b| a == b || twins(g, a, b)));
    let choices: &[usize] = if all_twins { &cell[..1] } else { cell };
    for &v in choices {
        let mut next = cells.clone();
        let rest: Vec<usize> = cell.iter().copied().filter(|&x| x != v).collect();
        next.splice(t..=t, [vec![v], rest]);
        search(g, refine(g, next), best);
    }
}

/// Every graph on `n` vertices up to isomorphism, in canonical form, ordered
/// by edge count and then by canonical code.
pub fn all_graphs(n: usize) -> Vec<SimpleGraph> {
    assert!(n <= MAX_CANONICAL_VERTICES);
    let mut out = Vec::new();
    let mut level: BTreeSet<(u128, SimpleGraph)> = BTreeSet::new();
    let empty = SimpleGraph::empty(n);
    level.insert((empty.canonical_code(), empty.canonical()));
    while !level.is_empty() {
        let mut next = BTreeSet::new();
        for (_, g) in &level {
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.add_edge(u, v);
                        let c = h.canonical();
                        next.insert((c.canonical_code(), c));
                    }
                }
            }
        }
        out.extend(std::mem::take(&mut level).into_iter().map(|(_, g)| g));
        level = next;
    }
    out
}

pub fn connected_graphs(n: usize) -> Vec<SimpleGraph> {
    all_graphs(n).into_iter().filter(SimpleGraph::is_connected).collect()
}

/// Uniform `G(n, m)` graph.
pub fn random_gnm<R: Rng>(n: usize, m: usize, rng: &mut R) -> SimpleGraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    assert!(m <= pairs.len(), "G({n}, {m}) has too many edges");
    let mut g = SimpleGraph::empty(n);
    for i in sample(rng, pairs.len(), m) {
        let (u, v) = pairs[i];
        g.add_edge(u, v);
    }
    g
}

/// Which graphs a sweep visits.
#[derive(Clone, Debug, Serialize)]
pub enum CorpusSpec {
    /// All graphs on `min_n..=max_n` vertices, optionally only connected ones.
    Exhaustive { min_n: usize, max_n: usize, connected_only: bool },
    /// `count` graphs `G(n, m)` with `n` uniform in `min_n..=max_n` and `m`
    /// uniform up to `max_m` (or all pairs).
    Random {
        count: usize,
        min_n: usize,
        max_n: usize,
        max_m: Option<usize>,
        seed: u64,
    },
}

impl CorpusSpec {
    fn within_limits(&self) -> Result<(), String> {
        match *self {
            CorpusSpec::Exhaustive { max_n, .. } if max_n > MAX_EXHAUSTIVE_VERTICES => Err(format!(
                "exhaustive corpora are limited to {MAX_EXHAUSTIVE_VERTICES} vertices"
            )),
            CorpusSpec::Random { max_n, .. } if max_n > MAX_RANDOM_VERTICES => {
                Err(format!("random corpora are limited to {MAX_RANDOM_VERTICES} vertices"))
            }
            CorpusSpec::Random { min_n, max_n, .. } | CorpusSpec::Exhaustive { min_n, max_n, .. }
                if min_n > max_n =>
            {
                Err("empty vertex range".into())
            }
            _ => Ok(()),
        }
    }

    pub fn graphs(&self) -> Vec<SimpleGraph> {
        match *self {
            CorpusSpec::Exhaustive { min_n, max_n, connected_only } => (min_n..=max_n)
                .flat_map(|n| if connected_only { connected_graphs(n) } else { all_graphs(n) })
                .collect(),
            CorpusSpec::Random { count, min_n, max_n, max_m, seed } => {
                let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
                (0..count)
                    .map(|_| {
                        let n = rng.gen_range(min_n..=max_n);
                        let all = n * n.saturating_sub(1) / 2;
                        let m = rng.gen_range(0..=max_m.unwrap_or(all).min(all));
                        random_gnm(n, m, &mut rng)
                    })
                    .collect()
            }
        }
    }
}

/// One pair on which the gadget and the two conditions disagree.
#[derive(Clone, Debug, Serialize)]
pub struct Inconsistency {
    pub graph: SimpleGraphView,
    pub pair: Option<EdgePair>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleGraphView {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl From<&SimpleGraph> for SimpleGraphView {
    fn from(g: &SimpleGraph) -> Self {
        Self { n: g.n, edges: g.edge_list() }
    }
}

impl SimpleGraphView {
    pub fn to_simple(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n);
        for &(u, v) in &self.edges {
            g.add_edge(u, v);
        }
        g
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepSummary {
    pub graphs: usize,
    pub nonplanar: usize,
    pub pairs_checked: usize,
    pub crossing_pairs: usize,
    pub crossing_number_one: usize,
    pub inconsistencies: Vec<Inconsistency>,
    /// Graphs whose budget ran out before all pairs were checked.
    pub budget_exhausted: usize,
    /// Set when the corpus itself exceeds the size limits.
    pub refused: Option<String>,
}

impl SweepSummary {
    pub fn consistent(&self) -> bool {
        self.inconsistencies.is_empty()
    }

    pub fn complete(&self) -> bool {
        self.budget_exhausted == 0 && self.refused.is_none()
    }

    /// The inconsistency on the fewest vertices, then fewest edges.
    pub fn minimal_inconsistency(&self) -> Option<&Inconsistency> {
        self.inconsistencies
            .iter()
            .min_by_key(|i| (i.graph.n, i.graph.edges.len()))
    }
}

#[derive(Default)]
struct GraphOutcome {
    nonplanar: bool,
    pairs_checked: usize,
    crossing_pairs: usize,
    crossing_number_one: bool,
    inconsistencies: Vec<Inconsistency>,
    budget_exhausted: bool,
}

#[derive(Copy, Clone, Debug)]
pub struct SweepOptions {
    pub parallelism: Parallelism,
    /// Step budget per graph.
    pub budget_steps: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            parallelism: Parallelism::default(),
            budget_steps: Budget::DEFAULT_STEPS,
        }
    }
}

/// Checks every vertex-disjoint pair of every nonplanar graph of the corpus
/// with the gadget and both conditions, and compares the crossing number one
/// decision with the existence of a crossing pair.
pub fn sweep(spec: &CorpusSpec, options: SweepOptions) -> SweepSummary {
    if let Err(reason) = spec.within_limits() {
        return SweepSummary {
            refused: Some(reason),
            ..Default::default()
        };
    }
    let graphs = spec.graphs();
    sweep_graphs(&graphs, options)
}

pub fn sweep_graphs(graphs: &[SimpleGraph], options: SweepOptions) -> SweepSummary {
    let outcomes = map(graphs, options.parallelism, |g| check_graph(g, options.budget_steps));
    let mut s = SweepSummary {
        graphs: graphs.len(),
        ..Default::default()
    };
    for o in outcomes {
        s.nonplanar += o.nonplanar as usize;
        s.pairs_checked += o.pairs_checked;
        s.crossing_pairs += o.crossing_pairs;
        s.crossing_number_one += o.crossing_number_one as usize;
        s.budget_exhausted += o.budget_exhausted as usize;
        s.inconsistencies.extend(o.inconsistencies);
    }
    s
}

fn check_graph(sg: &SimpleGraph, steps: u64) -> GraphOutcome {
    let g = sg.to_multigraph();
    let mut out = GraphOutcome::default();
    if is_planar(&g) {
        return out;
    }
    out.nonplanar = true;
    let view = SimpleGraphView::from(sg);
    let mut budget = Budget::new(steps);
    let family = match KuratowskiFamily::enumerate(&g, &mut budget) {
        Ok(f) => f,
        Err(_) => {
            out.budget_exhausted = true;
            return out;
        }
    };
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    let mut any_crossing = false;
    for (i, &e) in ids.iter().enumerate() {
        for &f in &ids[i + 1..] {
            let p = EdgePair::new(e, f).expect("distinct ids");
            if g.edges_touch(e, f) {
                // adjacent pairs are never crossing pairs; the gadget must agree
                if gadget_holds(&g, p) {
                    out.inconsistencies.push(Inconsistency {
                        graph: view.clone(),
                        pair: Some(p),
                        detail: "gadget accepts an adjacent pair".into(),
                    });
                }
                continue;
            }
            out.pairs_checked += 1;
            match check_theorem3_with(&g, &family, p, &mut budget) {
                Ok(r) => {
                    if r.cond_i {
                        out.crossing_pairs += 1;
                        any_crossing = true;
                    }
                }
                Err(CharacterizeError::Inconsistency(r)) => out.inconsistencies.push(Inconsistency {
                    graph: view.clone(),
                    pair: Some(p),
                    detail: format!(
                        "gadget {}, universal {}, existential {}",
                        r.cond_i, r.cond_ii.holds, r.cond_iii.holds
                    ),
                }),
                Err(e) if e.is_budget() => {
                    out.budget_exhausted = true;
                    return out;
                }
                Err(e) => out.inconsistencies.push(Inconsistency {
                    graph: view.clone(),
                    pair: Some(p),
                    detail: e.to_string(),
                }),
            }
        }
    }
    match crossing_number_le_1_with(&g, Parallelism::Sequential, steps) {
        Ok(v) => {
            out.crossing_number_one = v.crossing_number_bound() == 1;
            if out.crossing_number_one != any_crossing {
                out.inconsistencies.push(Inconsistency {
                    graph: view,
                    pair: None,
                    detail: format!(
                        "decision sweep says {} but the gadget {} a crossing pair",
                        v.label(),
                        if any_crossing { "finds" } else { "finds no" }
                    ),
                });
            }
        }
        Err(e) if e.is_budget() => out.budget_exhausted = true,
        Err(e) => out.inconsistencies.push(Inconsistency {
            graph: view,
            pair: None,
            detail: e.to_string(),
        }),
    }
    out
}
