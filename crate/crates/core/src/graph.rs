//! Loop-free undirected multigraphs with stable edge identifiers, plus the
//! path, cycle and subgraph vocabulary used by every other module.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub usize);

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub usize);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge at input position {0} is a loop")]
    LoopEdge(usize),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("an edge pair needs two distinct edges, got {0} twice")]
    SameEdge(EdgeId),
}

/// Unordered pair of distinct edges, stored with `e < f`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EdgePair {
    e: EdgeId,
    f: EdgeId,
}

impl EdgePair {
    pub fn new(a: EdgeId, b: EdgeId) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Self { e: a, f: b }),
            std::cmp::Ordering::Greater => Ok(Self { e: b, f: a }),
            std::cmp::Ordering::Equal => Err(GraphError::SameEdge(a)),
        }
    }

    pub fn e(&self) -> EdgeId {
        self.e
    }

    pub fn f(&self) -> EdgeId {
        self.f
    }

    pub fn contains(&self, x: EdgeId) -> bool {
        self.e == x || self.f == x
    }
}

impl fmt::Display for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.e, self.f)
    }
}

/// A loop-free multigraph. Vertex ids are `0..vertex_count()`; edge ids are
/// assigned in insertion order and survive deletion of other edges.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Multigraph {
    edges: Vec<Option<(VertexId, VertexId)>>,
    adjacency: Vec<Vec<EdgeId>>,
    live_edges: usize,
}

impl Multigraph {
    pub fn new(vertex_count: usize) -> Self {
        Self {
            edges: Vec::new(),
            adjacency: vec![Vec::new(); vertex_count],
            live_edges: 0,
        }
    }

    /// Builds a graph from endpoint pairs; the vertex count grows to cover
    /// every endpoint mentioned. Edge `i` of the input gets id `i`.
    pub fn build<I>(vertex_count: usize, pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::new(vertex_count);
        for (position, (u, v)) in pairs.into_iter().enumerate() {
            if u == v {
                return Err(GraphError::LoopEdge(position));
            }
            let needed = u.max(v) + 1;
            while g.adjacency.len() < needed {
                g.adjacency.push(Vec::new());
            }
            g.push_edge(VertexId(u), VertexId(v));
        }
        Ok(g)
    }

    /// Rebuilds a graph from explicit edge slots; `None` slots are ids that are
    /// not (or no longer) present.
    pub fn from_slots(vertex_count: usize, slots: Vec<Option<(VertexId, VertexId)>>) -> Self {
        let mut adjacency = vec![Vec::new(); vertex_count];
        let mut live_edges = 0;
        for (i, slot) in slots.iter().enumerate() {
            if let Some((u, v)) = *slot {
                assert!(u != v, "loop in edge slot {i}");
                adjacency[u.0].push(EdgeId(i));
                adjacency[v.0].push(EdgeId(i));
                live_edges += 1;
            }
        }
        Self {
            edges: slots,
            adjacency,
            live_edges,
        }
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId) -> EdgeId {
        let id = EdgeId(self.edges.len());
        self.edges.push(Some((u, v)));
        self.adjacency[u.0].push(id);
        self.adjacency[v.0].push(id);
        self.live_edges += 1;
        id
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.adjacency.push(Vec::new());
        VertexId(self.adjacency.len() - 1)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::LoopEdge(self.edges.len()));
        }
        Ok(self.push_edge(u, v))
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v.0 < self.adjacency.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.adjacency.len()).map(VertexId)
    }

    /// Number of edges currently present.
    pub fn edge_count(&self) -> usize {
        self.live_edges
    }

    /// One past the largest edge id ever assigned.
    pub fn edge_bound(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (EdgeId, VertexId, VertexId)> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, s)| s.map(|(u, v)| (EdgeId(i), u, v)))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges().map(|(e, _, _)| e)
    }

    pub fn slots(&self) -> &[Option<(VertexId, VertexId)>] {
        &self.edges
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        matches!(self.edges.get(e.0), Some(Some(_)))
    }

    pub fn try_endpoints(&self, e: EdgeId) -> Option<(VertexId, VertexId)> {
        self.edges.get(e.0).copied().flatten()
    }

    /// Endpoints of a present edge.
    ///
    /// Panics if `e` is not in the graph.
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.try_endpoints(e)
            .unwrap_or_else(|| panic!("edge {e} is not in the graph"))
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.endpoints(e);
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v, "{v} is not an end of {e}");
            a
        }
    }

    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.adjacency[v.0]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v.0].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency[v.0].iter().map(move |&e| self.other_end(e, v))
    }

    pub fn edges_between(&self, u: VertexId, v: VertexId) -> Vec<EdgeId> {
        self.adjacency[u.0]
            .iter()
            .copied()
            .filter(|&e| self.other_end(e, u) == v)
            .collect()
    }

    pub fn adjacent(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u.0].iter().any(|&e| self.other_end(e, u) == v)
    }

    /// True when the two edges share an endpoint.
    pub fn edges_touch(&self, e: EdgeId, f: EdgeId) -> bool {
        let (a, b) = self.endpoints(e);
        let (c, d) = self.endpoints(f);
        a == c || a == d || b == c || b == d
    }

    /// Same vertex set with the listed edges removed; surviving edges keep ids.
    pub fn delete_edges(&self, ids: &[EdgeId]) -> Result<Self, GraphError> {
        let mut slots = self.edges.clone();
        for &e in ids {
            match slots.get_mut(e.0) {
                Some(slot @ Some(_)) => *slot = None,
                _ => return Err(GraphError::UnknownEdge(e)),
            }
        }
        Ok(Self::from_slots(self.vertex_count(), slots))
    }

    /// Spanning subgraph keeping exactly the edges for which `keep` holds.
    pub fn filter_edges(&self, mut keep: impl FnMut(EdgeId) -> bool) -> Self {
        let slots = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, s)| s.filter(|_| keep(EdgeId(i))))
            .collect();
        Self::from_slots(self.vertex_count(), slots)
    }

    pub fn spanning_subgraph(&self, sub: &Subgraph) -> Self {
        self.filter_edges(|e| sub.contains_edge(e))
    }

    pub fn is_simple(&self) -> bool {
        self.parallel_extras().is_empty()
    }

    /// Every edge that has a parallel twin with a smaller id.
    pub fn parallel_extras(&self) -> Vec<EdgeId> {
        let mut seen = std::collections::HashSet::new();
        let mut extras = Vec::new();
        for (e, u, v) in self.edges() {
            let key = if u < v { (u, v) } else { (v, u) };
            if !seen.insert(key) {
                extras.push(e);
            }
        }
        extras
    }

    /// Drops parallel duplicates, keeping the lowest id of each class.
    pub fn simplify(&self) -> Self {
        let extras = self.parallel_extras();
        self.delete_edges(&extras).expect("extras are present edges")
    }

    /// Component label per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(VertexId(s));
            while let Some(v) = queue.pop_front() {
                for w in self.neighbors(v) {
                    if label[w.0] == usize::MAX {
                        label[w.0] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 <= 1
    }

    /// Vertices with at least one incident edge.
    pub fn non_isolated_count(&self) -> usize {
        self.adjacency.iter().filter(|a| !a.is_empty()).count()
    }

    /// Replaces edge `e` by a path through a fresh vertex. Returns the new
    /// vertex and the two new edge ids (toward the first and second end).
    pub fn subdivide(&self, e: EdgeId) -> Result<(Self, VertexId, [EdgeId; 2]), GraphError> {
        let (a, b) = self.try_endpoints(e).ok_or(GraphError::UnknownEdge(e))?;
        let mut g = self.delete_edges(&[e])?;
        let m = g.add_vertex();
        let ea = g.push_edge(a, m);
        let eb = g.push_edge(m, b);
        Ok((g, m, [ea, eb]))
    }
}

/// Edge and vertex subset of a host graph, stored as dense masks.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Subgraph {
    vertices: Vec<bool>,
    edges: Vec<bool>,
}

impl Subgraph {
    pub fn empty(g: &Multigraph) -> Self {
        Self {
            vertices: vec![false; g.vertex_count()],
            edges: vec![false; g.edge_bound()],
        }
    }

    /// The edges plus their endpoints.
    pub fn from_edges(g: &Multigraph, edges: impl IntoIterator<Item = EdgeId>) -> Self {
        let mut s = Self::empty(g);
        for e in edges {
            s.insert_edge(g, e);
        }
        s
    }

    pub fn from_path(g: &Multigraph, p: &Path) -> Self {
        let mut s = Self::from_edges(g, p.edges.iter().copied());
        for &v in &p.vertices {
            s.insert_vertex(v);
        }
        s
    }

    pub fn insert_vertex(&mut self, v: VertexId) {
        if v.0 >= self.vertices.len() {
            self.vertices.resize(v.0 + 1, false);
        }
        self.vertices[v.0] = true;
    }

    pub fn insert_edge(&mut self, g: &Multigraph, e: EdgeId) {
        let (a, b) = g.endpoints(e);
        if e.0 >= self.edges.len() {
            self.edges.resize(e.0 + 1, false);
        }
        self.edges[e.0] = true;
        self.insert_vertex(a);
        self.insert_vertex(b);
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.get(v.0).copied().unwrap_or(false)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.get(e.0).copied().unwrap_or(false)
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| VertexId(i))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| EdgeId(i))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.iter().filter(|&&b| b).count()
    }

    pub fn union(&self, other: &Self) -> Self {
        let zip = |a: &[bool], b: &[bool]| {
            (0..a.len().max(b.len()))
                .map(|i| a.get(i).copied().unwrap_or(false) || b.get(i).copied().unwrap_or(false))
                .collect()
        };
        Self {
            vertices: zip(&self.vertices, &other.vertices),
            edges: zip(&self.edges, &other.edges),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("path needs exactly one more vertex than edges")]
    Shape,
    #[error("edge {0} is not in the graph")]
    MissingEdge(EdgeId),
    #[error("edge {edge} does not join {a} and {b}")]
    Mismatch {
        edge: EdgeId,
        a: VertexId,
        b: VertexId,
    },
    #[error("vertex {0} repeats")]
    RepeatedVertex(VertexId),
    #[error("edge {0} repeats")]
    RepeatedEdge(EdgeId),
    #[error("a cycle needs at least two edges and equal ends")]
    NotClosed,
}

/// Alternating vertex/edge sequence. A cycle is the closed variant: the first
/// vertex is repeated at the end and nowhere else.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Self {
            vertices: vec![v],
            edges: Vec::new(),
        }
    }

    /// Walks `edges` starting from `start`.
    pub fn from_edges(g: &Multigraph, start: VertexId, edges: &[EdgeId]) -> Self {
        let mut vertices = vec![start];
        let mut cur = start;
        for &e in edges {
            cur = g.other_end(e, cur);
            vertices.push(cur);
        }
        Self {
            vertices,
            edges: edges.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn end(&self) -> VertexId {
        *self.vertices.last().expect("paths have at least one vertex")
    }

    pub fn is_closed(&self) -> bool {
        self.edges.len() >= 2 && self.start() == self.end()
    }

    /// Vertices without the repeated closing vertex of a cycle.
    pub fn distinct_vertices(&self) -> &[VertexId] {
        if self.is_closed() {
            &self.vertices[..self.vertices.len() - 1]
        } else {
            &self.vertices
        }
    }

    pub fn internal_vertices(&self) -> &[VertexId] {
        if self.vertices.len() <= 2 {
            &[]
        } else {
            &self.vertices[1..self.vertices.len() - 1]
        }
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.vertices.contains(&v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.contains(&e)
    }

    fn check_links(&self, g: &Multigraph) -> Result<(), PathError> {
        if self.vertices.len() != self.edges.len() + 1 {
            return Err(PathError::Shape);
        }
        for (i, &e) in self.edges.iter().enumerate() {
            let (a, b) = g.try_endpoints(e).ok_or(PathError::MissingEdge(e))?;
            let (x, y) = (self.vertices[i], self.vertices[i + 1]);
            if !((a == x && b == y) || (a == y && b == x)) {
                return Err(PathError::Mismatch { edge: e, a: x, b: y });
            }
        }
        let mut edges = self.edges.clone();
        edges.sort();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(PathError::RepeatedEdge(w[0]));
        }
        Ok(())
    }

    fn check_distinct(vs: &[VertexId]) -> Result<(), PathError> {
        let mut sorted = vs.to_vec();
        sorted.sort();
        match sorted.windows(2).find(|w| w[0] == w[1]) {
            Some(w) => Err(PathError::RepeatedVertex(w[0])),
            None => Ok(()),
        }
    }

    /// Checks the open-path invariants against `g`.
    pub fn validate_path(&self, g: &Multigraph) -> Result<(), PathError> {
        self.check_links(g)?;
        Self::check_distinct(&self.vertices)
    }

    /// Checks the cycle invariants against `g`.
    pub fn validate_cycle(&self, g: &Multigraph) -> Result<(), PathError> {
        self.check_links(g)?;
        if !self.is_closed() {
            return Err(PathError::NotClosed);
        }
        Self::check_distinct(self.distinct_vertices())
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, "-")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Lazily yields every `H`-avoiding `s`-`t` path in lexicographic order of
/// edge-id sequences. The ends may lie in `H`; no edge and no internal vertex
/// may.
pub struct AvoidingPaths<'a> {
    g: &'a Multigraph,
    h: &'a Subgraph,
    target: VertexId,
    on_path: Vec<bool>,
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    // Per depth: sorted candidate edges at the current tip and the next index.
    frames: Vec<(Vec<EdgeId>, usize)>,
    trivial: Option<VertexId>,
    started: bool,
}

pub fn avoiding_paths<'a>(
    g: &'a Multigraph,
    h: &'a Subgraph,
    s: VertexId,
    t: VertexId,
) -> AvoidingPaths<'a> {
    let mut on_path = vec![false; g.vertex_count()];
    on_path[s.0] = true;
    AvoidingPaths {
        g,
        h,
        target: t,
        on_path,
        vertices: vec![s],
        edges: Vec::new(),
        frames: Vec::new(),
        trivial: (s == t).then_some(s),
        started: false,
    }
}

impl AvoidingPaths<'_> {
    fn candidates(&self, v: VertexId) -> Vec<EdgeId> {
        let mut c: Vec<EdgeId> = self
            .g
            .incident(v)
            .iter()
            .copied()
            .filter(|&e| !self.h.contains_edge(e))
            .collect();
        c.sort();
        c
    }
}

impl Iterator for AvoidingPaths<'_> {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if let Some(v) = self.trivial.take() {
            self.started = true;
            self.frames.clear();
            return Some(Path::trivial(v));
        }
        if !self.started {
            self.started = true;
            let c = self.candidates(self.vertices[0]);
            self.frames.push((c, 0));
        }
        while let Some((cands, idx)) = self.frames.last_mut() {
            if *idx >= cands.len() {
                self.frames.pop();
                if self.edges.pop().is_some() {
                    let v = self.vertices.pop().expect("vertex per edge");
                    self.on_path[v.0] = false;
                }
                continue;
            }
            let e = cands[*idx];
            *idx += 1;
            let tip = *self.vertices.last().expect("nonempty");
            let w = self.g.other_end(e, tip);
            if self.on_path[w.0] {
                continue;
            }
            if w == self.target {
                let mut vertices = self.vertices.clone();
                vertices.push(w);
                let mut edges = self.edges.clone();
                edges.push(e);
                let p = Path { vertices, edges };
                debug_assert!(p.validate_path(self.g).is_ok());
                return Some(p);
            }
            if self.h.contains_vertex(w) {
                continue;
            }
            self.on_path[w.0] = true;
            self.vertices.push(w);
            self.edges.push(e);
            let c = self.candidates(w);
            self.frames.push((c, 0));
        }
        None
    }
}

/// Every cycle of `g` whose vertices all satisfy `allowed`, each reported once
/// (sorted by length, then by edge-id sequence from its smallest vertex).
pub fn cycles_within(g: &Multigraph, allowed: impl Fn(VertexId) -> bool) -> Vec<Path> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    for s in g.vertices().filter(|&v| allowed(v)) {
        // cycles whose smallest vertex is s
        let mut vertices = vec![s];
        let mut edges: Vec<EdgeId> = Vec::new();
        on_path[s.0] = true;
        cycle_dfs(g, s, &allowed, &mut on_path, &mut vertices, &mut edges, &mut out);
        on_path[s.0] = false;
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.edges.cmp(&b.edges)));
    out
}

fn cycle_dfs(
    g: &Multigraph,
    s: VertexId,
    allowed: &impl Fn(VertexId) -> bool,
    on_path: &mut [bool],
    vertices: &mut Vec<VertexId>,
    edges: &mut Vec<EdgeId>,
    out: &mut Vec<Path>,
) {
    let tip = *vertices.last().expect("nonempty");
    let mut inc: Vec<EdgeId> = g.incident(tip).to_vec();
    inc.sort();
    for e in inc {
        if edges.last() == Some(&e) {
            continue;
        }
        let w = g.other_end(e, tip);
        if w == s && !edges.is_empty() {
            // report each cycle in one direction only
            let first = edges[0];
            let keep = if edges.len() == 1 {
                first < e
            } else {
                vertices[1] < vertices[vertices.len() - 1]
            };
            if keep {
                let mut vs = vertices.clone();
                vs.push(s);
                let mut es = edges.clone();
                es.push(e);
                out.push(Path {
                    vertices: vs,
                    edges: es,
                });
            }
            continue;
        }
        if w < s || on_path[w.0] || !allowed(w) {
            continue;
        }
        on_path[w.0] = true;
        vertices.push(w);
        edges.push(e);
        cycle_dfs(g, s, allowed, on_path, vertices, edges, out);
        edges.pop();
        vertices.pop();
        on_path[w.0] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4() -> Multigraph {
        Multigraph::build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn build_single_vertex() {
        let g = Multigraph::build(1, []).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn build_rejects_loop_with_position() {
        let err = Multigraph::build(3, [(0, 1), (1, 2), (2, 0), (1, 1)]).unwrap_err();
        assert_eq!(err, GraphError::LoopEdge(3));
    }

    #[test]
    fn build_grows_vertex_set() {
        let g = Multigraph::build(0, [(0, 5)]).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.degree(VertexId(5)), 1);
    }

    #[test]
    fn parallel_edges_are_kept_apart() {
        let g = Multigraph::build(2, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges_between(VertexId(0), VertexId(1)).len(), 3);
        assert_eq!(g.parallel_extras(), vec![EdgeId(1), EdgeId(2)]);
        assert!(g.simplify().is_simple());
        assert!(g.simplify().contains_edge(EdgeId(0)));
    }

    #[test]
    fn delete_keeps_ids() {
        let g = k4();
        let h = g.delete_edges(&[EdgeId(2)]).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert!(!h.contains_edge(EdgeId(2)));
        assert_eq!(h.endpoints(EdgeId(5)), (VertexId(2), VertexId(3)));
        assert_eq!(g.delete_edges(&[]).unwrap(), g);
        assert_eq!(
            g.delete_edges(&[EdgeId(9)]).unwrap_err(),
            GraphError::UnknownEdge(EdgeId(9))
        );
    }

    #[test]
    fn edge_pair_normalizes() {
        let p = EdgePair::new(EdgeId(5), EdgeId(2)).unwrap();
        assert_eq!((p.e(), p.f()), (EdgeId(2), EdgeId(5)));
        assert!(EdgePair::new(EdgeId(1), EdgeId(1)).is_err());
    }

    #[test]
    fn avoiding_trivial_path() {
        let g = k4();
        let h = Subgraph::empty(&g);
        let paths: Vec<_> = avoiding_paths(&g, &h, VertexId(2), VertexId(2)).collect();
        assert_eq!(paths, vec![Path::trivial(VertexId(2))]);
    }

    #[test]
    fn avoiding_edge_in_k4() {
        // a=0 b=1 c=2 d=3; H = edge ab
        let g = k4();
        let h = Subgraph::from_edges(&g, [EdgeId(0)]);
        let paths: Vec<Vec<usize>> = avoiding_paths(&g, &h, VertexId(0), VertexId(1))
            .map(|p| p.vertices.iter().map(|v| v.0).collect())
            .collect();
        assert_eq!(
            paths,
            vec![vec![0, 2, 1], vec![0, 2, 3, 1], vec![0, 3, 1], vec![0, 3, 2, 1]]
        );
    }

    #[test]
    fn cycles_of_k4() {
        let g = k4();
        let cycles = cycles_within(&g, |_| true);
        // 4 triangles + 3 four-cycles
        assert_eq!(cycles.len(), 7);
        for c in &cycles {
            c.validate_cycle(&g).unwrap();
        }
        let digon = Multigraph::build(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(cycles_within(&digon, |_| true).len(), 1);
    }

    #[test]
    fn subdivide_edge() {
        let g = k4();
        let (h, m, [a, b]) = g.subdivide(EdgeId(0)).unwrap();
        assert_eq!(h.vertex_count(), 5);
        assert_eq!(h.endpoints(a), (VertexId(0), m));
        assert_eq!(h.endpoints(b), (m, VertexId(1)));
        assert_eq!(h.edge_count(), 7);
    }
}
