//! Bridges of a subgraph, overlap on a cycle, and the cofacial-or-detached
//! dichotomy for two vertices (or a vertex and an edge) of a planar graph.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{cycles_within, EdgeId, Multigraph, Path, Subgraph, VertexId};
use crate::planarity::{test_planarity, Face, Planarity, RotationSystem};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BridgeError {
    #[error("a bridge cannot be compared with itself")]
    SameBridge,
    #[error("input graph is not planar")]
    NonPlanarInput,
    #[error("the two query vertices coincide")]
    SameVertex,
    #[error("{0} is an end of the query edge")]
    EndOfEdge(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("unknown edge {0}")]
    UnknownEdge(EdgeId),
    #[error("neither a common face nor a detaching cycle was found")]
    NoArm,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub enum BridgeKind {
    Chord,
    Component,
}

/// One bridge of a subgraph `H`: a chord of `H`, or a component of `G - V(H)`
/// together with its edges to `H`. All lists are sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bridge {
    pub kind: BridgeKind,
    pub attachments: Vec<VertexId>,
    pub nucleus: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl Bridge {
    pub fn in_nucleus(&self, v: VertexId) -> bool {
        self.nucleus.binary_search(&v).is_ok()
    }

    pub fn is_attachment(&self, v: VertexId) -> bool {
        self.attachments.binary_search(&v).is_ok()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.in_nucleus(v) || self.is_attachment(v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn subgraph(&self, g: &Multigraph) -> Subgraph {
        let mut s = Subgraph::from_edges(g, self.edges.iter().copied());
        for &v in &self.nucleus {
            s.insert_vertex(v);
        }
        s
    }
}

/// The `H`-bridges of `g`, ordered by smallest edge id (edgeless
/// components last, by vertex).
pub fn decompose(g: &Multigraph, h: &Subgraph) -> Vec<Bridge> {
    let n = g.vertex_count();
    let in_h = |v: VertexId| h.contains_vertex(v);
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<VertexId>> = Vec::new();
    for s in g.vertices().filter(|&v| !in_h(v)) {
        if comp[s.0] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![s];
        comp[s.0] = id;
        let mut i = 0;
        while i < members.len() {
            let v = members[i];
            i += 1;
            for w in g.neighbors(v) {
                if !in_h(w) && comp[w.0] == usize::MAX {
                    comp[w.0] = id;
                    members.push(w);
                }
            }
        }
        members.sort();
        comps.push(members);
    }
    let mut edges_of: Vec<Vec<EdgeId>> = vec![Vec::new(); comps.len()];
    let mut atts_of: Vec<Vec<VertexId>> = vec![Vec::new(); comps.len()];
    let mut out = Vec::new();
    for (e, a, b) in g.edges() {
        if h.contains_edge(e) {
            continue;
        }
        match (in_h(a), in_h(b)) {
            (true, true) => out.push(Bridge {
                kind: BridgeKind::Chord,
                attachments: if a < b { vec![a, b] } else { vec![b, a] },
                nucleus: Vec::new(),
                edges: vec![e],
            }),
            (false, _) => {
                let c = comp[a.0];
                edges_of[c].push(e);
                if in_h(b) {
                    atts_of[c].push(b);
                }
            }
            (true, false) => {
                let c = comp[b.0];
                edges_of[c].push(e);
                atts_of[c].push(a);
            }
        }
    }
    for ((nucleus, edges), mut attachments) in comps.into_iter().zip(edges_of).zip(atts_of) {
        attachments.sort();
        attachments.dedup();
        out.push(Bridge {
            kind: BridgeKind::Component,
            attachments,
            nucleus,
            edges,
        });
    }
    out.sort_by(|x, y| match (x.edges.first(), y.edges.first()) {
        (Some(a), Some(b)) => a.cmp(b),
        (Some(_), None) => std::cmp::Ordering::Less,
        (None, Some(_)) => std::cmp::Ordering::Greater,
        (None, None) => x.nucleus.cmp(&y.nucleus),
    });
    debug_assert!(partitions_complement(g, h, &out));
    out
}

/// The bridges' edge sets partition `E(g) \ E(h)`.
pub fn partitions_complement(g: &Multigraph, h: &Subgraph, bridges: &[Bridge]) -> bool {
    let mut seen = vec![false; g.edge_bound()];
    for b in bridges {
        for &e in &b.edges {
            if h.contains_edge(e) || seen[e.0] {
                return false;
            }
            seen[e.0] = true;
        }
    }
    g.edge_ids().all(|e| seen[e.0] != h.contains_edge(e))
}

pub fn bridge_with_nucleus_vertex(bridges: &[Bridge], v: VertexId) -> Option<usize> {
    bridges.iter().position(|b| b.in_nucleus(v))
}

pub fn bridge_with_edge(bridges: &[Bridge], e: EdgeId) -> Option<usize> {
    bridges.iter().position(|b| b.contains_edge(e))
}

/// Re-roots a cycle at its smallest vertex, heading toward the smaller of
/// that vertex's two cycle neighbours (by edge id for a digon).
pub fn normalize_cycle(c: &Path) -> Path {
    let k = c.len();
    let vs = c.distinct_vertices();
    let start = (0..k).min_by_key(|&i| vs[i]).expect("nonempty cycle");
    let next = vs[(start + 1) % k];
    let prev = vs[(start + k - 1) % k];
    let forward = if next != prev {
        next < prev
    } else {
        c.edges[start] < c.edges[(start + k - 1) % k]
    };
    let mut vertices = Vec::with_capacity(k + 1);
    let mut edges = Vec::with_capacity(k);
    for step in 0..k {
        if forward {
            vertices.push(vs[(start + step) % k]);
            edges.push(c.edges[(start + step) % k]);
        } else {
            vertices.push(vs[(start + k - step) % k]);
            edges.push(c.edges[(start + 2 * k - step - 1) % k]);
        }
    }
    vertices.push(vertices[0]);
    Path { vertices, edges }
}

/// Position of each vertex along a cycle.
#[derive(Clone, Debug)]
pub struct CyclicOrder {
    order: Vec<VertexId>,
    pos: std::collections::HashMap<VertexId, usize>,
}

impl CyclicOrder {
    pub fn new(c: &Path) -> Self {
        let order = c.distinct_vertices().to_vec();
        let pos = order.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        Self { order, pos }
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.pos.get(&v).copied()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.order
    }

    /// `x` and `y` lie in different open arcs of the cycle between `a` and `b`.
    pub fn separates(&self, a: VertexId, b: VertexId, x: VertexId, y: VertexId) -> bool {
        let (Some(pa), Some(pb), Some(px), Some(py)) =
            (self.position(a), self.position(b), self.position(x), self.position(y))
        else {
            return false;
        };
        let (lo, hi) = (pa.min(pb), pa.max(pb));
        if pa == pb || [px, py].iter().any(|&p| p == lo || p == hi) {
            return false;
        }
        let inside = |p: usize| lo < p && p < hi;
        inside(px) != inside(py)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum OverlapWitness {
    /// `a, b` attach the first bridge and `x, y` the second, in this cyclic
    /// order `a, x, b, y`.
    Interleaved {
        a: VertexId,
        x: VertexId,
        b: VertexId,
        y: VertexId,
    },
    ThreeCommon([VertexId; 3]),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OverlapVerdict {
    pub overlapping: bool,
    pub witness: Option<OverlapWitness>,
}

impl OverlapVerdict {
    /// Re-checks the witness against the two bridges and the cycle.
    pub fn verify(&self, b1: &Bridge, b2: &Bridge, c: &Path) -> bool {
        let order = CyclicOrder::new(c);
        let on_c = |v: &VertexId| order.position(*v).is_some();
        match (&self.witness, self.overlapping) {
            (None, false) => overlap(b1, b2, c).map(|v| !v.overlapping).unwrap_or(false),
            (Some(OverlapWitness::Interleaved { a, x, b, y }), true) => {
                b1.is_attachment(*a)
                    && b1.is_attachment(*b)
                    && b2.is_attachment(*x)
                    && b2.is_attachment(*y)
                    && order.separates(*a, *b, *x, *y)
            }
            (Some(OverlapWitness::ThreeCommon(vs)), true) => {
                let mut sorted = vs.to_vec();
                sorted.sort();
                sorted.dedup();
                sorted.len() == 3
                    && vs
                        .iter()
                        .all(|v| on_c(v) && b1.is_attachment(*v) && b2.is_attachment(*v))
            }
            _ => false,
        }
    }
}

/// Decides whether two bridges of the cycle `c` overlap.
pub fn overlap(b1: &Bridge, b2: &Bridge, c: &Path) -> Result<OverlapVerdict, BridgeError> {
    if b1 == b2 {
        return Err(BridgeError::SameBridge);
    }
    let order = CyclicOrder::new(c);
    let positions = |b: &Bridge| {
        let mut p: Vec<usize> = b.attachments.iter().filter_map(|&v| order.position(v)).collect();
        p.sort();
        p
    };
    let p1 = positions(b1);
    let p2 = positions(b2);
    let vs = order.vertices();
    for (i, &pa) in p1.iter().enumerate() {
        for &pb in &p1[i + 1..] {
            let x = p2.iter().find(|&&p| pa < p && p < pb);
            let y = p2
                .iter()
                .find(|&&p| p > pb)
                .or_else(|| p2.iter().find(|&&p| p < pa));
            if let (Some(&x), Some(&y)) = (x, y) {
                return Ok(OverlapVerdict {
                    overlapping: true,
                    witness: Some(OverlapWitness::Interleaved {
                        a: vs[pa],
                        x: vs[x],
                        b: vs[pb],
                        y: vs[y],
                    }),
                });
            }
        }
    }
    let common: Vec<VertexId> = p1.iter().filter(|p| p2.contains(p)).map(|&p| vs[p]).collect();
    if common.len() == 3 {
        return Ok(OverlapVerdict {
            overlapping: true,
            witness: Some(OverlapWitness::ThreeCommon([common[0], common[1], common[2]])),
        });
    }
    Ok(OverlapVerdict {
        overlapping: false,
        witness: None,
    })
}

/// A cycle with two overlapping bridges keeping the two query objects apart.
#[derive(Clone, Debug, Serialize)]
pub struct DetachingCycle {
    pub cycle: Path,
    /// The bridge whose nucleus holds the first query vertex.
    pub first: Bridge,
    /// The bridge holding the second query object.
    pub second: Bridge,
    pub overlap: OverlapVerdict,
}

#[derive(Clone, Debug)]
pub enum Cofaciality {
    /// `face` is `None` only when the two objects lie in different
    /// components, where any face of one can host the other.
    Cofacial {
        embedding: RotationSystem,
        face: Option<Face>,
    },
    Detached(DetachingCycle),
}

impl Cofaciality {
    pub fn is_cofacial(&self) -> bool {
        matches!(self, Cofaciality::Cofacial { .. })
    }
}

impl DetachingCycle {
    fn check(&self, g: &Multigraph, second_ok: impl Fn(&Bridge) -> bool, x: VertexId) -> Result<(), String> {
        self.cycle.validate_cycle(g).map_err(|e| e.to_string())?;
        let bridges = decompose(g, &Subgraph::from_path(g, &self.cycle));
        if !bridges.contains(&self.first) || !bridges.contains(&self.second) {
            return Err("listed bridges are not bridges of the cycle".into());
        }
        if self.first == self.second {
            return Err("the two bridges coincide".into());
        }
        if !self.first.in_nucleus(x) {
            return Err(format!("{x} is not in the first nucleus"));
        }
        if !second_ok(&self.second) {
            return Err("second bridge does not hold the second object".into());
        }
        if !self.overlap.overlapping || !self.overlap.verify(&self.first, &self.second, &self.cycle) {
            return Err("overlap witness does not check".into());
        }
        Ok(())
    }

    pub fn verify_vertices(&self, g: &Multigraph, x: VertexId, y: VertexId) -> Result<(), String> {
        self.check(g, |b| b.in_nucleus(y), x)
    }

    pub fn verify_vertex_edge(&self, g: &Multigraph, x: VertexId, f: EdgeId) -> Result<(), String> {
        self.check(g, |b| b.contains_edge(f), x)
    }
}

fn detaching_vv(g: &Multigraph, c: &Path, x: VertexId, y: VertexId) -> Option<DetachingCycle> {
    let bridges = decompose(g, &Subgraph::from_path(g, c));
    let bx = bridge_with_nucleus_vertex(&bridges, x)?;
    let by = bridge_with_nucleus_vertex(&bridges, y)?;
    if bx == by {
        return None;
    }
    let verdict = overlap(&bridges[bx], &bridges[by], c).ok()?;
    verdict.overlapping.then(|| DetachingCycle {
        cycle: c.clone(),
        first: bridges[bx].clone(),
        second: bridges[by].clone(),
        overlap: verdict,
    })
}

fn detaching_ve(g: &Multigraph, c: &Path, x: VertexId, f: EdgeId) -> Option<DetachingCycle> {
    let bridges = decompose(g, &Subgraph::from_path(g, c));
    let bx = bridge_with_nucleus_vertex(&bridges, x)?;
    let bf = bridge_with_edge(&bridges, f)?;
    if bx == bf {
        return None;
    }
    let verdict = overlap(&bridges[bx], &bridges[bf], c).ok()?;
    verdict.overlapping.then(|| DetachingCycle {
        cycle: c.clone(),
        first: bridges[bx].clone(),
        second: bridges[bf].clone(),
        overlap: verdict,
    })
}

fn face_with(r: &RotationSystem, pred: impl Fn(&Face) -> bool) -> Option<Face> {
    r.trace_faces().into_iter().find(|f| pred(f))
}

/// Either an embedding of `g` with `x` and `y` on a common face, or a cycle
/// detaching `x` from `y`.
pub fn detaching_cycle_vv(g: &Multigraph, x: VertexId, y: VertexId) -> Result<Cofaciality, BridgeError> {
    for v in [x, y] {
        if v.0 >= g.vertex_count() {
            return Err(BridgeError::UnknownVertex(v));
        }
    }
    if x == y {
        return Err(BridgeError::SameVertex);
    }
    let (label, _) = g.components();
    if label[x.0] != label[y.0] {
        let embedding = test_planarity(g).embedding().ok_or(BridgeError::NonPlanarInput)?;
        return Ok(Cofaciality::Cofacial { embedding, face: None });
    }
    if g.adjacent(x, y) {
        let embedding = test_planarity(g).embedding().ok_or(BridgeError::NonPlanarInput)?;
        let face = face_with(&embedding, |f| f.contains_vertex(x) && f.contains_vertex(y));
        return Ok(Cofaciality::Cofacial { embedding, face });
    }
    if !crate::planarity::is_planar(g) {
        return Err(BridgeError::NonPlanarInput);
    }
    let mut with_apex = g.clone();
    let apex = with_apex.add_vertex();
    with_apex.add_edge(apex, x).expect("valid");
    with_apex.add_edge(apex, y).expect("valid");
    match test_planarity(&with_apex) {
        Planarity::Planar(r) => {
            let bound = g.edge_bound();
            let rotation = g
                .vertices()
                .map(|v| r.rotation(v).iter().copied().filter(|e| e.0 < bound).collect())
                .collect();
            let embedding = RotationSystem::new(g.clone(), rotation).expect("restriction of a rotation");
            let face = face_with(&embedding, |f| f.contains_vertex(x) && f.contains_vertex(y));
            debug_assert!(face.is_some());
            Ok(Cofaciality::Cofacial { embedding, face })
        }
        Planarity::NonPlanar(cert) => {
            let allowed = |v: VertexId| v != x && v != y;
            let inside = g.filter_edges(|e| cert.edges().binary_search(&e).is_ok());
            let found = cycles_within(&inside, allowed)
                .into_iter()
                .chain(cycles_within(g, allowed))
                .find_map(|c| detaching_vv(g, &normalize_cycle(&c), x, y));
            found.map(Cofaciality::Detached).ok_or(BridgeError::NoArm)
        }
    }
}

/// Either an embedding of `g` in which `x` and `f` share a face, or a cycle
/// with overlapping bridges, one holding `x` in its nucleus and the other
/// containing `f`.
pub fn detaching_cycle_ve(g: &Multigraph, x: VertexId, f: EdgeId) -> Result<Cofaciality, BridgeError> {
    if x.0 >= g.vertex_count() {
        return Err(BridgeError::UnknownVertex(x));
    }
    let (a, b) = g.try_endpoints(f).ok_or(BridgeError::UnknownEdge(f))?;
    if x == a || x == b {
        let embedding = test_planarity(g).embedding().ok_or(BridgeError::NonPlanarInput)?;
        let face = face_with(&embedding, |face| face.contains_edge(f));
        return Ok(Cofaciality::Cofacial { embedding, face });
    }
    let (sub, m, [h1, h2]) = g.subdivide(f).expect("edge exists");
    match detaching_cycle_vv(&sub, x, m)? {
        Cofaciality::Cofacial { embedding, face } => {
            let rotation = g
                .vertices()
                .map(|v| {
                    embedding
                        .rotation(v)
                        .iter()
                        .map(|&e| if e == h1 || e == h2 { f } else { e })
                        .collect()
                })
                .collect();
            let embedding = RotationSystem::new(g.clone(), rotation).expect("undoing a subdivision");
            let face = face.and_then(|_| face_with(&embedding, |face| face.contains_vertex(x) && face.contains_edge(f)));
            Ok(Cofaciality::Cofacial { embedding, face })
        }
        Cofaciality::Detached(d) => detaching_ve(g, &d.cycle, x, f)
            .map(Cofaciality::Detached)
            .ok_or(BridgeError::NoArm),
    }
}
