//! Rotation systems (combinatorial embeddings) and face tracing.

use thiserror::Error;

use crate::graph::{EdgeId, Multigraph, Path, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation at {vertex} does not list its incident edges exactly once")]
    BadRotation { vertex: VertexId },
    #[error("rotation system has {0} vertices, graph has {1}")]
    WrongSize(usize, usize),
    #[error("rotation system fails the planar Euler check")]
    NotPlanarEmbedding,
}

/// An edge traversed away from `from`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub edge: EdgeId,
    pub from: VertexId,
}

/// Closed boundary walk of one face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn len(&self) -> usize {
        self.darts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.darts.iter().any(|d| d.from == v)
    }

    pub fn contains_edge(&self, e: EdgeId) -> bool {
        self.darts.iter().any(|d| d.edge == e)
    }

    pub fn contains_dart(&self, d: Dart) -> bool {
        self.darts.contains(&d)
    }

    /// Sorted edge ids on the boundary, with multiplicity.
    pub fn edge_multiset(&self) -> Vec<EdgeId> {
        let mut es: Vec<EdgeId> = self.darts.iter().map(|d| d.edge).collect();
        es.sort();
        es
    }
}

/// Cyclic order of incident edges around every vertex of a host graph.
///
/// Faces are traced by the rule: arriving at `v` along `e`, leave along the
/// edge following `e` in the rotation of `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationSystem {
    graph: Multigraph,
    rotation: Vec<Vec<EdgeId>>,
}

impl RotationSystem {
    pub fn new(graph: Multigraph, rotation: Vec<Vec<EdgeId>>) -> Result<Self, EmbeddingError> {
        if rotation.len() != graph.vertex_count() {
            return Err(EmbeddingError::WrongSize(rotation.len(), graph.vertex_count()));
        }
        for v in graph.vertices() {
            let mut want = graph.incident(v).to_vec();
            let mut got = rotation[v.0].clone();
            want.sort();
            got.sort();
            if want != got {
                return Err(EmbeddingError::BadRotation { vertex: v });
            }
        }
        Ok(Self { graph, rotation })
    }

    pub fn graph(&self) -> &Multigraph {
        &self.graph
    }

    pub fn rotation(&self, v: VertexId) -> &[EdgeId] {
        &self.rotation[v.0]
    }

    pub fn rotations(&self) -> &[Vec<EdgeId>] {
        &self.rotation
    }

    pub fn into_parts(self) -> (Multigraph, Vec<Vec<EdgeId>>) {
        (self.graph, self.rotation)
    }

    /// Mirror image: every rotation reversed.
    pub fn reflected(&self) -> Self {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().rev().copied().collect())
            .collect();
        Self {
            graph: self.graph.clone(),
            rotation,
        }
    }

    fn position(&self, v: VertexId, e: EdgeId) -> usize {
        self.rotation[v.0]
            .iter()
            .position(|&x| x == e)
            .unwrap_or_else(|| panic!("{e} not in rotation of {v}"))
    }

    /// Edge after `e` in the rotation at `v`.
    pub fn successor(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let r = &self.rotation[v.0];
        r[(self.position(v, e) + 1) % r.len()]
    }

    pub fn predecessor(&self, v: VertexId, e: EdgeId) -> EdgeId {
        let r = &self.rotation[v.0];
        r[(self.position(v, e) + r.len() - 1) % r.len()]
    }

    pub fn next_dart(&self, d: Dart) -> Dart {
        let to = self.graph.other_end(d.edge, d.from);
        Dart {
            edge: self.successor(to, d.edge),
            from: to,
        }
    }

    /// Traces every face regardless of planarity. Isolated vertices carry no
    /// walk.
    pub fn trace_faces(&self) -> Vec<Face> {
        let bound = self.graph.edge_bound();
        // side 0: dart leaving the first endpoint; side 1: the second
        let mut used = vec![[false; 2]; bound];
        let mut faces = Vec::new();
        for (e, a, b) in self.graph.edges() {
            for (side, from) in [(0usize, a), (1usize, b)] {
                if used[e.0][side] {
                    continue;
                }
                let start = Dart { edge: e, from };
                let mut darts = Vec::new();
                let mut d = start;
                loop {
                    let (x, _) = self.graph.endpoints(d.edge);
                    let s = usize::from(d.from != x);
                    debug_assert!(!used[d.edge.0][s]);
                    used[d.edge.0][s] = true;
                    darts.push(d);
                    d = self.next_dart(d);
                    if d == start {
                        break;
                    }
                }
                faces.push(Face { darts });
            }
        }
        faces
    }

    /// Per-component Euler check: summed over components,
    /// `V - E + F = 2C` with an isolated vertex counting as one face. After
    /// merging the outer faces of all components this is `V - E + F = 1 + C`.
    pub fn is_planar(&self) -> bool {
        let faces = self.trace_faces().len();
        let isolated = self.graph.vertices().filter(|&v| self.graph.degree(v) == 0).count();
        let (_, c) = self.graph.components();
        let v = self.graph.vertex_count() as i64;
        let e = self.graph.edge_count() as i64;
        v - e + (faces + isolated) as i64 == 2 * c as i64
    }

    /// Faces of a planar rotation system.
    pub fn faces(&self) -> Result<Vec<Face>, EmbeddingError> {
        if !self.is_planar() {
            return Err(EmbeddingError::NotPlanarEmbedding);
        }
        Ok(self.trace_faces())
    }

    /// Index of a face whose boundary is exactly the cycle `c`, traced in
    /// either direction. Returns the face and whether it runs in `c`'s order.
    pub fn face_bounded_by(&self, c: &Path) -> Option<(Face, bool)> {
        let mut want = c.edges.clone();
        want.sort();
        let forward = Dart {
            edge: c.edges[0],
            from: c.vertices[0],
        };
        let backward = Dart {
            edge: c.edges[0],
            from: c.vertices[1],
        };
        self.trace_faces().into_iter().find_map(|f| {
            if f.edge_multiset() != want {
                return None;
            }
            if f.contains_dart(forward) {
                Some((f, true))
            } else if f.contains_dart(backward) {
                Some((f, false))
            } else {
                None
            }
        })
    }

    /// Keeps only the edges of `sub` (a spanning subgraph of the host).
    pub fn restrict(&self, sub: &Multigraph) -> Self {
        let rotation = self
            .rotation
            .iter()
            .map(|r| r.iter().copied().filter(|&e| sub.contains_edge(e)).collect())
            .collect();
        Self {
            graph: sub.clone(),
            rotation,
        }
    }

    /// Face sets as sorted edge multisets; equal for two embeddings that are
    /// the same up to reflection.
    pub fn face_signature(&self) -> Vec<Vec<EdgeId>> {
        let mut sig: Vec<Vec<EdgeId>> = self.trace_faces().iter().map(Face::edge_multiset).collect();
        sig.sort();
        sig
    }
}
