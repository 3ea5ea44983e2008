//! Planarization of an edge pair and the 1-drawing certificate.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, EdgePair, GraphError, Multigraph, VertexId};
use crate::planarity::RotationSystem;

/// `g` with `e` and `f` replaced by four half edges at a new vertex.
///
/// The ids of `e` and `f` become empty slots; the new vertex is
/// `g.vertex_count()` and the halves get the next four edge ids, in the order
/// `(a_e, w)`, `(w, b_e)`, `(a_f, w)`, `(w, b_f)`, where `(a, b)` are the
/// stored endpoints of the original edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Planarization {
    pub graph: Multigraph,
    pub crossing: VertexId,
    pub halves_e: [EdgeId; 2],
    pub halves_f: [EdgeId; 2],
}

pub fn planarize(g: &Multigraph, p: EdgePair) -> Result<Planarization, GraphError> {
    let (ae, be) = g.try_endpoints(p.e()).ok_or(GraphError::UnknownEdge(p.e()))?;
    let (af, bf) = g.try_endpoints(p.f()).ok_or(GraphError::UnknownEdge(p.f()))?;
    let mut h = g.delete_edges(&[p.e(), p.f()])?;
    let w = h.add_vertex();
    let e1 = h.add_edge(ae, w)?;
    let e2 = h.add_edge(w, be)?;
    let f1 = h.add_edge(af, w)?;
    let f2 = h.add_edge(w, bf)?;
    Ok(Planarization {
        graph: h,
        crossing: w,
        halves_e: [e1, e2],
        halves_f: [f1, f2],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawingError {
    #[error("rotation system of the planarization is not planar")]
    NotPlanar,
    #[error("the ends of the two edges do not alternate around the crossing")]
    NotAlternating,
    #[error("removing the crossing does not give back the input graph")]
    RoundTrip,
    #[error("the planarized graph does not match the crossing pair")]
    WrongPlanarization,
}

/// A drawing of a graph with exactly one crossing, between the edges of
/// `crossing_pair`, given as a planar rotation system of the planarization.
#[derive(Clone, Debug)]
pub struct OneDrawing {
    pub crossing_pair: EdgePair,
    pub planarization: Planarization,
    pub rotation: RotationSystem,
    /// Endpoints of `e` and `f` in the input graph.
    pub ends: [(VertexId, VertexId); 2],
}

impl OneDrawing {
    pub fn new(g: &Multigraph, crossing_pair: EdgePair, rotation: RotationSystem) -> Result<Self, DrawingError> {
        let planarization = planarize(g, crossing_pair).map_err(|_| DrawingError::WrongPlanarization)?;
        if rotation.graph() != &planarization.graph {
            return Err(DrawingError::WrongPlanarization);
        }
        let d = Self {
            crossing_pair,
            planarization,
            rotation,
            ends: [g.endpoints(crossing_pair.e()), g.endpoints(crossing_pair.f())],
        };
        Ok(d)
    }

    pub fn crossing(&self) -> VertexId {
        self.planarization.crossing
    }

    /// Rotation at the crossing vertex.
    pub fn crossing_rotation(&self) -> &[EdgeId] {
        self.rotation.rotation(self.crossing())
    }

    /// The halves of `e` sit opposite each other around the crossing.
    pub fn alternates(&self) -> bool {
        let r = self.crossing_rotation();
        if r.len() != 4 {
            return false;
        }
        let pos = |h: EdgeId| r.iter().position(|&x| x == h);
        match (pos(self.planarization.halves_e[0]), pos(self.planarization.halves_e[1])) {
            (Some(i), Some(j)) => (i + 4 - j) % 4 == 2,
            _ => false,
        }
    }

    /// Removes the crossing vertex and restores `e` and `f`.
    pub fn unplanarize(&self) -> Multigraph {
        let h = &self.planarization.graph;
        let bound = self.planarization.halves_e[0].0;
        let mut slots: Vec<_> = h.slots()[..bound].to_vec();
        slots[self.crossing_pair.e().0] = Some(self.ends[0]);
        slots[self.crossing_pair.f().0] = Some(self.ends[1]);
        Multigraph::from_slots(h.vertex_count() - 1, slots)
    }

    /// Checks every invariant against the input graph.
    pub fn verify(&self, g: &Multigraph) -> Result<(), DrawingError> {
        let expected = planarize(g, self.crossing_pair).map_err(|_| DrawingError::WrongPlanarization)?;
        if expected != self.planarization || self.rotation.graph() != &expected.graph {
            return Err(DrawingError::WrongPlanarization);
        }
        if !self.rotation.is_planar() {
            return Err(DrawingError::NotPlanar);
        }
        if !self.alternates() {
            return Err(DrawingError::NotAlternating);
        }
        let back = self.unplanarize();
        if back.vertex_count() != g.vertex_count() || back.slots() != g.slots() {
            return Err(DrawingError::RoundTrip);
        }
        Ok(())
    }

    /// Serializable view: the rotation as edge-id lists.
    pub fn rotation_lists(&self) -> Vec<Vec<usize>> {
        self.rotation
            .rotations()
            .iter()
            .map(|r| r.iter().map(|e| e.0).collect())
            .collect()
    }
}

#[derive(Serialize)]
struct DrawingView<'a> {
    crossing_pair: [EdgeId; 2],
    crossing_vertex: VertexId,
    halves_e: [EdgeId; 2],
    halves_f: [EdgeId; 2],
    edges: Vec<(EdgeId, VertexId, VertexId)>,
    rotation: &'a [Vec<EdgeId>],
}

impl Serialize for OneDrawing {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DrawingView {
            crossing_pair: [self.crossing_pair.e(), self.crossing_pair.f()],
            crossing_vertex: self.crossing(),
            halves_e: self.planarization.halves_e,
            halves_f: self.planarization.halves_f,
            edges: self.planarization.graph.edges().collect(),
            rotation: self.rotation.rotations(),
        }
        .serialize(s)
    }
}
