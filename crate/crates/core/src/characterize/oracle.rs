//! The planarization gadget: `{e, f}` is a crossing pair of a nonplanar
//! graph exactly when replacing the two edges by a degree-four crossing
//! vertex leaves a planar graph.

use super::drawing::{planarize, OneDrawing};
use super::CharacterizeError;
use crate::graph::{EdgePair, Multigraph};
use crate::planarity::{is_planar, test_planarity};

pub fn oracle_crossing_pair(g: &Multigraph, p: EdgePair) -> Result<Option<OneDrawing>, CharacterizeError> {
    if is_planar(g) {
        return Err(CharacterizeError::PlanarInput);
    }
    gadget(g, p)
}

/// The gadget without the nonplanarity check; callers guarantee it.
pub(crate) fn gadget(g: &Multigraph, p: EdgePair) -> Result<Option<OneDrawing>, CharacterizeError> {
    let pl = planarize(g, p)?;
    if g.edges_touch(p.e(), p.f()) {
        return Ok(None);
    }
    let Some(rotation) = test_planarity(&pl.graph).embedding() else {
        return Ok(None);
    };
    let d = OneDrawing::new(g, p, rotation).expect("rotation of the planarization");
    assert!(
        d.alternates(),
        "planar planarization of a nonplanar graph must alternate at the crossing"
    );
    Ok(Some(d))
}

/// Bit-only version for sweeps.
pub(crate) fn gadget_holds(g: &Multigraph, p: EdgePair) -> bool {
    if g.edges_touch(p.e(), p.f()) {
        return false;
    }
    let pl = planarize(g, p).expect("pair edges exist");
    is_planar(&pl.graph)
}
