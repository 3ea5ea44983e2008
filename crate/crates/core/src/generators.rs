//! Named graphs used throughout the tests, the CLI and the docs.

use crate::graph::Multigraph;

pub fn complete(n: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    Multigraph::build(n, pairs).expect("no loops")
}

/// Parts `0..a` and `a..a+b`; edges in lexicographic order.
pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..a {
        for j in a..a + b {
            pairs.push((i, j));
        }
    }
    Multigraph::build(a + b, pairs).expect("no loops")
}

pub fn cycle(n: usize) -> Multigraph {
    Multigraph::build(n, (0..n).map(|i| (i, (i + 1) % n))).expect("n >= 2")
}

pub fn path(n: usize) -> Multigraph {
    Multigraph::build(n, (1..n).map(|i| (i - 1, i))).expect("no loops")
}

/// The Möbius ladder on `2k` vertices: rim edges `v_i v_{i+1}` get ids
/// `0..2k`, the chords `v_i v_{i+k}` follow.
pub fn moebius_ladder(k: usize) -> Multigraph {
    let n = 2 * k;
    let rim = (0..n).map(|i| (i, (i + 1) % n));
    let chords = (0..k).map(|i| (i, i + k));
    Multigraph::build(n, rim.chain(chords)).expect("k >= 2")
}

/// The 3-cube; vertex `v` is adjacent to `v ^ (1 << i)`.
pub fn cube() -> Multigraph {
    let mut pairs = Vec::new();
    for v in 0..8usize {
        for i in 0..3 {
            let w = v | (1 << i);
            if w != v {
                pairs.push((v, w));
            }
        }
    }
    Multigraph::build(8, pairs).expect("no loops")
}

pub fn wheel(rim: usize) -> Multigraph {
    let mut pairs: Vec<(usize, usize)> = (0..rim).map(|i| (i, (i + 1) % rim)).collect();
    pairs.extend((0..rim).map(|i| (i, rim)));
    Multigraph::build(rim + 1, pairs).expect("no loops")
}

/// Vertex numbering of [`siran`]: parts `{u, v, w}` and `{x, y, z}`.
pub mod siran_labels {
    pub const U: usize = 0;
    pub const V: usize = 1;
    pub const W: usize = 2;
    pub const X: usize = 3;
    pub const Y: usize = 4;
    pub const Z: usize = 5;
}

/// K3,3 plus the edges `uv` and `yz`. The nine K3,3 edges come first
/// (`ux, uy, uz, vx, ..., wz`), then `uv` (id 9) and `yz` (id 10).
pub fn siran() -> Multigraph {
    use siran_labels::*;
    let mut g = complete_bipartite(3, 3);
    g.add_edge(crate::graph::VertexId(U), crate::graph::VertexId(V))
        .expect("valid");
    g.add_edge(crate::graph::VertexId(Y), crate::graph::VertexId(Z))
        .expect("valid");
    g
}

pub fn petersen() -> Multigraph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Multigraph::build(10, outer.chain(spokes).chain(inner)).expect("no loops")
}
