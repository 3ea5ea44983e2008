//! Explicit 1-drawings built from a Kuratowski witness, without the gadget.
//!
//! With `e = uv`: a cycle `C` of `H - e` detaches `u` from `v` and carries
//! `f`. In an embedding of `G - e` the bridges of `C` split into the side of
//! `u` and the side of `v`. Each side is re-embedded with `C` bounding a face
//! and its end of `e` sharing a face with `f`; the two halves are glued
//! along `C` and `e` is routed across `f`.

use serde::Serialize;

use super::conditions::condition_iii;
use super::drawing::{planarize, OneDrawing};
use super::CharacterizeError;
use crate::bridges::{bridge_with_nucleus_vertex, decompose, detaching_cycle_vv, Bridge, Cofaciality};
use crate::graph::{EdgeId, EdgePair, Multigraph, Path, Subgraph, VertexId};
use crate::planarity::{
    embed_with_outer_cycle_and_cofacial, is_planar, test_planarity, Dart, Face, KuratowskiCert, RotationSystem,
};

#[derive(Clone, Debug, Serialize)]
pub struct ProofClaim {
    pub statement: &'static str,
    pub holds: bool,
}

/// Intermediate objects for one side of `C`. They are checked and recorded
/// but never steer the construction.
#[derive(Clone, Debug, Default, Serialize)]
pub struct SideTrace {
    pub end: Option<VertexId>,
    /// Cycle through `f` on the face of `C + B` next to `f` away from `C`.
    pub c_f: Option<Path>,
    /// The stretch of `C` shared with `c_f` around `f`, from `x` to `y`.
    pub r: Option<Path>,
    /// The rest of `c_f`, from `y` to `x`.
    pub p: Option<Path>,
    /// The rest of `C`, from `y` to `x`.
    pub q: Option<Path>,
    /// Bridge of `C + P` inside `C + B` holding the end of `e`.
    pub b_star: Option<Bridge>,
    pub claims: Vec<ProofClaim>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructionTrace {
    pub cycle: Path,
    pub witness: KuratowskiCert,
    pub claims: Vec<ProofClaim>,
    pub sides: [SideTrace; 2],
}

impl ConstructionTrace {
    pub fn all_claims_hold(&self) -> bool {
        self.claims
            .iter()
            .chain(self.sides.iter().flat_map(|s| s.claims.iter()))
            .all(|c| c.holds)
    }
}

#[derive(Clone, Debug)]
pub struct Construction {
    pub drawing: OneDrawing,
    pub trace: ConstructionTrace,
}

/// Builds a 1-drawing in which the pair crosses; fails when the existential
/// condition does not hold.
pub fn build_one_drawing_constructive(g: &Multigraph, p: EdgePair) -> Result<OneDrawing, CharacterizeError> {
    let cond = condition_iii(g, p)?;
    match cond.witness {
        Some(h) if cond.holds => Ok(build_with_witness(g, p, &h)?.drawing),
        _ => Err(CharacterizeError::PreconditionViolated(format!(
            "existential condition fails: {:?}",
            cond.failed
        ))),
    }
}

fn step(statement: &'static str) -> CharacterizeError {
    CharacterizeError::ProofStep(statement.to_string())
}

/// The construction from a Kuratowski subgraph `h` in which `p` is a
/// crossing pair. The remaining hypotheses (both deletions planar, no
/// separating cycles) surface as `ProofStep` errors when violated.
pub fn build_with_witness(g: &Multigraph, p: EdgePair, h: &KuratowskiCert) -> Result<Construction, CharacterizeError> {
    let (e, f) = (p.e(), p.f());
    let (u, v) = g.endpoints(e);
    let h_edges = h.edges();
    let h_minus_e = g.filter_edges(|x| x != e && h_edges.binary_search(&x).is_ok());
    let c = match detaching_cycle_vv(&h_minus_e, u, v)? {
        Cofaciality::Detached(d) => d.cycle,
        Cofaciality::Cofacial { .. } => return Err(step("the ends of e share a face of H - e")),
    };
    let mut claims = Vec::new();
    let f_on_c = c.contains_edge(f);
    claims.push(ProofClaim {
        statement: "f lies on C",
        holds: f_on_c,
    });
    let ends_off = !c.contains_vertex(u) && !c.contains_vertex(v);
    claims.push(ProofClaim {
        statement: "neither end of e lies on C",
        holds: ends_off,
    });
    if !f_on_c || !ends_off {
        return Err(step("the detaching cycle must carry f and avoid the ends of e"));
    }

    let g_e = g.delete_edges(&[e])?;
    let d = test_planarity(&g_e)
        .embedding()
        .ok_or_else(|| step("G - e is planar"))?;
    let on_c = Subgraph::from_path(&g_e, &c);
    let bridges = decompose(&g_e, &on_c);
    let bu = bridge_with_nucleus_vertex(&bridges, u).expect("u is off C");
    let bv = bridge_with_nucleus_vertex(&bridges, v).expect("v is off C");
    claims.push(ProofClaim {
        statement: "the ends of e lie in different bridges of C in G - e",
        holds: bu != bv,
    });
    if bu == bv {
        return Err(step("a C-avoiding path joining the ends of e would separate e from f"));
    }
    let sides: Vec<Option<bool>> = bridges.iter().map(|b| side_of(&d, &c, b)).collect();
    let side_u = sides[bu].expect("B_u attaches to C");
    let side_v = sides[bv].expect("B_v attaches to C");
    claims.push(ProofClaim {
        statement: "B_u and B_v lie on different sides of C",
        holds: side_u != side_v,
    });
    if side_u == side_v {
        return Err(step("overlapping bridges lie on different sides"));
    }
    let mut keep_u = on_c.clone();
    let mut keep_v = on_c.clone();
    for (b, side) in bridges.iter().zip(&sides) {
        let target = if side.unwrap_or(side_u) == side_u {
            &mut keep_u
        } else {
            &mut keep_v
        };
        for &x in &b.edges {
            target.insert_edge(&g_e, x);
        }
    }
    let g_u = g_e.spanning_subgraph(&keep_u);
    let g_v = g_e.spanning_subgraph(&keep_v);

    let trace_u = side_trace(&g_e, &d, &c, &bridges[bu], u, f);
    let trace_v = side_trace(&g_e, &d, &c, &bridges[bv], v, f);

    let du = embed_with_outer_cycle_and_cofacial(&g_u, &c, u, f)?
        .ok_or_else(|| step("the side of u embeds with C a face and u next to f"))?;
    let dv = embed_with_outer_cycle_and_cofacial(&g_v, &c, v, f)?
        .ok_or_else(|| step("the side of v embeds with C a face and v next to f"))?;
    let du = orient(du, &c, true);
    let dv = orient(dv, &c, false);

    let glued = glue(&g_e, &c, &du, &dv);
    if !glued.is_planar() {
        return Err(step("gluing the two sides along C stays planar"));
    }

    let j = c.edges.iter().position(|&x| x == f).expect("f on C");
    let (cj, cj1) = (c.vertices[j], c.vertices[j + 1]);
    let faces = glued.trace_faces();
    let face_u = faces
        .iter()
        .find(|fc| fc.contains_dart(Dart { edge: f, from: cj1 }))
        .expect("every dart lies on a face");
    let face_v = faces
        .iter()
        .find(|fc| fc.contains_dart(Dart { edge: f, from: cj }))
        .expect("every dart lies on a face");
    if !face_u.contains_vertex(u) || !face_v.contains_vertex(v) {
        return Err(step("each end of e shares a face with f on its own side"));
    }

    let pl = planarize(g, p)?;
    let w = pl.crossing;
    let [eu, ev] = pl.halves_e;
    let (af, _) = g.endpoints(f);
    let [f1, f2] = pl.halves_f;
    let (h1, h2) = if af == cj { (f1, f2) } else { (f2, f1) };
    let mut rotation: Vec<Vec<EdgeId>> = glued.rotations().to_vec();
    for x in rotation[cj.0].iter_mut().filter(|x| **x == f) {
        *x = h1;
    }
    for x in rotation[cj1.0].iter_mut().filter(|x| **x == f) {
        *x = h2;
    }
    insert_after_arrival(&mut rotation, face_u, u, eu);
    insert_after_arrival(&mut rotation, face_v, v, ev);
    debug_assert_eq!(rotation.len(), w.0);
    rotation.push(vec![h2, eu, h1, ev]);
    let rs = RotationSystem::new(pl.graph.clone(), rotation).map_err(|_| step("the planarized rotation is complete"))?;
    let drawing = OneDrawing::new(g, p, rs).map_err(|err| CharacterizeError::ProofStep(err.to_string()))?;
    drawing
        .verify(g)
        .map_err(|err| CharacterizeError::ProofStep(err.to_string()))?;
    Ok(Construction {
        drawing,
        trace: ConstructionTrace {
            cycle: c,
            witness: h.clone(),
            claims,
            sides: [trace_u, trace_v],
        },
    })
}

/// Which side of `c` the bridge occupies: `true` when its edges at an
/// attachment come after the incoming cycle edge and before the outgoing
/// one in the rotation. `None` for bridges without attachments.
fn side_of(d: &RotationSystem, c: &Path, b: &Bridge) -> Option<bool> {
    let k = c.len();
    let (i, &at) = c.vertices[..k].iter().enumerate().find(|(_, v)| b.is_attachment(**v))?;
    let incoming = c.edges[(i + k - 1) % k];
    let outgoing = c.edges[i];
    let rot = d.rotation(at);
    let start = rot.iter().position(|&x| x == incoming).expect("cycle edge at its vertex");
    for step in 1..rot.len() {
        let x = rot[(start + step) % rot.len()];
        if x == outgoing {
            return Some(false);
        }
        if b.contains_edge(x) {
            return Some(true);
        }
    }
    unreachable!("the outgoing cycle edge is in the rotation")
}

/// Reflects `r` if needed so that the face bounded by `c` runs along `c`
/// (`forward`) or against it.
fn orient(r: RotationSystem, c: &Path, forward: bool) -> RotationSystem {
    let (_, along) = r.face_bounded_by(c).expect("C bounds a face");
    if along == forward {
        r
    } else {
        r.reflected()
    }
}

/// At each vertex of `c`, the edges of the side of `v` are placed in the
/// corner where the cycle face of the side of `u` used to be.
fn glue(g_e: &Multigraph, c: &Path, du: &RotationSystem, dv: &RotationSystem) -> RotationSystem {
    let k = c.len();
    let mut rotation: Vec<Vec<EdgeId>> = g_e
        .vertices()
        .map(|x| {
            if du.rotation(x).is_empty() {
                dv.rotation(x).to_vec()
            } else {
                du.rotation(x).to_vec()
            }
        })
        .collect();
    for i in 0..k {
        let ci = c.vertices[i];
        let prev = c.edges[(i + k - 1) % k];
        let next = c.edges[i];
        let arc = |r: &[EdgeId], from: EdgeId, to: EdgeId| -> Vec<EdgeId> {
            let s = r.iter().position(|&x| x == from).expect("cycle edge in rotation");
            (1..r.len()).map(|t| r[(s + t) % r.len()]).take_while(|&x| x != to).collect()
        };
        let xu = arc(du.rotation(ci), next, prev);
        let xv = arc(dv.rotation(ci), prev, next);
        let mut r = vec![prev];
        r.extend(xv);
        r.push(next);
        r.extend(xu);
        rotation[ci.0] = r;
    }
    RotationSystem::new(g_e.clone(), rotation).expect("both sides together list every edge")
}

fn insert_after_arrival(rotation: &mut [Vec<EdgeId>], face: &Face, at: VertexId, new: EdgeId) {
    let n = face.darts.len();
    let i = face.darts.iter().position(|d| d.from == at).expect("vertex on face");
    let arrival = face.darts[(i + n - 1) % n].edge;
    let pos = rotation[at.0]
        .iter()
        .position(|&x| x == arrival)
        .expect("arrival edge at its vertex");
    rotation[at.0].insert(pos + 1, new);
}

fn side_trace(g_e: &Multigraph, d: &RotationSystem, c: &Path, b: &Bridge, end: VertexId, f: EdgeId) -> SideTrace {
    let mut t = SideTrace {
        end: Some(end),
        ..SideTrace::default()
    };
    let claim = |t: &mut SideTrace, statement: &'static str, holds: bool| t.claims.push(ProofClaim { statement, holds });
    let sub = g_e.filter_edges(|x| c.contains_edge(x) || b.contains_edge(x));
    let ds = d.restrict(&sub);
    let Some((cycle_face, _)) = ds.face_bounded_by(c) else {
        claim(&mut t, "C bounds a face of C + B", false);
        return t;
    };
    let faces = ds.trace_faces();
    let Some(face_f) = faces.iter().find(|fc| fc.contains_edge(f) && **fc != cycle_face) else {
        claim(&mut t, "f has a face away from C", false);
        return t;
    };
    let c_f = loop_erased_cycle(&sub, face_f, f);
    let k = c.len();
    let j = c.edges.iter().position(|&x| x == f).expect("f on C");
    let in_cf = |x: EdgeId| c_f.contains_edge(x);
    if c.edges.iter().all(|&x| in_cf(x)) {
        claim(&mut t, "C_f differs from C", false);
        t.c_f = Some(c_f);
        return t;
    }
    let mut lo = j;
    while in_cf(c.edges[(lo + k - 1) % k]) {
        lo = (lo + k - 1) % k;
    }
    let mut hi = j;
    while in_cf(c.edges[(hi + 1) % k]) {
        hi = (hi + 1) % k;
    }
    let span = (hi + k - lo) % k + 1;
    let r_edges: Vec<EdgeId> = (0..span).map(|s| c.edges[(lo + s) % k]).collect();
    let x = c.vertices[lo];
    let r = Path::from_edges(g_e, x, &r_edges);
    let y = r.end();
    let q_edges: Vec<EdgeId> = (0..k - span).map(|s| c.edges[(hi + 1 + s) % k]).collect();
    let q = Path::from_edges(g_e, y, &q_edges);
    let p_edges: Vec<EdgeId> = c_f.edges.iter().copied().filter(|x| !r_edges.contains(x)).collect();
    let p = walk(g_e, y, &p_edges);
    let strictly_inside_r = r.internal_vertices().iter().any(|&z| b.is_attachment(z));
    claim(
        &mut t,
        "R joins two consecutive attachments of B",
        b.is_attachment(x) && b.is_attachment(y) && !strictly_inside_r,
    );
    if p.contains_vertex(end) {
        claim(&mut t, "the end of e lies on P", true);
    } else {
        let mut cp = Subgraph::from_path(&sub, c);
        for &z in &p.edges {
            cp.insert_edge(&sub, z);
        }
        let pieces = decompose(&sub, &cp);
        if let Some(i) = bridge_with_nucleus_vertex(&pieces, end) {
            let star = pieces[i].clone();
            claim(
                &mut t,
                "every attachment of B* lies on P",
                star.attachments.iter().all(|&a| p.contains_vertex(a)),
            );
            let k1 = sub.filter_edges(|z| cp.contains_edge(z) || star.contains_edge(z));
            let d1 = embed_with_outer_cycle_and_cofacial(&k1, c, end, f).ok().flatten();
            claim(
                &mut t,
                "C + P + B* embeds with C a face and the end of e next to f",
                d1.is_some_and(|r| is_planar(r.graph())),
            );
            t.b_star = Some(star);
        } else {
            claim(&mut t, "the end of e lies in a bridge of C + P", false);
        }
    }
    t.c_f = Some(c_f);
    t.r = Some(r);
    t.p = Some(p);
    t.q = Some(q);
    t
}

/// The face walk after `f`, with its loops erased, closed up by `f`.
fn loop_erased_cycle(g: &Multigraph, face: &Face, f: EdgeId) -> Path {
    let n = face.darts.len();
    let i = face.darts.iter().position(|d| d.edge == f).expect("f on face");
    let s = face.darts[i].from;
    let t = g.other_end(f, s);
    let mut vertices = vec![t];
    let mut edges: Vec<EdgeId> = Vec::new();
    for step in 1..n {
        let dart = face.darts[(i + step) % n];
        let to = g.other_end(dart.edge, dart.from);
        if let Some(k) = vertices.iter().position(|&z| z == to) {
            vertices.truncate(k + 1);
            edges.truncate(k);
        } else {
            vertices.push(to);
            edges.push(dart.edge);
        }
    }
    debug_assert_eq!(vertices.last(), Some(&s));
    edges.push(f);
    vertices.push(t);
    Path { vertices, edges }
}

/// Orders an edge set that forms a path starting at `start`.
fn walk(g: &Multigraph, start: VertexId, edges: &[EdgeId]) -> Path {
    let mut left: Vec<EdgeId> = edges.to_vec();
    let mut order = Vec::with_capacity(left.len());
    let mut cur = start;
    while let Some(pos) = left.iter().position(|&x| {
        let (a, b) = g.endpoints(x);
        a == cur || b == cur
    }) {
        let x = left.swap_remove(pos);
        cur = g.other_end(x, cur);
        order.push(x);
    }
    Path::from_edges(g, start, &order)
}
