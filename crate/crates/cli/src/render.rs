//! DOT and SVG output for 1-drawings.

use std::fmt::Write;

use onecross::characterize::OneDrawing;
use onecross::planarity::RotationSystem;
use onecross::{EdgeId, VertexId};

fn half_label(d: &OneDrawing, e: EdgeId) -> Option<String> {
    let pl = &d.planarization;
    let p = d.crossing_pair;
    for (orig, halves) in [(p.e(), pl.halves_e), (p.f(), pl.halves_f)] {
        if let Some(i) = halves.iter().position(|&h| h == e) {
            return Some(format!("{orig}{}", ["a", "b"][i]));
        }
    }
    None
}

/// The planarized graph; each vertex carries its rotation and the crossing
/// vertex is marked.
pub fn to_dot(d: &OneDrawing) -> String {
    let g = &d.planarization.graph;
    let w = d.crossing();
    let label = |e: EdgeId| half_label(d, e).unwrap_or_else(|| e.to_string());
    let mut s = String::from("graph onedrawing {\n");
    let _ = writeln!(s, "  // crossing pair {}", d.crossing_pair);
    for v in g.vertices() {
        let rot: Vec<String> = d.rotation.rotation(v).iter().map(|&e| label(e)).collect();
        if v == w {
            let _ = writeln!(
                s,
                "  {} [shape=point, crossing=true, rotation=\"{}\"];",
                v.0,
                rot.join(" ")
            );
        } else {
            let _ = writeln!(s, "  {} [label=\"v{}\", rotation=\"{}\"];", v.0, v.0, rot.join(" "));
        }
    }
    for (e, a, b) in g.edges() {
        let _ = writeln!(s, "  {} -- {} [label=\"{}\"];", a.0, b.0, label(e));
    }
    s.push_str("}\n");
    s
}

/// Tutte barycentric layout: the longest face goes on a circle and every
/// other vertex sits at the mean of its neighbours.
pub fn tutte_layout(r: &RotationSystem) -> Vec<(f64, f64)> {
    let g = r.graph();
    let n = g.vertex_count();
    let mut pos = vec![(0.0, 0.0); n];
    let mut fixed = vec![false; n];
    let outer: Vec<VertexId> = match r.trace_faces().into_iter().max_by_key(|f| f.len()) {
        Some(face) => {
            let mut seen = vec![false; n];
            face.darts
                .iter()
                .map(|d| d.from)
                .filter(|v| !std::mem::replace(&mut seen[v.0], true))
                .collect()
        }
        None => Vec::new(),
    };
    let k = outer.len().max(1) as f64;
    for (i, v) in outer.iter().enumerate() {
        let t = std::f64::consts::TAU * i as f64 / k;
        pos[v.0] = (t.cos(), t.sin());
        fixed[v.0] = true;
    }
    // vertices off the outer face's component start on a small circle
    for v in g.vertices() {
        if !fixed[v.0] && g.degree(v) == 0 {
            let t = std::f64::consts::TAU * v.0 as f64 / n as f64;
            pos[v.0] = (1.3 * t.cos(), 1.3 * t.sin());
            fixed[v.0] = true;
        }
    }
    for _ in 0..2000 {
        let mut delta: f64 = 0.0;
        for v in g.vertices() {
            if fixed[v.0] {
                continue;
            }
            let nb = g.incident(v);
            let (sx, sy) = nb.iter().fold((0.0, 0.0), |(x, y), &e| {
                let u = g.other_end(e, v);
                (x + pos[u.0].0, y + pos[u.0].1)
            });
            let new = (sx / nb.len() as f64, sy / nb.len() as f64);
            delta = delta.max((new.0 - pos[v.0].0).abs() + (new.1 - pos[v.0].1).abs());
            pos[v.0] = new;
        }
        if delta < 1e-12 {
            break;
        }
    }
    pos
}

/// Straight-line drawing with the crossing shown as a cross.
pub fn to_svg(d: &OneDrawing) -> String {
    let g = &d.planarization.graph;
    let w = d.crossing();
    let pos = tutte_layout(&d.rotation);
    let size = 480.0;
    let map = |(x, y): (f64, f64)| (size / 2.0 + x * size * 0.4, size / 2.0 - y * size * 0.4);
    let mut s = String::new();
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    );
    let _ = writeln!(s, "  <title>1-drawing, crossing pair {}</title>", d.crossing_pair);
    for (e, a, b) in g.edges() {
        let (x1, y1) = map(pos[a.0]);
        let (x2, y2) = map(pos[b.0]);
        let crossing = half_label(d, e).is_some();
        let colour = if crossing { "#c0392b" } else { "#333" };
        let _ = writeln!(
            s,
            "  <line x1=\"{x1:.3}\" y1=\"{y1:.3}\" x2=\"{x2:.3}\" y2=\"{y2:.3}\" stroke=\"{colour}\" stroke-width=\"2\"/>"
        );
    }
    for v in g.vertices() {
        let (x, y) = map(pos[v.0]);
        if v == w {
            let r = 7.0;
            let _ = writeln!(
                s,
                "  <path d=\"M{:.3},{:.3} L{:.3},{:.3} M{:.3},{:.3} L{:.3},{:.3}\" stroke=\"#c0392b\" stroke-width=\"3\"/>",
                x - r, y - r, x + r, y + r, x - r, y + r, x + r, y - r
            );
        } else {
            let _ = writeln!(
                s,
                "  <circle cx=\"{x:.3}\" cy=\"{y:.3}\" r=\"9\" fill=\"white\" stroke=\"#333\" stroke-width=\"2\"/>"
            );
            let _ = writeln!(
                s,
                "  <text x=\"{x:.3}\" y=\"{:.3}\" font-size=\"10\" text-anchor=\"middle\">{}</text>",
                y + 3.5,
                v.0
            );
        }
    }
    s.push_str("</svg>\n");
    s
}
