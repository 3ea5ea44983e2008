//! End-to-end acceptance checks, one line per criterion.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use onecross::bridges::{detaching_cycle_vv, Cofaciality};
use onecross::characterize::{
    build_one_drawing_constructive, condition_ii, condition_iii, crossing_number_le_1, oracle_crossing_pair,
    potential_crossing_pairs,
};
use onecross::corpus::{all_graphs, random_gnm, sweep, CorpusSpec, SimpleGraph, SweepOptions};
use onecross::generators::siran_labels::*;
use onecross::generators::{complete, complete_bipartite, moebius_ladder, siran};
use onecross::planarity::{is_planar, test_planarity, KuratowskiKind};
use onecross::separation::separated_by_cycles;
use onecross::{EdgeId, EdgePair, Multigraph, VertexId};
use onecross_cli::input::to_graph6;
use onecross_cli::run_args;
use onecross_testkit::{
    brute_crossing_number_le_1, brute_crossing_pair, brute_separated, random_triangulation, EdgeList,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn edge(g: &Multigraph, a: usize, b: usize) -> EdgeId {
    g.edges_between(VertexId(a), VertexId(b))[0]
}

fn pair(g: &Multigraph, a: (usize, usize), b: (usize, usize)) -> EdgePair {
    EdgePair::new(edge(g, a.0, a.1), edge(g, b.0, b.1)).unwrap()
}

fn disjoint_pairs(g: &Multigraph) -> Vec<EdgePair> {
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    let mut out = Vec::new();
    for (i, &e) in ids.iter().enumerate() {
        for &f in &ids[i + 1..] {
            if !g.edges_touch(e, f) {
                out.push(EdgePair::new(e, f).unwrap());
            }
        }
    }
    out
}

/// Brute-force crossing pairs over every pair of edges, adjacent or not.
fn brute_pairs(g: &Multigraph) -> BTreeSet<EdgePair> {
    let (el, ids) = EdgeList::from_multigraph(g);
    let m = el.edges.len();
    let mut out = BTreeSet::new();
    for i in 0..m {
        for j in i + 1..m {
            if brute_crossing_pair(&el, i, j) {
                out.insert(EdgePair::new(EdgeId(ids[i]), EdgeId(ids[j])).unwrap());
            }
        }
    }
    out
}

fn decide_cli(g: &Multigraph) -> (i32, serde_json::Value) {
    let text = to_graph6(g);
    let out = run_args(["onecross", "decide", "--verify"], &mut text.as_bytes());
    let report = serde_json::from_str(&out.stdout).unwrap_or(serde_json::Value::Null);
    (out.code, report)
}

fn criterion_1() -> Outcome {
    let s = sweep(
        &CorpusSpec::Exhaustive { min_n: 1, max_n: 7, connected_only: true },
        SweepOptions::default(),
    );
    ensure(s.complete(), || format!("sweep incomplete: {:?}", s.refused))?;
    ensure(s.nonplanar == 221, || format!("{} connected nonplanar graphs, expected 221", s.nonplanar))?;
    ensure(s.consistent(), || format!("{:?}", s.minimal_inconsistency()))?;
    Ok(format!(
        "{} connected nonplanar graphs, {} disjoint pairs, {} crossing pairs, 0 disagreements",
        s.nonplanar, s.pairs_checked, s.crossing_pairs
    ))
}

// Crossing pairs of V8 from the brute-force drawing search, frozen.
const V8_CROSSING_PAIRS: [((usize, usize), (usize, usize)); 12] = [
    ((0, 1), (3, 4)),
    ((0, 1), (4, 5)),
    ((0, 1), (5, 6)),
    ((1, 2), (4, 5)),
    ((1, 2), (5, 6)),
    ((1, 2), (6, 7)),
    ((2, 3), (5, 6)),
    ((2, 3), (6, 7)),
    ((2, 3), (7, 0)),
    ((3, 4), (6, 7)),
    ((3, 4), (7, 0)),
    ((4, 5), (7, 0)),
];

fn criterion_2() -> Outcome {
    let g = moebius_ladder(4);
    let mut oracle = BTreeSet::new();
    let ids: Vec<EdgeId> = g.edge_ids().collect();
    for (i, &e) in ids.iter().enumerate() {
        for &f in &ids[i + 1..] {
            let p = EdgePair::new(e, f).unwrap();
            if let Some(d) = oracle_crossing_pair(&g, p).map_err(|e| e.to_string())? {
                d.verify(&g).map_err(|e| format!("drawing of {p}: {e}"))?;
                oracle.insert(p);
            }
        }
    }
    let frozen: BTreeSet<EdgePair> = V8_CROSSING_PAIRS.iter().map(|&(a, b)| pair(&g, a, b)).collect();
    ensure(oracle == frozen, || format!("oracle pairs {oracle:?} differ from the frozen list"))?;
    ensure(brute_pairs(&g) == frozen, || "brute force differs from the frozen list".into())?;
    ensure(oracle.contains(&pair(&g, (0, 1), (4, 5))), || "{v0v1, v4v5} missing".into())?;
    let v1v5 = edge(&g, 1, 5);
    ensure(!oracle.iter().any(|p| p.contains(v1v5)), || "a crossing pair contains v1v5".into())?;
    let h = g.delete_edges(&[v1v5]).unwrap();
    let cert = test_planarity(&h).certificate().ok_or("V8 - v1v5 is planar")?;
    cert.verify(&h).map_err(|e| e.to_string())?;
    ensure(cert.kind == KuratowskiKind::K33 && cert.edges().len() == h.edge_count(), || {
        "V8 - v1v5 is not itself a K3,3 subdivision".into()
    })?;
    Ok(format!("{} crossing pairs match the frozen list; V8 - v1v5 is a K3,3 subdivision", oracle.len()))
}

fn criterion_3() -> Outcome {
    let g = siran();
    let (el, ids) = EdgeList::from_multigraph(&g);
    let local = |e: EdgeId| ids.iter().position(|&x| x == e.0).unwrap();
    let sep = pair(&g, (U, X), (W, Z));
    let cross = pair(&g, (U, Y), (W, Z));

    let s = separated_by_cycles(&g, sep).map_err(|e| e.to_string())?;
    let w = s.witness().ok_or("{ux, wz} not separated")?;
    w.verify(&g, sep)?;
    ensure(brute_separated(&el, local(sep.e()), local(sep.f())), || "brute force disagrees on ux, wz".into())?;
    let ii = condition_ii(&g, sep).map_err(|e| e.to_string())?;
    ensure(ii.every_kuratowski_crosses, || "{ux, wz} fails in some Kuratowski subgraph".into())?;
    ensure(oracle_crossing_pair(&g, sep).unwrap().is_none(), || "{ux, wz} accepted by the gadget".into())?;
    ensure(!brute_crossing_pair(&el, local(sep.e()), local(sep.f())), || "{ux, wz} drawable".into())?;

    ensure(!separated_by_cycles(&g, cross).unwrap().is_separated(), || "{uy, wz} separated".into())?;
    ensure(!brute_separated(&el, local(cross.e()), local(cross.f())), || "brute force separates uy, wz".into())?;
    let d = oracle_crossing_pair(&g, cross).unwrap().ok_or("{uy, wz} rejected by the gadget")?;
    d.verify(&g).map_err(|e| e.to_string())?;
    ensure(brute_crossing_pair(&el, local(cross.e()), local(cross.f())), || "{uy, wz} not drawable".into())?;
    Ok(format!(
        "{{ux, wz}} separated (cycles of length {} and {}) and crossing in all {} Kuratowski subgraphs, not a crossing pair; {{uy, wz}} a crossing pair",
        w.cycle_e.len(),
        w.cycle_f.len(),
        ii.kuratowski_count
    ))
}

fn criterion_4() -> Outcome {
    let g = complete_bipartite(3, 4);
    let (code, report) = decide_cli(&g);
    ensure(code == 2 && report["verdict"] == "at_least_two", || {
        format!("decide exited {code} with {}", report["verdict"])
    })?;
    let (el, ids) = EdgeList::from_multigraph(&g);
    for p in disjoint_pairs(&g) {
        ensure(!separated_by_cycles(&g, p).unwrap().is_separated(), || format!("{p} separated"))?;
        let (i, j) = (
            ids.iter().position(|&x| x == p.e().0).unwrap(),
            ids.iter().position(|&x| x == p.f().0).unwrap(),
        );
        ensure(!brute_separated(&el, i, j), || format!("brute force separates {p}"))?;
    }
    let brute = brute_crossing_number_le_1(&el);
    ensure(brute == 2, || format!("brute force gives crossing number class {brute}"))?;
    Ok(format!(
        "decide exits 2; {} disjoint pairs unseparated; no one-crossing drawing exists",
        disjoint_pairs(&g).len()
    ))
}

fn criterion_5() -> Outcome {
    let k6 = complete(6);
    let ids: Vec<EdgeId> = k6.edge_ids().collect();
    for &e in &ids {
        let g = k6.delete_edges(&[e]).unwrap();
        let r = potential_crossing_pairs(&g).map_err(|err| err.to_string())?;
        ensure(r.pairs.is_empty(), || format!("K6 - {e} has {} potential pairs", r.pairs.len()))?;
    }
    let mut count = 0;
    for (i, &e) in ids.iter().enumerate() {
        for &f in &ids[i + 1..] {
            let g = k6.delete_edges(&[e, f]).unwrap();
            let (code, report) = decide_cli(&g);
            ensure(code == 1 && report["verdict"] == "exactly_one", || {
                format!("K6 - {{{e}, {f}}}: decide exited {code}")
            })?;
            count += 1;
        }
    }
    Ok(format!("K6 - e has no potential crossing pair; all {count} two-edge deletions have crossing number one"))
}

/// A random planar triangulation with some edges removed.
fn random_planar(rng: &mut ChaCha8Rng, n: usize) -> SimpleGraph {
    let t = if n >= 3 { random_triangulation(n, 3 * n, rng) } else { EdgeList::new(n, vec![]) };
    let keep = rng.gen_range(0.3..=1.0);
    let mut g = SimpleGraph::empty(n);
    for (u, v) in t.edges {
        if rng.gen_bool(keep) {
            g.add_edge(u, v);
        }
    }
    g
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut graphs, mut attempts, mut pairs, mut built) = (0, 0, 0, 0);
    while graphs < 200 {
        attempts += 1;
        ensure(attempts < 20_000, || format!("only {graphs} suitable graphs found"))?;
        let n = rng.gen_range(6..=10);
        let sg = if rng.gen_bool(0.5) {
            let m = rng.gen_range(n + 3..=(3 * n).min(n * (n - 1) / 2));
            random_gnm(n, m, &mut rng)
        } else {
            let mut g = random_planar(&mut rng, n);
            for _ in 0..rng.gen_range(1..=2) {
                let (u, v) = (rng.gen_range(0..n), rng.gen_range(0..n));
                if u != v {
                    g.add_edge(u, v);
                }
            }
            g
        };
        let g = sg.to_multigraph();
        if is_planar(&g) {
            continue;
        }
        let mut any = false;
        for p in disjoint_pairs(&g) {
            pairs += 1;
            let iii = condition_iii(&g, p).map_err(|e| e.to_string())?.holds;
            let oracle = oracle_crossing_pair(&g, p).map_err(|e| e.to_string())?.is_some();
            ensure(iii == oracle, || format!("{} pair {p}: existential {iii}, gadget {oracle}", to_graph6(&g)))?;
            if iii {
                any = true;
                let d = build_one_drawing_constructive(&g, p)
                    .map_err(|e| format!("{} pair {p}: construction failed: {e}", to_graph6(&g)))?;
                d.verify(&g).map_err(|e| format!("{} pair {p}: {e}", to_graph6(&g)))?;
                built += 1;
            }
        }
        graphs += any as usize;
    }
    Ok(format!("{graphs} graphs, {pairs} pairs, {built} constructed drawings, 0 disagreements"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut queries, mut cofacial, mut detached) = (0, 0, 0);
    for _ in 0..500 {
        let n = rng.gen_range(1..=9);
        let g = random_planar(&mut rng, n).to_multigraph();
        for x in 0..n {
            for y in x + 1..n {
                let (vx, vy) = (VertexId(x), VertexId(y));
                let tag = || format!("{} x={x} y={y}", to_graph6(&g));
                let answer = detaching_cycle_vv(&g, vx, vy).map_err(|e| format!("{}: {e}", tag()))?;
                let mut plus = g.clone();
                plus.add_edge(vx, vy).unwrap();
                let joinable = is_planar(&plus);
                queries += 1;
                match answer {
                    Cofaciality::Cofacial { embedding, face } => {
                        cofacial += 1;
                        ensure(embedding.graph() == &g && embedding.is_planar(), || format!("{}: bad embedding", tag()))?;
                        match face {
                            Some(f) => ensure(f.contains_vertex(vx) && f.contains_vertex(vy), || {
                                format!("{}: face misses an end", tag())
                            })?,
                            None => {
                                let (labels, _) = g.components();
                                ensure(labels[x] != labels[y], || format!("{}: no face given", tag()))?;
                            }
                        }
                        ensure(joinable, || format!("{}: cofacial but g + xy is nonplanar", tag()))?;
                    }
                    Cofaciality::Detached(c) => {
                        detached += 1;
                        c.verify_vertices(&g, vx, vy).map_err(|e| format!("{}: {e}", tag()))?;
                        ensure(!joinable, || format!("{}: detached but g + xy is planar", tag()))?;
                    }
                }
            }
        }
    }
    Ok(format!("500 graphs, {queries} vertex pairs: {cofacial} cofacial, {detached} detached, all certificates verified"))
}

fn criterion_8() -> Outcome {
    let (mut graphs, mut by_class) = (0, [0usize; 3]);
    for n in 1..=6 {
        for sg in all_graphs(n).into_iter().filter(|g| g.edge_count() <= 10) {
            let g = sg.to_multigraph();
            let (el, _) = EdgeList::from_multigraph(&g);
            let brute = brute_crossing_number_le_1(&el);
            let v = crossing_number_le_1(&g).map_err(|e| e.to_string())?;
            ensure(v.crossing_number_bound() == brute, || {
                format!("{}: decision {} but brute force {brute}", to_graph6(&g), v.label())
            })?;
            graphs += 1;
            by_class[brute as usize] += 1;
        }
    }
    Ok(format!(
        "{graphs} graphs: {} planar, {} with crossing number one, {} with at least two",
        by_class[0], by_class[1], by_class[2]
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("equivalence sweep, connected nonplanar graphs on at most 7 vertices", criterion_1),
        ("V8 crossing pairs", criterion_2),
        ("Siran graph", criterion_3),
        ("K3,4", criterion_4),
        ("K6 minus edges", criterion_5),
        ("constructive drawings against the gadget", criterion_6),
        ("cofacial or detached on random planar graphs", criterion_7),
        ("decision against exhaustive drawings, at most 6 vertices and 10 edges", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        match result {
            Ok(detail) => println!("criterion {} PASS  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {detail}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} of 8 criteria failed");
        std::process::exit(1);
    }
    println!("all 8 criteria passed");
}
