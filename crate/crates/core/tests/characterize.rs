use onecross::characterize::*;
use onecross::generators::siran_labels::*;
use onecross::generators::{complete, complete_bipartite, moebius_ladder, path, siran};
use onecross::separation::Separation;
use onecross::{EdgeId, EdgePair, Multigraph, VertexId};

fn edge(g: &Multigraph, a: usize, b: usize) -> EdgeId {
    g.edges_between(VertexId(a), VertexId(b))[0]
}

fn pair(g: &Multigraph, a: (usize, usize), b: (usize, usize)) -> EdgePair {
    EdgePair::new(edge(g, a.0, a.1), edge(g, b.0, b.1)).unwrap()
}

fn disjoint_pairs(g: &Multigraph) -> Vec<EdgePair> {
    let ids: Vec<_> = g.edge_ids().collect();
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

#[test]
fn v8_oracle() {
    let g = moebius_ladder(4);
    let d = oracle_crossing_pair(&g, pair(&g, (0, 1), (4, 5))).unwrap().unwrap();
    d.verify(&g).unwrap();
    let v1v5 = edge(&g, 1, 5);
    for f in g.edge_ids().filter(|&f| f != v1v5) {
        let p = EdgePair::new(v1v5, f).unwrap();
        assert!(oracle_crossing_pair(&g, p).unwrap().is_none(), "{p}");
    }
}

#[test]
fn siran_oracle_and_conditions() {
    let g = siran();
    let sep = pair(&g, (U, X), (W, Z));
    let cross = pair(&g, (U, Y), (W, Z));
    assert!(oracle_crossing_pair(&g, sep).unwrap().is_none());
    oracle_crossing_pair(&g, cross).unwrap().unwrap().verify(&g).unwrap();

    let ii = condition_ii(&g, sep).unwrap();
    assert!(!ii.holds);
    assert!(ii.every_kuratowski_crosses);
    ii.separation.witness().unwrap().verify(&g, sep).unwrap();

    let iii = condition_iii(&g, cross).unwrap();
    assert!(iii.holds);
}

#[test]
fn planar_input_is_rejected() {
    let g = path(4);
    let p = EdgePair::new(EdgeId(0), EdgeId(2)).unwrap();
    assert!(matches!(oracle_crossing_pair(&g, p), Err(CharacterizeError::PlanarInput)));
    assert!(matches!(condition_iii(&g, p), Err(CharacterizeError::PlanarInput)));
}

#[test]
fn v8_conditions() {
    let g = moebius_ladder(4);
    let p = pair(&g, (0, 1), (4, 5));
    let r = check_theorem3(&g, p).unwrap();
    assert!(r.cond_i && r.cond_ii.holds && r.cond_iii.holds);
    let cert = r.cond_iii.witness.unwrap();
    cert.verify(&g).unwrap();

    let adj = pair(&g, (0, 1), (1, 5));
    let iii = condition_iii(&g, adj).unwrap();
    assert_eq!(iii.failed, Some(Clause::Adjacent));
    check_theorem3(&g, pair(&g, (0, 1), (2, 6))).unwrap();
}

#[test]
fn k34_fails_every_pair() {
    let g = complete_bipartite(3, 4);
    for p in disjoint_pairs(&g) {
        let iii = condition_iii(&g, p).unwrap();
        assert!(!iii.holds);
        assert!(matches!(
            iii.failed,
            Some(Clause::DeletingENonplanar) | Some(Clause::DeletingFNonplanar)
        ));
    }
}

#[test]
fn k6_has_no_crossing_pair() {
    let g = complete(6);
    for p in disjoint_pairs(&g) {
        let r = check_theorem3(&g, p).unwrap();
        assert!(!r.cond_i);
    }
}

#[test]
fn decide() {
    assert!(matches!(crossing_number_le_1(&path(3)).unwrap(), CrossingVerdict::Planar(_)));
    let v8 = moebius_ladder(4);
    match crossing_number_le_1(&v8).unwrap() {
        CrossingVerdict::ExactlyOne { drawing, kuratowski } => {
            drawing.verify(&v8).unwrap();
            kuratowski.verify(&v8).unwrap();
        }
        other => panic!("V8 has crossing number one, got {}", other.label()),
    }
    let k6 = complete(6);
    match crossing_number_le_1(&k6).unwrap() {
        CrossingVerdict::AtLeastTwo { failures, .. } => assert!(!failures.is_empty()),
        other => panic!("K6 has crossing number three, got {}", other.label()),
    }
}

#[test]
fn constructive_matches_oracle() {
    let v8 = moebius_ladder(4);
    let k33 = complete_bipartite(3, 3);
    let s = siran();
    let cases = [
        (v8.clone(), pair(&v8, (0, 1), (4, 5))),
        (s.clone(), pair(&s, (U, Y), (W, Z))),
        (k33.clone(), pair(&k33, (0, 3), (1, 4))),
    ];
    for (g, p) in cases {
        let built = build_one_drawing_constructive(&g, p).unwrap();
        built.verify(&g).unwrap();
        let oracle = oracle_crossing_pair(&g, p).unwrap().unwrap();
        if g == v8 {
            assert_eq!(built.rotation.face_signature(), oracle.rotation.face_signature());
        }
    }
}

#[test]
fn constructive_rejects_failing_pairs() {
    let g = siran();
    assert!(matches!(
        build_one_drawing_constructive(&g, pair(&g, (U, X), (W, Z))),
        Err(CharacterizeError::PreconditionViolated(_))
    ));
}

#[test]
fn construction_trace_claims_hold() {
    let g = moebius_ladder(4);
    let h = onecross::planarity::test_planarity(&g).certificate().unwrap();
    let c = build_with_witness(&g, pair(&g, (0, 1), (4, 5)), &h).unwrap();
    assert!(c.trace.all_claims_hold());
}

#[test]
fn potential_pairs() {
    let k6 = complete(6);
    let k6e = k6.delete_edges(&[EdgeId(0)]).unwrap();
    assert!(potential_crossing_pairs(&k6e).unwrap().pairs.is_empty());

    let k6ee = k6.delete_edges(&[edge(&k6, 0, 1), edge(&k6, 2, 3)]).unwrap();
    let r = potential_crossing_pairs(&k6ee).unwrap();
    assert!(r.crossing_number_one);
    assert!(!r.pairs.is_empty());

    let s = siran();
    let r = potential_crossing_pairs(&s).unwrap();
    let find = |p: EdgePair| r.pairs.iter().find(|q| q.pair == p).map(|q| q.separation.is_separated());
    assert_eq!(find(pair(&s, (U, X), (W, Z))), Some(true));
    assert_eq!(find(pair(&s, (U, Y), (W, Z))), Some(false));
    assert!(r.pairs.iter().all(|q| q.separation != Separation::NotSeparated || r.crossing_number_one));
}
