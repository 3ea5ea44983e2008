use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use onecross::bridges::{decompose, detaching_cycle_ve, detaching_cycle_vv, overlap, Cofaciality};
use onecross::budget::Budget;
use onecross::characterize::{check_theorem3, oracle_crossing_pair, planarize, OneDrawing};
use onecross::corpus::{all_graphs, random_gnm};
use onecross::generators::{complete, complete_bipartite};
use onecross::graph::{avoiding_paths, cycles_within};
use onecross::kuratowski::{enumerate_kuratowski, BranchStructure};
use onecross::planarity::{embed_with_outer_cycle, is_planar, test_planarity, Planarity};
use onecross::separation::separated_by_cycles;
use onecross::{EdgeId, EdgePair, Multigraph, Subgraph, VertexId};
use onecross_testkit::{
    brute_is_planar, brute_kuratowski_count, brute_separated, random_triangulation, simple_paths, EdgeList,
};

fn gnm(seed: u64, n: usize, max_m: usize) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all = n * (n - 1) / 2;
    let m = rng.gen_range(0..=max_m.min(all));
    random_gnm(n, m, &mut rng).to_multigraph()
}

fn planar(seed: u64, n: usize) -> Multigraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let t = random_triangulation(n, 2 * n, &mut rng);
    let keep = rng.gen_range(0.4..=1.0);
    let edges: Vec<_> = t.edges.into_iter().filter(|_| rng.gen_bool(keep)).collect();
    Multigraph::build(n, edges).unwrap()
}

fn local(ids: &[usize], e: EdgeId) -> usize {
    ids.iter().position(|&x| x == e.0).unwrap()
}

#[test]
fn planarity_matches_brute_force_on_six_vertices() {
    for n in 1..=6 {
        for sg in all_graphs(n) {
            let g = sg.to_multigraph();
            let (el, _) = EdgeList::from_multigraph(&g);
            assert_eq!(is_planar(&g), brute_is_planar(&el), "{:?}", sg.edge_list());
        }
    }
}

// K5 (6), K5 with one subdivided edge (60) and K3,3 (10), confirmed over all 2^15 edge subsets.
const K6_KURATOWSKI_SUBGRAPHS: usize = 76;

#[test]
fn k6_kuratowski_count() {
    let g = complete(6);
    let (el, _) = EdgeList::from_multigraph(&g);
    let brute = brute_kuratowski_count(&el);
    let found = enumerate_kuratowski(&g, None, &mut Budget::default()).unwrap();
    assert_eq!(found.len(), brute);
    assert_eq!(brute, K6_KURATOWSKI_SUBGRAPHS);
}

#[test]
fn kuratowski_pairs_match_the_gadget() {
    let mut graphs = vec![complete(5), complete_bipartite(3, 3)];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..20 {
        let mut g = if i % 2 == 0 { complete(5) } else { complete_bipartite(3, 3) };
        for _ in 0..rng.gen_range(1..=3) {
            let ids: Vec<EdgeId> = g.edge_ids().collect();
            let e = ids[rng.gen_range(0..ids.len())];
            g = g.subdivide(e).unwrap().0;
        }
        graphs.push(g);
    }
    for g in graphs {
        let cert = test_planarity(&g).certificate().unwrap();
        assert_eq!(cert.edges().len(), g.edge_count());
        let bs = BranchStructure::new(cert);
        let ids: Vec<EdgeId> = g.edge_ids().collect();
        for (i, &e) in ids.iter().enumerate() {
            for &f in &ids[i + 1..] {
                let crossing = bs.is_crossing_pair(e, f).unwrap();
                let p = EdgePair::new(e, f).unwrap();
                assert_eq!(crossing, oracle_crossing_pair(&g, p).unwrap().is_some());
                if crossing {
                    assert!(is_planar(&g.delete_edges(&[e]).unwrap()));
                    assert!(is_planar(&g.delete_edges(&[f]).unwrap()));
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn planarity_matches_brute_force_on_seven_vertices(seed in any::<u64>()) {
        let g = gnm(seed, 7, 11);
        let (el, _) = EdgeList::from_multigraph(&g);
        prop_assert_eq!(is_planar(&g), brute_is_planar(&el));
    }

    #[test]
    fn certificates_check_out(seed in any::<u64>(), n in 5usize..=12) {
        let g = gnm(seed, n, 3 * n);
        match test_planarity(&g) {
            Planarity::Planar(r) => {
                prop_assert!(r.is_planar());
                prop_assert!(r.reflected().is_planar());
            }
            Planarity::NonPlanar(h) => {
                prop_assert!(h.verify(&g).is_ok());
                let own = g.spanning_subgraph(&h.subgraph(&g));
                prop_assert!(!is_planar(&own));
            }
        }
    }

    #[test]
    fn parallel_edges_never_change_planarity(seed in any::<u64>(), n in 3usize..=9) {
        let g = gnm(seed, n, 3 * n);
        let mut doubled = g.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 1);
        for (_, u, v) in g.edges() {
            if rng.gen_bool(0.3) {
                doubled.add_edge(u, v).unwrap();
            }
        }
        prop_assert_eq!(is_planar(&doubled), is_planar(&doubled.simplify()));
        if let Planarity::Planar(r) = test_planarity(&doubled) {
            prop_assert!(r.is_planar());
        }
    }

    #[test]
    fn unrestricted_avoiding_paths_are_all_simple_paths(seed in any::<u64>(), n in 2usize..=8) {
        let g = gnm(seed, n, 12);
        let (el, ids) = EdgeList::from_multigraph(&g);
        let empty = Subgraph::empty(&g);
        let (s, t) = (VertexId(0), VertexId(n - 1));
        let mut ours: Vec<Vec<usize>> = avoiding_paths(&g, &empty, s, t)
            .map(|p| {
                p.validate_path(&g).unwrap();
                p.edges.iter().map(|&e| local(&ids, e)).collect()
            })
            .collect();
        ours.sort();
        prop_assert_eq!(ours, simple_paths(&el, 0, n - 1));
    }

    #[test]
    fn delete_then_re_add_is_isomorphic(seed in any::<u64>(), n in 2usize..=8) {
        let g = gnm(seed, n, 20);
        prop_assume!(g.edge_count() > 0);
        let ids: Vec<EdgeId> = g.edge_ids().collect();
        let doomed: Vec<EdgeId> = ids.iter().copied().filter(|e| e.0 % 3 == (seed % 3) as usize).collect();
        let mut h = g.delete_edges(&doomed).unwrap();
        for &e in &doomed {
            let (u, v) = g.endpoints(e);
            h.add_edge(u, v).unwrap();
        }
        let a = onecross::corpus::SimpleGraph::from_multigraph(&g).canonical();
        let b = onecross::corpus::SimpleGraph::from_multigraph(&h).canonical();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn separation_agrees_with_all_cycle_pairs(seed in any::<u64>(), n in 4usize..=8) {
        let g = gnm(seed, n, 16);
        let (el, ids) = EdgeList::from_multigraph(&g);
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                let p = EdgePair::new(e, f).unwrap();
                let s = separated_by_cycles(&g, p).unwrap();
                prop_assert_eq!(s.is_separated(), brute_separated(&el, local(&ids, e), local(&ids, f)));
                if let Some(w) = s.witness() {
                    prop_assert!(w.verify(&g, p).is_ok());
                }
            }
        }
    }

    #[test]
    fn separation_is_monotone(seed in any::<u64>(), n in 6usize..=9) {
        let g = gnm(seed, n, 24);
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        prop_assume!(edges.len() >= 4);
        let p = EdgePair::new(edges[0], edges[edges.len() - 1]).unwrap();
        let mut sub = g.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut previous = separated_by_cycles(&sub, p).unwrap().is_separated();
        // removing edges can only destroy separations
        for &e in &edges[1..edges.len() - 1] {
            if rng.gen_bool(0.5) {
                sub = sub.delete_edges(&[e]).unwrap();
                let now = separated_by_cycles(&sub, p).unwrap().is_separated();
                prop_assert!(previous || !now);
                previous = now;
            }
        }
    }

    #[test]
    fn crossing_pair_facts(seed in any::<u64>(), n in 5usize..=8) {
        let g = gnm(seed, n, 18);
        prop_assume!(!is_planar(&g));
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                if g.edges_touch(e, f) {
                    continue;
                }
                let p = EdgePair::new(e, f).unwrap();
                let r = check_theorem3(&g, p).unwrap();
                let ge = is_planar(&g.delete_edges(&[e]).unwrap());
                let gf = is_planar(&g.delete_edges(&[f]).unwrap());
                if r.cond_i {
                    prop_assert!(ge && gf);
                }
                if r.cond_ii.every_kuratowski_crosses {
                    prop_assert!(ge && gf);
                }
                if r.cond_ii.separation.is_separated() {
                    prop_assert!(!r.cond_i);
                }
            }
        }
    }

    #[test]
    fn planarization_round_trip(seed in any::<u64>(), n in 4usize..=9) {
        let g = gnm(seed, n, 20);
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                let p = EdgePair::new(e, f).unwrap();
                let pl = planarize(&g, p).unwrap();
                let rot = pl.graph.vertices().map(|v| pl.graph.incident(v).to_vec()).collect();
                let r = onecross::planarity::RotationSystem::new(pl.graph.clone(), rot).unwrap();
                let d = OneDrawing::new(&g, p, r).unwrap();
                let back = d.unplanarize();
                prop_assert_eq!(back.slots(), g.slots());
                prop_assert_eq!(back.vertex_count(), g.vertex_count());
            }
        }
    }

    #[test]
    fn overlapping_bridges_need_both_sides(seed in any::<u64>(), n in 4usize..=8) {
        let g = planar(seed, n);
        let cycles = cycles_within(&g, |_| true);
        for c in cycles.iter().take(12) {
            let bridges = decompose(&g, &Subgraph::from_path(&g, c));
            for i in 0..bridges.len() {
                for j in i + 1..bridges.len() {
                    let (b1, b2) = (&bridges[i], &bridges[j]);
                    let v = overlap(b1, b2, c).unwrap();
                    prop_assert!(v.verify(b1, b2, c));
                    let both = Subgraph::from_path(&g, c).union(&b1.subgraph(&g)).union(&b2.subgraph(&g));
                    let h = g.spanning_subgraph(&both);
                    let one_side = embed_with_outer_cycle(&h, c).unwrap().is_some();
                    prop_assert_eq!(v.overlapping, !one_side);
                    if v.overlapping && !b1.nucleus.is_empty() && !b2.nucleus.is_empty() {
                        let mut plus = h.clone();
                        plus.add_edge(b1.nucleus[0], b2.nucleus[0]).unwrap();
                        prop_assert!(!is_planar(&plus));
                    }
                }
            }
        }
    }

    #[test]
    fn vertex_edge_agrees_with_subdivision(seed in any::<u64>(), n in 3usize..=8) {
        let g = planar(seed, n);
        let edges: Vec<EdgeId> = g.edge_ids().collect();
        for x in g.vertices() {
            for &f in &edges {
                let (a, b) = g.endpoints(f);
                if x == a || x == b {
                    continue;
                }
                let ve = detaching_cycle_ve(&g, x, f).unwrap();
                let (sub, m, _) = g.subdivide(f).unwrap();
                let vv = detaching_cycle_vv(&sub, x, m).unwrap();
                prop_assert_eq!(ve.is_cofacial(), vv.is_cofacial());
                let mut plus = sub.clone();
                plus.add_edge(x, m).unwrap();
                prop_assert_eq!(ve.is_cofacial(), is_planar(&plus));
                match ve {
                    Cofaciality::Cofacial { embedding, face } => {
                        prop_assert!(embedding.is_planar());
                        if let Some(face) = face {
                            prop_assert!(face.contains_vertex(x) && face.contains_edge(f));
                        }
                    }
                    Cofaciality::Detached(c) => prop_assert!(c.verify_vertex_edge(&g, x, f).is_ok()),
                }
            }
        }
    }
}
