//! Brute-force reference oracles over plain edge lists.
//!
//! Nothing here calls the planarity, bridge or characterization code of
//! `onecross`; graphs are `(vertex count, edge list)` and embeddings are
//! found by enumerating every rotation system.

use onecross::Multigraph;
use rand::Rng;

/// A graph as a vertex count and an edge list; edge `i` is `edges[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl EdgeList {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Self {
        assert!(edges.iter().all(|&(u, v)| u != v && u < n && v < n));
        Self { n, edges }
    }

    /// Live edges of `g` in id order; the `i`th entry has id `ids[i]`.
    pub fn from_multigraph(g: &Multigraph) -> (Self, Vec<usize>) {
        let mut edges = Vec::new();
        let mut ids = Vec::new();
        for (e, u, v) in g.edges() {
            edges.push((u.0, v.0));
            ids.push(e.0);
        }
        (Self::new(g.vertex_count(), edges), ids)
    }

    pub fn to_multigraph(&self) -> Multigraph {
        Multigraph::build(self.n, self.edges.iter().copied()).expect("no loops")
    }

    pub fn adjacent_edges(&self, e: usize, f: usize) -> bool {
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        a == c || a == d || b == c || b == d
    }

    fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            inc[u].push(i);
            inc[v].push(i);
        }
        inc
    }

    fn components(&self) -> (usize, usize) {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for &(u, v) in &self.edges {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let roots = (0..self.n).filter(|&x| find(&mut parent, x) == x).count();
        let isolated = deg.iter().filter(|&&d| d == 0).count();
        (roots, isolated)
    }
}

/// Counts the faces of the rotation system `rot` (cyclic edge lists per
/// vertex): leaving `v` along `e` to `w`, continue with the successor of `e`
/// at `w`.
fn count_faces(g: &EdgeList, rot: &[Vec<usize>]) -> usize {
    let m = g.edges.len();
    // dart 2e leaves the first endpoint, 2e+1 the second
    let mut pos = vec![0usize; 2 * m];
    for (v, r) in rot.iter().enumerate() {
        for (i, &e) in r.iter().enumerate() {
            let side = if g.edges[e].0 == v { 0 } else { 1 };
            pos[2 * e + side] = i;
        }
    }
    let mut seen = vec![false; 2 * m];
    let mut faces = 0;
    for start in 0..2 * m {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut d = start;
        while !seen[d] {
            seen[d] = true;
            let e = d / 2;
            let (a, b) = g.edges[e];
            let head = if d % 2 == 0 { b } else { a };
            let back = if d % 2 == 0 { 1 } else { 0 };
            let r = &rot[head];
            let next = r[(pos[2 * e + back] + 1) % r.len()];
            d = 2 * next + if g.edges[next].0 == head { 0 } else { 1 };
        }
    }
    faces
}

fn is_planar_rotation(g: &EdgeList, rot: &[Vec<usize>], components: usize, isolated: usize) -> bool {
    let f = count_faces(g, rot) as isize;
    g.n as isize - g.edges.len() as isize + f == 2 * components as isize - isolated as isize
}

/// Every cyclic order of `items`, with the first item fixed in front.
fn cyclic_orders(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 2 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut rest = items[1..].to_vec();
    permute(&mut rest, 0, &mut |p| {
        let mut o = vec![items[0]];
        o.extend_from_slice(p);
        out.push(o);
    });
    out
}

fn permute(xs: &mut Vec<usize>, k: usize, emit: &mut dyn FnMut(&[usize])) {
    if k == xs.len() {
        emit(xs);
        return;
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        permute(xs, k + 1, emit);
        xs.swap(k, i);
    }
}

/// Looks for a planar rotation system, with the choices at each vertex
/// restricted to `choices[v]`.
fn search_rotations(g: &EdgeList, choices: &[Vec<Vec<usize>>]) -> Option<Vec<Vec<usize>>> {
    let (c, iso) = g.components();
    let mut idx = vec![0usize; g.n];
    loop {
        let rot: Vec<Vec<usize>> = (0..g.n).map(|v| choices[v][idx[v]].clone()).collect();
        if is_planar_rotation(g, &rot, c, iso) {
            return Some(rot);
        }
        let mut v = 0;
        loop {
            if v == g.n {
                return None;
            }
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                break;
            }
            idx[v] = 0;
            v += 1;
        }
    }
}

/// A planar rotation system found by exhaustive enumeration.
pub fn brute_planar_embedding(g: &EdgeList) -> Option<Vec<Vec<usize>>> {
    if g.n >= 3 && g.edges.len() > 3 * g.n - 6 && simple(g) {
        return None;
    }
    let inc = g.incidence();
    let choices: Vec<_> = inc.iter().map(|r| cyclic_orders(r)).collect();
    search_rotations(g, &choices)
}

fn simple(g: &EdgeList) -> bool {
    let mut seen = std::collections::HashSet::new();
    g.edges.iter().all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
}

pub fn brute_is_planar(g: &EdgeList) -> bool {
    brute_planar_embedding(g).is_some()
}

/// Whether `g` has a drawing whose only crossing is between edges `e` and
/// `f`: the graph with the crossing made a vertex has a planar rotation
/// system in which the two edges pass through each other. Adjacent edges
/// are tried like any other pair.
pub fn brute_crossing_pair(g: &EdgeList, e: usize, f: usize) -> bool {
    if e == f {
        return false;
    }
    let w = g.n;
    let mut edges: Vec<(usize, usize)> = g
        .edges
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != e && i != f)
        .map(|(_, &x)| x)
        .collect();
    let k = edges.len();
    let (ae, be) = g.edges[e];
    let (af, bf) = g.edges[f];
    edges.extend([(ae, w), (w, be), (af, w), (w, bf)]);
    let h = EdgeList::new(g.n + 1, edges);
    if h.edges.len() > 3 * h.n - 6 && simple(&h) {
        return false;
    }
    let inc = h.incidence();
    let mut choices: Vec<_> = inc.iter().map(|r| cyclic_orders(r)).collect();
    // around the crossing the halves of e are opposite
    choices[w] = vec![vec![k, k + 2, k + 1, k + 3], vec![k, k + 3, k + 1, k + 2]];
    search_rotations(&h, &choices).is_some()
}

/// 0 when planar, 1 when some pair of edges can be the only crossing,
/// 2 otherwise.
pub fn brute_crossing_number_le_1(g: &EdgeList) -> u8 {
    if brute_is_planar(g) {
        return 0;
    }
    let m = g.edges.len();
    for e in 0..m {
        for f in e + 1..m {
            if brute_crossing_pair(g, e, f) {
                return 1;
            }
        }
    }
    2
}

/// Every cycle, as a vertex bitmask and an edge bitmask. Parallel edges
/// give cycles of length two.
pub fn all_cycles(g: &EdgeList) -> Vec<(u64, u64)> {
    assert!(g.n <= 64 && g.edges.len() <= 64);
    let inc = g.incidence();
    let mut out = std::collections::BTreeSet::new();
    for s in 0..g.n {
        // cycles whose least vertex is s
        let mut stack = vec![(s, 1u64 << s, 0u64)];
        while let Some((v, vs, es)) = stack.pop() {
            for &e in &inc[v] {
                if es >> e & 1 == 1 {
                    continue;
                }
                let (a, b) = g.edges[e];
                let w = if a == v { b } else { a };
                if w == s && es != 0 {
                    out.insert((vs, es | 1 << e));
                } else if w > s && vs >> w & 1 == 0 {
                    stack.push((w, vs | 1 << w, es | 1 << e));
                }
            }
        }
    }
    out.into_iter().collect()
}

/// Vertex-disjoint cycles through `e` and through `f`, by comparing all
/// cycles pairwise.
pub fn brute_separated(g: &EdgeList, e: usize, f: usize) -> bool {
    let cycles = all_cycles(g);
    let through = |x: usize| cycles.iter().filter(move |c| c.1 >> x & 1 == 1);
    through(e).any(|ce| through(f).any(|cf| ce.0 & cf.0 == 0))
}

/// Whether the edges in `mask` form a subdivision of K5 or K3,3: contract
/// the degree-two vertices and compare with the two graphs.
pub fn is_kuratowski_subdivision(g: &EdgeList, mask: u64) -> bool {
    let chosen: Vec<usize> = (0..g.edges.len()).filter(|&i| mask >> i & 1 == 1).collect();
    let mut inc = vec![Vec::new(); g.n];
    for &i in &chosen {
        let (u, v) = g.edges[i];
        inc[u].push(i);
        inc[v].push(i);
    }
    let branch: Vec<usize> = (0..g.n).filter(|&v| !inc[v].is_empty() && inc[v].len() != 2).collect();
    let degree = match branch.len() {
        5 => 4,
        6 => 3,
        _ => return false,
    };
    if branch.iter().any(|&v| inc[v].len() != degree) {
        return false;
    }
    // walk every branch from its first vertex
    let mut used = vec![false; g.edges.len()];
    let mut links = Vec::new();
    for &b in &branch {
        for &start in &inc[b] {
            if used[start] {
                continue;
            }
            let (mut at, mut e) = (b, start);
            loop {
                used[e] = true;
                let (x, y) = g.edges[e];
                at = if x == at { y } else { x };
                if inc[at].len() != 2 {
                    break;
                }
                e = if inc[at][0] == e { inc[at][1] } else { inc[at][0] };
            }
            links.push((b.min(at), b.max(at)));
        }
    }
    if chosen.iter().any(|&i| !used[i]) {
        // a cycle of degree-two vertices
        return false;
    }
    links.sort();
    let distinct = links.windows(2).all(|w| w[0] != w[1]) && links.iter().all(|&(a, b)| a != b);
    if !distinct {
        return false;
    }
    if degree == 4 {
        return links.len() == 10;
    }
    // K3,3: the link graph is bipartite with sides of three
    let mut side = vec![None; g.n];
    side[branch[0]] = Some(false);
    let mut changed = true;
    while changed {
        changed = false;
        for &(a, b) in &links {
            match (side[a], side[b]) {
                (Some(x), None) => side[b] = Some(!x),
                (None, Some(x)) => side[a] = Some(!x),
                (Some(x), Some(y)) if x == y => return false,
                _ => continue,
            }
            changed = true;
        }
    }
    links.len() == 9 && branch.iter().filter(|&&v| side[v] == Some(true)).count() == 3
}

/// Kuratowski subgraphs by testing every edge subset.
pub fn brute_kuratowski_count(g: &EdgeList) -> usize {
    let m = g.edges.len();
    assert!(m <= 24, "subset enumeration over {m} edges");
    (0u64..1 << m)
        .filter(|mask| matches!(mask.count_ones(), 9..) && is_kuratowski_subdivision(g, *mask))
        .count()
}

/// Every simple path from `s` to `t` as an edge sequence, sorted.
pub fn simple_paths(g: &EdgeList, s: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(g: &EdgeList, inc: &[Vec<usize>], at: usize, t: usize, seen: &mut Vec<bool>, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if at == t {
            out.push(path.clone());
            return;
        }
        for &e in &inc[at] {
            let (a, b) = g.edges[e];
            let w = if a == at { b } else { a };
            if !seen[w] {
                seen[w] = true;
                path.push(e);
                go(g, inc, w, t, seen, path, out);
                path.pop();
                seen[w] = false;
            }
        }
    }
    let inc = g.incidence();
    let mut seen = vec![false; g.n];
    seen[s] = true;
    let mut out = Vec::new();
    go(g, &inc, s, t, &mut seen, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// A random triangulation of the sphere on `n >= 3` vertices: repeated
/// vertex insertion into a random face, then `flips` random edge flips.
pub fn random_triangulation<R: Rng>(n: usize, flips: usize, rng: &mut R) -> EdgeList {
    assert!(n >= 3);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    for v in 3..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces.swap_remove(i);
        faces.extend([[a, b, v], [b, c, v], [a, c, v]]);
    }
    let has_edge = |faces: &[[usize; 3]], x: usize, y: usize| faces.iter().any(|f| f.contains(&x) && f.contains(&y));
    for _ in 0..flips {
        if n < 4 {
            break;
        }
        let f = faces[rng.gen_range(0..faces.len())];
        let k = rng.gen_range(0..3);
        let (a, b) = (f[k], f[(k + 1) % 3]);
        let both: Vec<usize> = (0..faces.len())
            .filter(|&i| faces[i].contains(&a) && faces[i].contains(&b))
            .collect();
        if both.len() != 2 {
            continue;
        }
        let third = |t: [usize; 3]| t.into_iter().find(|&x| x != a && x != b).expect("triangle");
        let (c, d) = (third(faces[both[0]]), third(faces[both[1]]));
        if c == d || has_edge(&faces, c, d) {
            continue;
        }
        faces[both[0]] = [a, c, d];
        faces[both[1]] = [b, c, d];
    }
    let mut edges = std::collections::BTreeSet::new();
    for [a, b, c] in &faces {
        for (x, y) in [(*a, *b), (*b, *c), (*a, *c)] {
            edges.insert((x.min(y), x.max(y)));
        }
    }
    EdgeList::new(n, edges.into_iter().collect())
}
