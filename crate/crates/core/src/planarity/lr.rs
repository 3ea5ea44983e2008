//! Left-right planarity test with embedding construction, on simple graphs
//! given as `(vertex count, edge list)`. Rotations are returned as edge
//! indices into the input list.

const NONE: usize = usize::MAX;

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<usize>,
    high: Option<usize>,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

#[derive(Copy, Clone, Debug, Default)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct State<'a> {
    adj: Vec<Vec<(usize, usize)>>,
    edges: &'a [(usize, usize)],
    oriented: Vec<bool>,
    dst: Vec<usize>,
    src: Vec<usize>,
    height: Vec<usize>,
    parent_edge: Vec<Option<usize>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<i64>,
    out: Vec<Vec<usize>>,
    roots: Vec<usize>,
    refs: Vec<Option<usize>>,
    side: Vec<i64>,
    lowpt_edge: Vec<usize>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

impl<'a> State<'a> {
    fn new(n: usize, edges: &'a [(usize, usize)]) -> Self {
        let m = edges.len();
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        Self {
            adj,
            edges,
            oriented: vec![false; m],
            dst: vec![NONE; m],
            src: vec![NONE; m],
            height: vec![NONE; n],
            parent_edge: vec![None; n],
            lowpt: vec![0; m],
            lowpt2: vec![0; m],
            nesting_depth: vec![0; m],
            out: vec![Vec::new(); n],
            roots: Vec::new(),
            refs: vec![None; m],
            side: vec![1; m],
            lowpt_edge: vec![NONE; m],
            stack_bottom: vec![0; m],
            stack: Vec::new(),
        }
    }

    fn orient(&mut self, v: usize) {
        let parent = self.parent_edge[v];
        for k in 0..self.adj[v].len() {
            let (w, ei) = self.adj[v][k];
            if self.oriented[ei] {
                continue;
            }
            self.oriented[ei] = true;
            self.src[ei] = v;
            self.dst[ei] = w;
            self.out[v].push(ei);
            self.lowpt[ei] = self.height[v];
            self.lowpt2[ei] = self.height[v];
            if self.height[w] == NONE {
                self.parent_edge[w] = Some(ei);
                self.height[w] = self.height[v] + 1;
                self.orient(w);
            } else {
                self.lowpt[ei] = self.height[w];
            }
            self.nesting_depth[ei] = 2 * self.lowpt[ei] as i64;
            if self.lowpt2[ei] < self.height[v] {
                self.nesting_depth[ei] += 1;
            }
            if let Some(e) = parent {
                if self.lowpt[ei] < self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt[e].min(self.lowpt2[ei]);
                    self.lowpt[e] = self.lowpt[ei];
                } else if self.lowpt[ei] > self.lowpt[e] {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt[ei]);
                } else {
                    self.lowpt2[e] = self.lowpt2[e].min(self.lowpt2[ei]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: usize) -> bool {
        match i.high {
            Some(h) if !i.is_empty() => self.lowpt[h] > self.lowpt[b],
            _ => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        if p.left.is_empty() {
            return self.lowpt[p.right.low.expect("nonempty pair")];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low.expect("nonempty pair")];
        }
        self.lowpt[p.left.low.unwrap()].min(self.lowpt[p.right.low.unwrap()])
    }

    fn test(&mut self, v: usize) -> bool {
        let parent = self.parent_edge[v];
        for k in 0..self.out[v].len() {
            let ei = self.out[v][k];
            let w = self.dst[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < self.height[v] {
                let e = parent.expect("return edges imply a parent edge");
                if k == 0 {
                    self.lowpt_edge[e] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, e) {
                    return false;
                }
            }
        }
        if let Some(e) = parent {
            self.remove_back_edges(e);
        }
        true
    }

    fn add_constraints(&mut self, ei: usize, e: usize) -> bool {
        let mut p = ConflictPair::default();
        loop {
            let mut q = self.stack.pop().expect("return edges of ei are on the stack");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let qlow = q.right.low.expect("right side nonempty");
            if self.lowpt[qlow] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.refs[p.right.low.unwrap()] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.refs[qlow] = Some(self.lowpt_edge[e]);
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().unwrap();
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(l) = p.right.low {
                self.refs[l] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.refs[p.left.low.unwrap()] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: usize) {
        let u = self.src[e];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != self.height[u] {
                break;
            }
            let p = self.stack.pop().unwrap();
            if let Some(l) = p.left.low {
                self.side[l] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(h) = p.left.high {
                if self.dst[h] != u {
                    break;
                }
                p.left.high = self.refs[h];
            }
            if p.left.high.is_none() {
                if let Some(l) = p.left.low {
                    self.refs[l] = p.right.low;
                    self.side[l] = -1;
                    p.left.low = None;
                }
            }
            while let Some(h) = p.right.high {
                if self.dst[h] != u {
                    break;
                }
                p.right.high = self.refs[h];
            }
            if p.right.high.is_none() {
                if let Some(r) = p.right.low {
                    self.refs[r] = p.left.low;
                    self.side[r] = -1;
                    p.right.low = None;
                }
            }
            if !(p.left.is_empty() && p.right.is_empty()) {
                self.stack.push(p);
            }
        }
        if self.lowpt[e] < self.height[u] {
            let top = self.stack.last().expect("e has a return edge");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e] = match (hl, hr) {
                (Some(l), None) => Some(l),
                (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                _ => hr,
            };
        }
    }

    fn sign(&mut self, e: usize) -> i64 {
        // iterative resolution of the ref chain
        let mut chain = Vec::new();
        let mut cur = e;
        while let Some(r) = self.refs[cur] {
            chain.push(cur);
            cur = r;
        }
        let mut s = self.side[cur];
        for &x in chain.iter().rev() {
            self.side[x] *= s;
            self.refs[x] = None;
            s = self.side[x];
        }
        self.side[e]
    }

    fn run_test(&mut self, n: usize) -> bool {
        if n > 2 && self.edges.len() > 3 * n - 6 {
            return false;
        }
        for v in 0..n {
            if self.height[v] == NONE {
                self.height[v] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..n {
            let nd = &self.nesting_depth;
            self.out[v].sort_by_key(|&e| nd[e]);
        }
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            if !self.test(r) {
                return false;
            }
        }
        true
    }

    fn embed(mut self, n: usize) -> Vec<Vec<usize>> {
        for e in 0..self.edges.len() {
            let s = self.sign(e);
            self.nesting_depth[e] *= s;
        }
        for v in 0..n {
            let nd = &self.nesting_depth;
            self.out[v].sort_by_key(|&e| nd[e]);
        }
        let mut rot: Vec<Vec<usize>> = self.out.clone();
        let mut left_ref = vec![NONE; n];
        let mut right_ref = vec![NONE; n];
        // explicit stack to avoid deep recursion: (vertex, next child index)
        for &root in &self.roots {
            let mut stack = vec![(root, 0usize)];
            while let Some(&mut (v, ref mut k)) = stack.last_mut() {
                if *k >= self.out[v].len() {
                    stack.pop();
                    continue;
                }
                let ei = self.out[v][*k];
                *k += 1;
                let w = self.dst[ei];
                if self.parent_edge[w] == Some(ei) {
                    rot[w].insert(0, ei);
                    left_ref[v] = ei;
                    right_ref[v] = ei;
                    stack.push((w, 0));
                } else if self.side[ei] == 1 {
                    let pos = rot[w].iter().position(|&x| x == right_ref[w]).expect("ref");
                    rot[w].insert(pos + 1, ei);
                } else {
                    let pos = rot[w].iter().position(|&x| x == left_ref[w]).expect("ref");
                    rot[w].insert(pos, ei);
                    left_ref[w] = ei;
                }
            }
        }
        rot
    }
}

/// True iff the simple graph is planar.
pub fn is_planar(n: usize, edges: &[(usize, usize)]) -> bool {
    State::new(n, edges).run_test(n)
}

/// A planar rotation system (edge indices per vertex), or `None`.
pub fn planar_rotation(n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut st = State::new(n, edges);
    if !st.run_test(n) {
        return None;
    }
    Some(st.embed(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Vec<(usize, usize)> {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        e
    }

    #[test]
    fn small_complete_graphs() {
        assert!(is_planar(4, &complete(4)));
        assert!(!is_planar(5, &complete(5)));
        let mut k5e = complete(5);
        k5e.pop();
        assert!(is_planar(5, &k5e));
    }

    #[test]
    fn k33_is_not_planar() {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        assert!(!is_planar(6, &e));
        e.pop();
        assert!(is_planar(6, &e));
    }

    #[test]
    fn embedding_lists_every_edge() {
        let e = complete(4);
        let rot = planar_rotation(4, &e).unwrap();
        for (v, r) in rot.iter().enumerate() {
            assert_eq!(r.len(), 3, "vertex {v}");
        }
    }
}
