//! Maximum matching in general graphs (blossom contraction over an
//! augmenting-path BFS) and the edge cover number via n - mu.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

const NONE: usize = usize::MAX;

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).len()
}

/// A maximum matching as `(u, v)` pairs with `u < v`, ascending.
pub fn maximum_matching(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let n = g.n();
    let mut state = Blossom {
        g,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
    };
    // Greedy seed matching.
    for v in 0..n {
        if state.mate[v] == NONE {
            if let Some(u) = g.neighbors(v).find(|&u| state.mate[u] == NONE) {
                state.mate[v] = u;
                state.mate[u] = v;
            }
        }
    }
    for root in 0..n {
        if state.mate[root] != NONE {
            continue;
        }
        let mut tail = state.find_augmenting_path(root);
        while tail != NONE {
            let prev = state.parent[tail];
            let next = state.mate[prev];
            state.mate[tail] = prev;
            state.mate[prev] = tail;
            tail = next;
        }
    }
    let mut out = Vec::new();
    for v in 0..n {
        if state.mate[v] != NONE && v < state.mate[v] {
            out.push((v, state.mate[v]));
        }
    }
    out
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl Blossom<'_> {
    /// BFS from an exposed root; returns the far end of an augmenting path,
    /// or NONE. Odd cycles are contracted by remapping `base`.
    fn find_augmenting_path(&mut self, root: usize) -> usize {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for i in 0..n {
            self.base[i] = i;
        }
        self.used[root] = true;
        let mut queue = vec![root];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur_base = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur_base, to);
                    self.mark_path(to, cur_base, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return to;
                    }
                    self.used[self.mate[to]] = true;
                    queue.push(self.mate[to]);
                }
            }
        }
        NONE
    }

    fn lca(&self, a: usize, b: usize) -> usize {
        let mut on_path = vec![false; self.g.n()];
        let mut v = a;
        loop {
            v = self.base[v];
            on_path[v] = true;
            if self.mate[v] == NONE {
                break;
            }
            v = self.parent[self.mate[v]];
        }
        let mut u = b;
        loop {
            u = self.base[u];
            if on_path[u] {
                return u;
            }
            u = self.parent[self.mate[u]];
        }
    }

    fn mark_path(&mut self, mut v: usize, base: usize, mut child: usize) {
        while self.base[v] != base {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }
}

/// Smallest number of edges touching every vertex: `n - mu` by the
/// matching/cover identity. Fails when an isolated vertex exists.
pub fn edge_cover_number(g: &Graph) -> Result<usize> {
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 0) {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(g.n() - matching_number(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::Graph;

    /// Exhaustive maximum matching by branching on each edge.
    fn brute_matching(g: &Graph) -> usize {
        fn rec(edges: &[(usize, usize)], taken: &mut Vec<bool>, idx: usize) -> usize {
            if idx == edges.len() {
                return 0;
            }
            let (u, v) = edges[idx];
            let mut best = rec(edges, taken, idx + 1);
            if !taken[u] && !taken[v] {
                taken[u] = true;
                taken[v] = true;
                best = best.max(1 + rec(edges, taken, idx + 1));
                taken[u] = false;
                taken[v] = false;
            }
            best
        }
        let edges = g.edges();
        rec(&edges, &mut vec![false; g.n()], 0)
    }

    #[test]
    fn named_edge_covers() {
        assert_eq!(edge_cover_number(&families::path(4).unwrap()).unwrap(), 2);
        assert_eq!(edge_cover_number(&families::spider(&[2, 2, 1]).unwrap()).unwrap(), 3);
        for n in 2..7 {
            assert_eq!(edge_cover_number(&families::star(n).unwrap()).unwrap(), n);
        }
        assert!(matches!(
            edge_cover_number(&families::complete(3).unwrap().complement()),
            Err(Error::IsolatedVertex(_))
        ));
    }

    #[test]
    fn matches_are_matchings() {
        let g = families::petersen();
        let m = maximum_matching(&g);
        assert_eq!(m.len(), 5); // perfect
        let mut seen = vec![false; g.n()];
        for &(u, v) in &m {
            assert!(g.has_edge(u, v));
            assert!(!seen[u] && !seen[v]);
            seen[u] = true;
            seen[v] = true;
        }
    }

    #[test]
    fn blossom_agrees_with_brute_force() {
        // Odd components force blossom handling.
        let two_triangles =
            Graph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)])
                .unwrap();
        assert_eq!(matching_number(&two_triangles), brute_matching(&two_triangles));
        for seed in 0..40 {
            let g = families::random_connected(9, 0.35, seed).unwrap();
            assert_eq!(matching_number(&g), brute_matching(&g), "seed {seed}");
        }
        for seed in 0..10 {
            let g = families::random_connected(12, 0.25, 100 + seed).unwrap();
            assert_eq!(matching_number(&g), brute_matching(&g), "seed {seed}");
        }
    }
}
