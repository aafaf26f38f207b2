//! Immutable simple undirected graphs with lazily computed all-pairs
//! hop distances, plus the complement / join / corona constructions.

use std::sync::OnceLock;

use crate::bitset::Bitset;
use crate::error::{Error, Result};

pub type Vertex = usize;

/// Distance marker for pairs in different components.
pub const UNREACHABLE: u16 = u16::MAX;

/// Hard cap on the order of a graph; enough for every desk-scale input.
pub const MAX_ORDER: usize = 512;

/// Row-major all-pairs hop distance matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u16>,
}

impl DistanceMatrix {
    fn compute(g: &Graph) -> Self {
        let n = g.n;
        let mut d = vec![UNREACHABLE; n * n];
        let mut queue = Vec::with_capacity(n);
        for src in 0..n {
            let row = &mut d[src * n..(src + 1) * n];
            row[src] = 0;
            queue.clear();
            queue.push(src);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let du = row[u];
                for v in g.rows[u].iter() {
                    if row[v] == UNREACHABLE {
                        row[v] = du + 1;
                        queue.push(v);
                    }
                }
            }
        }
        DistanceMatrix { n, d }
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u16 {
        self.d[u * self.n + v]
    }

    pub fn is_reachable(&self, u: Vertex, v: Vertex) -> bool {
        self.get(u, v) != UNREACHABLE
    }

    /// Largest finite entry; `None` when some pair is unreachable.
    pub fn max_finite(&self) -> Option<u16> {
        let mut max = 0;
        for &x in &self.d {
            if x == UNREACHABLE {
                return None;
            }
            max = max.max(x);
        }
        Some(max)
    }
}

/// Distance vector of a vertex with respect to an ordered landmark list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricRepresentation {
    pub landmarks: Vec<Vertex>,
    pub distances: Vec<u16>,
}

/// An immutable simple graph on vertices `0..n`.
///
/// Adjacency is stored as one bit row per vertex; the distance matrix is
/// computed on first use and shared by all later calls.
pub struct Graph {
    n: usize,
    rows: Vec<Bitset>,
    dist: OnceLock<DistanceMatrix>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        let g = Graph {
            n: self.n,
            rows: self.rows.clone(),
            dist: OnceLock::new(),
        };
        if let Some(d) = self.dist.get() {
            let _ = g.dist.set(d.clone());
        }
        g
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl std::hash::Hash for Graph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.rows.hash(state);
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("order must be positive".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::InvalidParameter(format!(
                "order {n} above supported maximum {MAX_ORDER}"
            )));
        }
        Ok(Graph {
            n,
            rows: vec![Bitset::new(n); n],
            dist: OnceLock::new(),
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange { vertex: u, order: self.n });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, order: self.n });
        }
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        debug_assert!(self.dist.get().is_none());
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && u != v && self.rows[u].contains(v)
    }

    pub fn degree(&self, u: Vertex) -> usize {
        self.rows[u].count()
    }

    pub fn neighbors(&self, u: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.rows[u].iter()
    }

    /// Adjacency row of `u` as a bit set over all vertices.
    pub fn row(&self, u: Vertex) -> &Bitset {
        &self.rows[u]
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count()).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// All-pairs hop distances, computed once per graph.
    pub fn distances(&self) -> &DistanceMatrix {
        self.dist.get_or_init(|| DistanceMatrix::compute(self))
    }

    #[inline]
    pub fn dist(&self, u: Vertex, v: Vertex) -> u16 {
        self.distances().get(u, v)
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = Bitset::new(self.n);
        seen.insert(0);
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for v in self.rows[u].iter() {
                if !seen.contains(v) {
                    seen.insert(v);
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == self.n
    }

    pub(crate) fn require_connected(&self, operation: &'static str) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected { operation })
        }
    }

    /// Complement: `uv` is an edge iff `u != v` and `uv` is not an edge here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("order unchanged");
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.rows[u].contains(v) {
                    g.rows[u].insert(v);
                    g.rows[v].insert(u);
                }
            }
        }
        g
    }

    /// Join: disjoint union (self first) plus every cross edge.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v)?;
        }
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v)?;
            }
        }
        Ok(g)
    }

    /// Corona product: one copy of `other` per vertex of `self`, each copy
    /// joined completely to its base vertex. Base vertices keep indices
    /// `0..n(self)`; copy `i` occupies the next `n(other)` indices in order.
    pub fn corona(&self, other: &Graph) -> Result<Graph> {
        self.require_connected("corona")?;
        let nh = other.n;
        let n = self.n * (1 + nh);
        let mut g = Graph::empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for i in 0..self.n {
            let base = self.n + i * nh;
            for (u, v) in other.edges() {
                g.add_edge(base + u, base + v)?;
            }
            for u in 0..nh {
                g.add_edge(i, base + u)?;
            }
        }
        Ok(g)
    }

    pub fn diameter(&self) -> Result<u32> {
        self.require_connected("diameter")?;
        Ok(self.distances().max_finite().expect("connected") as u32)
    }

    /// Length of a shortest cycle; `None` for forests.
    ///
    /// For every BFS root, a non-tree edge `(u, w)` closes a walk of length
    /// `d(u) + d(w) + 1` containing a cycle no longer than that; a root on a
    /// shortest cycle attains the girth exactly.
    pub fn girth(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        let mut dist = vec![u32::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        let mut queue = Vec::with_capacity(self.n);
        for root in 0..self.n {
            dist.fill(u32::MAX);
            parent.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push(root);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                if best.is_some_and(|b| 2 * dist[u] >= b) {
                    continue;
                }
                for v in self.rows[u].iter() {
                    if dist[v] == u32::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push(v);
                    } else if parent[u] != v && parent[v] != u {
                        let cycle = dist[u] + dist[v] + 1;
                        if best.is_none_or(|b| cycle < b) {
                            best = Some(cycle);
                        }
                    }
                }
            }
        }
        best
    }

    pub fn metric_representation(&self, u: Vertex, landmarks: &[Vertex]) -> MetricRepresentation {
        let d = self.distances();
        MetricRepresentation {
            landmarks: landmarks.to_vec(),
            distances: landmarks.iter().map(|&x| d.get(u, x)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn path_distances() {
        let g = families::path(3).unwrap();
        assert_eq!(g.dist(0, 2), 2);
        assert_eq!(g.dist(2, 0), 2);
        assert_eq!(g.dist(1, 1), 0);
    }

    #[test]
    fn complete_distances() {
        let g = families::complete(4).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                assert_eq!(g.dist(u, v), u16::from(u != v));
            }
        }
    }

    #[test]
    fn wheel_distances() {
        let g = families::wheel(7).unwrap();
        for rim in 0..7 {
            assert_eq!(g.dist(7, rim), 1);
        }
        for i in 0..7 {
            assert_eq!(g.dist(i, (i + 3) % 7), 2);
        }
    }

    #[test]
    fn connectivity() {
        assert!(families::complete(1).unwrap().is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(families::petersen().is_connected());
        assert_eq!(two_edges.dist(0, 2), UNREACHABLE);
    }

    #[test]
    fn complement_of_complete_is_edgeless() {
        let g = families::complete(5).unwrap().complement();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn complement_of_c5_is_pentagram() {
        let g = families::cycle(5).unwrap().complement();
        let expected = Graph::from_edges(5, &[(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]).unwrap();
        assert_eq!(g, expected);
    }

    #[test]
    fn join_shapes() {
        let w = families::complete(1)
            .unwrap()
            .join(&families::cycle(7).unwrap())
            .unwrap();
        assert_eq!(w.n(), 8);
        assert_eq!(w.degree(0), 7);
        let k5 = families::complete(1)
            .unwrap()
            .join(&families::complete(4).unwrap())
            .unwrap();
        assert_eq!(k5, families::complete(5).unwrap());
        let kst = Graph::empty(2)
            .unwrap()
            .join(&Graph::empty(3).unwrap())
            .unwrap();
        assert_eq!(kst, families::complete_bipartite(2, 3).unwrap());
    }

    #[test]
    fn corona_shapes() {
        let h = families::path(3).unwrap();
        let single = families::complete(1).unwrap().corona(&h).unwrap();
        assert_eq!(single, families::complete(1).unwrap().join(&h).unwrap());

        let p2_k1 = families::path(2)
            .unwrap()
            .corona(&families::complete(1).unwrap())
            .unwrap();
        // 4-vertex tree with two leaves: a path up to relabeling.
        assert_eq!(p2_k1.n(), 4);
        assert_eq!(p2_k1.edge_count(), 3);
        assert_eq!(
            (0..4).filter(|&v| p2_k1.degree(v) == 1).count(),
            2
        );

        let big = families::path(3)
            .unwrap()
            .corona(&families::cycle(4).unwrap())
            .unwrap();
        assert_eq!(big.n(), 15);
    }

    #[test]
    fn corona_rejects_disconnected_base() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let err = g.corona(&families::complete(1).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Disconnected { .. }));
    }

    #[test]
    fn diameter_and_girth() {
        assert_eq!(families::wheel(7).unwrap().diameter().unwrap(), 2);
        assert_eq!(families::path(6).unwrap().girth(), None);
        assert_eq!(families::petersen().girth(), Some(5));
        assert_eq!(families::cycle(9).unwrap().girth(), Some(9));
        assert_eq!(families::complete(4).unwrap().girth(), Some(3));
        assert_eq!(families::complete_bipartite(2, 3).unwrap().girth(), Some(4));
    }

    #[test]
    fn representation_vector() {
        let g = families::path(4).unwrap();
        let r = g.metric_representation(3, &[0, 1]);
        assert_eq!(r.distances, vec![3, 2]);
        assert_eq!(r.landmarks, vec![0, 1]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 0)]),
            Err(Error::LoopEdge(0))
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 5)]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(Graph::empty(0).is_err());
    }
}
