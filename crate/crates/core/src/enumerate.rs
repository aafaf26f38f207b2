//! Exhaustive enumeration of connected labeled graphs on few vertices,
//! with optional one-per-isomorphism-class deduplication.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Builds the graph whose upper-triangle edge mask is `mask`; bit `k` is the
/// k-th pair in the order (0,1), (0,2), (1,2), (0,3), ...
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if mask >> k & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("mask edges are in range")
}

#[cfg(test)]
fn mask_of(g: &Graph) -> u64 {
    let mut mask = 0;
    let mut k = 0;
    for v in 1..g.n() {
        for u in 0..v {
            if g.has_edge(u, v) {
                mask |= 1 << k;
            }
            k += 1;
        }
    }
    mask
}

/// Smallest edge mask over all relabelings. Full permutation search; fine
/// for the supported orders.
pub fn canonical_mask(g: &Graph) -> u64 {
    fn place(g: &Graph, pos: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, best: &mut u64) {
        let n = g.n();
        if pos == n {
            let mut mask = 0u64;
            let mut k = 0;
            for v in 1..n {
                for u in 0..v {
                    if g.has_edge(perm[u], perm[v]) {
                        mask |= 1 << k;
                    }
                    k += 1;
                }
            }
            *best = (*best).min(mask);
            return;
        }
        for cand in 0..n {
            if !used[cand] {
                used[cand] = true;
                perm[pos] = cand;
                place(g, pos + 1, perm, used, best);
                used[cand] = false;
            }
        }
    }
    let mut best = u64::MAX;
    place(g, 0, &mut vec![0; g.n()], &mut vec![false; g.n()], &mut best);
    best
}

/// Streams every connected labeled graph on `n` vertices exactly once.
/// With `canonical`, only the first representative of each isomorphism
/// class is yielded (noticeably slower; intended for n <= 6).
pub fn enumerate_connected(n: usize, canonical: bool) -> Result<ConnectedGraphs> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::InvalidParameter(format!(
            "enumeration supports 1..={MAX_ENUMERATION_ORDER} vertices, got {n}"
        )));
    }
    let bits = n * (n - 1) / 2;
    Ok(ConnectedGraphs {
        n,
        next_mask: 0,
        end_mask: 1u64 << bits,
        canonical,
        seen: HashSet::new(),
    })
}

pub struct ConnectedGraphs {
    n: usize,
    next_mask: u64,
    end_mask: u64,
    canonical: bool,
    seen: HashSet<u64>,
}

impl Iterator for ConnectedGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end_mask {
            let g = graph_from_mask(self.n, self.next_mask);
            self.next_mask += 1;
            if !g.is_connected() {
                continue;
            }
            if self.canonical && !self.seen.insert(canonical_mask(&g)) {
                continue;
            }
            return Some(g);
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labeled_counts() {
        // 1, 1, 4, 38, 728 connected labeled graphs on 1..=5 vertices.
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_connected(n, false).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 4, 38, 728]);
        assert!(enumerate_connected(9, false).is_err());
        assert!(enumerate_connected(0, false).is_err());
    }

    #[test]
    fn isomorphism_class_counts() {
        // 1, 1, 2, 6, 21 connected graphs on 1..=5 vertices up to isomorphism.
        let counts: Vec<usize> = (1..=5)
            .map(|n| enumerate_connected(n, true).unwrap().count())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn masks_round_trip() {
        for mask in 0..64 {
            let g = graph_from_mask(4, mask);
            assert_eq!(mask_of(&g), mask);
        }
    }

    #[test]
    fn canonical_mask_is_isomorphism_invariant() {
        let g = graph_from_mask(4, 0b001011);
        let relabeled = graph_from_mask(4, mask_of(&g));
        assert_eq!(canonical_mask(&g), canonical_mask(&relabeled));
        // A path relabeled two ways.
        let p1 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let p2 = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_mask(&p1), canonical_mask(&p2));
    }
}
