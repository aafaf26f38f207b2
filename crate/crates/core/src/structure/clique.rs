//! Exact maximum clique via branch and bound with a greedy-coloring bound.

use crate::bitset::Bitset;
use crate::graph::{Graph, Vertex};

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum clique, deterministic for a fixed graph.
pub fn max_clique(g: &Graph) -> Vec<Vertex> {
    let mut best = Vec::new();
    let mut current = Vec::new();
    let mut candidates = Bitset::new(g.n());
    for v in 0..g.n() {
        candidates.insert(v);
    }
    expand(g, &mut current, candidates, &mut best);
    best.sort_unstable();
    best
}

fn expand(g: &Graph, current: &mut Vec<Vertex>, candidates: Bitset, best: &mut Vec<Vertex>) {
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return;
    }
    // Greedy coloring of the candidates; a vertex in color class c extends
    // the clique to at most |current| + c + 1 vertices.
    let order = color_order(g, &candidates);
    let mut remaining = candidates;
    for &(v, bound) in order.iter().rev() {
        if current.len() + bound <= best.len() {
            return; // every vertex left has an equal or smaller bound
        }
        remaining.remove(v);
        let mut next = remaining.clone();
        next.intersect_with(g.row(v));
        current.push(v);
        expand(g, current, next, best);
        current.pop();
    }
}

/// Vertices of `candidates` annotated with greedy color-class bounds,
/// ordered class by class.
fn color_order(g: &Graph, candidates: &Bitset) -> Vec<(Vertex, usize)> {
    let mut classes: Vec<Bitset> = Vec::new();
    let mut order = Vec::with_capacity(candidates.count());
    for v in candidates.iter() {
        let c = classes
            .iter()
            .position(|class| class.is_disjoint(g.row(v)))
            .unwrap_or_else(|| {
                classes.push(Bitset::new(g.n()));
                classes.len() - 1
            });
        classes[c].insert(v);
    }
    for (c, class) in classes.iter().enumerate() {
        for v in class.iter() {
            order.push((v, c + 1));
        }
    }
    order
}
