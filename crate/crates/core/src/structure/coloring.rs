//! Exact graph coloring: saturation-ordered branch and bound seeded by a
//! greedy bound, returning a deterministic optimal coloring certificate.

use crate::graph::{Graph, Vertex};
use crate::structure::clique::clique_number;

/// A proper coloring; `classes.len()` colors, every vertex in exactly one
/// class, classes listed in color order with vertices ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub classes: Vec<Vec<Vertex>>,
}

impl Coloring {
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    fn from_assignment(colors: &[usize], count: usize) -> Self {
        let mut classes = vec![Vec::new(); count];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].push(v);
        }
        Coloring { classes }
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        let mut seen = vec![false; g.n()];
        for class in &self.classes {
            for (i, &u) in class.iter().enumerate() {
                if seen[u] {
                    return false;
                }
                seen[u] = true;
                if class[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
                    return false;
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).class_count()
}

/// An optimal proper coloring. Vertices are colored in saturation order with
/// ties broken by vertex index, so the certificate is deterministic.
pub fn optimal_coloring(g: &Graph) -> Coloring {
    let n = g.n();
    let lb = clique_number(g).max(1);
    let (greedy_colors, greedy_count) = dsatur_greedy(g);
    if greedy_count == lb {
        return Coloring::from_assignment(&greedy_colors, greedy_count);
    }
    let mut search = Search {
        g,
        colors: vec![UNCOLORED; n],
        best: greedy_colors,
        ub: greedy_count,
        lb,
    };
    search.branch(0, 0);
    Coloring::from_assignment(&search.best.clone(), search.ub)
}

const UNCOLORED: usize = usize::MAX;

struct Search<'a> {
    g: &'a Graph,
    colors: Vec<usize>,
    best: Vec<usize>,
    ub: usize,
    lb: usize,
}

impl Search<'_> {
    /// Returns true once a coloring matching the clique bound is found.
    fn branch(&mut self, colored: usize, used: usize) -> bool {
        if used >= self.ub {
            return false;
        }
        if colored == self.g.n() {
            self.best = self.colors.clone();
            self.ub = used;
            return self.ub == self.lb;
        }
        let v = self.most_saturated();
        let max_color = used.min(self.ub - 2);
        for c in 0..=max_color {
            if self.g.neighbors(v).any(|w| self.colors[w] == c) {
                continue;
            }
            self.colors[v] = c;
            if self.branch(colored + 1, used.max(c + 1)) {
                return true;
            }
            self.colors[v] = UNCOLORED;
        }
        false
    }

    fn most_saturated(&self) -> Vertex {
        let mut best = usize::MAX;
        let mut best_sat = usize::MAX;
        for v in 0..self.g.n() {
            if self.colors[v] != UNCOLORED {
                continue;
            }
            let mut seen = 0u64;
            for w in self.g.neighbors(v) {
                if self.colors[w] != UNCOLORED {
                    seen |= 1 << (self.colors[w] % 64);
                }
            }
            let sat = seen.count_ones() as usize;
            if best == usize::MAX || sat > best_sat {
                best = v;
                best_sat = sat;
            }
        }
        best
    }
}

fn dsatur_greedy(g: &Graph) -> (Vec<usize>, usize) {
    let n = g.n();
    let mut colors = vec![UNCOLORED; n];
    let mut used = 0;
    for _ in 0..n {
        let mut pick = usize::MAX;
        let mut pick_sat = usize::MAX;
        for v in 0..n {
            if colors[v] != UNCOLORED {
                continue;
            }
            let mut seen = 0u64;
            for w in g.neighbors(v) {
                if colors[w] != UNCOLORED {
                    seen |= 1 << (colors[w] % 64);
                }
            }
            let sat = seen.count_ones() as usize;
            if pick == usize::MAX || sat > pick_sat {
                pick = v;
                pick_sat = sat;
            }
        }
        let mut c = 0;
        while g.neighbors(pick).any(|w| colors[w] == c) {
            c += 1;
        }
        colors[pick] = c;
        used = used.max(c + 1);
    }
    (colors, used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn named_values() {
        assert_eq!(chromatic_number(&families::complete(6).unwrap()), 6);
        assert_eq!(chromatic_number(&families::complete(5).unwrap().complement()), 1);
        assert_eq!(chromatic_number(&families::cycle(7).unwrap()), 3);
        assert_eq!(chromatic_number(&families::cycle(8).unwrap()), 2);
        assert_eq!(chromatic_number(&families::petersen()), 3);
    }

    #[test]
    fn petersen_complement_needs_five_colors() {
        let g = families::petersen().complement();
        let coloring = optimal_coloring(&g);
        assert_eq!(coloring.class_count(), 5);
        assert!(coloring.is_proper(&g));
        // Classes of the complement are cliques of the Petersen graph.
        assert!(coloring.classes.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn certificate_is_proper_and_optimal_looking() {
        for seed in 0..10 {
            let g = families::random_connected(9, 0.4, seed).unwrap();
            let c = optimal_coloring(&g);
            assert!(c.is_proper(&g));
            assert!(c.class_count() >= clique_number(&g));
        }
    }

    #[test]
    fn deterministic_certificate() {
        let g = families::petersen().complement();
        assert_eq!(optimal_coloring(&g), optimal_coloring(&g));
    }
}
