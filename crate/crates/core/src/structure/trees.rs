//! Leaf/branch statistics of trees: terminal leaves, exterior branch
//! vertices, and terminal-path counts.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub fn is_tree(g: &Graph) -> bool {
    g.is_connected() && g.edge_count() == g.n() - 1
}

/// True for trees of maximum degree at most 2 (including a single vertex).
pub fn is_path_graph(g: &Graph) -> bool {
    is_tree(g) && (0..g.n()).all(|v| g.degree(v) <= 2)
}

/// Leaf and branch statistics of a tree that is not a path.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeStats {
    /// All degree-1 vertices, ascending.
    pub leaves: Vec<Vertex>,
    /// Exterior branch vertex -> its terminal leaves, ascending.
    pub terminal_leaves: BTreeMap<Vertex, Vec<Vertex>>,
}

impl TreeStats {
    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }

    pub fn exterior_count(&self) -> usize {
        self.terminal_leaves.len()
    }

    pub fn exterior_branch_vertices(&self) -> Vec<Vertex> {
        self.terminal_leaves.keys().copied().collect()
    }

    /// Number of terminal paths emanating from `w`; 0 if `w` is not an
    /// exterior branch vertex.
    pub fn terminal_path_count(&self, w: Vertex) -> usize {
        self.terminal_leaves.get(&w).map_or(0, Vec::len)
    }
}

/// Computes `TreeStats` for a tree with at least one branch vertex. A leaf is
/// terminal for a branch vertex only when strictly closer to it than to every
/// other branch vertex.
pub fn tree_stats(t: &Graph) -> Result<TreeStats> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    let branch: Vec<Vertex> = (0..t.n()).filter(|&v| t.degree(v) >= 3).collect();
    if branch.is_empty() {
        return Err(Error::PathInput);
    }
    let leaves: Vec<Vertex> = (0..t.n()).filter(|&v| t.degree(v) == 1).collect();
    let d = t.distances();
    let mut terminal_leaves: BTreeMap<Vertex, Vec<Vertex>> = BTreeMap::new();
    for &leaf in &leaves {
        let closest = branch.iter().copied().min_by_key(|&w| d.get(leaf, w)).unwrap();
        let best = d.get(leaf, closest);
        let unique = branch
            .iter()
            .filter(|&&w| d.get(leaf, w) == best)
            .count()
            == 1;
        if unique {
            terminal_leaves.entry(closest).or_default().push(leaf);
        }
    }
    Ok(TreeStats { leaves, terminal_leaves })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Two adjacent degree-3 vertices, each with two pendant leaves.
    fn h_tree() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
    }

    #[test]
    fn spider_stats() {
        let g = families::spider(&[1, 1, 1]).unwrap(); // K_{1,3}
        let stats = tree_stats(&g).unwrap();
        assert_eq!(stats.leaf_count(), 3);
        assert_eq!(stats.exterior_count(), 1);
        assert_eq!(stats.terminal_path_count(0), 3);

        let long = families::spider(&[3, 2, 4]).unwrap();
        let stats = tree_stats(&long).unwrap();
        assert_eq!(stats.leaf_count(), 3);
        assert_eq!(stats.exterior_count(), 1);
    }

    #[test]
    fn h_tree_stats() {
        let stats = tree_stats(&h_tree()).unwrap();
        assert_eq!(stats.leaf_count(), 4);
        assert_eq!(stats.exterior_count(), 2);
        assert_eq!(stats.exterior_branch_vertices(), vec![0, 1]);
        assert_eq!(stats.terminal_path_count(0), 2);
        assert_eq!(stats.terminal_path_count(1), 2);
    }

    #[test]
    fn stars_have_one_exterior_vertex() {
        for n in 3..8 {
            let stats = tree_stats(&families::star(n).unwrap()).unwrap();
            assert_eq!(stats.leaf_count(), n);
            assert_eq!(stats.exterior_count(), 1);
        }
    }

    #[test]
    fn rejects_paths_and_non_trees() {
        assert!(matches!(
            tree_stats(&families::path(6).unwrap()),
            Err(Error::PathInput)
        ));
        assert!(matches!(
            tree_stats(&families::cycle(5).unwrap()),
            Err(Error::NotATree)
        ));
    }

    #[test]
    fn leaf_counting_identity() {
        // In any non-path tree every leaf is terminal for exactly one branch
        // vertex, so sum p(w) = n1 and sum (p(w) - 1) = n1 - ex.
        for seed in 0..30 {
            let t = families::random_tree(14, seed).unwrap();
            let Ok(stats) = tree_stats(&t) else { continue };
            let total: usize = stats
                .exterior_branch_vertices()
                .iter()
                .map(|&w| stats.terminal_path_count(w))
                .sum();
            assert!(total >= stats.leaf_count());
            assert_eq!(total - stats.exterior_count(),
                       stats.leaf_count() - stats.exterior_count());
        }
    }
}
