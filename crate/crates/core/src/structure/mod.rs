//! Structural invariants consumed by the dimension theorems: clique and
//! chromatic numbers, matchings and the edge cover number, bipartitions,
//! block decompositions, and tree statistics.

mod blocks;
mod clique;
mod coloring;
mod matching;
mod trees;

pub use blocks::{block_cut_tree, block_decomposition, is_block_graph, BctNode, BlockCutTree, BlockDecomposition};
pub use clique::{clique_number, max_clique};
pub use coloring::{chromatic_number, optimal_coloring, Coloring};
pub use matching::{edge_cover_number, matching_number, maximum_matching};
pub use trees::{is_path_graph, is_tree, tree_stats, TreeStats};

use crate::error::Result;
use crate::graph::{Graph, Vertex};

/// Two-coloring of a connected graph, or `None` if it has an odd cycle.
pub fn bipartition(g: &Graph) -> Result<Option<(Vec<Vertex>, Vec<Vertex>)>> {
    g.require_connected("bipartition")?;
    let mut color = vec![u8::MAX; g.n()];
    color[0] = 0;
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for v in g.neighbors(u) {
            if color[v] == u8::MAX {
                color[v] = 1 - color[u];
                queue.push(v);
            } else if color[v] == color[u] {
                return Ok(None);
            }
        }
    }
    let a = (0..g.n()).filter(|&v| color[v] == 0).collect();
    let b = (0..g.n()).filter(|&v| color[v] == 1).collect();
    Ok(Some((a, b)))
}

/// Class sizes `(s, t)` with `s <= t` when the graph is a complete bipartite
/// graph, `None` otherwise.
pub fn complete_bipartite_classes(g: &Graph) -> Result<Option<(usize, usize)>> {
    let Some((a, b)) = bipartition(g)? else {
        return Ok(None);
    };
    for &u in &a {
        for &v in &b {
            if !g.has_edge(u, v) {
                return Ok(None);
            }
        }
    }
    let (s, t) = (a.len().min(b.len()), a.len().max(b.len()));
    Ok(Some((s, t)))
}

/// Partition of the vertex set by distance from `x`; level 0 is `{x}`.
pub fn distance_levels(g: &Graph, x: Vertex) -> Result<Vec<Vec<Vertex>>> {
    g.require_connected("distance_levels")?;
    let d = g.distances();
    let ecc = (0..g.n()).map(|v| d.get(x, v)).max().unwrap_or(0);
    let mut levels = vec![Vec::new(); ecc as usize + 1];
    for v in 0..g.n() {
        levels[d.get(x, v) as usize].push(v);
    }
    Ok(levels)
}

/// True when every set in `sets` induces a complete subgraph.
pub fn all_induce_cliques(g: &Graph, sets: &[Vec<Vertex>]) -> bool {
    sets.iter().all(|set| {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn bipartition_examples() {
        let tree = families::random_tree(9, 3).unwrap();
        assert!(bipartition(&tree).unwrap().is_some());
        assert!(bipartition(&families::cycle(5).unwrap()).unwrap().is_none());
        let (a, b) = bipartition(&families::complete_bipartite(3, 4).unwrap())
            .unwrap()
            .unwrap();
        let mut sizes = [a.len(), b.len()];
        sizes.sort();
        assert_eq!(sizes, [3, 4]);
    }

    #[test]
    fn complete_bipartite_recognition() {
        let g = families::complete_bipartite(2, 5).unwrap();
        assert_eq!(complete_bipartite_classes(&g).unwrap(), Some((2, 5)));
        assert_eq!(
            complete_bipartite_classes(&families::path(4).unwrap()).unwrap(),
            None
        );
        // A star is complete bipartite with s = 1.
        let star = families::star(3).unwrap();
        assert_eq!(complete_bipartite_classes(&star).unwrap(), Some((1, 3)));
        assert_eq!(
            complete_bipartite_classes(&families::cycle(5).unwrap()).unwrap(),
            None
        );
    }

    #[test]
    fn levels_on_named_graphs() {
        let p5 = families::path(5).unwrap();
        let levels = distance_levels(&p5, 0).unwrap();
        assert_eq!(levels.len(), 5);
        assert!(levels.iter().all(|l| l.len() == 1));

        let w = families::wheel(8).unwrap();
        let levels = distance_levels(&w, 8).unwrap();
        assert_eq!(levels[1].len(), 8);

        let pet = families::petersen();
        let sizes: Vec<usize> = distance_levels(&pet, 0)
            .unwrap()
            .iter()
            .map(Vec::len)
            .collect();
        assert_eq!(sizes, vec![1, 3, 6]);
    }
}
