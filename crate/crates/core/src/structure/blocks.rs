//! Biconnected components, cut vertices, and the block-cut tree.

use crate::error::Result;
use crate::graph::{Graph, Vertex};

/// Blocks (maximal biconnected subgraphs, bridges included) and cut vertices
/// of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Vertex sets of the blocks, each sorted ascending.
    pub blocks: Vec<Vec<Vertex>>,
    /// Sorted; exactly the vertices lying in two or more blocks.
    pub cut_vertices: Vec<Vertex>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BctNode {
    /// Index into `BlockDecomposition::blocks`.
    Block(usize),
    /// A cut vertex of the original graph.
    Cut(Vertex),
}

/// The tree on blocks and cut vertices; block and cut nodes alternate and a
/// block is adjacent to exactly the cut vertices it contains.
#[derive(Clone, Debug)]
pub struct BlockCutTree {
    pub tree: Graph,
    pub kinds: Vec<BctNode>,
    pub decomposition: BlockDecomposition,
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    g.require_connected("block_decomposition")?;
    let n = g.n();
    if n == 1 {
        return Ok(BlockDecomposition {
            blocks: vec![vec![0]],
            cut_vertices: vec![],
        });
    }

    const UNSET: u32 = u32::MAX;
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<u32>,
        low: Vec<u32>,
        timer: u32,
        edge_stack: Vec<(Vertex, Vertex)>,
        blocks: Vec<Vec<Vertex>>,
        is_cut: Vec<bool>,
    }

    impl Dfs<'_> {
        fn run(&mut self, u: Vertex, parent: Option<Vertex>) {
            self.disc[u] = self.timer;
            self.low[u] = self.timer;
            self.timer += 1;
            let mut children = 0;
            for v in self.g.neighbors(u) {
                if Some(v) == parent {
                    continue;
                }
                if self.disc[v] == UNSET {
                    children += 1;
                    self.edge_stack.push((u, v));
                    self.run(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        if parent.is_some() {
                            self.is_cut[u] = true;
                        }
                        self.pop_block((u, v));
                    }
                } else if self.disc[v] < self.disc[u] {
                    self.edge_stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
            if parent.is_none() && children > 1 {
                self.is_cut[u] = true;
            }
        }

        fn pop_block(&mut self, boundary: (Vertex, Vertex)) {
            let mut members = Vec::new();
            loop {
                let e = self.edge_stack.pop().expect("boundary edge on stack");
                members.push(e.0);
                members.push(e.1);
                if e == boundary {
                    break;
                }
            }
            members.sort_unstable();
            members.dedup();
            self.blocks.push(members);
        }
    }

    let mut dfs = Dfs {
        g,
        disc: vec![UNSET; n],
        low: vec![0; n],
        timer: 0,
        edge_stack: Vec::new(),
        blocks: Vec::new(),
        is_cut: vec![false; n],
    };
    dfs.run(0, None);
    debug_assert!(dfs.edge_stack.is_empty());

    let cut_vertices = (0..n).filter(|&v| dfs.is_cut[v]).collect();
    Ok(BlockDecomposition {
        blocks: dfs.blocks,
        cut_vertices,
    })
}

/// True iff every block induces a complete graph.
pub fn is_block_graph(g: &Graph) -> Result<bool> {
    let dec = block_decomposition(g)?;
    Ok(dec.blocks.iter().all(|block| {
        block
            .iter()
            .enumerate()
            .all(|(i, &u)| block[i + 1..].iter().all(|&v| g.has_edge(u, v)))
    }))
}

pub fn block_cut_tree(g: &Graph) -> Result<BlockCutTree> {
    let dec = block_decomposition(g)?;
    let b = dec.blocks.len();
    let cut_rank = |v: Vertex| {
        dec.cut_vertices
            .binary_search(&v)
            .expect("cut vertex present")
    };
    let mut kinds: Vec<BctNode> = (0..b).map(BctNode::Block).collect();
    kinds.extend(dec.cut_vertices.iter().map(|&v| BctNode::Cut(v)));
    let mut edges = Vec::new();
    for (i, block) in dec.blocks.iter().enumerate() {
        for &v in block {
            if dec.cut_vertices.binary_search(&v).is_ok() {
                edges.push((i, b + cut_rank(v)));
            }
        }
    }
    let tree = Graph::from_edges(b + dec.cut_vertices.len(), &edges)?;
    Ok(BlockCutTree {
        tree,
        kinds,
        decomposition: dec,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::structure::{is_path_graph, is_tree};

    /// Triangle with a pendant leaf at each corner.
    pub(crate) fn net_graph() -> Graph {
        Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    #[test]
    fn tree_blocks_are_edges() {
        let t = families::random_tree(9, 4).unwrap();
        let dec = block_decomposition(&t).unwrap();
        assert_eq!(dec.blocks.len(), t.edge_count());
        assert!(dec.blocks.iter().all(|b| b.len() == 2));
        let internal = (0..t.n()).filter(|&v| t.degree(v) >= 2).count();
        assert_eq!(dec.cut_vertices.len(), internal);
        let bct = block_cut_tree(&t).unwrap();
        assert_eq!(bct.tree.n(), t.edge_count() + internal);
        assert!(is_tree(&bct.tree));
    }

    #[test]
    fn net_graph_decomposition() {
        let g = net_graph();
        let dec = block_decomposition(&g).unwrap();
        assert_eq!(dec.blocks.len(), 4);
        assert_eq!(dec.cut_vertices, vec![0, 1, 2]);
        let sizes: Vec<usize> = {
            let mut s: Vec<usize> = dec.blocks.iter().map(Vec::len).collect();
            s.sort_unstable();
            s
        };
        assert_eq!(sizes, vec![2, 2, 2, 3]);
        assert!(is_block_graph(&g).unwrap());

        // The block-cut tree is a spider with three legs of length 2.
        let bct = block_cut_tree(&g).unwrap();
        assert_eq!(bct.tree.n(), 7);
        assert!(is_tree(&bct.tree) && !is_path_graph(&bct.tree));
        let center = (0..7).find(|&v| bct.tree.degree(v) == 3).unwrap();
        assert!(matches!(bct.kinds[center], BctNode::Block(_)));
    }

    #[test]
    fn chorded_cycle_is_not_a_block_graph() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        assert!(!is_block_graph(&g).unwrap());
    }

    #[test]
    fn single_vertex_and_complete_graphs() {
        let k1 = families::complete(1).unwrap();
        let dec = block_decomposition(&k1).unwrap();
        assert_eq!(dec.blocks, vec![vec![0]]);
        let k5 = families::complete(5).unwrap();
        let dec = block_decomposition(&k5).unwrap();
        assert_eq!(dec.blocks.len(), 1);
        assert!(dec.cut_vertices.is_empty());
        assert_eq!(block_cut_tree(&k5).unwrap().tree.n(), 1);
    }

    #[test]
    fn every_edge_in_exactly_one_block() {
        for seed in 0..15 {
            let g = families::random_connected(10, 0.3, seed).unwrap();
            let dec = block_decomposition(&g).unwrap();
            for (u, v) in g.edges() {
                let hits = dec
                    .blocks
                    .iter()
                    .filter(|b| b.contains(&u) && b.contains(&v))
                    .count();
                assert_eq!(hits, 1, "edge ({u},{v}) seed {seed}");
            }
            // A vertex is a cut vertex iff it lies in at least two blocks.
            for v in 0..g.n() {
                let containing = dec.blocks.iter().filter(|b| b.contains(&v)).count();
                assert_eq!(dec.cut_vertices.contains(&v), containing >= 2);
            }
        }
    }
}
