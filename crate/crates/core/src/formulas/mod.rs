//! Closed-form dimension values and constructive resolving sets for the
//! families with known formulas, plus the general upper bounds.

mod wheel;
pub use wheel::{
    dim_wheel, dimlocal_wheel, dimnl_wheel, gap_profile, normalize_wheel_basis, wheel_basis,
    wheel_gap_check, Gap, GapConditionReport, WheelGapProfile,
};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::solver::{solve_exact, PairMode};
use crate::structure::{
    self, block_cut_tree, clique_number, edge_cover_number, is_block_graph, is_path_graph,
    is_tree, tree_stats, BctNode,
};

/// A closed-form value with an optional constructed resolving set.
#[derive(Clone, Debug)]
pub struct FormulaResult {
    pub value: usize,
    pub witness: Option<Vec<Vertex>>,
    /// Id of the verification campaign exercising this formula.
    pub theorem: &'static str,
}

/// Metric dimension of a tree: 0 for a single vertex, 1 for longer paths,
/// otherwise leaves minus exterior branch vertices.
pub fn dim_tree(t: &Graph) -> Result<usize> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    if t.n() == 1 {
        return Ok(0);
    }
    if is_path_graph(t) {
        return Ok(1);
    }
    let stats = tree_stats(t)?;
    Ok(stats.leaf_count() - stats.exterior_count())
}

/// A metric basis of a tree made of leaves: for every exterior branch vertex
/// keep all but its largest terminal leaf; paths keep their smaller endpoint.
pub fn tree_metric_basis(t: &Graph) -> Result<Vec<Vertex>> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    if t.n() == 1 {
        return Ok(vec![]);
    }
    if is_path_graph(t) {
        let end = (0..t.n()).find(|&v| t.degree(v) == 1).expect("path endpoint");
        return Ok(vec![end]);
    }
    let stats = tree_stats(t)?;
    let mut basis = Vec::new();
    for w in stats.exterior_branch_vertices() {
        let leaves = &stats.terminal_leaves[&w];
        basis.extend_from_slice(&leaves[..leaves.len() - 1]);
    }
    basis.sort_unstable();
    Ok(basis)
}

/// Nonlocal dimension of a block graph: the tree dimension of its block-cut
/// tree, witnessed by one non-cut vertex per selected terminal block.
pub fn dimnl_block_graph(g: &Graph) -> Result<FormulaResult> {
    if g.n() < 3 {
        return Err(Error::InvalidParameter(
            "block graph formula needs order at least 3".into(),
        ));
    }
    if !is_block_graph(g)? {
        return Err(Error::NotBlockGraph);
    }
    let bct = block_cut_tree(g)?;
    let value = dim_tree(&bct.tree)?;
    let tree_basis = tree_metric_basis(&bct.tree)?;
    let cut_vertices = &bct.decomposition.cut_vertices;
    let mut witness = Vec::with_capacity(tree_basis.len());
    for node in tree_basis {
        let BctNode::Block(idx) = bct.kinds[node] else {
            unreachable!("leaves of a block-cut tree are block nodes");
        };
        let w = bct.decomposition.blocks[idx]
            .iter()
            .copied()
            .find(|v| cut_vertices.binary_search(v).is_err())
            .expect("terminal block has a non-cut vertex");
        witness.push(w);
    }
    witness.sort_unstable();
    debug_assert_eq!(witness.len(), value);
    Ok(FormulaResult {
        value,
        witness: Some(witness),
        theorem: "thm31",
    })
}

fn is_complete(g: &Graph) -> bool {
    g.edge_count() == g.n() * (g.n() - 1) / 2
}

/// Nonlocal dimension of a corona product with a non-complete second factor:
/// `n(g)` times the nonlocal dimension of `h` joined with a single vertex.
pub fn dimnl_corona(g: &Graph, h: &Graph) -> Result<usize> {
    g.require_connected("dimnl_corona")?;
    if is_complete(h) {
        return Err(Error::CompleteFactor);
    }
    let apex = h.join(&Graph::empty(1)?)?;
    Ok(g.n() * solve_exact(&apex, PairMode::NonAdjacent)?.value)
}

/// Bounds for a corona product with a complete second factor `K_n`:
/// the metric dimension of the base below, its order above.
pub fn corona_complete_bounds(g: &Graph, n: usize) -> Result<(usize, usize)> {
    if n == 0 {
        return Err(Error::InvalidParameter("factor order must be positive".into()));
    }
    g.require_connected("corona_complete_bounds")?;
    Ok((solve_exact(g, PairMode::All)?.value, g.n()))
}

/// Nonlocal dimension never exceeds order minus clique number.
pub fn omega_upper_bound(g: &Graph) -> usize {
    g.n() - clique_number(g)
}

/// Status of the edge-cover upper bound, which needs girth at least 7.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BetaPrimeBound {
    /// Nonlocal dimension is at most this (edge cover number minus one).
    Applies { value: usize },
    GirthBelowSeven { girth: u32 },
}

pub fn beta_prime_upper_bound(g: &Graph) -> Result<BetaPrimeBound> {
    g.require_connected("beta_prime_upper_bound")?;
    match g.girth() {
        Some(girth) if girth < 7 => Ok(BetaPrimeBound::GirthBelowSeven { girth }),
        _ => Ok(BetaPrimeBound::Applies {
            value: edge_cover_number(g)? - 1,
        }),
    }
}

/// Nonlocal dimension of `K_{s,t}`: `s + t - 2`. Class order does not
/// matter; the larger class must have at least two vertices.
pub fn dimnl_complete_bipartite(s: usize, t: usize) -> Result<usize> {
    if s.min(t) < 1 || s.max(t) < 2 {
        return Err(Error::InvalidParameter(
            "complete bipartite formula needs s >= 1 and t >= 2".into(),
        ));
    }
    Ok(s + t - 2)
}

/// Trees attaining the edge-cover bound with equality: one branch vertex,
/// at least three legs, every leg of length at most 2, some leg of length 1.
pub fn is_subdivided_star_family(t: &Graph) -> Result<bool> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    let branch: Vec<Vertex> = (0..t.n()).filter(|&v| t.degree(v) >= 3).collect();
    let [center] = branch[..] else {
        return Ok(false);
    };
    let d = t.distances();
    let legs: Vec<u16> = (0..t.n())
        .filter(|&v| t.degree(v) == 1)
        .map(|leaf| d.get(center, leaf))
        .collect();
    Ok(legs.len() >= 3 && legs.iter().all(|&l| l <= 2) && legs.contains(&1))
}

/// First vertex whose distance levels all induce complete graphs, if any;
/// such a vertex alone resolves every non-adjacent pair.
pub fn levels_complete_vertex(g: &Graph) -> Result<Option<Vertex>> {
    g.require_connected("levels_complete_vertex")?;
    for x in 0..g.n() {
        let levels = structure::distance_levels(g, x)?;
        if structure::all_induce_cliques(g, &levels) {
            return Ok(Some(x));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::solver::is_resolving;

    fn h_tree() -> Graph {
        Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap()
    }

    #[test]
    fn tree_dimension_values() {
        assert_eq!(dim_tree(&families::path(10).unwrap()).unwrap(), 1);
        assert_eq!(dim_tree(&families::spider(&[1, 1, 1, 1]).unwrap()).unwrap(), 3);
        assert_eq!(dim_tree(&h_tree()).unwrap(), 2);
        assert_eq!(dim_tree(&families::complete(1).unwrap()).unwrap(), 0);
        assert!(dim_tree(&families::cycle(4).unwrap()).is_err());
    }

    #[test]
    fn tree_basis_resolves() {
        for seed in 0..25 {
            let t = families::random_tree(13, seed).unwrap();
            let basis = tree_metric_basis(&t).unwrap();
            assert_eq!(basis.len(), dim_tree(&t).unwrap().max(1));
            assert!(is_resolving(&t, &basis, PairMode::All), "seed {seed}");
        }
    }

    #[test]
    fn block_graph_formula_named_cases() {
        // Trees are block graphs; the two dimensions agree.
        let t = families::spider(&[2, 1, 3]).unwrap();
        let res = dimnl_block_graph(&t).unwrap();
        assert_eq!(res.value, dim_tree(&t).unwrap());

        let net = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]).unwrap();
        let res = dimnl_block_graph(&net).unwrap();
        assert_eq!(res.value, 2);
        assert_eq!(res.value, solve_exact(&net, PairMode::NonAdjacent).unwrap().value);
        let witness = res.witness.unwrap();
        assert!(is_resolving(&net, &witness, PairMode::NonAdjacent));

        // Two K_4 blocks sharing a cut vertex: the block-cut tree is a path.
        let mut edges = Vec::new();
        for a in 0..4usize {
            for b in a + 1..4 {
                edges.push((a, b));
            }
        }
        for a in 3..7usize {
            for b in a + 1..7 {
                edges.push((a, b));
            }
        }
        let two_k4 = Graph::from_edges(7, &edges).unwrap();
        let res = dimnl_block_graph(&two_k4).unwrap();
        assert_eq!(res.value, 1);
        assert!(is_resolving(&two_k4, &res.witness.unwrap(), PairMode::NonAdjacent));

        // A complete graph is a single block.
        let res = dimnl_block_graph(&families::complete(5).unwrap()).unwrap();
        assert_eq!(res.value, 0);
        assert_eq!(res.witness, Some(vec![]));

        assert!(matches!(
            dimnl_block_graph(&families::cycle(5).unwrap()),
            Err(Error::NotBlockGraph)
        ));
    }

    #[test]
    fn corona_formula_examples() {
        let p3 = families::path(3).unwrap();
        assert_eq!(dimnl_corona(&p3, &p3).unwrap(), 3);

        let k1 = families::complete(1).unwrap();
        let c4 = families::cycle(4).unwrap();
        assert_eq!(dimnl_corona(&k1, &c4).unwrap(), 2);

        let star = families::star(2).unwrap(); // K_{1,2}, non-complete
        assert_eq!(dimnl_corona(&c4, &star).unwrap(), 4);

        assert!(matches!(
            dimnl_corona(&p3, &families::complete(3).unwrap()),
            Err(Error::CompleteFactor)
        ));
    }

    #[test]
    fn corona_complete_bounds_examples() {
        let k33 = families::complete_bipartite(3, 3).unwrap();
        assert_eq!(corona_complete_bounds(&k33, 2).unwrap(), (4, 6));
        let p2 = families::path(2).unwrap();
        assert_eq!(corona_complete_bounds(&p2, 1).unwrap(), (1, 2));
        let p5 = families::path(5).unwrap();
        assert_eq!(corona_complete_bounds(&p5, 2).unwrap(), (1, 5));
    }

    #[test]
    fn upper_bounds() {
        assert_eq!(omega_upper_bound(&families::complete(8).unwrap()), 0);
        let t = families::random_tree(9, 2).unwrap();
        assert!(matches!(
            beta_prime_upper_bound(&t).unwrap(),
            BetaPrimeBound::Applies { .. }
        ));
        assert_eq!(
            beta_prime_upper_bound(&families::cycle(5).unwrap()).unwrap(),
            BetaPrimeBound::GirthBelowSeven { girth: 5 }
        );
        // Spider with legs (2,2,1): bound 2 attained.
        let spider = families::spider(&[2, 2, 1]).unwrap();
        assert_eq!(
            beta_prime_upper_bound(&spider).unwrap(),
            BetaPrimeBound::Applies { value: 2 }
        );
        assert_eq!(solve_exact(&spider, PairMode::NonAdjacent).unwrap().value, 2);
    }

    #[test]
    fn complete_bipartite_formula() {
        assert_eq!(dimnl_complete_bipartite(1, 2).unwrap(), 1);
        assert_eq!(dimnl_complete_bipartite(2, 3).unwrap(), 3);
        assert_eq!(dimnl_complete_bipartite(3, 1).unwrap(), 2);
        let g = families::complete_bipartite(4, 4).unwrap();
        assert_eq!(
            dimnl_complete_bipartite(4, 4).unwrap(),
            solve_exact(&g, PairMode::NonAdjacent).unwrap().value
        );
        assert!(dimnl_complete_bipartite(1, 1).is_err());
        assert!(dimnl_complete_bipartite(0, 5).is_err());
    }

    #[test]
    fn subdivided_star_family_membership() {
        for legs in [vec![1, 1, 1], vec![2, 1, 1], vec![2, 2, 1], vec![2, 2, 2, 1]] {
            assert!(is_subdivided_star_family(&families::spider(&legs).unwrap()).unwrap());
        }
        for legs in [vec![2, 2, 2], vec![3, 1, 1], vec![1, 1]] {
            assert!(!is_subdivided_star_family(&families::spider(&legs).unwrap()).unwrap());
        }
        assert!(!is_subdivided_star_family(&families::path(4).unwrap()).unwrap());
        assert!(!is_subdivided_star_family(&h_tree()).unwrap());
    }

    #[test]
    fn single_landmark_characterization() {
        assert_eq!(levels_complete_vertex(&families::path(5).unwrap()).unwrap(), Some(0));
        assert_eq!(levels_complete_vertex(&families::petersen()).unwrap(), None);
        assert_eq!(levels_complete_vertex(&families::cycle(4).unwrap()).unwrap(), None);
        // Complete graphs satisfy the condition trivially.
        assert_eq!(levels_complete_vertex(&families::complete(4).unwrap()).unwrap(), Some(0));
    }
}
