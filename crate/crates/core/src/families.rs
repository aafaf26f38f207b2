//! Graph generators: the named families plus seed-deterministic random
//! trees, block graphs, and connected graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Parametrized family, the input shape accepted by the CLI.
#[derive(Clone, Debug, PartialEq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { s: usize, t: usize },
    /// Star with `n` leaves, order `n + 1`, center `0`.
    Star { n: usize },
    /// Wheel with rim `0..n` and hub `n`, order `n + 1`.
    Wheel { n: usize },
    Spider { legs: Vec<usize> },
    RandomTree { n: usize, seed: u64 },
    RandomBlockGraph { blocks: Vec<usize>, seed: u64 },
    RandomConnected { n: usize, p: f64, seed: u64 },
}

pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path { n } => path(*n),
        FamilySpec::Cycle { n } => cycle(*n),
        FamilySpec::Complete { n } => complete(*n),
        FamilySpec::CompleteBipartite { s, t } => complete_bipartite(*s, *t),
        FamilySpec::Star { n } => star(*n),
        FamilySpec::Wheel { n } => wheel(*n),
        FamilySpec::Spider { legs } => spider(legs),
        FamilySpec::RandomTree { n, seed } => random_tree(*n, *seed),
        FamilySpec::RandomBlockGraph { blocks, seed } => random_block_graph(blocks, *seed),
        FamilySpec::RandomConnected { n, p, seed } => random_connected(*n, *p, *seed),
    }
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `K_{s,t}` with classes `0..s` and `s..s+t`.
pub fn complete_bipartite(s: usize, t: usize) -> Result<Graph> {
    if s == 0 || t == 0 {
        return Err(Error::InvalidParameter(
            "complete bipartite classes must be nonempty".into(),
        ));
    }
    let mut edges = Vec::with_capacity(s * t);
    for u in 0..s {
        for v in 0..t {
            edges.push((u, s + v));
        }
    }
    Graph::from_edges(s + t, &edges)
}

/// `K_{1,n}`: center `0` plus `n` leaves.
pub fn star(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("star needs at least one leaf".into()));
    }
    let edges: Vec<_> = (1..=n).map(|v| (0, v)).collect();
    Graph::from_edges(n + 1, &edges)
}

/// Wheel `W_{1,n}`: cycle `0..n` joined with the hub `n`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter("wheel needs rim length >= 3".into()));
    }
    cycle(n)?.join(&complete(1)?)
}

/// Tree with a center vertex `0` and one path per entry of `legs`.
pub fn spider(legs: &[usize]) -> Result<Graph> {
    if legs.is_empty() || legs.contains(&0) {
        return Err(Error::InvalidParameter(
            "spider legs must be nonempty positive lengths".into(),
        ));
    }
    let n = 1 + legs.iter().sum::<usize>();
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// The Petersen graph: outer cycle `0..5`, inner pentagram `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("fixed edge list")
}

// ChaCha keeps seeded streams stable across dependency upgrades.
fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform random labeled tree via a random Pruefer sequence.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("order must be positive".into()));
    }
    if n <= 2 {
        return path(n);
    }
    let mut rng = rng_for(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    Ok(tree_from_pruefer(n, &seq))
}

fn tree_from_pruefer(n: usize, seq: &[usize]) -> Graph {
    use std::cmp::Reverse;
    use std::collections::BinaryHeap;
    let mut degree = vec![1usize; n];
    for &v in seq {
        degree[v] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| degree[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &v in seq {
        let Reverse(leaf) = leaves.pop().expect("sequence leaves two vertices");
        edges.push((leaf, v));
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.push(Reverse(v));
        }
    }
    let Reverse(a) = leaves.pop().expect("two final leaves");
    let Reverse(b) = leaves.pop().expect("two final leaves");
    edges.push((a, b));
    Graph::from_edges(n, &edges).expect("valid tree edges")
}

/// Connected block graph: one clique per entry of `sizes`, each later clique
/// glued to a uniformly chosen existing vertex.
pub fn random_block_graph(sizes: &[usize], seed: u64) -> Result<Graph> {
    if sizes.is_empty() || sizes.iter().any(|&s| s < 2) {
        return Err(Error::InvalidParameter(
            "block sizes must be at least 2".into(),
        ));
    }
    let n = 1 + sizes.iter().map(|s| s - 1).sum::<usize>();
    let mut rng = rng_for(seed);
    let mut edges = Vec::new();
    let mut built = 1; // vertex 0 exists before the first block is glued
    for &size in sizes {
        let glue = rng.random_range(0..built);
        let fresh: Vec<Vertex> = (built..built + size - 1).collect();
        built += size - 1;
        let members: Vec<Vertex> = std::iter::once(glue).chain(fresh).collect();
        for i in 0..members.len() {
            for j in i + 1..members.len() {
                edges.push((members[i], members[j]));
            }
        }
    }
    debug_assert_eq!(built, n);
    Graph::from_edges(n, &edges)
}

/// Random connected graph: a uniform random spanning tree plus every other
/// pair independently with probability `p`.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter("p must lie in [0, 1]".into()));
    }
    let tree = random_tree(n, seed)?;
    let mut rng = rng_for(seed.wrapping_add(0x9e37_79b9_7f4a_7c15));
    let mut edges = tree.edges();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Random connected bipartite graph: a random tree, 2-colored, plus extra
/// cross-class pairs with probability `p`.
pub fn random_connected_bipartite(n: usize, p: f64, seed: u64) -> Result<Graph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter("p must lie in [0, 1]".into()));
    }
    let tree = random_tree(n, seed)?;
    let d = tree.distances();
    let mut rng = rng_for(seed.wrapping_add(0x517c_c1b7_2722_0a95));
    let mut edges = tree.edges();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && d.get(u, v) % 2 == 1 && rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}
