//! Embeds any connected graph as an induced subgraph of a supergraph whose
//! nonlocal dimension is at most the log of the clique cover number and
//! whose diameter is at most 4.
//!
//! The construction covers the vertices by cliques (an optimal coloring of
//! the complement), appends a clique of `k = ceil(log2 s)` anchor vertices,
//! and wires anchor `j` to every class whose index has bit `j` equal to 0,
//! most significant bit first. Distinct classes then differ on some anchor,
//! which resolves every non-adjacent pair.

use crate::error::Result;
use crate::graph::{Graph, Vertex};
use crate::solver::{is_resolving, solve_exact, PairMode};
use crate::structure::optimal_coloring;

#[derive(Clone, Debug)]
pub struct EmbeddingResult {
    pub supergraph: Graph,
    /// Injection of the input's vertices into the supergraph (the identity;
    /// anchors take the trailing indices).
    pub embedding: Vec<Vertex>,
    /// Clique cover classes, relabeled so an edge joins the first and last.
    pub classes: Vec<Vec<Vertex>>,
    /// The added clique; empty when the input is complete.
    pub anchor: Vec<Vertex>,
}

impl EmbeddingResult {
    /// Number of clique cover classes (chromatic number of the complement).
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn anchor_size(&self) -> usize {
        self.anchor.len()
    }
}

fn ceil_log2(s: usize) -> usize {
    debug_assert!(s >= 1);
    (usize::BITS - (s - 1).leading_zeros()) as usize
}

pub fn embed_supergraph(g: &Graph) -> Result<EmbeddingResult> {
    g.require_connected("embed_supergraph")?;
    let n = g.n();
    let coloring = optimal_coloring(&g.complement());
    let mut classes = coloring.classes;
    let s = classes.len();
    if s == 1 {
        // Complete input: embed into itself.
        return Ok(EmbeddingResult {
            supergraph: g.clone(),
            embedding: (0..n).collect(),
            classes,
            anchor: vec![],
        });
    }
    relabel_for_crossing_edge(g, &mut classes);
    let k = ceil_log2(s);
    let mut edges = g.edges();
    let anchor: Vec<Vertex> = (n..n + k).collect();
    for a in 0..k {
        for b in a + 1..k {
            edges.push((anchor[a], anchor[b]));
        }
    }
    for (i, class) in classes.iter().enumerate() {
        for j in 0..k {
            if i >> (k - 1 - j) & 1 == 0 {
                for &v in class {
                    edges.push((v, anchor[j]));
                }
            }
        }
    }
    let supergraph = Graph::from_edges(n + k, &edges)?;
    Ok(EmbeddingResult {
        supergraph,
        embedding: (0..n).collect(),
        classes,
        anchor,
    })
}

/// Moves the first class pair joined by an edge to positions 0 and s-1.
/// Connectivity guarantees such a pair exists when s >= 2.
fn relabel_for_crossing_edge(g: &Graph, classes: &mut Vec<Vec<Vertex>>) {
    let s = classes.len();
    for a in 0..s {
        for b in a + 1..s {
            let crossing = classes[a]
                .iter()
                .any(|&u| classes[b].iter().any(|&v| g.has_edge(u, v)));
            if crossing {
                let class_b = classes.remove(b);
                let class_a = classes.remove(a);
                classes.insert(0, class_a);
                classes.push(class_b);
                return;
            }
        }
    }
    unreachable!("a connected graph with s >= 2 classes has a crossing edge");
}

/// Verification of one embedding; any violation names the offending pair.
#[derive(Clone, Debug)]
pub struct EmbeddingReport {
    pub class_count: usize,
    pub anchor_size: usize,
    pub classes_partition: bool,
    pub classes_are_cliques: bool,
    pub induced_subgraph: bool,
    pub anchor_rule: bool,
    pub crossing_edge: bool,
    pub anchor_resolves: bool,
    pub diameter: u32,
    pub diameter_at_most_4: bool,
    /// True when the class count is strictly below `2^k`.
    pub strict_power_gap: bool,
    /// Strict power gap forces diameter at most 3; vacuously true otherwise.
    pub diameter_at_most_3_when_strict: bool,
    pub solver_value: Option<usize>,
    pub solver_within_bound: Option<bool>,
    pub violations: Vec<String>,
}

impl EmbeddingReport {
    pub fn all_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn verify_embedding(g: &Graph, r: &EmbeddingResult, solve: bool) -> Result<EmbeddingReport> {
    let n = g.n();
    let h = &r.supergraph;
    let s = r.class_count();
    let k = r.anchor_size();
    let mut violations = Vec::new();

    let mut covered: Vec<Vertex> = r.classes.iter().flatten().copied().collect();
    covered.sort_unstable();
    let classes_partition = covered == (0..n).collect::<Vec<_>>();
    if !classes_partition {
        violations.push("classes do not partition the vertex set".into());
    }

    let mut classes_are_cliques = true;
    for (i, class) in r.classes.iter().enumerate() {
        for (a, &u) in class.iter().enumerate() {
            for &v in &class[a + 1..] {
                if !g.has_edge(u, v) {
                    classes_are_cliques = false;
                    violations.push(format!("class {i} is not a clique: ({u}, {v})"));
                }
            }
        }
    }

    let mut induced_subgraph = true;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) != h.has_edge(r.embedding[u], r.embedding[v]) {
                induced_subgraph = false;
                violations.push(format!("embedding not induced at ({u}, {v})"));
            }
        }
    }

    let mut anchor_rule = true;
    for (a, &x) in r.anchor.iter().enumerate() {
        for (b, &y) in r.anchor.iter().enumerate() {
            if a < b && !h.has_edge(x, y) {
                anchor_rule = false;
                violations.push(format!("anchor is not a clique: ({x}, {y})"));
            }
        }
        for (i, class) in r.classes.iter().enumerate() {
            let want = i >> (k - 1 - a) & 1 == 0;
            for &v in class {
                if h.has_edge(x, v) != want {
                    anchor_rule = false;
                    violations.push(format!(
                        "anchor {a} vs class {i}: edge ({x}, {v}) mismatch"
                    ));
                }
            }
        }
    }

    let crossing_edge = s < 2
        || r.classes[0]
            .iter()
            .any(|&u| r.classes[s - 1].iter().any(|&v| g.has_edge(u, v)));
    if !crossing_edge {
        violations.push("no edge joins the first and last classes".into());
    }

    let anchor_resolves = is_resolving(h, &r.anchor, PairMode::NonAdjacent);
    if !anchor_resolves {
        violations.push("anchor is not a nonlocal resolving set".into());
    }

    let diameter = if h.n() == 1 { 0 } else { h.diameter()? };
    let diameter_at_most_4 = diameter <= 4;
    if !diameter_at_most_4 {
        violations.push(format!("diameter {diameter} exceeds 4"));
    }
    let strict_power_gap = k > 0 && s < 1 << k;
    let diameter_at_most_3_when_strict = !strict_power_gap || diameter <= 3;
    if !diameter_at_most_3_when_strict {
        violations.push(format!(
            "class count {s} below 2^{k} but diameter is {diameter}"
        ));
    }

    let solver_value = if solve {
        Some(solve_exact(h, PairMode::NonAdjacent)?.value)
    } else {
        None
    };
    let solver_within_bound = solver_value.map(|v| v <= k);
    if solver_within_bound == Some(false) {
        violations.push(format!(
            "exact nonlocal dimension {} exceeds anchor size {k}",
            solver_value.unwrap()
        ));
    }

    Ok(EmbeddingReport {
        class_count: s,
        anchor_size: k,
        classes_partition,
        classes_are_cliques,
        induced_subgraph,
        anchor_rule,
        crossing_edge,
        anchor_resolves,
        diameter,
        diameter_at_most_4,
        strict_power_gap,
        diameter_at_most_3_when_strict,
        solver_value,
        solver_within_bound,
        violations,
    })
}
