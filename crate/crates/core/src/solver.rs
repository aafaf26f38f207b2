//! Exact minimum resolving sets, computed as minimum set covers: a vertex
//! covers a pair when its distances to the two endpoints differ. Supports
//! all pairs, non-adjacent pairs only, and adjacent pairs only.

use std::sync::OnceLock;
use std::time::{Duration, Instant};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// Which vertex pairs a resolving set must distinguish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairMode {
    /// Every pair: the classic metric dimension.
    All,
    /// Non-adjacent pairs only: the nonlocal metric dimension.
    NonAdjacent,
    /// Adjacent pairs only: the local metric dimension.
    Adjacent,
}

impl PairMode {
    #[inline]
    pub fn includes(self, adjacent: bool) -> bool {
        match self {
            PairMode::All => true,
            PairMode::NonAdjacent => !adjacent,
            PairMode::Adjacent => adjacent,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PairMode::All => "dim",
            PairMode::NonAdjacent => "dim_nl",
            PairMode::Adjacent => "dim_l",
        }
    }
}

/// The set-cover view of a resolving-set problem.
pub struct ResolutionInstance {
    pub mode: PairMode,
    /// Unordered pairs to distinguish, `(u, v)` with `u < v`, ascending.
    pub pairs: Vec<(Vertex, Vertex)>,
    /// Per vertex, the set of pair indices it distinguishes.
    pub distinguishers: Vec<Bitset>,
}

#[derive(Clone, Copy, Debug)]
pub struct SolverConfig {
    /// Branch-node ceiling; exceeding it is an error, never a wrong answer.
    pub node_budget: u64,
    pub max_pairs: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: 100_000_000,
            max_pairs: 20_000,
        }
    }
}

impl SolverConfig {
    /// Default config with the node ceiling overridable via `NLDIM_BUDGET`.
    pub fn from_env() -> Self {
        static CONFIG: OnceLock<SolverConfig> = OnceLock::new();
        *CONFIG.get_or_init(|| {
            let mut cfg = SolverConfig::default();
            if let Ok(s) = std::env::var("NLDIM_BUDGET") {
                if let Ok(budget) = s.trim().parse::<u64>() {
                    cfg.node_budget = budget;
                }
            }
            cfg
        })
    }
}

#[derive(Clone, Debug)]
pub struct SolveStats {
    pub nodes: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SolveResult {
    pub value: usize,
    /// One minimum resolving set, sorted ascending; the first optimum found
    /// under ascending-vertex branching.
    pub basis: Vec<Vertex>,
    pub mode: PairMode,
    pub stats: SolveStats,
}

/// All minimum bases up to a cap, in lexicographic order.
#[derive(Clone, Debug)]
pub struct MinBases {
    pub value: usize,
    pub bases: Vec<Vec<Vertex>>,
    /// True when more bases exist beyond `bases`.
    pub truncated: bool,
}

pub fn build_instance(g: &Graph, mode: PairMode) -> Result<ResolutionInstance> {
    build_instance_with(g, mode, &SolverConfig::from_env())
}

pub fn build_instance_with(
    g: &Graph,
    mode: PairMode,
    cfg: &SolverConfig,
) -> Result<ResolutionInstance> {
    g.require_connected("build_instance")?;
    let n = g.n();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if mode.includes(g.has_edge(u, v)) {
                pairs.push((u, v));
            }
        }
    }
    if pairs.len() > cfg.max_pairs {
        return Err(Error::TooManyPairs {
            pairs: pairs.len(),
            limit: cfg.max_pairs,
        });
    }
    let d = g.distances();
    let mut distinguishers = vec![Bitset::new(pairs.len()); n];
    for (idx, &(u, v)) in pairs.iter().enumerate() {
        for (x, set) in distinguishers.iter_mut().enumerate() {
            if d.get(x, u) != d.get(x, v) {
                set.insert(idx);
            }
        }
    }
    Ok(ResolutionInstance {
        mode,
        pairs,
        distinguishers,
    })
}

/// Direct check that `set` distinguishes every pair of the mode. Does not go
/// through the set-cover machinery.
pub fn is_resolving(g: &Graph, set: &[Vertex], mode: PairMode) -> bool {
    let n = g.n();
    let d = g.distances();
    for u in 0..n {
        for v in u + 1..n {
            if mode.includes(g.has_edge(u, v))
                && !set.iter().any(|&x| d.get(x, u) != d.get(x, v))
            {
                return false;
            }
        }
    }
    true
}

/// Greedy cover: repeatedly the vertex distinguishing the most uncovered
/// pairs, lowest index on ties. Resolving by construction, size >= optimum.
pub fn greedy_upper_bound(g: &Graph, mode: PairMode) -> Result<Vec<Vertex>> {
    let inst = build_instance(g, mode)?;
    Ok(greedy_cover(&inst))
}

fn greedy_cover(inst: &ResolutionInstance) -> Vec<Vertex> {
    let mut uncovered = Bitset::new(inst.pairs.len());
    for i in 0..inst.pairs.len() {
        uncovered.insert(i);
    }
    let mut chosen = Vec::new();
    while !uncovered.is_empty() {
        let v = (0..inst.distinguishers.len())
            .max_by_key(|&v| {
                (
                    inst.distinguishers[v].intersection_count(&uncovered),
                    usize::MAX - v, // lowest index wins ties
                )
            })
            .expect("at least one vertex");
        debug_assert!(inst.distinguishers[v].intersection_count(&uncovered) > 0);
        uncovered.subtract(&inst.distinguishers[v]);
        chosen.push(v);
    }
    chosen.sort_unstable();
    chosen
}

fn covers_all(inst: &ResolutionInstance, set: &[Vertex]) -> bool {
    let mut uncovered = Bitset::new(inst.pairs.len());
    for i in 0..inst.pairs.len() {
        uncovered.insert(i);
    }
    for &v in set {
        uncovered.subtract(&inst.distinguishers[v]);
    }
    uncovered.is_empty()
}

/// Drops redundant vertices (ascending) from a cover.
fn minimalize(inst: &ResolutionInstance, set: &mut Vec<Vertex>) {
    let mut i = 0;
    while i < set.len() {
        let v = set.remove(i);
        if !covers_all(inst, set) {
            set.insert(i, v);
            i += 1;
        }
    }
}

pub fn solve_exact(g: &Graph, mode: PairMode) -> Result<SolveResult> {
    solve_exact_with(g, mode, &SolverConfig::from_env())
}

pub fn solve_exact_with(g: &Graph, mode: PairMode, cfg: &SolverConfig) -> Result<SolveResult> {
    let start = Instant::now();
    let inst = build_instance_with(g, mode, cfg)?;
    let mut seed = greedy_cover(&inst);
    minimalize(&inst, &mut seed);
    let mut search = Search::new(&inst, seed, cfg.node_budget);
    let mut all_pairs = Bitset::new(inst.pairs.len());
    for i in 0..inst.pairs.len() {
        all_pairs.insert(i);
    }
    search.branch(&all_pairs)?;
    Ok(SolveResult {
        value: search.best.len(),
        basis: search.best,
        mode,
        stats: SolveStats {
            nodes: search.nodes,
            elapsed: start.elapsed(),
        },
    })
}

struct Search<'a> {
    inst: &'a ResolutionInstance,
    /// Per pair, the set of vertices distinguishing it.
    pair_vertices: Vec<Bitset>,
    /// Pair indices ordered by ascending distinguisher count.
    pair_order: Vec<usize>,
    best: Vec<Vertex>,
    chosen: Vec<Vertex>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(inst: &'a ResolutionInstance, seed: Vec<Vertex>, budget: u64) -> Self {
        let n = inst.distinguishers.len();
        let p = inst.pairs.len();
        let mut pair_vertices = vec![Bitset::new(n); p];
        for (v, set) in inst.distinguishers.iter().enumerate() {
            for idx in set.iter() {
                pair_vertices[idx].insert(v);
            }
        }
        let mut pair_order: Vec<usize> = (0..p).collect();
        pair_order.sort_by_key(|&idx| pair_vertices[idx].count());
        Search {
            inst,
            pair_vertices,
            pair_order,
            best: seed,
            chosen: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    /// Greedy packing of uncovered pairs with pairwise disjoint
    /// distinguisher sets; each packed pair needs its own vertex.
    fn lower_bound(&self, uncovered: &Bitset) -> usize {
        let n = self.inst.distinguishers.len();
        let mut used = Bitset::new(n);
        let mut count = 0;
        for &idx in &self.pair_order {
            if uncovered.contains(idx) && self.pair_vertices[idx].is_disjoint(&used) {
                used.union_with(&self.pair_vertices[idx]);
                count += 1;
            }
        }
        count
    }

    fn branch(&mut self, uncovered: &Bitset) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { explored: self.nodes });
        }
        if uncovered.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
                self.best.sort_unstable();
            }
            return Ok(());
        }
        if self.chosen.len() + 1 >= self.best.len() {
            return Ok(());
        }
        if self.chosen.len() + self.lower_bound(uncovered) >= self.best.len() {
            return Ok(());
        }
        // Branch on the uncovered pair with the fewest distinguishers.
        let pick = *self
            .pair_order
            .iter()
            .find(|&&idx| uncovered.contains(idx))
            .expect("uncovered pair exists");
        let candidates: Vec<Vertex> = self.pair_vertices[pick].iter().collect();
        for v in candidates {
            let mut next = uncovered.clone();
            next.subtract(&self.inst.distinguishers[v]);
            self.chosen.push(v);
            self.branch(&next)?;
            self.chosen.pop();
        }
        Ok(())
    }
}

pub fn all_min_bases(g: &Graph, mode: PairMode, limit: usize) -> Result<MinBases> {
    let cfg = SolverConfig::from_env();
    let value = solve_exact_with(g, mode, &cfg)?.value;
    let inst = build_instance_with(g, mode, &cfg)?;
    let search = Search::new(&inst, Vec::new(), cfg.node_budget);
    let mut uncovered = Bitset::new(inst.pairs.len());
    for i in 0..inst.pairs.len() {
        uncovered.insert(i);
    }
    let mut enumerator = Enumerator {
        search,
        k: value,
        limit,
        bases: Vec::new(),
        truncated: false,
        chosen: Vec::new(),
        nodes: 0,
        budget: cfg.node_budget,
    };
    enumerator.run(0, &uncovered)?;
    Ok(MinBases {
        value,
        bases: enumerator.bases,
        truncated: enumerator.truncated,
    })
}

struct Enumerator<'a> {
    search: Search<'a>,
    k: usize,
    limit: usize,
    bases: Vec<Vec<Vertex>>,
    truncated: bool,
    chosen: Vec<Vertex>,
    nodes: u64,
    budget: u64,
}

impl Enumerator<'_> {
    /// Lexicographic DFS over ascending vertex tuples of length `k`.
    /// Returns Ok(false) once the cap is hit.
    fn run(&mut self, start: Vertex, uncovered: &Bitset) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { explored: self.nodes });
        }
        if self.chosen.len() == self.k {
            if uncovered.is_empty() {
                if self.bases.len() == self.limit {
                    self.truncated = true;
                    return Ok(false);
                }
                self.bases.push(self.chosen.clone());
            }
            return Ok(true);
        }
        let remaining = self.k - self.chosen.len();
        if self.search.lower_bound(uncovered) > remaining {
            return Ok(true);
        }
        let n = self.search.inst.distinguishers.len();
        for v in start..n {
            // A vertex adding no new coverage cannot sit in a minimum basis.
            if self.search.inst.distinguishers[v].is_disjoint(uncovered) {
                continue;
            }
            let mut next = uncovered.clone();
            next.subtract(&self.search.inst.distinguishers[v]);
            self.chosen.push(v);
            let keep = self.run(v + 1, &next)?;
            self.chosen.pop();
            if !keep {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn dimension(g: &Graph, mode: PairMode) -> usize {
        solve_exact(g, mode).unwrap().value
    }

    #[test]
    fn complete_graphs_have_empty_instances() {
        let inst = build_instance(&families::complete(7).unwrap(), PairMode::NonAdjacent).unwrap();
        assert!(inst.pairs.is_empty());
        let res = solve_exact(&families::complete(7).unwrap(), PairMode::NonAdjacent).unwrap();
        assert_eq!(res.value, 0);
        assert!(res.basis.is_empty());
    }

    #[test]
    fn instance_pairs_and_self_distinguishing() {
        let c4 = families::cycle(4).unwrap();
        let inst = build_instance(&c4, PairMode::NonAdjacent).unwrap();
        assert_eq!(inst.pairs, vec![(0, 2), (1, 3)]);

        let p3 = families::path(3).unwrap();
        let inst = build_instance(&p3, PairMode::All).unwrap();
        assert_eq!(inst.pairs.len(), 3);
        assert_eq!(inst.distinguishers[0].count(), 3);

        // A vertex distinguishes every listed pair containing itself.
        let g = families::random_connected(9, 0.4, 11).unwrap();
        for mode in [PairMode::All, PairMode::NonAdjacent, PairMode::Adjacent] {
            let inst = build_instance(&g, mode).unwrap();
            for (idx, &(u, v)) in inst.pairs.iter().enumerate() {
                assert!(inst.distinguishers[u].contains(idx));
                assert!(inst.distinguishers[v].contains(idx));
            }
        }
    }

    #[test]
    fn named_nonlocal_values() {
        assert_eq!(dimension(&families::path(9).unwrap(), PairMode::NonAdjacent), 1);
        assert_eq!(dimension(&families::cycle(9).unwrap(), PairMode::NonAdjacent), 2);
        assert_eq!(
            dimension(&families::complete_bipartite(2, 3).unwrap(), PairMode::NonAdjacent),
            3
        );
        assert_eq!(dimension(&families::wheel(13).unwrap(), PairMode::NonAdjacent), 5);
        assert_eq!(dimension(&families::petersen(), PairMode::NonAdjacent), 3);
    }

    #[test]
    fn wheel_resolving_checks() {
        let w10 = families::wheel(10).unwrap();
        assert!(is_resolving(&w10, &[0, 5, 7, 9], PairMode::NonAdjacent));
        let all: Vec<usize> = (0..w10.n()).collect();
        assert!(is_resolving(&w10, &all, PairMode::NonAdjacent));
        let c4 = families::cycle(4).unwrap();
        assert!(!is_resolving(&c4, &[0], PairMode::NonAdjacent));
    }

    #[test]
    fn greedy_is_resolving_and_above_optimum() {
        for seed in 0..10 {
            let g = families::random_tree(12, seed).unwrap();
            for mode in [PairMode::All, PairMode::NonAdjacent, PairMode::Adjacent] {
                let greedy = greedy_upper_bound(&g, mode).unwrap();
                assert!(is_resolving(&g, &greedy, mode));
                assert!(greedy.len() >= dimension(&g, mode));
            }
        }
        assert!(greedy_upper_bound(&families::complete(5).unwrap(), PairMode::NonAdjacent)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn certificates_are_minimal() {
        for seed in 0..8 {
            let g = families::random_connected(10, 0.35, seed).unwrap();
            for mode in [PairMode::All, PairMode::NonAdjacent, PairMode::Adjacent] {
                let res = solve_exact(&g, mode).unwrap();
                assert!(is_resolving(&g, &res.basis, mode));
                for i in 0..res.basis.len() {
                    let mut smaller = res.basis.clone();
                    smaller.remove(i);
                    assert!(!is_resolving(&g, &smaller, mode));
                }
            }
        }
    }

    #[test]
    fn all_min_bases_on_small_graphs() {
        let c4 = families::cycle(4).unwrap();
        let bases = all_min_bases(&c4, PairMode::NonAdjacent, 100).unwrap();
        assert_eq!(bases.value, 2);
        assert_eq!(
            bases.bases,
            vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]
        );
        assert!(!bases.truncated);

        let kn = families::complete(6).unwrap();
        let bases = all_min_bases(&kn, PairMode::NonAdjacent, 10).unwrap();
        assert_eq!(bases.bases, vec![Vec::<usize>::new()]);

        // The wheel hub sits in no minimum nonlocal basis.
        let w9 = families::wheel(9).unwrap();
        let bases = all_min_bases(&w9, PairMode::NonAdjacent, 10_000).unwrap();
        assert!(!bases.bases.is_empty());
        assert!(bases.bases.iter().all(|b| !b.contains(&9)));
    }

    #[test]
    fn truncation_is_flagged() {
        let w9 = families::wheel(9).unwrap();
        let capped = all_min_bases(&w9, PairMode::NonAdjacent, 2).unwrap();
        assert_eq!(capped.bases.len(), 2);
        assert!(capped.truncated);
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let cfg = SolverConfig {
            node_budget: 3,
            max_pairs: 20_000,
        };
        let g = families::wheel(12).unwrap();
        assert!(matches!(
            solve_exact_with(&g, PairMode::All, &cfg),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn disconnected_inputs_are_rejected(){
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            solve_exact(&g, PairMode::All),
            Err(Error::Disconnected { .. })
        ));
    }
}
