//! Exact computation of the nonlocal metric dimension of graphs.
//!
//! A set of vertices resolves a pair when some member has different
//! distances to the two endpoints. This crate computes minimum resolving
//! sets exactly for three pair regimes (all pairs, non-adjacent pairs,
//! adjacent pairs), the structural invariants the closed-form results need,
//! the closed forms themselves (trees, block graphs, corona products,
//! complete bipartite graphs, wheels), a supergraph embedding with small
//! nonlocal dimension and diameter, and a verification harness that checks
//! every formula against the solver at desk scale.

pub mod bitset;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod solver;
pub mod structure;
pub mod verify;

pub use embed::{embed_supergraph, verify_embedding, EmbeddingReport, EmbeddingResult};
pub use error::{Error, Result};
pub use families::FamilySpec;
pub use graph::{DistanceMatrix, Graph, MetricRepresentation, Vertex, UNREACHABLE};
pub use solver::{
    all_min_bases, build_instance, greedy_upper_bound, is_resolving, solve_exact,
    solve_exact_with, MinBases, PairMode, SolveResult, SolverConfig,
};
pub use verify::{CampaignParams, Failure, TheoremId, VerificationReport};
