//! Above-Dirac-guarantee approximation of long cycles and (s,t)-paths in
//! 2-connected graphs.
//!
//! Given any black-box longest-cycle approximation with guarantee f(L), the
//! pipeline produces cycles of length at least 2δ(G) + f(k)/128 − 8 and
//! (s,t)-paths of length at least δ(G−{s,t}) + f(k)/32 − 3, where k is the
//! offset of the optimum above the respective degree guarantee. Everything is
//! built to be checked: witnesses are explicit vertex sequences, decomposition
//! structures carry validators, and exact solvers double as reference oracles
//! at desk scale.

pub mod blocks;
pub mod disjoint;
pub mod eg;
pub mod enlarge;
pub mod contraction;
pub mod error;
pub mod exact;
pub mod fixtures;
pub mod graph;
pub mod oracle;
pub mod witness;

pub use blocks::{block_cut_tree, BlockTree};
pub use contraction::{contract_edges, reverse_path, ContractionLog, ContractionRecord};
pub use error::{Error, Result};
pub use exact::{
    exact_longest_cycle, exact_longest_path, exact_longest_st_path, CycleSearch,
    DEFAULT_EXACT_THRESHOLD,
};
pub use graph::{connectivity_profile, min_degree, ConnectivityProfile, Graph, Vertex};
pub use witness::{validate_witness, CycleWitness, PathWitness, WitnessRef, WitnessViolation};
