//! Exact DP-coloring search and the constructive planar algorithm.
//!
//! Three layers live here:
//!
//! - [`solve_transversal`] (complete backtracking) with the independent
//!   oracles [`brute_force_transversal`], [`direct_list_color`], and
//!   [`direct_signed_color`], all of which enumerate the raw product space;
//! - [`dp_chromatic`], exact DP-chromatic computation on small graphs via
//!   normalized enumeration of matching assignments;
//! - the structural colorers: [`greedy_degenerate_color`] along a degeneracy
//!   ordering, and [`color_planar_c4free`], which reduces a planar 4-cycle-free
//!   host by repeatedly removing a low-degree vertex or a six-vertex gadget
//!   and then replays the reduction in reverse to build a coloring from
//!   4-element lists.
//!
//! Every search visits vertices in ascending id order and colors in
//! ascending value order, so results are deterministic.

mod chromatic;
mod reduction;
mod search;

pub use chromatic::{dp_chromatic, ChromaticCertificate, LevelSearch, NormalizedInstance};
pub use reduction::{
    color_gadget, color_planar_c4free, greedy_degenerate_color, reduce, residual_list,
    ReductionStep, ReductionTrace, StuckRemainder,
};
pub use search::{
    brute_force_transversal, direct_list_color, direct_signed_color, solve_transversal,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::cover::InstanceError;
use crate::graph::CycleWitness;

/// Explicit numeric limits on the exhaustive searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchGuard {
    /// Largest product of list sizes a brute-force enumeration may visit.
    pub max_product: u64,
    /// Largest cycle rank (`|E| - |V| + components`) accepted by
    /// [`dp_chromatic`]; the normalized family has `(t!)^rank` members.
    pub max_free_edges: usize,
}

impl Default for SearchGuard {
    fn default() -> SearchGuard {
        SearchGuard {
            max_product: 10_000_000,
            max_free_edges: 4,
        }
    }
}

/// Solver failures. `Stuck` is a finding, not a crash: the remainder is the
/// certificate that the reduction hypotheses do not hold for the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error("search space of {space} assignments exceeds the guard ({limit})")]
    GuardExceeded { space: u128, limit: u64 },
    #[error("cycle rank {free_edges} exceeds the guard ({limit})")]
    TooManyFreeEdges { free_edges: usize, limit: usize },
    #[error("t must be at least 1")]
    InvalidTMax,
    #[error("vertex {vertex}: list has {size} colors, need at least {required}")]
    ListTooSmall {
        vertex: usize,
        size: usize,
        required: usize,
    },
    #[error("graph contains a 4-cycle through {:?}", .0.vertices)]
    ContainsC4(CycleWitness),
    #[error("reduction stuck on a remainder with {} vertices", .0.graph.vertex_count())]
    Stuck(StuckRemainder),
    #[error("gadget slot {slot}: {size} residual colors, need at least {required}")]
    GadgetListTooSmall {
        slot: usize,
        size: usize,
        required: usize,
    },
}
