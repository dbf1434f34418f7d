//! DP-coloring (correspondence coloring) of simple undirected graphs.
//!
//! DP-coloring generalizes list coloring: each edge carries a partial matching
//! between the endpoints' color lists, and a coloring must avoid every matched
//! pair. This crate provides:
//!
//! - host-graph machinery: parsing, generators, degeneracy, fixed-length cycle
//!   search, and search for the six-vertex gadget used by the planar algorithm
//!   ([`graph`]);
//! - list assignments, matching assignments, cover-graph construction, and
//!   coloring verification, with adapters that express list coloring and
//!   signed coloring as DP-coloring instances ([`cover`]);
//! - exact solvers, brute-force oracles, exact DP-chromatic computation on
//!   small graphs, and a constructive DP-4-coloring algorithm for planar
//!   graphs without 4-cycles ([`solver`]).
//!
//! All values are immutable after construction and all operations are pure
//! functions of their inputs, so shared read-only use across threads is safe.
//! Every randomized operation takes an explicit 64-bit seed and uses the
//! generator in [`rng`], so results are reproducible across platforms.

pub mod cover;
pub mod graph;
pub mod rng;
pub mod solver;

pub use cover::{
    nk, signed_instance, twist, validate_instance, verify_coloring, Coloring, CoverGraph,
    InstanceError, ListAssignment, MatchingAssignment, SignedGraph, Violation,
};
pub use graph::{
    CycleWitness, DegeneracyReport, F53Witness, Family, Graph, GraphError, ParseError, VertexRemap,
};
pub use solver::{
    brute_force_transversal, color_gadget, color_planar_c4free, direct_list_color,
    direct_signed_color, dp_chromatic, greedy_degenerate_color, reduce, residual_list,
    solve_transversal, ChromaticCertificate, ReductionStep, ReductionTrace, SearchGuard,
    SolverError, StuckRemainder,
};
