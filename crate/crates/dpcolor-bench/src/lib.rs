//! Shared instance builders for the benchmarks.

use dpcolor::{Family, Graph, ListAssignment, MatchingAssignment};

/// The flagship constructive-coloring input: the line graph of the
/// dodecahedron with full 4-lists and seeded random matchings.
pub fn dodecahedral_line_instance(seed: u64) -> (Graph, ListAssignment, MatchingAssignment) {
    let g = Graph::generate(Family::DodecahedralLine, 0).unwrap();
    let lists = ListAssignment::full(&g, 4);
    let matchings = MatchingAssignment::random(&g, &lists, seed);
    (g, lists, matchings)
}
