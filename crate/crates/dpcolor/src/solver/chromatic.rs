//! Exact DP-chromatic number by normalized enumeration.
//!
//! The DP-chromatic number is the least `t` such that *every* `t`-list
//! assignment with *every* matching assignment admits a transversal. Naively
//! that quantifies over an unbounded family, but two symmetries cut it down
//! to a finite one:
//!
//! - monotonicity: shrinking every list to exactly `t` colors and extending
//!   every matching to a perfect one only removes transversals, so a worst
//!   case lives among exact-`t` lists with perfect matchings;
//! - twist invariance: per-vertex color bijections preserve solvability, so
//!   all lists can be relabeled to `{1..t}` and the matchings on a spanning
//!   forest can be rotated to the identity.
//!
//! What remains is one permutation of `{1..t}` per non-forest edge:
//! `(t!)^(|E| - |V| + components)` assignments, enumerated here in
//! lexicographic order. Both reductions are property-tested rather than
//! trusted. Any parallel split of the family must still report the
//! lexicographically first failure; this sequential scan does so trivially.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::cover::{ListAssignment, MatchingAssignment};
use crate::graph::Graph;
use crate::solver::search::solve_transversal;
use crate::solver::{SearchGuard, SolverError};

/// One member of the normalized family: full lists `{1..t}`, identity on a
/// spanning forest, an explicit permutation on every other edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalizedInstance {
    pub t: usize,
    pub lists: ListAssignment,
    pub matchings: MatchingAssignment,
}

/// Search record for one list size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelSearch {
    pub t: usize,
    /// Size of the normalized family at this level: `(t!)^rank`.
    pub family_size: u64,
    /// Assignments actually solved. Equals `family_size` when the level
    /// passed; the scan stops at the first failure otherwise.
    pub checked: u64,
    /// The lexicographically first failing assignment, if any.
    pub failing: Option<NormalizedInstance>,
}

/// The outcome of a DP-chromatic computation, with enough detail to replay
/// it: the value (or `None` when above `t_max`), the free edges the
/// normalization enumerated over, and one record per level searched.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticCertificate {
    /// Least `t <= t_max` whose whole normalized family is solvable, or
    /// `None` if every level up to `t_max` has a failing assignment.
    pub value: Option<usize>,
    pub t_max: usize,
    /// Non-forest edges carrying the enumerated permutations.
    pub free_edges: Vec<(usize, usize)>,
    pub levels: Vec<LevelSearch>,
}

impl ChromaticCertificate {
    /// The failing assignment that pins the lower bound: at `value - 1` for
    /// an exact result, at `t_max` when the value exceeds it.
    pub fn failing_below(&self) -> Option<&NormalizedInstance> {
        match self.value {
            Some(1) => None,
            Some(v) => self.levels.get(v - 2).and_then(|l| l.failing.as_ref()),
            None => self.levels.last().and_then(|l| l.failing.as_ref()),
        }
    }
}

/// Computes the DP-chromatic number of `g`, capped at `t_max`.
///
/// The guard bounds the cycle rank (each free edge multiplies the family by
/// `t!`) and the per-level family size.
pub fn dp_chromatic(
    g: &Graph,
    t_max: usize,
    guard: &SearchGuard,
) -> Result<ChromaticCertificate, SolverError> {
    if t_max < 1 {
        return Err(SolverError::InvalidTMax);
    }
    let rank = g.edge_count() + g.component_count() - g.vertex_count();
    if rank > guard.max_free_edges {
        return Err(SolverError::TooManyFreeEdges {
            free_edges: rank,
            limit: guard.max_free_edges,
        });
    }
    let forest = spanning_forest(g);
    let free_edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .copied()
        .filter(|e| !forest.contains(e))
        .collect();
    debug_assert_eq!(free_edges.len(), rank);

    let mut levels = Vec::new();
    let mut value = None;
    for t in 1..=t_max {
        let level = search_level(g, t, &forest, &free_edges, guard)?;
        let passed = level.failing.is_none();
        levels.push(level);
        if passed {
            value = Some(t);
            break;
        }
    }
    Ok(ChromaticCertificate {
        value,
        t_max,
        free_edges,
        levels,
    })
}

fn search_level(
    g: &Graph,
    t: usize,
    forest: &BTreeSet<(usize, usize)>,
    free_edges: &[(usize, usize)],
    guard: &SearchGuard,
) -> Result<LevelSearch, SolverError> {
    let perms = permutations_lex(t);
    let family_size = (perms.len() as u128).pow(free_edges.len() as u32);
    if family_size > guard.max_product as u128 {
        return Err(SolverError::GuardExceeded {
            space: family_size,
            limit: guard.max_product,
        });
    }
    let lists = ListAssignment::full(g, t);
    let identity: BTreeSet<(i32, i32)> = (1..=t as i32).map(|c| (c, c)).collect();

    let mut digits = vec![0usize; free_edges.len()];
    let mut checked = 0u64;
    let mut failing = None;
    'family: loop {
        let mut entries: BTreeMap<(usize, usize), BTreeSet<(i32, i32)>> = BTreeMap::new();
        for &e in forest {
            entries.insert(e, identity.clone());
        }
        for (i, &e) in free_edges.iter().enumerate() {
            let perm = &perms[digits[i]];
            entries.insert(
                e,
                (1..=t as i32).map(|c| (c, perm[c as usize - 1])).collect(),
            );
        }
        let matchings = MatchingAssignment::from_entries(entries);
        checked += 1;
        if solve_transversal(g, &lists, &matchings)?.is_none() {
            failing = Some(NormalizedInstance {
                t,
                lists: lists.clone(),
                matchings,
            });
            break 'family;
        }
        // Advance the odometer, last free edge fastest.
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                break 'family;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < perms.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
    Ok(LevelSearch {
        t,
        family_size: family_size as u64,
        checked,
        failing,
    })
}

/// DFS spanning forest, roots and neighbors in ascending order.
fn spanning_forest(g: &Graph) -> BTreeSet<(usize, usize)> {
    let mut forest = BTreeSet::new();
    let mut seen = vec![false; g.vertex_count()];
    for root in g.vertices() {
        if !seen[root] {
            seen[root] = true;
            dfs(g, root, &mut seen, &mut forest);
        }
    }
    forest
}

fn dfs(g: &Graph, v: usize, seen: &mut [bool], forest: &mut BTreeSet<(usize, usize)>) {
    for &w in g.neighbors(v) {
        if !seen[w] {
            seen[w] = true;
            forest.insert((v.min(w), v.max(w)));
            dfs(g, w, seen, forest);
        }
    }
}

/// All permutations of `[1..t]` in lexicographic order.
fn permutations_lex(t: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(t);
    let mut used = vec![false; t + 1];
    build_perms(t, &mut current, &mut used, &mut out);
    out
}

fn build_perms(t: usize, current: &mut Vec<i32>, used: &mut [bool], out: &mut Vec<Vec<i32>>) {
    if current.len() == t {
        out.push(current.clone());
        return;
    }
    for c in 1..=t {
        if !used[c] {
            used[c] = true;
            current.push(c as i32);
            build_perms(t, current, used, out);
            current.pop();
            used[c] = false;
        }
    }
}
