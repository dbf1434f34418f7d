//! Complete transversal search plus the brute-force oracles.
//!
//! [`solve_transversal`] is the workhorse: backtracking over vertices in id
//! order with matched-pair conflict checks against already-colored
//! neighbors. The three oracles deliberately avoid that machinery: they walk
//! the raw product of the lists in lexicographic order and re-check every
//! candidate from the definitions, so they can confirm or refute the solver
//! independently.

use crate::cover::{
    nk, validate_instance, verify_coloring, Coloring, ListAssignment, MatchingAssignment,
    SignedGraph,
};
use crate::graph::Graph;
use crate::solver::{SearchGuard, SolverError};

/// Finds a valid DP-coloring, or proves none exists. Complete: a `None`
/// result means the instance has no transversal. Deterministic: vertices are
/// colored in id order, colors tried in ascending order, and the first
/// solution in that order is returned.
pub fn solve_transversal(
    g: &Graph,
    lists: &ListAssignment,
    matchings: &MatchingAssignment,
) -> Result<Option<Coloring>, SolverError> {
    validate_instance(g, lists, matchings)?;
    let mut partial = Coloring::new(g.vertex_count());
    if backtrack(g, lists, matchings, &mut partial, 0) {
        Ok(Some(partial))
    } else {
        Ok(None)
    }
}

fn backtrack(
    g: &Graph,
    lists: &ListAssignment,
    matchings: &MatchingAssignment,
    partial: &mut Coloring,
    v: usize,
) -> bool {
    if v == g.vertex_count() {
        return true;
    }
    'colors: for &c in lists.list(v) {
        for &u in g.neighbors(v) {
            if u < v {
                let cu = partial.get(u).expect("smaller ids are colored");
                if matchings.blocks(u, cu, v, c) {
                    continue 'colors;
                }
            }
        }
        partial.set(v, c);
        if backtrack(g, lists, matchings, partial, v + 1) {
            return true;
        }
    }
    // No need to clear the slot: it is overwritten before the next read.
    false
}

/// Walks every transversal of the lists in lexicographic order (vertex 0
/// most significant) and returns the first one that verifies, checking each
/// candidate with [`verify_coloring`]. Same contract as
/// [`solve_transversal`], reached by a different route; used as its oracle.
pub fn brute_force_transversal(
    g: &Graph,
    lists: &ListAssignment,
    matchings: &MatchingAssignment,
    guard: &SearchGuard,
) -> Result<Option<Coloring>, SolverError> {
    validate_instance(g, lists, matchings)?;
    product_search(g, lists, guard, |f| {
        verify_coloring(g, lists, matchings, f).is_empty()
    })
}

/// Exhaustive proper list coloring: first coloring in lexicographic order
/// with `f(u)` in `L(u)` everywhere and `f(u) != f(v)` on every edge.
pub fn direct_list_color(
    g: &Graph,
    lists: &ListAssignment,
    guard: &SearchGuard,
) -> Result<Option<Coloring>, SolverError> {
    lists.validate_for(g)?;
    product_search(g, lists, guard, |f| {
        g.edges().iter().all(|&(u, v)| f.get(u) != f.get(v))
    })
}

/// Exhaustive signed coloring over `N_k`: first assignment in lexicographic
/// order with `f(u) != sign(uv) * f(v)` on every edge.
pub fn direct_signed_color(
    sg: &SignedGraph,
    k: usize,
    guard: &SearchGuard,
) -> Result<Option<Coloring>, SolverError> {
    let colors = nk(k)?;
    let lists = ListAssignment::uniform(sg.graph(), &colors);
    product_search(sg.graph(), &lists, guard, |f| {
        sg.graph().edges().iter().all(|&(u, v)| {
            let (cu, cv) = (f.get(u).unwrap(), f.get(v).unwrap());
            cu != (sg.sign(u, v) as i32) * cv
        })
    })
}

/// Odometer over the product of the lists, vertex 0 slowest. Calls `accept`
/// on every complete assignment and returns the first accepted one.
fn product_search(
    g: &Graph,
    lists: &ListAssignment,
    guard: &SearchGuard,
    accept: impl Fn(&Coloring) -> bool,
) -> Result<Option<Coloring>, SolverError> {
    let n = g.vertex_count();
    let space = lists
        .lists()
        .iter()
        .map(|l| l.len() as u128)
        .product::<u128>();
    if space > guard.max_product as u128 {
        return Err(SolverError::GuardExceeded {
            space,
            limit: guard.max_product,
        });
    }
    if n == 0 {
        let empty = Coloring::new(0);
        return Ok(accept(&empty).then_some(empty));
    }
    let menus: Vec<Vec<i32>> = lists
        .lists()
        .iter()
        .map(|l| l.iter().copied().collect())
        .collect();
    let mut digits = vec![0usize; n];
    loop {
        let candidate =
            Coloring::from_pairs(n, digits.iter().enumerate().map(|(v, &i)| (v, menus[v][i])))
                .expect("digits index valid menus");
        if accept(&candidate) {
            return Ok(Some(candidate));
        }
        // Advance the least significant digit (largest vertex id).
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < menus[pos].len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}
