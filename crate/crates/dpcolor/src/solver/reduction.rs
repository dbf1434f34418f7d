//! Structure-driven coloring: degeneracy greedy, gadget reduction, replay.
//!
//! [`reduce`] repeatedly removes a vertex of degree at most 3 (smallest id
//! first) or, when none exists, the six vertices of a gadget found by
//! [`Graph::find_f53`]. On a planar host without 4-cycles one of the two
//! always applies, so the trace ends with an empty remainder; anything else
//! gets reported as a [`StuckRemainder`] certificate. [`color_planar_c4free`]
//! replays a complete trace in reverse: removed-last is colored first, each
//! low-degree vertex takes the smallest color surviving in its residual
//! list, and each gadget is colored by [`color_gadget`], whose first choice
//! at `v2` is the smallest color that keeps two options open at `v1`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::cover::{validate_instance, Coloring, ListAssignment, MatchingAssignment};
use crate::graph::{F53Witness, Graph, VertexRemap};
use crate::solver::SolverError;

/// One removal performed by [`reduce`], in original vertex ids. The recorded
/// neighbor lists are the neighbors still alive at removal time, which are
/// exactly the vertices already colored when the step is replayed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReductionStep {
    /// A vertex of degree at most 3 at removal time.
    LowDegree {
        vertex: usize,
        neighbors: Vec<usize>,
    },
    /// A gadget whose six vertices had degree exactly 4 at removal time;
    /// `external` lists each gadget vertex's alive neighbors outside the
    /// gadget (one for `v2` and `v6`, two for the others).
    Gadget {
        witness: F53Witness,
        external: [Vec<usize>; 6],
    },
}

/// The nonempty graph left when neither reduction applies: either the input
/// was not a planar 4-cycle-free graph, or it is a counterexample to the
/// reduction hypotheses. Worth inspecting either way.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StuckRemainder {
    /// The remainder in its own dense ids.
    pub graph: Graph,
    /// Maps the remainder's ids back to the original host (new id -> old id).
    pub original_ids: Vec<usize>,
}

/// A full reduction run: the steps in order, the id remap produced by each
/// removal, and the remainder if the run got stuck.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    /// Remap applied by step `i`, from ids before the step to ids after.
    pub remaps: Vec<VertexRemap>,
    pub remainder: Option<StuckRemainder>,
}

impl ReductionTrace {
    /// Whether the reduction consumed the whole graph.
    pub fn is_complete(&self) -> bool {
        self.remainder.is_none()
    }

    /// Replays the removals against `g` and checks every recorded fact:
    /// steps touch only alive vertices, degrees and neighbor lists match,
    /// gadgets are valid induced occurrences at their time, the remap chain
    /// composes, and the run ends empty or exactly at the remainder.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        if self.steps.len() != self.remaps.len() {
            return Err(format!(
                "{} steps but {} remaps",
                self.steps.len(),
                self.remaps.len()
            ));
        }
        let mut alive: BTreeSet<usize> = g.vertices().collect();
        let mut cur_to_orig: Vec<usize> = g.vertices().collect();
        let alive_neighbors = |alive: &BTreeSet<usize>, v: usize| -> Vec<usize> {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|w| alive.contains(w))
                .collect()
        };
        for (step, remap) in self.steps.iter().zip(&self.remaps) {
            let removed: Vec<usize> = match step {
                ReductionStep::LowDegree { vertex, neighbors } => {
                    if !alive.contains(vertex) {
                        return Err(format!("low-degree step on dead vertex {vertex}"));
                    }
                    let expected = alive_neighbors(&alive, *vertex);
                    if expected != *neighbors {
                        return Err(format!(
                            "vertex {vertex}: recorded neighbors {neighbors:?}, alive {expected:?}"
                        ));
                    }
                    if neighbors.len() > 3 {
                        return Err(format!(
                            "vertex {vertex} had degree {} at removal",
                            neighbors.len()
                        ));
                    }
                    vec![*vertex]
                }
                ReductionStep::Gadget { witness, external } => {
                    let inside: BTreeSet<usize> = witness.vertices.iter().copied().collect();
                    if inside.len() != 6 {
                        return Err("gadget step repeats a vertex".to_string());
                    }
                    for (slot, &v) in witness.vertices.iter().enumerate() {
                        if !alive.contains(&v) {
                            return Err(format!("gadget step on dead vertex {v}"));
                        }
                        let nbrs = alive_neighbors(&alive, v);
                        if nbrs.len() != 4 {
                            return Err(format!(
                                "gadget vertex {v} had degree {} at removal",
                                nbrs.len()
                            ));
                        }
                        let ext: Vec<usize> = nbrs
                            .iter()
                            .copied()
                            .filter(|w| !inside.contains(w))
                            .collect();
                        if ext != external[slot] {
                            return Err(format!(
                                "gadget vertex {v}: recorded external {:?}, alive {ext:?}",
                                external[slot]
                            ));
                        }
                        let required = if slot == 1 || slot == 5 { 1 } else { 2 };
                        if ext.len() != required {
                            return Err(format!(
                                "gadget vertex {v}: {} external neighbors, expected {required}",
                                ext.len()
                            ));
                        }
                    }
                    for (u, v) in witness.edges() {
                        if !g.has_edge(u, v) {
                            return Err(format!("gadget edge {u}-{v} missing from host"));
                        }
                    }
                    // Induced at removal time: all six are alive, so host
                    // adjacency decides.
                    let pattern: BTreeSet<(usize, usize)> = witness
                        .edges()
                        .iter()
                        .map(|&(u, v)| (u.min(v), u.max(v)))
                        .collect();
                    for i in 0..6 {
                        for j in (i + 1)..6 {
                            let (a, b) = (witness.vertices[i], witness.vertices[j]);
                            if !pattern.contains(&(a.min(b), a.max(b))) && g.has_edge(a, b) {
                                return Err(format!("gadget not induced: extra edge {a}-{b}"));
                            }
                        }
                    }
                    witness.vertices.to_vec()
                }
            };
            for v in &removed {
                alive.remove(v);
            }
            // The remap must renumber exactly the survivors, in order.
            let mapped: Vec<usize> = remap
                .new_to_old
                .iter()
                .map(|&cur| cur_to_orig[cur])
                .collect();
            let expected: Vec<usize> = alive.iter().copied().collect();
            if mapped != expected {
                return Err("remap chain does not match the alive set".to_string());
            }
            cur_to_orig = mapped;
        }
        match &self.remainder {
            None => {
                if !alive.is_empty() {
                    return Err(format!("trace ends with {} vertices alive", alive.len()));
                }
            }
            Some(rem) => {
                let expected: Vec<usize> = alive.iter().copied().collect();
                if rem.original_ids != expected {
                    return Err("remainder ids do not match the alive set".to_string());
                }
                if rem.graph.vertex_count() != expected.len() {
                    return Err("remainder graph has the wrong size".to_string());
                }
            }
        }
        Ok(())
    }
}

/// Reduces `g` by repeatedly removing the smallest-id vertex of degree at
/// most 3, falling back to the first gadget occurrence when the minimum
/// degree exceeds 3. Records every removal in original ids. Never fails:
/// when neither rule applies the trace carries the remainder instead.
pub fn reduce(g: &Graph) -> ReductionTrace {
    let mut work = g.clone();
    let mut to_orig: Vec<usize> = g.vertices().collect();
    let mut steps = Vec::new();
    let mut remaps = Vec::new();
    loop {
        if work.vertex_count() == 0 {
            return ReductionTrace {
                steps,
                remaps,
                remainder: None,
            };
        }
        let low = work.vertices().find(|&v| work.degree(v) <= 3);
        let removed: BTreeSet<usize> = if let Some(v) = low {
            steps.push(ReductionStep::LowDegree {
                vertex: to_orig[v],
                neighbors: work.neighbors(v).iter().map(|&w| to_orig[w]).collect(),
            });
            [v].into_iter().collect()
        } else if let Some(witness) = work.find_f53() {
            let external = witness
                .external_neighbors(&work)
                .map(|list| list.into_iter().map(|w| to_orig[w]).collect());
            steps.push(ReductionStep::Gadget {
                witness: F53Witness {
                    vertices: witness.vertices.map(|v| to_orig[v]),
                },
                external,
            });
            witness.vertices.into_iter().collect()
        } else {
            return ReductionTrace {
                steps,
                remaps,
                remainder: Some(StuckRemainder {
                    graph: work,
                    original_ids: to_orig,
                }),
            };
        };
        let (next, remap) = work.remove_vertices(&removed);
        to_orig = remap.new_to_old.iter().map(|&v| to_orig[v]).collect();
        remaps.push(remap);
        work = next;
    }
}

/// The residual list of an uncolored vertex: its list minus every color
/// matched, across some edge, to the color of an already-colored neighbor.
pub fn residual_list(
    g: &Graph,
    lists: &ListAssignment,
    matchings: &MatchingAssignment,
    partial: &Coloring,
    v: usize,
) -> BTreeSet<i32> {
    debug_assert!(partial.get(v).is_none(), "vertex {v} is already colored");
    let mut residual = lists.list(v).clone();
    for &u in g.neighbors(v) {
        if let Some(cu) = partial.get(u) {
            if let Some(blocked) = matchings.partner_into(u, cu, v) {
                residual.remove(&blocked);
            }
        }
    }
    residual
}

/// Colors the six gadget vertices from their residual lists, avoiding every
/// matched pair on the seven gadget edges.
///
/// `v2` (requiring at least 3 residual colors, like `v6`; the other four
/// require 2) is colored first with the smallest color whose match removes
/// nothing essential from `v1`, leaving it two options; then `v3, v4, v5,
/// v6, v1` greedily take their smallest surviving color. With the stated
/// list sizes this always succeeds.
pub fn color_gadget(
    witness: &F53Witness,
    residuals: &[BTreeSet<i32>; 6],
    matchings: &MatchingAssignment,
) -> Result<[(usize, i32); 6], SolverError> {
    for (slot, required) in [(0, 2), (1, 3), (2, 2), (3, 2), (4, 2), (5, 3)] {
        if residuals[slot].len() < required {
            return Err(SolverError::GadgetListTooSmall {
                slot,
                size: residuals[slot].len(),
                required,
            });
        }
    }
    let ids = witness.vertices;
    // Slot adjacency of the gadget: the 6-cycle v1..v6 plus the chord v2-v6.
    const SLOT_EDGES: [(usize, usize); 7] = F53Witness::EDGE_PATTERN;
    let mut chosen: [Option<i32>; 6] = [None; 6];

    // v2 first: smallest color keeping at least two options at v1.
    let v2_color = residuals[1]
        .iter()
        .copied()
        .find(|&c| {
            let lost = matchings
                .partner_into(ids[1], c, ids[0])
                .is_some_and(|b| residuals[0].contains(&b));
            residuals[0].len() - usize::from(lost) >= 2
        })
        .expect("a valid partial matching always leaves such a color");
    chosen[1] = Some(v2_color);

    for slot in [2, 3, 4, 5, 0] {
        let mut available = residuals[slot].clone();
        for &(a, b) in &SLOT_EDGES {
            let other = if a == slot {
                b
            } else if b == slot {
                a
            } else {
                continue;
            };
            if let Some(c_other) = chosen[other] {
                if let Some(blocked) = matchings.partner_into(ids[other], c_other, ids[slot]) {
                    available.remove(&blocked);
                }
            }
        }
        let c = available
            .into_iter()
            .next()
            .expect("residual sizes guarantee a surviving color");
        chosen[slot] = Some(c);
    }
    let mut out = [(0usize, 0i32); 6];
    for slot in 0..6 {
        out[slot] = (ids[slot], chosen[slot].unwrap());
    }
    Ok(out)
}

/// Greedy DP-coloring along the degeneracy ordering: vertices are colored in
/// reverse peeling order, each taking the smallest color not matched to an
/// already-colored neighbor. Requires every list to exceed the degeneracy.
pub fn greedy_degenerate_color(
    g: &Graph,
    lists: &ListAssignment,
    matchings: &MatchingAssignment,
) -> Result<Coloring, SolverError> {
    validate_instance(g, lists, matchings)?;
    let report = g.degeneracy();
    let required = report.degeneracy + 1;
    for v in g.vertices() {
        if lists.list(v).len() < required {
            return Err(SolverError::ListTooSmall {
                vertex: v,
                size: lists.list(v).len(),
                required,
            });
        }
    }
    let mut coloring = Coloring::new(g.vertex_count());
    for &v in report.ordering.iter().rev() {
        let residual = residual_list(g, lists, matchings, &coloring, v);
        let c = residual
            .into_iter()
            .next()
            .expect("list exceeds the number of colored neighbors");
        coloring.set(v, c);
    }
    Ok(coloring)
}

/// Constructive DP-coloring of a planar graph without 4-cycles from lists of
/// size at least 4: reduce, then replay the trace backwards, coloring
/// low-degree vertices greedily and gadgets via [`color_gadget`].
///
/// The caller asserts planarity; it is never tested. A 4-cycle is rejected
/// up front with a witness, and a reduction that gets stuck (possible only
/// off the intended input class) is propagated with its remainder.
pub fn color_planar_c4free(
    g: &Graph,
    lists: &ListAssignment,
    matchings: &MatchingAssignment,
) -> Result<Coloring, SolverError> {
    if let Some(witness) = g.find_cycle(4) {
        return Err(SolverError::ContainsC4(witness));
    }
    validate_instance(g, lists, matchings)?;
    for v in g.vertices() {
        if lists.list(v).len() < 4 {
            return Err(SolverError::ListTooSmall {
                vertex: v,
                size: lists.list(v).len(),
                required: 4,
            });
        }
    }
    let trace = reduce(g);
    if let Some(remainder) = trace.remainder {
        return Err(SolverError::Stuck(remainder));
    }
    let mut coloring = Coloring::new(g.vertex_count());
    for step in trace.steps.iter().rev() {
        match step {
            ReductionStep::LowDegree { vertex, .. } => {
                let residual = residual_list(g, lists, matchings, &coloring, *vertex);
                let c = residual
                    .into_iter()
                    .next()
                    .expect("4 list colors minus at most 3 matched neighbors");
                coloring.set(*vertex, c);
            }
            ReductionStep::Gadget { witness, .. } => {
                let residuals: [BTreeSet<i32>; 6] = witness
                    .vertices
                    .map(|v| residual_list(g, lists, matchings, &coloring, v));
                for (v, c) in color_gadget(witness, &residuals, matchings)? {
                    coloring.set(v, c);
                }
            }
        }
    }
    Ok(coloring)
}
