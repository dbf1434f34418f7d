//! Cross-module invariants, each checked against an independent oracle or
//! from first principles.

mod common;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use dpcolor::rng::SplitMix64;
use dpcolor::{
    brute_force_transversal, direct_list_color, dp_chromatic, greedy_degenerate_color, nk,
    signed_instance, solve_transversal, twist, verify_coloring, Coloring, CoverGraph, Family,
    Graph, ListAssignment, MatchingAssignment, SearchGuard,
};

// ---------------------------------------------------------------------------
// Cycle search vs. subset-permutation oracle
// ---------------------------------------------------------------------------

/// Oracle: a k-cycle exists iff some k-subset admits a cyclic ordering whose
/// consecutive pairs are all edges. Subsets are enumerated outright, then
/// orderings with the smallest element fixed first.
fn cycle_exists_oracle(g: &Graph, k: usize) -> bool {
    fn orderings(g: &Graph, subset: &[usize], path: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if path.len() == subset.len() {
            return g.has_edge(*path.last().unwrap(), path[0]);
        }
        let tail = *path.last().unwrap();
        for (i, &v) in subset.iter().enumerate() {
            if !used[i] && g.has_edge(tail, v) {
                used[i] = true;
                path.push(v);
                if orderings(g, subset, path, used) {
                    return true;
                }
                path.pop();
                used[i] = false;
            }
        }
        false
    }
    fn subsets(g: &Graph, k: usize, start: usize, subset: &mut Vec<usize>) -> bool {
        if subset.len() == k {
            let mut used = vec![false; k];
            used[0] = true;
            let mut path = vec![subset[0]];
            return orderings(g, subset, &mut path, &mut used);
        }
        for v in start..g.vertex_count() {
            subset.push(v);
            if subsets(g, k, v + 1, subset) {
                return true;
            }
            subset.pop();
        }
        false
    }
    k <= g.vertex_count() && subsets(g, k, 0, &mut Vec::new())
}

#[test]
fn cycle_search_agrees_with_subset_oracle() {
    let mut rng = SplitMix64::new(0xc1c1e);
    let mut graphs: Vec<Graph> = (0..40)
        .map(|_| common::random_graph(&mut rng, 1, 8))
        .collect();
    for _ in 0..6 {
        graphs.push(common::random_graph(&mut rng, 9, 10));
    }
    graphs.push(Graph::generate(Family::Cycle, 5).unwrap());
    graphs.push(Graph::generate(Family::Cycle, 6).unwrap());
    graphs.push(Graph::generate(Family::Complete, 4).unwrap());
    graphs.push(Graph::generate(Family::Star, 7).unwrap());
    for g in &graphs {
        for k in 3..=6 {
            let found = g.find_cycle(k);
            assert_eq!(
                found.is_some(),
                cycle_exists_oracle(g, k),
                "disagreement on k = {k}, graph {g:?}"
            );
            if let Some(w) = found {
                assert_eq!(w.len(), k);
                w.check(g).unwrap();
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Gadget pattern vs. subset enumeration, and the 7-internal-edges property
// ---------------------------------------------------------------------------

/// Oracle: every 6-subset (as a sorted array) that matches the gadget edge
/// pattern under some labeling, found by raw subset enumeration over
/// adjacency bitmasks. No induced check, so extra internal edges would pass.
fn f53_sets_oracle(g: &Graph) -> BTreeSet<[usize; 6]> {
    assert!(g.vertex_count() <= 32);
    let masks: Vec<u32> = (0..g.vertex_count())
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | (1 << w)))
        .collect();
    let pattern = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 5)];
    let mut found = BTreeSet::new();
    let mut subset = Vec::with_capacity(6);
    enumerate_subsets(g.vertex_count(), 6, 0, &mut subset, &mut |s: &[usize]| {
        if s.iter().any(|&v| masks[v].count_ones() != 4) {
            return;
        }
        let set_mask: u32 = s.iter().fold(0, |acc, &v| acc | (1 << v));
        let internal: u32 = s.iter().map(|&v| (masks[v] & set_mask).count_ones()).sum();
        if internal / 2 < 7 {
            return;
        }
        let mut label = Vec::with_capacity(6);
        let mut used = [false; 6];
        if matches_pattern(&masks, s, &pattern, &mut label, &mut used) {
            let mut key = [0usize; 6];
            key.copy_from_slice(s);
            found.insert(key);
        }
    });
    found
}

fn enumerate_subsets(
    n: usize,
    k: usize,
    start: usize,
    subset: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if subset.len() == k {
        visit(subset);
        return;
    }
    for v in start..n {
        subset.push(v);
        enumerate_subsets(n, k, v + 1, subset, visit);
        subset.pop();
    }
}

fn matches_pattern(
    masks: &[u32],
    subset: &[usize],
    pattern: &[(usize, usize)],
    label: &mut Vec<usize>,
    used: &mut [bool; 6],
) -> bool {
    if label.len() == 6 {
        return pattern
            .iter()
            .all(|&(i, j)| masks[label[i]] & (1 << label[j]) != 0);
    }
    for i in 0..6 {
        if !used[i] {
            used[i] = true;
            label.push(subset[i]);
            if matches_pattern(masks, subset, pattern, label, used) {
                return true;
            }
            label.pop();
            used[i] = false;
        }
    }
    false
}

#[test]
fn f53_search_agrees_with_subset_oracle_on_c4_free_hosts() {
    for g in [
        Graph::generate(Family::DodecahedralLine, 0).unwrap(),
        Graph::generate(Family::Dodecahedral, 0).unwrap(),
        Graph::generate(Family::Cycle, 6).unwrap(),
    ] {
        assert!(g.find_cycle(4).is_none());
        let oracle_sets = f53_sets_oracle(&g);
        let search_sets: BTreeSet<[usize; 6]> = g
            .find_f53_all()
            .into_iter()
            .map(|w| {
                let mut key = w.vertices;
                key.sort_unstable();
                key
            })
            .collect();
        assert_eq!(search_sets, oracle_sets);
        // In a 4-cycle-free host every pattern occurrence is automatically
        // induced: each of the 8 possible extra chords would close a C_4.
        for key in &oracle_sets {
            let internal = key
                .iter()
                .enumerate()
                .flat_map(|(i, &u)| key[i + 1..].iter().map(move |&v| (u, v)))
                .filter(|&(u, v)| g.has_edge(u, v))
                .count();
            assert_eq!(internal, 7, "pattern set {key:?} is not induced");
        }
    }
}

// ---------------------------------------------------------------------------
// Degeneracy vs. threshold-peeling oracle
// ---------------------------------------------------------------------------

/// Oracle: a graph is d-degenerate iff repeatedly deleting vertices of
/// current degree <= d (in any order) empties it.
fn is_d_degenerate(g: &Graph, d: usize) -> bool {
    let mut degree: Vec<usize> = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
    let mut alive: BTreeSet<usize> = g.vertices().collect();
    loop {
        let next = alive.iter().copied().find(|&v| degree[v] <= d);
        match next {
            None => return alive.is_empty(),
            Some(v) => {
                alive.remove(&v);
                for &w in g.neighbors(v) {
                    if alive.contains(&w) {
                        degree[w] -= 1;
                    }
                }
            }
        }
    }
}

#[test]
fn degeneracy_is_the_least_peelable_threshold() {
    let mut rng = SplitMix64::new(0xde9e);
    let mut graphs: Vec<Graph> = (0..30)
        .map(|_| common::random_graph(&mut rng, 1, 9))
        .collect();
    graphs.push(Graph::generate(Family::DodecahedralLine, 0).unwrap());
    graphs.push(Graph::generate(Family::Dodecahedral, 0).unwrap());
    for g in &graphs {
        let d = g.degeneracy().degeneracy;
        assert!(is_d_degenerate(g, d));
        if d > 0 {
            assert!(!is_d_degenerate(g, d - 1));
        }
    }
}

// ---------------------------------------------------------------------------
// Verification against the cover-graph definition
// ---------------------------------------------------------------------------

/// Every transversal of the lists, by odometer.
fn all_transversals(lists: &ListAssignment) -> Vec<Coloring> {
    let n = lists.vertex_count();
    let menus: Vec<Vec<i32>> = lists
        .lists()
        .iter()
        .map(|l| l.iter().copied().collect())
        .collect();
    let mut out = Vec::new();
    let mut digits = vec![0usize; n];
    'all: loop {
        out.push(
            Coloring::from_pairs(n, digits.iter().enumerate().map(|(v, &i)| (v, menus[v][i])))
                .unwrap(),
        );
        let mut pos = n;
        loop {
            if pos == 0 {
                break 'all;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < menus[pos].len() {
                break;
            }
            digits[pos] = 0;
        }
    }
    out
}

#[test]
fn verification_matches_independence_in_the_cover() {
    let mut rng = SplitMix64::new(0xc0fe);
    for _ in 0..40 {
        let (g, lists, matchings) = common::random_instance(&mut rng, 1, 6, 3);
        let cover = CoverGraph::build(&g, &lists, &matchings).unwrap();
        for f in all_transversals(&lists) {
            let picks: Vec<(usize, i32)> = f.assigned().collect();
            let valid = verify_coloring(&g, &lists, &matchings, &f).is_empty();
            let independent = cover.is_independent(&picks) && picks.len() == g.vertex_count();
            assert_eq!(valid, independent);
        }
    }
}

#[test]
fn identity_instances_verify_exactly_the_proper_list_colorings() {
    let mut rng = SplitMix64::new(0x11d);
    for _ in 0..40 {
        let g = common::random_graph(&mut rng, 1, 5);
        let lists = common::random_lists(&mut rng, &g, 2);
        let matchings = MatchingAssignment::identity(&g, &lists);
        for f in all_transversals(&lists) {
            let dp_valid = verify_coloring(&g, &lists, &matchings, &f).is_empty();
            let proper = g.edges().iter().all(|&(u, v)| f.get(u) != f.get(v));
            assert_eq!(dp_valid, proper);
        }
    }
}

#[test]
fn signed_instances_verify_exactly_the_signed_colorings() {
    let mut rng = SplitMix64::new(0x519);
    let mut hosts: Vec<Graph> = (0..12)
        .map(|_| common::random_graph(&mut rng, 1, 4))
        .collect();
    hosts.push(Graph::generate(Family::Cycle, 5).unwrap());
    hosts.push(Graph::generate(Family::Star, 5).unwrap());
    for g in &hosts {
        for sg in common::all_signings(g) {
            for k in 1..=4usize {
                let (lists, matchings) = signed_instance(&sg, k).unwrap();
                assert_eq!(lists.list(0), &nk(k).unwrap());
                for f in all_transversals(&lists) {
                    let dp_valid = verify_coloring(g, &lists, &matchings, &f).is_empty();
                    let signed_valid = g.edges().iter().all(|&(u, v)| {
                        f.get(u).unwrap() != (sg.sign(u, v) as i32) * f.get(v).unwrap()
                    });
                    assert_eq!(dp_valid, signed_valid);
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Normalized enumeration vs. the full perfect-matching family
// ---------------------------------------------------------------------------

fn all_permutations(t: usize) -> Vec<Vec<i32>> {
    fn rec(t: usize, cur: &mut Vec<i32>, used: &mut Vec<bool>, out: &mut Vec<Vec<i32>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for c in 1..=t {
            if !used[c] {
                used[c] = true;
                cur.push(c as i32);
                rec(t, cur, used, out);
                cur.pop();
                used[c] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(t, &mut Vec::new(), &mut vec![false; t + 1], &mut out);
    out
}

/// Whether every assignment in the FULL family (lists `{1..t}`, an arbitrary
/// perfect matching on every edge) is solvable, by raw enumeration.
fn full_family_all_solvable(g: &Graph, t: usize) -> bool {
    let lists = ListAssignment::full(g, t);
    let perms = all_permutations(t);
    let m = g.edge_count();
    let mut digits = vec![0usize; m];
    loop {
        let entries: BTreeMap<(usize, usize), BTreeSet<(i32, i32)>> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(i, &e)| {
                let perm = &perms[digits[i]];
                (
                    e,
                    (1..=t as i32).map(|c| (c, perm[c as usize - 1])).collect(),
                )
            })
            .collect();
        let matchings = MatchingAssignment::from_entries(entries);
        if solve_transversal(g, &lists, &matchings).unwrap().is_none() {
            return false;
        }
        let mut pos = m;
        loop {
            if pos == 0 {
                return true;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < perms.len() {
                break;
            }
            digits[pos] = 0;
        }
    }
}

#[test]
fn normalized_family_agrees_with_full_family_per_level() {
    for (g, t_max) in [
        (Graph::generate(Family::Cycle, 4).unwrap(), 3),
        (Graph::generate(Family::Path, 3).unwrap(), 2),
    ] {
        let cert = dp_chromatic(&g, t_max, &SearchGuard::default()).unwrap();
        for level in &cert.levels {
            let normalized_pass = level.failing.is_none();
            let full_pass = full_family_all_solvable(&g, level.t);
            assert_eq!(
                normalized_pass, full_pass,
                "level t = {} disagrees on {:?}",
                level.t, g
            );
        }
        assert_eq!(cert.value, Some(t_max));
    }
}

/// Exhaustive-small completeness check: on every labeled graph with up to 3
/// vertices, full lists for t in {1, 2}, and every perfect-matching
/// assignment, solver and brute-force oracle return the same verdict.
#[test]
fn solver_matches_brute_force_exhaustively_on_tiny_instances() {
    let guard = SearchGuard::default();
    for n in 0..=3usize {
        for g in common::all_graphs_on(n) {
            for t in 1..=2usize {
                let lists = ListAssignment::full(&g, t);
                let perms = all_permutations(t);
                let m = g.edge_count();
                let mut digits = vec![0usize; m];
                'family: loop {
                    let entries: BTreeMap<(usize, usize), BTreeSet<(i32, i32)>> = g
                        .edges()
                        .iter()
                        .enumerate()
                        .map(|(i, &e)| {
                            let perm = &perms[digits[i]];
                            (
                                e,
                                (1..=t as i32).map(|c| (c, perm[c as usize - 1])).collect(),
                            )
                        })
                        .collect();
                    let matchings = MatchingAssignment::from_entries(entries);
                    let fast = solve_transversal(&g, &lists, &matchings).unwrap();
                    let slow = brute_force_transversal(&g, &lists, &matchings, &guard).unwrap();
                    assert_eq!(fast.is_some(), slow.is_some(), "n = {n}, t = {t}");
                    if let Some(f) = fast {
                        assert!(verify_coloring(&g, &lists, &matchings, &f).is_empty());
                    }
                    let mut pos = m;
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
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Greedy coloring realizes the degeneracy bound
// ---------------------------------------------------------------------------

#[test]
fn greedy_succeeds_with_degeneracy_plus_one_colors() {
    let mut rng = SplitMix64::new(0x93ee);
    for _ in 0..50 {
        let g = common::random_graph(&mut rng, 1, 7);
        let t = g.degeneracy().degeneracy + 1;
        let lists = ListAssignment::full(&g, t);
        let matchings = MatchingAssignment::random(&g, &lists, rng.next_u64());
        let f = greedy_degenerate_color(&g, &lists, &matchings).unwrap();
        assert!(verify_coloring(&g, &lists, &matchings, &f).is_empty());
    }
}

// ---------------------------------------------------------------------------
// Proptest invariants
// ---------------------------------------------------------------------------

proptest! {
    /// Cover sizes follow the closed forms: one vertex per list color, a
    /// clique per fiber, one cross edge per matched pair.
    #[test]
    fn cover_size_formulas_hold(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let (g, lists, matchings) = common::random_instance(&mut rng, 1, 8, 4);
        let cover = CoverGraph::build(&g, &lists, &matchings).unwrap();
        let expected_vertices: usize = lists.lists().iter().map(|l| l.len()).sum();
        let expected_fiber: usize = lists.lists().iter().map(|l| l.len() * (l.len() - 1) / 2).sum();
        let expected_cross: usize = matchings.pair_count();
        prop_assert_eq!(cover.vertex_count(), expected_vertices);
        prop_assert_eq!(cover.fiber_edge_count(), expected_fiber);
        prop_assert_eq!(cover.cross_edge_count(), expected_cross);
        prop_assert_eq!(cover.edge_count(), expected_fiber + expected_cross);
    }

    /// Twisting by random per-vertex bijections preserves solvability, and
    /// witnesses transport through the bijections in both directions.
    #[test]
    fn twist_preserves_solvability_and_witnesses(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let (g, lists, matchings) = common::random_instance(&mut rng, 1, 6, 3);
        let pi: Vec<BTreeMap<i32, i32>> = lists
            .lists()
            .iter()
            .map(|list| {
                let from: Vec<i32> = list.iter().copied().collect();
                let mut to: Vec<i32> = from.iter().map(|c| c + 10).collect();
                rng.shuffle(&mut to);
                from.into_iter().zip(to).collect()
            })
            .collect();
        let (tl, tm) = twist(&g, &lists, &matchings, &pi).unwrap();
        let original = solve_transversal(&g, &lists, &matchings).unwrap();
        let twisted = solve_transversal(&g, &tl, &tm).unwrap();
        prop_assert_eq!(original.is_some(), twisted.is_some());
        // Brute-force both sides as well: the equivalence must not depend on
        // the backtracker.
        let guard = SearchGuard::default();
        let brute_original = brute_force_transversal(&g, &lists, &matchings, &guard).unwrap();
        let brute_twisted = brute_force_transversal(&g, &tl, &tm, &guard).unwrap();
        prop_assert_eq!(brute_original.is_some(), original.is_some());
        prop_assert_eq!(brute_twisted.is_some(), twisted.is_some());
        if let Some(f) = original {
            let mapped = Coloring::from_pairs(
                g.vertex_count(),
                f.assigned().map(|(v, c)| (v, pi[v][&c])),
            ).unwrap();
            prop_assert!(verify_coloring(&g, &tl, &tm, &mapped).is_empty());
        }
        if let Some(f) = twisted {
            let inverse: Vec<BTreeMap<i32, i32>> =
                pi.iter().map(|m| m.iter().map(|(&a, &b)| (b, a)).collect()).collect();
            let mapped = Coloring::from_pairs(
                g.vertex_count(),
                f.assigned().map(|(v, c)| (v, inverse[v][&c])),
            ).unwrap();
            prop_assert!(verify_coloring(&g, &lists, &matchings, &mapped).is_empty());
        }
    }

    /// Growing a list or deleting a matched pair never invalidates an
    /// existing coloring.
    #[test]
    fn monotonicity_preserves_witnesses(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let (g, lists, matchings) = common::random_instance(&mut rng, 1, 6, 3);
        if let Some(f) = solve_transversal(&g, &lists, &matchings).unwrap() {
            // Add a fresh color to one list.
            let v = rng.next_below(g.vertex_count() as u64) as usize;
            let mut grown = lists.lists().to_vec();
            let fresh = grown[v].iter().max().unwrap() + 1;
            grown[v].insert(fresh);
            let grown = ListAssignment::new(grown);
            prop_assert!(verify_coloring(&g, &grown, &matchings, &f).is_empty());

            // Delete one matched pair, if any exist.
            let nonempty: Vec<(usize, usize)> = matchings
                .entries()
                .filter(|(_, p)| !p.is_empty())
                .map(|(&e, _)| e)
                .collect();
            if !nonempty.is_empty() {
                let &(u, w) = common_choose(&mut rng, &nonempty);
                let mut entries: BTreeMap<(usize, usize), BTreeSet<(i32, i32)>> = matchings
                    .entries()
                    .map(|(&e, p)| (e, p.clone()))
                    .collect();
                let pairs = entries.get_mut(&(u, w)).unwrap();
                let victim = *pairs.iter().next().unwrap();
                pairs.remove(&victim);
                let thinned = MatchingAssignment::from_entries(entries);
                prop_assert!(verify_coloring(&g, &lists, &thinned, &f).is_empty());
            }
        }
    }

    /// Solver and brute-force oracle agree on satisfiability.
    #[test]
    fn solver_agrees_with_brute_force(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let (g, lists, matchings) = common::random_instance(&mut rng, 1, 5, 3);
        let fast = solve_transversal(&g, &lists, &matchings).unwrap();
        let slow = brute_force_transversal(&g, &lists, &matchings, &SearchGuard::default()).unwrap();
        prop_assert_eq!(fast.is_some(), slow.is_some());
        if let Some(f) = fast {
            prop_assert!(verify_coloring(&g, &lists, &matchings, &f).is_empty());
        }
    }

    /// Identity-matching solvability coincides with plain list colorability.
    #[test]
    fn identity_solvability_is_list_colorability(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let g = common::random_graph(&mut rng, 1, 5);
        let lists = common::random_lists(&mut rng, &g, 3);
        let matchings = MatchingAssignment::identity(&g, &lists);
        let via_dp = solve_transversal(&g, &lists, &matchings).unwrap();
        let direct = direct_list_color(&g, &lists, &SearchGuard::default()).unwrap();
        prop_assert_eq!(via_dp.is_some(), direct.is_some());
    }

    /// External JSON formats round-trip.
    #[test]
    fn instance_json_round_trips(seed in any::<u64>()) {
        let mut rng = SplitMix64::new(seed);
        let (_, lists, matchings) = common::random_instance(&mut rng, 1, 6, 4);
        let l2: ListAssignment =
            serde_json::from_str(&serde_json::to_string(&lists).unwrap()).unwrap();
        prop_assert_eq!(l2, lists);
        let m2: MatchingAssignment =
            serde_json::from_str(&serde_json::to_string(&matchings).unwrap()).unwrap();
        prop_assert_eq!(m2, matchings);
    }
}

fn common_choose<'a, T>(rng: &mut SplitMix64, items: &'a [T]) -> &'a T {
    &items[rng.next_below(items.len() as u64) as usize]
}
