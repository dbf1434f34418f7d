//! Seeded instance generators shared by the integration suites.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use dpcolor::rng::SplitMix64;
use dpcolor::{Graph, ListAssignment, MatchingAssignment, SignedGraph};

/// A random graph with `min_n..=max_n` vertices, each pair an edge with
/// probability 1/2.
pub fn random_graph(rng: &mut SplitMix64, min_n: usize, max_n: usize) -> Graph {
    let n = min_n + rng.next_below((max_n - min_n + 1) as u64) as usize;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.next_u64() & 1 == 0 {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// A uniformly random labeled tree on `n` vertices (random attachment).
pub fn random_tree(rng: &mut SplitMix64, n: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        let parent = rng.next_below(v as u64) as usize;
        edges.push((parent, v));
    }
    Graph::new(n, &edges).unwrap()
}

/// Ragged lists: each vertex gets between 1 and `max_t` colors drawn from a
/// small shared pool.
pub fn random_lists(rng: &mut SplitMix64, g: &Graph, max_t: usize) -> ListAssignment {
    let pool: Vec<i32> = (1..=(max_t as i32 + 2)).collect();
    let lists = (0..g.vertex_count())
        .map(|_| {
            let size = 1 + rng.next_below(max_t as u64) as usize;
            let mut shuffled = pool.clone();
            rng.shuffle(&mut shuffled);
            shuffled.into_iter().take(size).collect::<BTreeSet<i32>>()
        })
        .collect();
    ListAssignment::new(lists)
}

/// A random instance: ragged lists plus random maximum matchings thinned to
/// partial ones (each pair kept with probability 3/4).
pub fn random_instance(
    rng: &mut SplitMix64,
    min_n: usize,
    max_n: usize,
    max_t: usize,
) -> (Graph, ListAssignment, MatchingAssignment) {
    let g = random_graph(rng, min_n, max_n);
    let lists = random_lists(rng, &g, max_t);
    let full = MatchingAssignment::random(&g, &lists, rng.next_u64());
    let mut entries: BTreeMap<(usize, usize), BTreeSet<(i32, i32)>> = BTreeMap::new();
    for (&edge, pairs) in full.entries() {
        let kept = pairs
            .iter()
            .copied()
            .filter(|_| rng.next_below(4) != 0)
            .collect();
        entries.insert(edge, kept);
    }
    (g, lists, MatchingAssignment::from_entries(entries))
}

/// Random `+1`/`-1` signs on every edge.
pub fn random_signs(rng: &mut SplitMix64, g: &Graph) -> SignedGraph {
    let signs = g
        .edges()
        .iter()
        .map(|&e| (e, if rng.next_u64() & 1 == 0 { 1i8 } else { -1i8 }))
        .collect();
    SignedGraph::new(g.clone(), signs).unwrap()
}

/// Every labeled graph on exactly `n` vertices, by edge-subset bitmask.
pub fn all_graphs_on(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    (0..(1u64 << pairs.len()))
        .map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::new(n, &edges).unwrap()
        })
        .collect()
}

/// Every sign pattern over the edges of `g`.
pub fn all_signings(g: &Graph) -> Vec<SignedGraph> {
    let m = g.edge_count();
    (0..(1u64 << m))
        .map(|mask| {
            let signs = g
                .edges()
                .iter()
                .enumerate()
                .map(|(i, &e)| (e, if mask >> i & 1 == 1 { -1i8 } else { 1i8 }))
                .collect();
            SignedGraph::new(g.clone(), signs).unwrap()
        })
        .collect()
}
