//! List assignments, matching assignments, cover graphs, and coloring
//! verification.
//!
//! A DP-coloring instance over a host graph pairs a color list with every
//! vertex and a partial matching between the endpoint lists with every edge.
//! A coloring picks one list color per vertex and must avoid every matched
//! pair. The module also provides the two classical specializations as
//! instance builders: identity matchings (plain list coloring) and signed
//! instances over the symmetric color set `N_k`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::de::Error as _;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{parse_edge_lines, Graph, ParseError};
use crate::rng::SplitMix64;

/// Instance-level validation errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("k must be at least 1, got {k}")]
    InvalidK { k: usize },
    #[error("vertex {vertex} has an empty color list")]
    EmptyList { vertex: usize },
    #[error("list assignment covers {actual} vertices, host has {expected}")]
    ListCountMismatch { expected: usize, actual: usize },
    #[error("matching entry for {u}-{v}, which is not a host edge")]
    UnknownEdge { u: usize, v: usize },
    #[error("host edge {u}-{v} has no matching entry")]
    MissingEdge { u: usize, v: usize },
    #[error("edge {u}-{v}: color {color} is not in the list of vertex {vertex}")]
    ColorNotInList {
        u: usize,
        v: usize,
        vertex: usize,
        color: i32,
    },
    #[error("edge {u}-{v}: pairs are not a partial matching (color {color} repeats)")]
    NotAMatching { u: usize, v: usize, color: i32 },
    #[error("vertex {vertex}: twist map is not a bijection on its list")]
    NotABijection { vertex: usize },
    #[error("edge {u}-{v} has no sign")]
    MissingSign { u: usize, v: usize },
    #[error("coloring covers {actual} vertices, host has {expected}")]
    ColoringCountMismatch { expected: usize, actual: usize },
}

/// Per-vertex finite color sets.
///
/// Serializes as a JSON object mapping the vertex id (as a decimal string)
/// to the sorted array of its colors; deserialization requires the keys to
/// be exactly `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<i32>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<i32>>) -> ListAssignment {
        ListAssignment { lists }
    }

    /// Every vertex of `g` gets the list `{1..t}`.
    pub fn full(g: &Graph, t: usize) -> ListAssignment {
        let list: BTreeSet<i32> = (1..=t as i32).collect();
        ListAssignment {
            lists: vec![list; g.vertex_count()],
        }
    }

    /// Every vertex of `g` gets a copy of `colors`.
    pub fn uniform(g: &Graph, colors: &BTreeSet<i32>) -> ListAssignment {
        ListAssignment {
            lists: vec![colors.clone(); g.vertex_count()],
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: usize) -> &BTreeSet<i32> {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[BTreeSet<i32>] {
        &self.lists
    }

    pub fn min_list_size(&self) -> usize {
        self.lists.iter().map(|l| l.len()).min().unwrap_or(0)
    }

    /// Checks that the assignment covers `g` with nonempty lists.
    pub fn validate_for(&self, g: &Graph) -> Result<(), InstanceError> {
        if self.lists.len() != g.vertex_count() {
            return Err(InstanceError::ListCountMismatch {
                expected: g.vertex_count(),
                actual: self.lists.len(),
            });
        }
        for (vertex, list) in self.lists.iter().enumerate() {
            if list.is_empty() {
                return Err(InstanceError::EmptyList { vertex });
            }
        }
        Ok(())
    }
}

impl Serialize for ListAssignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.lists.len()))?;
        for (v, list) in self.lists.iter().enumerate() {
            map.serialize_entry(&v.to_string(), &list.iter().collect::<Vec<_>>())?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for ListAssignment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<ListAssignment, D::Error> {
        let raw: BTreeMap<String, Vec<i32>> = BTreeMap::deserialize(deserializer)?;
        let mut lists = vec![None; raw.len()];
        for (key, colors) in raw {
            let v: usize = key
                .parse()
                .map_err(|_| D::Error::custom(format!("bad vertex key `{key}`")))?;
            if v >= lists.len() {
                return Err(D::Error::custom(format!(
                    "vertex keys must be exactly 0..{}, found {v}",
                    lists.len()
                )));
            }
            lists[v] = Some(colors.into_iter().collect::<BTreeSet<i32>>());
        }
        let lists: Vec<BTreeSet<i32>> = lists
            .into_iter()
            .enumerate()
            .map(|(v, l)| l.ok_or_else(|| D::Error::custom(format!("missing list for vertex {v}"))))
            .collect::<Result<_, _>>()?;
        Ok(ListAssignment { lists })
    }
}

/// Per-edge partial matchings between endpoint lists.
///
/// Pairs are stored against the canonical edge orientation `u < v`: a pair
/// `(a, b)` always reads "color `a` at `u` corresponds to color `b` at `v`".
/// Every host edge has an entry, possibly empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingAssignment {
    by_edge: BTreeMap<(usize, usize), BTreeSet<(i32, i32)>>,
}

impl MatchingAssignment {
    /// An entry with no pairs for every edge of `g`.
    pub fn empty(g: &Graph) -> MatchingAssignment {
        MatchingAssignment {
            by_edge: g.edges().iter().map(|&e| (e, BTreeSet::new())).collect(),
        }
    }

    /// Identity matchings: each edge pairs `(c, c)` for every color in the
    /// intersection of the endpoint lists. DP-coloring under identity
    /// matchings is exactly list coloring.
    pub fn identity(g: &Graph, lists: &ListAssignment) -> MatchingAssignment {
        let by_edge = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let pairs = lists
                    .list(u)
                    .intersection(lists.list(v))
                    .map(|&c| (c, c))
                    .collect();
                ((u, v), pairs)
            })
            .collect();
        MatchingAssignment { by_edge }
    }

    /// A uniformly random maximum matching per edge, drawn from the seeded
    /// generator in [`crate::rng`]. Each edge derives an independent stream
    /// keyed by its endpoints, so output depends only on the seed and the
    /// instance, never on iteration or thread order.
    pub fn random(g: &Graph, lists: &ListAssignment, seed: u64) -> MatchingAssignment {
        let by_edge = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let mut rng = SplitMix64::derive(seed, &[u as u64, v as u64]);
                let a: Vec<i32> = lists.list(u).iter().copied().collect();
                let b: Vec<i32> = lists.list(v).iter().copied().collect();
                let pairs: BTreeSet<(i32, i32)> = if a.len() <= b.len() {
                    let mut pool = b.clone();
                    rng.shuffle(&mut pool);
                    a.iter().zip(pool).map(|(&x, y)| (x, y)).collect()
                } else {
                    let mut pool = a.clone();
                    rng.shuffle(&mut pool);
                    pool.into_iter().zip(b).collect()
                };
                ((u, v), pairs)
            })
            .collect();
        MatchingAssignment { by_edge }
    }

    pub fn from_entries(
        entries: BTreeMap<(usize, usize), BTreeSet<(i32, i32)>>,
    ) -> MatchingAssignment {
        MatchingAssignment { by_edge: entries }
    }

    pub fn edge_count(&self) -> usize {
        self.by_edge.len()
    }

    /// Pairs on the canonical edge `(u, v)` with `u < v`, if present.
    pub fn pairs(&self, u: usize, v: usize) -> Option<&BTreeSet<(i32, i32)>> {
        self.by_edge.get(&(u.min(v), u.max(v)))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BTreeSet<(i32, i32)>)> {
        self.by_edge.iter()
    }

    /// Total number of matched pairs across all edges.
    pub fn pair_count(&self) -> usize {
        self.by_edge.values().map(|p| p.len()).sum()
    }

    /// Whether coloring `u` with `cu` and `v` with `cv` hits a matched pair
    /// of the edge `{u, v}`. Vertices may be given in either order.
    pub fn blocks(&self, u: usize, cu: i32, v: usize, cv: i32) -> bool {
        let (key, pair) = if u < v {
            ((u, v), (cu, cv))
        } else {
            ((v, u), (cv, cu))
        };
        self.by_edge
            .get(&key)
            .is_some_and(|pairs| pairs.contains(&pair))
    }

    /// The color at `to` matched with color `c` at `from` across the edge
    /// `{from, to}`, if any. At most one exists in a partial matching.
    pub fn partner_into(&self, from: usize, c: i32, to: usize) -> Option<i32> {
        if from < to {
            self.by_edge
                .get(&(from, to))?
                .iter()
                .find(|&&(a, _)| a == c)
                .map(|&(_, b)| b)
        } else {
            self.by_edge
                .get(&(to, from))?
                .iter()
                .find(|&&(_, b)| b == c)
                .map(|&(a, _)| a)
        }
    }

    /// Checks the full invariant set against a host and list assignment:
    /// entries exactly cover the host edges, every pair draws from the
    /// endpoint lists, and each entry is a partial matching.
    pub fn validate_for(&self, g: &Graph, lists: &ListAssignment) -> Result<(), InstanceError> {
        for &(u, v) in self.by_edge.keys() {
            if !g.has_edge(u, v) {
                return Err(InstanceError::UnknownEdge { u, v });
            }
        }
        for &(u, v) in g.edges() {
            let pairs = self
                .by_edge
                .get(&(u, v))
                .ok_or(InstanceError::MissingEdge { u, v })?;
            let mut firsts = BTreeSet::new();
            let mut seconds = BTreeSet::new();
            for &(a, b) in pairs {
                if !lists.list(u).contains(&a) {
                    return Err(InstanceError::ColorNotInList {
                        u,
                        v,
                        vertex: u,
                        color: a,
                    });
                }
                if !lists.list(v).contains(&b) {
                    return Err(InstanceError::ColorNotInList {
                        u,
                        v,
                        vertex: v,
                        color: b,
                    });
                }
                if !firsts.insert(a) {
                    return Err(InstanceError::NotAMatching { u, v, color: a });
                }
                if !seconds.insert(b) {
                    return Err(InstanceError::NotAMatching { u, v, color: b });
                }
            }
        }
        Ok(())
    }
}

impl Serialize for MatchingAssignment {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Entry<'a> {
            u: usize,
            v: usize,
            pairs: &'a BTreeSet<(i32, i32)>,
        }
        let mut seq = serializer.serialize_seq(Some(self.by_edge.len()))?;
        for (&(u, v), pairs) in &self.by_edge {
            seq.serialize_element(&Entry { u, v, pairs })?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for MatchingAssignment {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<MatchingAssignment, D::Error> {
        #[derive(Deserialize)]
        struct Entry {
            u: usize,
            v: usize,
            pairs: Vec<(i32, i32)>,
        }
        let entries = Vec::<Entry>::deserialize(deserializer)?;
        let mut by_edge = BTreeMap::new();
        for e in entries {
            if e.u >= e.v {
                return Err(D::Error::custom(format!(
                    "matching entry must have u < v, found {}-{}",
                    e.u, e.v
                )));
            }
            if by_edge
                .insert((e.u, e.v), e.pairs.into_iter().collect::<BTreeSet<_>>())
                .is_some()
            {
                return Err(D::Error::custom(format!(
                    "duplicate matching entry for edge {}-{}",
                    e.u, e.v
                )));
            }
        }
        Ok(MatchingAssignment { by_edge })
    }
}

/// Validates a complete instance: lists cover the host, matchings cover the
/// edges and draw from the lists.
pub fn validate_instance(
    g: &Graph,
    lists: &ListAssignment,
    matchings: &MatchingAssignment,
) -> Result<(), InstanceError> {
    lists.validate_for(g)?;
    matchings.validate_for(g, lists)
}

/// A (possibly partial) choice of one color per vertex.
///
/// Serializes as a JSON object mapping assigned vertex ids (decimal strings)
/// to colors; unassigned vertices are absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    slots: Vec<Option<i32>>,
}

impl Coloring {
    pub fn new(n: usize) -> Coloring {
        Coloring {
            slots: vec![None; n],
        }
    }

    /// Builds a coloring on `n` vertices from (vertex, color) pairs.
    pub fn from_pairs(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, i32)>,
    ) -> Result<Coloring, InstanceError> {
        let mut coloring = Coloring::new(n);
        for (v, c) in pairs {
            if v >= n {
                return Err(InstanceError::ColoringCountMismatch {
                    expected: n,
                    actual: v + 1,
                });
            }
            coloring.slots[v] = Some(c);
        }
        Ok(coloring)
    }

    pub fn vertex_count(&self) -> usize {
        self.slots.len()
    }

    pub fn get(&self, v: usize) -> Option<i32> {
        self.slots.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: usize, c: i32) {
        self.slots[v] = Some(c);
    }

    pub fn is_total(&self) -> bool {
        self.slots.iter().all(|s| s.is_some())
    }

    /// Assigned (vertex, color) pairs in vertex order.
    pub fn assigned(&self) -> impl Iterator<Item = (usize, i32)> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(v, s)| s.map(|c| (v, c)))
    }
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let assigned: Vec<(usize, i32)> = self.assigned().collect();
        let mut map = serializer.serialize_map(Some(assigned.len()))?;
        for (v, c) in assigned {
            map.serialize_entry(&v.to_string(), &c)?;
        }
        map.end()
    }
}

/// A host graph with a `+1`/`-1` sign on every edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedGraph {
    graph: Graph,
    signs: BTreeMap<(usize, usize), i8>,
}

impl SignedGraph {
    pub fn new(
        graph: Graph,
        signs: BTreeMap<(usize, usize), i8>,
    ) -> Result<SignedGraph, InstanceError> {
        for (&(u, v), &s) in &signs {
            if u >= v || !graph.has_edge(u, v) {
                return Err(InstanceError::UnknownEdge { u, v });
            }
            if s != 1 && s != -1 {
                return Err(InstanceError::MissingSign { u, v });
            }
        }
        for &(u, v) in graph.edges() {
            if !signs.contains_key(&(u, v)) {
                return Err(InstanceError::MissingSign { u, v });
            }
        }
        Ok(SignedGraph { graph, signs })
    }

    /// Parses the signed edge-list format: like the plain format but each
    /// edge line reads `u v s` with `s` one of `+1`, `-1`.
    pub fn parse(text: &str) -> Result<SignedGraph, ParseError> {
        let (n, records) = parse_edge_lines(text, true)?;
        let pairs: Vec<(usize, usize)> = records.iter().map(|&(u, v, _, _)| (u, v)).collect();
        let graph = Graph::new(n, &pairs).expect("line scan already validated the edge list");
        let signs = records.iter().map(|&(u, v, s, _)| ((u, v), s)).collect();
        Ok(SignedGraph { graph, signs })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Sign of the edge `{u, v}` (either endpoint order).
    pub fn sign(&self, u: usize, v: usize) -> i8 {
        self.signs[&(u.min(v), u.max(v))]
    }
}

/// The symmetric color set `N_k`: `{0, ±1, .., ±r}` for odd `k = 2r + 1`,
/// `{±1, .., ±r}` for even `k = 2r`. Always has exactly `k` colors.
pub fn nk(k: usize) -> Result<BTreeSet<i32>, InstanceError> {
    if k < 1 {
        return Err(InstanceError::InvalidK { k });
    }
    let r = (k / 2) as i32;
    let mut colors = BTreeSet::new();
    if k % 2 == 1 {
        colors.insert(0);
    }
    for i in 1..=r {
        colors.insert(i);
        colors.insert(-i);
    }
    Ok(colors)
}

/// Expresses signed `k`-coloring of `sg` as a DP-coloring instance: every
/// list is `N_k`; positive edges pair `(i, i)`, negative edges pair
/// `(i, -i)`. A coloring avoids all pairs exactly when `f(u) != sign * f(v)`
/// on every edge.
pub fn signed_instance(
    sg: &SignedGraph,
    k: usize,
) -> Result<(ListAssignment, MatchingAssignment), InstanceError> {
    let colors = nk(k)?;
    let lists = ListAssignment::uniform(sg.graph(), &colors);
    let by_edge = sg
        .graph()
        .edges()
        .iter()
        .map(|&(u, v)| {
            let s = sg.sign(u, v) as i32;
            let pairs = colors.iter().map(|&i| (i, s * i)).collect();
            ((u, v), pairs)
        })
        .collect();
    Ok((lists, MatchingAssignment::from_entries(by_edge)))
}

/// Applies a per-vertex color bijection to an instance: lists map through
/// `pi`, and each pair `(a, b)` on edge `{u, v}` becomes
/// `(pi[u](a), pi[v](b))`. Solvability is preserved, witness-for-witness.
pub fn twist(
    g: &Graph,
    lists: &ListAssignment,
    matchings: &MatchingAssignment,
    pi: &[BTreeMap<i32, i32>],
) -> Result<(ListAssignment, MatchingAssignment), InstanceError> {
    lists.validate_for(g)?;
    if pi.len() != g.vertex_count() {
        return Err(InstanceError::ListCountMismatch {
            expected: g.vertex_count(),
            actual: pi.len(),
        });
    }
    let mut new_lists = Vec::with_capacity(pi.len());
    for (vertex, list) in lists.lists().iter().enumerate() {
        let mapped: BTreeSet<i32> = list
            .iter()
            .map(|c| {
                pi[vertex]
                    .get(c)
                    .copied()
                    .ok_or(InstanceError::NotABijection { vertex })
            })
            .collect::<Result<_, _>>()?;
        if mapped.len() != list.len() {
            return Err(InstanceError::NotABijection { vertex });
        }
        new_lists.push(mapped);
    }
    let mut by_edge = BTreeMap::new();
    for (&(u, v), pairs) in matchings.entries() {
        let mapped = pairs
            .iter()
            .map(|&(a, b)| {
                let a2 = pi[u]
                    .get(&a)
                    .copied()
                    .ok_or(InstanceError::NotABijection { vertex: u })?;
                let b2 = pi[v]
                    .get(&b)
                    .copied()
                    .ok_or(InstanceError::NotABijection { vertex: v })?;
                Ok((a2, b2))
            })
            .collect::<Result<BTreeSet<_>, InstanceError>>()?;
        by_edge.insert((u, v), mapped);
    }
    Ok((
        ListAssignment::new(new_lists),
        MatchingAssignment::from_entries(by_edge),
    ))
}

/// The cover graph of an instance: one vertex `(u, c)` per list color, a
/// clique on every fiber `{u} x L(u)`, and the matched pairs as cross edges
/// between fibers of adjacent vertices. Nothing else.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverGraph {
    vertices: Vec<(usize, i32)>,
    index: BTreeMap<(usize, i32), usize>,
    edges: BTreeSet<(usize, usize)>,
    fiber_edge_count: usize,
    cross_edge_count: usize,
}

impl CoverGraph {
    /// Materializes the cover. Fails when the instance is invalid, in
    /// particular when a matching references a color absent from a list.
    pub fn build(
        g: &Graph,
        lists: &ListAssignment,
        matchings: &MatchingAssignment,
    ) -> Result<CoverGraph, InstanceError> {
        validate_instance(g, lists, matchings)?;
        let mut vertices = Vec::new();
        let mut index = BTreeMap::new();
        for v in g.vertices() {
            for &c in lists.list(v) {
                index.insert((v, c), vertices.len());
                vertices.push((v, c));
            }
        }
        let mut edges = BTreeSet::new();
        let mut fiber_edge_count = 0;
        for v in g.vertices() {
            let fiber: Vec<usize> = lists.list(v).iter().map(|&c| index[&(v, c)]).collect();
            for i in 0..fiber.len() {
                for j in (i + 1)..fiber.len() {
                    edges.insert((fiber[i].min(fiber[j]), fiber[i].max(fiber[j])));
                    fiber_edge_count += 1;
                }
            }
        }
        let mut cross_edge_count = 0;
        for (&(u, v), pairs) in matchings.entries() {
            for &(a, b) in pairs {
                let i = index[&(u, a)];
                let j = index[&(v, b)];
                edges.insert((i.min(j), i.max(j)));
                cross_edge_count += 1;
            }
        }
        Ok(CoverGraph {
            vertices,
            index,
            edges,
            fiber_edge_count,
            cross_edge_count,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn fiber_edge_count(&self) -> usize {
        self.fiber_edge_count
    }

    pub fn cross_edge_count(&self) -> usize {
        self.cross_edge_count
    }

    pub fn vertices(&self) -> &[(usize, i32)] {
        &self.vertices
    }

    pub fn has_edge(&self, a: (usize, i32), b: (usize, i32)) -> bool {
        match (self.index.get(&a), self.index.get(&b)) {
            (Some(&i), Some(&j)) => self.edges.contains(&(i.min(j), i.max(j))),
            _ => false,
        }
    }

    /// Whether the given cover vertices form an independent set.
    pub fn is_independent(&self, picks: &[(usize, i32)]) -> bool {
        for (i, &a) in picks.iter().enumerate() {
            for &b in &picks[i + 1..] {
                if a == b || self.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }
}

/// One defect of a proposed coloring.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// The coloring does not even range over the host's vertex set.
    SizeMismatch {
        expected: usize,
        actual: usize,
    },
    UncoloredVertex {
        vertex: usize,
    },
    ColorNotInList {
        vertex: usize,
        color: i32,
    },
    /// The edge `{u, v}` carries the matched pair `(cu, cv)`.
    MatchedEdge {
        u: usize,
        v: usize,
        cu: i32,
        cv: i32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::SizeMismatch { expected, actual } => {
                write!(f, "coloring covers {actual} vertices, host has {expected}")
            }
            Violation::UncoloredVertex { vertex } => write!(f, "uncolored vertex {vertex}"),
            Violation::ColorNotInList { vertex, color } => {
                write!(f, "vertex {vertex}: color {color} is not in its list")
            }
            Violation::MatchedEdge { u, v, cu, cv } => {
                write!(f, "edge {u}-{v}: pair ({cu}, {cv}) is matched")
            }
        }
    }
}

/// Checks a coloring against an instance and reports every defect. The empty
/// report means `f` is a valid DP-coloring: total, within lists, and avoiding
/// every matched pair. Never aborts.
pub fn verify_coloring(
    g: &Graph,
    lists: &ListAssignment,
    matchings: &MatchingAssignment,
    f: &Coloring,
) -> Vec<Violation> {
    let mut violations = Vec::new();
    if f.vertex_count() != g.vertex_count() {
        violations.push(Violation::SizeMismatch {
            expected: g.vertex_count(),
            actual: f.vertex_count(),
        });
        return violations;
    }
    for v in g.vertices() {
        match f.get(v) {
            None => violations.push(Violation::UncoloredVertex { vertex: v }),
            Some(c) => {
                if v < lists.vertex_count() && !lists.list(v).contains(&c) {
                    violations.push(Violation::ColorNotInList {
                        vertex: v,
                        color: c,
                    });
                }
            }
        }
    }
    for &(u, v) in g.edges() {
        if let (Some(cu), Some(cv)) = (f.get(u), f.get(v)) {
            if matchings.blocks(u, cu, v, cv) {
                violations.push(Violation::MatchedEdge { u, v, cu, cv });
            }
        }
    }
    violations
}
