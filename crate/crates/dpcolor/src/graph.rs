//! Host-graph representation and structural searches.
//!
//! Graphs are simple and undirected with dense vertex ids `0..n`. Values are
//! immutable after construction; removals return a fresh graph plus an
//! explicit id remap. The searches here (degeneracy peeling, fixed-length
//! cycles, the six-vertex gadget) are exhaustive and deterministic: ties are
//! always broken toward smaller vertex ids so witnesses are reproducible.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Construction and generation errors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("unknown graph family `{name}`")]
    UnknownFamily { name: String },
    #[error("family {family}: parameter {parameter} out of range (minimum {min})")]
    ParameterOutOfRange {
        family: Family,
        parameter: usize,
        min: usize,
    },
}

/// Errors from the edge-list text format, with 1-based line numbers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: self-loop {vertex}-{vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Invariants: no self-loops, no duplicate edges, symmetric adjacency, every
/// endpoint below `n`. Edges are stored canonically as `(u, v)` with `u < v`
/// in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list, validating all invariants.
    /// Endpoint order within each pair does not matter.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(edge_list.len());
        let mut seen = BTreeSet::new();
        for &(a, b) in edge_list {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge { u: e.0, v: e.1 });
            }
            edges.push(e);
        }
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Graph { n, edges, adj })
    }

    /// Parses the edge-list text format: comment lines start with `#`, the
    /// first data line is `n m`, followed by exactly `m` lines `u v`.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let (n, edges) = parse_edge_lines(text, false)?;
        let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, v, _, _)| (u, v)).collect();
        Ok(Graph::new(n, &pairs).expect("line scan already validated the edge list"))
    }

    /// Generates a member of a named family. The parameter is the vertex
    /// count for `cycle` (at least 3), `complete`, `path`, and `star` (at
    /// least 1); the dodecahedral families ignore it.
    pub fn generate(family: Family, parameter: usize) -> Result<Graph, GraphError> {
        let check_min = |min: usize| {
            if parameter < min {
                Err(GraphError::ParameterOutOfRange {
                    family,
                    parameter,
                    min,
                })
            } else {
                Ok(())
            }
        };
        match family {
            Family::Cycle => {
                check_min(3)?;
                let n = parameter;
                let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::new(n, &edges)
            }
            Family::Complete => {
                check_min(1)?;
                let n = parameter;
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in (u + 1)..n {
                        edges.push((u, v));
                    }
                }
                Graph::new(n, &edges)
            }
            Family::Path => {
                check_min(1)?;
                let n = parameter;
                let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
                Graph::new(n, &edges)
            }
            Family::Star => {
                // Star on `parameter` vertices: center 0, leaves 1..parameter.
                check_min(1)?;
                let n = parameter;
                let edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
                Graph::new(n, &edges)
            }
            Family::Dodecahedral => Ok(dodecahedron()),
            Family::DodecahedralLine => Ok(line_graph(&dodecahedron())),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Neighbors of `u` in ascending order.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Renders the graph in the edge-list text format accepted by
    /// [`Graph::parse`].
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    /// Number of connected components.
    pub fn component_count(&self) -> usize {
        let mut seen = vec![false; self.n];
        let mut components = 0;
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            components += 1;
            let mut stack = vec![s];
            seen[s] = true;
            while let Some(v) = stack.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        components
    }

    /// Minimum-degree peeling. Among minimum-degree vertices the smallest id
    /// is removed first, so the ordering is deterministic. The reported
    /// degeneracy is the largest degree seen at removal time, and the
    /// ordering witnesses the bound: every vertex has at most `degeneracy`
    /// neighbors later in the ordering.
    pub fn degeneracy(&self) -> DegeneracyReport {
        let mut degree: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; self.n];
        let mut ordering = Vec::with_capacity(self.n);
        let mut degeneracy = 0;
        for _ in 0..self.n {
            let mut pick = usize::MAX;
            let mut best = usize::MAX;
            for v in 0..self.n {
                if alive[v] && degree[v] < best {
                    best = degree[v];
                    pick = v;
                }
            }
            degeneracy = degeneracy.max(best);
            alive[pick] = false;
            ordering.push(pick);
            for &w in self.neighbors(pick) {
                if alive[w] {
                    degree[w] -= 1;
                }
            }
        }
        DegeneracyReport {
            degeneracy,
            ordering,
        }
    }

    /// Searches for a simple cycle of length exactly `k`. Exhaustive: returns
    /// `None` only when no such cycle exists. The witness is the first one in
    /// the deterministic order (smallest starting vertex, then lexicographic
    /// DFS over larger-id extensions).
    ///
    /// Panics if `k < 3`.
    pub fn find_cycle(&self, k: usize) -> Option<CycleWitness> {
        assert!(k >= 3, "cycles have length at least 3");
        if k > self.n {
            return None;
        }
        let mut path = Vec::with_capacity(k);
        let mut on_path = vec![false; self.n];
        for start in 0..self.n {
            path.push(start);
            on_path[start] = true;
            if self.extend_cycle(start, k, &mut path, &mut on_path) {
                return Some(CycleWitness {
                    vertices: path.clone(),
                });
            }
            on_path[start] = false;
            path.pop();
        }
        None
    }

    fn extend_cycle(
        &self,
        start: usize,
        k: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
    ) -> bool {
        if path.len() == k {
            return self.has_edge(*path.last().unwrap(), start);
        }
        let tail = *path.last().unwrap();
        for &w in self.neighbors(tail) {
            // Restricting to ids above the start vertex visits each cycle at
            // its smallest vertex only.
            if w <= start || on_path[w] {
                continue;
            }
            path.push(w);
            on_path[w] = true;
            if self.extend_cycle(start, k, path, on_path) {
                return true;
            }
            on_path[w] = false;
            path.pop();
        }
        false
    }

    /// First six-vertex gadget in deterministic order, if any: a 6-cycle
    /// `v1..v6` with chord `v2 v6`, all six vertices of host degree 4,
    /// induced (no further edge of the host joins two gadget vertices).
    pub fn find_f53(&self) -> Option<F53Witness> {
        self.search_f53(true).into_iter().next()
    }

    /// Every gadget occurrence, in the same deterministic order. Each induced
    /// occurrence is reported exactly once, labeled with `v2 < v6`.
    pub fn find_f53_all(&self) -> Vec<F53Witness> {
        self.search_f53(false)
    }

    fn search_f53(&self, first_only: bool) -> Vec<F53Witness> {
        let mut found = Vec::new();
        let deg4 = |v: usize| self.degree(v) == 4;
        // Chord edges (v2, v6) in lexicographic order; the reflection that
        // swaps v2/v6 and v3/v5 makes the v2 < v6 labeling canonical.
        for &(v2, v6) in &self.edges {
            if !deg4(v2) || !deg4(v6) {
                continue;
            }
            for &v1 in self.neighbors(v2) {
                if v1 == v6 || !deg4(v1) || !self.has_edge(v1, v6) {
                    continue;
                }
                for &v3 in self.neighbors(v2) {
                    if v3 == v1 || v3 == v6 || !deg4(v3) {
                        continue;
                    }
                    for &v4 in self.neighbors(v3) {
                        if v4 == v1 || v4 == v2 || v4 == v6 || !deg4(v4) {
                            continue;
                        }
                        for &v5 in self.neighbors(v4) {
                            if v5 == v1 || v5 == v2 || v5 == v3 || v5 == v6 || !deg4(v5) {
                                continue;
                            }
                            if !self.has_edge(v5, v6) {
                                continue;
                            }
                            let witness = F53Witness {
                                vertices: [v1, v2, v3, v4, v5, v6],
                            };
                            if witness.check(self).is_ok() {
                                found.push(witness);
                                if first_only {
                                    return found;
                                }
                            }
                        }
                    }
                }
            }
        }
        found
    }

    /// Induced subgraph on the complement of `removed`, with the id remap.
    /// Surviving vertices keep their relative order and are renumbered
    /// densely from 0.
    pub fn remove_vertices(&self, removed: &BTreeSet<usize>) -> (Graph, VertexRemap) {
        let mut old_to_new = vec![None; self.n];
        let mut new_to_old = Vec::with_capacity(self.n - removed.len());
        for (old, slot) in old_to_new.iter_mut().enumerate() {
            if !removed.contains(&old) {
                *slot = Some(new_to_old.len());
                new_to_old.push(old);
            }
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if let (Some(nu), Some(nv)) = (old_to_new[u], old_to_new[v]) {
                edges.push((nu, nv));
            }
        }
        let graph = Graph::new(new_to_old.len(), &edges)
            .expect("induced subgraph of a valid graph is valid");
        (
            graph,
            VertexRemap {
                old_to_new,
                new_to_old,
            },
        )
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            edges: &'a [(usize, usize)],
        }
        Repr {
            n: self.n,
            edges: &self.edges,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Graph, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let repr = Repr::deserialize(deserializer)?;
        Graph::new(repr.n, &repr.edges).map_err(D::Error::custom)
    }
}

/// Named graph families for the generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Cycle,
    Complete,
    Path,
    Star,
    Dodecahedral,
    DodecahedralLine,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Cycle,
        Family::Complete,
        Family::Path,
        Family::Star,
        Family::Dodecahedral,
        Family::DodecahedralLine,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::Path => "path",
            Family::Star => "star",
            Family::Dodecahedral => "dodecahedral",
            Family::DodecahedralLine => "dodecahedral-line",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Family, GraphError> {
        Family::ALL
            .iter()
            .copied()
            .find(|f| f.name() == s)
            .ok_or_else(|| GraphError::UnknownFamily {
                name: s.to_string(),
            })
    }
}

/// The dodecahedral graph as the generalized Petersen graph GP(10, 2):
/// outer 10-cycle 0..9, spokes i-(10+i), inner edges (10+i)-(10+(i+2) mod 10).
fn dodecahedron() -> Graph {
    let mut edges = Vec::with_capacity(30);
    for i in 0..10 {
        edges.push((i, (i + 1) % 10));
        edges.push((i, 10 + i));
        edges.push((10 + i, 10 + (i + 2) % 10));
    }
    Graph::new(20, &edges).expect("dodecahedron edge list is valid")
}

/// Line graph: one vertex per edge of `g` (in canonical edge order), adjacent
/// when the edges share an endpoint.
fn line_graph(g: &Graph) -> Graph {
    let index_of = |e: (usize, usize)| g.edges().binary_search(&e).unwrap();
    let mut edges = Vec::new();
    for v in g.vertices() {
        let incident: Vec<usize> = g
            .neighbors(v)
            .iter()
            .map(|&w| index_of((v.min(w), v.max(w))))
            .collect();
        for i in 0..incident.len() {
            for j in (i + 1)..incident.len() {
                edges.push((incident[i], incident[j]));
            }
        }
    }
    Graph::new(g.edge_count(), &edges).expect("line graph edge list is valid")
}

/// One edge line: endpoints, sign, and the 1-based line number.
pub(crate) type EdgeRecord = (usize, usize, i8, usize);

/// Line-scan shared by the plain and signed edge-list formats. Returns the
/// vertex count and per-edge records.
pub(crate) fn parse_edge_lines(
    text: &str,
    with_sign: bool,
) -> Result<(usize, Vec<EdgeRecord>), ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<EdgeRecord> = Vec::new();
    let mut seen = BTreeSet::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let parse_int = |tok: &str| -> Result<usize, ParseError> {
            tok.parse::<usize>().map_err(|_| ParseError::Syntax {
                line,
                message: format!("expected a nonnegative integer, found `{tok}`"),
            })
        };
        match header {
            None => {
                if tokens.len() != 2 {
                    return Err(ParseError::Syntax {
                        line,
                        message: format!("expected header `n m`, found {} token(s)", tokens.len()),
                    });
                }
                header = Some((parse_int(tokens[0])?, parse_int(tokens[1])?));
            }
            Some((n, m)) => {
                if edges.len() == m {
                    return Err(ParseError::Syntax {
                        line,
                        message: format!("expected {m} edge line(s), found more"),
                    });
                }
                let expected = if with_sign { 3 } else { 2 };
                if tokens.len() != expected {
                    return Err(ParseError::Syntax {
                        line,
                        message: format!(
                            "expected an edge line with {expected} token(s), found {}",
                            tokens.len()
                        ),
                    });
                }
                let u = parse_int(tokens[0])?;
                let v = parse_int(tokens[1])?;
                let sign = if with_sign {
                    match tokens[2] {
                        "+1" | "1" => 1,
                        "-1" => -1,
                        other => {
                            return Err(ParseError::Syntax {
                                line,
                                message: format!("expected sign +1 or -1, found `{other}`"),
                            })
                        }
                    }
                } else {
                    1
                };
                if u >= n {
                    return Err(ParseError::VertexOutOfRange { line, vertex: u, n });
                }
                if v >= n {
                    return Err(ParseError::VertexOutOfRange { line, vertex: v, n });
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                let canonical = (u.min(v), u.max(v));
                if !seen.insert(canonical) {
                    return Err(ParseError::DuplicateEdge {
                        line,
                        u: canonical.0,
                        v: canonical.1,
                    });
                }
                edges.push((canonical.0, canonical.1, sign, line));
            }
        }
    }
    match header {
        None => Err(ParseError::Syntax {
            line: last_line.max(1),
            message: "missing header line `n m`".to_string(),
        }),
        Some((n, m)) => {
            if edges.len() != m {
                return Err(ParseError::Syntax {
                    line: last_line.max(1),
                    message: format!("expected {m} edge line(s), found {}", edges.len()),
                });
            }
            Ok((n, edges))
        }
    }
}

/// A cycle certificate: `k` distinct vertices, cyclically adjacent.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the witness against a host graph: distinct vertices, every
    /// consecutive pair (cyclically) an edge.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let k = self.vertices.len();
        if k < 3 {
            return Err(format!("cycle witness too short: {k} vertices"));
        }
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        if distinct.len() != k {
            return Err("cycle witness repeats a vertex".to_string());
        }
        for i in 0..k {
            let u = self.vertices[i];
            let v = self.vertices[(i + 1) % k];
            if !g.has_edge(u, v) {
                return Err(format!("cycle witness uses missing edge {u}-{v}"));
            }
        }
        Ok(())
    }
}

/// The six-vertex gadget: a 6-cycle `v1..v6` with chord `v2 v6` (equivalently
/// a 5-cycle and a triangle sharing that edge), every vertex of host degree
/// 4, and no other host edge inside the six.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct F53Witness {
    /// In gadget order `[v1, v2, v3, v4, v5, v6]`.
    pub vertices: [usize; 6],
}

impl F53Witness {
    /// The seven gadget edges as vertex pairs, in gadget labeling.
    pub const EDGE_PATTERN: [(usize, usize); 7] =
        [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (1, 5)];

    /// The seven gadget edges in host vertex ids.
    pub fn edges(&self) -> [(usize, usize); 7] {
        Self::EDGE_PATTERN.map(|(i, j)| (self.vertices[i], self.vertices[j]))
    }

    /// Host neighbors of each gadget vertex that lie outside the gadget.
    pub fn external_neighbors(&self, g: &Graph) -> [Vec<usize>; 6] {
        let inside: BTreeSet<usize> = self.vertices.iter().copied().collect();
        self.vertices.map(|v| {
            g.neighbors(v)
                .iter()
                .copied()
                .filter(|w| !inside.contains(w))
                .collect()
        })
    }

    /// Re-checks every invariant against a host graph.
    pub fn check(&self, g: &Graph) -> Result<(), String> {
        let distinct: BTreeSet<_> = self.vertices.iter().collect();
        if distinct.len() != 6 {
            return Err("gadget witness repeats a vertex".to_string());
        }
        for v in self.vertices {
            if v >= g.vertex_count() {
                return Err(format!("gadget vertex {v} out of range"));
            }
            if g.degree(v) != 4 {
                return Err(format!(
                    "gadget vertex {v} has degree {}, expected 4",
                    g.degree(v)
                ));
            }
        }
        for (u, v) in self.edges() {
            if !g.has_edge(u, v) {
                return Err(format!("gadget edge {u}-{v} missing from host"));
            }
        }
        // Induced: the remaining 8 pairs must be non-adjacent.
        let pattern: BTreeSet<(usize, usize)> = Self::EDGE_PATTERN
            .iter()
            .map(|&(i, j)| (i.min(j), i.max(j)))
            .collect();
        for i in 0..6 {
            for j in (i + 1)..6 {
                if !pattern.contains(&(i, j)) && g.has_edge(self.vertices[i], self.vertices[j]) {
                    return Err(format!(
                        "gadget is not induced: extra edge {}-{}",
                        self.vertices[i], self.vertices[j]
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Degeneracy value plus the peeling order that witnesses it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegeneracyReport {
    pub degeneracy: usize,
    /// Removal order: each vertex has at most `degeneracy` neighbors later
    /// in this ordering.
    pub ordering: Vec<usize>,
}

/// Dense renumbering produced by vertex removal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRemap {
    /// Indexed by old id; `None` for removed vertices.
    pub old_to_new: Vec<Option<usize>>,
    /// Indexed by new id.
    pub new_to_old: Vec<usize>,
}
