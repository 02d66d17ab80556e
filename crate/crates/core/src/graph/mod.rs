//! Finite directed multigraphs: reachability, hereditary subsets, cycles,
//! forked vertices and connectivity.

mod cycles;
mod parse;
mod vertex_set;

use std::collections::{HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

pub use cycles::Cycle;
pub use vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexId(usize);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeId(usize);

impl EdgeId {
    pub fn new(index: usize) -> Self {
        EdgeId(index)
    }

    pub fn index(self) -> usize {
        self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Edge {
    name: String,
    src: VertexId,
    dst: VertexId,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: duplicate name `{name}`")]
    DuplicateName { line: usize, name: String },
    #[error("line {line}: undeclared vertex `{name}`")]
    UndeclaredVertex { line: usize, name: String },
    #[error("invalid name `{0}` (expected [A-Za-z0-9_]+)")]
    InvalidName(String),
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("too many vertices: at most {MAX_VERTICES} are supported")]
    TooManyVertices,
}

/// A finite directed graph with named vertices and edges. Parallel edges and
/// loops are allowed. Iteration follows declaration order.
#[derive(Clone)]
pub struct DirectedGraph {
    vertex_names: Vec<String>,
    edges: Vec<Edge>,
    by_name: HashMap<String, NameRef>,
    out_edges: Vec<Vec<EdgeId>>,
    /// `reach[v]` is the set of vertices reachable from `v`, including `v`.
    reach: Vec<VertexSet>,
    cycles: Vec<Cycle>,
}

#[derive(Clone, Copy, Debug)]
enum NameRef {
    Vertex(VertexId),
    Edge(EdgeId),
}

/// Incremental construction of a [`DirectedGraph`].
#[derive(Default, Debug, Clone)]
pub struct GraphBuilder {
    vertex_names: Vec<String>,
    edges: Vec<Edge>,
    by_name: HashMap<String, NameRef>,
}

pub(crate) fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str) -> Result<VertexId, GraphError> {
        if !valid_name(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.by_name.contains_key(name) {
            return Err(GraphError::Duplicate(name.to_string()));
        }
        if self.vertex_names.len() == MAX_VERTICES {
            return Err(GraphError::TooManyVertices);
        }
        let id = VertexId(self.vertex_names.len());
        self.vertex_names.push(name.to_string());
        self.by_name.insert(name.to_string(), NameRef::Vertex(id));
        Ok(id)
    }

    pub fn edge(&mut self, name: &str, src: &str, dst: &str) -> Result<EdgeId, GraphError> {
        if !valid_name(name) {
            return Err(GraphError::InvalidName(name.to_string()));
        }
        if self.by_name.contains_key(name) {
            return Err(GraphError::Duplicate(name.to_string()));
        }
        let lookup = |n: &str| match self.by_name.get(n) {
            Some(NameRef::Vertex(v)) => Ok(*v),
            _ => Err(GraphError::UnknownVertex(n.to_string())),
        };
        let src = lookup(src)?;
        let dst = lookup(dst)?;
        let id = EdgeId(self.edges.len());
        self.edges.push(Edge {
            name: name.to_string(),
            src,
            dst,
        });
        self.by_name.insert(name.to_string(), NameRef::Edge(id));
        Ok(id)
    }

    pub fn build(self) -> DirectedGraph {
        let n = self.vertex_names.len();
        let mut out_edges = vec![Vec::new(); n];
        for (i, e) in self.edges.iter().enumerate() {
            out_edges[e.src.0].push(EdgeId(i));
        }
        let mut g = DirectedGraph {
            vertex_names: self.vertex_names,
            edges: self.edges,
            by_name: self.by_name,
            out_edges,
            reach: Vec::new(),
            cycles: Vec::new(),
        };
        g.reach = (0..n).map(|v| g.bfs_from(VertexId(v))).collect();
        g.cycles = cycles::enumerate(&g);
        g
    }
}

impl DirectedGraph {
    /// Parses the line-oriented graph format (`vertex NAME`, `edge NAME SRC DST`,
    /// `# comment`, blank lines).
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        parse::parse_graph(text)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.vertex_count())
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edges[e.0].name
    }

    pub fn source(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].src
    }

    pub fn range(&self, e: EdgeId) -> VertexId {
        self.edges[e.0].dst
    }

    /// `s⁻¹(v)` in declaration order.
    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v.0]
    }

    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_edges[v.0].len()
    }

    pub fn vertex(&self, name: &str) -> Result<VertexId, GraphError> {
        match self.by_name.get(name) {
            Some(NameRef::Vertex(v)) => Ok(*v),
            _ => Err(GraphError::UnknownVertex(name.to_string())),
        }
    }

    pub fn edge(&self, name: &str) -> Result<EdgeId, GraphError> {
        match self.by_name.get(name) {
            Some(NameRef::Edge(e)) => Ok(*e),
            _ => Err(GraphError::UnknownEdge(name.to_string())),
        }
    }

    pub fn vertex_set<'a, I>(&self, names: I) -> Result<VertexSet, GraphError>
    where
        I: IntoIterator<Item = &'a str>,
    {
        names.into_iter().map(|n| self.vertex(n)).collect()
    }

    /// Vertex names of `set`, sorted ascending.
    pub fn sorted_names(&self, set: VertexSet) -> Vec<&str> {
        let mut names: Vec<&str> = set.iter().map(|v| self.vertex_name(v)).collect();
        names.sort_unstable();
        names
    }

    fn bfs_from(&self, start: VertexId) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &e in self.out_edges(v) {
                let w = self.range(e);
                if seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen
    }

    /// Whether there is a path (possibly trivial) from `from` to `to`.
    pub fn reaches(&self, from: VertexId, to: VertexId) -> bool {
        self.reach[from.0].contains(to)
    }

    pub fn reachable_from(&self, v: VertexId) -> VertexSet {
        self.reach[v.0]
    }

    /// Number of edges out of `v` whose range lies outside `h`.
    pub fn index_relative(&self, v: VertexId, h: VertexSet) -> usize {
        self.out_edges(v)
            .iter()
            .filter(|&&e| !h.contains(self.range(e)))
            .count()
    }

    pub fn is_hereditary(&self, h: VertexSet) -> bool {
        self.edges
            .iter()
            .all(|e| !h.contains(e.src) || h.contains(e.dst))
    }

    /// All hereditary subsets, ordered by size and then by their sorted name lists.
    pub fn hereditary_subsets(&self) -> Vec<VertexSet> {
        // Every hereditary set is a union of forward closures; start from the
        // closures and grow by union until nothing new appears.
        let mut found: std::collections::BTreeSet<VertexSet> =
            [VertexSet::EMPTY].into_iter().collect();
        let mut frontier: Vec<VertexSet> = vec![VertexSet::EMPTY];
        while let Some(s) = frontier.pop() {
            for v in self.vertices() {
                if s.contains(v) {
                    continue;
                }
                let t = s.union(self.reach[v.0]);
                if found.insert(t) {
                    frontier.push(t);
                }
            }
        }
        let mut out: Vec<VertexSet> = found.into_iter().collect();
        self.sort_sets(&mut out);
        out
    }

    /// Sorts vertex sets by `(size, sorted name list)`.
    pub fn sort_sets(&self, sets: &mut [VertexSet]) {
        sets.sort_by_cached_key(|s| {
            let names: Vec<String> = self
                .sorted_names(*s)
                .into_iter()
                .map(String::from)
                .collect();
            (s.len(), names)
        });
    }

    /// Cycles in canonical rotation, one per rotation class.
    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn is_acyclic(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Cycles `c` with `u(c) ⊆ set`.
    pub fn cycles_within(&self, set: VertexSet) -> impl Iterator<Item = (usize, &Cycle)> + '_ {
        self.cycles
            .iter()
            .enumerate()
            .filter(move |(_, c)| c.sources().is_subset(set))
    }

    pub fn cycle_by_name(&self, name: &str) -> Option<usize> {
        self.cycles.iter().position(|c| c.name(self) == name)
    }

    /// Out-edges `e` of `v` such that no other out-edge of `v` has a range
    /// reaching `r(e)`.
    pub fn unshadowed_edges(&self, v: VertexId) -> Vec<EdgeId> {
        let outs = self.out_edges(v);
        outs.iter()
            .copied()
            .filter(|&e| {
                outs.iter()
                    .all(|&g| g == e || !self.reaches(self.range(g), self.range(e)))
            })
            .collect()
    }

    /// Vertices admitting two distinct unshadowed out-edges.
    pub fn forked_vertices(&self) -> VertexSet {
        self.vertices()
            .filter(|&v| self.unshadowed_edges(v).len() >= 2)
            .collect()
    }

    pub fn connectivity(&self) -> ConnectivityReport {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in &self.edges {
            let a = find(&mut parent, e.src.0);
            let b = find(&mut parent, e.dst.0);
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut components: Vec<VertexSet> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for v in self.vertices() {
            let root = find(&mut parent, v.0);
            let i = *slot.entry(root).or_insert_with(|| {
                components.push(VertexSet::EMPTY);
                components.len() - 1
            });
            components[i].insert(v);
        }
        let mut unilateral = true;
        let mut strong = true;
        for a in self.vertices() {
            for b in self.vertices() {
                let ab = self.reaches(a, b);
                let ba = self.reaches(b, a);
                unilateral &= ab || ba;
                strong &= ab && ba;
            }
        }
        ConnectivityReport {
            is_weakly_connected: components.len() <= 1,
            weak_components: components,
            is_unilaterally_connected: unilateral,
            is_strongly_connected: strong,
        }
    }

    /// The subgraph spanned by `set` together with every edge whose endpoints
    /// both lie in `set`. Declaration order is kept.
    pub fn induced_subgraph(&self, set: VertexSet) -> DirectedGraph {
        let mut b = GraphBuilder::new();
        for v in set.iter() {
            b.vertex(self.vertex_name(v)).expect("names are unique");
        }
        for e in &self.edges {
            if set.contains(e.src) && set.contains(e.dst) {
                b.edge(&e.name, self.vertex_name(e.src), self.vertex_name(e.dst))
                    .expect("endpoints were added");
            }
        }
        b.build()
    }
}

/// Weak components and connectivity flags of a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityReport {
    /// Ordered by first declared member.
    pub weak_components: Vec<VertexSet>,
    pub is_weakly_connected: bool,
    pub is_unilaterally_connected: bool,
    pub is_strongly_connected: bool,
}

impl fmt::Display for DirectedGraph {
    /// Writes the graph back in the text format accepted by [`DirectedGraph::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for name in &self.vertex_names {
            writeln!(f, "vertex {name}")?;
        }
        for e in &self.edges {
            writeln!(
                f,
                "edge {} {} {}",
                e.name, self.vertex_names[e.src.0], self.vertex_names[e.dst.0]
            )?;
        }
        Ok(())
    }
}

impl fmt::Debug for DirectedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DirectedGraph")
            .field("vertices", &self.vertex_names)
            .field(
                "edges",
                &self
                    .edges
                    .iter()
                    .map(|e| (&e.name, e.src.0, e.dst.0))
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}
