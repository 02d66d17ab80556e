//! Elements of the graph inverse semigroup in normal form `αβ*` and their
//! multiplication.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::graph::{DirectedGraph, EdgeId, VertexId};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SemigroupError {
    #[error("graph has cycles; the semigroup is infinite")]
    CyclicGraph,
    #[error("edges do not form a path")]
    NotAPath,
    #[error("paths end at different vertices")]
    RangeMismatch,
}

/// A path in a graph. A trivial path is a single vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    source: VertexId,
    range: VertexId,
    edges: Vec<EdgeId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path {
            source: v,
            range: v,
            edges: Vec::new(),
        }
    }

    pub fn from_edges(g: &DirectedGraph, edges: Vec<EdgeId>) -> Result<Self, SemigroupError> {
        let (first, last) = match (edges.first(), edges.last()) {
            (Some(&f), Some(&l)) => (f, l),
            _ => return Err(SemigroupError::NotAPath),
        };
        if edges.windows(2).any(|w| g.range(w[0]) != g.source(w[1])) {
            return Err(SemigroupError::NotAPath);
        }
        Ok(Path {
            source: g.source(first),
            range: g.range(last),
            edges,
        })
    }

    pub fn edge(g: &DirectedGraph, e: EdgeId) -> Self {
        Path {
            source: g.source(e),
            range: g.range(e),
            edges: vec![e],
        }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn range(&self) -> VertexId {
        self.range
    }

    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    // a length-0 path is a vertex, not an empty path; see `is_trivial`
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.edges.is_empty()
    }

    /// If `other = self · ξ` for some path `ξ`, returns `ξ`.
    pub fn strip_prefix_of(&self, other: &Path) -> Option<Path> {
        if self.source != other.source || !other.edges.starts_with(&self.edges) {
            return None;
        }
        Some(Path {
            source: self.range,
            range: other.range,
            edges: other.edges[self.edges.len()..].to_vec(),
        })
    }

    /// `self · next`; requires `r(self) = s(next)`.
    pub fn concat(&self, next: &Path) -> Path {
        debug_assert_eq!(self.range, next.source);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&next.edges);
        Path {
            source: self.source,
            range: next.range,
            edges,
        }
    }

    /// Vertex name for a trivial path, dot-joined edge names otherwise.
    pub fn render(&self, g: &DirectedGraph) -> String {
        if self.is_trivial() {
            g.vertex_name(self.source).to_string()
        } else {
            self.edges
                .iter()
                .map(|&e| g.edge_name(e))
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

/// Zero, or `αβ*` with `r(α) = r(β)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Element {
    Zero,
    Pair { alpha: Path, beta: Path },
}

impl Element {
    pub fn pair(alpha: Path, beta: Path) -> Result<Self, SemigroupError> {
        if alpha.range != beta.range {
            return Err(SemigroupError::RangeMismatch);
        }
        Ok(Element::Pair { alpha, beta })
    }

    pub fn vertex(v: VertexId) -> Self {
        Element::Pair {
            alpha: Path::trivial(v),
            beta: Path::trivial(v),
        }
    }

    /// The generator `e = e · r(e)*`.
    pub fn edge(g: &DirectedGraph, e: EdgeId) -> Self {
        Element::Pair {
            alpha: Path::edge(g, e),
            beta: Path::trivial(g.range(e)),
        }
    }

    /// The generator `e* = r(e) · e*`.
    pub fn ghost(g: &DirectedGraph, e: EdgeId) -> Self {
        Element::edge(g, e).inverse()
    }

    /// `αβ* ↦ βα*`.
    pub fn inverse(&self) -> Element {
        match self {
            Element::Zero => Element::Zero,
            Element::Pair { alpha, beta } => Element::Pair {
                alpha: beta.clone(),
                beta: alpha.clone(),
            },
        }
    }

    pub fn is_idempotent_form(&self) -> bool {
        match self {
            Element::Zero => true,
            Element::Pair { alpha, beta } => alpha == beta,
        }
    }

    pub fn render(&self, g: &DirectedGraph) -> String {
        match self {
            Element::Zero => "0".to_string(),
            Element::Pair { alpha, beta } => format!("{}|{}", alpha.render(g), beta.render(g)),
        }
    }

    pub fn display<'a>(&'a self, g: &'a DirectedGraph) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Element, &'a DirectedGraph);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        D(self, g)
    }
}

/// Product of two elements:
///
/// ```text
/// (αβ*)(ζη*) = (αξ)η*   if ζ = βξ
///            = α(ηξ)*   if β = ζξ
///            = 0        otherwise
/// ```
///
/// Works for any graph; only enumeration needs acyclicity.
pub fn multiply(x: &Element, y: &Element) -> Element {
    let (
        Element::Pair { alpha, beta },
        Element::Pair {
            alpha: zeta,
            beta: eta,
        },
    ) = (x, y)
    else {
        return Element::Zero;
    };
    if let Some(xi) = beta.strip_prefix_of(zeta) {
        Element::Pair {
            alpha: alpha.concat(&xi),
            beta: eta.clone(),
        }
    } else if let Some(xi) = zeta.strip_prefix_of(beta) {
        Element::Pair {
            alpha: alpha.clone(),
            beta: eta.concat(&xi),
        }
    } else {
        Element::Zero
    }
}

/// All paths of an acyclic graph, ordered by length, then edge names; trivial
/// paths follow vertex declaration order.
pub fn enumerate_paths(g: &DirectedGraph) -> Result<Vec<Path>, SemigroupError> {
    if !g.is_acyclic() {
        return Err(SemigroupError::CyclicGraph);
    }
    let mut paths: Vec<Path> = g.vertices().map(Path::trivial).collect();
    let mut frontier: Vec<Path> = g.edge_ids().map(|e| Path::edge(g, e)).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for &e in g.out_edges(p.range) {
                next.push(p.concat(&Path::edge(g, e)));
            }
        }
        paths.append(&mut frontier);
        frontier = next;
    }
    let names = |p: &Path| -> Vec<String> {
        p.edges
            .iter()
            .map(|&e| g.edge_name(e).to_string())
            .collect()
    };
    paths.sort_by_cached_key(|p| (p.len(), names(p), p.source.index()));
    Ok(paths)
}

/// The finite semigroup of an acyclic graph with its Cayley table.
#[derive(Clone, Debug)]
pub struct FiniteSemigroup {
    elements: Vec<Element>,
    table: Vec<Vec<usize>>,
    index: HashMap<Element, usize>,
}

impl FiniteSemigroup {
    pub fn new(g: &DirectedGraph) -> Result<Self, SemigroupError> {
        let elements = enumerate_elements(g)?;
        Ok(Self::from_elements(elements))
    }

    fn from_elements(elements: Vec<Element>) -> Self {
        let index: HashMap<Element, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, x)| (x, i))
            .collect();
        let table = elements
            .iter()
            .map(|x| elements.iter().map(|y| index[&multiply(x, y)]).collect())
            .collect();
        FiniteSemigroup {
            elements,
            table,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn index_of(&self, x: &Element) -> Option<usize> {
        self.index.get(x).copied()
    }

    /// Index of the product of the elements at `a` and `b`.
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn zero(&self) -> usize {
        0
    }
}

/// Number of elements of the semigroup: `1 + Σ_w (#paths ending at w)²`.
pub fn element_count(g: &DirectedGraph) -> Result<usize, SemigroupError> {
    let paths = enumerate_paths(g)?;
    let mut per_range = vec![0usize; g.vertex_count()];
    for p in &paths {
        per_range[p.range.index()] += 1;
    }
    Ok(1 + per_range.iter().map(|k| k * k).sum::<usize>())
}

/// Zero, then every `αβ*` with `r(α) = r(β)`, ordered by `|α| + |β|` and
/// then by the path order of `α` and `β`.
pub fn enumerate_elements(g: &DirectedGraph) -> Result<Vec<Element>, SemigroupError> {
    let paths = enumerate_paths(g)?;
    let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
    for (i, a) in paths.iter().enumerate() {
        for (j, b) in paths.iter().enumerate() {
            if a.range == b.range {
                pairs.push((a.len() + b.len(), i, j));
            }
        }
    }
    pairs.sort_unstable();
    let mut out = vec![Element::Zero];
    out.extend(pairs.into_iter().map(|(_, i, j)| Element::Pair {
        alpha: paths[i].clone(),
        beta: paths[j].clone(),
    }));
    Ok(out)
}

/// Zero and every `αα*`, in element order.
pub fn idempotents(g: &DirectedGraph) -> Result<Vec<Element>, SemigroupError> {
    Ok(enumerate_elements(g)?
        .into_iter()
        .filter(Element::is_idempotent_form)
        .collect())
}

/// First failing inverse-semigroup axiom found by [`check_inverse_semigroup`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    NotClosed { x: usize, y: usize },
    NotAssociative { x: usize, y: usize, z: usize },
    NotRegular { x: usize },
    IdempotentsDoNotCommute { p: usize, q: usize },
    IdempotentSetMismatch,
}

/// Exhaustive check of closure, associativity, `x x⁻¹ x = x`, and pairwise
/// commutation of idempotents. The idempotents found by squaring must be
/// exactly Zero and the `αα*`.
pub fn check_inverse_semigroup(
    g: &DirectedGraph,
) -> Result<Result<(), AxiomViolation>, SemigroupError> {
    let elements = enumerate_elements(g)?;
    let index: HashMap<&Element, usize> =
        elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let n = elements.len();
    let mut table = vec![vec![0usize; n]; n];
    for x in 0..n {
        for y in 0..n {
            match index.get(&multiply(&elements[x], &elements[y])) {
                Some(&z) => table[x][y] = z,
                None => return Ok(Err(AxiomViolation::NotClosed { x, y })),
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let xy = table[x][y];
            for z in 0..n {
                if table[xy][z] != table[x][table[y][z]] {
                    return Ok(Err(AxiomViolation::NotAssociative { x, y, z }));
                }
            }
        }
    }
    for (x, e) in elements.iter().enumerate() {
        let inv = index[&e.inverse()];
        if table[table[x][inv]][x] != x {
            return Ok(Err(AxiomViolation::NotRegular { x }));
        }
    }
    let idem: Vec<usize> = (0..n).filter(|&x| table[x][x] == x).collect();
    let expected: Vec<usize> = (0..n)
        .filter(|&x| elements[x].is_idempotent_form())
        .collect();
    if idem != expected {
        return Ok(Err(AxiomViolation::IdempotentSetMismatch));
    }
    for &p in &idem {
        for &q in &idem {
            if table[p][q] != table[q][p] {
                return Ok(Err(AxiomViolation::IdempotentsDoNotCommute { p, q }));
            }
        }
    }
    Ok(Ok(()))
}

pub fn verify_inverse_semigroup(g: &DirectedGraph) -> Result<bool, SemigroupError> {
    Ok(check_inverse_semigroup(g)?.is_ok())
}
