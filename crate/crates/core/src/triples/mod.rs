//! Congruence triples `(H, W, f)` of a graph, their order, meets and joins.
//!
//! `H` is a hereditary vertex set, `W` a set of vertices outside `H` each with
//! exactly one out-edge leaving `H`, and `f` a cycle function: `1` on cycles
//! inside `H`, `∞` on cycles that are neither inside `H` nor inside `W`, and a
//! free value in `ℤ⁺ ∪ {∞}` on cycles inside `W`.

mod ext_nat;

use std::collections::VecDeque;
use std::fmt;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::graph::{DirectedGraph, VertexId, VertexSet};
use crate::lattice::{FiniteLattice, LatticeError};

pub use ext_nat::{divisors, ExtNat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TripleError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown cycle `{0}`")]
    UnknownCycle(String),
    #[error("graph has cycles; a divisor bound is required to enumerate a finite sublattice")]
    UnboundedLattice,
    #[error("bound must be positive")]
    ZeroBound,
    #[error("triples do not form a lattice: {0}")]
    NotALattice(LatticeError),
}

/// A congruence triple. `f` holds one value per cycle of the graph, indexed
/// like [`DirectedGraph::cycles`]; for an acyclic graph it is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CongruenceTriple {
    h: VertexSet,
    w: VertexSet,
    f: Vec<ExtNat>,
}

/// A broken clause of the triple definition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NotHereditary,
    Overlap { vertex: VertexId },
    WrongIndex { vertex: VertexId, index: usize },
    CycleCount { expected: usize, found: usize },
    NotOneInsideH { cycle: usize, value: ExtNat },
    NotInfiniteOutside { cycle: usize, value: ExtNat },
}

impl Violation {
    pub fn describe(&self, g: &DirectedGraph) -> String {
        match self {
            Violation::NotHereditary => "H is not hereditary".into(),
            Violation::Overlap { vertex } => {
                format!("vertex {} lies in both H and W", g.vertex_name(*vertex))
            }
            Violation::WrongIndex { vertex, index } => format!(
                "vertex {} in W has index {index} relative to H, not 1",
                g.vertex_name(*vertex)
            ),
            Violation::CycleCount { expected, found } => {
                format!("cycle function has {found} values, graph has {expected} cycles")
            }
            Violation::NotOneInsideH { cycle, value } => format!(
                "cycle {} lies in H but has value {value}, not 1",
                g.cycles()[*cycle].name(g)
            ),
            Violation::NotInfiniteOutside { cycle, value } => format!(
                "cycle {} lies outside H and W but has value {value}, not inf",
                g.cycles()[*cycle].name(g)
            ),
        }
    }
}

/// Auxiliary sets used by the meet and join of two triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SetTrace {
    /// Vertices of `(W₁ ∪ W₂) \ (H₁ ∪ H₂)` with no out-edge leaving `H₁ ∪ H₂`.
    pub v0: VertexSet,
    /// `(W₁ ∩ W₂) \ V₀`.
    pub x: VertexSet,
    /// Vertices of `(W₁ ∪ W₂) \ (H₁ ∪ H₂)` starting a path into `V₀` whose edge
    /// sources all lie in `W₁ ∪ W₂`.
    pub j: VertexSet,
}

impl CongruenceTriple {
    /// Assembles a triple without checking it; see [`CongruenceTriple::validate`].
    pub fn from_parts(h: VertexSet, w: VertexSet, f: Vec<ExtNat>) -> Self {
        CongruenceTriple { h, w, f }
    }

    /// Builds a triple whose cycle function is forced everywhere except on the
    /// cycles inside `W`, which take their values from `free` (default `∞`).
    pub fn with_free_values(
        g: &DirectedGraph,
        h: VertexSet,
        w: VertexSet,
        free: impl Fn(usize) -> ExtNat,
    ) -> Self {
        let f = g
            .cycles()
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if c.sources().is_subset(h) {
                    ExtNat::ONE
                } else if c.sources().is_subset(w) {
                    free(i)
                } else {
                    ExtNat::Infinite
                }
            })
            .collect();
        CongruenceTriple { h, w, f }
    }

    /// Builds a triple from vertex names and `(cycle name, value)` pairs.
    /// Unlisted cycles get the forced value (`1` inside `H`, `∞` otherwise).
    pub fn from_names(
        g: &DirectedGraph,
        h: &[&str],
        w: &[&str],
        values: &[(&str, ExtNat)],
    ) -> Result<Self, TripleError> {
        let set = |names: &[&str]| {
            names
                .iter()
                .map(|n| {
                    g.vertex(n)
                        .map_err(|_| TripleError::UnknownVertex(n.to_string()))
                })
                .collect::<Result<VertexSet, _>>()
        };
        let h = set(h)?;
        let w = set(w)?;
        let mut f: Vec<ExtNat> = g
            .cycles()
            .iter()
            .map(|c| {
                if c.sources().is_subset(h) {
                    ExtNat::ONE
                } else {
                    ExtNat::Infinite
                }
            })
            .collect();
        for (name, value) in values {
            let i = g
                .cycle_by_name(name)
                .ok_or_else(|| TripleError::UnknownCycle(name.to_string()))?;
            f[i] = *value;
        }
        Ok(CongruenceTriple { h, w, f })
    }

    pub fn h(&self) -> VertexSet {
        self.h
    }

    pub fn w(&self) -> VertexSet {
        self.w
    }

    pub fn cycle_values(&self) -> &[ExtNat] {
        &self.f
    }

    pub fn value(&self, cycle: usize) -> ExtNat {
        self.f[cycle]
    }

    pub fn validate(&self, g: &DirectedGraph) -> Result<(), Vec<Violation>> {
        let mut out = Vec::new();
        if !g.is_hereditary(self.h) {
            out.push(Violation::NotHereditary);
        }
        for v in self.h.intersection(self.w).iter() {
            out.push(Violation::Overlap { vertex: v });
        }
        for v in self.w.difference(self.h).iter() {
            let index = g.index_relative(v, self.h);
            if index != 1 {
                out.push(Violation::WrongIndex { vertex: v, index });
            }
        }
        if self.f.len() != g.cycles().len() {
            out.push(Violation::CycleCount {
                expected: g.cycles().len(),
                found: self.f.len(),
            });
        } else {
            for (i, c) in g.cycles().iter().enumerate() {
                let value = self.f[i];
                if c.sources().is_subset(self.h) {
                    if value != ExtNat::ONE {
                        out.push(Violation::NotOneInsideH { cycle: i, value });
                    }
                } else if !c.sources().is_subset(self.w) && value != ExtNat::Infinite {
                    out.push(Violation::NotInfiniteOutside { cycle: i, value });
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// `H₁ ⊆ H₂`, `W₁ \ H₂ ⊆ W₂`, and `f₂(c) | f₁(c)` for every cycle.
    pub fn leq(&self, other: &Self) -> bool {
        self.h.is_subset(other.h)
            && self.w.difference(other.h).is_subset(other.w)
            && self
                .f
                .iter()
                .zip(&other.f)
                .all(|(mine, theirs)| theirs.divides(*mine))
    }

    pub fn trace(g: &DirectedGraph, a: &Self, b: &Self) -> SetTrace {
        let hh = a.h.union(b.h);
        let ww = a.w.union(b.w);
        let outside = ww.difference(hh);
        let v0: VertexSet = outside
            .iter()
            .filter(|&v| g.index_relative(v, hh) == 0)
            .collect();
        let x = a.w.intersection(b.w).difference(v0);

        // Backwards search from V₀ along edges whose source lies in W₁ ∪ W₂.
        let mut reached = v0;
        let mut queue: VecDeque<VertexId> = v0.iter().collect();
        while let Some(t) = queue.pop_front() {
            for e in g.edge_ids() {
                if g.range(e) == t && ww.contains(g.source(e)) && reached.insert(g.source(e)) {
                    queue.push_back(g.source(e));
                }
            }
        }
        let j = reached.intersection(outside);
        SetTrace { v0, x, j }
    }

    /// Greatest lower bound:
    /// `(H₁ ∩ H₂, (W₁ ∩ H₂) ∪ (W₂ ∩ H₁) ∪ X, lcm(f₁, f₂))`.
    pub fn meet(g: &DirectedGraph, a: &Self, b: &Self) -> Self {
        let t = Self::trace(g, a, b);
        let h = a.h.intersection(b.h);
        let w =
            a.w.intersection(b.h)
                .union(b.w.intersection(a.h))
                .union(t.x);
        let f = a.f.iter().zip(&b.f).map(|(p, q)| p.lcm(*q)).collect();
        CongruenceTriple { h, w, f }
    }

    /// Least upper bound:
    /// `(H₁ ∪ H₂ ∪ J, (W₁ ∪ W₂) \ H_u, gcd(f₁, f₂))`.
    pub fn join(g: &DirectedGraph, a: &Self, b: &Self) -> Self {
        let t = Self::trace(g, a, b);
        let h = a.h.union(b.h).union(t.j);
        let w = a.w.union(b.w).difference(h);
        let f = a.f.iter().zip(&b.f).map(|(p, q)| p.gcd(*q)).collect();
        CongruenceTriple { h, w, f }
    }

    /// Text form `({H}, {W}, {cycle:value, ..})` with sorted vertex names.
    pub fn render(&self, g: &DirectedGraph) -> String {
        let values: Vec<String> = g
            .cycles()
            .iter()
            .zip(&self.f)
            .map(|(c, v)| format!("{}:{v}", c.name(g)))
            .collect();
        format!(
            "({{{}}}, {{{}}}, {{{}}})",
            g.sorted_names(self.h).join(","),
            g.sorted_names(self.w).join(","),
            values.join(",")
        )
    }

    pub fn to_json(&self, g: &DirectedGraph) -> Value {
        let mut f = Map::new();
        for (c, v) in g.cycles().iter().zip(&self.f) {
            f.insert(c.name(g), Value::String(v.to_string()));
        }
        json!({
            "H": g.sorted_names(self.h),
            "W": g.sorted_names(self.w),
            "f": f,
        })
    }

    pub fn display<'a>(&'a self, g: &'a DirectedGraph) -> impl fmt::Display + 'a {
        struct D<'a>(&'a CongruenceTriple, &'a DirectedGraph);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.render(self.1))
            }
        }
        D(self, g)
    }
}

/// Enumerates congruence triples ordered by `H`, then `W` (each by size and
/// names), then cycle values.
///
/// For an acyclic graph this is all of them and `bound` is ignored. A graph
/// with cycles needs `bound`: free cycle values range over the divisors of
/// `bound` together with `∞`, a set closed under gcd and lcm, so the result is
/// a sublattice.
pub fn enumerate_triples(
    g: &DirectedGraph,
    bound: Option<u64>,
) -> Result<Vec<CongruenceTriple>, TripleError> {
    let values: Vec<ExtNat> = if g.is_acyclic() {
        Vec::new()
    } else {
        let n = bound.ok_or(TripleError::UnboundedLattice)?;
        if n == 0 {
            return Err(TripleError::ZeroBound);
        }
        let mut v: Vec<ExtNat> = divisors(n).into_iter().map(ExtNat::Finite).collect();
        v.push(ExtNat::Infinite);
        v
    };
    let mut out = Vec::new();
    for h in g.hereditary_subsets() {
        let candidates: VertexSet = g
            .vertices()
            .filter(|&v| !h.contains(v) && g.index_relative(v, h) == 1)
            .collect();
        let mut ws: Vec<VertexSet> = candidates.subsets().collect();
        g.sort_sets(&mut ws);
        for w in ws {
            let free: Vec<usize> = g.cycles_within(w).map(|(i, _)| i).collect();
            let base = CongruenceTriple::with_free_values(g, h, w, |_| ExtNat::Infinite);
            // odometer over value assignments to the free cycles, last digit fastest
            let mut digits = vec![0usize; free.len()];
            loop {
                let mut t = base.clone();
                for (k, &c) in free.iter().enumerate() {
                    t.f[c] = values[digits[k]];
                }
                out.push(t);
                if !advance(&mut digits, values.len()) {
                    break;
                }
            }
        }
    }
    Ok(out)
}

/// The lattice of [`enumerate_triples`] under [`CongruenceTriple::leq`].
pub fn triple_lattice(
    g: &DirectedGraph,
    bound: Option<u64>,
) -> Result<FiniteLattice<CongruenceTriple>, TripleError> {
    let all = enumerate_triples(g, bound)?;
    FiniteLattice::from_poset(all, CongruenceTriple::leq).map_err(TripleError::NotALattice)
}

fn advance(digits: &mut [usize], base: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < base {
            return true;
        }
        *d = 0;
    }
    false
}
