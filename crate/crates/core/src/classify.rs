//! Classification of a graph's congruence lattice: the verdicts predicted by
//! the forked-vertex criterion and, optionally, the verdicts computed on the
//! enumerated triple lattice.
//!
//! The lattice is lower semimodular, modular and distributive exactly when the
//! graph has no forked vertex, and it is always upper semimodular.

use serde_json::{json, Value};

use crate::graph::DirectedGraph;
use crate::lattice::{FiniteLattice, SublatticeKind};
use crate::triples::{triple_lattice, CongruenceTriple, TripleError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub distributive: bool,
    pub modular: bool,
    pub upper_semimodular: bool,
    pub lower_semimodular: bool,
}

impl Verdicts {
    pub fn predicted(g: &DirectedGraph) -> Self {
        let ok = g.forked_vertices().is_empty();
        Verdicts {
            distributive: ok,
            modular: ok,
            upper_semimodular: true,
            lower_semimodular: ok,
        }
    }

    pub fn of_lattice<T>(l: &FiniteLattice<T>) -> Self {
        Verdicts {
            distributive: l.is_distributive(),
            modular: l.is_modular(),
            upper_semimodular: l.is_upper_semimodular(),
            lower_semimodular: l.is_lower_semimodular(),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "distributive": self.distributive,
            "modular": self.modular,
            "upper_semimodular": self.upper_semimodular,
            "lower_semimodular": self.lower_semimodular,
        })
    }
}

/// Verdicts computed on an enumerated triple lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Computed {
    pub elements: usize,
    pub covers: usize,
    /// Divisor bound used for cyclic graphs; the lattice is then a finite
    /// sublattice of the full one.
    pub bound: Option<u64>,
    pub verdicts: Verdicts,
    /// Rendered members (bottom, low, high, side, top) of a forbidden sublattice.
    pub witness: Option<(SublatticeKind, Vec<String>)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentReport {
    pub vertices: Vec<String>,
    pub forked: Vec<String>,
    pub distributive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub vertices: usize,
    pub edges: usize,
    pub cycles: usize,
    pub forked: Vec<String>,
    pub max_out_degree_one: bool,
    pub weakly_connected: bool,
    pub unilaterally_connected: bool,
    pub strongly_connected: bool,
    pub components: Vec<ComponentReport>,
    pub predicted: Verdicts,
    pub computed: Option<Computed>,
    /// Broken consequences of the criterion, e.g. a unilaterally connected
    /// graph predicted non-distributive.
    pub corollary_violations: Vec<String>,
}

impl ClassificationReport {
    /// Whether predictions and computed verdicts agree. On a bounded
    /// sublattice only distributivity and modularity are compared: covers in
    /// a sublattice need not be covers in the full lattice.
    pub fn agreement(&self) -> Option<bool> {
        let c = self.computed.as_ref()?;
        let p = &self.predicted;
        let v = &c.verdicts;
        let core = p.distributive == v.distributive && p.modular == v.modular;
        Some(if c.bound.is_some() {
            core
        } else {
            core && p.upper_semimodular == v.upper_semimodular
                && p.lower_semimodular == v.lower_semimodular
        })
    }

    pub fn is_consistent(&self) -> bool {
        self.agreement() != Some(false) && self.corollary_violations.is_empty()
    }

    pub fn to_json(&self) -> Value {
        let computed = self.computed.as_ref().map(|c| {
            json!({
                "elements": c.elements,
                "covers": c.covers,
                "bound": c.bound,
                "verdicts": c.verdicts.to_json(),
                "witness": c.witness.as_ref().map(|(kind, members)| json!({
                    "kind": match kind {
                        SublatticeKind::Pentagon => "pentagon",
                        SublatticeKind::Diamond => "diamond",
                    },
                    "members": members,
                })),
            })
        });
        json!({
            "graph": {
                "vertices": self.vertices,
                "edges": self.edges,
                "cycles": self.cycles,
                "max_out_degree_one": self.max_out_degree_one,
                "weakly_connected": self.weakly_connected,
                "unilaterally_connected": self.unilaterally_connected,
                "strongly_connected": self.strongly_connected,
            },
            "forked": self.forked,
            "components": self.components.iter().map(|c| json!({
                "vertices": c.vertices,
                "forked": c.forked,
                "distributive": c.distributive,
            })).collect::<Vec<_>>(),
            "predicted": self.predicted.to_json(),
            "computed": computed,
            "agreement": self.agreement(),
            "corollary_violations": self.corollary_violations,
        })
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let yn = |b: bool| if b { "yes" } else { "no" };
        out += &format!(
            "graph: {} vertices, {} edges, {} cycles\n",
            self.vertices, self.edges, self.cycles
        );
        out += &format!("forked vertices: {}\n", list(&self.forked));
        out += &format!(
            "connectivity: weak={} unilateral={} strong={}; out-degree <= 1: {}\n",
            yn(self.weakly_connected),
            yn(self.unilaterally_connected),
            yn(self.strongly_connected),
            yn(self.max_out_degree_one)
        );
        out += &format!("predicted: {}\n", verdict_line(&self.predicted));
        if let Some(c) = &self.computed {
            let scope = match c.bound {
                Some(n) => format!(" (sublattice, cycle values dividing {n} or inf)"),
                None => String::new(),
            };
            out += &format!(
                "computed: {}; {} elements, {} covers{scope}\n",
                verdict_line(&c.verdicts),
                c.elements,
                c.covers
            );
            if let Some((kind, members)) = &c.witness {
                out += &format!("witness {kind:?}: {}\n", members.join("  "));
            }
            out += &format!("agreement: {}\n", yn(self.agreement().unwrap_or(true)));
        }
        for v in &self.corollary_violations {
            out += &format!("violation: {v}\n");
        }
        out
    }
}

fn list(names: &[String]) -> String {
    if names.is_empty() {
        "(none)".into()
    } else {
        names.join(", ")
    }
}

fn verdict_line(v: &Verdicts) -> String {
    format!(
        "distributive={} modular={} upper_semimodular={} lower_semimodular={}",
        v.distributive, v.modular, v.upper_semimodular, v.lower_semimodular
    )
}

fn names(g: &DirectedGraph, set: crate::graph::VertexSet) -> Vec<String> {
    g.sorted_names(set).into_iter().map(String::from).collect()
}

/// Classifies `g`. With `enumerate`, the triple lattice is built (`bound` is
/// required for graphs with cycles) and its verdicts are attached.
pub fn classify(
    g: &DirectedGraph,
    enumerate: bool,
    bound: Option<u64>,
) -> Result<ClassificationReport, TripleError> {
    let forked = g.forked_vertices();
    let conn = g.connectivity();
    let predicted = Verdicts::predicted(g);
    let max_out_degree_one = g.vertices().all(|v| g.out_degree(v) <= 1);
    let components: Vec<ComponentReport> = conn
        .weak_components
        .iter()
        .map(|&c| {
            let sub = g.induced_subgraph(c);
            ComponentReport {
                vertices: names(g, c),
                forked: names(&sub, sub.forked_vertices()),
                distributive: Verdicts::predicted(&sub).distributive,
            }
        })
        .collect();

    let mut corollary_violations = Vec::new();
    if max_out_degree_one && !predicted.distributive {
        corollary_violations.push("every out-degree is at most 1 but distributivity fails".into());
    }
    if conn.is_unilaterally_connected && !predicted.distributive {
        corollary_violations
            .push("graph is unilaterally connected but distributivity fails".into());
    }
    if components.iter().all(|c| c.distributive) != predicted.distributive {
        corollary_violations
            .push("whole-graph verdict differs from the conjunction of component verdicts".into());
    }

    let computed = if enumerate {
        let bound = if g.is_acyclic() { None } else { bound };
        let l = triple_lattice(g, bound)?;
        Some(compute(g, &l, bound))
    } else {
        None
    };

    Ok(ClassificationReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        cycles: g.cycles().len(),
        forked: names(g, forked),
        max_out_degree_one,
        weakly_connected: conn.is_weakly_connected,
        unilaterally_connected: conn.is_unilaterally_connected,
        strongly_connected: conn.is_strongly_connected,
        components,
        predicted,
        computed,
        corollary_violations,
    })
}

fn compute(g: &DirectedGraph, l: &FiniteLattice<CongruenceTriple>, bound: Option<u64>) -> Computed {
    let verdicts = Verdicts::of_lattice(l);
    let witness = l.distributivity().witness.map(|w| {
        let members = w.members().iter().map(|&i| l.label(i).render(g)).collect();
        (w.kind, members)
    });
    Computed {
        elements: l.len(),
        covers: l.cover_pairs().len(),
        bound,
        verdicts,
        witness,
    }
}
