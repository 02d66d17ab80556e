use super::{DirectedGraph, EdgeId, VertexId, VertexSet};

/// A closed path whose edge sources are pairwise distinct, stored in the
/// rotation that starts at the source with the smallest name.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cycle {
    edges: Vec<EdgeId>,
    sources: VertexSet,
}

impl Cycle {
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// `u(c)`, the set of edge sources.
    pub fn sources(&self) -> VertexSet {
        self.sources
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Dot-joined edge names, e.g. `a2b.b2a`.
    pub fn name(&self, g: &DirectedGraph) -> String {
        self.edges
            .iter()
            .map(|&e| g.edge_name(e))
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Enumerates cycles up to rotation. A cycle is found exactly once: from its
/// smallest-named vertex, walking only through vertices with larger names.
pub(super) fn enumerate(g: &DirectedGraph) -> Vec<Cycle> {
    let mut found = Vec::new();
    for start in g.vertices() {
        let allowed: VertexSet = g
            .vertices()
            .filter(|&v| g.vertex_name(v) > g.vertex_name(start))
            .collect();
        let mut path = Vec::new();
        walk(
            g,
            start,
            start,
            allowed,
            VertexSet::singleton(start),
            &mut path,
            &mut found,
        );
    }
    found.sort_by_cached_key(|c: &Cycle| {
        let names: Vec<String> = c
            .edges
            .iter()
            .map(|&e| g.edge_name(e).to_string())
            .collect();
        (c.len(), names)
    });
    found
}

fn walk(
    g: &DirectedGraph,
    start: VertexId,
    at: VertexId,
    allowed: VertexSet,
    visited: VertexSet,
    path: &mut Vec<EdgeId>,
    found: &mut Vec<Cycle>,
) {
    for &e in g.out_edges(at) {
        let next = g.range(e);
        path.push(e);
        if next == start {
            found.push(Cycle {
                edges: path.clone(),
                sources: visited,
            });
        } else if allowed.contains(next) && !visited.contains(next) {
            let mut v = visited;
            v.insert(next);
            walk(g, start, next, allowed, v, path, found);
        }
        path.pop();
    }
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::super::fixtures::*;
    use super::*;

    fn cycle_names(g: &DirectedGraph) -> Vec<String> {
        g.cycles().iter().map(|c| c.name(g)).collect()
    }

    /// Reference: every closed walk of length <= |V| starting anywhere, keep
    /// those with distinct sources, rotate to the smallest-named source.
    fn brute_force(g: &DirectedGraph) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut stack: Vec<Vec<EdgeId>> = g.edge_ids().map(|e| vec![e]).collect();
        while let Some(p) = stack.pop() {
            let first = g.source(p[0]);
            let last = g.range(*p.last().unwrap());
            let sources: Vec<VertexId> = p.iter().map(|&e| g.source(e)).collect();
            let distinct = sources.iter().collect::<BTreeSet<_>>().len() == sources.len();
            if !distinct {
                continue;
            }
            if last == first {
                let k = (0..p.len())
                    .min_by_key(|&i| g.vertex_name(g.source(p[i])))
                    .unwrap();
                let rotated: Vec<&str> = p[k..]
                    .iter()
                    .chain(&p[..k])
                    .map(|&e| g.edge_name(e))
                    .collect();
                out.insert(rotated.join("."));
            }
            if p.len() < g.vertex_count() {
                for &e in g.out_edges(last) {
                    let mut q = p.clone();
                    q.push(e);
                    stack.push(q);
                }
            }
        }
        out
    }

    #[test]
    fn acyclic_examples() {
        assert!(gamma1().cycles().is_empty());
        assert!(gamma2().is_acyclic());
    }

    #[test]
    fn single_loop() {
        let g = super::super::fixtures::single_loop();
        assert_eq!(cycle_names(&g), vec!["e"]);
        assert_eq!(g.cycles()[0].sources().len(), 1);
    }

    #[test]
    fn two_cycle_starts_at_smallest_name() {
        let g = DirectedGraph::parse("vertex b\nvertex a\nedge x b a\nedge y a b\n").unwrap();
        assert_eq!(cycle_names(&g), vec!["y.x"]);
    }

    #[test]
    fn parallel_edges_give_distinct_cycles() {
        let g = DirectedGraph::parse(
            "vertex a\nvertex b\nedge p a b\nedge q a b\nedge r b a\nedge l b b\n",
        )
        .unwrap();
        assert_eq!(cycle_names(&g), vec!["l", "p.r", "q.r"]);
        assert_eq!(
            g.cycles()
                .iter()
                .map(|c| c.name(&g))
                .collect::<BTreeSet<_>>(),
            brute_force(&g)
        );
    }

    #[test]
    fn matches_brute_force_on_dense_graph() {
        let mut text = String::new();
        for v in ["a", "b", "c", "d"] {
            text += &format!("vertex {v}\n");
        }
        let mut k = 0;
        for s in ["a", "b", "c", "d"] {
            for t in ["a", "b", "c", "d"] {
                if s != t || s == "c" {
                    text += &format!("edge e{k} {s} {t}\n");
                    k += 1;
                }
            }
        }
        let g = DirectedGraph::parse(&text).unwrap();
        let ours: BTreeSet<String> = g.cycles().iter().map(|c| c.name(&g)).collect();
        assert_eq!(ours.len(), g.cycles().len());
        assert_eq!(ours, brute_force(&g));
    }
}
