//! Seeded random graph families shared by the integration suites.
#![allow(dead_code)]

use std::collections::HashMap;

use ginv::graph::DirectedGraph;
use ginv::lattice::FiniteLattice;
use ginv::triples::CongruenceTriple;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const GAMMA1: &str = "vertex v1\nvertex u1\nvertex w1\nedge e1 v1 u1\nedge f1 v1 w1\n";
pub const GAMMA2: &str =
    "vertex v2\nvertex u2\nvertex w2\nedge e2 v2 u2\nedge f2 v2 w2\nedge g2 v2 w2\n";
pub const LOOP: &str = "vertex v\nedge e v v\n";

pub fn gamma1() -> DirectedGraph {
    DirectedGraph::parse(GAMMA1).unwrap()
}

pub fn gamma2() -> DirectedGraph {
    DirectedGraph::parse(GAMMA2).unwrap()
}

pub fn single_loop() -> DirectedGraph {
    DirectedGraph::parse(LOOP).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn build(prefix: &str, n: usize, edges: &[(usize, usize)]) -> DirectedGraph {
    let mut text = String::new();
    for v in 0..n {
        text += &format!("vertex {prefix}{v}\n");
    }
    for (k, (s, t)) in edges.iter().enumerate() {
        text += &format!("edge {prefix}e{k} {prefix}{s} {prefix}{t}\n");
    }
    DirectedGraph::parse(&text).unwrap()
}

/// Acyclic graph with 1..=`max_v` vertices and 0..=`max_e` edges; parallel
/// edges allowed. Vertex names are independent of the topological order.
pub fn random_acyclic(rng: &mut impl Rng, max_v: usize, max_e: usize) -> DirectedGraph {
    let n = rng.gen_range(1..=max_v);
    let mut topo: Vec<usize> = (0..n).collect();
    topo.shuffle(rng);
    let m = if n == 1 { 0 } else { rng.gen_range(0..=max_e) };
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| {
            let i = rng.gen_range(0..n - 1);
            let j = rng.gen_range(i + 1..n);
            (topo[i], topo[j])
        })
        .collect();
    build("v", n, &edges)
}

/// Every vertex has at most one out-edge; loops and cycles allowed.
pub fn random_out_degree_one(rng: &mut impl Rng, max_v: usize) -> DirectedGraph {
    let n = rng.gen_range(1..=max_v);
    let mut edges = Vec::new();
    for v in 0..n {
        if rng.gen_bool(0.75) {
            edges.push((v, rng.gen_range(0..n)));
        }
    }
    build("v", n, &edges)
}

/// A directed path through all vertices in random order, plus a few random
/// extra edges (which may close cycles).
pub fn random_unilateral(rng: &mut impl Rng, max_v: usize, max_extra: usize) -> DirectedGraph {
    let n = rng.gen_range(1..=max_v);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges: Vec<(usize, usize)> = order.windows(2).map(|w| (w[0], w[1])).collect();
    for _ in 0..rng.gen_range(0..=max_extra) {
        edges.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    build("v", n, &edges)
}

/// Disjoint union of 2..=3 small acyclic pieces; has at least two weak components.
pub fn random_multi_component(rng: &mut impl Rng) -> DirectedGraph {
    loop {
        let pieces = rng.gen_range(2..=3);
        let mut text = String::new();
        for p in 0..pieces {
            let piece = random_acyclic(rng, 3, 3);
            let prefix = format!("p{p}");
            text += &piece
                .to_string()
                .lines()
                .map(|line| {
                    let words: Vec<String> = line
                        .split_whitespace()
                        .enumerate()
                        .map(|(i, w)| {
                            if i == 0 {
                                w.to_string()
                            } else {
                                format!("{prefix}{w}")
                            }
                        })
                        .collect();
                    words.join(" ") + "\n"
                })
                .collect::<String>();
        }
        let g = DirectedGraph::parse(&text).unwrap();
        if g.connectivity().weak_components.len() >= 2 {
            return g;
        }
    }
}

/// Arbitrary small graph (cycles, loops and parallel edges allowed).
pub fn random_graph(rng: &mut impl Rng, max_v: usize, max_e: usize) -> DirectedGraph {
    let n = rng.gen_range(1..=max_v);
    let m = rng.gen_range(0..=max_e);
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    build("v", n, &edges)
}

/// The fixed acceptance corpus: 200 random acyclic graphs with at most 6
/// vertices and 8 edges.
pub fn acyclic_corpus() -> Vec<DirectedGraph> {
    let mut r = rng(0x5eed_0001);
    (0..200).map(|_| random_acyclic(&mut r, 6, 8)).collect()
}

/// Compares the meet/join formulas with the glb/lub computed from the order
/// alone, for every pair. Also checks validity of the results and that the
/// join covers `H₁ ∪ H₂ ∪ W₁ ∪ W₂` exactly.
pub fn check_meet_join(
    g: &DirectedGraph,
    l: &FiniteLattice<CongruenceTriple>,
) -> Result<usize, String> {
    let mut pairs = 0;
    for i in 0..l.len() {
        for j in 0..l.len() {
            let (a, b) = (l.label(i), l.label(j));
            let m = CongruenceTriple::meet(g, a, b);
            let u = CongruenceTriple::join(g, a, b);
            if &m != l.label(l.meet(i, j)) {
                return Err(format!(
                    "meet mismatch on {} and {} in\n{g}: formula {} vs glb {}",
                    a.render(g),
                    b.render(g),
                    m.render(g),
                    l.label(l.meet(i, j)).render(g)
                ));
            }
            if &u != l.label(l.join(i, j)) {
                return Err(format!(
                    "join mismatch on {} and {} in\n{g}: formula {} vs lub {}",
                    a.render(g),
                    b.render(g),
                    u.render(g),
                    l.label(l.join(i, j)).render(g)
                ));
            }
            if m.validate(g).is_err() || u.validate(g).is_err() {
                return Err(format!(
                    "invalid meet/join of {} and {}",
                    a.render(g),
                    b.render(g)
                ));
            }
            let union = a.h().union(b.h()).union(a.w()).union(b.w());
            if u.h().union(u.w()) != union {
                return Err(format!(
                    "join of {} and {} loses vertices",
                    a.render(g),
                    b.render(g)
                ));
            }
            pairs += 1;
        }
    }
    Ok(pairs)
}

/// Equal meets and equal joins with a common element force equal `H` and `f`.
pub fn check_equal_meet_join_forces_h_f(l: &FiniteLattice<CongruenceTriple>) -> Result<(), String> {
    for t1 in 0..l.len() {
        let mut groups: HashMap<(usize, usize), usize> = HashMap::new();
        for t2 in 0..l.len() {
            let key = (l.meet(t1, t2), l.join(t1, t2));
            match groups.get(&key) {
                None => {
                    groups.insert(key, t2);
                }
                Some(&t3) => {
                    let (a, b) = (l.label(t2), l.label(t3));
                    if a.h() != b.h() || a.cycle_values() != b.cycle_values() {
                        return Err(format!(
                            "elements {t2} and {t3} share meet and join with {t1}"
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}
