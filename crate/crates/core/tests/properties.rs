//! Property checks over seeded random graphs and proptest-generated inputs.

mod common;

use common::*;
use ginv::classify::Verdicts;
use ginv::graph::{DirectedGraph, VertexSet};
use ginv::lattice::order_isomorphic;
use ginv::oracle::oracle_lattice;
use ginv::semigroup::{enumerate_elements, multiply, FiniteSemigroup};
use ginv::triples::{enumerate_triples, triple_lattice, CongruenceTriple};
use proptest::prelude::*;
use rand::seq::SliceRandom;

fn permuted_edges(g: &DirectedGraph, rng: &mut impl rand::Rng) -> DirectedGraph {
    let text = g.to_string();
    let (vertices, mut edges): (Vec<&str>, Vec<&str>) =
        text.lines().partition(|l| l.starts_with("vertex"));
    edges.shuffle(rng);
    let mut out = vertices.join("\n") + "\n";
    out += &edges.join("\n");
    DirectedGraph::parse(&out).unwrap()
}

fn arb_graph() -> impl Strategy<Value = DirectedGraph> {
    (1usize..=5)
        .prop_flat_map(|n| (Just(n), prop::collection::vec((0..n, 0..n), 0..=6)))
        .prop_map(|(n, edges)| {
            let mut text = String::new();
            for v in 0..n {
                text += &format!("vertex v{v}\n");
            }
            for (k, (s, t)) in edges.iter().enumerate() {
                text += &format!("edge e{k} v{s} v{t}\n");
            }
            DirectedGraph::parse(&text).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reachability_is_a_preorder(g in arb_graph()) {
        for a in g.vertices() {
            prop_assert!(g.reaches(a, a));
            for b in g.vertices() {
                for c in g.vertices() {
                    if g.reaches(a, b) && g.reaches(b, c) {
                        prop_assert!(g.reaches(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn hereditary_sets_form_a_ring_of_sets(g in arb_graph()) {
        let sets = g.hereditary_subsets();
        let brute: Vec<VertexSet> = g.all_vertices().subsets().filter(|&s| g.is_hereditary(s)).collect();
        prop_assert_eq!(sets.len(), brute.len());
        for &a in &sets {
            for &b in &sets {
                prop_assert!(g.is_hereditary(a.union(b)));
                prop_assert!(g.is_hereditary(a.intersection(b)));
            }
            for v in a.iter() {
                prop_assert_eq!(g.index_relative(v, a), 0);
            }
        }
    }

    #[test]
    fn forked_vertices_have_two_out_edges(g in arb_graph()) {
        for v in g.forked_vertices().iter() {
            prop_assert!(g.out_degree(v) >= 2);
            prop_assert!(g.unshadowed_edges(v).len() >= 2);
        }
    }

    #[test]
    fn cycles_ignore_edge_order(g in arb_graph(), seed in any::<u64>()) {
        let h = permuted_edges(&g, &mut rng(seed));
        let names = |g: &DirectedGraph| {
            let mut v: Vec<String> = g.cycles().iter().map(|c| c.name(g)).collect();
            v.sort();
            v
        };
        prop_assert_eq!(names(&g), names(&h));
        prop_assert_eq!(g.sorted_names(g.forked_vertices()), h.sorted_names(h.forked_vertices()));
    }

    #[test]
    fn triple_order_is_a_partial_order(g in arb_graph()) {
        let triples = enumerate_triples(&g, Some(2)).unwrap();
        for a in &triples {
            prop_assert!(a.validate(&g).is_ok());
            prop_assert!(a.h().is_disjoint(a.w()));
            prop_assert!(a.leq(a));
            for b in &triples {
                if a.leq(b) && b.leq(a) {
                    prop_assert_eq!(a, b);
                }
                for c in &triples {
                    if a.leq(b) && b.leq(c) {
                        prop_assert!(a.leq(c));
                    }
                }
            }
        }
    }
}

#[test]
fn unilateral_graphs_have_no_forked_vertex() {
    let mut r = rng(0x5eed_0101);
    for _ in 0..200 {
        let g = random_unilateral(&mut r, 6, 4);
        assert!(g.connectivity().is_unilaterally_connected);
        assert!(g.forked_vertices().is_empty(), "{g}");
    }
}

/// The surviving part of `W₁ ∩ W₂` in the meet is exactly the vertices of
/// index 1 relative to `H₁ ∩ H₂`.
#[test]
fn meet_x_is_the_index_one_part_of_common_w() {
    let mut r = rng(0x5eed_0102);
    let mut graphs: Vec<DirectedGraph> = (0..150).map(|_| random_acyclic(&mut r, 6, 8)).collect();
    graphs.extend((0..40).map(|_| random_graph(&mut r, 4, 5)));
    let mut checked = 0;
    for g in &graphs {
        let triples = enumerate_triples(g, Some(2)).unwrap();
        for a in &triples {
            for b in &triples {
                let x = CongruenceTriple::trace(g, a, b).x;
                let hh = a.h().intersection(b.h());
                let by_index: VertexSet = a
                    .w()
                    .intersection(b.w())
                    .iter()
                    .filter(|&v| g.index_relative(v, hh) == 1)
                    .collect();
                assert_eq!(
                    x,
                    by_index,
                    "on {} and {} in\n{g}",
                    a.render(g),
                    b.render(g)
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn v0_lies_inside_j() {
    let mut r = rng(0x5eed_0103);
    for _ in 0..100 {
        let g = random_acyclic(&mut r, 6, 8);
        let triples = enumerate_triples(&g, None).unwrap();
        for a in &triples {
            for b in &triples {
                let t = CongruenceTriple::trace(&g, a, b);
                assert!(t.v0.is_subset(t.j));
                assert!(t.x.is_subset(a.w().intersection(b.w())));
            }
        }
    }
}

#[test]
fn bounded_cyclic_meet_join_match_the_order() {
    let mut r = rng(0x5eed_0104);
    let mut done = 0;
    while done < 60 {
        let g = random_graph(&mut r, 4, 5);
        if g.is_acyclic() {
            continue;
        }
        for bound in [1, 4, 6] {
            let l = triple_lattice(&g, Some(bound)).unwrap();
            check_meet_join(&g, &l).unwrap();
            check_equal_meet_join_forces_h_f(&l).unwrap();
            assert_eq!(
                l.is_distributive(),
                Verdicts::predicted(&g).distributive,
                "{g}"
            );
        }
        done += 1;
    }
}

#[test]
fn oracle_agrees_on_small_random_graphs() {
    let mut r = rng(0x5eed_0105);
    let mut compared = 0;
    let mut forked = 0;
    while compared < 40 {
        let g = random_acyclic(&mut r, 5, 5);
        if enumerate_elements(&g).unwrap().len() > 40 {
            continue;
        }
        let (_, congruences) = oracle_lattice(&g, 40).unwrap();
        let triples = triple_lattice(&g, None).unwrap();
        assert_eq!(congruences.len(), triples.len(), "{g}");
        assert!(order_isomorphic(&triples, &congruences), "{g}");
        assert_eq!(
            Verdicts::of_lattice(&triples),
            Verdicts::of_lattice(&congruences),
            "{g}"
        );
        for i in 0..congruences.len() {
            for j in 0..congruences.len() {
                let m = congruences.label(i).meet(congruences.label(j));
                assert_eq!(&m, congruences.label(congruences.meet(i, j)));
            }
        }
        forked += usize::from(!g.forked_vertices().is_empty());
        compared += 1;
    }
    assert!(forked > 0, "corpus never exercised a forked vertex");
}

#[test]
fn semigroup_invariants() {
    let mut r = rng(0x5eed_0106);
    for _ in 0..30 {
        let g = random_acyclic(&mut r, 5, 6);
        let s = match FiniteSemigroup::new(&g) {
            Ok(s) if s.len() <= 80 => s,
            _ => continue,
        };
        let zero = s.zero();
        for a in 0..s.len() {
            let x = s.element(a);
            let inv = x.inverse();
            assert_eq!(inv.inverse(), *x);
            assert_eq!(multiply(&multiply(x, &inv), x), *x);
            assert_eq!(s.mul(a, zero), zero);
            assert_eq!(s.mul(zero, a), zero);
            let e = multiply(x, &inv);
            assert_eq!(multiply(&e, &e), e);
        }
    }
}
