//! Brute-force congruences of a finite graph inverse semigroup.
//!
//! Every congruence is the join of the principal congruences of its pairs, so
//! the identity together with all principal congruences, closed under joins,
//! gives the whole congruence lattice. Nothing here looks at congruence
//! triples.

use std::collections::HashSet;

use serde_json::Value;
use thiserror::Error;

use crate::graph::DirectedGraph;
use crate::lattice::{FiniteLattice, LatticeError};
use crate::semigroup::{FiniteSemigroup, SemigroupError};

/// Default limit on the semigroup size accepted by the oracle.
pub const DEFAULT_CAP: usize = 200;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("semigroup has {size} elements, above the oracle cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("congruences failed to form a lattice: {0}")]
    Internal(#[from] LatticeError),
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    /// Returns false if already merged.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra.max(rb)] = ra.min(rb);
        true
    }

    fn into_congruence(mut self) -> Congruence {
        let n = self.0.len();
        let mut least = vec![usize::MAX; n];
        let roots: Vec<usize> = (0..n).map(|x| self.find(x)).collect();
        for x in 0..n {
            least[roots[x]] = least[roots[x]].min(x);
        }
        Congruence {
            block: roots.iter().map(|&r| least[r]).collect(),
        }
    }
}

/// A partition of the semigroup's elements; `block[x]` is the smallest
/// element index in the block of `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    block: Vec<usize>,
}

impl Congruence {
    pub fn identity(n: usize) -> Self {
        Congruence {
            block: (0..n).collect(),
        }
    }

    pub fn universal(n: usize) -> Self {
        Congruence { block: vec![0; n] }
    }

    pub fn related(&self, x: usize, y: usize) -> bool {
        self.block[x] == self.block[y]
    }

    pub fn block_count(&self) -> usize {
        self.block
            .iter()
            .enumerate()
            .filter(|&(i, &b)| i == b)
            .count()
    }

    /// Blocks in order of their least element, each sorted.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.block.len()];
        for (x, &b) in self.block.iter().enumerate() {
            if slot[b] == usize::MAX {
                slot[b] = out.len();
                out.push(Vec::new());
            }
            out[slot[b]].push(x);
        }
        out
    }

    /// Inclusion as relations: every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Self) -> bool {
        (0..self.block.len()).all(|x| other.related(x, self.block[x]))
    }

    /// Common refinement.
    pub fn meet(&self, other: &Self) -> Self {
        let mut uf = UnionFind::new(self.block.len());
        let mut first = std::collections::HashMap::new();
        for x in 0..self.block.len() {
            let key = (self.block[x], other.block[x]);
            let rep = *first.entry(key).or_insert(x);
            uf.union(rep, x);
        }
        uf.into_congruence()
    }

    /// Transitive closure of the union. The result is compatible with
    /// multiplication whenever both inputs are.
    pub fn join(&self, other: &Self) -> Self {
        let mut uf = UnionFind::new(self.block.len());
        for x in 0..self.block.len() {
            uf.union(x, self.block[x]);
            uf.union(x, other.block[x]);
        }
        uf.into_congruence()
    }

    /// `x ~ y ⇒ sx ~ sy and xs ~ ys` over the full multiplication table.
    pub fn is_compatible(&self, s: &FiniteSemigroup) -> bool {
        let n = s.len();
        (0..n).all(|x| {
            let y = self.block[x];
            x == y
                || (0..n).all(|t| {
                    self.related(s.mul(t, x), s.mul(t, y)) && self.related(s.mul(x, t), s.mul(y, t))
                })
        })
    }

    /// Sorted list of sorted blocks of element renderings.
    pub fn to_json(&self, s: &FiniteSemigroup, g: &DirectedGraph) -> Value {
        let mut blocks: Vec<Vec<String>> = self
            .blocks()
            .into_iter()
            .map(|b| {
                let mut names: Vec<String> = b.iter().map(|&x| s.element(x).render(g)).collect();
                names.sort();
                names
            })
            .collect();
        blocks.sort();
        Value::from(blocks)
    }
}

/// Least congruence containing the pairs in `seeds`.
fn close(s: &FiniteSemigroup, seeds: &[(usize, usize)]) -> Congruence {
    let n = s.len();
    let mut uf = UnionFind::new(n);
    let mut queue: Vec<(usize, usize)> = Vec::new();
    for &(a, b) in seeds {
        if uf.union(a, b) {
            queue.push((a, b));
        }
    }
    while let Some((x, y)) = queue.pop() {
        for t in 0..n {
            for (p, q) in [(s.mul(t, x), s.mul(t, y)), (s.mul(x, t), s.mul(y, t))] {
                if uf.union(p, q) {
                    queue.push((p, q));
                }
            }
        }
    }
    uf.into_congruence()
}

/// The least congruence identifying elements `a` and `b`.
pub fn principal_congruence(s: &FiniteSemigroup, a: usize, b: usize) -> Congruence {
    close(s, &[(a, b)])
}

fn check_cap(s: &FiniteSemigroup, cap: usize) -> Result<(), OracleError> {
    if s.len() > cap {
        return Err(OracleError::TooLarge { size: s.len(), cap });
    }
    Ok(())
}

/// All congruences, sorted by decreasing number of blocks and then by
/// partition, so the identity comes first and the universal congruence last.
pub fn enumerate_congruences(
    s: &FiniteSemigroup,
    cap: usize,
) -> Result<Vec<Congruence>, OracleError> {
    check_cap(s, cap)?;
    let n = s.len();
    let mut seen: HashSet<Congruence> = HashSet::new();
    let mut all: Vec<Congruence> = Vec::new();
    let mut push = |c: Congruence, all: &mut Vec<Congruence>| {
        if seen.insert(c.clone()) {
            all.push(c);
            true
        } else {
            false
        }
    };
    push(Congruence::identity(n), &mut all);
    for a in 0..n {
        for b in a + 1..n {
            push(principal_congruence(s, a, b), &mut all);
        }
    }
    let mut start = 0;
    while start < all.len() {
        let end = all.len();
        for i in start..end {
            for j in 0..i {
                let c = all[i].join(&all[j]);
                push(c, &mut all);
            }
        }
        start = end;
    }
    all.sort_by(|x, y| y.block_count().cmp(&x.block_count()).then_with(|| x.cmp(y)));
    Ok(all)
}

/// The congruence lattice ordered by inclusion.
pub fn congruence_lattice(
    s: &FiniteSemigroup,
    cap: usize,
) -> Result<FiniteLattice<Congruence>, OracleError> {
    let all = enumerate_congruences(s, cap)?;
    Ok(FiniteLattice::from_poset(all, |a, b| a.refines(b))?)
}

/// Builds the semigroup of `g` and its congruence lattice.
pub fn oracle_lattice(
    g: &DirectedGraph,
    cap: usize,
) -> Result<(FiniteSemigroup, FiniteLattice<Congruence>), OracleError> {
    let n = crate::semigroup::element_count(g)?;
    if n > cap {
        return Err(OracleError::TooLarge { size: n, cap });
    }
    let s = FiniteSemigroup::new(g)?;
    let l = congruence_lattice(&s, cap)?;
    Ok((s, l))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;
    use crate::semigroup::Element;

    fn idx(s: &FiniteSemigroup, g: &DirectedGraph, rendered: &str) -> usize {
        (0..s.len())
            .find(|&i| s.element(i).render(g) == rendered)
            .unwrap_or_else(|| panic!("no element {rendered}"))
    }

    /// Reference: all partitions of a small set, filtered by compatibility.
    fn brute_force(s: &FiniteSemigroup) -> Vec<Congruence> {
        fn rec(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == n {
                out.push(cur.clone());
                return;
            }
            let blocks = cur.iter().copied().max().map_or(0, |m| m + 1);
            for b in 0..=blocks {
                cur.push(b);
                rec(i + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut parts = Vec::new();
        rec(0, s.len(), &mut Vec::new(), &mut parts);
        parts
            .into_iter()
            .map(|p| {
                let mut uf = UnionFind::new(p.len());
                for x in 0..p.len() {
                    let rep = p.iter().position(|&b| b == p[x]).unwrap();
                    uf.union(rep, x);
                }
                uf.into_congruence()
            })
            .filter(|c| c.is_compatible(s))
            .collect()
    }

    #[test]
    fn identity_when_a_equals_b() {
        let s = FiniteSemigroup::new(&gamma2()).unwrap();
        assert_eq!(
            principal_congruence(&s, 3, 3),
            Congruence::identity(s.len())
        );
    }

    #[test]
    fn collapsing_an_edge_idempotent() {
        let g = gamma2();
        let s = FiniteSemigroup::new(&g).unwrap();
        let c = principal_congruence(&s, idx(&s, &g, "e2|e2"), 0);
        assert!(c.is_compatible(&s));
        for (i, x) in s.elements().iter().enumerate() {
            let mentions_e2 = match x {
                Element::Zero => true,
                Element::Pair { alpha, beta } => {
                    let e2 = g.edge("e2").unwrap();
                    alpha.edges().contains(&e2) || beta.edges().contains(&e2)
                }
            };
            // elements through e2, and u2 (= e2* e2 e2* e2), collapse to zero
            let expected = mentions_e2 || x.render(&g) == "u2|u2";
            assert_eq!(c.related(i, 0), expected, "{}", x.render(&g));
        }
    }

    #[test]
    fn vertex_with_zero_is_universal() {
        let g = gamma2();
        let s = FiniteSemigroup::new(&g).unwrap();
        let c = principal_congruence(&s, idx(&s, &g, "v2|v2"), 0);
        assert_eq!(c, Congruence::universal(s.len()));
    }

    #[test]
    fn counts_on_fixtures() {
        let s2 = FiniteSemigroup::new(&gamma2()).unwrap();
        assert_eq!(enumerate_congruences(&s2, DEFAULT_CAP).unwrap().len(), 6);
        let s1 = FiniteSemigroup::new(&gamma1()).unwrap();
        assert_eq!(enumerate_congruences(&s1, DEFAULT_CAP).unwrap().len(), 7);
        let s0 = FiniteSemigroup::new(&isolated()).unwrap();
        let l = congruence_lattice(&s0, DEFAULT_CAP).unwrap();
        assert_eq!(l.len(), 2);
        assert_eq!(l.cover_pairs(), &[(1, 0)]);
    }

    #[test]
    fn matches_partition_brute_force() {
        // Γ₁ has 10 elements: 115975 partitions, small enough to filter.
        for g in [gamma1(), isolated()] {
            let s = FiniteSemigroup::new(&g).unwrap();
            let mut ours = enumerate_congruences(&s, DEFAULT_CAP).unwrap();
            let mut brute = brute_force(&s);
            ours.sort();
            brute.sort();
            assert_eq!(ours, brute);
        }
    }

    #[test]
    fn closed_under_meet_and_join() {
        for g in [gamma1(), gamma2()] {
            let s = FiniteSemigroup::new(&g).unwrap();
            let all = enumerate_congruences(&s, DEFAULT_CAP).unwrap();
            let set: HashSet<&Congruence> = all.iter().collect();
            for a in &all {
                assert!(a.is_compatible(&s));
                for b in &all {
                    assert!(set.contains(&a.meet(b)));
                    assert!(set.contains(&a.join(b)));
                }
            }
        }
    }

    #[test]
    fn cap_is_enforced() {
        let s = FiniteSemigroup::new(&gamma2()).unwrap();
        assert_eq!(
            enumerate_congruences(&s, 10).unwrap_err(),
            OracleError::TooLarge { size: 15, cap: 10 }
        );
        assert!(matches!(
            oracle_lattice(&single_loop(), DEFAULT_CAP).unwrap_err(),
            OracleError::Semigroup(SemigroupError::CyclicGraph)
        ));
    }

    #[test]
    fn json_blocks_are_sorted() {
        let g = isolated();
        let s = FiniteSemigroup::new(&g).unwrap();
        assert_eq!(
            Congruence::universal(2).to_json(&s, &g).to_string(),
            r#"[["0","a|a"]]"#
        );
        assert_eq!(
            Congruence::identity(2).to_json(&s, &g).to_string(),
            r#"[["0"],["a|a"]]"#
        );
    }
}
