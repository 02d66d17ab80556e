//! Finite lattices given by an order predicate: meet/join tables, covers,
//! distributivity, modularity, semimodularity, forbidden sublattices, and
//! order isomorphism.

mod dot;
mod iso;

use thiserror::Error;

pub use dot::to_dot;
pub use iso::{find_isomorphism, order_isomorphic};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("empty poset")]
    Empty,
    #[error("relation is not a partial order at elements {0} and {1}")]
    NotAPartialOrder(usize, usize),
    #[error("elements {0} and {1} have no unique greatest lower bound")]
    NoMeet(usize, usize),
    #[error("elements {0} and {1} have no unique least upper bound")]
    NoJoin(usize, usize),
}

impl LatticeError {
    /// The offending pair when the poset is not a lattice.
    pub fn pair(&self) -> Option<(usize, usize)> {
        match *self {
            LatticeError::Empty => None,
            LatticeError::NotAPartialOrder(a, b)
            | LatticeError::NoMeet(a, b)
            | LatticeError::NoJoin(a, b) => Some((a, b)),
        }
    }
}

/// A finite lattice over labels of type `T`. Elements are referred to by index.
#[derive(Clone, Debug)]
pub struct FiniteLattice<T> {
    labels: Vec<T>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    /// `(a, b)` with `a ≻ b`, sorted.
    covers: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SublatticeKind {
    Pentagon,
    Diamond,
}

/// Five elements forming a pentagon or a diamond.
///
/// Pentagon: `bottom < low < high < top` and `bottom < side < top`, with
/// `side ∨ low = side ∨ high = top` and `side ∧ low = side ∧ high = bottom`.
/// Diamond: `low`, `high`, `side` pairwise incomparable with common pairwise
/// meet `bottom` and join `top`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SublatticeWitness {
    pub kind: SublatticeKind,
    pub bottom: usize,
    pub low: usize,
    pub high: usize,
    pub side: usize,
    pub top: usize,
}

impl SublatticeWitness {
    pub fn members(&self) -> [usize; 5] {
        [self.bottom, self.low, self.high, self.side, self.top]
    }
}

/// Outcome of a distributivity or modularity check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub witness: Option<SublatticeWitness>,
}

impl<T> FiniteLattice<T> {
    /// Builds the lattice of `labels` ordered by `leq`. Fails when `leq` is not a
    /// partial order or some pair lacks a meet or a join.
    pub fn from_poset(labels: Vec<T>, leq: impl Fn(&T, &T) -> bool) -> Result<Self, LatticeError> {
        let n = labels.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let rel: Vec<Vec<bool>> = labels
            .iter()
            .map(|a| labels.iter().map(|b| leq(a, b)).collect())
            .collect();
        for a in 0..n {
            if !rel[a][a] {
                return Err(LatticeError::NotAPartialOrder(a, a));
            }
            for b in 0..n {
                if a != b && rel[a][b] && rel[b][a] {
                    return Err(LatticeError::NotAPartialOrder(a, b));
                }
                if rel[a][b] {
                    if let Some(c) = (0..n).find(|&c| rel[b][c] && !rel[a][c]) {
                        return Err(LatticeError::NotAPartialOrder(a, c));
                    }
                }
            }
        }
        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in a..n {
                let lower: Vec<usize> = (0..n).filter(|&x| rel[x][a] && rel[x][b]).collect();
                let glb = lower
                    .iter()
                    .copied()
                    .find(|&m| lower.iter().all(|&x| rel[x][m]))
                    .ok_or(LatticeError::NoMeet(a, b))?;
                let upper: Vec<usize> = (0..n).filter(|&x| rel[a][x] && rel[b][x]).collect();
                let lub = upper
                    .iter()
                    .copied()
                    .find(|&m| upper.iter().all(|&x| rel[m][x]))
                    .ok_or(LatticeError::NoJoin(a, b))?;
                meet[a][b] = glb;
                meet[b][a] = glb;
                join[a][b] = lub;
                join[b][a] = lub;
            }
        }
        let mut covers = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a != b
                    && rel[b][a]
                    && !(0..n).any(|x| x != a && x != b && rel[b][x] && rel[x][a])
                {
                    covers.push((a, b));
                }
            }
        }
        Ok(FiniteLattice {
            labels,
            leq: rel,
            meet,
            join,
            covers,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[T] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &T {
        &self.labels[i]
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    /// Whether `a ≻ b`.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        self.covers.binary_search(&(a, b)).is_ok()
    }

    /// All pairs `(a, b)` with `a ≻ b`.
    pub fn cover_pairs(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn bottom(&self) -> usize {
        (0..self.len())
            .find(|&a| (0..self.len()).all(|b| self.leq[a][b]))
            .expect("lattices have a bottom")
    }

    pub fn top(&self) -> usize {
        (0..self.len())
            .find(|&a| (0..self.len()).all(|b| self.leq[b][a]))
            .expect("lattices have a top")
    }

    /// Length of the longest chain from the bottom to each element.
    pub fn heights(&self) -> Vec<usize> {
        let n = self.len();
        let mut order: Vec<usize> = (0..n).collect();
        // a linear extension: elements with fewer elements below come first
        order.sort_by_key(|&a| (0..n).filter(|&b| self.leq[b][a]).count());
        let mut height = vec![0; n];
        for &a in &order {
            height[a] = self
                .covers
                .iter()
                .filter(|&&(up, _)| up == a)
                .map(|&(_, down)| height[down] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// Relabels the elements, keeping the structure.
    pub fn map_labels<U>(self, f: impl FnMut(T) -> U) -> FiniteLattice<U> {
        FiniteLattice {
            labels: self.labels.into_iter().map(f).collect(),
            leq: self.leq,
            meet: self.meet,
            join: self.join,
            covers: self.covers,
        }
    }

    /// `(a ∨ b) ∧ c = (a ∧ c) ∨ (b ∧ c)` for all triples.
    pub fn distributive_identity_holds(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let ab = self.join[a][b];
                (0..n).all(|c| self.meet[ab][c] == self.join[self.meet[a][c]][self.meet[b][c]])
            })
        })
    }

    /// `a ≤ c ⇒ a ∨ (b ∧ c) = (a ∨ b) ∧ c` for all triples.
    pub fn modular_identity_holds(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).filter(|&c| self.leq[a][c]).all(|c| {
                (0..n).all(|b| self.join[a][self.meet[b][c]] == self.meet[self.join[a][b]][c])
            })
        })
    }

    /// First pentagon in index order of `(low, high, side)`.
    pub fn find_pentagon(&self) -> Option<SublatticeWitness> {
        let n = self.len();
        for low in 0..n {
            for high in 0..n {
                if !self.lt(low, high) {
                    continue;
                }
                for side in 0..n {
                    let bottom = self.meet[side][low];
                    let top = self.join[side][low];
                    if self.meet[side][high] == bottom && self.join[side][high] == top {
                        // equal meets and joins force side to be incomparable
                        // with low and high
                        return Some(SublatticeWitness {
                            kind: SublatticeKind::Pentagon,
                            bottom,
                            low,
                            high,
                            side,
                            top,
                        });
                    }
                }
            }
        }
        None
    }

    /// First diamond in index order of its three middle elements.
    pub fn find_diamond(&self) -> Option<SublatticeWitness> {
        let n = self.len();
        let incomparable = |a: usize, b: usize| !self.leq[a][b] && !self.leq[b][a];
        for a in 0..n {
            for b in a + 1..n {
                if !incomparable(a, b) {
                    continue;
                }
                let bottom = self.meet[a][b];
                let top = self.join[a][b];
                for c in b + 1..n {
                    if incomparable(a, c)
                        && incomparable(b, c)
                        && self.meet[a][c] == bottom
                        && self.meet[b][c] == bottom
                        && self.join[a][c] == top
                        && self.join[b][c] == top
                    {
                        return Some(SublatticeWitness {
                            kind: SublatticeKind::Diamond,
                            bottom,
                            low: a,
                            high: b,
                            side: c,
                            top,
                        });
                    }
                }
            }
        }
        None
    }

    /// Decided by the distributive identity; a pentagon or diamond is attached
    /// on failure.
    pub fn distributivity(&self) -> Verdict {
        let holds = self.distributive_identity_holds();
        let witness = if holds {
            None
        } else {
            self.find_pentagon().or_else(|| self.find_diamond())
        };
        Verdict { holds, witness }
    }

    /// Decided by the modular identity; a pentagon is attached on failure.
    pub fn modularity(&self) -> Verdict {
        let holds = self.modular_identity_holds();
        let witness = if holds { None } else { self.find_pentagon() };
        Verdict { holds, witness }
    }

    pub fn is_distributive(&self) -> bool {
        self.distributive_identity_holds()
    }

    pub fn is_modular(&self) -> bool {
        self.modular_identity_holds()
    }

    /// `a, b ≻ a ∧ b ⇒ a ∨ b ≻ a, b`.
    pub fn is_upper_semimodular(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let m = self.meet[a][b];
                let j = self.join[a][b];
                !(self.covers(a, m) && self.covers(b, m))
                    || (self.covers(j, a) && self.covers(j, b))
            })
        })
    }

    /// `a ∨ b ≻ a, b ⇒ a, b ≻ a ∧ b`.
    pub fn is_lower_semimodular(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| {
            (0..n).all(|b| {
                let m = self.meet[a][b];
                let j = self.join[a][b];
                !(self.covers(j, a) && self.covers(j, b))
                    || (self.covers(a, m) && self.covers(b, m))
            })
        })
    }

    /// Whether `w` is closed under this lattice's operations and has the shape
    /// its kind claims.
    pub fn witness_is_sound(&self, w: &SublatticeWitness) -> bool {
        let m = w.members();
        if m.iter().collect::<std::collections::BTreeSet<_>>().len() != 5 {
            return false;
        }
        let closed = m.iter().all(|&x| {
            m.iter()
                .all(|&y| m.contains(&self.meet[x][y]) && m.contains(&self.join[x][y]))
        });
        let (o, a, b, c, i) = (w.bottom, w.low, w.high, w.side, w.top);
        let shape = match w.kind {
            SublatticeKind::Pentagon => {
                self.lt(o, a)
                    && self.lt(a, b)
                    && self.lt(b, i)
                    && self.lt(o, c)
                    && self.lt(c, i)
                    && self.join[c][a] == i
                    && self.join[c][b] == i
                    && self.meet[c][a] == o
                    && self.meet[c][b] == o
            }
            SublatticeKind::Diamond => [(a, b), (a, c), (b, c)]
                .iter()
                .all(|&(x, y)| self.meet[x][y] == o && self.join[x][y] == i && x != o && y != i),
        };
        closed && shape
    }
}

/// Small reference lattices.
pub mod examples {
    use super::FiniteLattice;

    fn from_covers(n: usize, covers: &[(usize, usize)]) -> FiniteLattice<usize> {
        // reflexive-transitive closure of "b below a"
        let mut le = vec![vec![false; n]; n];
        for (i, row) in le.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(up, down) in covers {
            le[down][up] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if le[i][k] && le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
        FiniteLattice::from_poset((0..n).collect(), |&a, &b| le[a][b]).expect("valid lattice")
    }

    /// 0 < 1 < 2 < 4, 0 < 3 < 4.
    pub fn pentagon() -> FiniteLattice<usize> {
        from_covers(5, &[(1, 0), (2, 1), (4, 2), (3, 0), (4, 3)])
    }

    /// 0 < 1, 2, 3 < 4.
    pub fn diamond() -> FiniteLattice<usize> {
        from_covers(5, &[(1, 0), (2, 0), (3, 0), (4, 1), (4, 2), (4, 3)])
    }

    pub fn chain(n: usize) -> FiniteLattice<usize> {
        FiniteLattice::from_poset((0..n).collect(), |a, b| a <= b).expect("chains are lattices")
    }

    /// Subsets of `{0..k}` ordered by inclusion.
    pub fn boolean(k: u32) -> FiniteLattice<u32> {
        FiniteLattice::from_poset((0..1u32 << k).collect(), |a, b| a & !b == 0)
            .expect("power sets are lattices")
    }

    /// Divisors of `n` ordered by divisibility.
    pub fn divisors(n: u64) -> FiniteLattice<u64> {
        FiniteLattice::from_poset(
            (1..=n).filter(|d| n.is_multiple_of(*d)).collect(),
            |a, b| b % a == 0,
        )
        .expect("divisor posets are lattices")
    }
}
