use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

/// A positive integer or infinity, ordered by divisibility where every value
/// divides infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Finite(u64),
    Infinite,
}

impl ExtNat {
    pub const ONE: ExtNat = ExtNat::Finite(1);

    /// `None` for zero.
    pub fn finite(n: u64) -> Option<Self> {
        (n > 0).then_some(ExtNat::Finite(n))
    }

    pub fn gcd(self, other: Self) -> Self {
        match (self, other) {
            (ExtNat::Infinite, x) | (x, ExtNat::Infinite) => x,
            (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a.gcd(&b)),
        }
    }

    pub fn lcm(self, other: Self) -> Self {
        match (self, other) {
            (ExtNat::Infinite, _) | (_, ExtNat::Infinite) => ExtNat::Infinite,
            (ExtNat::Finite(a), ExtNat::Finite(b)) => ExtNat::Finite(a.lcm(&b)),
        }
    }

    /// `self | other`.
    pub fn divides(self, other: Self) -> bool {
        match (self, other) {
            (_, ExtNat::Infinite) => true,
            (ExtNat::Infinite, ExtNat::Finite(_)) => false,
            (ExtNat::Finite(a), ExtNat::Finite(b)) => b % a == 0,
        }
    }
}

/// Divisors of `n` in increasing order.
pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Finite(n) => write!(f, "{n}"),
            ExtNat::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtNat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "inf" {
            return Ok(ExtNat::Infinite);
        }
        s.parse::<u64>()
            .ok()
            .and_then(ExtNat::finite)
            .ok_or_else(|| format!("expected a positive integer or `inf`, got `{s}`"))
    }
}
