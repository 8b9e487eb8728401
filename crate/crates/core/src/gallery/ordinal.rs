//! Ordinals below ω·2, written `ω·k + n` with `k ∈ {0, 1}`.
//!
//! Each ordinal is identified with the set of smaller ordinals, so
//! membership and order coincide.

use std::fmt;

use serde::{Serialize, Serializer};

use super::symbolic::SymbolicSet;
use crate::error::{Error, Result};

/// Field order makes the derived ordering lexicographic on `(k, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ordinal {
    limit: u8,
    finite: u64,
}

impl Ordinal {
    pub const ZERO: Ordinal = Ordinal {
        limit: 0,
        finite: 0,
    };
    pub const OMEGA: Ordinal = Ordinal {
        limit: 1,
        finite: 0,
    };

    pub const fn nat(n: u64) -> Self {
        Ordinal {
            limit: 0,
            finite: n,
        }
    }

    pub const fn omega_plus(n: u64) -> Self {
        Ordinal {
            limit: 1,
            finite: n,
        }
    }

    /// `None` unless `limit` is 0 or 1.
    pub fn new(limit: u8, finite: u64) -> Option<Self> {
        (limit <= 1).then_some(Ordinal { limit, finite })
    }

    pub fn limit_part(self) -> u8 {
        self.limit
    }

    pub fn finite_part(self) -> u64 {
        self.finite
    }

    pub fn is_finite(self) -> bool {
        self.limit == 0
    }

    /// The natural number, for finite ordinals.
    pub fn as_nat(self) -> Option<u64> {
        self.is_finite().then_some(self.finite)
    }

    pub fn is_limit(self) -> bool {
        self.finite == 0 && self.limit > 0
    }

    pub fn succ(self) -> Self {
        Ordinal {
            limit: self.limit,
            finite: self.finite + 1,
        }
    }

    /// `other ∈ self`.
    pub fn contains(self, other: Ordinal) -> bool {
        other < self
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.limit, self.finite) {
            (0, n) => write!(f, "{n}"),
            (_, 0) => f.write_str("ω"),
            (_, n) => write!(f, "ω+{n}"),
        }
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The least `β < ω·2` with `Γ ⊆ β`, i.e. the supremum of the successors of
/// the members of `Γ`.
pub fn ord_least_containing(gamma: &SymbolicSet) -> Result<Ordinal> {
    use super::symbolic::Marked;
    let above = |xs: &[Ordinal]| xs.iter().map(|x| x.succ()).max().unwrap_or(Ordinal::ZERO);
    match gamma {
        SymbolicSet::FiniteExplicit(xs) => Ok(above(xs)),
        SymbolicSet::Downset(b) => Ok(*b),
        SymbolicSet::FiniteUnionDownset(b, xs) => Ok((*b).max(above(xs))),
        SymbolicSet::MarkedInfinite(Marked::EvenNaturals | Marked::OddNaturals) => {
            Ok(Ordinal::OMEGA)
        }
        other => Err(Error::NoContainingOrdinal(other.to_string())),
    }
}
