//! Subsets of a finite carrier `{0, .., n-1}` as fixed-width bit patterns.
//!
//! A [`Subset`] carries no width of its own; the owning structure supplies
//! `n` and rejects patterns with bits at or above it. The same pattern is
//! read as a bivaluation through its characteristic function: bit `i` set
//! means the valuation sends element `i` to 1.

use std::fmt;

use serde::{Serialize, Serializer};

/// Hard cap on carrier size for dense tables (`2^n` entries).
pub const MAX_CARRIER: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u32) -> Self {
        Subset(bits)
    }

    /// The whole carrier of size `n`.
    pub const fn full(n: usize) -> Self {
        Subset(((1u64 << n) - 1) as u32)
    }

    pub fn singleton(elem: usize) -> Self {
        Subset(1 << elem)
    }

    pub fn from_elems<I: IntoIterator<Item = usize>>(elems: I) -> Self {
        Subset(elems.into_iter().fold(0, |acc, e| acc | (1 << e)))
    }

    pub const fn bits(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }

    pub const fn contains(self, elem: usize) -> bool {
        self.0 >> elem & 1 == 1
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_proper_subset_of(self, other: Subset) -> bool {
        self.is_subset_of(other) && self.0 != other.0
    }

    pub const fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub const fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub const fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    pub const fn with(self, elem: usize) -> Subset {
        Subset(self.0 | 1 << elem)
    }

    pub const fn without(self, elem: usize) -> Subset {
        Subset(self.0 & !(1 << elem))
    }

    /// Complement relative to a carrier of size `n`.
    pub const fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    /// True when every bit lies below `n`.
    pub const fn fits(self, n: usize) -> bool {
        self.0 & !Subset::full(n).0 == 0
    }

    /// Members in ascending order.
    pub fn elems(self) -> Elems {
        Elems(self.0)
    }

    /// Every subset of `self`, ascending by bit pattern.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }

    /// Every superset of `self` inside a carrier of size `n`, ascending.
    pub fn supersets(self, n: usize) -> impl Iterator<Item = Subset> {
        let base = self;
        self.complement(n)
            .subsets()
            .map(move |extra| base.union(extra))
    }
}

/// All `2^n` subsets of a carrier of size `n`, ascending.
pub fn all_subsets(n: usize) -> impl Iterator<Item = Subset> + Clone {
    (0..1u32 << n).map(Subset)
}

pub struct Elems(u32);

impl Iterator for Elems {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

/// Ascending enumeration of the submasks of a mask.
pub struct Subsets {
    mask: u32,
    next: Option<u32>,
}

impl Iterator for Subsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let cur = self.next?;
        // (cur - mask) & mask steps to the next submask in increasing order
        let step = cur.wrapping_sub(self.mask) & self.mask;
        self.next = if cur == self.mask { None } else { Some(step) };
        Some(Subset(cur))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.elems().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Subset {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.elems())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn submasks_ascend() {
        let got: Vec<u32> = Subset::from_bits(0b1010)
            .subsets()
            .map(Subset::bits)
            .collect();
        assert_eq!(got, vec![0b0000, 0b0010, 0b1000, 0b1010]);
        assert_eq!(Subset::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn supersets_within_carrier() {
        let got: Vec<Subset> = Subset::singleton(0).supersets(3).collect();
        assert_eq!(
            got,
            vec![
                Subset::from_bits(0b001),
                Subset::from_bits(0b011),
                Subset::from_bits(0b101),
                Subset::from_bits(0b111)
            ]
        );
    }

    #[test]
    fn full_carrier_at_cap() {
        assert_eq!(Subset::full(MAX_CARRIER).len(), MAX_CARRIER);
        assert_eq!(Subset::full(0), Subset::EMPTY);
        assert!(!Subset::singleton(3).fits(3));
    }

    #[test]
    fn display_lists_members() {
        assert_eq!(Subset::from_elems([2, 0]).to_string(), "{0 2}");
        assert_eq!(Subset::EMPTY.to_string(), "{}");
    }
}
