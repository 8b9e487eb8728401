//! Finite logical structures `(L, ⊢)` stored as dense consequence tables.
//!
//! The relation `Γ ⊢ α` is kept as the operator `C(Γ) = {α : Γ ⊢ α}` over
//! all `2^n` subsets. Nothing here assumes `C` is a closure operator.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::subset::{all_subsets, Subset, MAX_CARRIER};

/// Where a table came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Origin {
    ExplicitTable,
    Rule(String),
    BivaluationInduced,
}

/// Fallback for subsets an explicit table leaves unspecified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableDefault {
    Identity,
    Full,
    Named(Subset),
}

/// A named rule from the built-in registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    /// `C(Γ) = Γ`.
    Identity,
    /// `C(Γ) = L`.
    FullConstant,
    /// `C(Γ) = ∅`; always rejected since the relation would be empty.
    Empty,
}

impl Rule {
    pub const NAMES: [&'static str; 3] = ["identity", "full", "empty"];

    pub fn from_name(name: &str) -> Result<Rule> {
        match name {
            "identity" => Ok(Rule::Identity),
            "full" | "full-constant" => Ok(Rule::FullConstant),
            "empty" => Ok(Rule::Empty),
            other => Err(Error::UnknownRule(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rule::Identity => "identity",
            Rule::FullConstant => "full",
            Rule::Empty => "empty",
        }
    }

    fn apply(self, gamma: Subset, n: usize) -> Subset {
        match self {
            Rule::Identity => gamma,
            Rule::FullConstant => Subset::full(n),
            Rule::Empty => Subset::EMPTY,
        }
    }
}

/// What [`LogicalStructure::build`] consumes.
#[derive(Debug, Clone)]
pub enum Source {
    Table {
        entries: Vec<(Subset, Subset)>,
        default: TableDefault,
    },
    Rule(Rule),
    Bivaluations(BivaluationSet),
}

/// A set of bivaluations, each stored as the subset it is the
/// characteristic function of. May be empty; the empty set induces the
/// total relation, but cannot be used to build a structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BivaluationSet {
    n: usize,
    valuations: BTreeSet<Subset>,
}

impl BivaluationSet {
    pub fn new<I: IntoIterator<Item = Subset>>(n: usize, valuations: I) -> Result<Self> {
        check_carrier(n)?;
        let valuations: BTreeSet<Subset> = valuations.into_iter().collect();
        for &v in &valuations {
            check_fits(v, n)?;
        }
        Ok(BivaluationSet { n, valuations })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.valuations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.valuations.is_empty()
    }

    pub fn contains(&self, v: Subset) -> bool {
        self.valuations.contains(&v)
    }

    /// Valuations in ascending bit order.
    pub fn iter(&self) -> impl Iterator<Item = Subset> + '_ {
        self.valuations.iter().copied()
    }

    pub fn without(&self, v: Subset) -> BivaluationSet {
        let mut out = self.clone();
        out.valuations.remove(&v);
        out
    }

    /// `χ_Σ` satisfies `Γ` exactly when `Γ ⊆ Σ`.
    pub fn satisfies(valuation: Subset, gamma: Subset) -> bool {
        gamma.is_subset_of(valuation)
    }

    /// `C_V(Γ) = {α : every v ∈ V satisfying Γ has v(α) = 1}`, i.e. the
    /// intersection of the members of `V` containing `Γ` (all of `L` when
    /// none do).
    pub fn consequences(&self, gamma: Subset) -> Subset {
        self.valuations
            .iter()
            .filter(|&&v| Self::satisfies(v, gamma))
            .fold(Subset::full(self.n), |acc, &v| acc.intersection(v))
    }

    /// The induced table for every subset, total relation when empty.
    pub fn induced_table(&self) -> Vec<Subset> {
        all_subsets(self.n).map(|g| self.consequences(g)).collect()
    }
}

/// A binary connective on the carrier.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ArrowTable {
    n: usize,
    op: Vec<usize>,
}

impl ArrowTable {
    /// `op[a * n + b]` is `a → b`.
    pub fn new(n: usize, op: Vec<usize>) -> Result<Self> {
        check_carrier(n)?;
        if op.len() != n * n {
            return Err(Error::ArrowShape {
                got: op.len(),
                expected: n * n,
            });
        }
        if let Some(&bad) = op.iter().find(|&&v| v >= n) {
            return Err(Error::Element { elem: bad, n });
        }
        Ok(ArrowTable { n, op })
    }

    /// `a → b = b`.
    pub fn second_projection(n: usize) -> Self {
        let op = (0..n * n).map(|i| i % n).collect();
        ArrowTable { n, op }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn apply(&self, a: usize, b: usize) -> usize {
        self.op[a * self.n + b]
    }

    /// `ξ_α = {α → β : β ∈ L}`.
    pub fn xi(&self, alpha: usize) -> Subset {
        Subset::from_elems((0..self.n).map(|b| self.apply(alpha, b)))
    }

    pub fn entries(&self) -> &[usize] {
        &self.op
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct LogicalStructure {
    n: usize,
    table: Vec<Subset>,
    origin: Origin,
}

impl LogicalStructure {
    /// Builds a structure from any supported source.
    pub fn build(n: usize, source: Source) -> Result<Self> {
        check_carrier(n)?;
        let (table, origin) = match source {
            Source::Table { entries, default } => {
                if let TableDefault::Named(s) = default {
                    check_fits(s, n)?;
                }
                let mut table: Vec<Option<Subset>> = vec![None; 1 << n];
                for (gamma, cons) in entries {
                    check_fits(gamma, n)?;
                    check_fits(cons, n)?;
                    let slot = &mut table[gamma.index()];
                    if slot.is_some() {
                        return Err(Error::DuplicateEntry(gamma));
                    }
                    *slot = Some(cons);
                }
                let table = table
                    .into_iter()
                    .enumerate()
                    .map(|(i, entry)| {
                        entry.unwrap_or(match default {
                            TableDefault::Identity => Subset::from_bits(i as u32),
                            TableDefault::Full => Subset::full(n),
                            TableDefault::Named(s) => s,
                        })
                    })
                    .collect();
                (table, Origin::ExplicitTable)
            }
            Source::Rule(rule) => (
                all_subsets(n).map(|g| rule.apply(g, n)).collect(),
                Origin::Rule(rule.name().to_string()),
            ),
            Source::Bivaluations(v) => {
                if v.n() != n {
                    return Err(Error::SizeMismatch(n, v.n()));
                }
                if v.is_empty() {
                    return Err(Error::EmptyBivaluations);
                }
                (v.induced_table(), Origin::BivaluationInduced)
            }
        };
        Self::from_table(n, table, origin)
    }

    /// Wraps a dense table indexed by subset bits.
    pub fn from_table(n: usize, table: Vec<Subset>, origin: Origin) -> Result<Self> {
        check_carrier(n)?;
        if table.len() != 1 << n {
            return Err(Error::SizeMismatch(1 << n, table.len()));
        }
        for &c in &table {
            check_fits(c, n)?;
        }
        if table.iter().all(|c| c.is_empty()) {
            return Err(Error::EmptyRelation);
        }
        Ok(LogicalStructure { n, table, origin })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::build(n, Source::Rule(Rule::Identity))
    }

    pub fn full_constant(n: usize) -> Result<Self> {
        Self::build(n, Source::Rule(Rule::FullConstant))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn origin(&self) -> &Origin {
        &self.origin
    }

    pub fn table(&self) -> &[Subset] {
        &self.table
    }

    /// `C(Γ)`, checked.
    pub fn consequences(&self, gamma: Subset) -> Result<Subset> {
        check_fits(gamma, self.n)?;
        Ok(self.table[gamma.index()])
    }

    /// `C(Γ)` for a subset already known to fit the carrier.
    #[inline]
    pub fn c(&self, gamma: Subset) -> Subset {
        debug_assert!(gamma.fits(self.n));
        self.table[gamma.index()]
    }

    /// `Γ ⊢ α`.
    pub fn derives(&self, gamma: Subset, alpha: usize) -> Result<bool> {
        self.check_elem(alpha)?;
        Ok(self.consequences(gamma)?.contains(alpha))
    }

    pub fn check_elem(&self, alpha: usize) -> Result<()> {
        if alpha < self.n {
            Ok(())
        } else {
            Err(Error::Element {
                elem: alpha,
                n: self.n,
            })
        }
    }

    pub fn check_subset(&self, gamma: Subset) -> Result<()> {
        check_fits(gamma, self.n)
    }

    /// Restricts the structure to the elements of `keep`, re-indexing them
    /// densely: `C'(Γ) = C(Γ) ∩ keep`.
    pub fn restrict(&self, keep: Subset) -> Result<Self> {
        check_fits(keep, self.n)?;
        let kept: Vec<usize> = keep.elems().collect();
        let m = kept.len();
        check_carrier(m)?;
        let embed = |local: Subset| Subset::from_elems(local.elems().map(|i| kept[i]));
        let project = |global: Subset| {
            Subset::from_elems(
                kept.iter()
                    .enumerate()
                    .filter(|(_, &g)| global.contains(g))
                    .map(|(i, _)| i),
            )
        };
        let table = all_subsets(m).map(|g| project(self.c(embed(g)))).collect();
        Self::from_table(m, table, self.origin.clone())
    }

    /// SHA-256 over the carrier size and the table, hex encoded.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.n as u32).to_le_bytes());
        for c in &self.table {
            h.update(c.bits().to_le_bytes());
        }
        hex::encode(h.finalize())
    }
}

impl fmt::Debug for LogicalStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for g in all_subsets(self.n) {
            m.entry(&g, &self.c(g));
        }
        m.finish()
    }
}

/// First pair `(Γ, α)` with `Γ ⊢₁ α` but not `Γ ⊢₂ α`, scanning `Γ`
/// ascending then `α` ascending. `None` means `⊢₁ ⊆ ⊢₂`.
pub fn subrelation_witness(
    a: &LogicalStructure,
    b: &LogicalStructure,
) -> Result<Option<(Subset, usize)>> {
    if a.n != b.n {
        return Err(Error::SizeMismatch(a.n, b.n));
    }
    Ok(table_excess(&a.table, &b.table))
}

pub fn subrelation(a: &LogicalStructure, b: &LogicalStructure) -> Result<bool> {
    Ok(subrelation_witness(a, b)?.is_none())
}

/// `Some(witness)` from `⊢₂ ∖ ⊢₁` when `⊢₁ ⊊ ⊢₂`; `None` otherwise.
pub fn strict_subrelation(
    a: &LogicalStructure,
    b: &LogicalStructure,
) -> Result<Option<(Subset, usize)>> {
    if !subrelation(a, b)? {
        return Ok(None);
    }
    subrelation_witness(b, a)
}

/// First `(Γ, α)` with `α ∈ lhs[Γ] ∖ rhs[Γ]`.
pub(crate) fn table_excess(lhs: &[Subset], rhs: &[Subset]) -> Option<(Subset, usize)> {
    lhs.iter().zip(rhs).enumerate().find_map(|(i, (&l, &r))| {
        let extra = l.difference(r);
        extra
            .elems()
            .next()
            .map(|alpha| (Subset::from_bits(i as u32), alpha))
    })
}

pub(crate) fn check_carrier(n: usize) -> Result<()> {
    if (1..=MAX_CARRIER).contains(&n) {
        Ok(())
    } else {
        Err(Error::CarrierSize(n))
    }
}

pub(crate) fn check_fits(s: Subset, n: usize) -> Result<()> {
    if s.fits(n) {
        Ok(())
    } else {
        Err(Error::Width { subset: s, n })
    }
}

/// The three-element structure from the Lindenbaum-III/IV-but-not-Tarski
/// separation: `C({0}) = C({0,1}) = {0,1}` and `C(Γ) = L` otherwise.
pub fn three_element_example() -> LogicalStructure {
    let s01 = Subset::from_elems([0, 1]);
    LogicalStructure::build(
        3,
        Source::Table {
            entries: vec![(Subset::singleton(0), s01), (s01, s01)],
            default: TableDefault::Full,
        },
    )
    .expect("fixed table is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(e: &[usize]) -> Subset {
        Subset::from_elems(e.iter().copied())
    }

    #[test]
    fn g5_table() {
        let g5 = three_element_example();
        assert_eq!(g5.consequences(set(&[0])).unwrap(), set(&[0, 1]));
        assert_eq!(g5.consequences(Subset::EMPTY).unwrap(), set(&[0, 1, 2]));
        assert!(!g5.derives(set(&[0, 1]), 2).unwrap());
        assert!(g5.derives(set(&[0, 2]), 1).unwrap());
    }

    #[test]
    fn identity_rule() {
        let id2 = LogicalStructure::identity(2).unwrap();
        assert_eq!(id2.consequences(set(&[1])).unwrap(), set(&[1]));
        assert!(id2.derives(set(&[1]), 1).unwrap());
        let id3 = LogicalStructure::identity(3).unwrap();
        assert_eq!(id3.consequences(set(&[0, 2])).unwrap(), set(&[0, 2]));
    }

    #[test]
    fn all_valuations_induce_identity() {
        let v = BivaluationSet::new(3, all_subsets(3)).unwrap();
        let s = LogicalStructure::build(3, Source::Bivaluations(v)).unwrap();
        for g in all_subsets(3) {
            assert_eq!(s.c(g), g);
        }
        assert_eq!(s.origin(), &Origin::BivaluationInduced);
    }

    #[test]
    fn single_valuation_consequences() {
        let v = BivaluationSet::new(3, [set(&[0, 1])]).unwrap();
        let s = LogicalStructure::build(3, Source::Bivaluations(v)).unwrap();
        assert_eq!(s.consequences(Subset::EMPTY).unwrap(), set(&[0, 1]));
        // nothing satisfies {2}: vacuous
        assert_eq!(s.c(set(&[2])), s.full());
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            LogicalStructure::build(2, Source::Rule(Rule::Empty)).unwrap_err(),
            Error::EmptyRelation
        );
        assert_eq!(
            Rule::from_name("closure").unwrap_err(),
            Error::UnknownRule("closure".into())
        );
        let empty = BivaluationSet::new(2, []).unwrap();
        assert_eq!(
            LogicalStructure::build(2, Source::Bivaluations(empty)).unwrap_err(),
            Error::EmptyBivaluations
        );
        let bad = Source::Table {
            entries: vec![(set(&[3]), Subset::EMPTY)],
            default: TableDefault::Full,
        };
        assert!(matches!(
            LogicalStructure::build(3, bad),
            Err(Error::Width { .. })
        ));
        let dup = Source::Table {
            entries: vec![(set(&[0]), set(&[0])), (set(&[0]), set(&[1]))],
            default: TableDefault::Full,
        };
        assert_eq!(
            LogicalStructure::build(2, dup).unwrap_err(),
            Error::DuplicateEntry(set(&[0]))
        );
        assert_eq!(
            LogicalStructure::identity(17).unwrap_err(),
            Error::CarrierSize(17)
        );
        let id2 = LogicalStructure::identity(2).unwrap();
        assert!(id2.consequences(set(&[2])).is_err());
        assert!(id2.derives(Subset::EMPTY, 2).is_err());
    }

    #[test]
    fn subrelations() {
        let id2 = LogicalStructure::identity(2).unwrap();
        let full2 = LogicalStructure::full_constant(2).unwrap();
        assert!(subrelation(&id2, &full2).unwrap());
        assert!(!subrelation(&full2, &id2).unwrap());
        assert_eq!(
            subrelation_witness(&full2, &id2).unwrap(),
            Some((Subset::EMPTY, 0))
        );
        assert_eq!(
            strict_subrelation(&id2, &full2).unwrap(),
            Some((Subset::EMPTY, 0))
        );
        assert_eq!(strict_subrelation(&id2, &id2).unwrap(), None);
        let id3 = LogicalStructure::identity(3).unwrap();
        assert_eq!(
            subrelation(&id2, &id3).unwrap_err(),
            Error::SizeMismatch(2, 3)
        );
    }

    #[test]
    fn restriction_drops_elements() {
        let g5 = three_element_example();
        let r = g5.restrict(set(&[0, 1])).unwrap();
        assert_eq!(r.n(), 2);
        assert_eq!(r.c(set(&[0])), set(&[0, 1]));
        assert_eq!(r.c(Subset::EMPTY), set(&[0, 1]));
    }

    #[test]
    fn builds_are_deterministic() {
        let a = three_element_example();
        let b = three_element_example();
        assert_eq!(a, b);
        assert_eq!(a.digest(), b.digest());
        assert_ne!(
            a.digest(),
            LogicalStructure::full_constant(3).unwrap().digest()
        );
    }
}
