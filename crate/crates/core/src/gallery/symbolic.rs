//! Descriptors for subsets of the infinite gallery carriers.
//!
//! Carrier elements are ordinals below ω·2; the ℕ and ℤ⁺ carriers use the
//! finite ones. Descriptors that mention the carrier (`Cofinite`,
//! `MarkedInfinite`, `FullCarrier`) are read relative to it.

use std::fmt;

use serde::{Serialize, Serializer};

use super::ordinal::Ordinal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Marked {
    EvenNaturals,
    OddNaturals,
    /// `{ω+n : n ∈ ω}`.
    OmegaTail,
}

impl Marked {
    pub fn contains(self, e: Ordinal) -> bool {
        match self {
            Marked::EvenNaturals => e.as_nat().is_some_and(|n| n % 2 == 0),
            Marked::OddNaturals => e.as_nat().is_some_and(|n| n % 2 == 1),
            Marked::OmegaTail => !e.is_finite(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Marked::EvenNaturals => "evens",
            Marked::OddNaturals => "odds",
            Marked::OmegaTail => "ω-tail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SymbolicSet {
    /// Sorted, duplicate-free.
    FiniteExplicit(Vec<Ordinal>),
    Downset(Ordinal),
    FiniteUnionDownset(Ordinal, Vec<Ordinal>),
    /// `mℤ⁺` for a squarefree `m > 1`; a prime `m` in the common case.
    MultiplesOf(u64),
    MultiplesUnion(u64, Vec<Ordinal>),
    /// The carrier minus finitely many elements.
    Cofinite(Vec<Ordinal>),
    MarkedInfinite(Marked),
    FullCarrier,
}

fn canonical(mut xs: Vec<Ordinal>) -> Vec<Ordinal> {
    xs.sort_unstable();
    xs.dedup();
    xs
}

impl SymbolicSet {
    pub fn finite<I: IntoIterator<Item = Ordinal>>(elems: I) -> Self {
        SymbolicSet::FiniteExplicit(canonical(elems.into_iter().collect()))
    }

    pub fn nats<I: IntoIterator<Item = u64>>(elems: I) -> Self {
        Self::finite(elems.into_iter().map(Ordinal::nat))
    }

    pub fn empty() -> Self {
        SymbolicSet::FiniteExplicit(Vec::new())
    }

    pub fn cofinite<I: IntoIterator<Item = Ordinal>>(missing: I) -> Self {
        SymbolicSet::Cofinite(canonical(missing.into_iter().collect()))
    }

    pub fn contains(&self, e: Ordinal) -> bool {
        let multiple = |m: u64| e.as_nat().is_some_and(|n| n > 0 && n % m == 0);
        match self {
            SymbolicSet::FiniteExplicit(xs) => xs.binary_search(&e).is_ok(),
            SymbolicSet::Downset(b) => b.contains(e),
            SymbolicSet::FiniteUnionDownset(b, xs) => b.contains(e) || xs.binary_search(&e).is_ok(),
            SymbolicSet::MultiplesOf(m) => multiple(*m),
            SymbolicSet::MultiplesUnion(m, xs) => multiple(*m) || xs.binary_search(&e).is_ok(),
            SymbolicSet::Cofinite(xs) => xs.binary_search(&e).is_err(),
            SymbolicSet::MarkedInfinite(k) => k.contains(e),
            SymbolicSet::FullCarrier => true,
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            SymbolicSet::FiniteExplicit(_) => true,
            SymbolicSet::Downset(b) | SymbolicSet::FiniteUnionDownset(b, _) => b.is_finite(),
            _ => false,
        }
    }

    /// The members, when there are finitely many.
    pub fn finite_elems(&self) -> Option<Vec<Ordinal>> {
        let below = |b: Ordinal| {
            b.as_nat()
                .map(|n| (0..n).map(Ordinal::nat).collect::<Vec<_>>())
        };
        match self {
            SymbolicSet::FiniteExplicit(xs) => Some(xs.clone()),
            SymbolicSet::Downset(b) => below(*b),
            SymbolicSet::FiniteUnionDownset(b, xs) => {
                below(*b).map(|d| canonical(d.into_iter().chain(xs.iter().copied()).collect()))
            }
            _ => None,
        }
    }

    pub fn finite_len(&self) -> Option<usize> {
        self.finite_elems().map(|xs| xs.len())
    }

    /// `self ∪ extra`, or `None` when the union has no descriptor.
    pub fn with<I: IntoIterator<Item = Ordinal>>(&self, extra: I) -> Option<Self> {
        let extra: Vec<Ordinal> = extra.into_iter().collect();
        let merged = |xs: &[Ordinal]| canonical(xs.iter().chain(&extra).copied().collect());
        Some(match self {
            SymbolicSet::FiniteExplicit(xs) => SymbolicSet::FiniteExplicit(merged(xs)),
            SymbolicSet::Downset(b) | SymbolicSet::FiniteUnionDownset(b, _) => {
                let xs = match self {
                    SymbolicSet::FiniteUnionDownset(_, xs) => merged(xs),
                    _ => merged(&[]),
                };
                let xs: Vec<Ordinal> = xs.into_iter().filter(|x| !b.contains(*x)).collect();
                if xs.is_empty() {
                    SymbolicSet::Downset(*b)
                } else {
                    SymbolicSet::FiniteUnionDownset(*b, xs)
                }
            }
            SymbolicSet::MultiplesOf(m) | SymbolicSet::MultiplesUnion(m, _) => {
                let xs = match self {
                    SymbolicSet::MultiplesUnion(_, xs) => merged(xs),
                    _ => merged(&[]),
                };
                let base = SymbolicSet::MultiplesOf(*m);
                let xs: Vec<Ordinal> = xs.into_iter().filter(|x| !base.contains(*x)).collect();
                if xs.is_empty() {
                    base
                } else {
                    SymbolicSet::MultiplesUnion(*m, xs)
                }
            }
            SymbolicSet::Cofinite(xs) => {
                SymbolicSet::Cofinite(xs.iter().copied().filter(|x| !extra.contains(x)).collect())
            }
            SymbolicSet::MarkedInfinite(k) => {
                if extra.iter().all(|&x| k.contains(x)) {
                    self.clone()
                } else {
                    return None;
                }
            }
            SymbolicSet::FullCarrier => SymbolicSet::FullCarrier,
        })
    }
}

fn write_elems(f: &mut fmt::Formatter<'_>, xs: &[Ordinal]) -> fmt::Result {
    f.write_str("{")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("}")
}

impl fmt::Display for SymbolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicSet::FiniteExplicit(xs) => write_elems(f, xs),
            SymbolicSet::Downset(b) => write!(f, "↓{b}"),
            SymbolicSet::FiniteUnionDownset(b, xs) => {
                write!(f, "↓{b} ∪ ")?;
                write_elems(f, xs)
            }
            SymbolicSet::MultiplesOf(m) => write!(f, "{m}ℤ⁺"),
            SymbolicSet::MultiplesUnion(m, xs) => {
                write!(f, "{m}ℤ⁺ ∪ ")?;
                write_elems(f, xs)
            }
            SymbolicSet::Cofinite(xs) => {
                f.write_str("L∖")?;
                write_elems(f, xs)
            }
            SymbolicSet::MarkedInfinite(k) => f.write_str(k.name()),
            SymbolicSet::FullCarrier => f.write_str("L"),
        }
    }
}

impl Serialize for SymbolicSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Ordinal {
        Ordinal::nat(n)
    }

    #[test]
    fn membership() {
        let g = SymbolicSet::FiniteUnionDownset(Ordinal::OMEGA, vec![Ordinal::omega_plus(3)]);
        assert!(g.contains(nat(40)) && g.contains(Ordinal::omega_plus(3)));
        assert!(!g.contains(Ordinal::OMEGA));
        assert!(SymbolicSet::MultiplesOf(6).contains(nat(12)));
        assert!(!SymbolicSet::MultiplesOf(6).contains(nat(0)));
        assert!(!SymbolicSet::cofinite([nat(2)]).contains(nat(2)));
        assert!(SymbolicSet::MarkedInfinite(Marked::OmegaTail).contains(Ordinal::OMEGA));
    }

    #[test]
    fn finiteness() {
        assert_eq!(SymbolicSet::Downset(nat(3)).finite_len(), Some(3));
        assert_eq!(SymbolicSet::Downset(Ordinal::OMEGA).finite_len(), None);
        assert_eq!(SymbolicSet::nats([4, 7, 4]).finite_len(), Some(2));
        assert!(!SymbolicSet::MultiplesOf(2).is_finite());
    }

    #[test]
    fn unions() {
        let d = SymbolicSet::Downset(nat(2)).with([nat(1), nat(5)]).unwrap();
        assert_eq!(d, SymbolicSet::FiniteUnionDownset(nat(2), vec![nat(5)]));
        assert_eq!(d.finite_len(), Some(3));
        let m = SymbolicSet::MultiplesOf(2).with([nat(4), nat(3)]).unwrap();
        assert_eq!(m, SymbolicSet::MultiplesUnion(2, vec![nat(3)]));
        assert_eq!(
            SymbolicSet::cofinite([nat(1), nat(2)])
                .with([nat(2)])
                .unwrap(),
            SymbolicSet::cofinite([nat(1)])
        );
        assert!(SymbolicSet::MarkedInfinite(Marked::EvenNaturals)
            .with([nat(3)])
            .is_none());
    }

    #[test]
    fn display() {
        assert_eq!(SymbolicSet::nats([4, 7]).to_string(), "{4 7}");
        assert_eq!(SymbolicSet::cofinite([nat(2)]).to_string(), "L∖{2}");
        assert_eq!(
            SymbolicSet::Downset(Ordinal::omega_plus(1)).to_string(),
            "↓ω+1"
        );
    }
}
