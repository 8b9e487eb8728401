//! Separating examples over symbolic carriers.
//!
//! Each item carries its consequence rule over [`SymbolicSet`] descriptors
//! and a claim script (see [`claims`]) whose quantifiers over the infinite
//! carrier are reduced to a finite case grid.

pub mod claims;
pub mod ordinal;
pub mod symbolic;

use std::fmt;

use serde::Serialize;

pub use claims::{run_all, run_claims, ClaimOutcome, ClaimReport, Discharge};
pub use ordinal::{ord_least_containing, Ordinal};
pub use symbolic::{Marked, SymbolicSet};

use crate::error::{Error, Result};
use crate::structure::{check_carrier, three_element_example, LogicalStructure, Origin};
use crate::subset::{all_subsets, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum GalleryId {
    #[serde(rename = "G1-parity")]
    G1Parity,
    #[serde(rename = "G2-lambda0")]
    G2Lambda0,
    #[serde(rename = "G3-nat-card")]
    G3NatCard,
    #[serde(rename = "G4-finite-or-all")]
    G4FiniteOrAll,
    #[serde(rename = "G5-three-elem")]
    G5ThreeElem,
    #[serde(rename = "G6-omega-patched")]
    G6OmegaPatched,
    #[serde(rename = "G7-omega-plain")]
    G7OmegaPlain,
    #[serde(rename = "G8-prime-multiples")]
    G8PrimeMultiples,
}

impl GalleryId {
    pub const ALL: [GalleryId; 8] = [
        GalleryId::G1Parity,
        GalleryId::G2Lambda0,
        GalleryId::G3NatCard,
        GalleryId::G4FiniteOrAll,
        GalleryId::G5ThreeElem,
        GalleryId::G6OmegaPatched,
        GalleryId::G7OmegaPlain,
        GalleryId::G8PrimeMultiples,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GalleryId::G1Parity => "G1-parity",
            GalleryId::G2Lambda0 => "G2-lambda0",
            GalleryId::G3NatCard => "G3-nat-card",
            GalleryId::G4FiniteOrAll => "G4-finite-or-all",
            GalleryId::G5ThreeElem => "G5-three-elem",
            GalleryId::G6OmegaPatched => "G6-omega-patched",
            GalleryId::G7OmegaPlain => "G7-omega-plain",
            GalleryId::G8PrimeMultiples => "G8-prime-multiples",
        }
    }

    /// Accepts the full id or its short prefix, e.g. `G6`.
    pub fn from_name(name: &str) -> Result<Self> {
        GalleryId::ALL
            .into_iter()
            .find(|id| {
                let full = id.name();
                full.eq_ignore_ascii_case(name) || full[..2].eq_ignore_ascii_case(name)
            })
            .ok_or_else(|| Error::UnknownGallery(name.to_string()))
    }

    pub fn carrier(self) -> Carrier {
        match self {
            GalleryId::G1Parity
            | GalleryId::G2Lambda0
            | GalleryId::G3NatCard
            | GalleryId::G4FiniteOrAll => Carrier::Naturals,
            GalleryId::G5ThreeElem => Carrier::ThreeElem,
            GalleryId::G6OmegaPatched | GalleryId::G7OmegaPlain => Carrier::OmegaTwo,
            GalleryId::G8PrimeMultiples => Carrier::Positive,
        }
    }

    pub fn rule(self) -> &'static str {
        match self {
            GalleryId::G1Parity => "C(Γ) = ∅ if Γ is finite with |Γ| odd, L otherwise",
            GalleryId::G2Lambda0 => "C(Γ) = Λ₀ if Γ is finite, L∖Λ₀ if Γ = L, L otherwise",
            GalleryId::G3NatCard => "C(Γ) = ℕ∖{|Γ|} if Γ is finite, ℕ otherwise",
            GalleryId::G4FiniteOrAll => "C(Γ) = Γ if Γ is finite, ℕ otherwise",
            GalleryId::G5ThreeElem => "C({0}) = C({0,1}) = {0,1}, L otherwise",
            GalleryId::G6OmegaPatched => "C(Γ) = ⋂OC(Γ), except ω+1 where that is ω",
            GalleryId::G7OmegaPlain => "C(Γ) = ⋂OC(Γ)",
            GalleryId::G8PrimeMultiples => {
                "C(Γ) = Γ if finite inside some pℤ⁺, ⋂{qℤ⁺ ⊇ Γ} if infinite inside one, ℤ⁺ otherwise"
            }
        }
    }
}

impl fmt::Display for GalleryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Carrier {
    Naturals,
    Positive,
    ThreeElem,
    OmegaTwo,
}

impl Carrier {
    pub fn name(self) -> &'static str {
        match self {
            Carrier::Naturals => "ℕ",
            Carrier::Positive => "ℤ⁺",
            Carrier::ThreeElem => "{0,1,2}",
            Carrier::OmegaTwo => "ω+ω",
        }
    }

    pub fn has(self, e: Ordinal) -> bool {
        match self {
            Carrier::Naturals => e.is_finite(),
            Carrier::Positive => e.as_nat().is_some_and(|n| n > 0),
            Carrier::ThreeElem => e.as_nat().is_some_and(|n| n < 3),
            Carrier::OmegaTwo => true,
        }
    }
}

/// A gallery example with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalleryItem {
    id: GalleryId,
    lambda0: SymbolicSet,
}

impl GalleryItem {
    /// Uses the even numbers for Λ₀.
    pub fn new(id: GalleryId) -> Self {
        GalleryItem {
            id,
            lambda0: SymbolicSet::MarkedInfinite(Marked::EvenNaturals),
        }
    }

    /// G2 with a chosen `∅ ≠ Λ₀ ⊊ ℕ`.
    pub fn lambda0(lambda0: SymbolicSet) -> Result<Self> {
        let ok = match &lambda0 {
            SymbolicSet::FiniteExplicit(xs) | SymbolicSet::Cofinite(xs) => {
                !xs.is_empty() && xs.iter().all(|x| x.is_finite())
            }
            SymbolicSet::MarkedInfinite(Marked::EvenNaturals | Marked::OddNaturals) => true,
            _ => false,
        };
        if !ok {
            return Err(Error::Descriptor {
                gallery: GalleryId::G2Lambda0.name(),
                descriptor: lambda0.to_string(),
            });
        }
        Ok(GalleryItem {
            id: GalleryId::G2Lambda0,
            lambda0,
        })
    }

    pub fn id(&self) -> GalleryId {
        self.id
    }

    pub fn carrier(&self) -> Carrier {
        self.id.carrier()
    }

    fn reject(&self, gamma: &SymbolicSet) -> Error {
        Error::Descriptor {
            gallery: self.id.name(),
            descriptor: gamma.to_string(),
        }
    }

    fn validate(&self, gamma: &SymbolicSet) -> Result<()> {
        use SymbolicSet as S;
        let carrier = self.carrier();
        let elems_ok = |xs: &[Ordinal]| xs.iter().all(|&x| carrier.has(x));
        let ok = match (carrier, gamma) {
            (_, S::FullCarrier) => true,
            (_, S::FiniteExplicit(xs)) => elems_ok(xs),
            (Carrier::ThreeElem, _) => false,
            (_, S::Cofinite(xs)) => elems_ok(xs),
            (_, S::MarkedInfinite(Marked::OmegaTail)) => carrier == Carrier::OmegaTwo,
            (_, S::MarkedInfinite(_)) => true,
            (Carrier::OmegaTwo, S::Downset(_)) => true,
            (Carrier::OmegaTwo, S::FiniteUnionDownset(_, xs)) => elems_ok(xs),
            (Carrier::Positive, S::MultiplesOf(m)) => squarefree(*m),
            (Carrier::Positive, S::MultiplesUnion(m, xs)) => squarefree(*m) && elems_ok(xs),
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(self.reject(gamma))
        }
    }

    /// `Γ = L` for the item's carrier.
    pub fn is_full(&self, gamma: &SymbolicSet) -> bool {
        match gamma {
            SymbolicSet::FullCarrier => true,
            SymbolicSet::Cofinite(xs) => xs.is_empty(),
            SymbolicSet::FiniteExplicit(xs) => {
                self.carrier() == Carrier::ThreeElem && xs.len() == 3
            }
            _ => false,
        }
    }

    /// Applies the item's rule to `Γ`.
    pub fn consequences(&self, gamma: &SymbolicSet) -> Result<SymbolicSet> {
        self.validate(gamma)?;
        Ok(match self.id {
            GalleryId::G1Parity => match gamma.finite_len() {
                Some(k) if k % 2 == 1 => SymbolicSet::empty(),
                _ => SymbolicSet::FullCarrier,
            },
            GalleryId::G2Lambda0 => {
                if gamma.is_finite() {
                    self.lambda0.clone()
                } else if self.is_full(gamma) {
                    complement(&self.lambda0)
                } else {
                    SymbolicSet::FullCarrier
                }
            }
            GalleryId::G3NatCard => match gamma.finite_len() {
                Some(k) => SymbolicSet::cofinite([Ordinal::nat(k as u64)]),
                None => SymbolicSet::FullCarrier,
            },
            GalleryId::G4FiniteOrAll => {
                if gamma.is_finite() {
                    gamma.clone()
                } else {
                    SymbolicSet::FullCarrier
                }
            }
            GalleryId::G5ThreeElem => {
                let s = three_element_example();
                let g = match gamma {
                    SymbolicSet::FiniteExplicit(xs) => {
                        Subset::from_elems(xs.iter().map(|x| x.finite_part() as usize))
                    }
                    _ => s.full(),
                };
                SymbolicSet::nats(s.c(g).elems().map(|e| e as u64))
            }
            GalleryId::G6OmegaPatched => {
                let b = ord_least_containing(gamma)?;
                if b == Ordinal::OMEGA {
                    SymbolicSet::Downset(Ordinal::omega_plus(1))
                } else {
                    SymbolicSet::Downset(b)
                }
            }
            GalleryId::G7OmegaPlain => SymbolicSet::Downset(ord_least_containing(gamma)?),
            GalleryId::G8PrimeMultiples => {
                let g = gcd_of(gamma);
                match (gamma.is_finite(), g) {
                    (true, 0) => gamma.clone(),
                    (_, 0 | 1) => SymbolicSet::FullCarrier,
                    (true, _) => gamma.clone(),
                    (false, g) => SymbolicSet::MultiplesOf(radical(g)),
                }
            }
        })
    }

    pub fn derives(&self, gamma: &SymbolicSet, alpha: Ordinal) -> Result<bool> {
        Ok(self.consequences(gamma)?.contains(alpha))
    }

    pub fn trivial(&self, gamma: &SymbolicSet) -> Result<bool> {
        Ok(self.is_full(&self.consequences(gamma)?))
    }

    /// `a ⊆ b` for descriptors over the item's carrier.
    pub fn subset_of(&self, a: &SymbolicSet, b: &SymbolicSet) -> bool {
        use SymbolicSet as S;
        if let Some(xs) = a.finite_elems() {
            return xs.iter().all(|&x| b.contains(x));
        }
        if self.is_full(b) {
            return true;
        }
        match a {
            S::Downset(alpha) | S::FiniteUnionDownset(alpha, _) => {
                let extra_ok = match a {
                    S::FiniteUnionDownset(_, xs) => xs.iter().all(|&x| b.contains(x)),
                    _ => true,
                };
                let down_ok = match b {
                    S::Downset(beta) => alpha <= beta,
                    S::FiniteUnionDownset(beta, ys) => {
                        alpha <= beta
                            || (!beta.is_finite()
                                && (beta.finite_part()..alpha.finite_part())
                                    .all(|k| ys.contains(&Ordinal::omega_plus(k))))
                    }
                    S::Cofinite(ys) => ys.iter().all(|y| !alpha.contains(*y)),
                    _ => false,
                };
                extra_ok && down_ok
            }
            S::MultiplesOf(m) | S::MultiplesUnion(m, _) => {
                let extra_ok = match a {
                    S::MultiplesUnion(_, xs) => xs.iter().all(|&x| b.contains(x)),
                    _ => true,
                };
                let base_ok = match b {
                    S::MultiplesOf(k) | S::MultiplesUnion(k, _) => m % k == 0,
                    S::MarkedInfinite(Marked::EvenNaturals) => m % 2 == 0,
                    S::Cofinite(ys) => ys.iter().all(|&y| !a.contains(y)),
                    _ => false,
                };
                extra_ok && base_ok
            }
            S::Cofinite(xs) => match b {
                S::Cofinite(ys) => ys.iter().all(|y| xs.contains(y)),
                _ => false,
            },
            S::MarkedInfinite(k) => match b {
                S::MarkedInfinite(j) => k == j,
                S::Cofinite(ys) => ys.iter().all(|&y| !k.contains(y)),
                S::Downset(beta) | S::FiniteUnionDownset(beta, _) => {
                    *k != Marked::OmegaTail && !beta.is_finite()
                }
                S::MultiplesOf(2) | S::MultiplesUnion(2, _) => {
                    *k == Marked::EvenNaturals && self.carrier() == Carrier::Positive
                }
                _ => false,
            },
            S::FullCarrier => false,
            S::FiniteExplicit(_) => unreachable!("finite descriptors handled above"),
        }
    }
}

fn complement(lambda0: &SymbolicSet) -> SymbolicSet {
    match lambda0 {
        SymbolicSet::FiniteExplicit(xs) => SymbolicSet::Cofinite(xs.clone()),
        SymbolicSet::Cofinite(xs) => SymbolicSet::FiniteExplicit(xs.clone()),
        SymbolicSet::MarkedInfinite(Marked::EvenNaturals) => {
            SymbolicSet::MarkedInfinite(Marked::OddNaturals)
        }
        SymbolicSet::MarkedInfinite(Marked::OddNaturals) => {
            SymbolicSet::MarkedInfinite(Marked::EvenNaturals)
        }
        other => unreachable!("Λ₀ validated at construction: {other}"),
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// gcd of all members of a ℤ⁺ descriptor; 0 for the empty set.
fn gcd_of(gamma: &SymbolicSet) -> u64 {
    let fold = |start: u64, xs: &[Ordinal]| xs.iter().fold(start, |g, x| gcd(g, x.finite_part()));
    match gamma {
        SymbolicSet::FiniteExplicit(xs) => fold(0, xs),
        SymbolicSet::MultiplesOf(m) => *m,
        SymbolicSet::MultiplesUnion(m, xs) => fold(*m, xs),
        SymbolicSet::MarkedInfinite(Marked::EvenNaturals) => 2,
        _ => 1,
    }
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn radical(m: u64) -> u64 {
    prime_factors(m).into_iter().product()
}

fn squarefree(m: u64) -> bool {
    m > 1 && radical(m) == m
}

/// The window element at index `i`.
fn window_elem(id: GalleryId, i: usize) -> Ordinal {
    match id.carrier() {
        Carrier::Positive => Ordinal::nat(i as u64 + 1),
        _ => Ordinal::nat(i as u64),
    }
}

/// The finite structure on the first `m` carrier elements with
/// `C_W(Γ) = C(Γ) ∩ W`. G5 ignores `m`.
pub fn window_structure(item: &GalleryItem, m: usize) -> Result<LogicalStructure> {
    if item.id == GalleryId::G5ThreeElem {
        return Ok(three_element_example());
    }
    check_carrier(m)?;
    let table = all_subsets(m)
        .map(|g| {
            let gamma = SymbolicSet::finite(g.elems().map(|i| window_elem(item.id, i)));
            let c = item.consequences(&gamma)?;
            Ok(Subset::from_elems(
                (0..m).filter(|&i| c.contains(window_elem(item.id, i))),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    LogicalStructure::from_table(
        m,
        table,
        Origin::Rule(format!("{}-window-{m}", item.id.name())),
    )
}
