//! Set-level and structure-level predicates over a finite structure.
//!
//! [`check_set`] and [`check_structure`] expand the quantifiers of each
//! definition directly. [`SetCensus`] computes every set predicate for all
//! subsets at once with superset/subset dynamic programs; [`enumerate_sets`]
//! is built on it.

use std::fmt;

use serde::Serialize;

use crate::budget::Scan;
use crate::error::Result;
use crate::par::Execution;
use crate::structure::{ArrowTable, LogicalStructure};
use crate::subset::{all_subsets, Subset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SetProperty {
    Closed,
    StronglyClosed,
    Trivial,
    Nontrivial,
    AlphaSaturated(usize),
    Saturated,
    RelativelyMaximal(usize),
    MaximalNontrivial,
    MaximalSaturated,
    MaximalAlphaSaturated(usize),
    ArrowSaturated(ArrowTable),
}

impl SetProperty {
    /// Tags accepted by [`SetProperty::from_tag`].
    pub const TAGS: [&'static str; 11] = [
        "closed",
        "strongly-closed",
        "trivial",
        "nontrivial",
        "alpha-saturated",
        "saturated",
        "relatively-maximal",
        "maximal-nontrivial",
        "maximal-saturated",
        "maximal-alpha-saturated",
        "arrow-saturated",
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            SetProperty::Closed => "closed",
            SetProperty::StronglyClosed => "strongly-closed",
            SetProperty::Trivial => "trivial",
            SetProperty::Nontrivial => "nontrivial",
            SetProperty::AlphaSaturated(_) => "alpha-saturated",
            SetProperty::Saturated => "saturated",
            SetProperty::RelativelyMaximal(_) => "relatively-maximal",
            SetProperty::MaximalNontrivial => "maximal-nontrivial",
            SetProperty::MaximalSaturated => "maximal-saturated",
            SetProperty::MaximalAlphaSaturated(_) => "maximal-alpha-saturated",
            SetProperty::ArrowSaturated(_) => "arrow-saturated",
        }
    }

    /// `None` when the tag is unknown or a required parameter is missing.
    pub fn from_tag(tag: &str, alpha: Option<usize>, arrow: Option<ArrowTable>) -> Option<Self> {
        Some(match tag {
            "closed" => SetProperty::Closed,
            "strongly-closed" => SetProperty::StronglyClosed,
            "trivial" => SetProperty::Trivial,
            "nontrivial" => SetProperty::Nontrivial,
            "alpha-saturated" => SetProperty::AlphaSaturated(alpha?),
            "saturated" => SetProperty::Saturated,
            "relatively-maximal" => SetProperty::RelativelyMaximal(alpha?),
            "maximal-nontrivial" => SetProperty::MaximalNontrivial,
            "maximal-saturated" => SetProperty::MaximalSaturated,
            "maximal-alpha-saturated" => SetProperty::MaximalAlphaSaturated(alpha?),
            "arrow-saturated" => SetProperty::ArrowSaturated(arrow?),
            _ => return None,
        })
    }

    fn alpha(&self) -> Option<usize> {
        match self {
            SetProperty::AlphaSaturated(a)
            | SetProperty::RelativelyMaximal(a)
            | SetProperty::MaximalAlphaSaturated(a) => Some(*a),
            _ => None,
        }
    }
}

impl fmt::Display for SetProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alpha() {
            Some(a) => write!(f, "{}({a})", self.tag()),
            None => f.write_str(self.tag()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureProperty {
    Reflexive,
    Monotone,
    Transitive,
    TarskiByDef,
    Cut,
    MixedCut,
    Finitary,
    ModusPonens(ArrowTable),
}

impl StructureProperty {
    pub const TAGS: [&'static str; 8] = [
        "reflexive",
        "monotone",
        "transitive",
        "tarski-by-def",
        "cut",
        "mixed-cut",
        "finitary",
        "modus-ponens",
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            StructureProperty::Reflexive => "reflexive",
            StructureProperty::Monotone => "monotone",
            StructureProperty::Transitive => "transitive",
            StructureProperty::TarskiByDef => "tarski-by-def",
            StructureProperty::Cut => "cut",
            StructureProperty::MixedCut => "mixed-cut",
            StructureProperty::Finitary => "finitary",
            StructureProperty::ModusPonens(_) => "modus-ponens",
        }
    }

    pub fn from_tag(tag: &str, arrow: Option<ArrowTable>) -> Option<Self> {
        Some(match tag {
            "reflexive" => StructureProperty::Reflexive,
            "monotone" => StructureProperty::Monotone,
            "transitive" => StructureProperty::Transitive,
            "tarski-by-def" | "tarski" => StructureProperty::TarskiByDef,
            "cut" => StructureProperty::Cut,
            "mixed-cut" => StructureProperty::MixedCut,
            "finitary" => StructureProperty::Finitary,
            "modus-ponens" => StructureProperty::ModusPonens(arrow?),
            _ => return None,
        })
    }
}

impl fmt::Display for StructureProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Outcome of a decision: either it holds, or a witness of failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict<W> {
    Holds,
    Fails(W),
}

impl<W> Verdict<W> {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds)
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(w),
        }
    }

    fn from_option(w: Option<W>) -> Self {
        w.map_or(Verdict::Holds, Verdict::Fails)
    }
}

/// Why a set lacks a property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SetWitness {
    /// `C(Γ) ≠ Γ`.
    NotClosed { consequences: Subset },
    /// `α ∈ Γ` but `Γ ⊬ α`.
    NotReflexiveAt { alpha: usize },
    /// `Γ′ ⊆ Γ`, `Γ′ ⊢ α`, `α ∉ Γ`.
    SubsetDerives { sub: Subset, alpha: usize },
    /// `Γ ⊬ α` where triviality was required.
    Underives { alpha: usize },
    /// `C(Γ) = L` where nontriviality was required.
    Trivial,
    /// `Γ ⊢ α` where `Γ ⊬ α` was required.
    Derives { alpha: usize },
    /// `β ∉ Γ` with `Γ ∪ {β} ⊬ α`.
    ExtensionUnderives { beta: usize, alpha: usize },
    /// `Σ ⊋ Γ` with `Σ ⊬ α`.
    SupersetUnderives { sigma: Subset, alpha: usize },
    /// `Γ` is not `α`-saturated for any `α`.
    NoTarget,
    /// A strictly larger member of the same family.
    LargerMember { sigma: Subset },
    /// `α ∉ Γ` and `α → β ∉ Γ`.
    ArrowMissing { alpha: usize, beta: usize },
}

impl fmt::Display for SetWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetWitness::NotClosed { consequences } => write!(f, "C(Γ) = {consequences}"),
            SetWitness::NotReflexiveAt { alpha } => write!(f, "{alpha} ∈ Γ but Γ ⊬ {alpha}"),
            SetWitness::SubsetDerives { sub, alpha } => {
                write!(f, "{sub} ⊆ Γ derives {alpha} ∉ Γ")
            }
            SetWitness::Underives { alpha } => write!(f, "Γ ⊬ {alpha}"),
            SetWitness::Trivial => f.write_str("Γ is trivial"),
            SetWitness::Derives { alpha } => write!(f, "Γ ⊢ {alpha}"),
            SetWitness::ExtensionUnderives { beta, alpha } => {
                write!(f, "Γ ∪ {{{beta}}} ⊬ {alpha}")
            }
            SetWitness::SupersetUnderives { sigma, alpha } => write!(f, "{sigma} ⊬ {alpha}"),
            SetWitness::NoTarget => f.write_str("Γ is not α-saturated for any α"),
            SetWitness::LargerMember { sigma } => write!(f, "larger member {sigma}"),
            SetWitness::ArrowMissing { alpha, beta } => {
                write!(f, "{alpha} ∉ Γ but {alpha}→{beta} ∉ Γ")
            }
        }
    }
}

/// A violating instance of a structure-level property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StructureWitness {
    /// `α ∈ Γ`, `Γ ⊬ α`.
    Reflexivity { gamma: Subset, alpha: usize },
    /// `Γ ⊆ Σ`, `Γ ⊢ α`, `Σ ⊬ α`.
    Monotonicity {
        gamma: Subset,
        sigma: Subset,
        alpha: usize,
    },
    /// `Σ ⊆ C(Γ)`, `Σ ⊢ α`, `Γ ⊬ α`.
    Transitivity {
        gamma: Subset,
        sigma: Subset,
        alpha: usize,
    },
    /// `Γ ⊢ α`, `Γ ∪ {α} ⊢ β`, `Γ ⊬ β`.
    Cut {
        gamma: Subset,
        alpha: usize,
        beta: usize,
    },
    /// `Γ ⊢ α`, `Σ ∪ {α} ⊢ β`, `Γ ∪ Σ ⊬ β`.
    MixedCut {
        gamma: Subset,
        sigma: Subset,
        alpha: usize,
        beta: usize,
    },
    /// `Γ ⊢ α`, `Γ ⊢ α → β`, `Γ ⊬ β`.
    ModusPonens {
        gamma: Subset,
        alpha: usize,
        beta: usize,
    },
}

impl fmt::Display for StructureWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureWitness::Reflexivity { gamma, alpha } => {
                write!(f, "{alpha} ∈ {gamma} but {gamma} ⊬ {alpha}")
            }
            StructureWitness::Monotonicity {
                gamma,
                sigma,
                alpha,
            } => {
                write!(f, "{gamma} ⊆ {sigma}, {gamma} ⊢ {alpha}, {sigma} ⊬ {alpha}")
            }
            StructureWitness::Transitivity {
                gamma,
                sigma,
                alpha,
            } => {
                write!(
                    f,
                    "{sigma} ⊆ C({gamma}), {sigma} ⊢ {alpha}, {gamma} ⊬ {alpha}"
                )
            }
            StructureWitness::Cut { gamma, alpha, beta } => write!(
                f,
                "{gamma} ⊢ {alpha}, {gamma} ∪ {{{alpha}}} ⊢ {beta}, {gamma} ⊬ {beta}"
            ),
            StructureWitness::MixedCut {
                gamma,
                sigma,
                alpha,
                beta,
            } => write!(
                f,
                "{gamma} ⊢ {alpha}, {sigma} ∪ {{{alpha}}} ⊢ {beta}, {gamma} ∪ {sigma} ⊬ {beta}"
            ),
            StructureWitness::ModusPonens { gamma, alpha, beta } => write!(
                f,
                "{gamma} ⊢ {alpha}, {gamma} ⊢ {alpha}→{beta}, {gamma} ⊬ {beta}"
            ),
        }
    }
}

pub type SetVerdict = Verdict<SetWitness>;
pub type StructureVerdict = Verdict<StructureWitness>;

/// Decides `prop` for `Γ` by expanding its definition.
pub fn check_set(s: &LogicalStructure, prop: &SetProperty, gamma: Subset) -> Result<SetVerdict> {
    s.check_subset(gamma)?;
    if let Some(a) = prop.alpha() {
        s.check_elem(a)?;
    }
    if let SetProperty::ArrowSaturated(arrow) = prop {
        if arrow.n() != s.n() {
            return Err(crate::Error::SizeMismatch(s.n(), arrow.n()));
        }
    }
    Ok(Verdict::from_option(set_failure(s, prop, gamma)))
}

fn set_failure(s: &LogicalStructure, prop: &SetProperty, gamma: Subset) -> Option<SetWitness> {
    let n = s.n();
    let c = s.c(gamma);
    match prop {
        SetProperty::Closed => (c != gamma).then_some(SetWitness::NotClosed { consequences: c }),
        SetProperty::StronglyClosed => strongly_closed_failure(s, gamma),
        SetProperty::Trivial => c
            .complement(n)
            .elems()
            .next()
            .map(|alpha| SetWitness::Underives { alpha }),
        SetProperty::Nontrivial => (c == s.full()).then_some(SetWitness::Trivial),
        SetProperty::AlphaSaturated(a) => alpha_saturated_failure(s, gamma, *a),
        SetProperty::Saturated => (0..n)
            .all(|a| alpha_saturated_failure(s, gamma, a).is_some())
            .then_some(SetWitness::NoTarget),
        SetProperty::RelativelyMaximal(a) => relmax_failure(s, gamma, *a),
        SetProperty::MaximalNontrivial => {
            if c == s.full() {
                return Some(SetWitness::Trivial);
            }
            gamma
                .supersets(n)
                .filter(|&sg| sg != gamma)
                .find(|&sg| s.c(sg) != s.full())
                .map(|sigma| SetWitness::LargerMember { sigma })
        }
        SetProperty::MaximalSaturated => {
            if let Some(w) = set_failure(s, &SetProperty::Saturated, gamma) {
                return Some(w);
            }
            gamma
                .supersets(n)
                .filter(|&sg| sg != gamma)
                .find(|&sg| set_failure(s, &SetProperty::Saturated, sg).is_none())
                .map(|sigma| SetWitness::LargerMember { sigma })
        }
        SetProperty::MaximalAlphaSaturated(a) => {
            if let Some(w) = alpha_saturated_failure(s, gamma, *a) {
                return Some(w);
            }
            gamma
                .supersets(n)
                .filter(|&sg| sg != gamma)
                .find(|&sg| alpha_saturated_failure(s, sg, *a).is_none())
                .map(|sigma| SetWitness::LargerMember { sigma })
        }
        SetProperty::ArrowSaturated(arrow) => arrow_saturated_failure(arrow, gamma),
    }
}

fn strongly_closed_failure(s: &LogicalStructure, gamma: Subset) -> Option<SetWitness> {
    let c = s.c(gamma);
    if let Some(alpha) = gamma.difference(c).elems().next() {
        return Some(SetWitness::NotReflexiveAt { alpha });
    }
    gamma.subsets().find_map(|sub| {
        s.c(sub)
            .difference(gamma)
            .elems()
            .next()
            .map(|alpha| SetWitness::SubsetDerives { sub, alpha })
    })
}

fn alpha_saturated_failure(s: &LogicalStructure, gamma: Subset, a: usize) -> Option<SetWitness> {
    if s.c(gamma).contains(a) {
        return Some(SetWitness::Derives { alpha: a });
    }
    gamma
        .complement(s.n())
        .elems()
        .find(|&b| !s.c(gamma.with(b)).contains(a))
        .map(|beta| SetWitness::ExtensionUnderives { beta, alpha: a })
}

fn relmax_failure(s: &LogicalStructure, gamma: Subset, a: usize) -> Option<SetWitness> {
    if s.c(gamma).contains(a) {
        return Some(SetWitness::Derives { alpha: a });
    }
    gamma
        .supersets(s.n())
        .filter(|&sg| sg != gamma)
        .find(|&sg| !s.c(sg).contains(a))
        .map(|sigma| SetWitness::SupersetUnderives { sigma, alpha: a })
}

fn arrow_saturated_failure(arrow: &ArrowTable, gamma: Subset) -> Option<SetWitness> {
    let n = arrow.n();
    gamma.complement(n).elems().find_map(|a| {
        (0..n)
            .find(|&b| !gamma.contains(arrow.apply(a, b)))
            .map(|beta| SetWitness::ArrowMissing { alpha: a, beta })
    })
}

/// Decides a structure-level property.
pub fn check_structure(s: &LogicalStructure, prop: &StructureProperty) -> Result<StructureVerdict> {
    let w = match prop {
        StructureProperty::Reflexive => reflexivity_failure(s),
        StructureProperty::Monotone => monotonicity_failure(s),
        StructureProperty::Transitive => {
            Scan::Transitivity.admit(s.n())?;
            transitivity_failure(s)
        }
        StructureProperty::TarskiByDef => {
            Scan::Transitivity.admit(s.n())?;
            reflexivity_failure(s)
                .or_else(|| monotonicity_failure(s))
                .or_else(|| transitivity_failure(s))
        }
        StructureProperty::Cut => cut_failure(s),
        StructureProperty::MixedCut => {
            Scan::MixedCut.admit(s.n())?;
            mixed_cut_failure(s)
        }
        // Every subset of a finite carrier is its own finite witness.
        StructureProperty::Finitary => None,
        StructureProperty::ModusPonens(arrow) => {
            if arrow.n() != s.n() {
                return Err(crate::Error::SizeMismatch(s.n(), arrow.n()));
            }
            modus_ponens_failure(s, arrow)
        }
    };
    Ok(Verdict::from_option(w))
}

fn reflexivity_failure(s: &LogicalStructure) -> Option<StructureWitness> {
    all_subsets(s.n()).find_map(|g| {
        g.difference(s.c(g))
            .elems()
            .next()
            .map(|alpha| StructureWitness::Reflexivity { gamma: g, alpha })
    })
}

// Single-element extensions suffice: a failure along any chain
// Γ ⊆ ... ⊆ Σ shows up at some step.
fn monotonicity_failure(s: &LogicalStructure) -> Option<StructureWitness> {
    let n = s.n();
    all_subsets(n).find_map(|g| {
        g.complement(n).elems().find_map(|b| {
            let sigma = g.with(b);
            s.c(g).difference(s.c(sigma)).elems().next().map(|alpha| {
                StructureWitness::Monotonicity {
                    gamma: g,
                    sigma,
                    alpha,
                }
            })
        })
    })
}

/// `env(Γ) = ⋃_{Γ′ ⊆ Γ} C(Γ′)` for every `Γ`.
pub fn monotone_envelope(table: &[Subset], n: usize) -> Vec<Subset> {
    let mut env = table.to_vec();
    for i in 0..n {
        let bit = 1usize << i;
        for g in 0..env.len() {
            if g & bit != 0 {
                env[g] = env[g].union(env[g ^ bit]);
            }
        }
    }
    env
}

fn transitivity_failure(s: &LogicalStructure) -> Option<StructureWitness> {
    let env = monotone_envelope(s.table(), s.n());
    all_subsets(s.n()).find_map(|g| {
        let cg = s.c(g);
        if env[cg.index()].is_subset_of(cg) {
            return None;
        }
        cg.subsets().find_map(|sigma| {
            s.c(sigma)
                .difference(cg)
                .elems()
                .next()
                .map(|alpha| StructureWitness::Transitivity {
                    gamma: g,
                    sigma,
                    alpha,
                })
        })
    })
}

fn cut_failure(s: &LogicalStructure) -> Option<StructureWitness> {
    all_subsets(s.n()).find_map(|g| {
        let cg = s.c(g);
        cg.elems().find_map(|alpha| {
            s.c(g.with(alpha))
                .difference(cg)
                .elems()
                .next()
                .map(|beta| StructureWitness::Cut {
                    gamma: g,
                    alpha,
                    beta,
                })
        })
    })
}

fn mixed_cut_failure(s: &LogicalStructure) -> Option<StructureWitness> {
    let n = s.n();
    all_subsets(n).find_map(|g| {
        let cg = s.c(g);
        all_subsets(n).find_map(|sigma| {
            let target = s.c(g.union(sigma));
            cg.elems().find_map(|alpha| {
                s.c(sigma.with(alpha))
                    .difference(target)
                    .elems()
                    .next()
                    .map(|beta| StructureWitness::MixedCut {
                        gamma: g,
                        sigma,
                        alpha,
                        beta,
                    })
            })
        })
    })
}

fn modus_ponens_failure(s: &LogicalStructure, arrow: &ArrowTable) -> Option<StructureWitness> {
    let n = s.n();
    all_subsets(n).find_map(|g| {
        let cg = s.c(g);
        cg.elems().find_map(|alpha| {
            (0..n)
                .find(|&beta| cg.contains(arrow.apply(alpha, beta)) && !cg.contains(beta))
                .map(|beta| StructureWitness::ModusPonens {
                    gamma: g,
                    alpha,
                    beta,
                })
        })
    })
}

/// `ξ_α = {α → β : β ∈ L}`.
pub fn xi(s: &LogicalStructure, arrow: &ArrowTable, alpha: usize) -> Result<Subset> {
    s.check_elem(alpha)?;
    if arrow.n() != s.n() {
        return Err(crate::Error::SizeMismatch(s.n(), arrow.n()));
    }
    Ok(arrow.xi(alpha))
}

/// `Γ` is `→`-saturated.
pub fn arrow_saturated(
    s: &LogicalStructure,
    arrow: &ArrowTable,
    gamma: Subset,
) -> Result<SetVerdict> {
    check_set(s, &SetProperty::ArrowSaturated(arrow.clone()), gamma)
}

/// Modus ponens for `arrow`, over all `Γ, α, β`.
pub fn modus_ponens(s: &LogicalStructure, arrow: &ArrowTable) -> Result<StructureVerdict> {
    check_structure(s, &StructureProperty::ModusPonens(arrow.clone()))
}

/// First `(Σ, β)` with `β ∉ Σ` and `C(Σ ∪ ξ_β) ⊄ C(Σ)`, or `None`.
pub fn xi_absorption_failure(s: &LogicalStructure, arrow: &ArrowTable) -> Option<(Subset, usize)> {
    let n = s.n();
    all_subsets(n).find_map(|sigma| {
        sigma
            .complement(n)
            .elems()
            .find(|&b| !s.c(sigma.union(arrow.xi(b))).is_subset_of(s.c(sigma)))
            .map(|b| (sigma, b))
    })
}

/// All subsets with `prop`, ascending by bit pattern.
pub fn enumerate_sets(s: &LogicalStructure, prop: &SetProperty) -> Result<Vec<Subset>> {
    enumerate_sets_with(s, prop, Execution::default())
}

pub fn enumerate_sets_with(
    s: &LogicalStructure,
    prop: &SetProperty,
    exec: Execution,
) -> Result<Vec<Subset>> {
    if let Some(a) = prop.alpha() {
        s.check_elem(a)?;
    }
    if let SetProperty::ArrowSaturated(arrow) = prop {
        if arrow.n() != s.n() {
            return Err(crate::Error::SizeMismatch(s.n(), arrow.n()));
        }
        let keep = exec.map(1 << s.n(), |i| {
            arrow_saturated_failure(arrow, Subset::from_bits(i as u32)).is_none()
        });
        return Ok(select(&keep));
    }
    let census = SetCensus::compute_with(s, exec);
    Ok(census.members(prop))
}

fn select(keep: &[bool]) -> Vec<Subset> {
    keep.iter()
        .enumerate()
        .filter(|(_, &k)| k)
        .map(|(i, _)| Subset::from_bits(i as u32))
        .collect()
}

/// Every set predicate for every subset, computed in `O(2^n · n)` passes.
#[derive(Debug, Clone)]
pub struct SetCensus {
    n: usize,
    table: Vec<Subset>,
    /// `⋃_{Γ′ ⊆ Γ} C(Γ′)`.
    envelope: Vec<Subset>,
    /// `{α : Γ α-saturated}`.
    sat: Vec<Subset>,
    /// `⋂_{Σ ⊋ Γ} C(Σ)`, `L` for `Γ = L`.
    above: Vec<Subset>,
    /// `{α : some Σ ⊋ Γ is α-saturated}`.
    sat_above: Vec<Subset>,
}

impl SetCensus {
    pub fn compute(s: &LogicalStructure) -> Self {
        Self::compute_with(s, Execution::default())
    }

    pub fn compute_with(s: &LogicalStructure, exec: Execution) -> Self {
        let n = s.n();
        let full = s.full();
        let size = 1usize << n;
        let table = s.table().to_vec();
        let envelope = monotone_envelope(&table, n);
        let sat = exec.map(size, |i| {
            let g = Subset::from_bits(i as u32);
            g.complement(n)
                .elems()
                .fold(table[i].complement(n), |m, b| {
                    m.intersection(table[g.with(b).index()])
                })
        });
        // Supersets have larger indices, so a descending sweep sees them first.
        let mut up = vec![full; size];
        let mut above = vec![full; size];
        let mut sat_up = vec![Subset::EMPTY; size];
        let mut sat_above = vec![Subset::EMPTY; size];
        for i in (0..size).rev() {
            let g = Subset::from_bits(i as u32);
            let mut a = full;
            let mut e = Subset::EMPTY;
            for b in g.complement(n).elems() {
                let j = g.with(b).index();
                a = a.intersection(up[j]);
                e = e.union(sat_up[j]);
            }
            above[i] = a;
            up[i] = a.intersection(table[i]);
            sat_above[i] = e;
            sat_up[i] = e.union(sat[i]);
        }
        SetCensus {
            n,
            table,
            envelope,
            sat,
            above,
            sat_above,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn full(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn closed(&self, g: Subset) -> bool {
        self.table[g.index()] == g
    }

    pub fn strongly_closed(&self, g: Subset) -> bool {
        g.is_subset_of(self.table[g.index()]) && self.envelope[g.index()].is_subset_of(g)
    }

    pub fn trivial(&self, g: Subset) -> bool {
        self.table[g.index()] == self.full()
    }

    /// `{α : Γ α-saturated}`.
    pub fn saturated_in(&self, g: Subset) -> Subset {
        self.sat[g.index()]
    }

    pub fn saturated(&self, g: Subset) -> bool {
        !self.sat[g.index()].is_empty()
    }

    /// `{α : Γ relatively maximal in α}`.
    pub fn relmax_in(&self, g: Subset) -> Subset {
        self.above[g.index()].difference(self.table[g.index()])
    }

    pub fn maximal_nontrivial(&self, g: Subset) -> bool {
        !self.trivial(g) && self.above[g.index()] == self.full()
    }

    pub fn maximal_saturated(&self, g: Subset) -> bool {
        self.saturated(g) && self.sat_above[g.index()].is_empty()
    }

    /// `{α : Γ maximal α-saturated}`.
    pub fn maximal_saturated_in(&self, g: Subset) -> Subset {
        self.sat[g.index()].difference(self.sat_above[g.index()])
    }

    /// `prop` at `Γ`; arrow saturation is not tabulated and returns `None`.
    pub fn test(&self, prop: &SetProperty, g: Subset) -> Option<bool> {
        Some(match prop {
            SetProperty::Closed => self.closed(g),
            SetProperty::StronglyClosed => self.strongly_closed(g),
            SetProperty::Trivial => self.trivial(g),
            SetProperty::Nontrivial => !self.trivial(g),
            SetProperty::AlphaSaturated(a) => self.saturated_in(g).contains(*a),
            SetProperty::Saturated => self.saturated(g),
            SetProperty::RelativelyMaximal(a) => self.relmax_in(g).contains(*a),
            SetProperty::MaximalNontrivial => self.maximal_nontrivial(g),
            SetProperty::MaximalSaturated => self.maximal_saturated(g),
            SetProperty::MaximalAlphaSaturated(a) => self.maximal_saturated_in(g).contains(*a),
            SetProperty::ArrowSaturated(_) => return None,
        })
    }

    /// Members of a tabulated family in ascending order.
    pub fn members(&self, prop: &SetProperty) -> Vec<Subset> {
        all_subsets(self.n)
            .filter(|&g| self.test(prop, g).unwrap_or(false))
            .collect()
    }
}
