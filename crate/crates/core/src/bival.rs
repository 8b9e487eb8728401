//! Distinguished bivaluation sets and the semantic checks built on them.
//!
//! An empty valuation set induces the total relation (`⊢_∅`). Such a set can
//! be extracted and compared, but never turned into a [`LogicalStructure`].

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::classify::{classify, Class};
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::properties::SetCensus;
use crate::structure::{table_excess, BivaluationSet, LogicalStructure, Source};
use crate::subset::{all_subsets, Subset};

/// Witness lists in comparison reports are cut off at this length.
pub const WITNESS_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BivalKind {
    /// Strongly closed saturated sets.
    Scs,
    /// The `(β, α)` buckets of SCS.
    ScsStar,
    /// Sets relatively maximal in some `α`.
    Relmax,
    /// All closed sets.
    SuszkoClosed,
}

impl BivalKind {
    pub const ALL: [BivalKind; 4] = [
        BivalKind::Scs,
        BivalKind::ScsStar,
        BivalKind::Relmax,
        BivalKind::SuszkoClosed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BivalKind::Scs => "scs",
            BivalKind::ScsStar => "scs-star",
            BivalKind::Relmax => "relmax",
            BivalKind::SuszkoClosed => "suszko",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        BivalKind::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for BivalKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedBivaluationSet {
    pub kind: BivalKind,
    pub base: BivaluationSet,
    /// For SCS*, every `(β, α)` bucket each member belongs to.
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub buckets: BTreeMap<Subset, Vec<(usize, usize)>>,
}

/// Builds one of the named valuation sets.
pub fn extract(s: &LogicalStructure, kind: BivalKind) -> NamedBivaluationSet {
    extract_from(s, &SetCensus::compute(s), kind)
}

pub fn extract_from(
    s: &LogicalStructure,
    census: &SetCensus,
    kind: BivalKind,
) -> NamedBivaluationSet {
    let n = s.n();
    let mut buckets = BTreeMap::new();
    let members: Vec<Subset> = match kind {
        BivalKind::Scs => all_subsets(n)
            .filter(|&g| census.strongly_closed(g) && census.saturated(g))
            .collect(),
        BivalKind::ScsStar => {
            for g in all_subsets(n).filter(|&g| census.strongly_closed(g)) {
                let mut tags = Vec::new();
                for b in census.saturated_in(g).elems() {
                    let reach = s.c(Subset::singleton(b));
                    for a in s.c(g).complement(n).elems().filter(|&a| reach.contains(a)) {
                        tags.push((b, a));
                    }
                }
                if !tags.is_empty() {
                    buckets.insert(g, tags);
                }
            }
            buckets.keys().copied().collect()
        }
        BivalKind::Relmax => all_subsets(n)
            .filter(|&g| !census.relmax_in(g).is_empty())
            .collect(),
        BivalKind::SuszkoClosed => all_subsets(n).filter(|&g| census.closed(g)).collect(),
    };
    NamedBivaluationSet {
        kind,
        base: BivaluationSet::new(n, members).expect("members fit the carrier"),
        buckets,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    /// `⊢ ⊆ ⊢_V`.
    pub sound: bool,
    /// `⊢_V ⊆ ⊢`.
    pub complete: bool,
    /// Pairs in `⊢ ∖ ⊢_V`, at most [`WITNESS_LIMIT`].
    pub unsound: Vec<(Subset, usize)>,
    /// Pairs in `⊢_V ∖ ⊢`, at most [`WITNESS_LIMIT`].
    pub incomplete: Vec<(Subset, usize)>,
}

impl Comparison {
    pub fn adequate(&self) -> bool {
        self.sound && self.complete
    }
}

/// Soundness and completeness of `s` against a nonempty `V`.
pub fn compare(s: &LogicalStructure, v: &BivaluationSet) -> Result<Comparison> {
    if v.n() != s.n() {
        return Err(Error::SizeMismatch(s.n(), v.n()));
    }
    let induced = LogicalStructure::build(s.n(), Source::Bivaluations(v.clone()))?;
    Ok(comparison(s.table(), induced.table()))
}

/// As [`compare`], reading an empty `V` as the total relation.
pub fn compare_vacuous(s: &LogicalStructure, v: &BivaluationSet) -> Result<Comparison> {
    if v.n() != s.n() {
        return Err(Error::SizeMismatch(s.n(), v.n()));
    }
    Ok(comparison(s.table(), &v.induced_table()))
}

fn comparison(own: &[Subset], induced: &[Subset]) -> Comparison {
    let unsound = excess_pairs(own, induced);
    let incomplete = excess_pairs(induced, own);
    Comparison {
        sound: unsound.is_empty(),
        complete: incomplete.is_empty(),
        unsound,
        incomplete,
    }
}

fn excess_pairs(lhs: &[Subset], rhs: &[Subset]) -> Vec<(Subset, usize)> {
    lhs.iter()
        .zip(rhs)
        .enumerate()
        .flat_map(|(i, (&l, &r))| {
            l.difference(r)
                .elems()
                .map(move |a| (Subset::from_bits(i as u32), a))
        })
        .take(WITNESS_LIMIT)
        .collect()
}

/// `⊢ = ⊢_V` under the empty-set convention.
pub fn adequate_vacuous(s: &LogicalStructure, v: &BivaluationSet) -> bool {
    v.n() == s.n() && s.table() == v.induced_table().as_slice()
}

/// A Suszko set exists iff the closed-set candidate is one: any Suszko set
/// consists of closed sets and adding further closed sets never changes
/// the induced relation.
pub fn suszko_set_exists(s: &LogicalStructure) -> bool {
    let v = extract(s, BivalKind::SuszkoClosed).base;
    !v.is_empty() && adequate_vacuous(s, &v)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Deletion {
    pub deleted: Subset,
    /// `|B|` after the deletion.
    pub remaining: usize,
    /// `B = ∅`, so `⊢_B` is the total relation.
    pub empty_remainder: bool,
    /// `⊢ ⊆ ⊢_B`.
    pub sound: bool,
    /// A pair in `⊢_B ∖ ⊢`, if any.
    pub witness: Option<(Subset, usize)>,
}

impl Deletion {
    pub fn strict(&self) -> bool {
        self.sound && self.witness.is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub scs: Vec<Subset>,
    pub deletions: Vec<Deletion>,
    /// Number of sampled `B ⊆ SCS` checked for `⊢ ⊆ ⊢_B`.
    pub sampled: usize,
    /// Sampled sets where soundness failed, with a witness each.
    pub sample_failures: Vec<(Vec<Subset>, (Subset, usize))>,
}

impl MinimalityReport {
    pub fn passed(&self) -> bool {
        self.deletions.iter().all(Deletion::strict) && self.sample_failures.is_empty()
    }
}

/// Probes minimality of SCS on a TL-4 structure.
pub fn minimality_probe(s: &LogicalStructure) -> Result<MinimalityReport> {
    minimality_probe_with(s, Execution::default())
}

pub fn minimality_probe_with(s: &LogicalStructure, exec: Execution) -> Result<MinimalityReport> {
    if !classify(s)?.get(Class::Tl4) {
        return Err(Error::NotTl4);
    }
    let census = SetCensus::compute(s);
    let scs = extract_from(s, &census, BivalKind::Scs).base;
    if scs.is_empty() {
        return Err(Error::EmptyScs);
    }
    let members: Vec<Subset> = scs.iter().collect();
    let deletions = exec.map(members.len(), |i| {
        let deleted = members[i];
        let b = scs.without(deleted);
        let induced = b.induced_table();
        let sound = table_excess(s.table(), &induced).is_none();
        // The deleted Σ is β-saturated for some β; Σ ⊢_B β while Σ ⊬ β.
        let witness = census
            .saturated_in(deleted)
            .elems()
            .find(|&beta| induced[deleted.index()].contains(beta))
            .map(|beta| (deleted, beta))
            .or_else(|| table_excess(&induced, s.table()));
        Deletion {
            deleted,
            remaining: b.len(),
            empty_remainder: b.is_empty(),
            sound,
            witness,
        }
    });
    let samples = sample_subfamilies(&members);
    let sampled = samples.len();
    let sample_failures = samples
        .into_iter()
        .filter_map(|pick| {
            let b = BivaluationSet::new(s.n(), pick.iter().copied()).expect("members fit");
            table_excess(s.table(), &b.induced_table()).map(|w| (pick, w))
        })
        .collect();
    Ok(MinimalityReport {
        scs: members,
        deletions,
        sampled,
        sample_failures,
    })
}

/// Every subfamily when there are at most four members, otherwise sixteen
/// seeded random ones.
fn sample_subfamilies(members: &[Subset]) -> Vec<Vec<Subset>> {
    let pick = |mask: u64| {
        members
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &m)| m)
            .collect::<Vec<_>>()
    };
    if members.len() <= 4 {
        return (0..1u64 << members.len()).map(pick).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(members.len() as u64);
    (0..16)
        .map(|_| {
            members
                .iter()
                .copied()
                .filter(|_| rng.gen_bool(0.5))
                .collect()
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepresentationReport {
    pub tl4: bool,
    /// `⊢ = ⊢_{SCS*}`, empty SCS* read as the total relation.
    pub scs_star_adequate: bool,
    pub tarski: bool,
    /// SUSZKO_CLOSED is nonempty and `⊢ = ⊢_{SUSZKO_CLOSED}`.
    pub suszko_adequate: bool,
    pub scs_star_size: usize,
    pub suszko_size: usize,
}

impl RepresentationReport {
    /// Both equivalences hold.
    pub fn consistent(&self) -> bool {
        self.tl4 == self.scs_star_adequate && self.tarski == self.suszko_adequate
    }
}

pub fn representation_check(s: &LogicalStructure) -> Result<RepresentationReport> {
    let report = classify(s)?;
    let census = SetCensus::compute(s);
    let star = extract_from(s, &census, BivalKind::ScsStar).base;
    let closed = extract_from(s, &census, BivalKind::SuszkoClosed).base;
    Ok(RepresentationReport {
        tl4: report.get(Class::Tl4),
        scs_star_adequate: adequate_vacuous(s, &star),
        tarski: report.get(Class::Tarski),
        suszko_adequate: !closed.is_empty() && adequate_vacuous(s, &closed),
        scs_star_size: star.len(),
        suszko_size: closed.len(),
    })
}
