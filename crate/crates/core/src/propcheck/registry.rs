//! The theorem registry: one hypothesis/conclusion pair per entry.
//!
//! Hypotheses read the classifier's verdicts and the set census; the
//! characterization entries compare against the literal statement scans in
//! `classify::characterize`, and the semantic entries against `bival`.

use serde::Serialize;

use crate::bival::{
    adequate_vacuous, compare_vacuous, extract_from, minimality_probe_with, BivalKind,
};
use crate::classify::{
    check_characterization, classify_with, Class, ClassificationReport, Theorem,
};
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::properties::SetCensus;
use crate::structure::{ArrowTable, LogicalStructure};
use crate::subset::{all_subsets, Subset};

use super::generator::{Sample, Strategy};

/// Everything an entry may look at for one structure.
pub struct Facts<'a> {
    pub s: &'a LogicalStructure,
    pub arrow: &'a ArrowTable,
    pub census: SetCensus,
    pub class: ClassificationReport,
}

impl<'a> Facts<'a> {
    pub fn compute(s: &'a LogicalStructure, arrow: &'a ArrowTable) -> Result<Self> {
        if arrow.n() != s.n() {
            return Err(Error::SizeMismatch(s.n(), arrow.n()));
        }
        Ok(Facts {
            s,
            arrow,
            census: SetCensus::compute_with(s, Execution::Sequential),
            class: classify_with(s, Execution::Sequential)?,
        })
    }

    pub fn is(&self, c: Class) -> bool {
        self.class.get(c)
    }

    fn n(&self) -> usize {
        self.s.n()
    }

    fn full(&self) -> Subset {
        self.s.full()
    }

    fn sets(&self) -> impl Iterator<Item = Subset> {
        all_subsets(self.n())
    }
}

/// Instances checked for one entry on one structure, and the first failure.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub checked: usize,
    pub failure: Option<String>,
}

impl Outcome {
    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(detail());
        }
    }

    pub fn fired(&self) -> bool {
        self.checked > 0
    }
}

#[derive(Clone, Copy)]
pub struct Entry {
    pub id: &'static str,
    pub anchor: &'static str,
    pub check: fn(&Facts) -> Outcome,
}

impl std::fmt::Debug for Entry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({})", self.id, self.anchor)
    }
}

fn bool_check(o: &mut Outcome, lhs: bool, rhs: bool, what: &str) {
    o.check(lhs == rhs, || format!("{what}: {lhs} vs {rhs}"));
}

fn t01(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Cut) {
        for g in f.sets().filter(|&g| f.census.saturated(g)) {
            o.check(f.census.closed(g), || {
                format!("saturated {g} is not closed")
            });
        }
    }
    o
}

fn t02(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Cut) {
        o.check(f.census.closed(f.full()), || "C(L) != L".into());
    }
    o
}

fn t03(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::MixedCut) {
        for g in f.sets().filter(|&g| f.census.saturated(g)) {
            o.check(f.census.strongly_closed(g), || {
                format!("saturated {g} is not strongly closed")
            });
        }
    }
    o
}

fn outside_c(f: &Facts, g: Subset) -> Subset {
    f.s.c(g).complement(f.n())
}

fn t04(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    for g in f.sets().filter(|&g| f.census.maximal_nontrivial(g)) {
        let missing = outside_c(f, g).difference(f.census.relmax_in(g));
        o.check(missing.is_empty(), || {
            format!("maximal nontrivial {g} is not relatively maximal in {missing}")
        });
    }
    o
}

fn t05(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    for g in f.sets().filter(|&g| f.census.maximal_nontrivial(g)) {
        let missing = outside_c(f, g).difference(f.census.saturated_in(g));
        o.check(missing.is_empty() && f.census.saturated(g), || {
            format!("maximal nontrivial {g} is not α-saturated for α in {missing}")
        });
    }
    o
}

fn t06(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    for g in f.sets().filter(|&g| f.census.saturated(g)) {
        o.check(!f.census.trivial(g), || format!("saturated {g} is trivial"));
    }
    o
}

fn t07(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Monotone) {
        for g in f.sets().filter(|&g| !f.census.trivial(g)) {
            if outside_c(f, g).is_subset_of(f.census.relmax_in(g)) {
                o.check(f.census.maximal_nontrivial(g), || {
                    format!("{g} is relatively maximal outside C(Γ) but not maximal nontrivial")
                });
            }
        }
    }
    o
}

fn arrow_saturated(f: &Facts, g: Subset) -> bool {
    g.complement(f.n())
        .elems()
        .all(|a| f.arrow.xi(a).is_subset_of(g))
}

fn modus_ponens(f: &Facts) -> bool {
    f.sets().all(|g| {
        let cg = f.s.c(g);
        cg.elems()
            .all(|a| (0..f.n()).all(|b| !cg.contains(f.arrow.apply(a, b)) || cg.contains(b)))
    })
}

fn t08(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Reflexive) && modus_ponens(f) {
        for g in f
            .sets()
            .filter(|&g| !f.census.trivial(g) && arrow_saturated(f, g))
        {
            o.check(f.census.maximal_nontrivial(g) && f.census.closed(g), || {
                format!("→-saturated {g} is not maximal nontrivial and closed")
            });
        }
    }
    o
}

fn xi_absorbed(f: &Facts) -> bool {
    f.sets().all(|sigma| {
        sigma
            .complement(f.n())
            .elems()
            .all(|b| f.s.c(sigma.union(f.arrow.xi(b))).is_subset_of(f.s.c(sigma)))
    })
}

fn t09(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Reflexive) && xi_absorbed(f) {
        for g in f.sets().filter(|&g| f.census.closed(g)) {
            o.check(arrow_saturated(f, g), || {
                format!("closed {g} is not →-saturated")
            });
        }
    }
    o
}

fn t10(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::LindII) {
        for g in f.sets() {
            for a in f.census.maximal_saturated_in(g).elems() {
                o.check(f.census.relmax_in(g).contains(a), || {
                    format!("maximal {a}-saturated {g} is not relatively maximal in {a}")
                });
            }
        }
    }
    o
}

/// `⋂ map(Σ)` over saturated `Σ ⊇ Γ`, `L` when there are none.
fn meet_over_saturated(f: &Facts, g: Subset, map: impl Fn(Subset) -> Subset) -> Subset {
    g.supersets(f.n())
        .filter(|&sg| f.census.saturated(sg))
        .fold(f.full(), |acc, sg| acc.intersection(map(sg)))
}

fn t11(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::LindII) && f.is(Class::Cut) {
        for g in f.sets().filter(|&g| g != f.full() && f.census.closed(g)) {
            let meet = meet_over_saturated(f, g, |sg| sg);
            o.check(meet == g, || {
                format!("closed {g} but its saturated extensions meet in {meet}")
            });
        }
    }
    o
}

fn t12(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::LindII) && f.is(Class::Reflexive) {
        for g in f.sets().filter(|&g| g != f.full() && f.census.closed(g)) {
            let meet = meet_over_saturated(f, g, |sg| f.s.c(sg));
            o.check(meet == g, || {
                format!("closed {g} but ⋂ C(Σ) over saturated Σ ⊇ Γ is {meet}")
            });
        }
    }
    o
}

fn t13(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::LindII) && f.is(Class::Cut) {
        o.check(f.is(Class::Reflexive), || {
            "lindII and cut without reflexivity".into()
        });
    }
    o
}

fn t14(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::LindII) && f.is(Class::MixedCut) {
        o.check(f.is(Class::Tarski), || {
            "lindII and mixed-cut without tarski".into()
        });
    }
    o
}

fn characterization(f: &Facts, thm: Theorem) -> Outcome {
    let mut o = Outcome::default();
    let expected = f.is(thm.class());
    for i in 1..=thm.statements() {
        match check_characterization(f.s, thm, i) {
            Ok(v) => bool_check(
                &mut o,
                v,
                expected,
                &format!("{thm} ({i}) vs {}", thm.class()),
            ),
            Err(e) => o.check(false, || format!("{thm} ({i}): {e}")),
        }
    }
    o
}

fn t15(f: &Facts) -> Outcome {
    characterization(f, Theorem::CharT4Lind)
}

fn closure_condition(f: &Facts) -> bool {
    f.sets().all(|g| {
        g.complement(f.n())
            .elems()
            .all(|a| !f.s.c(g.with(a)).is_subset_of(f.s.c(g)) || f.census.closed(g))
    })
}

fn t16(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Reflexive) && f.is(Class::Cut) && closure_condition(f) {
        o.check(f.is(Class::LindIV), || {
            "closure condition holds but lindIV is false".into()
        });
    }
    o
}

fn t17(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Monotone) {
        bool_check(
            &mut o,
            f.is(Class::LindIV),
            f.is(Class::LindII),
            "lindIV vs lindII",
        );
    }
    o
}

fn t18(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::LindI) {
        for g in f.sets().filter(|&g| f.census.maximal_saturated(g)) {
            o.check(f.census.maximal_nontrivial(g), || {
                format!("maximal saturated {g} is not maximal nontrivial")
            });
        }
    }
    o
}

fn t19(f: &Facts) -> Outcome {
    characterization(f, Theorem::CharT3Lind)
}

fn t20(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::LindI) && f.is(Class::MixedCut) {
        for g in f.sets().filter(|&g| f.census.trivial(g)) {
            for b in g.complement(f.n()).elems() {
                o.check(f.census.trivial(g.with(b)), || {
                    format!("{g} is trivial but {} is not", g.with(b))
                });
            }
        }
    }
    o
}

fn t21(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    for (a, b) in [
        (Class::LindIV, Class::LindII),
        (Class::LindII, Class::LindI),
        (Class::LindIII, Class::LindI),
    ] {
        if f.is(a) {
            o.check(f.is(b), || format!("{a} without {b}"));
        }
    }
    o
}

fn t22(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Monotone) {
        o.check(f.is(Class::LindIV), || {
            "finite monotone structure is not lindIV".into()
        });
    }
    o
}

fn t23(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    for c in [Class::Tl2, Class::Tl3, Class::Tl4] {
        if f.is(c) {
            o.check(f.is(Class::Tl1), || format!("{c} without tl1"));
        }
    }
    bool_check(&mut o, f.is(Class::Tl2), f.is(Class::Tl4), "tl2 vs tl4");
    o
}

fn t24(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Tarski) {
        o.check(f.is(Class::MixedCut), || "tarski without mixed-cut".into());
    }
    o
}

fn t25(f: &Facts) -> Outcome {
    characterization(f, Theorem::CharTL4)
}

fn t26(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    let scs = extract_from(f.s, &f.census, BivalKind::Scs).base;
    match compare_vacuous(f.s, &scs) {
        Ok(cmp) => o.check(cmp.sound, || {
            format!("unsound against SCS at {:?}", cmp.unsound[0])
        }),
        Err(e) => o.check(false, || e.to_string()),
    }
    o
}

fn t27(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Tl4) {
        let scs = extract_from(f.s, &f.census, BivalKind::Scs).base;
        o.check(adequate_vacuous(f.s, &scs), || "⊢ != ⊢_SCS".into());
    }
    o
}

fn t28(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Tl4) && !extract_from(f.s, &f.census, BivalKind::Scs).base.is_empty() {
        match minimality_probe_with(f.s, Execution::Sequential) {
            Ok(r) => {
                for d in &r.deletions {
                    o.check(d.sound && d.strict(), || {
                        format!(
                            "deleting {} from SCS does not strictly enlarge ⊢",
                            d.deleted
                        )
                    });
                }
                o.check(r.sample_failures.is_empty(), || {
                    format!("unsound subfamily {:?}", r.sample_failures[0].0)
                });
            }
            Err(e) => o.check(false, || e.to_string()),
        }
    }
    o
}

fn t29(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    let star = extract_from(f.s, &f.census, BivalKind::ScsStar).base;
    bool_check(
        &mut o,
        f.is(Class::Tl4),
        adequate_vacuous(f.s, &star),
        "tl4 vs ⊢ = ⊢_SCS*",
    );
    o
}

fn t30(f: &Facts) -> Outcome {
    characterization(f, Theorem::CharTar)
}

fn t31(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Tarski) {
        for g in f.sets().filter(|&g| !f.census.relmax_in(g).is_empty()) {
            o.check(f.census.strongly_closed(g), || {
                format!("relatively maximal {g} is not strongly closed")
            });
        }
        let relmax = extract_from(f.s, &f.census, BivalKind::Relmax).base;
        let scs = extract_from(f.s, &f.census, BivalKind::Scs).base;
        o.check(relmax == scs, || "RELMAX != SCS".into());
    }
    o
}

fn t32(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::MixedCut) {
        o.check(f.is(Class::Cut), || "mixed-cut without cut".into());
    }
    o
}

fn t33(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Tarski) {
        for g in f.sets() {
            let cg = f.s.c(g);
            for a in cg.complement(f.n()).elems() {
                let family: Vec<Subset> = g
                    .supersets(f.n())
                    .filter(|&d| f.census.strongly_closed(d) && !f.s.c(d).contains(a))
                    .collect();
                let meet = family.iter().fold(f.full(), |m, &d| m.intersection(d));
                o.check(family.contains(&meet) && meet == cg, || {
                    format!("{g} ⊬ {a}: strongly closed extensions have no least member C(Γ)")
                });
            }
        }
    }
    o
}

pub const REGISTRY: [Entry; 33] = [
    Entry { id: "T01", anchor: "cut: every saturated set is closed", check: t01 },
    Entry { id: "T02", anchor: "cut: C(L) = L", check: t02 },
    Entry { id: "T03", anchor: "mixed-cut: every saturated set is strongly closed", check: t03 },
    Entry { id: "T04", anchor: "maximal nontrivial: relatively maximal in every α ∉ C(Γ)", check: t04 },
    Entry { id: "T05", anchor: "maximal nontrivial: α-saturated for every α ∉ C(Γ), hence saturated", check: t05 },
    Entry { id: "T06", anchor: "every saturated set is nontrivial", check: t06 },
    Entry { id: "T07", anchor: "monotone: nontrivial and relatively maximal outside C(Γ) gives maximal nontrivial", check: t07 },
    Entry { id: "T08", anchor: "reflexive + modus ponens: nontrivial →-saturated sets are maximal nontrivial and closed", check: t08 },
    Entry { id: "T09", anchor: "reflexive + C(Σ ∪ ξ_β) ⊆ C(Σ): closed sets are →-saturated", check: t09 },
    Entry { id: "T10", anchor: "lindII: every maximal α-saturated set is relatively maximal in α", check: t10 },
    Entry { id: "T11", anchor: "lindII + cut: closed Γ ⊊ L is the meet of its saturated extensions", check: t11 },
    Entry { id: "T12", anchor: "lindII + reflexive: closed Γ ⊊ L is ⋂ C(Σ) over saturated Σ ⊇ Γ", check: t12 },
    Entry { id: "T13", anchor: "lindII + cut: reflexive", check: t13 },
    Entry { id: "T14", anchor: "lindII + mixed-cut: tarski", check: t14 },
    Entry { id: "T15", anchor: "lindIV characterization", check: t15 },
    Entry { id: "T16", anchor: "reflexive + cut + closure condition: lindIV", check: t16 },
    Entry { id: "T17", anchor: "monotone: lindIV iff lindII", check: t17 },
    Entry { id: "T18", anchor: "lindI: every maximal saturated set is maximal nontrivial", check: t18 },
    Entry { id: "T19", anchor: "lindIII characterization", check: t19 },
    Entry { id: "T20", anchor: "lindI + mixed-cut: trivial sets are upward closed", check: t20 },
    Entry { id: "T21", anchor: "lindIV ⟹ lindII ⟹ lindI, lindIII ⟹ lindI", check: t21 },
    Entry { id: "T22", anchor: "finite monotone: lindIV", check: t22 },
    Entry { id: "T23", anchor: "tl2, tl3, tl4 ⟹ tl1; tl2 iff tl4", check: t23 },
    Entry { id: "T24", anchor: "tarski: mixed-cut", check: t24 },
    Entry { id: "T25", anchor: "tl4 characterization", check: t25 },
    Entry { id: "T26", anchor: "⊢ ⊆ ⊢_SCS", check: t26 },
    Entry { id: "T27", anchor: "tl4: ⊢ = ⊢_SCS", check: t27 },
    Entry { id: "T28", anchor: "tl4: every B ⊊ SCS gives ⊢ ⊊ ⊢_B", check: t28 },
    Entry { id: "T29", anchor: "tl4 iff ⊢ = ⊢_SCS*", check: t29 },
    Entry { id: "T30", anchor: "tarski characterization", check: t30 },
    Entry { id: "T31", anchor: "tarski: relatively maximal sets are strongly closed, RELMAX = SCS", check: t31 },
    Entry { id: "T32", anchor: "mixed-cut: cut", check: t32 },
    Entry { id: "T33", anchor: "tarski: least strongly closed Δ ⊇ Γ with Δ ⊬ α", check: t33 },
];

/// Entries whose statements have counterexamples among non-reflexive
/// structures: a saturated `Σ` need not satisfy `Σ ⊆ C(Σ)`, and `L` is
/// saturated whenever `C(L) ≠ L`. All of them hold on reflexive structures.
pub const NEED_REFLEXIVITY: [&str; 7] = ["T01", "T02", "T03", "T11", "T13", "T14", "T20"];

/// `all`, or a comma-separated list of ids.
pub fn select(ids: &str) -> Result<Vec<Entry>> {
    select_from(&REGISTRY, ids)
}

pub fn select_from(registry: &[Entry], ids: &str) -> Result<Vec<Entry>> {
    if ids.trim() == "all" {
        return Ok(registry.to_vec());
    }
    ids.split(',')
        .map(|id| {
            let id = id.trim();
            registry
                .iter()
                .find(|e| e.id.eq_ignore_ascii_case(id))
                .copied()
                .ok_or_else(|| Error::UnknownTheorem(id.to_string()))
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Minimized {
    pub n: usize,
    /// Original indices of the surviving elements.
    pub kept: Vec<usize>,
    pub table: Vec<Subset>,
    pub arrow: Vec<usize>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    pub index: usize,
    pub strategy: Option<Strategy>,
    pub digest: String,
    pub n: usize,
    pub table: Vec<Subset>,
    pub arrow: Vec<usize>,
    pub detail: String,
    pub minimized: Minimized,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EntryReport {
    pub id: &'static str,
    pub anchor: &'static str,
    /// Structures on which the hypothesis held for at least one instance.
    pub fired: usize,
    pub checked: usize,
    pub failures: usize,
    pub uncovered: bool,
    pub witnesses: Vec<FailureWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegistryReport {
    pub samples: usize,
    pub entries: Vec<EntryReport>,
}

impl RegistryReport {
    pub fn failures(&self) -> usize {
        self.entries.iter().map(|e| e.failures).sum()
    }

    pub fn uncovered(&self) -> Vec<&'static str> {
        self.entries
            .iter()
            .filter(|e| e.uncovered)
            .map(|e| e.id)
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }
}

/// Full witnesses kept per entry.
pub const WITNESSES_PER_ENTRY: usize = 8;

/// A structure to check, with its provenance.
pub struct Subject<'a> {
    pub index: usize,
    pub strategy: Option<Strategy>,
    pub structure: &'a LogicalStructure,
    pub arrow: &'a ArrowTable,
}

impl<'a> From<&'a Sample> for Subject<'a> {
    fn from(s: &'a Sample) -> Self {
        Subject {
            index: s.index,
            strategy: Some(s.strategy),
            structure: &s.structure,
            arrow: &s.arrow,
        }
    }
}

pub fn run_samples(
    samples: &[Sample],
    entries: &[Entry],
    exec: Execution,
) -> Result<RegistryReport> {
    let subjects: Vec<Subject> = samples.iter().map(Subject::from).collect();
    run_registry_with(&subjects, entries, exec)
}

/// Runs `entries` over every subject; the merge is in subject order.
pub fn run_registry_with(
    subjects: &[Subject],
    entries: &[Entry],
    exec: Execution,
) -> Result<RegistryReport> {
    let per_subject = exec.map(subjects.len(), |i| -> Result<Vec<Outcome>> {
        let sub = &subjects[i];
        let facts = Facts::compute(sub.structure, sub.arrow)?;
        Ok(entries.iter().map(|e| (e.check)(&facts)).collect())
    });
    let mut reports: Vec<EntryReport> = entries
        .iter()
        .map(|e| EntryReport {
            id: e.id,
            anchor: e.anchor,
            fired: 0,
            checked: 0,
            failures: 0,
            uncovered: false,
            witnesses: Vec::new(),
        })
        .collect();
    for (sub, outcomes) in subjects.iter().zip(per_subject) {
        for ((entry, report), o) in entries.iter().zip(&mut reports).zip(outcomes?) {
            report.fired += o.fired() as usize;
            report.checked += o.checked;
            if let Some(detail) = o.failure {
                report.failures += 1;
                if report.witnesses.len() < WITNESSES_PER_ENTRY {
                    report.witnesses.push(witness(sub, entry, detail));
                }
            }
        }
    }
    for r in &mut reports {
        r.uncovered = r.fired == 0;
    }
    Ok(RegistryReport {
        samples: subjects.len(),
        entries: reports,
    })
}

fn failure_of(entry: &Entry, s: &LogicalStructure, arrow: &ArrowTable) -> Option<String> {
    let facts = Facts::compute(s, arrow).ok()?;
    (entry.check)(&facts).failure
}

fn witness(sub: &Subject, entry: &Entry, detail: String) -> FailureWitness {
    let (kept, s, arrow, min_detail) = minimize(entry, sub.structure, sub.arrow, detail.clone());
    FailureWitness {
        index: sub.index,
        strategy: sub.strategy,
        digest: sub.structure.digest(),
        n: sub.structure.n(),
        table: sub.structure.table().to_vec(),
        arrow: sub.arrow.entries().to_vec(),
        detail,
        minimized: Minimized {
            n: s.n(),
            kept,
            table: s.table().to_vec(),
            arrow: arrow.entries().to_vec(),
            detail: min_detail,
        },
    }
}

/// The arrow on `keep`, if `keep` is closed under it.
fn restrict_arrow(arrow: &ArrowTable, keep: &[usize]) -> Option<ArrowTable> {
    let local = |g: usize| keep.iter().position(|&k| k == g);
    let mut op = Vec::with_capacity(keep.len() * keep.len());
    for &a in keep {
        for &b in keep {
            op.push(local(arrow.apply(a, b))?);
        }
    }
    ArrowTable::new(keep.len(), op).ok()
}

/// Greedy element deletion while the failure persists. Heuristic: the
/// result is minimal only with respect to single deletions.
fn minimize(
    entry: &Entry,
    s: &LogicalStructure,
    arrow: &ArrowTable,
    detail: String,
) -> (Vec<usize>, LogicalStructure, ArrowTable, String) {
    let mut kept: Vec<usize> = (0..s.n()).collect();
    let mut cur = (s.clone(), arrow.clone(), detail);
    loop {
        let mut progressed = false;
        for drop in 0..kept.len() {
            if kept.len() == 1 {
                break;
            }
            let local: Vec<usize> = (0..kept.len()).filter(|&i| i != drop).collect();
            let Ok(rs) = cur.0.restrict(Subset::from_elems(local.iter().copied())) else {
                continue;
            };
            let Some(ra) = restrict_arrow(&cur.1, &local) else {
                continue;
            };
            if let Some(d) = failure_of(entry, &rs, &ra) {
                kept.remove(drop);
                cur = (rs, ra, d);
                progressed = true;
                break;
            }
        }
        if !progressed {
            return (kept, cur.0, cur.1, cur.2);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::propcheck::generator::{corpus, exhaustive, GeneratorSpec};
    use crate::structure::three_element_example;

    fn run_plain(structures: &[LogicalStructure], entries: &[Entry]) -> RegistryReport {
        let arrows: Vec<ArrowTable> = structures
            .iter()
            .map(|s| ArrowTable::second_projection(s.n()))
            .collect();
        let subjects: Vec<Subject> = structures
            .iter()
            .zip(&arrows)
            .enumerate()
            .map(|(index, (structure, arrow))| Subject {
                index,
                strategy: None,
                structure,
                arrow,
            })
            .collect();
        run_registry_with(&subjects, entries, Execution::Parallel).unwrap()
    }

    #[test]
    fn registry_ids_are_ordered_and_unique() {
        for (i, e) in REGISTRY.iter().enumerate() {
            assert_eq!(e.id, format!("T{:02}", i + 1));
        }
        assert_eq!(select("t05, T22").unwrap().len(), 2);
        assert!(matches!(select("T99"), Err(Error::UnknownTheorem(_))));
    }

    #[test]
    fn exhaustive_two_elements() {
        let all = exhaustive(2).unwrap();
        let r = run_plain(&all, &REGISTRY);
        assert_eq!(r.samples, 255);
        let refuted: Vec<&str> = r
            .entries
            .iter()
            .filter(|e| e.failures > 0)
            .map(|e| e.id)
            .collect();
        assert_eq!(refuted, NEED_REFLEXIVITY);
        let reflexive: Vec<LogicalStructure> = all
            .into_iter()
            .filter(|s| crate::classify::classify(s).unwrap().get(Class::Reflexive))
            .collect();
        assert!(run_plain(&reflexive, &REGISTRY).passed());
    }

    #[test]
    fn cut_without_reflexivity() {
        // C(∅) = {0}, everything else derives nothing: cut holds, L is
        // saturated but not closed.
        let s = LogicalStructure::from_table(
            2,
            vec![
                Subset::singleton(0),
                Subset::EMPTY,
                Subset::EMPTY,
                Subset::EMPTY,
            ],
            crate::structure::Origin::ExplicitTable,
        )
        .unwrap();
        let r = run_plain(&[s], &select("T01,T02,T13").unwrap());
        assert!(r.entries.iter().all(|e| e.failures == 1));
    }

    #[test]
    fn g5_soundness_is_vacuous() {
        let r = run_plain(&[three_element_example()], &select("T26").unwrap());
        assert_eq!(r.entries[0].checked, 1);
        assert!(r.passed());
    }

    #[test]
    fn bivaluation_corpus_exercises_semantics() {
        let spec = GeneratorSpec::new(Strategy::Bivaluation, 2..=5, 11, 150);
        let samples = corpus(&spec).unwrap();
        let entries = select("T22,T24,T26,T27,T28,T29,T31").unwrap();
        let r = run_samples(&samples, &entries, Execution::Parallel).unwrap();
        assert!(r.passed());
        for id in ["T27", "T29"] {
            let e = r.entries.iter().find(|e| e.id == id).unwrap();
            assert_eq!(e.fired, samples.len());
        }
    }

    fn always_monotone(f: &Facts) -> Outcome {
        let mut o = Outcome::default();
        o.check(f.is(Class::Monotone), || "not monotone".into());
        o
    }

    #[test]
    fn failures_are_minimized() {
        let fake = Entry {
            id: "X01",
            anchor: "every structure is monotone",
            check: always_monotone,
        };
        let r = run_plain(&[three_element_example()], &[fake]);
        assert_eq!(r.failures(), 1);
        let w = &r.entries[0].witnesses[0];
        assert!(w.minimized.n < 3);
        let small = LogicalStructure::from_table(
            w.minimized.n,
            w.minimized.table.clone(),
            crate::structure::Origin::ExplicitTable,
        )
        .unwrap();
        assert!(!crate::classify::classify(&small)
            .unwrap()
            .get(Class::Monotone));
    }
}
