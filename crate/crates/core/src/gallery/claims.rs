//! Claim scripts.
//!
//! Quantifiers over an infinite carrier range over a case grid: every finite
//! subset of a small window, a handful of infinite descriptors, and "fresh"
//! elements standing for everything outside the window. Each rule only looks
//! at features the grid covers (finiteness, cardinality, supremum, common
//! prime divisors), which is what makes the reduction sound. For G5 the grid
//! is the whole power set and the scan is exhaustive.

use serde::Serialize;

use super::{Carrier, GalleryId, GalleryItem, Marked, Ordinal, SymbolicSet};
use crate::classify::{check_characterization, Theorem};
use crate::error::{Error, Result};
use crate::par::Execution;
use crate::properties::{check_set, check_structure, SetProperty, StructureProperty};
use crate::structure::three_element_example;
use crate::subset::{all_subsets, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Discharge {
    Exhaustive,
    CaseAnalysis,
    SymmetryReduction,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimOutcome {
    pub id: &'static str,
    pub statement: &'static str,
    pub method: Discharge,
    pub expected: bool,
    pub actual: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ClaimOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.actual == self.expected
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub gallery: GalleryId,
    pub carrier: &'static str,
    pub rule: &'static str,
    pub claims: Vec<ClaimOutcome>,
}

impl ClaimReport {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(ClaimOutcome::passed)
    }

    /// The computed value of a claim, e.g. `"lindIII"`.
    pub fn actual(&self, id: &str) -> Option<bool> {
        self.claims.iter().find(|c| c.id == id).map(|c| c.actual)
    }
}

pub fn run_claims(id: GalleryId) -> ClaimReport {
    run_item(&GalleryItem::new(id))
}

pub fn run_all(exec: Execution) -> Vec<ClaimReport> {
    exec.map(GalleryId::ALL.len(), |i| run_claims(GalleryId::ALL[i]))
}

pub fn run_item(item: &GalleryItem) -> ClaimReport {
    let ctx = Ctx::new(item);
    let claims = match item.id() {
        GalleryId::G1Parity => g1(&ctx),
        GalleryId::G2Lambda0 => g2(&ctx),
        GalleryId::G3NatCard => g3(&ctx),
        GalleryId::G4FiniteOrAll => g4(&ctx),
        GalleryId::G5ThreeElem => g5(&ctx),
        GalleryId::G6OmegaPatched => g6(&ctx),
        GalleryId::G7OmegaPlain => g7(&ctx),
        GalleryId::G8PrimeMultiples => g8(&ctx),
    };
    ClaimReport {
        gallery: item.id(),
        carrier: item.carrier().name(),
        rule: item.id().rule(),
        claims,
    }
}

fn claim(
    id: &'static str,
    statement: &'static str,
    method: Discharge,
    expected: bool,
    actual: Result<bool>,
) -> ClaimOutcome {
    let (actual, error) = match actual {
        Ok(v) => (v, None),
        Err(e) => (!expected, Some(e.to_string())),
    };
    ClaimOutcome {
        id,
        statement,
        method,
        expected,
        actual,
        error,
    }
}

fn nat(n: u64) -> Ordinal {
    Ordinal::nat(n)
}

fn w(n: u64) -> Ordinal {
    Ordinal::omega_plus(n)
}

fn finite_window(elems: &[Ordinal]) -> impl Iterator<Item = SymbolicSet> + '_ {
    all_subsets(elems.len()).map(|g| SymbolicSet::finite(g.elems().map(|i| elems[i])))
}

struct Ctx<'a> {
    item: &'a GalleryItem,
    sets: Vec<SymbolicSet>,
    probes: Vec<Ordinal>,
    fresh: Vec<Ordinal>,
}

impl<'a> Ctx<'a> {
    fn new(item: &'a GalleryItem) -> Self {
        use SymbolicSet as S;
        let (window, infinite, probes, fresh): (Vec<Ordinal>, Vec<S>, Vec<Ordinal>, Vec<Ordinal>) =
            match item.carrier() {
                Carrier::Naturals => {
                    let mut inf = vec![
                        S::FullCarrier,
                        S::cofinite([nat(0)]),
                        S::cofinite([nat(1), nat(3)]),
                    ];
                    if item.id() == GalleryId::G2Lambda0 {
                        inf.push(S::MarkedInfinite(Marked::EvenNaturals));
                        inf.push(S::MarkedInfinite(Marked::OddNaturals));
                    }
                    (
                        (0..6).map(nat).collect(),
                        inf,
                        (0..8).map(nat).collect(),
                        vec![nat(100), nat(101)],
                    )
                }
                Carrier::Positive => (
                    [1, 2, 3, 4, 6, 9].map(nat).to_vec(),
                    vec![
                        S::MultiplesOf(2),
                        S::MultiplesOf(3),
                        S::MultiplesOf(5),
                        S::MultiplesOf(6),
                        S::MultiplesUnion(2, vec![nat(3)]),
                        S::MultiplesUnion(3, vec![nat(2)]),
                        S::MultiplesUnion(6, vec![nat(4)]),
                        S::cofinite([nat(1)]),
                        S::FullCarrier,
                    ],
                    (1..11).map(nat).collect(),
                    vec![nat(210), nat(211)],
                ),
                Carrier::OmegaTwo => (
                    vec![nat(0), nat(1), nat(2), w(0), w(1)],
                    vec![
                        S::Downset(w(0)),
                        S::Downset(w(1)),
                        S::Downset(w(2)),
                        S::FiniteUnionDownset(w(0), vec![w(2)]),
                        S::FiniteUnionDownset(w(0), vec![w(3)]),
                        S::FiniteUnionDownset(nat(2), vec![w(1)]),
                    ],
                    (0..5).map(nat).chain((0..5).map(w)).collect(),
                    vec![nat(50), w(50)],
                ),
                Carrier::ThreeElem => (
                    (0..3).map(nat).collect(),
                    Vec::new(),
                    (0..3).map(nat).collect(),
                    Vec::new(),
                ),
            };
        let mut sets: Vec<S> = finite_window(&window).collect();
        sets.extend(infinite);
        if item.carrier() == Carrier::OmegaTwo {
            sets.extend(probes.iter().map(|&p| S::Downset(p)));
        }
        Ctx {
            item,
            sets,
            probes,
            fresh,
        }
    }

    fn c(&self, g: &SymbolicSet) -> Result<SymbolicSet> {
        self.item.consequences(g)
    }

    fn derives(&self, g: &SymbolicSet, a: Ordinal) -> Result<bool> {
        self.item.derives(g, a)
    }

    fn trivial(&self, g: &SymbolicSet) -> Result<bool> {
        self.item.trivial(g)
    }

    fn sub(&self, a: &SymbolicSet, b: &SymbolicSet) -> bool {
        self.item.subset_of(a, b)
    }

    fn extend(&self, g: &SymbolicSet, extra: &[Ordinal]) -> Result<SymbolicSet> {
        g.with(extra.iter().copied())
            .ok_or_else(|| Error::Descriptor {
                gallery: self.item.id().name(),
                descriptor: format!("{g} with extra elements"),
            })
    }

    /// Elements outside `g` the grid can name.
    fn outside(&self, g: &SymbolicSet) -> Vec<Ordinal> {
        self.probes
            .iter()
            .chain(&self.fresh)
            .copied()
            .filter(|&b| !g.contains(b))
            .collect()
    }

    fn proper_supersets(&self, g: &SymbolicSet) -> Result<Vec<SymbolicSet>> {
        let mut out: Vec<SymbolicSet> = self
            .sets
            .iter()
            .filter(|s| self.sub(g, s) && !self.sub(s, g))
            .cloned()
            .collect();
        for b in self.outside(g) {
            out.push(self.extend(g, &[b])?);
        }
        if self.fresh.iter().any(|&f| !g.contains(f)) {
            out.push(self.extend(g, &self.fresh)?);
        }
        Ok(out)
    }

    fn candidates(&self, g: &SymbolicSet) -> Vec<SymbolicSet> {
        let mut out = vec![g.clone()];
        out.extend(self.sets.iter().filter(|s| self.sub(g, s)).cloned());
        out
    }

    fn alpha_saturated(&self, g: &SymbolicSet, a: Ordinal) -> Result<bool> {
        if self.derives(g, a)? {
            return Ok(false);
        }
        for b in self.outside(g) {
            if !self.derives(&self.extend(g, &[b])?, a)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn saturated(&self, g: &SymbolicSet) -> Result<bool> {
        any(&self.probes, |&a| self.alpha_saturated(g, a))
    }

    fn maximal_nontrivial(&self, g: &SymbolicSet) -> Result<bool> {
        Ok(!self.trivial(g)? && all(&self.proper_supersets(g)?, |s| self.trivial(s))?)
    }

    fn relmax(&self, g: &SymbolicSet, a: Ordinal) -> Result<bool> {
        Ok(!self.derives(g, a)? && all(&self.proper_supersets(g)?, |s| self.derives(s, a))?)
    }

    fn every_nontrivial(&self, f: impl Fn(&SymbolicSet) -> Result<bool>) -> Result<bool> {
        all(&self.sets, |g| Ok(self.trivial(g)? || f(g)?))
    }

    fn every_underivation(
        &self,
        f: impl Fn(&SymbolicSet, Ordinal) -> Result<bool>,
    ) -> Result<bool> {
        all(&self.sets, |g| {
            all(&self.probes, |&a| Ok(self.derives(g, a)? || f(g, a)?))
        })
    }

    fn lind1(&self) -> Result<bool> {
        self.every_nontrivial(|g| any(&self.candidates(g), |s| self.saturated(s)))
    }

    fn lind2(&self) -> Result<bool> {
        self.every_underivation(|g, a| any(&self.candidates(g), |s| self.alpha_saturated(s, a)))
    }

    fn lind3(&self) -> Result<bool> {
        self.every_nontrivial(|g| any(&self.candidates(g), |s| self.maximal_nontrivial(s)))
    }

    fn lind4(&self) -> Result<bool> {
        self.every_underivation(|g, a| any(&self.candidates(g), |s| self.relmax(s, a)))
    }

    fn tarski(&self) -> Result<bool> {
        let reflexive = all(&self.sets, |g| Ok(self.sub(g, &self.c(g)?)))?;
        let monotone = all(&self.sets, |g| {
            let cg = self.c(g)?;
            all(&self.sets, |s| {
                Ok(!self.sub(g, s) || self.sub(&cg, &self.c(s)?))
            })
        })?;
        let transitive = all(&self.sets, |g| {
            let cg = self.c(g)?;
            all(&self.sets, |s| {
                Ok(!self.sub(s, &cg) || self.sub(&self.c(s)?, &cg))
            })
        })?;
        Ok(reflexive && monotone && transitive)
    }
}

fn all<T>(xs: &[T], f: impl Fn(&T) -> Result<bool>) -> Result<bool> {
    for x in xs {
        if !f(x)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn any<T>(xs: &[T], f: impl Fn(&T) -> Result<bool>) -> Result<bool> {
    for x in xs {
        if f(x)? {
            return Ok(true);
        }
    }
    Ok(false)
}

use Discharge::{CaseAnalysis as Case, Exhaustive, SymmetryReduction as Symmetry};

fn g1(ctx: &Ctx) -> Vec<ClaimOutcome> {
    let odd = |g: &SymbolicSet| g.finite_len().is_some_and(|k| k % 2 == 1);
    vec![
        claim(
            "odd-sets-saturated",
            "a finite Γ with |Γ| odd is α-saturated for every α",
            Case,
            true,
            all(&ctx.sets, |g| {
                Ok(!odd(g) || all(&ctx.probes, |&a| ctx.alpha_saturated(g, a))?)
            }),
        ),
        claim(
            "other-sets-trivial",
            "every infinite Γ and every finite Γ of even size is trivial",
            Symmetry,
            true,
            all(&ctx.sets, |g| Ok(odd(g) || ctx.trivial(g)?)),
        ),
        claim("lindI", "of Lindenbaum-I-type", Symmetry, true, ctx.lind1()),
        claim(
            "lindII",
            "of Lindenbaum-II-type",
            Symmetry,
            true,
            ctx.lind2(),
        ),
        claim(
            "lindIII",
            "of Lindenbaum-III-type: adding two elements keeps a nontrivial set nontrivial",
            Symmetry,
            false,
            ctx.lind3(),
        ),
        claim(
            "lindIV",
            "of Lindenbaum-IV-type",
            Symmetry,
            false,
            ctx.lind4(),
        ),
    ]
}

fn g2(ctx: &Ctx) -> Vec<ClaimOutcome> {
    let item = ctx.item;
    let lambda0 = item.consequences(&SymbolicSet::empty());
    let outside = lambda0
        .as_ref()
        .ok()
        .and_then(|l| ctx.probes.iter().copied().find(|&p| !l.contains(p)));
    vec![
        claim(
            "finite-gives-lambda0",
            "C(Γ) = Λ₀ for every finite Γ",
            Case,
            true,
            lambda0
                .clone()
                .and_then(|l| all(&ctx.sets, |g| Ok(!g.is_finite() || ctx.c(g)? == l))),
        ),
        claim(
            "carrier-nontrivial",
            "C(L) = L∖Λ₀ is not L",
            Exhaustive,
            true,
            ctx.trivial(&SymbolicSet::FullCarrier).map(|t| !t),
        ),
        claim(
            "finite-not-saturated",
            "no finite Γ is α-saturated for α ∉ Λ₀",
            Case,
            true,
            all(&ctx.sets, |g| {
                Ok(!g.is_finite()
                    || !any(&ctx.probes, |&a| {
                        Ok(!lambda0.clone()?.contains(a) && ctx.alpha_saturated(g, a)?)
                    })?)
            }),
        ),
        claim(
            "empty-underives-outside",
            "∅ ⊬ α for some α ∉ Λ₀ and no α-saturated set contains ∅",
            Case,
            true,
            match outside {
                Some(a) => {
                    let e = SymbolicSet::empty();
                    ctx.derives(&e, a).and_then(|d| {
                        Ok(!d && !any(&ctx.candidates(&e), |s| ctx.alpha_saturated(s, a))?)
                    })
                }
                None => Ok(false),
            },
        ),
        claim(
            "lindII",
            "of Lindenbaum-II-type",
            Symmetry,
            false,
            ctx.lind2(),
        ),
        claim(
            "lindIII",
            "of Lindenbaum-III-type: L itself is maximal nontrivial",
            Symmetry,
            true,
            ctx.lind3(),
        ),
    ]
}

fn g3(ctx: &Ctx) -> Vec<ClaimOutcome> {
    vec![
        claim(
            "c-4-7",
            "C({4, 7}) = ℕ∖{2}",
            Exhaustive,
            true,
            ctx.c(&SymbolicSet::nats([4, 7]))
                .map(|c| c == SymbolicSet::cofinite([nat(2)])),
        ),
        claim(
            "finite-relmax",
            "a finite Γ with |Γ| = n is relatively maximal in n",
            Case,
            true,
            all(&ctx.sets, |g| match g.finite_len() {
                Some(k) => ctx.relmax(g, nat(k as u64)),
                None => Ok(true),
            }),
        ),
        claim(
            "lindIV",
            "of Lindenbaum-IV-type",
            Symmetry,
            true,
            ctx.lind4(),
        ),
        claim(
            "lindIII",
            "of Lindenbaum-III-type",
            Symmetry,
            false,
            ctx.lind3(),
        ),
    ]
}

fn g4(ctx: &Ctx) -> Vec<ClaimOutcome> {
    vec![
        claim("tarski", "of Tarski-type", Case, true, ctx.tarski()),
        claim(
            "no-saturated-sets",
            "no set is saturated",
            Case,
            true,
            all(&ctx.sets, |g| ctx.saturated(g).map(|s| !s)),
        ),
        claim(
            "lindI",
            "of Lindenbaum-I-type: ∅ is nontrivial",
            Symmetry,
            false,
            ctx.lind1(),
        ),
    ]
}

fn g5(ctx: &Ctx) -> Vec<ClaimOutcome> {
    let s = three_element_example();
    let set = |e: &[usize]| Subset::from_elems(e.iter().copied());
    let char1 = |thm| check_characterization(&s, thm, 1);
    vec![
        claim(
            "c-0",
            "C({0}) = C({0,1}) = {0,1}",
            Exhaustive,
            true,
            Ok(s.c(set(&[0])) == set(&[0, 1]) && s.c(set(&[0, 1])) == set(&[0, 1])),
        ),
        claim(
            "empty-trivial",
            "∅ is trivial",
            Exhaustive,
            true,
            check_set(&s, &SetProperty::Trivial, Subset::EMPTY).map(|v| v.holds()),
        ),
        claim(
            "maximal-2-saturated",
            "{0,1} is a maximal 2-saturated set",
            Exhaustive,
            true,
            check_set(&s, &SetProperty::MaximalAlphaSaturated(2), set(&[0, 1])).map(|v| v.holds()),
        ),
        claim(
            "maximal-nontrivial",
            "{0,1} is maximal nontrivial",
            Exhaustive,
            true,
            check_set(&s, &SetProperty::MaximalNontrivial, set(&[0, 1])).map(|v| v.holds()),
        ),
        claim(
            "not-monotone",
            "not monotone",
            Exhaustive,
            false,
            check_structure(&s, &StructureProperty::Monotone).map(|v| v.holds()),
        ),
        claim(
            "tarski",
            "of Tarski-type",
            Exhaustive,
            false,
            char1(Theorem::CharTar),
        ),
        claim(
            "lindI",
            "of Lindenbaum-I-type",
            Exhaustive,
            true,
            ctx.lind1(),
        ),
        claim(
            "lindII",
            "of Lindenbaum-II-type",
            Exhaustive,
            true,
            ctx.lind2(),
        ),
        claim(
            "lindIII",
            "of Lindenbaum-III-type",
            Exhaustive,
            true,
            char1(Theorem::CharT3Lind),
        ),
        claim(
            "lindIV",
            "of Lindenbaum-IV-type",
            Exhaustive,
            true,
            char1(Theorem::CharT4Lind),
        ),
    ]
}

fn omega_common(ctx: &Ctx) -> (Result<bool>, Result<bool>, Result<bool>) {
    (ctx.tarski(), ctx.lind2(), ctx.lind3())
}

fn g6(ctx: &Ctx) -> Vec<ClaimOutcome> {
    let one = SymbolicSet::Downset(nat(1));
    let (tarski, lind2, lind3) = omega_common(ctx);
    let lind1 = ctx.lind1();
    let tl1 = match (&tarski, &lind1) {
        (Ok(t), Ok(l)) => Ok(*t && *l),
        (Err(e), _) | (_, Err(e)) => Err(e.clone()),
    };
    vec![
        claim(
            "c-downset-1",
            "C(1) = 1",
            Exhaustive,
            true,
            ctx.c(&one).map(|c| c == one),
        ),
        claim(
            "patch",
            "C(ω) = ω+1",
            Exhaustive,
            true,
            ctx.c(&SymbolicSet::Downset(Ordinal::OMEGA))
                .map(|c| c == SymbolicSet::Downset(w(1))),
        ),
        claim(
            "ordinals-self-saturated",
            "every α ≠ ω is α-saturated; δ ∉ α splits into finite δ and δ = ω+n",
            Case,
            true,
            all(&ctx.probes, |&a| {
                Ok(a == Ordinal::OMEGA || ctx.alpha_saturated(&SymbolicSet::Downset(a), a)?)
            }),
        ),
        claim(
            "one-underives-omega",
            "1 ⊬ ω",
            Exhaustive,
            true,
            ctx.derives(&one, Ordinal::OMEGA).map(|d| !d),
        ),
        claim(
            "no-omega-saturated-above-1",
            "no ω-saturated set contains 1",
            Case,
            true,
            any(&ctx.candidates(&one), |s| {
                ctx.alpha_saturated(s, Ordinal::OMEGA)
            })
            .map(|f| !f),
        ),
        claim(
            "cofinal-rejected",
            "a cofinal Γ has no containing ordinal",
            Exhaustive,
            true,
            Ok(matches!(
                ctx.c(&SymbolicSet::MarkedInfinite(Marked::OmegaTail)),
                Err(Error::NoContainingOrdinal(_))
            )),
        ),
        claim("tarski", "of Tarski-type", Case, true, tarski),
        claim("tl1", "of TL-1-type", Symmetry, true, tl1),
        claim("lindII", "of Lindenbaum-II-type", Symmetry, false, lind2),
        claim(
            "lindIII",
            "of Lindenbaum-III-type: there are no maximal nontrivial sets",
            Symmetry,
            false,
            lind3,
        ),
    ]
}

fn g7(ctx: &Ctx) -> Vec<ClaimOutcome> {
    let (tarski, lind2, lind3) = omega_common(ctx);
    vec![
        claim(
            "ordinals-self-saturated",
            "every α is α-saturated",
            Case,
            true,
            all(&ctx.probes, |&a| {
                ctx.alpha_saturated(&SymbolicSet::Downset(a), a)
            }),
        ),
        claim(
            "c-omega",
            "C(ω) = ω",
            Exhaustive,
            true,
            ctx.c(&SymbolicSet::Downset(Ordinal::OMEGA))
                .map(|c| c == SymbolicSet::Downset(Ordinal::OMEGA)),
        ),
        claim("tarski", "of Tarski-type", Case, true, tarski),
        claim("lindII", "of Lindenbaum-II-type", Symmetry, true, lind2),
        claim("lindIII", "of Lindenbaum-III-type", Symmetry, false, lind3),
    ]
}

fn g8(ctx: &Ctx) -> Vec<ClaimOutcome> {
    let two = SymbolicSet::nats([2]);
    vec![
        claim(
            "finite-branch",
            "C({2}) = {2}",
            Exhaustive,
            true,
            ctx.c(&two).map(|c| c == two),
        ),
        claim(
            "infinite-branch",
            "C(2ℤ⁺) = 2ℤ⁺",
            Exhaustive,
            true,
            ctx.c(&SymbolicSet::MultiplesOf(2))
                .map(|c| c == SymbolicSet::MultiplesOf(2)),
        ),
        claim(
            "prime-multiples-maximal",
            "pℤ⁺ is maximal nontrivial; a proper superset adds some k with p ∤ k",
            Symmetry,
            true,
            all(&[2, 3, 5, 7], |&p| {
                ctx.maximal_nontrivial(&SymbolicSet::MultiplesOf(p))
            }),
        ),
        claim(
            "two-underives-four",
            "{2} ⊬ 4",
            Exhaustive,
            true,
            ctx.derives(&two, nat(4)).map(|d| !d),
        ),
        claim(
            "no-4-saturated-above-2",
            "{2} is not contained in a 4-saturated set",
            Case,
            true,
            any(&ctx.candidates(&two), |s| ctx.alpha_saturated(s, nat(4))).map(|f| !f),
        ),
        claim("tarski", "of Tarski-type", Case, true, ctx.tarski()),
        claim(
            "lindIII",
            "of Lindenbaum-III-type",
            Symmetry,
            true,
            ctx.lind3(),
        ),
        claim(
            "lindII",
            "of Lindenbaum-II-type",
            Symmetry,
            false,
            ctx.lind2(),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_item_passes() {
        for report in run_all(Execution::Sequential) {
            for c in &report.claims {
                assert!(c.passed(), "{} {}: {:?}", report.gallery, c.id, c);
            }
        }
    }

    #[test]
    fn g5_matches_classifier() {
        let report = run_claims(GalleryId::G5ThreeElem);
        let cls = crate::classify::classify(&three_element_example()).unwrap();
        for class in crate::classify::Class::ALL {
            if let Some(v) = report.actual(class.name()) {
                assert_eq!(v, cls.get(class), "{class:?}");
            }
        }
    }

    #[test]
    fn lambda0_parameter_passes() {
        let g2 = GalleryItem::lambda0(SymbolicSet::nats([3])).unwrap();
        let report = run_item(&g2);
        assert!(report.passed(), "{report:?}");
    }
}
