//! Definitional classification into Tarski, Lindenbaum-I..IV and TL-1..4.
//!
//! [`classify`] quantifies over every `Γ` and `α` exactly as the definitions
//! read. The characterization statements live in [`characterize`], written
//! without any of the helpers used here so the two can be cross-checked.

pub mod characterize;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::budget::Scan;
use crate::error::Result;
use crate::par::Execution;
use crate::properties::{check_structure, SetCensus, StructureProperty, StructureWitness, Verdict};
use crate::structure::LogicalStructure;
use crate::subset::Subset;

pub use characterize::{check_characterization, Theorem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Class {
    #[serde(rename = "reflexive")]
    Reflexive,
    #[serde(rename = "monotone")]
    Monotone,
    #[serde(rename = "transitive")]
    Transitive,
    #[serde(rename = "cut")]
    Cut,
    #[serde(rename = "mixed-cut")]
    MixedCut,
    #[serde(rename = "tarski")]
    Tarski,
    #[serde(rename = "lindI")]
    LindI,
    #[serde(rename = "lindII")]
    LindII,
    #[serde(rename = "lindIII")]
    LindIII,
    #[serde(rename = "lindIV")]
    LindIV,
    #[serde(rename = "tl1")]
    Tl1,
    #[serde(rename = "tl2")]
    Tl2,
    #[serde(rename = "tl3")]
    Tl3,
    #[serde(rename = "tl4")]
    Tl4,
}

impl Class {
    pub const ALL: [Class; 14] = [
        Class::Reflexive,
        Class::Monotone,
        Class::Transitive,
        Class::Cut,
        Class::MixedCut,
        Class::Tarski,
        Class::LindI,
        Class::LindII,
        Class::LindIII,
        Class::LindIV,
        Class::Tl1,
        Class::Tl2,
        Class::Tl3,
        Class::Tl4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Class::Reflexive => "reflexive",
            Class::Monotone => "monotone",
            Class::Transitive => "transitive",
            Class::Cut => "cut",
            Class::MixedCut => "mixed-cut",
            Class::Tarski => "tarski",
            Class::LindI => "lindI",
            Class::LindII => "lindII",
            Class::LindIII => "lindIII",
            Class::LindIV => "lindIV",
            Class::Tl1 => "tl1",
            Class::Tl2 => "tl2",
            Class::Tl3 => "tl3",
            Class::Tl4 => "tl4",
        }
    }

    pub fn from_name(name: &str) -> Option<Class> {
        Class::ALL.into_iter().find(|c| c.name() == name)
    }

    fn lind(i: usize) -> Class {
        [Class::LindI, Class::LindII, Class::LindIII, Class::LindIV][i]
    }

    fn tl(i: usize) -> Class {
        [Class::Tl1, Class::Tl2, Class::Tl3, Class::Tl4][i]
    }
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a class verdict is false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Counterexample {
    Structure(StructureWitness),
    /// `Γ` (with `Γ ⊬ α` where relevant) has no extension of the required kind.
    NoExtension {
        gamma: Subset,
        alpha: Option<usize>,
    },
    /// A conjunct of the class is false.
    Inherited {
        from: Class,
    },
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Counterexample::Structure(w) => w.fmt(f),
            Counterexample::NoExtension {
                gamma,
                alpha: Some(a),
            } => {
                write!(f, "{gamma} ⊬ {a} has no suitable extension")
            }
            Counterexample::NoExtension { gamma, alpha: None } => {
                write!(f, "nontrivial {gamma} has no suitable extension")
            }
            Counterexample::Inherited { from } => write!(f, "{from} is false"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub verdicts: BTreeMap<Class, bool>,
    pub witnesses: BTreeMap<Class, Counterexample>,
}

impl ClassificationReport {
    pub fn get(&self, c: Class) -> bool {
        self.verdicts[&c]
    }

    /// Relationships every report must satisfy; empty when consistent.
    pub fn invariant_violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let g = |c| self.get(c);
        for i in 0..4 {
            if g(Class::tl(i)) != (g(Class::Tarski) && g(Class::lind(i))) {
                out.push(format!("{} != tarski && {}", Class::tl(i), Class::lind(i)));
            }
        }
        let implications = [
            (Class::LindIV, Class::LindII),
            (Class::LindII, Class::LindI),
            (Class::LindIII, Class::LindI),
            (Class::MixedCut, Class::Cut),
        ];
        for (a, b) in implications {
            if g(a) && !g(b) {
                out.push(format!("{a} without {b}"));
            }
        }
        if g(Class::Tl2) != g(Class::Tl4) {
            out.push("tl2 != tl4".into());
        }
        let tarski = g(Class::Reflexive) && g(Class::Monotone) && g(Class::Transitive);
        if g(Class::Tarski) != tarski {
            out.push("tarski != reflexive && monotone && transitive".into());
        }
        for (c, v) in &self.verdicts {
            if !v && !self.witnesses.contains_key(c) {
                out.push(format!("{c} is false without a witness"));
            }
        }
        out
    }
}

pub fn classify(s: &LogicalStructure) -> Result<ClassificationReport> {
    classify_with(s, Execution::default())
}

pub fn classify_with(s: &LogicalStructure, exec: Execution) -> Result<ClassificationReport> {
    let n = s.n();
    Scan::Transitivity.admit(n)?;
    Scan::MixedCut.admit(n)?;
    Scan::Lindenbaum.admit(n)?;

    let mut verdicts = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    let mut record = |c: Class, w: Option<Counterexample>| {
        verdicts.insert(c, w.is_none());
        if let Some(w) = w {
            witnesses.insert(c, w);
        }
    };

    let structural = [
        (Class::Reflexive, StructureProperty::Reflexive),
        (Class::Monotone, StructureProperty::Monotone),
        (Class::Transitive, StructureProperty::Transitive),
        (Class::Cut, StructureProperty::Cut),
        (Class::MixedCut, StructureProperty::MixedCut),
        (Class::Tarski, StructureProperty::TarskiByDef),
    ];
    let mut tarski = true;
    for (class, prop) in structural {
        let w = match check_structure(s, &prop)? {
            Verdict::Holds => None,
            Verdict::Fails(w) => Some(Counterexample::Structure(w)),
        };
        if class == Class::Tarski {
            tarski = w.is_none();
        }
        record(class, w);
    }

    let census = SetCensus::compute_with(s, exec);
    let lind = lindenbaum_failures(s, &census, exec);
    for (i, w) in lind.iter().enumerate() {
        record(Class::lind(i), w.clone());
    }
    for (i, w) in lind.iter().enumerate() {
        let w = if !tarski {
            Some(Counterexample::Inherited {
                from: Class::Tarski,
            })
        } else if w.is_some() {
            Some(Counterexample::Inherited {
                from: Class::lind(i),
            })
        } else {
            None
        };
        record(Class::tl(i), w);
    }
    Ok(ClassificationReport {
        verdicts,
        witnesses,
    })
}

/// First failing instance of each Lindenbaum type, in `Γ` order.
fn lindenbaum_failures(
    s: &LogicalStructure,
    census: &SetCensus,
    exec: Execution,
) -> [Option<Counterexample>; 4] {
    let n = s.n();
    let full = s.full();
    let per_gamma = exec.map(1 << n, |i| {
        let g = Subset::from_bits(i as u32);
        let c = s.c(g);
        let mut found: [Option<Counterexample>; 4] = Default::default();
        if c == full {
            return found;
        }
        let exists = |pred: &dyn Fn(Subset) -> bool| g.supersets(n).any(pred);
        if !exists(&|sg| census.saturated(sg)) {
            found[0] = Some(Counterexample::NoExtension {
                gamma: g,
                alpha: None,
            });
        }
        if !exists(&|sg| census.maximal_nontrivial(sg)) {
            found[2] = Some(Counterexample::NoExtension {
                gamma: g,
                alpha: None,
            });
        }
        for a in c.complement(n).elems() {
            if found[1].is_none() && !exists(&|sg| census.saturated_in(sg).contains(a)) {
                found[1] = Some(Counterexample::NoExtension {
                    gamma: g,
                    alpha: Some(a),
                });
            }
            if found[3].is_none() && !exists(&|sg| census.relmax_in(sg).contains(a)) {
                found[3] = Some(Counterexample::NoExtension {
                    gamma: g,
                    alpha: Some(a),
                });
            }
        }
        found
    });
    let mut out: [Option<Counterexample>; 4] = Default::default();
    for found in per_gamma {
        for (slot, w) in out.iter_mut().zip(found) {
            if slot.is_none() {
                *slot = w;
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum LimKind {
    /// `{Σ ⊇ Γ : Σ ⊬ α}`.
    Pair { gamma: Subset, alpha: usize },
    /// `{Σ ⊇ Γ : Σ nontrivial}`.
    Nontrivial { gamma: Subset },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LimSet {
    pub kind: LimKind,
    pub members: Vec<Subset>,
    pub maximal: Vec<Subset>,
}

/// Enumerates a Lim family and its maximal elements by pairwise scan.
pub fn lim(s: &LogicalStructure, kind: LimKind) -> Result<LimSet> {
    let (gamma, keep): (Subset, Box<dyn Fn(Subset) -> bool>) = match kind {
        LimKind::Pair { gamma, alpha } => {
            s.check_elem(alpha)?;
            (gamma, Box::new(move |sg| !s.c(sg).contains(alpha)))
        }
        LimKind::Nontrivial { gamma } => (gamma, Box::new(move |sg| s.c(sg) != s.full())),
    };
    s.check_subset(gamma)?;
    let members: Vec<Subset> = gamma.supersets(s.n()).filter(|&sg| keep(sg)).collect();
    let maximal = members
        .iter()
        .copied()
        .filter(|&m| !members.iter().any(|&o| m.is_proper_subset_of(o)))
        .collect();
    Ok(LimSet {
        kind,
        members,
        maximal,
    })
}
