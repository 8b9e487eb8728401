//! Characterization statements, each evaluated literally.
//!
//! Nothing in here calls into `properties`: every predicate is recomputed
//! by plain quantifier scans over the table, so agreement with
//! [`super::classify`] is evidence rather than tautology.

use std::fmt;

use crate::budget::Scan;
use crate::error::{Error, Result};
use crate::structure::LogicalStructure;
use crate::subset::{all_subsets, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theorem {
    /// Tarski-type, four statements.
    CharTar,
    /// Lindenbaum-IV-type, three statements.
    CharT4Lind,
    /// Lindenbaum-III-type, three statements.
    CharT3Lind,
    /// TL-4-type, five statements.
    CharTL4,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [
        Theorem::CharTar,
        Theorem::CharT4Lind,
        Theorem::CharT3Lind,
        Theorem::CharTL4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::CharTar => "Char_Tar",
            Theorem::CharT4Lind => "Char_T4Lind",
            Theorem::CharT3Lind => "Char_T3Lind",
            Theorem::CharTL4 => "Char_TL4",
        }
    }

    pub fn statements(self) -> usize {
        match self {
            Theorem::CharTar => 4,
            Theorem::CharT4Lind | Theorem::CharT3Lind => 3,
            Theorem::CharTL4 => 5,
        }
    }

    /// The class every statement of the theorem is equivalent to.
    pub fn class(self) -> super::Class {
        match self {
            Theorem::CharTar => super::Class::Tarski,
            Theorem::CharT4Lind => super::Class::LindIV,
            Theorem::CharT3Lind => super::Class::LindIII,
            Theorem::CharTL4 => super::Class::Tl4,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evaluates statement `statement` (1-based) of `thm` on `s`.
pub fn check_characterization(
    s: &LogicalStructure,
    thm: Theorem,
    statement: usize,
) -> Result<bool> {
    if statement == 0 || statement > thm.statements() {
        return Err(Error::Statement {
            theorem: thm.name(),
            statement,
        });
    }
    Scan::Transitivity.admit(s.n())?;
    Scan::Lindenbaum.admit(s.n())?;
    let t = Tables::new(s);
    Ok(match (thm, statement) {
        (Theorem::CharTar, 1) => t.tarski(),
        (Theorem::CharTar, 2) => crate::bival::suszko_set_exists(s),
        (Theorem::CharTar, 3) => t.every_underivation(|g, a| {
            t.some_extension(g, |sg| {
                t.strongly_closed[sg.index()] && !t.c(sg).contains(a)
            })
        }),
        (Theorem::CharTar, 4) => t.subsets().all(|g| {
            let cg = t.c(g);
            t.subsets()
                .all(|sg| sg.is_subset_of(cg) == t.c(sg).is_subset_of(cg))
        }),
        (Theorem::CharT4Lind, 1) => t.lind4(),
        (Theorem::CharT4Lind, 2) => t.every_underivation(|g, a| {
            t.some_extension(g, |sg| t.max_alpha_sat[sg.index()].contains(a))
        }),
        (Theorem::CharT4Lind, 3) => t
            .subsets()
            .all(|g| (0..t.n).all(|a| t.has_maximal(g, |sg| !t.c(sg).contains(a)))),
        (Theorem::CharT3Lind, 1) => {
            t.every_nontrivial(|g| t.some_extension(g, |sg| t.max_nontrivial[sg.index()]))
        }
        (Theorem::CharT3Lind, 2) => {
            t.every_nontrivial(|g| t.some_extension(g, |sg| t.max_saturated[sg.index()]))
        }
        (Theorem::CharT3Lind, 3) => t
            .subsets()
            .all(|g| t.has_maximal(g, |sg| t.c(sg) != t.full)),
        (Theorem::CharTL4, 1) => t.tarski() && t.lind4(),
        (Theorem::CharTL4, 2) => t.every_underivation(|g, a| {
            t.some_extension(g, |sg| {
                t.strongly_closed[sg.index()] && t.relmax[sg.index()].contains(a)
            })
        }),
        (Theorem::CharTL4, 3) => t.every_underivation(|g, a| {
            t.some_extension(g, |sg| {
                t.strongly_closed[sg.index()] && t.alpha_sat[sg.index()].contains(a)
            })
        }),
        (Theorem::CharTL4, 4) => t.every_underivation(|g, a| {
            (0..t.n).any(|b| {
                t.c(Subset::singleton(b)).contains(a)
                    && t.some_extension(g, |sg| {
                        t.strongly_closed[sg.index()]
                            && t.alpha_sat[sg.index()].contains(b)
                            && !t.c(sg).contains(a)
                    })
            })
        }),
        (Theorem::CharTL4, 5) => (0..t.n).all(|a| {
            (0..t.n).any(|b| {
                t.subsets().filter(|&g| !t.c(g).contains(a)).all(|g| {
                    t.some_extension(g, |sg| {
                        t.strongly_closed[sg.index()]
                            && t.alpha_sat[sg.index()].contains(b)
                            && !t.c(sg).contains(a)
                    })
                })
            })
        }),
        _ => unreachable!("statement range checked above"),
    })
}

/// Per-subset predicates, each by direct scan.
struct Tables<'a> {
    s: &'a LogicalStructure,
    n: usize,
    full: Subset,
    strongly_closed: Vec<bool>,
    alpha_sat: Vec<Subset>,
    relmax: Vec<Subset>,
    max_alpha_sat: Vec<Subset>,
    max_nontrivial: Vec<bool>,
    max_saturated: Vec<bool>,
}

impl<'a> Tables<'a> {
    fn new(s: &'a LogicalStructure) -> Self {
        let n = s.n();
        let full = s.full();
        let c = |g: Subset| s.c(g);
        let strict_supersets = |g: Subset| g.supersets(n).filter(move |&sg| sg != g);

        let strongly_closed = all_subsets(n)
            .map(|g| g.is_subset_of(c(g)) && g.subsets().all(|sub| c(sub).is_subset_of(g)))
            .collect();
        let alpha_sat: Vec<Subset> = all_subsets(n)
            .map(|g| {
                Subset::from_elems((0..n).filter(|&a| {
                    !c(g).contains(a)
                        && (0..n)
                            .filter(|&b| !g.contains(b))
                            .all(|b| c(g.with(b)).contains(a))
                }))
            })
            .collect();
        let relmax = all_subsets(n)
            .map(|g| {
                Subset::from_elems((0..n).filter(|&a| {
                    !c(g).contains(a) && strict_supersets(g).all(|sg| c(sg).contains(a))
                }))
            })
            .collect();
        let max_alpha_sat = all_subsets(n)
            .map(|g| {
                Subset::from_elems((0..n).filter(|&a| {
                    alpha_sat[g.index()].contains(a)
                        && !strict_supersets(g).any(|sg| alpha_sat[sg.index()].contains(a))
                }))
            })
            .collect();
        let max_nontrivial = all_subsets(n)
            .map(|g| c(g) != full && strict_supersets(g).all(|sg| c(sg) == full))
            .collect();
        let max_saturated = all_subsets(n)
            .map(|g| {
                !alpha_sat[g.index()].is_empty()
                    && strict_supersets(g).all(|sg| alpha_sat[sg.index()].is_empty())
            })
            .collect();
        Tables {
            s,
            n,
            full,
            strongly_closed,
            alpha_sat,
            relmax,
            max_alpha_sat,
            max_nontrivial,
            max_saturated,
        }
    }

    fn c(&self, g: Subset) -> Subset {
        self.s.c(g)
    }

    fn subsets(&self) -> impl Iterator<Item = Subset> {
        all_subsets(self.n)
    }

    fn some_extension(&self, g: Subset, pred: impl Fn(Subset) -> bool) -> bool {
        g.supersets(self.n).any(pred)
    }

    /// `∀Γ, α` with `Γ ⊬ α`.
    fn every_underivation(&self, f: impl Fn(Subset, usize) -> bool) -> bool {
        self.subsets().all(|g| {
            (0..self.n)
                .filter(|&a| !self.c(g).contains(a))
                .all(|a| f(g, a))
        })
    }

    fn every_nontrivial(&self, f: impl Fn(Subset) -> bool) -> bool {
        self.subsets().filter(|&g| self.c(g) != self.full).all(f)
    }

    /// The family `{Σ ⊇ Γ : member(Σ)}` is empty or has a maximal element.
    fn has_maximal(&self, g: Subset, member: impl Fn(Subset) -> bool) -> bool {
        let members: Vec<Subset> = g.supersets(self.n).filter(|&sg| member(sg)).collect();
        let Some(&widest) = members.iter().max_by_key(|m| m.len()) else {
            return true;
        };
        !members.iter().any(|&o| widest.is_proper_subset_of(o))
    }

    fn tarski(&self) -> bool {
        let reflexive = self.subsets().all(|g| g.is_subset_of(self.c(g)));
        let monotone = self.subsets().all(|g| {
            g.supersets(self.n)
                .all(|sg| self.c(g).is_subset_of(self.c(sg)))
        });
        let transitive = self.subsets().all(|g| {
            let cg = self.c(g);
            cg.subsets().all(|sg| self.c(sg).is_subset_of(cg))
        });
        reflexive && monotone && transitive
    }

    fn lind4(&self) -> bool {
        self.every_underivation(|g, a| {
            self.some_extension(g, |sg| self.relmax[sg.index()].contains(a))
        })
    }
}
