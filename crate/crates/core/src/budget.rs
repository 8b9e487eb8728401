//! Soft caps on the exhaustive scans.
//!
//! Dense storage is always limited to `n <= 16`. The quadratic scans have
//! lower default caps; setting `LSX_BUDGET=N` replaces every soft cap with `N`.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::subset::MAX_CARRIER;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scan {
    /// Pairs `(Γ, Σ ⊆ C(Γ))`, `3^n`.
    Transitivity,
    /// Pairs `(Γ, Σ)` times `α`, `4^n · n`.
    MixedCut,
    /// Supersets of every set, `3^n · n`.
    Lindenbaum,
}

impl Scan {
    pub fn name(self) -> &'static str {
        match self {
            Scan::Transitivity => "transitivity",
            Scan::MixedCut => "mixed-cut",
            Scan::Lindenbaum => "lindenbaum",
        }
    }

    fn default_cap(self) -> usize {
        match self {
            Scan::Transitivity => 10,
            Scan::MixedCut => 8,
            Scan::Lindenbaum => 10,
        }
    }

    pub fn cap(self) -> usize {
        override_cap().unwrap_or_else(|| self.default_cap())
    }

    pub fn admit(self, n: usize) -> Result<()> {
        let cap = self.cap();
        if n > cap {
            Err(Error::Budget {
                check: self.name(),
                n,
                cap,
            })
        } else {
            Ok(())
        }
    }
}

fn override_cap() -> Option<usize> {
    static CAP: OnceLock<Option<usize>> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("LSX_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .map(|v| v.min(MAX_CARRIER))
    })
}
