//! Finite logical structures `(L, ⊢)` with Tarski, Lindenbaum and
//! Tarski-Lindenbaum classification, bivaluation semantics, a gallery of
//! separating examples over symbolic infinite carriers, and a randomized
//! theorem registry.

pub mod bival;
pub mod budget;
pub mod classify;
pub mod cli;
pub mod error;
pub mod format;
pub mod gallery;
pub mod par;
pub mod propcheck;
pub mod properties;
pub mod structure;
pub mod subset;

pub use error::{Error, Result};
pub use par::Execution;
pub use structure::{
    ArrowTable, BivaluationSet, LogicalStructure, Origin, Rule, Source, TableDefault,
};
pub use subset::{all_subsets, Subset, MAX_CARRIER};
