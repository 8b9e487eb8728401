use thiserror::Error;

use crate::subset::Subset;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("carrier size {0} outside 1..={max}", max = crate::subset::MAX_CARRIER)]
    CarrierSize(usize),
    #[error("subset {subset} does not fit a carrier of size {n}")]
    Width { subset: Subset, n: usize },
    #[error("element {elem} out of range for a carrier of size {n}")]
    Element { elem: usize, n: usize },
    #[error("carrier sizes differ: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("duplicate table entry for {0}")]
    DuplicateEntry(Subset),
    #[error("unknown rule `{0}`")]
    UnknownRule(String),
    #[error("bivaluation set is empty")]
    EmptyBivaluations,
    #[error("the induced consequence relation is empty")]
    EmptyRelation,
    #[error("arrow table has {got} entries, expected {expected}")]
    ArrowShape { got: usize, expected: usize },
    #[error("budget exceeded: {check} is capped at n <= {cap}, structure has n = {n} (raise with LSX_BUDGET)")]
    Budget {
        check: &'static str,
        n: usize,
        cap: usize,
    },
    #[error("structure is not of TL-4-type")]
    NotTl4,
    #[error("SCS is empty")]
    EmptyScs,
    #[error("statement {statement} is not part of {theorem}")]
    Statement {
        theorem: &'static str,
        statement: usize,
    },
    #[error("no containing ordinal below ω·2 for {0}: the set is cofinal")]
    NoContainingOrdinal(String),
    #[error("descriptor {descriptor} is not valid for gallery {gallery}")]
    Descriptor {
        gallery: &'static str,
        descriptor: String,
    },
    #[error("unknown gallery item `{0}`")]
    UnknownGallery(String),
    #[error("`{0}` is not a subset; use comma-separated elements or `empty`")]
    SubsetSyntax(String),
    #[error("unknown registry entry `{0}`")]
    UnknownTheorem(String),
}
