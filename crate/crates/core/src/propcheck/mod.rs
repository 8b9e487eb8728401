//! Random corpora and the theorem registry.

pub mod generator;
pub mod registry;

pub use generator::{corpus, exhaustive, generate, GeneratorSpec, Sample, Strategy};
pub use registry::{
    run_registry_with, run_samples, select, select_from, Entry, EntryReport, Facts, FailureWitness,
    Outcome, RegistryReport, Subject, NEED_REFLEXIVITY, REGISTRY,
};

use crate::error::Result;
use crate::par::Execution;

/// Generates every spec's corpus and runs `entries` over the concatenation.
pub fn run_registry(
    specs: &[GeneratorSpec],
    entries: &[Entry],
    exec: Execution,
) -> Result<RegistryReport> {
    let mut samples = Vec::new();
    for spec in specs {
        samples.extend(corpus(spec)?);
    }
    run_samples(&samples, entries, exec)
}
