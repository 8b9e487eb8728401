//! Seeded random structures.
//!
//! Every sample is a pure function of `(strategy, seed, index)`: the stream
//! is a ChaCha8 generator keyed by the seed and strategy, positioned at
//! `index`. Draws with an empty relation are rejected and yield `None`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::properties::monotone_envelope;
use crate::structure::{ArrowTable, BivaluationSet, LogicalStructure, Origin, Source};
use crate::subset::{all_subsets, Subset, MAX_CARRIER};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Arbitrary,
    Monotone,
    Bivaluation,
    Arrowed,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [
        Strategy::Arbitrary,
        Strategy::Monotone,
        Strategy::Bivaluation,
        Strategy::Arrowed,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Arbitrary => "arbitrary",
            Strategy::Monotone => "monotone",
            Strategy::Bivaluation => "bivaluation",
            Strategy::Arrowed => "arrowed",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "arbitrary" => Some(Strategy::Arbitrary),
            "monotone" => Some(Strategy::Monotone),
            "bivaluation" | "bivaluation-induced" => Some(Strategy::Bivaluation),
            "arrowed" => Some(Strategy::Arrowed),
            _ => None,
        }
    }

    fn tag(self) -> u64 {
        match self {
            Strategy::Arbitrary => 0x61,
            Strategy::Monotone => 0x6d,
            Strategy::Bivaluation => 0x62,
            Strategy::Arrowed => 0x72,
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorSpec {
    pub strategy: Strategy,
    pub size_min: usize,
    pub size_max: usize,
    pub seed: u64,
    /// Accepted samples wanted from [`corpus`].
    pub count: usize,
}

impl GeneratorSpec {
    pub fn new(
        strategy: Strategy,
        sizes: std::ops::RangeInclusive<usize>,
        seed: u64,
        count: usize,
    ) -> Self {
        GeneratorSpec {
            strategy,
            size_min: *sizes.start(),
            size_max: *sizes.end(),
            seed,
            count,
        }
    }

    fn validate(&self) -> Result<()> {
        for n in [self.size_min, self.size_max] {
            if n == 0 || n > MAX_CARRIER {
                return Err(Error::CarrierSize(n));
            }
        }
        if self.size_min > self.size_max {
            return Err(Error::CarrierSize(self.size_min));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct Sample {
    pub strategy: Strategy,
    pub index: usize,
    pub structure: LogicalStructure,
    /// Every sample carries a connective for the arrow theorems.
    pub arrow: ArrowTable,
}

fn rng_for(spec: &GeneratorSpec, index: usize) -> ChaCha8Rng {
    let key = spec.seed ^ spec.strategy.tag().wrapping_mul(0x9e37_79b9_7f4a_7c15);
    let mut rng = ChaCha8Rng::seed_from_u64(key);
    rng.set_stream(index as u64);
    rng
}

/// Sample `index` of `spec`, or `None` if the draw has an empty relation.
pub fn generate(spec: &GeneratorSpec, index: usize) -> Result<Option<Sample>> {
    spec.validate()?;
    let mut rng = rng_for(spec, index);
    let n = rng.gen_range(spec.size_min..=spec.size_max);
    let drawn = match spec.strategy {
        Strategy::Arbitrary => arbitrary(&mut rng, n).map(|s| (s, None)),
        Strategy::Monotone => monotone(&mut rng, n).map(|s| (s, None)),
        Strategy::Bivaluation => bivaluation(&mut rng, n),
        Strategy::Arrowed => {
            let base = match rng.gen_range(0..3) {
                0 => arbitrary(&mut rng, n).map(|s| (s, None)),
                1 => monotone(&mut rng, n).map(|s| (s, None)),
                _ => bivaluation(&mut rng, n),
            };
            base.map(|(s, _)| {
                let a = random_arrow(&mut rng, n);
                (s, Some(a))
            })
        }
    };
    let Some((structure, arrow)) = drawn else {
        return Ok(None);
    };
    let arrow = match arrow {
        Some(a) => a,
        None => sidecar_arrow(&mut rng, &structure),
    };
    Ok(Some(Sample {
        strategy: spec.strategy,
        index,
        structure,
        arrow,
    }))
}

/// The first `spec.count` accepted samples, scanning indices upward.
pub fn corpus(spec: &GeneratorSpec) -> Result<Vec<Sample>> {
    spec.validate()?;
    let mut out = Vec::with_capacity(spec.count);
    let mut index = 0;
    let mut misses = 0;
    while out.len() < spec.count {
        match generate(spec, index)? {
            Some(s) => {
                out.push(s);
                misses = 0;
            }
            None => {
                misses += 1;
                // Only reachable for degenerate specs; keeps the loop finite.
                if misses > 10_000 {
                    break;
                }
            }
        }
        index += 1;
    }
    Ok(out)
}

fn table_structure(n: usize, table: Vec<Subset>) -> Option<LogicalStructure> {
    LogicalStructure::from_table(n, table, Origin::ExplicitTable).ok()
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize, density: f64) -> Subset {
    Subset::from_elems((0..n).filter(|_| rng.gen_bool(density)))
}

fn arbitrary(rng: &mut ChaCha8Rng, n: usize) -> Option<LogicalStructure> {
    let p = rng.gen_range(0.1..0.9);
    let table = all_subsets(n).map(|_| random_subset(rng, n, p)).collect();
    table_structure(n, table)
}

fn monotone(rng: &mut ChaCha8Rng, n: usize) -> Option<LogicalStructure> {
    // The envelope fills up quickly, so the raw table is kept sparse.
    let p = rng.gen_range(0.02..0.35);
    let raw: Vec<Subset> = all_subsets(n).map(|_| random_subset(rng, n, p)).collect();
    table_structure(n, monotone_envelope(&raw, n))
}

/// A random nonempty valuation set, or with some probability on carriers of
/// size 2 or 4 the powerset algebra of one or two worlds with material
/// implication as the arrow.
fn bivaluation(rng: &mut ChaCha8Rng, n: usize) -> Option<(LogicalStructure, Option<ArrowTable>)> {
    if (n == 2 || n == 4) && rng.gen_bool(0.25) {
        return Some(powerset_algebra(rng, n));
    }
    let k = rng.gen_range(1..=(2 * n + 2).min(1 << n));
    let p = rng.gen_range(0.2..0.8);
    let v = BivaluationSet::new(n, (0..k).map(|_| random_subset(rng, n, p))).ok()?;
    LogicalStructure::build(n, Source::Bivaluations(v))
        .ok()
        .map(|s| (s, None))
}

/// Elements are the subsets of `w` worlds (`n = 2^w`); world `i` makes
/// true exactly the elements containing it.
fn powerset_algebra(rng: &mut ChaCha8Rng, n: usize) -> (LogicalStructure, Option<ArrowTable>) {
    let worlds = n.trailing_zeros() as usize;
    let mask = n - 1;
    let mut chosen: Vec<usize> = (0..worlds).filter(|_| rng.gen_bool(0.5)).collect();
    if chosen.is_empty() {
        chosen.push(rng.gen_range(0..worlds));
    }
    let vals = chosen
        .iter()
        .map(|&w| Subset::from_elems((0..n).filter(|e| e >> w & 1 == 1)));
    let v = BivaluationSet::new(n, vals).expect("valuations fit");
    let s = LogicalStructure::build(n, Source::Bivaluations(v)).expect("nonempty valuation set");
    let op = (0..n * n).map(|i| (!(i / n) & mask) | (i % n)).collect();
    (
        s,
        Some(ArrowTable::new(n, op).expect("closed under implication")),
    )
}

fn random_arrow(rng: &mut ChaCha8Rng, n: usize) -> ArrowTable {
    ArrowTable::new(n, (0..n * n).map(|_| rng.gen_range(0..n)).collect()).expect("entries in range")
}

/// Second projection, a constant arrow at a theorem, or a random table.
fn sidecar_arrow(rng: &mut ChaCha8Rng, s: &LogicalStructure) -> ArrowTable {
    let n = s.n();
    match rng.gen_range(0..3) {
        0 => ArrowTable::second_projection(n),
        1 => {
            let theorems: Vec<usize> = s.c(Subset::EMPTY).elems().collect();
            let c = if theorems.is_empty() {
                rng.gen_range(0..n)
            } else {
                theorems[rng.gen_range(0..theorems.len())]
            };
            ArrowTable::new(n, vec![c; n * n]).expect("entries in range")
        }
        _ => random_arrow(rng, n),
    }
}

/// Every structure on `n` elements, in table order. Limited to `n <= 2`.
pub fn exhaustive(n: usize) -> Result<Vec<LogicalStructure>> {
    if n == 0 || n > 2 {
        return Err(Error::Budget {
            check: "exhaustive",
            n,
            cap: 2,
        });
    }
    let size = 1usize << n;
    let bits = n * size;
    let cell = (1u32 << n) - 1;
    Ok((0u64..1 << bits)
        .filter_map(|code| {
            let table = (0..size)
                .map(|i| Subset::from_bits((code >> (i * n)) as u32 & cell))
                .collect();
            table_structure(n, table)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{classify, Class};

    #[test]
    fn deterministic() {
        let spec = GeneratorSpec::new(Strategy::Arbitrary, 2..=5, 9, 0);
        for i in 0..20 {
            let a = generate(&spec, i).unwrap().map(|s| (s.structure, s.arrow));
            let b = generate(&spec, i).unwrap().map(|s| (s.structure, s.arrow));
            assert_eq!(a, b);
        }
    }

    #[test]
    fn strategy_examples() {
        let b = generate(&GeneratorSpec::new(Strategy::Bivaluation, 4..=4, 1, 1), 0)
            .unwrap()
            .unwrap();
        assert!(classify(&b.structure).unwrap().get(Class::Tarski));
        let m = generate(&GeneratorSpec::new(Strategy::Monotone, 3..=3, 7, 1), 0)
            .unwrap()
            .unwrap();
        assert!(classify(&m.structure).unwrap().get(Class::Monotone));
    }

    #[test]
    fn one_element_draws() {
        let spec = GeneratorSpec::new(Strategy::Arbitrary, 1..=1, 3, 0);
        for i in 0..50 {
            if let Some(s) = generate(&spec, i).unwrap() {
                assert_eq!(s.structure.n(), 1);
                assert!(s.structure.table().iter().any(|c| !c.is_empty()));
            }
        }
    }

    #[test]
    fn exhaustive_counts() {
        assert_eq!(exhaustive(1).unwrap().len(), 3);
        assert_eq!(exhaustive(2).unwrap().len(), 255);
        assert!(exhaustive(3).is_err());
    }

    #[test]
    fn corpus_size_and_caps() {
        let spec = GeneratorSpec::new(Strategy::Monotone, 2..=4, 5, 40);
        assert_eq!(corpus(&spec).unwrap().len(), 40);
        assert!(generate(&GeneratorSpec::new(Strategy::Arbitrary, 2..=17, 0, 1), 0).is_err());
    }
}
