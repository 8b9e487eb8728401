//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the lines always reach the output.
//! The process fails when a criterion fails in a way not listed in
//! `KNOWN_FAILURES`; a known failure must reproduce exactly as documented.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use lsx::bival::{extract, minimality_probe, BivalKind};
use lsx::classify::{check_characterization, classify, Class, Theorem};
use lsx::format::StructureFile;
use lsx::gallery::{ord_least_containing, run_all, GalleryId, Ordinal, SymbolicSet};
use lsx::propcheck::{
    corpus, exhaustive, run_samples, Entry, Facts, GeneratorSpec, Outcome, Strategy,
    NEED_REFLEXIVITY, REGISTRY,
};
use lsx::structure::three_element_example;
use lsx::{all_subsets, Execution, LogicalStructure, Subset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria expected to fail, with the reason printed alongside.
const KNOWN_FAILURES: [(usize, &str); 1] = [(
    3,
    "seven registry statements are refuted by non-reflexive structures (see README)",
)];

struct Line {
    id: usize,
    title: &'static str,
    passed: bool,
    detail: String,
    /// A failure that reproduced exactly as documented.
    expected_failure: bool,
}

fn within(t: Duration, limit: Duration) -> bool {
    t < limit
}

fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

// Independent oracles, written from the definitions.

fn reflexive(s: &LogicalStructure) -> bool {
    all_subsets(s.n()).all(|g| g.is_subset_of(s.c(g)))
}

fn induced(n: usize, v: &[Subset]) -> Vec<Subset> {
    all_subsets(n)
        .map(|g| {
            v.iter()
                .filter(|x| g.is_subset_of(**x))
                .fold(Subset::full(n), |a, x| a.intersection(*x))
        })
        .collect()
}

fn strongly_closed(s: &LogicalStructure, g: Subset) -> bool {
    g.is_subset_of(s.c(g)) && g.subsets().all(|h| s.c(h).is_subset_of(g))
}

fn alpha_saturated(s: &LogicalStructure, g: Subset, a: usize) -> bool {
    !s.c(g).contains(a)
        && g.complement(s.n())
            .elems()
            .all(|b| s.c(g.with(b)).contains(a))
}

fn relmax(s: &LogicalStructure, g: Subset, a: usize) -> bool {
    !s.c(g).contains(a)
        && g.supersets(s.n())
            .filter(|&x| x != g)
            .all(|x| s.c(x).contains(a))
}

fn oracle_scs(s: &LogicalStructure) -> Vec<Subset> {
    all_subsets(s.n())
        .filter(|&g| strongly_closed(s, g) && (0..s.n()).any(|a| alpha_saturated(s, g, a)))
        .collect()
}

fn oracle_scs_star(s: &LogicalStructure) -> Vec<Subset> {
    let n = s.n();
    all_subsets(n)
        .filter(|&g| {
            strongly_closed(s, g)
                && (0..n).any(|b| {
                    alpha_saturated(s, g, b)
                        && (0..n)
                            .any(|a| !s.c(g).contains(a) && s.c(Subset::singleton(b)).contains(a))
                })
        })
        .collect()
}

fn oracle_relmax(s: &LogicalStructure) -> Vec<Subset> {
    all_subsets(s.n())
        .filter(|&g| (0..s.n()).any(|a| relmax(s, g, a)))
        .collect()
}

fn criterion_1() -> Line {
    let t = Instant::now();
    let r = classify(&three_element_example()).expect("n = 3 is within budget");
    let elapsed = t.elapsed();
    let want = [
        (Class::Tarski, false),
        (Class::LindI, true),
        (Class::LindII, true),
        (Class::LindIII, true),
        (Class::LindIV, true),
        (Class::Tl1, false),
        (Class::Tl2, false),
        (Class::Tl3, false),
        (Class::Tl4, false),
    ];
    let wrong: Vec<&str> = want
        .iter()
        .filter(|(c, v)| r.get(*c) != *v)
        .map(|(c, _)| c.name())
        .collect();
    Line {
        id: 1,
        title: "G5 reproduction",
        passed: wrong.is_empty() && within(elapsed, Duration::from_secs(1)),
        detail: format!("mismatches {wrong:?}, {elapsed:.2?} (limit 1 s)"),
        expected_failure: false,
    }
}

fn criterion_2() -> Line {
    let t = Instant::now();
    let all = exhaustive(2).expect("n = 2");
    let mut disagreements = Vec::new();
    let mut checks = 0;
    for (i, s) in all.iter().enumerate() {
        let r = classify(s).expect("within budget");
        for thm in Theorem::ALL {
            for k in 1..=thm.statements() {
                checks += 1;
                if check_characterization(s, thm, k).expect("valid statement") != r.get(thm.class())
                {
                    disagreements.push((i, thm.name(), k));
                }
            }
        }
    }
    let elapsed = t.elapsed();
    Line {
        id: 2,
        title: "exhaustive n=2 characterization cross-check",
        passed: all.len() == 255 && disagreements.is_empty() && within(elapsed, Duration::from_secs(10)),
        detail: format!(
            "{} tables, {checks} statement checks, {} disagreements {:?}, {elapsed:.2?} (limit 10 s)",
            all.len(),
            disagreements.len(),
            disagreements.iter().take(3).collect::<Vec<_>>()
        ),
        expected_failure: false,
    }
}

fn criterion_3() -> Line {
    let t = Instant::now();
    let specs = [
        GeneratorSpec::new(Strategy::Arbitrary, 2..=6, 2024, 2000),
        GeneratorSpec::new(Strategy::Monotone, 2..=6, 2024, 1500),
        GeneratorSpec::new(Strategy::Bivaluation, 2..=6, 2024, 1500),
    ];
    let samples: Vec<_> = specs
        .iter()
        .flat_map(|s| corpus(s).expect("valid spec"))
        .collect();
    let r = run_samples(&samples, &REGISTRY, Execution::Parallel).expect("within budget");
    let elapsed = t.elapsed();
    let refuted: Vec<&str> = r
        .entries
        .iter()
        .filter(|e| e.failures > 0)
        .map(|e| e.id)
        .collect();
    let uncovered = r.uncovered();
    let passed = samples.len() >= 5000
        && refuted.is_empty()
        && uncovered.is_empty()
        && within(elapsed, Duration::from_secs(120));

    // The documented failure: exactly the listed entries, every minimized
    // witness non-reflexive, and a clean run on the reflexive samples.
    let witnesses_non_reflexive = r.entries.iter().flat_map(|e| &e.witnesses).all(|w| {
        let m = LogicalStructure::from_table(
            w.minimized.n,
            w.minimized.table.clone(),
            lsx::structure::Origin::ExplicitTable,
        )
        .expect("witness tables are valid");
        !reflexive(&m)
    });
    let reflexive_samples: Vec<_> = samples
        .iter()
        .filter(|s| reflexive(&s.structure))
        .cloned()
        .collect();
    let clean =
        run_samples(&reflexive_samples, &REGISTRY, Execution::Parallel).expect("within budget");
    let documented = refuted == NEED_REFLEXIVITY
        && witnesses_non_reflexive
        && clean.passed()
        && uncovered.is_empty()
        && within(elapsed, Duration::from_secs(120));
    Line {
        id: 3,
        title: "theorem registry over the seeded corpus",
        passed,
        detail: format!(
            "{} structures, uncovered {uncovered:?}, refuted {refuted:?} ({} counterexamples, minimized witnesses all non-reflexive: {witnesses_non_reflexive}); reflexive sub-corpus of {} structures: {} failures; {elapsed:.2?} (limit 120 s)",
            samples.len(),
            r.failures(),
            reflexive_samples.len(),
            clean.failures(),
        ),
        expected_failure: !passed && documented,
    }
}

fn criterion_4() -> Line {
    let t = Instant::now();
    let samples =
        corpus(&GeneratorSpec::new(Strategy::Bivaluation, 3..=6, 77, 500)).expect("valid spec");
    let mut failures = Vec::new();
    let mut vacuous = 0;
    for (i, sample) in samples.iter().enumerate() {
        let s = &sample.structure;
        let scs = oracle_scs(s);
        let star = oracle_scs_star(s);
        let lib_scs: Vec<Subset> = extract(s, BivalKind::Scs).base.iter().collect();
        let lib_star: Vec<Subset> = extract(s, BivalKind::ScsStar).base.iter().collect();
        let lib_relmax: Vec<Subset> = extract(s, BivalKind::Relmax).base.iter().collect();
        if lib_scs != scs || lib_star != star {
            failures.push((i, "extraction disagrees with oracle"));
        }
        if induced(s.n(), &scs) != s.table() {
            failures.push((i, "⊢ != ⊢_SCS"));
        }
        if induced(s.n(), &star) != s.table() {
            failures.push((i, "⊢ != ⊢_SCS*"));
        }
        if oracle_relmax(s) != scs || lib_relmax != scs {
            failures.push((i, "RELMAX != SCS"));
        }
        for (k, _) in scs.iter().enumerate() {
            let rest: Vec<Subset> = scs
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, v)| *v)
                .collect();
            let b = induced(s.n(), &rest);
            let sound = s.table().iter().zip(&b).all(|(c, d)| c.is_subset_of(*d));
            if !sound || b == s.table() {
                failures.push((i, "deletion not strict"));
            }
        }
        match minimality_probe(s) {
            Ok(m) if m.passed() => {}
            Err(lsx::Error::EmptyScs) if scs.is_empty() => vacuous += 1,
            _ => failures.push((i, "minimality probe")),
        }
    }
    let elapsed = t.elapsed();
    Line {
        id: 4,
        title: "TL-4 semantics on bivaluation-induced structures",
        passed: samples.len() >= 500 && failures.is_empty() && within(elapsed, Duration::from_secs(60)),
        detail: format!(
            "{} structures ({vacuous} with empty SCS), {} failures {:?}, {elapsed:.2?} (limit 60 s)",
            samples.len(),
            failures.len(),
            failures.iter().take(3).collect::<Vec<_>>()
        ),
        expected_failure: false,
    }
}

fn criterion_5() -> Line {
    let t = Instant::now();
    let reports = run_all(Execution::Parallel);
    let elapsed = t.elapsed();
    let failed: Vec<String> = reports
        .iter()
        .flat_map(|r| {
            r.claims
                .iter()
                .filter(|c| !c.passed())
                .map(move |c| format!("{}:{}", r.gallery.name(), c.id))
        })
        .collect();
    let has = |g: GalleryId, id: &str| {
        reports
            .iter()
            .find(|r| r.gallery == g)
            .and_then(|r| r.claims.iter().find(|c| c.id == id))
            .is_some_and(|c| c.passed())
    };
    let required = [
        (GalleryId::G6OmegaPatched, "c-downset-1"),
        (GalleryId::G6OmegaPatched, "patch"),
        (GalleryId::G3NatCard, "finite-relmax"),
        (GalleryId::G8PrimeMultiples, "prime-multiples-maximal"),
        (GalleryId::G8PrimeMultiples, "no-4-saturated-above-2"),
    ];
    let missing: Vec<_> = required.iter().filter(|(g, id)| !has(*g, id)).collect();
    let g5 = reports
        .iter()
        .find(|r| r.gallery == GalleryId::G5ThreeElem)
        .expect("G5 report");
    let cls = classify(&three_element_example()).expect("within budget");
    let g5_mismatch: Vec<&str> = [
        Class::Tarski,
        Class::LindI,
        Class::LindII,
        Class::LindIII,
        Class::LindIV,
    ]
    .into_iter()
    .filter(|c| g5.actual(c.name()) != Some(cls.get(*c)))
    .map(|c| c.name())
    .collect();
    Line {
        id: 5,
        title: "gallery claim scripts G1-G8",
        passed: failed.is_empty()
            && missing.is_empty()
            && g5_mismatch.is_empty()
            && within(elapsed, Duration::from_secs(5)),
        detail: format!(
            "{} claims, failed {failed:?}, missing {missing:?}, G5 vs classifier mismatches {g5_mismatch:?}, {elapsed:.2?} (limit 5 s)",
            reports.iter().map(|r| r.claims.len()).sum::<usize>()
        ),
        expected_failure: false,
    }
}

/// `ω + K` truncated: ordinals `k·ω + m` with `m < K` are ranks `k·K + m`;
/// rank `2K` stands for `ω + K`, above every element.
const K: u64 = 64;

fn rank(o: Ordinal) -> u64 {
    o.limit_part() as u64 * K + o.finite_part()
}

fn criterion_6() -> Line {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut mismatches = Vec::new();
    for _ in 0..1000 {
        let len = rng.gen_range(0..8);
        let xs: Vec<Ordinal> = (0..len)
            .map(|_| {
                let limit = rng.gen_range(0..=1u8);
                Ordinal::new(limit, rng.gen_range(0..K - 1)).expect("limit below 2")
            })
            .collect();
        let ranks: BTreeSet<u64> = xs.iter().map(|&x| rank(x)).collect();
        // Least β in the model with every member below it.
        let brute = (0..=2 * K)
            .find(|&b| ranks.iter().all(|&r| r < b))
            .expect("top bounds all");
        let got = ord_least_containing(&SymbolicSet::finite(xs.clone())).map(rank);
        if got != Ok(brute) {
            mismatches.push(xs);
        }
    }
    Line {
        id: 6,
        title: "ordinal oracle against the truncated ω+64 model",
        passed: mismatches.is_empty(),
        detail: format!("1000 descriptors, {} mismatches", mismatches.len()),
        expected_failure: false,
    }
}

fn cut_means_reflexive(f: &Facts) -> Outcome {
    let mut o = Outcome::default();
    if f.is(Class::Cut) {
        o.check(f.is(Class::Reflexive), || "cut without reflexivity".into());
    }
    o
}

fn criterion_7() -> Line {
    let mut problems = Vec::new();
    let mut files = 0;
    for entry in std::fs::read_dir(fixtures()).expect("fixtures directory") {
        let path = entry.expect("readable entry").path();
        if path.extension().and_then(|e| e.to_str()) != Some("ls") {
            continue;
        }
        files += 1;
        let text = std::fs::read_to_string(&path).expect("readable fixture");
        let once = StructureFile::parse(&text).expect("fixture parses");
        let twice = StructureFile::parse(&once.serialize()).expect("serialized form parses");
        if once != twice || once.serialize() != twice.serialize() {
            problems.push(format!("round trip {}", path.display()));
        }
    }
    let path = |f: &str| fixtures().join(f).to_string_lossy().into_owned();
    let pass = lsx::cli::run(["lsx", "classify", &path("g5.ls"), "--json"]);
    if pass.code != 0 {
        problems.push(format!("pass case exited {}", pass.code));
    }
    let fake = Entry {
        id: "X01",
        anchor: "cut implies reflexive",
        check: cut_means_reflexive,
    };
    let registry: Vec<Entry> = REGISTRY.iter().copied().chain([fake]).collect();
    let cex = lsx::cli::run_with_registry(
        [
            "lsx",
            "verify",
            &path("lonely.ls"),
            "--theorems",
            "X01",
            "--json",
        ],
        &registry,
    );
    if cex.code != 1 || !cex.stdout.contains("cut without reflexivity") {
        problems.push(format!("counterexample case exited {}", cex.code));
    }
    let dir = tempfile::tempdir().expect("temp dir");
    let bad = dir.path().join("bad.ls");
    std::fs::write(
        &bad,
        "structure bad\nelements 2\nmode table\nmap {0 5} -> {0}\n",
    )
    .expect("write");
    let parse = lsx::cli::run(["lsx", "classify", &bad.to_string_lossy()]);
    if parse.code != 2 || !parse.stderr.contains("line 4, column 8") {
        problems.push(format!(
            "parse error case exited {}: {}",
            parse.code,
            parse.stderr.trim()
        ));
    }
    Line {
        id: 7,
        title: "CLI round trip and exit codes",
        passed: files > 0 && problems.is_empty(),
        detail: format!("{files} fixtures, exit codes 0/1/2 checked, problems {problems:?}"),
        expected_failure: false,
    }
}

fn main() {
    let lines = [
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
    ];
    let mut unexpected = 0;
    for l in &lines {
        let known = KNOWN_FAILURES.iter().find(|(id, _)| *id == l.id);
        let status = if l.passed { "PASS" } else { "FAIL" };
        println!("criterion {} [{status}] {}: {}", l.id, l.title, l.detail);
        match (l.passed, known) {
            (false, Some((_, why))) if l.expected_failure => println!("  known failure: {why}"),
            (false, _) => unexpected += 1,
            (true, Some(_)) => println!("  listed as a known failure but passed"),
            (true, None) => {}
        }
    }
    let passed = lines.iter().filter(|l| l.passed).count();
    println!(
        "acceptance: {passed}/{} criteria pass, {unexpected} unexpected failures",
        lines.len()
    );
    if unexpected > 0 {
        std::process::exit(1);
    }
}
