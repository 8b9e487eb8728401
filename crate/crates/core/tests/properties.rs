use lsx::classify::{check_characterization, classify, classify_with, Class, Theorem};
use lsx::format::{parse_structure, StructureFile};
use lsx::propcheck::{generate, GeneratorSpec, Strategy as Gen};
use lsx::properties::{monotone_envelope, SetCensus};
use lsx::structure::{BivaluationSet, Origin, Source};
use lsx::{all_subsets, Execution, LogicalStructure, Subset};
use proptest::prelude::*;

fn table(max_n: usize) -> impl Strategy<Value = LogicalStructure> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(0u32..(1 << n), 1 << n)
            .prop_filter("empty relation", |bits| bits.iter().any(|&b| b != 0))
            .prop_map(move |bits| {
                let t = bits.into_iter().map(Subset::from_bits).collect();
                LogicalStructure::from_table(n, t, Origin::ExplicitTable).unwrap()
            })
    })
}

fn valuations(max_n: usize) -> impl Strategy<Value = (usize, Vec<Subset>)> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec((0u32..(1 << n)).prop_map(Subset::from_bits), 1..8)
            .prop_map(move |v| (n, v))
    })
}

fn monotone(t: &[Subset], n: usize) -> bool {
    all_subsets(n).all(|g| g.subsets().all(|h| t[h.index()].is_subset_of(t[g.index()])))
}

proptest! {
    #[test]
    fn envelope_is_least_monotone_cover(s in table(4)) {
        let n = s.n();
        let env = monotone_envelope(s.table(), n);
        prop_assert!(monotone(&env, n));
        for g in all_subsets(n) {
            let naive = g.subsets().fold(Subset::EMPTY, |a, h| a.union(s.c(h)));
            prop_assert_eq!(env[g.index()], naive);
        }
        prop_assert_eq!(monotone_envelope(&env, n), env);
    }

    #[test]
    fn induced_structures_are_tarski((n, v) in valuations(4)) {
        let set = BivaluationSet::new(n, v.clone()).unwrap();
        let s = LogicalStructure::build(n, Source::Bivaluations(set)).unwrap();
        for g in all_subsets(n) {
            let naive = (0..n)
                .filter(|&a| v.iter().all(|x| !g.is_subset_of(*x) || x.contains(a)))
                .fold(Subset::EMPTY, |acc, a| acc.with(a));
            prop_assert_eq!(s.c(g), naive);
        }
        let r = classify(&s).unwrap();
        prop_assert!(r.get(Class::Tarski));
        prop_assert!(r.get(Class::Tl4));
    }

    #[test]
    fn classifier_matches_characterizations(s in table(3)) {
        let r = classify(&s).unwrap();
        for thm in Theorem::ALL {
            for k in 1..=thm.statements() {
                prop_assert_eq!(check_characterization(&s, thm, k).unwrap(), r.get(thm.class()), "{} ({})", thm.name(), k);
            }
        }
        prop_assert_eq!(
            r.get(Class::Tarski),
            r.get(Class::Reflexive) && r.get(Class::Monotone) && r.get(Class::Transitive)
        );
    }

    #[test]
    fn execution_modes_agree(s in table(4)) {
        let a = classify_with(&s, Execution::Sequential).unwrap();
        let b = classify_with(&s, Execution::Parallel).unwrap();
        prop_assert_eq!(a.verdicts, b.verdicts);
        let ca = SetCensus::compute_with(&s, Execution::Sequential);
        let cb = SetCensus::compute_with(&s, Execution::Parallel);
        for g in all_subsets(s.n()) {
            prop_assert_eq!(ca.saturated_in(g), cb.saturated_in(g));
            prop_assert_eq!(ca.relmax_in(g), cb.relmax_in(g));
            prop_assert_eq!(ca.strongly_closed(g), cb.strongly_closed(g));
        }
    }

    #[test]
    fn format_round_trip(s in table(4)) {
        let text = StructureFile::from_structure("p", &s).serialize();
        let back = parse_structure(&text).unwrap();
        prop_assert_eq!(back.table(), s.table());
        prop_assert_eq!(back.digest(), s.digest());
        prop_assert_eq!(StructureFile::parse(&text).unwrap().serialize(), text);
    }

    #[test]
    fn restrict_projects(s in table(4), keep in 0u32..16) {
        let n = s.n();
        let keep = Subset::from_bits(keep).intersection(Subset::full(n));
        let r = match s.restrict(keep) {
            Ok(r) => r,
            // Nothing kept, or nothing derivable inside `keep`.
            Err(_) => {
                prop_assert!(keep.is_empty() || keep.subsets().all(|g| s.c(g).intersection(keep).is_empty()));
                return Ok(());
            }
        };
        let kept: Vec<usize> = keep.elems().collect();
        prop_assert_eq!(r.n(), kept.len());
        for g in all_subsets(r.n()) {
            let global = Subset::from_elems(g.elems().map(|i| kept[i]));
            for (i, &e) in kept.iter().enumerate() {
                prop_assert_eq!(r.c(g).contains(i), s.c(global).contains(e));
            }
        }
        let same = s.restrict(Subset::full(n)).unwrap();
        prop_assert_eq!(same.table(), s.table());
    }

    #[test]
    fn generator_is_deterministic(seed in any::<u64>(), index in 0usize..64, which in 0usize..4) {
        let spec = GeneratorSpec::new(Gen::ALL[which], 2..=5, seed, 1);
        let a = generate(&spec, index).unwrap();
        let b = generate(&spec, index).unwrap();
        prop_assert_eq!(a.map(|x| x.structure.digest()), b.map(|x| x.structure.digest()));
    }

    #[test]
    fn subset_algebra(a in 0u32..1 << 8, b in 0u32..1 << 8) {
        let (a, b) = (Subset::from_bits(a), Subset::from_bits(b));
        prop_assert_eq!(a.union(b).len() + a.intersection(b).len(), a.len() + b.len());
        prop_assert!(a.difference(b).intersection(b).is_empty());
        prop_assert_eq!(a.complement(8).complement(8), a);
        prop_assert_eq!(a.subsets().count(), 1 << a.len());
        prop_assert!(a.supersets(8).all(|x| a.is_subset_of(x)));
    }
}
