use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lsx::classify::classify_with;
use lsx::propcheck::{corpus, run_samples, GeneratorSpec, Strategy, REGISTRY};
use lsx::properties::SetCensus;
use lsx::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn structure(n: usize) -> lsx::LogicalStructure {
    corpus(&GeneratorSpec::new(Strategy::Bivaluation, n..=n, 9, 1))
        .unwrap()
        .remove(0)
        .structure
}

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("census");
    for n in [8, 10, 12] {
        let s = structure(n);
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &s, |b, s| {
                b.iter(|| SetCensus::compute_with(s, exec))
            });
        }
    }
    g.finish();
}

fn classification(c: &mut Criterion) {
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    for n in [6, 8] {
        let s = structure(n);
        for (name, exec) in MODES {
            g.bench_with_input(BenchmarkId::new(name, n), &s, |b, s| {
                b.iter(|| classify_with(s, exec).unwrap())
            });
        }
    }
    g.finish();
}

fn registry(c: &mut Criterion) {
    let samples = corpus(&GeneratorSpec::new(Strategy::Arbitrary, 2..=6, 3, 200)).unwrap();
    let mut g = c.benchmark_group("registry");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(name, |b| {
            b.iter(|| run_samples(&samples, &REGISTRY, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, census, classification, registry);
criterion_main!(benches);
