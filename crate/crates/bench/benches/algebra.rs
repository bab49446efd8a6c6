use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use permspec_core::algebra::GroupAlgebraElement;
use permspec_core::oracle;
use permspec_core::spectral::{check_annihilation, minimal_polynomial_roots};
use permspec_core::StatisticKind;

fn convolution(c: &mut Criterion) {
    let mut g = c.benchmark_group("square");
    for (kind, n) in [(StatisticKind::DesX, 5), (StatisticKind::DesX, 6), (StatisticKind::InvX, 5)] {
        let s = GroupAlgebraElement::from_statistic(kind, n).unwrap();
        g.bench_with_input(BenchmarkId::new(kind.name(), n), &s, |b, s| b.iter(|| s.convolve(s).unwrap()));
    }
    g.finish();
}

fn annihilation(c: &mut Criterion) {
    let mut g = c.benchmark_group("annihilation");
    g.sample_size(10);
    for (kind, n) in [(StatisticKind::DesX, 6), (StatisticKind::InvX, 5)] {
        let s = GroupAlgebraElement::from_statistic(kind, n).unwrap();
        let roots = minimal_polynomial_roots(kind, n).unwrap();
        g.bench_function(BenchmarkId::new(kind.name(), n), |b| b.iter(|| check_annihilation(&s, &roots).unwrap()));
    }
    g.finish();
}

fn lemmas(c: &mut Criterion) {
    let mut g = c.benchmark_group("lemma");
    g.sample_size(10);
    g.bench_function("4.2 n=5", |b| b.iter(|| oracle::check_lemma_4_2(5).unwrap()));
    g.bench_function("3.2 n=5", |b| b.iter(|| oracle::check_lemma_3_2(5).unwrap()));
    g.finish();
}

criterion_group!(benches, convolution, annihilation, lemmas);
criterion_main!(benches);
