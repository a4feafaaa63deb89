use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use hvs_bench::fixtures;
use hvs_core::invariants::{alexander_tower, tristram_levine_direct, tristram_levine_from_h};
use hvs_core::jordan::jordan_of_matrix;
use hvs_core::seifert::{build_hvs, split_degenerate};
use hvs_core::{LinkAnalysis, SkeinAnalysis, SkeinTriple, Zeta, DEFAULT_PRECISION};

fn pipeline(c: &mut Criterion) {
    let mut g = c.benchmark_group("pipeline");
    g.sample_size(10);
    for (name, s) in fixtures() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &s, |b, s| {
            b.iter(|| LinkAnalysis::run(black_box(s), DEFAULT_PRECISION).expect("analysis"))
        });
    }
    g.finish();
}

fn stages(c: &mut Criterion) {
    let mut g = c.benchmark_group("stages");
    g.sample_size(10);
    for (name, s) in fixtures() {
        let hvs = build_hvs(&split_degenerate(&s));
        g.bench_with_input(BenchmarkId::new("jordan", name), &hvs.h, |b, h| {
            b.iter(|| jordan_of_matrix(black_box(h), DEFAULT_PRECISION).expect("jordan data"))
        });
        g.bench_with_input(BenchmarkId::new("tower", name), &s, |b, s| b.iter(|| alexander_tower(black_box(s))));
    }
    g.finish();
}

fn signatures(c: &mut Criterion) {
    let mut g = c.benchmark_group("signature");
    g.sample_size(10);
    let (_, s) = fixtures().swap_remove(3);
    let a = LinkAnalysis::run(&s, DEFAULT_PRECISION).expect("analysis");
    for (p, q) in [(1, 2), (1, 5), (1, 25)] {
        let z = Zeta::root_of_unity(p, q).expect("turn");
        let id = format!("{}/{}", p, q);
        g.bench_with_input(BenchmarkId::new("direct", &id), &z, |b, z| {
            b.iter(|| tristram_levine_direct(&s, black_box(z), DEFAULT_PRECISION).expect("signature"))
        });
        g.bench_with_input(BenchmarkId::new("table", &id), &z, |b, z| {
            b.iter(|| tristram_levine_from_h(&a.h, black_box(z)).expect("signature"))
        });
    }
    g.finish();
}

fn skein(c: &mut Criterion) {
    let mut g = c.benchmark_group("skein");
    g.sample_size(10);
    for (name, s) in fixtures().into_iter().take(3) {
        let t = SkeinTriple::from_plus(&s).expect("triple");
        g.bench_with_input(BenchmarkId::from_parameter(name), &t, |b, t| {
            b.iter(|| SkeinAnalysis::new(black_box(t)).expect("analysis").check_all())
        });
    }
    g.finish();
}

criterion_group!(benches, pipeline, stages, signatures, skein);
criterion_main!(benches);
