use std::hint::black_box;

use circlebundles::classifier::{enumerate_classes, model_presentation};
use circlebundles::classify;
use circlebundles_bench::actions;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for (name, g, rho) in actions() {
        group.bench_function(name, |b| {
            b.iter(|| classify(black_box(&g), &rho, 10).unwrap())
        });
    }
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate classes");
    let pres = model_presentation(2, 2).unwrap();
    for m in [4, 8, 16] {
        group.bench_with_input(BenchmarkId::from_parameter(m), &m, |b, &m| {
            b.iter(|| enumerate_classes(&pres, m))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_classify, bench_enumeration);
criterion_main!(benches);
