use std::hint::black_box;

use circlebundles::CharacterTable;
use circlebundles_bench::table_groups;
use criterion::{criterion_group, criterion_main, Criterion};

fn bench_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("character table");
    for (name, g) in table_groups() {
        group.bench_function(name, |b| {
            b.iter(|| CharacterTable::compute(black_box(&g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_tables);
criterion_main!(benches);
