use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use gaq::algebra::truncated_quotient_with;
use gaq::builtins::{builtin, truncated_presentation};
use gaq::orbits::{modality_table, SampleOptions};
use gaq::Exec;

fn modality(c: &mut Criterion) {
    let b = builtin("truncated:2:4").unwrap();
    let a = b.algebra().unwrap();
    let mut group = c.benchmark_group("modality_table truncated:2:4");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        let opts = SampleOptions { exec, ..Default::default() };
        group.bench_function(format!("{exec:?}"), |bench| {
            bench.iter(|| modality_table(black_box(&a.algebra), &a.group_gens, &opts).unwrap())
        });
    }
    group.finish();
}

fn quotient(c: &mut Criterion) {
    let p = truncated_presentation(3, 4);
    let mut group = c.benchmark_group("truncated_quotient truncated:3:4");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_function(format!("{exec:?}"), |bench| {
            bench.iter(|| truncated_quotient_with(black_box(&p), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, modality, quotient);
criterion_main!(benches);
