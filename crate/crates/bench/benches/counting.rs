use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use digitlang::cluster::{gj_generating_function, primed_alphabet_patterns};
use digitlang::counting::count_series;
use digitlang::evilwords::count_lj_upto;
use digitlang::langspec::presets::preset;

fn counts(c: &mut Criterion) {
    let mut g = c.benchmark_group("count_series");
    for name in ["L1", "L2", "L5", "y:10:3"] {
        let spec = preset(name).unwrap();
        g.bench_with_input(BenchmarkId::new(name, 200), &spec, |b, s| {
            b.iter(|| count_series(black_box(s), 200).unwrap())
        });
    }
    g.finish();
}

fn evil(c: &mut Criterion) {
    c.bench_function("count_lj_upto/10000", |b| b.iter(|| count_lj_upto(black_box(10_000))));
}

fn cluster(c: &mut Criterion) {
    let even = vec![vec![1, 2]];
    let odd = vec![vec![8, 9]];
    let set = primed_alphabet_patterns(10, &even, &odd).unwrap();
    c.bench_function("gj_generating_function/L1", |b| b.iter(|| gj_generating_function(black_box(&set)).unwrap()));
}

criterion_group!(benches, counts, evil, cluster);
criterion_main!(benches);
