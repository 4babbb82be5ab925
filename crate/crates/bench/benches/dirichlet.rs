use criterion::{criterion_group, criterion_main, Criterion};
use num_bigint::BigUint;
use std::hint::black_box;

use digitlang::dirichlet::{evaluate, exact_abscissa, summatory};
use digitlang::langspec::presets::preset;

fn summatory_dp(c: &mut Criterion) {
    let l1 = preset("L1").unwrap();
    let n = BigUint::from(10u32).pow(14) - 1u32;
    c.bench_function("summatory/L1/10^14", |b| b.iter(|| summatory(black_box(&l1), &n).unwrap()));
    let lj = preset("LJp").unwrap();
    let n = BigUint::from(2u32).pow(30);
    c.bench_function("summatory/LJp/2^30", |b| b.iter(|| summatory(black_box(&lj), &n).unwrap()));
}

fn abscissa(c: &mut Criterion) {
    for name in ["L2", "L5"] {
        let spec = preset(name).unwrap();
        c.bench_function(&format!("exact_abscissa/{name}"), |b| b.iter(|| exact_abscissa(black_box(&spec)).unwrap()));
    }
}

fn brackets(c: &mut Criterion) {
    let k = preset("kempner").unwrap();
    let mut g = c.benchmark_group("evaluate");
    g.sample_size(10);
    g.bench_function("kempner/z=1/L=40", |b| b.iter(|| evaluate(black_box(&k), 1.0, 4, 40, 2).unwrap()));
    g.finish();
}

criterion_group!(benches, summatory_dp, abscissa, brackets);
criterion_main!(benches);
