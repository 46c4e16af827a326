use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use k3fib_core::admissibility::{milnor_number, MPoly};
use k3fib_core::algebra_a::hilbert_function_at;
use k3fib_core::algebra_r::{build_r, fibre_at, torsion_decomposition, RAlgebra};
use k3fib_core::exact_ring::{int, rat, Rational};
use k3fib_core::fivetuple::parse_five_tuple;
use k3fib_core::par;

fn unigonal() -> RAlgebra {
    build_r(&parse_five_tuple(include_str!("../../../data/unigonal_r3.json")).unwrap()).unwrap()
}

fn torsion(c: &mut Criterion) {
    let r = unigonal();
    let degrees: Vec<u32> = (2..=7).collect();
    let mut g = c.benchmark_group("torsion_degrees_2_7");
    g.sample_size(10);
    g.bench_function(BenchmarkId::new("seq", 6), |b| {
        b.iter(|| par::seq_map(&degrees, |&n| torsion_decomposition(black_box(&r), n).length()))
    });
    g.bench_function(BenchmarkId::new("par", 6), |b| {
        b.iter(|| par::map(&degrees, |&n| torsion_decomposition(black_box(&r), n).length()))
    });
    g.finish();
}

fn fibres(c: &mut Criterion) {
    let r = unigonal();
    let points: Vec<Rational> = vec![int(-2), int(-1), rat(1, 2), int(0), int(1), int(2), int(3), rat(-1, 3)];
    let work = |p: &Rational| {
        let f = fibre_at(&r, p);
        hilbert_function_at(&f.presentation, 8, p)
    };
    let mut g = c.benchmark_group("fibre_hilbert_8_points");
    g.bench_function("seq", |b| b.iter(|| par::seq_map(black_box(&points), work)));
    g.bench_function("par", |b| b.iter(|| par::map(black_box(&points), work)));
    g.finish();
}

fn milnor(c: &mut Criterion) {
    let polys: Vec<MPoly> = (1..=8u32)
        .map(|k| MPoly::from_terms(3, [(vec![2, 0, 0], int(1)), (vec![0, 3, 0], int(1)), (vec![0, 0, k + 2], int(1))]))
        .collect();
    let mut g = c.benchmark_group("milnor_8_polys");
    g.sample_size(10);
    g.bench_function("seq", |b| b.iter(|| par::seq_map(black_box(&polys), |f| milnor_number(f, 16).ok())));
    g.bench_function("par", |b| b.iter(|| par::map(black_box(&polys), |f| milnor_number(f, 16).ok())));
    g.finish();
}

criterion_group!(benches, torsion, fibres, milnor);
criterion_main!(benches);
