//! Benchmarks for the operations that dominate real workloads: group
//! arithmetic on sampled elements, order search, torsion construction,
//! witness assembly, and the class census.

use criterion::{Criterion, criterion_group, criterion_main};
use std::hint::black_box;

use trm_bench::{params, sampled, torsion};
use trm_core::OrderBudget;
use trm_core::bieri_strebel::interval_witness;
use trm_core::conjugacy::{conjugating_witness, descriptor};
use trm_core::oracle::class_census;
use trm_core::{MAdic, PLCircleMap};

fn group_arithmetic(c: &mut Criterion) {
    let f = sampled(2, 3, 12, 1);
    let g = sampled(2, 3, 12, 2);

    c.bench_function("compose/12-splits", |b| {
        b.iter(|| black_box(&f).compose(black_box(&g)).unwrap())
    });
    c.bench_function("inverse/12-splits", |b| b.iter(|| black_box(&f).inverse()));
    c.bench_function("power/8th-of-sampled", |b| {
        b.iter(|| black_box(&f).power(8).unwrap())
    });
}

fn order_and_rotation(c: &mut Criterion) {
    let budget = OrderBudget::default();
    let f = torsion(3, 4, 6);
    c.bench_function("order/q6-torsion", |b| {
        b.iter(|| black_box(&f).order(&budget).unwrap())
    });
    c.bench_function("rotation-number/q6-torsion", |b| {
        b.iter(|| black_box(&f).rotation_number(&budget).unwrap())
    });

    let id = PLCircleMap::identity(4, &MAdic::from_int(3)).unwrap();
    c.bench_function("order/identity", |b| {
        b.iter(|| black_box(&id).order(&budget).unwrap())
    });
}

fn construction_and_witnesses(c: &mut Criterion) {
    let budget = OrderBudget::default();

    c.bench_function("construct-torsion/r3-m4-q6", |b| {
        b.iter(|| torsion(black_box(3), 4, 6))
    });

    c.bench_function("interval-witness/1-to-51", |b| {
        let one = MAdic::one();
        let target = MAdic::from_int(51);
        let zero = MAdic::zero();
        b.iter(|| interval_witness(&zero, black_box(&one), &zero, &target, 3).unwrap())
    });

    let p = params(2, 3);
    let f1 = torsion(2, 3, 4);
    let h = sampled(2, 3, 6, 3);
    let f2 = f1.conjugate_by(&h).unwrap();
    c.bench_function("descriptor/q4-conjugate", |b| {
        b.iter(|| descriptor(black_box(&f2), &p, &budget).unwrap())
    });
    c.bench_function("conjugating-witness/q4", |b| {
        b.iter(|| conjugating_witness(black_box(&f1), &f2, &p, &budget).unwrap())
    });
}

fn census(c: &mut Criterion) {
    let p = params(2, 3);
    c.bench_function("census/r2-m3-q2-5trials", |b| {
        b.iter(|| class_census(black_box(&p), 2, 5, 11).unwrap())
    });
}

criterion_group!(
    benches,
    group_arithmetic,
    order_and_rotation,
    construction_and_witnesses,
    census
);
criterion_main!(benches);
