use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, Criterion};
use unitgroup_core::analysis::{
    bounded_unit_search_zg, check_z2_witness, classify_hypercentral_finite, construct_z2_witness,
    enumerate_v_kg, DEFAULT_ENUMERATION_BUDGET, DEFAULT_SEARCH_BUDGET,
};
use unitgroup_core::coeff::GaloisField;
use unitgroup_core::groups::{builtin, BuiltinGroup};

fn unit_groups(c: &mut Criterion) {
    let q8 = Arc::new(builtin("quaternion8", &[]).unwrap());
    let f2 = GaloisField::new(2, 1).unwrap();
    c.bench_function("enumerate V(GF(2)Q8)", |b| {
        b.iter(|| enumerate_v_kg(&f2, black_box(q8.clone()), DEFAULT_ENUMERATION_BUDGET).unwrap())
    });
    c.bench_function("search ZQ8, B = 1", |b| {
        b.iter(|| bounded_unit_search_zg(black_box(q8.clone()), 1, DEFAULT_SEARCH_BUDGET).unwrap())
    });
}

fn witnesses(c: &mut Criterion) {
    let c7 = Arc::new(builtin("cyclic", &[7]).unwrap());
    let w = construct_z2_witness(2, c7, 1).unwrap();
    c.bench_function("verify witness GF(2)(t)C7, N = 5", |b| {
        b.iter(|| check_z2_witness(black_box(&w), 5).unwrap())
    });
}

fn classifier(c: &mut Criterion) {
    let g = BuiltinGroup::DirectProduct(vec![
        BuiltinGroup::Quaternion8,
        BuiltinGroup::ElemAbelian2(2),
    ])
    .build()
    .unwrap();
    c.bench_function("classify K8xE2^2", |b| {
        b.iter(|| classify_hypercentral_finite(black_box(&g)))
    });
}

criterion_group!(benches, unit_groups, witnesses, classifier);
criterion_main!(benches);
