//! Benchmarks of the computational kernels: exact determinants,
//! elimination, the branch-locus pipeline, eigenspace projection, and
//! the finite-field rank probe.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use heisurf::elim::{groebner, random_rank_probe, PolySystem};
use heisurf::exactmath::{det_bareiss, PrimeField};
use heisurf::heis::{HeisType, Representation};
use heisurf::surfaces::{pp4_branch_locus, translation_invariant_cubics};
use heisurf_bench::{cyclic_gradient, polynomial_matrix};

fn bench_determinant(c: &mut Criterion) {
    let (ring, m) = polynomial_matrix();
    c.bench_function("det_bareiss_4x4_poly", |b| {
        b.iter(|| det_bareiss(&ring, black_box(&m)).unwrap())
    });
}

fn bench_groebner(c: &mut Criterion) {
    let gens = cyclic_gradient();
    c.bench_function("groebner_cyclic_gradient", |b| {
        b.iter(|| groebner(black_box(&gens)).unwrap())
    });
}

fn bench_branch_locus(c: &mut Criterion) {
    c.bench_function("pp4_branch_locus", |b| {
        b.iter(|| pp4_branch_locus().unwrap())
    });
}

fn bench_eigenspace(c: &mut Criterion) {
    c.bench_function("translation_invariant_cubics", |b| {
        b.iter(|| translation_invariant_cubics().unwrap())
    });
}

fn bench_probe(c: &mut Criterion) {
    let gens = cyclic_gradient();
    let field = PrimeField::new(10007).unwrap();
    let system = PolySystem::new(&gens, &[0, 1, 2], &field).unwrap();
    c.bench_function("rank_probe_100_samples", |b| {
        b.iter(|| random_rank_probe(black_box(&system), 10007, 100, 42).unwrap())
    });
}

fn bench_representation(c: &mut Criterion) {
    c.bench_function("representation_relations_2_4", |b| {
        b.iter(|| {
            let rep = Representation::new(HeisType::new(2, 4)).unwrap();
            assert!(rep.verify_relations().all_ok());
        })
    });
}

criterion_group!(
    kernels,
    bench_determinant,
    bench_groebner,
    bench_branch_locus,
    bench_eigenspace,
    bench_probe,
    bench_representation
);
criterion_main!(kernels);
