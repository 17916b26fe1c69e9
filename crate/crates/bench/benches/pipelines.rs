use criterion::{black_box, criterion_group, criterion_main, Criterion};

use fibkit_core::curve5::{branch_expand, normalize, random_curve, random_normal_form};
use fibkit_core::genus6::{phi6, random_pointed_curve6, Placement};
use fibkit_core::git::{flat_limit, plucker_states, torus_classify, Linearization, OnePS};
use fibkit_core::phi5::{phi5, phi5_closed_form};

fn bench_normalize_and_phi5(c: &mut Criterion) {
    let curve = random_curve(7);
    c.bench_function("normalize", |b| {
        b.iter(|| normalize(black_box(&curve)).unwrap())
    });
    c.bench_function("phi5 blow-up route", |b| {
        b.iter(|| phi5(black_box(&curve)).unwrap())
    });
    let nf = normalize(&curve).unwrap();
    c.bench_function("phi5 closed form", |b| {
        b.iter(|| phi5_closed_form(black_box(&nf)))
    });
}

fn bench_branch(c: &mut Criterion) {
    let nf = random_normal_form(3);
    c.bench_function("branch expansion to order 8", |b| {
        b.iter(|| branch_expand(black_box(&nf), 8))
    });
}

fn bench_stability(c: &mut Criterion) {
    let curve = random_normal_form(5).embed();
    let lin = Linearization::new(3, 2).unwrap();
    c.bench_function("weight states O(3,2)", |b| {
        b.iter(|| plucker_states(black_box(&curve), &lin))
    });
    let states = plucker_states(&curve, &lin);
    c.bench_function("torus classification", |b| {
        b.iter(|| torus_classify(black_box(&states)))
    });
    let staircase = OnePS::staircase();
    c.bench_function("flat limit", |b| {
        b.iter(|| flat_limit(black_box(&curve), &staircase).unwrap())
    });
}

fn bench_genus6(c: &mut Criterion) {
    let curve = random_pointed_curve6(1, Placement::Generic);
    c.bench_function("phi6 canonical orbit form", |b| {
        b.iter(|| phi6(black_box(&curve)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_normalize_and_phi5,
    bench_branch,
    bench_stability,
    bench_genus6
);
criterion_main!(benches);
