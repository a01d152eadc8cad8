use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use lieq_core::characters::{irreducible_character, tensor_decompose};
use lieq_core::poset::{self, LambdaPoint};
use lieq_core::{families, quiver, GradedAdjointTable, LieContext, RootSystem, Weight};

fn d6() -> RootSystem {
    RootSystem::new("D6".parse().unwrap())
}

fn freudenthal(c: &mut Criterion) {
    let rs = d6();
    let lam = Weight::new(&[0, 1, 0, 1, 0, 0]);
    c.bench_function("freudenthal D6 ω2+ω4", |b| {
        b.iter(|| irreducible_character(&rs, black_box(&lam)).unwrap())
    });
    let e6 = RootSystem::new("E6".parse().unwrap());
    let lam = Weight::new(&[1, 0, 0, 0, 0, 1]);
    c.bench_function("freudenthal E6 ω1+ω6", |b| {
        b.iter(|| irreducible_character(&e6, black_box(&lam)).unwrap())
    });
}

fn klimyk(c: &mut Criterion) {
    let rs = d6();
    let x = irreducible_character(&rs, &Weight::new(&[0, 1, 0, 1, 0, 0])).unwrap();
    let lam = Weight::new(&[0, 2, 0, 0, 0, 0]);
    c.bench_function("klimyk D6 V(ω2+ω4) ⊗ V(2ω2)", |b| {
        b.iter(|| tensor_decompose(&rs, &x, black_box(&lam)).unwrap())
    });
}

fn s_graded(c: &mut Criterion) {
    let rs = d6();
    let mut g = c.benchmark_group("graded adjoint table");
    g.sample_size(10);
    for k in [2, 3, 4] {
        g.bench_function(format!("D6 up to degree {k}"), |b| {
            b.iter(|| GradedAdjointTable::build(&rs, k).unwrap())
        });
    }
    g.finish();
}

fn interval(c: &mut Criterion) {
    let rs = d6();
    let low = LambdaPoint::new(Weight::new(&[0, 0, 0, 2, 0, 0]), 0);
    let high = LambdaPoint::new(rs.zero(), 4);
    c.bench_function("interval D6 [(2ω4,0),(0,4)]", |b| {
        b.iter(|| poset::interval(&rs, black_box(&low), black_box(&high)).unwrap())
    });
    let top = LambdaPoint::new(Weight::new(&[1, 1, 1, 1, 1, 1]), 6);
    c.bench_function("covers D6", |b| {
        b.iter(|| poset::covers(&rs, black_box(&top)))
    });
}

fn relations(c: &mut Criterion) {
    let mut g = c.benchmark_group("relation table");
    g.sample_size(10);
    g.bench_function("D6 KR interval, cold context", |b| {
        b.iter(|| {
            let ctx = LieContext::with_max_degree("D6".parse().unwrap(), 4);
            let gamma = families::kr_d6(ctx.root_system()).unwrap();
            quiver::relation_table(&ctx, &gamma).unwrap()
        })
    });
    g.finish();
}

criterion_group!(benches, freudenthal, klimyk, s_graded, interval, relations);
criterion_main!(benches);
