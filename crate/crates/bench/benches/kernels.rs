use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use secant_core::minuscule::{gen_det, MinusculeFamily, NilpotentElement, Pairing};
use secant_core::secant::ideal_degree_d;
use secant_core::symfunc::{plethysm_character, schur_expand, Inner};
use secant_core::young::lr_coefficient;
use secant_core::Partition;

fn littlewood_richardson(c: &mut Criterion) {
    let lam = Partition::rows(&[6, 5, 4, 3, 2]);
    let mu = Partition::rows(&[4, 3, 2, 1]);
    let nu = Partition::rows(&[3, 2, 2, 2, 1]);
    c.bench_function("lr (6,5,4,3,2)/(4,3,2,1)", |b| b.iter(|| lr_coefficient(black_box(&lam), &mu, &nu).unwrap()));
}

fn schur(c: &mut Criterion) {
    let f = plethysm_character(&Partition::rows(&[3]), 3, Inner::Sym, 3).unwrap();
    c.bench_function("schur_expand S^3(S^3)", |b| b.iter(|| schur_expand(black_box(&f), 3).unwrap()));
    c.bench_function("plethysm_character S^3(wedge^3), 6 vars", |b| {
        b.iter(|| plethysm_character(black_box(&Partition::rows(&[3])), 3, Inner::Wedge, 6).unwrap())
    });
}

fn determinants(c: &mut Criterion) {
    let fam = MinusculeFamily::type_a(3, 6).unwrap();
    let n0 = NilpotentElement::symbolic(fam, "a");
    let top = fam.weights().into_iter().max_by_key(|w| w.degree()).unwrap();
    c.bench_function("gen_det A:3,6 3x3 minor", |b| b.iter(|| gen_det(black_box(&top), &n0, Pairing::Sorted).unwrap()));
    let fam = MinusculeFamily::type_d(6).unwrap();
    let n0 = NilpotentElement::symbolic(fam, "a");
    let top = fam.weights().into_iter().max_by_key(|w| w.degree()).unwrap();
    c.bench_function("gen_det D:6 Pfaffian", |b| b.iter(|| gen_det(black_box(&top), &n0, Pairing::Sorted).unwrap()));
}

fn ideal_kernel(c: &mut Criterion) {
    let mut g = c.benchmark_group("ideal");
    g.sample_size(10);
    g.bench_function("I_3(sigma_2(G(2,6)))", |b| b.iter(|| ideal_degree_d(2, black_box(6), 2, 3, 0).unwrap()));
    g.finish();
}

criterion_group!(benches, littlewood_richardson, schur, determinants, ideal_kernel);
criterion_main!(benches);
