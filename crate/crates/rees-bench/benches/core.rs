use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use rees_core::catalog::{boolean_lattice, chain, subspace_lattice};
use rees_core::homology::{betti, mobius_invariant_hat};
use rees_core::perm::{EulerianFlavor, q_eulerian};
use rees_core::rees::{ideal_ij, rees_product};
use rees_core::series::{series_identity_check, SeriesIdentity};
use rees_core::symfunc::{eulerian_qsym, to_monomial_basis};

fn rees_boolean(n: usize) -> rees_core::Poset {
    let truncated = boolean_lattice(n).remove_bottom().unwrap();
    rees_product(&truncated, &chain(n)).unwrap()
}

fn bench_construction(c: &mut Criterion) {
    c.bench_function("rees_product B_5- * C_5", |b| {
        let truncated = boolean_lattice(5).remove_bottom().unwrap();
        let c5 = chain(5);
        b.iter(|| rees_product(black_box(&truncated), black_box(&c5)).unwrap())
    });
    c.bench_function("subspace_lattice B_4(2)", |b| {
        b.iter(|| subspace_lattice(black_box(4), black_box(2)).unwrap())
    });
    c.bench_function("ideal I_2(B_5)", |b| {
        let b5 = boolean_lattice(5);
        b.iter(|| ideal_ij(black_box(&b5), 2).unwrap())
    });
}

fn bench_homology(c: &mut Criterion) {
    c.bench_function("betti B_4- * C_4", |b| {
        let rees = rees_boolean(4);
        b.iter(|| betti(black_box(&rees), 1 << 22).unwrap())
    });
    c.bench_function("betti B_5- * C_5", |b| {
        let rees = rees_boolean(5);
        b.iter(|| betti(black_box(&rees), 1 << 22).unwrap())
    });
    c.bench_function("mobius hat(B_6- * C_6)", |b| {
        let rees = rees_boolean(6);
        b.iter(|| mobius_invariant_hat(black_box(&rees)))
    });
}

fn bench_symfunc(c: &mut Criterion) {
    c.bench_function("eulerian polynomial A_7", |b| {
        b.iter(|| q_eulerian(black_box(7), EulerianFlavor::MajExc))
    });
    c.bench_function("omega Q_{5,2}", |b| {
        b.iter(|| {
            let q = eulerian_qsym(5, 2, 5).unwrap();
            to_monomial_basis(&q).unwrap().omega()
        })
    });
    c.bench_function("quotient series identity cap 4", |b| {
        b.iter(|| series_identity_check(SeriesIdentity::QfixQuotient, 4, 4).unwrap())
    });
}

criterion_group!(benches, bench_construction, bench_homology, bench_symfunc);
criterion_main!(benches);
