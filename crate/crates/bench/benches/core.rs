use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use lmhs_bench::fixture;
use lmhs_core::basechange::cyclotomic_refinement;
use lmhs_core::checks;
use lmhs_core::polydisk::{ih_decomposition, koszul_complex};
use lmhs_core::quiver::{construct, decompose_indecomposables, decomposes};
use lmhs_core::ratlin::q;
use lmhs_core::{FixtureBody, IndecompSummand, RationalMatrix, SummandMultiset};

fn unitriangular(n: usize) -> RationalMatrix {
    let mut m = RationalMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            m[(i, j)] = q(((i + 2 * j) % 5) as i64 - 2);
        }
    }
    m
}

fn quiver(c: &mut Criterion) {
    let m: SummandMultiset = [
        (IndecompSummand::a(2), 1),
        (IndecompSummand::b(2), 1),
        (IndecompSummand::c(2), 1),
        (IndecompSummand::d(1), 1),
        (IndecompSummand::e(1, 3), 2),
    ]
    .into_iter()
    .collect();
    let rep = construct(&m).unwrap();
    let (psi, phi) = (rep.psi_dim(), rep.phi_dim());
    let rep = rep.change_basis(&unitriangular(psi), &unitriangular(phi)).unwrap();
    c.bench_function("quiver/decompose dim 16", |b| {
        b.iter(|| decompose_indecomposables(black_box(&rep)).unwrap())
    });
    c.bench_function("quiver/decomposes dim 16", |b| b.iter(|| decomposes(black_box(&rep))));
}

fn polydisk(c: &mut Criterion) {
    let FixtureBody::MultiParameter(fx) = fixture("ex19c-2").body else { unreachable!() };
    let h = fx.strata.entries.iter().find_map(|e| e.lmhs.clone()).unwrap();
    c.bench_function("polydisk/koszul ex19c-2", |b| b.iter(|| koszul_complex(black_box(&h), &[]).unwrap()));
    c.bench_function("polydisk/ih_decomposition ex19c-2", |b| {
        b.iter(|| ih_decomposition(3, black_box(&fx.strata)).unwrap())
    });
}

fn refinement(c: &mut Criterion) {
    let m = [(1, 6), (2, 4), (3, 4)].into_iter().collect();
    c.bench_function("basechange/refine kappa=6", |b| {
        b.iter(|| cyclotomic_refinement(black_box(&m), 6).unwrap())
    });
}

fn fixtures(c: &mut Criterion) {
    for name in ["k3-E8tilde", "n16", "ex19b"] {
        let file = fixture(name);
        c.bench_function(&format!("checks/{name}"), |b| b.iter(|| checks::run(black_box(&file), &[]).unwrap()));
    }
}

criterion_group!(benches, quiver, polydisk, refinement, fixtures);
criterion_main!(benches);
