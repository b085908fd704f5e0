use std::hint::black_box;

use apery_bench::SEMIGROUPS;
use apery_core::algebra::build_algebra;
use apery_core::inverse::dual_socle_generator;
use apery_core::lefschetz::{slp_by_hessian_with, slp_by_ranks_with, wlp_by_ranks_with};
use apery_core::seed::task_rng;
use apery_core::{DualAlgebraView, NumericalSemigroup, SweepConfig};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn name(gens: &[u64]) -> String {
    gens.iter()
        .map(|g| g.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn apery(c: &mut Criterion) {
    let mut group = c.benchmark_group("apery_set");
    for &gens in SEMIGROUPS {
        let sg = NumericalSemigroup::new(gens).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name(gens)), &sg, |b, sg| {
            b.iter(|| black_box(sg).apery_set())
        });
    }
    group.finish();
}

fn algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("algebra");
    for &gens in SEMIGROUPS {
        let table = NumericalSemigroup::new(gens).unwrap().apery_set();
        group.bench_with_input(BenchmarkId::new("graded", name(gens)), &table, |b, t| {
            b.iter(|| build_algebra(black_box(t)).to_graded())
        });
        group.bench_with_input(
            BenchmarkId::new("dual_generator", name(gens)),
            &table,
            |b, t| b.iter(|| dual_socle_generator(black_box(t)).unwrap()),
        );
    }
    group.finish();
}

fn lefschetz(c: &mut Criterion) {
    let mut group = c.benchmark_group("lefschetz");
    for &gens in SEMIGROUPS {
        let table = NumericalSemigroup::new(gens).unwrap().apery_set();
        let alg = build_algebra(&table).to_graded();
        group.bench_with_input(BenchmarkId::new("wlp_ranks", name(gens)), &alg, |b, a| {
            b.iter(|| wlp_by_ranks_with(a, &mut task_rng(0, gens)))
        });
        group.bench_with_input(BenchmarkId::new("slp_ranks", name(gens)), &alg, |b, a| {
            b.iter(|| slp_by_ranks_with(a, &mut task_rng(0, gens)))
        });
        if let Ok(view) = DualAlgebraView::from_apery(&table) {
            group.bench_with_input(
                BenchmarkId::new("slp_hessian", name(gens)),
                &view,
                |b, v| b.iter(|| slp_by_hessian_with(v, &mut task_rng(0, gens))),
            );
        }
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut config = SweepConfig::new(3..=12, 24, 3..=4);
    config.require_m_pure = true;
    c.bench_function("sweep_enumeration_m12", |b| {
        b.iter(|| config.semigroups().unwrap().len())
    });
}

criterion_group!(benches, apery, algebra, lefschetz, enumeration);
criterion_main!(benches);
