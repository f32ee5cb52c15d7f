use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use gerstewitz::corpus;
use gerstewitz::efficiency::{eff_finite, DominationSet};
use gerstewitz::solver::solve;
use gerstewitz::{EvalOptions, SetRep};
use gerstewitz_bench::{orthant_problem, polyhedral_functional, random_point, rng};

fn evaluation(c: &mut Criterion) {
    let mut r = rng();
    let g = polyhedral_functional(&mut r, 3, 6);
    let ys: Vec<_> = (0..256).map(|_| random_point(&mut r, 3, 5.0)).collect();
    let mut group = c.benchmark_group("phi");
    group.bench_function("closed_form", |b| {
        b.iter(|| ys.iter().map(|y| g.phi_polyhedral(black_box(y)).unwrap().value).collect::<Vec<_>>())
    });
    group.bench_function("bisection", |b| {
        b.iter(|| ys.iter().map(|y| g.phi_bisection(black_box(y), 1e-9, 1e12).unwrap().value).collect::<Vec<_>>())
    });
    group.finish();
}

fn solving(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_finite");
    for n in [100, 1_000, 10_000] {
        let p = orthant_problem(&mut rng(), 3, n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| b.iter(|| solve(black_box(p)).unwrap()));
    }
    group.finish();
}

fn efficiency(c: &mut Criterion) {
    let mut group = c.benchmark_group("eff_finite");
    let d = DominationSet::new(SetRep::orthant(2), true).unwrap();
    for n in [100, 1_000] {
        let mut r = rng();
        let pts: Vec<_> = (0..n).map(|_| random_point(&mut r, 2, 5.0)).collect();
        group.bench_with_input(BenchmarkId::from_parameter(n), &pts, |b, pts| {
            b.iter(|| eff_finite(black_box(pts), &d).unwrap())
        });
    }
    group.finish();
}

fn corpus_run(c: &mut Criterion) {
    let mut group = c.benchmark_group("corpus");
    group.sample_size(10);
    group.bench_function("run_all", |b| b.iter(|| corpus::run_all(EvalOptions::default()).unwrap()));
    group.finish();
}

criterion_group!(benches, evaluation, solving, efficiency, corpus_run);
criterion_main!(benches);
