use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tricenter_bench::{reference_triangle, sample_triangles};
use tricenter_core::electro_center::{electrostatic_center, solve_lambda};
use tricenter_core::general_p::{rp_center, PExponent};
use tricenter_core::potential::{brute_force_max, potential_closed, potential_quadrature};
use tricenter_core::{Point2, QuadratureConfig};

fn bench_lambda(c: &mut Criterion) {
    let sides = reference_triangle().side_lengths();
    c.bench_function("solve_lambda/reference", |b| {
        b.iter(|| solve_lambda(black_box(&sides), 1e-14).unwrap())
    });
    let tris = sample_triangles(64);
    c.bench_function("electrostatic_center/64_random", |b| {
        b.iter(|| {
            for t in &tris {
                black_box(electrostatic_center(black_box(t), 1e-12).unwrap());
            }
        })
    });
}

fn bench_potential(c: &mut Criterion) {
    let tri = reference_triangle();
    let p = Point2::new(0.3, 0.5);
    c.bench_function("potential_closed", |b| {
        b.iter(|| potential_closed(black_box(&tri), black_box(p)).unwrap())
    });
    let mut group = c.benchmark_group("potential_quadrature");
    for tol in [1e-6, 1e-10, 1e-13] {
        let cfg = QuadratureConfig::new(tol, 30).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(tol), &cfg, |b, cfg| {
            b.iter(|| potential_quadrature(black_box(&tri), black_box(p), cfg).unwrap())
        });
    }
    group.finish();
}

fn bench_general_p(c: &mut Criterion) {
    let tri = reference_triangle();
    let mut group = c.benchmark_group("rp_center");
    for p in [-4.0, -1.0, 3.0, 20.0] {
        let pe = PExponent::new(p).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(p), &pe, |b, pe| {
            b.iter(|| rp_center(black_box(&tri), *pe, 1e-12).unwrap())
        });
    }
    group.finish();
}

fn bench_oracle(c: &mut Criterion) {
    let tri = reference_triangle();
    let mut group = c.benchmark_group("brute_force_max");
    group.sample_size(10);
    group.bench_function("closed/64x6", |b| b.iter(|| brute_force_max(black_box(&tri), 64, 6).unwrap()));
    group.finish();
}

criterion_group!(lambda, bench_lambda);
criterion_group!(potential, bench_potential);
criterion_group!(general_p, bench_general_p);
criterion_group!(oracle, bench_oracle);
criterion_main!(lambda, potential, general_p, oracle);
