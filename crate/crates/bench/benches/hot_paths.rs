//! Throughput benchmarks for the three hot paths: split-step propagation,
//! the radial finite-difference eigensolver, and semiclassical matrix-element
//! reconstruction. Sample counts are kept small; these are trend trackers,
//! not statistical studies.

use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};
use qep_core::{
    bound_basis, correspondence_check, gaussian_packet, propagate, radial_eigensolver,
    CentralPotentialSpec, Potential, SolverGrid, SpatialGrid, WellSpec, HBAR,
};

fn bench_split_step(c: &mut Criterion) {
    let mut group = c.benchmark_group("split_step_100_steps");
    group.sample_size(20);
    for &n_points in &[512_usize, 2048, 8192] {
        let grid = SpatialGrid::new(-40.0, 40.0, n_points).unwrap();
        let psi0 = gaussian_packet(&grid, 0.0, 0.0, 1.0, 1.0).unwrap();
        let potential = Potential::UniformGravity { g: 0.4 };
        // dt sits inside the anti-aliasing guard even for the densest grid
        // (largest k_max), so all three sizes run the identical schedule.
        group.bench_with_input(BenchmarkId::from_parameter(n_points), &n_points, |b, _| {
            b.iter_batched(
                || psi0.clone(),
                |psi| propagate(psi, &potential, 4e-5, 100, 0).unwrap(),
                BatchSize::SmallInput,
            )
        });
    }
    group.finish();
}

fn bench_radial_eigensolver(c: &mut Criterion) {
    let mut group = c.benchmark_group("radial_eigensolver_5_levels");
    group.sample_size(20);
    let spec = CentralPotentialSpec::gravitational(1.0, 1.0, 1.0).unwrap();
    for &n_grid in &[2000_usize, 8000] {
        group.bench_with_input(BenchmarkId::from_parameter(n_grid), &n_grid, |b, &n| {
            b.iter(|| radial_eigensolver(&spec, HBAR, 400.0, n, 5).unwrap())
        });
    }
    group.finish();
}

fn bench_correspondence(c: &mut Criterion) {
    let mut group = c.benchmark_group("correspondence");
    group.sample_size(10);

    let spec = CentralPotentialSpec::gravitational(1.0, 1.0, 1.0).unwrap();
    let n = 10_usize;
    let top = n + 3;
    let r_box = 3.2 * spec.analytic_radius(HBAR, top);
    let n_grid = (r_box / 0.05).ceil() as usize;
    let grid = SolverGrid::new(0.0, r_box, n_grid).unwrap();
    let well = WellSpec::radial(spec);

    group.bench_function("bound_basis_13_levels", |b| {
        b.iter(|| bound_basis(&well, HBAR, &grid, top).unwrap())
    });

    let basis = bound_basis(&well, HBAR, &grid, top).unwrap();
    group.bench_function("matrix_elements_vs_orbit", |b| {
        b.iter(|| correspondence_check(&basis, n, 3, 2048))
    });
    group.finish();
}

criterion_group!(benches, bench_split_step, bench_radial_eigensolver, bench_correspondence);
criterion_main!(benches);
