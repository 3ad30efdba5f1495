//! End-to-end behavior of the split-step propagator: conservation laws,
//! the free spreading law, Ehrenfest dynamics in a uniform field, the
//! mass-dependence of packet spreading, and second-order convergence in dt.

mod common;

use num_complex::Complex64;
use qep_core::{gaussian_packet, propagate, stationary_check, Potential, SpatialGrid, Trajectory};

#[test]
fn norm_and_energy_survive_ten_thousand_steps() {
    let grid = SpatialGrid::new(-30.0, 30.0, 1024).unwrap();
    let psi = gaussian_packet(&grid, -3.0, 0.6, 1.2, 1.0).unwrap();
    let potential = Potential::UniformGravity { g: 0.4 };
    let e0 = psi.energy_expectation(&potential);
    let run = propagate(psi, &potential, 2e-4, 10_000, 1000).unwrap();
    assert!(run.norm_drift <= 1e-12, "norm drift {:e}", run.norm_drift);
    let e1 = run.final_state.energy_expectation(&potential);
    assert!((e1 - e0).abs() / e0.abs() <= 1e-8, "energy drifted from {e0} to {e1}");
}

#[test]
fn free_gaussian_follows_the_spreading_law() {
    let grid = SpatialGrid::new(-40.0, 40.0, 2048).unwrap();
    let dx0 = 0.9;
    let mass = 1.3;
    let psi = gaussian_packet(&grid, 0.0, 0.0, dx0, mass).unwrap();
    let run = propagate(psi, &Potential::Free, 5e-4, 4000, 400).unwrap();
    for sample in &run.trace {
        let expect = common::free_spread(dx0, mass, sample.time);
        assert!(
            common::rel(sample.observables.spread_x, expect) < 1e-6,
            "t = {}: spread {} vs {}",
            sample.time,
            sample.observables.spread_x,
            expect
        );
    }
    // The packet really did spread.
    let final_spread = run.trace.last().unwrap().observables.spread_x;
    assert!(final_spread > 1.3 * dx0, "no spreading: {final_spread}");
}

#[test]
fn uniform_gravity_follows_ehrenfest_for_any_mass() {
    // <x>(t) = x0 - g t^2 / 2 and <p>(t) = -m g t, independent of packet
    // shape; in a linear potential the split-step evolution reproduces the
    // classical moments to round-off.
    let grid = SpatialGrid::new(-25.0, 25.0, 1024).unwrap();
    let g = 0.5;
    for mass in [1.0, 2.0] {
        let psi = gaussian_packet(&grid, 0.0, 0.0, 1.0, mass).unwrap();
        let run = propagate(psi, &Potential::UniformGravity { g }, 5e-4, 4000, 500).unwrap();
        for sample in &run.trace {
            let t = sample.time;
            let x_classical = -0.5 * g * t * t;
            let p_classical = -mass * g * t;
            assert!(
                (sample.observables.mean_x - x_classical).abs() < 1e-9,
                "m={mass}, t={t}: <x> = {} vs {x_classical}",
                sample.observables.mean_x
            );
            assert!(
                (sample.observables.mean_p - p_classical).abs() < 1e-9,
                "m={mass}, t={t}: <p> = {} vs {p_classical}",
                sample.observables.mean_p
            );
        }
    }
}

#[test]
fn mean_position_is_mass_blind_but_spread_is_not() {
    // The equivalence-principle tension in packet language: identical
    // initial position and velocity distributions' centers fall identically
    // for any mass, while the quantum spread at fixed initial width depends
    // on the mass.
    let grid = SpatialGrid::new(-25.0, 25.0, 1024).unwrap();
    let g = 0.5;
    let run_for = |mass: f64| {
        let psi = gaussian_packet(&grid, 0.0, 0.0, 1.0, mass).unwrap();
        propagate(psi, &Potential::UniformGravity { g }, 5e-4, 4000, 200).unwrap()
    };
    let light = run_for(1.0);
    let heavy = run_for(2.0);
    assert_eq!(light.trace.len(), heavy.trace.len());
    for (a, b) in light.trace.iter().zip(&heavy.trace) {
        assert!(
            (a.observables.mean_x - b.observables.mean_x).abs() <= 1e-8,
            "t = {}: centers {} vs {}",
            a.time,
            a.observables.mean_x,
            b.observables.mean_x
        );
    }
    let ds_light = light.trace.last().unwrap().observables.spread_x;
    let ds_heavy = heavy.trace.last().unwrap().observables.spread_x;
    let contrast = (ds_light - ds_heavy).abs() / ds_heavy;
    assert!(contrast > 0.01, "spreads {ds_light} vs {ds_heavy} too close");
}

#[test]
fn strang_error_shrinks_fourth_per_dt_halving() {
    // In a potential with genuine operator non-commutativity (anharmonic
    // well) the splitting error is O(dt^2) per unit time: halving dt must
    // cut the end-state error by about 4. The reference is the same scheme
    // at dt/8.
    let grid = SpatialGrid::new(-16.0, 16.0, 512).unwrap();
    let well = || Potential::tabulated_static(|x| 0.5 * x * x + 0.08 * x.powi(4));
    let total_t = 1.0;
    let end_state = |dt: f64| {
        let psi = gaussian_packet(&grid, 1.0, 0.0, 0.8, 1.0).unwrap();
        let steps = (total_t / dt).round() as usize;
        propagate(psi, &well(), dt, steps, 0).unwrap().final_state
    };
    let reference = end_state(2.5e-4);
    let err = |dt: f64| {
        let state = end_state(dt);
        state
            .amplitudes()
            .iter()
            .zip(reference.amplitudes())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0_f64, f64::max)
    };
    let coarse = err(2e-3);
    let fine = err(1e-3);
    let ratio = coarse / fine;
    assert!((3.5..=4.5).contains(&ratio), "error ratio {ratio} (coarse {coarse:e}, fine {fine:e})");
}

#[test]
fn harmonic_ground_state_is_stationary() {
    // The analytic oscillator ground state is a Gaussian with
    // dx = sqrt(hbar / (2 m w)); under V = m w^2 x^2 / 2 it must sit still
    // and rotate its phase at -E/hbar with E = hbar w / 2.
    let grid = SpatialGrid::new(-16.0, 16.0, 512).unwrap();
    let mass: f64 = 1.0;
    let omega: f64 = 1.0;
    let dx = (1.0 / (2.0 * mass * omega)).sqrt();
    let psi = gaussian_packet(&grid, 0.0, 0.0, dx, mass).unwrap();
    let well = Potential::tabulated_static(move |x| 0.5 * mass * omega * omega * x * x);
    let energy = 0.5 * omega;
    let check = stationary_check(&psi, &well, energy, 1e-3, 2000).unwrap();
    assert!(check.residual < 1e-8, "residual {:e}", check.residual);
    assert!(
        common::rel(check.phase_rate, check.expected_rate) < 1e-5,
        "phase rate {} vs {}",
        check.phase_rate,
        check.expected_rate
    );

    // A displaced copy of the same Gaussian is not stationary.
    let displaced = gaussian_packet(&grid, 1.5, 0.0, dx, mass).unwrap();
    let bad = stationary_check(&displaced, &well, energy, 1e-3, 2000).unwrap();
    assert!(bad.residual > 1e-3, "displaced packet looked stationary");
}

#[test]
fn zero_steps_are_a_clean_identity() {
    let grid = SpatialGrid::new(-16.0, 16.0, 256).unwrap();
    let psi = gaussian_packet(&grid, 0.0, 0.4, 1.0, 1.0).unwrap();
    let before: Vec<Complex64> = psi.amplitudes().to_vec();
    let run = propagate(psi.clone(), &Potential::Free, 1e-3, 0, 10).unwrap();
    for (a, b) in run.final_state.amplitudes().iter().zip(&before) {
        assert_eq!(a, b);
    }
    let check = stationary_check(&psi, &Potential::Free, 0.3, 1e-3, 0).unwrap();
    assert_eq!(check.residual, 0.0);
    assert_eq!(check.phase_rate, 0.0);
}

#[test]
fn accelerated_frame_potential_matches_its_trajectory() {
    // With frame coordinate x' = x + xi(t), a lab-free packet gains frame
    // velocity xi_dot, so the frame potential -m xi_ddot x' must push <p>
    // by +m a t (Ehrenfest in the frame's own coordinates).
    let grid = SpatialGrid::new(-30.0, 30.0, 1024).unwrap();
    let a = 0.7;
    let mass = 1.4;
    let psi = gaussian_packet(&grid, 0.0, 0.0, 1.0, mass).unwrap();
    let potential =
        Potential::AcceleratedFrame { trajectory: Trajectory::ConstantAcceleration { a } };
    let run = propagate(psi, &potential, 5e-4, 2000, 0).unwrap();
    let t = 1.0;
    let obs = run.final_state.observables();
    assert!((obs.mean_p - mass * a * t).abs() < 1e-9, "mean_p = {}", obs.mean_p);
}
