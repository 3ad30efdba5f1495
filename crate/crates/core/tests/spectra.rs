//! Bound spectra of attractive 1/r wells: the finite-difference eigensolver
//! against the closed forms, the mass scaling of those closed forms, and the
//! loop-action integrals that quantize as whole multiples of h.

mod common;

use qep_core::{
    action_closed_form, action_integrals, analytic_spectrum, radial_eigensolver, scaling_check,
    scaling_check_numeric, CentralPotentialSpec, CoreError,
};

/// Natural units: G = M = m = 1, so r_n = n^2 and E_n = -1/(2 n^2).
fn natural() -> CentralPotentialSpec {
    CentralPotentialSpec::gravitational(1.0, 1.0, 1.0).unwrap()
}

const H_PLANCK: f64 = std::f64::consts::TAU; // h = 2 pi hbar, hbar = 1

#[test]
fn inverse_square_spectrum_from_finite_differences() {
    // Acceptance-scale solve: five levels in a box of 400 with 8000 points.
    let spec = natural();
    let result = radial_eigensolver(&spec, 1.0, 400.0, 8000, 5).unwrap();
    for level in result.levels() {
        let expect = -0.5 / (level.n as f64 * level.n as f64);
        assert!(
            common::rel(level.analytic_energy, expect) < 1e-14,
            "closed form drifted at n = {}",
            level.n
        );
        let err = level.relative_error.unwrap();
        assert!(err <= 1e-3, "n = {}: relative error {err:e}", level.n);
    }
    let e1 = result.level(1).unwrap().numeric_energy.unwrap();
    let e4 = result.level(4).unwrap().numeric_energy.unwrap();
    let ratio = e1 / e4;
    assert!((ratio - 16.0).abs() / 16.0 <= 5e-3, "E1/E4 = {ratio} strayed from 16");
}

#[test]
fn refinement_quarters_the_eigenvalue_error() {
    // Second-order finite differences: halving h divides the ground-state
    // error by about four, and the coarse error matches the h^2/4 model.
    let spec = natural();
    let coarse = radial_eigensolver(&spec, 1.0, 400.0, 4000, 1).unwrap();
    let fine = radial_eigensolver(&spec, 1.0, 400.0, 8000, 1).unwrap();
    let e_coarse = coarse.level(1).unwrap().relative_error.unwrap();
    let e_fine = fine.level(1).unwrap().relative_error.unwrap();
    let ratio = e_coarse / e_fine;
    assert!(
        (3.5..=4.5).contains(&ratio),
        "refinement ratio {ratio} (coarse {e_coarse:e}, fine {e_fine:e})"
    );
    let h = 400.0 / 4000.0;
    let model = h * h / 4.0;
    assert!(
        (0.8..=1.2).contains(&(e_coarse / model)),
        "coarse error {e_coarse:e} vs h^2/4 model {model:e}"
    );
}

#[test]
fn mass_scaling_of_the_closed_forms_is_exact() {
    // With the attraction A = G M m, energies go as m^3 and radii as 1/m^2.
    let spec = natural();
    let doubled = spec.with_mass(2.0).unwrap();
    for n in 1..=6 {
        let e1 = spec.analytic_energy(1.0, n);
        let e2 = doubled.analytic_energy(1.0, n);
        assert!(common::rel(e2, 8.0 * e1) < 1e-12, "energy at n = {n}");
        let r1 = spec.analytic_radius(1.0, n);
        let r2 = doubled.analytic_radius(1.0, n);
        assert!(common::rel(r2, r1 / 4.0) < 1e-12, "radius at n = {n}");
    }
}

#[test]
fn coulomb_and_gravity_with_equal_attraction_are_one_problem() {
    // Only the product A enters: an electrostatic well with e^2 = G M m
    // has the identical spectrum.
    let grav = CentralPotentialSpec::gravitational(0.7, 1.3, 1.1).unwrap();
    let coul = CentralPotentialSpec::coulomb(0.7 * 1.3 * 1.1, 1.1).unwrap();
    for n in 1..=4 {
        assert_eq!(grav.analytic_energy(1.0, n), coul.analytic_energy(1.0, n));
        assert_eq!(grav.analytic_radius(1.0, n), coul.analytic_radius(1.0, n));
    }
    assert_eq!(grav.attraction(), coul.attraction());
}

#[test]
fn solver_rejects_boxes_and_grids_it_cannot_support() {
    let spec = natural();
    // Level 5 lives at r_5 = 25; a box of 40 cannot hold 3 r_5.
    match radial_eigensolver(&spec, 1.0, 40.0, 4000, 5) {
        Err(CoreError::BoxTooSmall(_)) => {}
        other => panic!("expected BoxTooSmall, got {other:?}"),
    }
    assert!(radial_eigensolver(&spec, 1.0, 400.0, 1999, 1).is_err());
    assert!(analytic_spectrum(&spec, 1.0, 0).is_err());
    assert!(action_integrals(&spec, 1.0, 0.5).is_err(), "positive energy has no turning point");
}

#[test]
fn loop_actions_land_on_integer_multiples_of_h() {
    let spec = natural();
    for n in [5_usize, 8, 13, 21] {
        let energy = spec.analytic_energy(1.0, n);
        let actions = action_integrals(&spec, 1.0, energy).unwrap();
        let target = n as f64 * H_PLANCK;
        assert!(
            common::rel(actions.p_action, target) <= 5e-3,
            "n = {n}: p-action {} vs n h {target}",
            actions.p_action
        );
        // The quadrature itself is near machine precision against the
        // closed form of the same integral.
        let closed = action_closed_form(&spec, energy);
        assert!(common::rel(actions.p_action, closed) < 1e-12);
        // v-action is defined as p-action over mass, bit for bit.
        assert_eq!(actions.v_action, actions.p_action / spec.mass());
        // Outer turning radius of the degenerate radial orbit: A/|E| = 2 n^2.
        assert!(common::rel(actions.turning_radius, 2.0 * (n * n) as f64) < 1e-12);
    }
}

#[test]
fn velocity_action_survives_the_mass_relabeling() {
    // (m, n) -> (K m, K n) leaves the velocity loop integral alone while
    // the momentum loop integral picks up exactly K.
    let spec = natural();
    for (k, n) in [(2_usize, 1_usize), (3, 4), (5, 7)] {
        let check = scaling_check(&spec, 1.0, k, n).unwrap();
        assert!(
            check.v_action_relative_difference <= 1e-9,
            "K = {k}, n = {n}: v-action moved by {:e}",
            check.v_action_relative_difference
        );
        assert!(
            (check.p_action_ratio - k as f64).abs() <= 1e-12 * k as f64,
            "K = {k}, n = {n}: p-action ratio {}",
            check.p_action_ratio
        );
    }
}

#[test]
fn velocity_action_scaling_holds_with_numeric_energies() {
    // Same invariance, but both energies come out of the eigensolver:
    // level 5 at mass 1 against level 15 at mass 3, one shared box.
    let spec = natural();
    let check = scaling_check_numeric(&spec, 1.0, 3, 5, 100.0, 4000).unwrap();
    assert!(
        check.v_action_relative_difference <= 1e-2,
        "numeric v-action moved by {:e}",
        check.v_action_relative_difference
    );
    assert!(
        (check.p_action_ratio - 3.0).abs() <= 3.0 * 1e-2,
        "numeric p-action ratio {}",
        check.p_action_ratio
    );
}
