//! Transformations between the lab frame and a rigidly displaced
//! (accelerating) frame, and the phase identities that come with them.
//!
//! Conventions, used consistently everywhere:
//!
//! * accelerated coordinate `x' = x + xi(t)`, same time coordinate;
//! * phase `f(x', t) = (m/hbar) (-xi_dot(t) x' + 1/2 int_0^t xi_dot^2)`;
//! * accelerated-frame wavefunction `phi(x', t) = e^{-i f} psi_lab(x' - xi, t)`;
//! * the accelerated frame sees the linear potential `V = -m xi_ddot(t) x'`.
//!
//! With these choices, propagating freely in the lab and then transforming
//! agrees with transforming first and propagating under the linear
//! potential — the equivalence this module exists to demonstrate.

use num_complex::Complex64;

use crate::error::{CoreError, Result};
use crate::grid::SpatialGrid;
use crate::potential::Potential;
use crate::propagator::propagate;
use crate::spectral::{derivative_linear_trended, translate};
use crate::state::{Wavefunction, EDGE_TAIL_LIMIT};
use crate::trajectory::Trajectory;
use crate::HBAR;

/// `f(x', t) = (m/hbar) (-xi_dot(t) x' + 1/2 int_0^t xi_dot^2 dt')`.
pub fn phase_function(x_prime: f64, t: f64, mass: f64, traj: &Trajectory) -> f64 {
    (mass / HBAR) * (-traj.xi_dot(t) * x_prime + 0.5 * traj.xi_dot_sq_integral(t))
}

/// The phase `f` sampled on a grid at a fixed time, plus the slope it must
/// have: `f` is linear in `x'` with slope `-(m/hbar) xi_dot(t)`.
#[derive(Debug, Clone)]
pub struct PhaseField {
    grid: SpatialGrid,
    values: Vec<f64>,
    expected_slope: f64,
    time: f64,
}

impl PhaseField {
    pub fn sample(grid: &SpatialGrid, traj: &Trajectory, t: f64, mass: f64) -> PhaseField {
        let values = grid.points().map(|x| phase_function(x, t, mass, traj)).collect();
        PhaseField { grid: *grid, values, expected_slope: -(mass / HBAR) * traj.xi_dot(t), time: t }
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    /// `-(m/hbar) xi_dot(t)`: the momentum kick per unit hbar the phase
    /// imprints.
    pub fn expected_slope(&self) -> f64 {
        self.expected_slope
    }

    /// Spatial derivative of the phase, computed spectrally after removing
    /// the linear trend (a bare ramp is not periodic, so it cannot go
    /// through the FFT directly).
    pub fn gradient(&self) -> Vec<f64> {
        derivative_linear_trended(&self.grid, &self.values)
    }

    /// Largest deviation of the measured gradient from the expected uniform
    /// slope, over the whole grid.
    pub fn max_slope_deviation(&self) -> f64 {
        self.gradient().into_iter().map(|g| (g - self.expected_slope).abs()).fold(0.0, f64::max)
    }
}

/// Map a lab-frame state into the frame displaced by `traj`, at the state's
/// own time: shift the coordinate spectrally, then imprint `e^{-i f}`.
///
/// Errors if the shifted state no longer fits the box.
pub fn to_accelerated_frame(psi_lab: &Wavefunction, traj: &Trajectory) -> Result<Wavefunction> {
    let t = psi_lab.time();
    let xi = traj.xi(t);
    // phi(x') = e^{-i f(x')} psi(x' - xi)
    let mut shifted = translate(psi_lab.grid(), psi_lab.amplitudes(), xi);
    for (x, a) in psi_lab.grid().points().zip(&mut shifted) {
        *a *= Complex64::from_polar(1.0, -phase_function(x, t, psi_lab.mass(), traj));
    }
    let phi = Wavefunction::from_amplitudes(*psi_lab.grid(), shifted, psi_lab.mass(), t)?;
    phi.check_contained(EDGE_TAIL_LIMIT)?;
    Ok(phi)
}

/// Exact inverse of [`to_accelerated_frame`]: strip the phase, shift back.
pub fn from_accelerated_frame(phi: &Wavefunction, traj: &Trajectory) -> Result<Wavefunction> {
    let t = phi.time();
    let xi = traj.xi(t);
    // psi(x) = [e^{+i f} phi](x + xi)
    let mut unphased: Vec<Complex64> = phi
        .grid()
        .points()
        .zip(phi.amplitudes())
        .map(|(x, a)| a * Complex64::from_polar(1.0, phase_function(x, t, phi.mass(), traj)))
        .collect();
    unphased = translate(phi.grid(), &unphased, -xi);
    let psi = Wavefunction::from_amplitudes(*phi.grid(), unphased, phi.mass(), t)?;
    psi.check_contained(EDGE_TAIL_LIMIT)?;
    Ok(psi)
}

/// Outcome of propagating the same initial state along the two routes that
/// the equivalence of acceleration and uniform gravity says must agree.
#[derive(Debug, Clone, Copy)]
pub struct EquivalenceResult {
    /// `|<A|B>|` between the two final states.
    pub fidelity: f64,
    /// `max_j |A_j - B_j|`, meaningful because the phase convention is
    /// carried explicitly by both routes.
    pub max_pointwise_error: f64,
    /// `max_j |A_j|`, for expressing the pointwise error relative to peak.
    pub peak_amplitude: f64,
}

/// Route A: propagate freely in the lab, then jump into the accelerated
/// frame. Route B: jump first, then propagate under the inertial potential
/// `-m xi_ddot x'`. Returns how well the two final states agree.
pub fn equivalence_experiment(
    psi0: &Wavefunction,
    traj: &Trajectory,
    dt: f64,
    n_steps: usize,
) -> Result<EquivalenceResult> {
    let lab = propagate(psi0.clone(), &Potential::Free, dt, n_steps, 0)?;
    let route_a = to_accelerated_frame(&lab.final_state, traj)?;

    let phi0 = to_accelerated_frame(psi0, traj)?;
    let accel = Potential::AcceleratedFrame { trajectory: traj.clone() };
    let route_b = propagate(phi0, &accel, dt, n_steps, 0)?;

    let fidelity = route_a.inner_product(&route_b.final_state)?.norm();
    let mut max_err = 0.0_f64;
    let mut peak = 0.0_f64;
    for (a, b) in route_a.amplitudes().iter().zip(route_b.final_state.amplitudes()) {
        max_err = max_err.max((a - b).norm());
        peak = peak.max(a.norm());
    }
    Ok(EquivalenceResult { fidelity, max_pointwise_error: max_err, peak_amplitude: peak })
}

/// Leftover of the Lorentz time transformation at second order in the frame
/// velocity: `delta_tau = xi_dot dx' - 1/2 xi_dot^2 dt` (c = 1).
///
/// Multiplied by `-m/hbar` this is exactly the differential structure of the
/// frame phase `f`. Warns on speeds above 0.3, where the quadratic
/// truncation starts to lose meaning.
pub fn proper_time_residue(xi_dot: f64, dx_prime: f64, dt: f64) -> f64 {
    if xi_dot.abs() > 0.3 {
        eprintln!(
            "proper_time_residue: |xi_dot| = {:.3} is large for a quadratic-order expansion",
            xi_dot.abs()
        );
    }
    xi_dot * dx_prime - 0.5 * xi_dot * xi_dot * dt
}

/// The two sides of the free-particle phase identity
/// `p r - E t = -m tau` along `r = v t` (hbar = c = 1).
#[derive(Debug, Clone, Copy)]
pub struct PhaseCheck {
    /// `p r - E t` with `p = m gamma v`, `E = m gamma`.
    pub phase_pr_et: f64,
    /// `-m tau` with `tau = t / gamma`.
    pub phase_minus_m_tau: f64,
    pub difference: f64,
}

/// Evaluate both sides of the identity for a particle moving at `v`.
/// Exact for all `|v| < 1`; errors at or beyond the light cone.
pub fn free_particle_phase_check(v: f64, t: f64, mass: f64) -> Result<PhaseCheck> {
    if v.abs() >= 1.0 {
        return Err(CoreError::Domain(format!("|v| = {} >= 1 (c = 1 units)", v.abs())));
    }
    let gamma = 1.0 / (1.0 - v * v).sqrt();
    let p = mass * gamma * v;
    let energy = mass * gamma;
    let r = v * t;
    let phase_pr_et = p * r - energy * t;
    let phase_minus_m_tau = -mass * t / gamma;
    Ok(PhaseCheck { phase_pr_et, phase_minus_m_tau, difference: phase_pr_et - phase_minus_m_tau })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::GaussLegendre;
    use crate::state::gaussian_packet;

    fn grid() -> SpatialGrid {
        SpatialGrid::new(-20.0, 20.0, 1024).unwrap()
    }

    #[test]
    fn phase_closed_forms() {
        let m = 1.3;
        let (x, t) = (0.7, 1.9);
        assert_eq!(phase_function(x, t, m, &Trajectory::Rest), 0.0);

        let v = 0.8;
        let cv = Trajectory::ConstantVelocity { v };
        let expect = (m / HBAR) * (-v * x + 0.5 * v * v * t);
        assert!((phase_function(x, t, m, &cv) - expect).abs() < 1e-12);

        let a = 0.6;
        let ca = Trajectory::ConstantAcceleration { a };
        let expect = (m / HBAR) * (-a * t * x + a * a * t * t * t / 6.0);
        assert!((phase_function(x, t, m, &ca) - expect).abs() < 1e-12);
    }

    #[test]
    fn accumulated_kinetic_term_matches_quadrature() {
        // The 1/2 int xi_dot^2 term of the phase, checked against direct
        // quadrature of the closed-form xi_dot for each family.
        let rule = GaussLegendre::new(64);
        let trajs = [
            Trajectory::ConstantVelocity { v: 0.8 },
            Trajectory::ConstantAcceleration { a: 0.6 },
            Trajectory::Sinusoidal { amplitude: 0.4, omega: 1.7 },
        ];
        for traj in &trajs {
            for t in [0.3, 1.1, 2.7] {
                let direct = rule.integrate(0.0, t, |s| traj.xi_dot(s).powi(2));
                let stored = traj.xi_dot_sq_integral(t);
                assert!(
                    (direct - stored).abs() <= 1e-10 * direct.max(1e-3),
                    "{}: {direct} vs {stored}",
                    traj.label()
                );
            }
        }
    }

    #[test]
    fn phase_field_slope_is_uniform() {
        let g = grid();
        let trajs = [
            Trajectory::ConstantVelocity { v: 0.8 },
            Trajectory::ConstantAcceleration { a: 0.5 },
            Trajectory::Sinusoidal { amplitude: 0.3, omega: 2.0 },
        ];
        for traj in &trajs {
            let field = PhaseField::sample(&g, traj, 1.3, 1.0);
            assert!(
                field.max_slope_deviation() <= 1e-8,
                "{}: deviation {:e}",
                traj.label(),
                field.max_slope_deviation()
            );
        }
    }

    #[test]
    fn rest_transform_is_identity() {
        let psi = gaussian_packet(&grid(), 1.0, 0.5, 1.0, 1.0).unwrap();
        let phi = to_accelerated_frame(&psi, &Trajectory::Rest).unwrap();
        for (a, b) in psi.amplitudes().iter().zip(phi.amplitudes()) {
            assert!((a - b).norm() < 1e-12);
        }
    }

    #[test]
    fn constant_velocity_shifts_momentum() {
        // At t = 0 a constant-velocity frame leaves positions alone but the
        // phase gradient moves mean momentum by +m xi_dot.
        let mass = 1.4;
        let v = 0.7;
        let psi = gaussian_packet(&grid(), 0.0, 0.0, 1.0, mass).unwrap();
        let phi = to_accelerated_frame(&psi, &Trajectory::ConstantVelocity { v }).unwrap();
        let obs = phi.observables();
        assert!(
            (obs.mean_p - mass * v).abs() < 1e-9,
            "mean_p = {}, expected {}",
            obs.mean_p,
            mass * v
        );
        assert!((obs.mean_x - 0.0).abs() < 1e-9);
    }

    #[test]
    fn round_trip_is_pointwise_identity() {
        let traj = Trajectory::Sinusoidal { amplitude: 0.4, omega: 1.5 };
        let psi = gaussian_packet(&grid(), -1.0, 0.8, 0.9, 1.2).unwrap();
        // Give the state a non-trivial time stamp so xi, xi_dot != 0.
        let psi = Wavefunction::from_amplitudes(*psi.grid(), psi.amplitudes().to_vec(), 1.2, 0.9)
            .unwrap();
        let back =
            from_accelerated_frame(&to_accelerated_frame(&psi, &traj).unwrap(), &traj).unwrap();
        for (a, b) in psi.amplitudes().iter().zip(back.amplitudes()) {
            assert!((a - b).norm() < 1e-12);
        }
        let obs = back.observables();
        assert!((obs.mean_p - 0.8).abs() < 1e-10);
    }

    #[test]
    fn escaping_shift_is_a_boundary_error() {
        let psi = gaussian_packet(&grid(), 8.0, 0.0, 1.0, 1.0).unwrap();
        let psi = Wavefunction::from_amplitudes(*psi.grid(), psi.amplitudes().to_vec(), 1.0, 1.5)
            .unwrap();
        // xi(1.5) = 9: the packet center would land at 17, hard against the
        // box edge at 20.
        let err = to_accelerated_frame(&psi, &Trajectory::ConstantVelocity { v: 6.0 }).unwrap_err();
        assert!(matches!(err, CoreError::Boundary(_)), "{err}");
    }

    #[test]
    fn rest_equivalence_is_exact() {
        let psi = gaussian_packet(&grid(), 0.0, 1.0, 1.0, 1.0).unwrap();
        let out = equivalence_experiment(&psi, &Trajectory::Rest, 5e-4, 400).unwrap();
        assert!(out.fidelity > 1.0 - 1e-12, "fidelity = {}", out.fidelity);
        assert!(out.max_pointwise_error < 1e-12, "err = {:e}", out.max_pointwise_error);
    }

    #[test]
    fn proper_time_values() {
        assert_eq!(proper_time_residue(0.0, 2.0, 3.0), 0.0);
        assert!((proper_time_residue(0.1, 1.0, 0.0) - 0.1).abs() < 1e-15);
        let (xi_dot, dx, dt) = (0.25, 0.4, 0.7);
        let expect = 0.25 * 0.4 - 0.5 * 0.0625 * 0.7;
        assert!((proper_time_residue(xi_dot, dx, dt) - expect).abs() < 1e-15);
    }

    #[test]
    fn proper_time_matches_phase_differential() {
        // -(m/hbar) delta_tau = (df/dx') dx' + (m/(2 hbar)) xi_dot^2 dt,
        // with df/dx' = -(m/hbar) xi_dot. Pure algebra; check a spread of
        // values exactly.
        for &(xi_dot, dx, dt, m) in
            &[(0.1, 0.3, 0.7, 1.0), (0.29, -1.2, 0.05, 2.5), (-0.17, 0.9, 1.3, 0.4)]
        {
            let lhs = -(m / HBAR) * proper_time_residue(xi_dot, dx, dt);
            let rhs = -(m / HBAR) * xi_dot * dx + (m / (2.0 * HBAR)) * xi_dot * xi_dot * dt;
            assert!((lhs - rhs).abs() <= 1e-15 * lhs.abs().max(1.0));
        }
    }

    #[test]
    fn free_particle_phase_identity() {
        let check = free_particle_phase_check(0.0, 1.7, 1.0).unwrap();
        assert!((check.phase_pr_et + 1.7).abs() < 1e-15);
        assert!(check.difference.abs() < 1e-15);

        let check = free_particle_phase_check(0.6, 1.0, 1.0).unwrap();
        assert!((check.phase_pr_et + 0.8).abs() < 1e-12, "{}", check.phase_pr_et);
        assert!(check.difference.abs() <= 1e-12);

        let check = free_particle_phase_check(0.99, 2.0, 1.5).unwrap();
        assert!(check.difference.abs() <= 1e-10, "{:e}", check.difference);

        assert!(free_particle_phase_check(1.0, 1.0, 1.0).is_err());
        assert!(free_particle_phase_check(-1.2, 1.0, 1.0).is_err());
    }
}
