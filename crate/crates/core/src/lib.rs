//! Numerical laboratory for non-relativistic quantum mechanics in uniformly
//! accelerated frames and for gravitationally bound quantum states.
//!
//! The crate provides five groups of tools:
//!
//! * spectral split-step propagation of 1-D wavefunctions ([`propagator`]),
//! * coordinate transforms into rigidly translating frames together with the
//!   phase bookkeeping they require ([`frame`]),
//! * bound-state spectra of `-alpha/r` wells, both closed-form and from a
//!   finite-difference radial eigensolver ([`bound`]),
//! * classical radial orbits, their Fourier decomposition, and checks that
//!   quantum matrix elements approach the classical coefficients
//!   ([`correspondence`]),
//! * order-of-magnitude estimates built from tabulated physical constants
//!   ([`estimates`]).
//!
//! Everything outside [`estimates`] works in scaled units with `hbar = 1`
//! unless an explicit `hbar` argument says otherwise.

pub mod bound;
pub mod constants;
pub mod correspondence;
pub mod error;
pub mod estimates;
pub mod frame;
pub mod grid;
pub mod potential;
pub mod propagator;
pub mod quadrature;
pub mod spectral;
pub mod state;
pub mod trajectory;
pub mod tridiag;

pub use bound::{action_closed_form, action_integrals, analytic_spectrum, radial_eigensolver};
pub use bound::{ActionIntegrals, CentralPotentialSpec, SpectrumLevel, SpectrumResult};
pub use constants::{ConstantsSet, UnitSystem};
pub use correspondence::{
    bound_basis, classical_orbit, correspondence_check, fourier_coefficients,
    gravitational_scaling_correspondence, level_spacing_check, matrix_element, scaling_check,
    scaling_check_numeric, BoundStateBasis, ClassicalOrbit, CorrespondenceRow, FourierCoefficients,
    LevelSpacing, ScaledCorrespondence, ScaledCorrespondenceRow, ScalingCheck, SolverGrid,
    WellSpec,
};
pub use error::CoreError;
pub use estimates::{
    alternative_quantization_number, classical_electron_radius, compton_wavelength, full_report,
    fundamental_speed_estimate, mass_from_velocity_spread, neutron_pair_bohr_radius, planck_length,
    reduced_compton_wavelength, EstimateReport,
};
pub use frame::{
    equivalence_experiment, free_particle_phase_check, from_accelerated_frame, phase_function,
    proper_time_residue, to_accelerated_frame, EquivalenceResult, PhaseCheck, PhaseField,
};
pub use grid::SpatialGrid;
pub use potential::Potential;
pub use propagator::{
    propagate, stationary_check, PropagationResult, StationaryCheck, TraceSample,
};
pub use state::{gaussian_packet, Observables, Wavefunction};
pub use trajectory::Trajectory;

/// Reduced Planck constant in the scaled units used by every module that
/// does not take an explicit `hbar` argument.
pub const HBAR: f64 = 1.0;
