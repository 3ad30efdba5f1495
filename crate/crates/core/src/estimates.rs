//! Order-of-magnitude calculator: the small dimensional quantities that
//! decide whether gravity can matter for quantum systems — Planck length,
//! the gravitational analogue of a fundamental speed, electron length
//! scales, the gravitational two-neutron ground-state radius — plus the
//! packet-width mass inference and the hypothetical velocity-loop
//! quantization number.
//!
//! Computed values are always CODATA arithmetic. Literature order-of-
//! magnitude figures ride along as metadata with a log10 gap; they are
//! never oracles.

use crate::bound::{action_integrals, analytic_spectrum, CentralPotentialSpec};
use crate::constants::{ConstantsSet, UnitSystem};
use crate::error::{CoreError, Result};

/// One named estimate: formula, inputs, computed value, and (optionally)
/// the order-of-magnitude figure quoted in the literature with its log10
/// distance from the computation.
#[derive(Debug, Clone, PartialEq)]
pub struct EstimateReport {
    pub name: &'static str,
    pub formula: &'static str,
    /// Human-readable rendering of the constants that entered.
    pub inputs: String,
    pub value: f64,
    pub unit: String,
    pub quoted: Option<f64>,
    /// `|log10(value) - log10(quoted)|` when `quoted` is present.
    pub log10_gap: Option<f64>,
}

impl EstimateReport {
    fn new(
        name: &'static str,
        formula: &'static str,
        inputs: String,
        value: f64,
        unit: String,
    ) -> Result<EstimateReport> {
        if value <= 0.0 || !value.is_finite() {
            return Err(CoreError::InvalidInput(format!(
                "estimate {name} must be positive and finite, got {value}"
            )));
        }
        Ok(EstimateReport { name, formula, inputs, value, unit, quoted: None, log10_gap: None })
    }

    fn with_quote(mut self, quoted: f64) -> EstimateReport {
        self.quoted = Some(quoted);
        self.log10_gap = Some((self.value.log10() - quoted.log10()).abs());
        self
    }
}

/// `sqrt(G hbar / c^3)` in the constants' unit system.
pub fn planck_length(constants: &ConstantsSet) -> f64 {
    (constants.g_newton * constants.hbar / constants.c.powi(3)).sqrt()
}

/// `G m^2 / hbar`: the speed scale below which a mass's gravitational
/// self-coupling cannot compete with quantum dispersion.
pub fn fundamental_speed_estimate(constants: &ConstantsSet, mass: f64) -> f64 {
    constants.g_newton * mass * mass / constants.hbar
}

/// `e^2 / (m_e c^2)` with the Gaussian-convention `e^2`.
pub fn classical_electron_radius(constants: &ConstantsSet) -> f64 {
    constants.e_sq / (constants.m_electron * constants.c * constants.c)
}

/// `h / (m c)`.
pub fn compton_wavelength(constants: &ConstantsSet, mass: f64) -> f64 {
    constants.h / (mass * constants.c)
}

/// `hbar / (m c)`, the variant the quoted "~10^-11 cm" figure actually
/// matches.
pub fn reduced_compton_wavelength(constants: &ConstantsSet, mass: f64) -> f64 {
    constants.hbar / (mass * constants.c)
}

/// Ground-state radius of a neutron bound gravitationally to a neutron,
/// `hbar^2 / (G m_n^3)`, through the closed-form spectrum machinery (one
/// neutron as the fixed source, the other orbiting). With `reduced_mass`
/// the problem is the proper two-body reduction — total mass `2 m_n` as
/// the source, `m_n / 2` orbiting, so the attraction stays `G m_n^2` while
/// the kinetic mass halves — which doubles the radius.
pub fn neutron_pair_bohr_radius(constants: &ConstantsSet, reduced_mass: bool) -> Result<f64> {
    let (source, orbiting) = if reduced_mass {
        (2.0 * constants.m_neutron, 0.5 * constants.m_neutron)
    } else {
        (constants.m_neutron, constants.m_neutron)
    };
    let spec = CentralPotentialSpec::gravitational(constants.g_newton, source, orbiting)?;
    let spectrum = analytic_spectrum(&spec, constants.hbar, 1)?;
    Ok(spectrum.level(1).expect("level 1 was computed").analytic_radius)
}

/// Invert the minimum-uncertainty product: a Gaussian packet with measured
/// spreads `delta_x` and `delta_v` can only belong to a particle of mass
/// `hbar / (2 delta_x delta_v)`.
pub fn mass_from_velocity_spread(delta_x: f64, delta_v: f64, hbar: f64) -> Result<f64> {
    for (name, v) in [("delta_x", delta_x), ("delta_v", delta_v), ("hbar", hbar)] {
        if v <= 0.0 || !v.is_finite() {
            return Err(CoreError::InvalidInput(format!(
                "{name} must be positive and finite, got {v}"
            )));
        }
    }
    Ok(hbar / (2.0 * delta_x * delta_v))
}

/// What-if calculator for the velocity-loop quantization hypothesis
/// `loop integral of v dr = n c lambda0`: returns the real number `n`
/// implied by a given loop value and length scale, without rounding.
pub fn alternative_quantization_number(v_action: f64, c: f64, lambda0: f64) -> Result<f64> {
    if lambda0 <= 0.0 || !lambda0.is_finite() {
        return Err(CoreError::InvalidInput(format!(
            "lambda0 must be positive and finite, got {lambda0}"
        )));
    }
    if c <= 0.0 || !c.is_finite() || !v_action.is_finite() {
        return Err(CoreError::InvalidInput(format!(
            "need finite positive c and finite v_action, got {c}, {v_action}"
        )));
    }
    Ok(v_action / (c * lambda0))
}

/// All standing estimates in one pass, with the quoted order-of-magnitude
/// figures attached. Works in SI or CGS; the quotes are published in CGS
/// and are converted to the requested system.
pub fn full_report(constants: &ConstantsSet) -> Result<Vec<EstimateReport>> {
    constants.validate()?;
    // Length and speed quotes below are CGS (cm, cm/s).
    let (len_scale, unit_len, unit_speed) = match constants.unit_system {
        UnitSystem::Cgs => (1.0, "cm", "cm/s"),
        UnitSystem::Si => (1e-2, "m", "m/s"),
        UnitSystem::Natural => {
            return Err(CoreError::InvalidInput(
                "order-of-magnitude reports need a dimensional unit system (SI or CGS)".into(),
            ))
        }
    };

    let mut rows = Vec::new();

    let lp = planck_length(constants);
    rows.push(
        EstimateReport::new(
            "planck_length",
            "sqrt(G hbar / c^3)",
            format!("G={:e}, hbar={:e}, c={:e}", constants.g_newton, constants.hbar, constants.c),
            lp,
            unit_len.into(),
        )?
        .with_quote(1e-34 * len_scale),
    );

    let c_star = fundamental_speed_estimate(constants, constants.m_neutron);
    rows.push(
        EstimateReport::new(
            "fundamental_speed_neutron",
            "G m_n^2 / hbar",
            format!(
                "G={:e}, m_n={:e}, hbar={:e}",
                constants.g_newton, constants.m_neutron, constants.hbar
            ),
            c_star,
            unit_speed.into(),
        )?
        .with_quote(1e-30 * len_scale),
    );

    rows.push(
        EstimateReport::new(
            "light_to_fundamental_speed_ratio",
            "c / (G m_n^2 / hbar)",
            format!("c={:e}, c*={c_star:e}", constants.c),
            constants.c / c_star,
            "dimensionless".into(),
        )?
        .with_quote(1e40),
    );

    rows.push(
        EstimateReport::new(
            "classical_electron_radius",
            "e^2 / (m_e c^2)",
            format!(
                "e^2={:e}, m_e={:e}, c={:e}",
                constants.e_sq, constants.m_electron, constants.c
            ),
            classical_electron_radius(constants),
            unit_len.into(),
        )?
        .with_quote(1e-13 * len_scale),
    );

    rows.push(
        EstimateReport::new(
            "compton_wavelength_electron",
            "h / (m_e c)",
            format!("h={:e}, m_e={:e}, c={:e}", constants.h, constants.m_electron, constants.c),
            compton_wavelength(constants, constants.m_electron),
            unit_len.into(),
        )?
        .with_quote(1e-11 * len_scale),
    );

    rows.push(
        EstimateReport::new(
            "reduced_compton_wavelength_electron",
            "hbar / (m_e c)",
            format!(
                "hbar={:e}, m_e={:e}, c={:e}",
                constants.hbar, constants.m_electron, constants.c
            ),
            reduced_compton_wavelength(constants, constants.m_electron),
            unit_len.into(),
        )?
        .with_quote(1e-11 * len_scale),
    );

    let pair = neutron_pair_bohr_radius(constants, false)?;
    rows.push(
        EstimateReport::new(
            "neutron_pair_radius",
            "hbar^2 / (G m_n^3)",
            format!(
                "hbar={:e}, G={:e}, m_n={:e}",
                constants.hbar, constants.g_newton, constants.m_neutron
            ),
            pair,
            unit_len.into(),
        )?
        .with_quote(1e27 * len_scale),
    );

    rows.push(
        EstimateReport::new(
            "neutron_pair_radius_reduced_mass",
            "2 hbar^2 / (G m_n^3)",
            "reduced-mass variant of neutron_pair_radius".into(),
            neutron_pair_bohr_radius(constants, true)?,
            unit_len.into(),
        )?
        .with_quote(1e27 * len_scale),
    );

    // Composition: the velocity loop of the pair's gravitational ground
    // state against the Planck length. n = (h/m_n) / (c l_P); reported
    // as a what-if, no quoted figure exists.
    let spec = CentralPotentialSpec::gravitational(
        constants.g_newton,
        constants.m_neutron,
        constants.m_neutron,
    )?;
    let ground = spec.analytic_energy(constants.hbar, 1);
    let actions = action_integrals(&spec, constants.hbar, ground)?;
    rows.push(EstimateReport::new(
        "velocity_loop_quantum_at_planck_length",
        "(loop v dr) / (c l_P)",
        format!("v_action={:e}, c={:e}, l_P={lp:e}", actions.v_action, constants.c),
        alternative_quantization_number(actions.v_action, constants.c, lp)?,
        "dimensionless".into(),
    )?);

    Ok(rows)
}
