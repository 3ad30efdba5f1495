//! Tabulated physical constants in SI, CGS, and scaled natural units.

use crate::error::{CoreError, Result};

/// Unit system a [`ConstantsSet`] is expressed in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSystem {
    Si,
    Cgs,
    /// hbar = c = 1, unit reference mass and coupling. Used by the
    /// propagation and bound-state modules.
    Natural,
}

impl UnitSystem {
    pub fn label(&self) -> &'static str {
        match self {
            UnitSystem::Si => "si",
            UnitSystem::Cgs => "cgs",
            UnitSystem::Natural => "natural",
        }
    }
}

/// A consistent set of physical constants.
///
/// `e_sq` is the Coulomb-law numerator e^2 in Gaussian form, i.e. the value
/// with V(r) = -e_sq / r; in SI units that is e^2/(4 pi eps0) in J m.
/// `hbar` is always derived as `h / 2 pi` so the two stay consistent to
/// round-off rather than to the precision of a published rounding.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantsSet {
    pub unit_system: UnitSystem,
    /// Newtonian gravitational constant.
    pub g_newton: f64,
    /// Planck constant.
    pub h: f64,
    /// Reduced Planck constant, h / 2 pi.
    pub hbar: f64,
    /// Speed of light.
    pub c: f64,
    /// Coulomb-law numerator e^2 (Gaussian convention).
    pub e_sq: f64,
    /// Electron mass.
    pub m_electron: f64,
    /// Neutron mass.
    pub m_neutron: f64,
}

impl ConstantsSet {
    /// CODATA 2018 values in SI units (m, kg, s, J).
    pub fn si() -> Self {
        let h = 6.626_070_15e-34; // J s, exact
        ConstantsSet {
            unit_system: UnitSystem::Si,
            g_newton: 6.674_30e-11, // m^3 kg^-1 s^-2
            h,
            hbar: h / std::f64::consts::TAU,   // 1.0545718176e-34 J s
            c: 2.997_924_58e8,                 // m/s, exact
            e_sq: 2.307_077_552_341_735_5e-28, // J m, e^2/(4 pi eps0)
            m_electron: 9.109_383_701_5e-31,   // kg
            m_neutron: 1.674_927_498_04e-27,   // kg
        }
    }

    /// The same CODATA values in CGS units (cm, g, s, erg).
    pub fn cgs() -> Self {
        let h = 6.626_070_15e-27; // erg s
        ConstantsSet {
            unit_system: UnitSystem::Cgs,
            g_newton: 6.674_30e-8, // cm^3 g^-1 s^-2
            h,
            hbar: h / std::f64::consts::TAU,
            c: 2.997_924_58e10,                // cm/s
            e_sq: 2.307_077_552_341_735_5e-19, // erg cm
            m_electron: 9.109_383_701_5e-28,   // g
            m_neutron: 1.674_927_498_04e-24,   // g
        }
    }

    /// Scaled units with hbar = c = 1 and unit masses and couplings.
    pub fn natural() -> Self {
        ConstantsSet {
            unit_system: UnitSystem::Natural,
            g_newton: 1.0,
            h: std::f64::consts::TAU,
            hbar: 1.0,
            c: 1.0,
            e_sq: 1.0,
            m_electron: 1.0,
            m_neutron: 1.0,
        }
    }

    /// Consistency check: every entry positive and finite, h = 2 pi hbar.
    pub fn validate(&self) -> Result<()> {
        let entries = [
            ("g_newton", self.g_newton),
            ("h", self.h),
            ("hbar", self.hbar),
            ("c", self.c),
            ("e_sq", self.e_sq),
            ("m_electron", self.m_electron),
            ("m_neutron", self.m_neutron),
        ];
        for (name, v) in entries {
            if !v.is_finite() || v <= 0.0 {
                return Err(CoreError::InvalidInput(format!(
                    "constant {name} must be positive and finite, got {v}"
                )));
            }
        }
        let rel = (self.h - std::f64::consts::TAU * self.hbar).abs() / self.h;
        if rel > 1e-12 {
            return Err(CoreError::InvalidInput(format!(
                "h and hbar disagree: |h - 2 pi hbar|/h = {rel:.3e}"
            )));
        }
        Ok(())
    }
}
