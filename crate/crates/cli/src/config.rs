//! Strict JSON configuration for the experiment runner. Every block is
//! optional and defaults to the full verification-scale parameters; unknown
//! keys anywhere are rejected so a typo cannot silently run the defaults.

use serde::{Deserialize, Serialize};
use std::path::Path;

#[derive(Debug)]
pub enum ConfigError {
    Io(std::io::Error),
    Schema(String),
    Invalid(String),
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConfigError::Io(e) => write!(f, "cannot read config: {e}"),
            ConfigError::Schema(e) => write!(f, "config does not match the schema: {e}"),
            ConfigError::Invalid(e) => write!(f, "config value out of range: {e}"),
        }
    }
}

impl std::error::Error for ConfigError {}

#[derive(Debug, Clone, Deserialize, Serialize, Default)]
#[serde(deny_unknown_fields, default)]
pub struct ExperimentConfig {
    pub unit_system: UnitSystemChoice,
    pub equivalence: EquivalenceConfig,
    pub bohr: BohrConfig,
    pub scaling: ScalingConfig,
    pub spacing: SpacingConfig,
    pub correspondence: CorrespondenceConfig,
    pub packet: PacketConfig,
    pub estimates: EstimatesConfig,
}

/// Unit system for the order-of-magnitude table. The dynamical experiments
/// all run in scaled units internally, so only the dimensional systems are
/// configurable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum UnitSystemChoice {
    #[default]
    Si,
    Cgs,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct EquivalenceConfig {
    pub grid_points: usize,
    pub x_half_width: f64,
    pub dt: f64,
    pub n_steps: usize,
    pub acceleration: f64,
    pub sin_amplitude: f64,
    pub sin_omega: f64,
    pub mass: f64,
    pub packet_spread: f64,
    /// Grid for the dt-halving convergence measurement (coarser, so the
    /// halving pair stays within the anti-aliasing contract).
    pub halving_grid_points: usize,
    pub halving_dt: f64,
    pub random_draws: usize,
    pub tolerances: EquivalenceTolerances,
}

impl Default for EquivalenceConfig {
    fn default() -> Self {
        EquivalenceConfig {
            grid_points: 4096,
            x_half_width: 40.0,
            dt: 2e-4,
            n_steps: 10_000,
            acceleration: 0.5,
            sin_amplitude: 0.4,
            sin_omega: 1.5,
            mass: 1.0,
            packet_spread: 1.0,
            halving_grid_points: 1024,
            halving_dt: 1e-3,
            random_draws: 1000,
            tolerances: EquivalenceTolerances::default(),
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct EquivalenceTolerances {
    pub fidelity_deficiency: f64,
    pub pointwise_over_peak: f64,
    pub halving_ratio_window: f64,
    pub sin_fidelity_deficiency: f64,
    pub phase_gradient: f64,
    pub kinetic_phase_rate: f64,
    pub free_phase: f64,
    pub delta_tau: f64,
}

impl Default for EquivalenceTolerances {
    fn default() -> Self {
        EquivalenceTolerances {
            fidelity_deficiency: 1e-6,
            pointwise_over_peak: 1e-4,
            halving_ratio_window: 0.5,
            sin_fidelity_deficiency: 1e-5,
            phase_gradient: 1e-8,
            kinetic_phase_rate: 1e-6,
            free_phase: 1e-10,
            delta_tau: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct BohrConfig {
    pub r_max: f64,
    pub n_grid: usize,
    pub n_levels: usize,
    pub tolerances: BohrTolerances,
}

impl Default for BohrConfig {
    fn default() -> Self {
        BohrConfig {
            r_max: 400.0,
            n_grid: 8000,
            n_levels: 5,
            tolerances: BohrTolerances::default(),
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct BohrTolerances {
    pub level_relative_error: f64,
    pub ratio_16_relative: f64,
    pub scaling_exactness: f64,
}

impl Default for BohrTolerances {
    fn default() -> Self {
        BohrTolerances {
            level_relative_error: 1e-3,
            ratio_16_relative: 5e-3,
            scaling_exactness: 1e-12,
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScalingConfig {
    pub quantum_numbers: Vec<usize>,
    pub k: usize,
    pub n_base: usize,
    pub numeric_r_max: f64,
    pub numeric_n_grid: usize,
    pub tolerances: ScalingTolerances,
}

impl Default for ScalingConfig {
    fn default() -> Self {
        ScalingConfig {
            quantum_numbers: vec![5, 8, 13, 21],
            k: 3,
            n_base: 5,
            numeric_r_max: 100.0,
            numeric_n_grid: 4000,
            tolerances: ScalingTolerances::default(),
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScalingTolerances {
    pub action_relative_gap: f64,
    pub v_action_analytic: f64,
    pub v_action_numeric: f64,
}

impl Default for ScalingTolerances {
    fn default() -> Self {
        ScalingTolerances {
            action_relative_gap: 5e-3,
            v_action_analytic: 1e-9,
            v_action_numeric: 1e-2,
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct SpacingConfig {
    pub n_low: usize,
    pub n_high: usize,
    pub ells: Vec<usize>,
    pub harmonic_n: usize,
    pub harmonic_ell: usize,
    pub tolerances: SpacingTolerances,
}

impl Default for SpacingConfig {
    fn default() -> Self {
        SpacingConfig {
            n_low: 10,
            n_high: 100,
            ells: vec![1, 2],
            harmonic_n: 10,
            harmonic_ell: 2,
            tolerances: SpacingTolerances::default(),
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct SpacingTolerances {
    pub gravitational_gap: f64,
    pub harmonic_gap: f64,
}

impl Default for SpacingTolerances {
    fn default() -> Self {
        SpacingTolerances { gravitational_gap: 2e-2, harmonic_gap: 1e-6 }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct CorrespondenceConfig {
    pub harmonic_n: usize,
    pub harmonic_half_width: f64,
    pub harmonic_grid_points: usize,
    /// Gravitational chain of base quantum numbers; the last entry is the
    /// headline comparison scale.
    pub chain: Vec<usize>,
    pub k: usize,
    pub ell_max: usize,
    pub grid_step: f64,
    pub box_factor: f64,
    pub orbit_samples: usize,
    pub tolerances: CorrespondenceTolerances,
}

impl Default for CorrespondenceConfig {
    fn default() -> Self {
        CorrespondenceConfig {
            harmonic_n: 20,
            harmonic_half_width: 14.0,
            harmonic_grid_points: 12288,
            chain: vec![10, 20, 40],
            k: 2,
            ell_max: 3,
            grid_step: 0.04,
            box_factor: 3.2,
            orbit_samples: 2048,
            tolerances: CorrespondenceTolerances::default(),
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct CorrespondenceTolerances {
    pub harmonic_first: f64,
    pub shared_coefficient: f64,
    pub cross_first: f64,
}

impl Default for CorrespondenceTolerances {
    fn default() -> Self {
        CorrespondenceTolerances {
            harmonic_first: 1e-2,
            shared_coefficient: 5e-2,
            cross_first: 2e-2,
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct PacketConfig {
    pub grid_points: usize,
    pub x_half_width: f64,
    pub dt: f64,
    pub n_steps: usize,
    pub g: f64,
    pub packet_spread: f64,
    pub masses: [f64; 2],
    pub trace_stride: usize,
    pub tolerances: PacketTolerances,
}

impl Default for PacketConfig {
    fn default() -> Self {
        PacketConfig {
            // 512 points on [-32, 32) resolves every traced moment to
            // ~1e-13 while keeping the split-step round-off norm bias
            // (which grows with the FFT size) well under the 1e-12 gate.
            grid_points: 512,
            x_half_width: 32.0,
            dt: 2e-4,
            n_steps: 10_000,
            g: 0.4,
            packet_spread: 1.0,
            masses: [1.0, 2.0],
            trace_stride: 250,
            tolerances: PacketTolerances::default(),
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct PacketTolerances {
    pub norm_drift: f64,
    pub spreading_law: f64,
    pub center_mass_blindness: f64,
    pub spread_contrast_min: f64,
}

impl Default for PacketTolerances {
    fn default() -> Self {
        PacketTolerances {
            norm_drift: 1e-12,
            spreading_law: 1e-6,
            center_mass_blindness: 1e-8,
            spread_contrast_min: 1e-2,
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct EstimatesConfig {
    pub tolerances: EstimatesTolerances,
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct EstimatesTolerances {
    pub fixture_relative: f64,
    pub quoted_log10_max: f64,
}

impl Default for EstimatesTolerances {
    fn default() -> Self {
        EstimatesTolerances { fixture_relative: 5e-4, quoted_log10_max: 3.0 }
    }
}

pub fn load(path: &Path) -> Result<ExperimentConfig, ConfigError> {
    let text = std::fs::read_to_string(path).map_err(ConfigError::Io)?;
    let config: ExperimentConfig =
        serde_json::from_str(&text).map_err(|e| ConfigError::Schema(e.to_string()))?;
    validate(&config)?;
    Ok(config)
}

fn positive(name: &str, v: f64) -> Result<(), ConfigError> {
    if v <= 0.0 || !v.is_finite() {
        return Err(ConfigError::Invalid(format!("{name} must be positive and finite, got {v}")));
    }
    Ok(())
}

fn at_least(name: &str, v: usize, min: usize) -> Result<(), ConfigError> {
    if v < min {
        return Err(ConfigError::Invalid(format!("{name} must be at least {min}, got {v}")));
    }
    Ok(())
}

fn validate(c: &ExperimentConfig) -> Result<(), ConfigError> {
    let eq = &c.equivalence;
    positive("equivalence.dt", eq.dt)?;
    positive("equivalence.x_half_width", eq.x_half_width)?;
    positive("equivalence.mass", eq.mass)?;
    positive("equivalence.packet_spread", eq.packet_spread)?;
    positive("equivalence.sin_amplitude", eq.sin_amplitude)?;
    positive("equivalence.sin_omega", eq.sin_omega)?;
    positive("equivalence.halving_dt", eq.halving_dt)?;
    if !eq.acceleration.is_finite() {
        return Err(ConfigError::Invalid("equivalence.acceleration must be finite".into()));
    }
    at_least("equivalence.grid_points", eq.grid_points, 16)?;
    at_least("equivalence.halving_grid_points", eq.halving_grid_points, 16)?;
    at_least("equivalence.n_steps", eq.n_steps, 1)?;
    at_least("equivalence.random_draws", eq.random_draws, 1)?;
    for (name, v) in [
        ("fidelity_deficiency", eq.tolerances.fidelity_deficiency),
        ("pointwise_over_peak", eq.tolerances.pointwise_over_peak),
        ("halving_ratio_window", eq.tolerances.halving_ratio_window),
        ("sin_fidelity_deficiency", eq.tolerances.sin_fidelity_deficiency),
        ("phase_gradient", eq.tolerances.phase_gradient),
        ("kinetic_phase_rate", eq.tolerances.kinetic_phase_rate),
        ("free_phase", eq.tolerances.free_phase),
        ("delta_tau", eq.tolerances.delta_tau),
    ] {
        positive(&format!("equivalence.tolerances.{name}"), v)?;
    }

    let b = &c.bohr;
    positive("bohr.r_max", b.r_max)?;
    at_least("bohr.n_grid", b.n_grid, 2000)?;
    at_least("bohr.n_levels", b.n_levels, 1)?;
    positive("bohr.tolerances.level_relative_error", b.tolerances.level_relative_error)?;
    positive("bohr.tolerances.ratio_16_relative", b.tolerances.ratio_16_relative)?;
    positive("bohr.tolerances.scaling_exactness", b.tolerances.scaling_exactness)?;
    if b.n_levels < 4 {
        return Err(ConfigError::Invalid(
            "bohr.n_levels must reach at least level 4 for the E1/E4 ratio".into(),
        ));
    }

    let s = &c.scaling;
    if s.quantum_numbers.is_empty() {
        return Err(ConfigError::Invalid("scaling.quantum_numbers must be non-empty".into()));
    }
    for &n in &s.quantum_numbers {
        at_least("scaling.quantum_numbers entries", n, 1)?;
    }
    at_least("scaling.k", s.k, 2)?;
    at_least("scaling.n_base", s.n_base, 1)?;
    positive("scaling.numeric_r_max", s.numeric_r_max)?;
    at_least("scaling.numeric_n_grid", s.numeric_n_grid, 2000)?;
    positive("scaling.tolerances.action_relative_gap", s.tolerances.action_relative_gap)?;
    positive("scaling.tolerances.v_action_analytic", s.tolerances.v_action_analytic)?;
    positive("scaling.tolerances.v_action_numeric", s.tolerances.v_action_numeric)?;

    let sp = &c.spacing;
    at_least("spacing.n_low", sp.n_low, 2)?;
    at_least("spacing.n_high", sp.n_high, sp.n_low + 1)?;
    if sp.ells.is_empty() {
        return Err(ConfigError::Invalid("spacing.ells must be non-empty".into()));
    }
    for &ell in &sp.ells {
        at_least("spacing.ells entries", ell, 1)?;
    }
    at_least("spacing.harmonic_n", sp.harmonic_n, 1)?;
    at_least("spacing.harmonic_ell", sp.harmonic_ell, 1)?;
    positive("spacing.tolerances.gravitational_gap", sp.tolerances.gravitational_gap)?;
    positive("spacing.tolerances.harmonic_gap", sp.tolerances.harmonic_gap)?;

    let co = &c.correspondence;
    at_least("correspondence.harmonic_n", co.harmonic_n, 1)?;
    positive("correspondence.harmonic_half_width", co.harmonic_half_width)?;
    at_least("correspondence.harmonic_grid_points", co.harmonic_grid_points, 1000)?;
    if co.chain.is_empty() {
        return Err(ConfigError::Invalid("correspondence.chain must be non-empty".into()));
    }
    for window in co.chain.windows(2) {
        if window[1] <= window[0] {
            return Err(ConfigError::Invalid(
                "correspondence.chain must be strictly increasing".into(),
            ));
        }
    }
    at_least("correspondence.chain entries", co.chain[0], 2)?;
    at_least("correspondence.k", co.k, 2)?;
    at_least("correspondence.ell_max", co.ell_max, 1)?;
    positive("correspondence.grid_step", co.grid_step)?;
    if co.box_factor < 3.0 {
        return Err(ConfigError::Invalid(format!(
            "correspondence.box_factor must be at least 3 (solver containment), got {}",
            co.box_factor
        )));
    }
    at_least("correspondence.orbit_samples", co.orbit_samples, 32 * co.ell_max.max(1))?;
    positive("correspondence.tolerances.harmonic_first", co.tolerances.harmonic_first)?;
    positive("correspondence.tolerances.shared_coefficient", co.tolerances.shared_coefficient)?;
    positive("correspondence.tolerances.cross_first", co.tolerances.cross_first)?;

    let p = &c.packet;
    at_least("packet.grid_points", p.grid_points, 16)?;
    positive("packet.x_half_width", p.x_half_width)?;
    positive("packet.dt", p.dt)?;
    at_least("packet.n_steps", p.n_steps, 1)?;
    if !p.g.is_finite() {
        return Err(ConfigError::Invalid("packet.g must be finite".into()));
    }
    positive("packet.packet_spread", p.packet_spread)?;
    positive("packet.masses[0]", p.masses[0])?;
    positive("packet.masses[1]", p.masses[1])?;
    if p.masses[0] == p.masses[1] {
        return Err(ConfigError::Invalid("packet.masses must differ".into()));
    }
    at_least("packet.trace_stride", p.trace_stride, 1)?;
    positive("packet.tolerances.norm_drift", p.tolerances.norm_drift)?;
    positive("packet.tolerances.spreading_law", p.tolerances.spreading_law)?;
    positive("packet.tolerances.center_mass_blindness", p.tolerances.center_mass_blindness)?;
    positive("packet.tolerances.spread_contrast_min", p.tolerances.spread_contrast_min)?;

    positive("estimates.tolerances.fixture_relative", c.estimates.tolerances.fixture_relative)?;
    positive("estimates.tolerances.quoted_log10_max", c.estimates.tolerances.quoted_log10_max)?;

    Ok(())
}
