//! Bound states of attractive 1/r potentials: closed-form spectra, an
//! independent finite-difference radial eigensolver, and the loop action
//! integrals of old quantum theory.

use crate::error::{CoreError, Result};
use crate::quadrature::GaussLegendre;
use crate::tridiag::SymTridiag;

/// An attractive `V(r) = -A/r` problem together with the orbiting mass.
/// The coupling `A` is `e^2` for the electrostatic case and `G M m` for the
/// gravitational one — note the latter drags the orbiting mass into the
/// potential itself, which is where all the scaling interest comes from.
#[derive(Debug, Clone, Copy)]
pub struct CentralPotentialSpec {
    coupling: Coupling,
    mass: f64,
}

#[derive(Debug, Clone, Copy)]
enum Coupling {
    Coulomb { e_sq: f64 },
    Gravitational { g_newton: f64, m_central: f64 },
}

impl CentralPotentialSpec {
    pub fn coulomb(e_sq: f64, mass: f64) -> Result<Self> {
        if e_sq <= 0.0 || !e_sq.is_finite() {
            return Err(CoreError::InvalidInput(format!("e_sq must be positive, got {e_sq}")));
        }
        check_mass(mass)?;
        Ok(CentralPotentialSpec { coupling: Coupling::Coulomb { e_sq }, mass })
    }

    pub fn gravitational(g_newton: f64, m_central: f64, mass: f64) -> Result<Self> {
        if g_newton <= 0.0 || !g_newton.is_finite() || m_central <= 0.0 || !m_central.is_finite() {
            return Err(CoreError::InvalidInput(format!(
                "need positive G and central mass, got G = {g_newton}, M = {m_central}"
            )));
        }
        check_mass(mass)?;
        Ok(CentralPotentialSpec { coupling: Coupling::Gravitational { g_newton, m_central }, mass })
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    /// Same field sources, different orbiting mass. For the gravitational
    /// coupling this rescales the potential too.
    pub fn with_mass(&self, mass: f64) -> Result<Self> {
        check_mass(mass)?;
        Ok(CentralPotentialSpec { coupling: self.coupling, mass })
    }

    /// The attraction strength `A` in `V(r) = -A/r`.
    pub fn attraction(&self) -> f64 {
        match self.coupling {
            Coupling::Coulomb { e_sq } => e_sq,
            Coupling::Gravitational { g_newton, m_central } => g_newton * m_central * self.mass,
        }
    }

    /// `V(r) = -A/r`; negative for every `r > 0`.
    pub fn potential(&self, r: f64) -> f64 {
        -self.attraction() / r
    }

    pub fn kind_label(&self) -> &'static str {
        match self.coupling {
            Coupling::Coulomb { .. } => "coulomb",
            Coupling::Gravitational { .. } => "gravitational",
        }
    }

    /// Bohr-like radius of level n: `hbar^2 n^2 / (m A)`.
    pub fn analytic_radius(&self, hbar: f64, n: usize) -> f64 {
        let n = n as f64;
        hbar * hbar * n * n / (self.mass * self.attraction())
    }

    /// Level energy: `-m A^2 / (2 hbar^2 n^2)`, negative for every n.
    pub fn analytic_energy(&self, hbar: f64, n: usize) -> f64 {
        let n = n as f64;
        let a = self.attraction();
        -self.mass * a * a / (2.0 * hbar * hbar * n * n)
    }
}

fn check_mass(mass: f64) -> Result<()> {
    if mass <= 0.0 || !mass.is_finite() {
        return Err(CoreError::InvalidInput(format!("orbiting mass must be positive, got {mass}")));
    }
    Ok(())
}

fn check_hbar(hbar: f64) -> Result<()> {
    if hbar <= 0.0 || !hbar.is_finite() {
        return Err(CoreError::InvalidInput(format!("hbar must be positive, got {hbar}")));
    }
    Ok(())
}

/// One row of a spectrum: the closed-form values and, when an eigensolver
/// produced one, the numeric energy with its relative error.
#[derive(Debug, Clone, Copy)]
pub struct SpectrumLevel {
    /// Principal quantum number, counting the ground state as 1.
    pub n: usize,
    pub analytic_radius: f64,
    pub analytic_energy: f64,
    pub numeric_energy: Option<f64>,
    pub relative_error: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct SpectrumResult {
    levels: Vec<SpectrumLevel>,
}

impl SpectrumResult {
    pub fn levels(&self) -> &[SpectrumLevel] {
        &self.levels
    }

    /// Level by quantum number (ground state n = 1).
    pub fn level(&self, n: usize) -> Option<&SpectrumLevel> {
        self.levels.get(n.checked_sub(1)?)
    }

    pub fn max_relative_error(&self) -> Option<f64> {
        self.levels
            .iter()
            .filter_map(|l| l.relative_error)
            .fold(None, |acc, e| Some(acc.map_or(e, |a: f64| a.max(e))))
    }
}

/// Closed-form spectrum for levels 1..=n_max.
pub fn analytic_spectrum(
    spec: &CentralPotentialSpec,
    hbar: f64,
    n_max: usize,
) -> Result<SpectrumResult> {
    check_hbar(hbar)?;
    if n_max < 1 {
        return Err(CoreError::InvalidInput("n_max must be at least 1".into()));
    }
    let levels = (1..=n_max)
        .map(|n| SpectrumLevel {
            n,
            analytic_radius: spec.analytic_radius(hbar, n),
            analytic_energy: spec.analytic_energy(hbar, n),
            numeric_energy: None,
            relative_error: None,
        })
        .collect();
    Ok(SpectrumResult { levels })
}

/// Discretized radial Hamiltonian for `u(r)` on the uniform interior grid
/// `r_i = i h`, `i = 1..n_grid-1`, `h = r_max / n_grid`, with
/// `u(0) = u(r_max) = 0`:
/// diagonal `hbar^2/(m h^2) + V(r_i)`, off-diagonal `-hbar^2/(2 m h^2)`.
pub fn radial_hamiltonian(
    spec: &CentralPotentialSpec,
    hbar: f64,
    r_max: f64,
    n_grid: usize,
) -> Result<(SymTridiag, f64)> {
    check_hbar(hbar)?;
    if r_max <= 0.0 || !r_max.is_finite() {
        return Err(CoreError::InvalidInput(format!("r_max must be positive, got {r_max}")));
    }
    if n_grid < 16 {
        return Err(CoreError::InvalidInput(format!("n_grid = {n_grid} is too coarse")));
    }
    let h = r_max / n_grid as f64;
    let kinetic = hbar * hbar / (spec.mass * h * h);
    let diag: Vec<f64> = (1..n_grid).map(|i| kinetic + spec.potential(i as f64 * h)).collect();
    let off = vec![-0.5 * kinetic; n_grid - 2];
    Ok((SymTridiag::new(diag, off)?, h))
}

/// Lowest `n_levels` s-wave eigenvalues of the radial problem, by symmetric
/// tridiagonal finite differences, paired with the closed-form values.
///
/// The box must satisfy `r_max >= 3 r_{n_levels}`, and the result is
/// cross-checked by re-solving in a box 1.5x larger: if the top requested
/// level moves by more than 1e-4 relative, the box was too small and the
/// call errors rather than returning truncation-polluted energies.
pub fn radial_eigensolver(
    spec: &CentralPotentialSpec,
    hbar: f64,
    r_max: f64,
    n_grid: usize,
    n_levels: usize,
) -> Result<SpectrumResult> {
    check_hbar(hbar)?;
    if n_levels < 1 {
        return Err(CoreError::InvalidInput("n_levels must be at least 1".into()));
    }
    if n_grid < 2000 {
        return Err(CoreError::InvalidInput(format!(
            "n_grid = {n_grid} below the supported minimum of 2000"
        )));
    }
    let needed = 3.0 * spec.analytic_radius(hbar, n_levels);
    if r_max < needed {
        return Err(CoreError::BoxTooSmall(format!(
            "r_max = {r_max} but level {n_levels} needs at least {needed}"
        )));
    }

    let (hamiltonian, _) = radial_hamiltonian(spec, hbar, r_max, n_grid)?;
    let numeric = hamiltonian.lowest_eigenvalues(n_levels)?;

    // Same spacing, box enlarged 1.5x: any visible shift means the walls
    // were still doing physics.
    let bigger_grid = (n_grid as f64 * 1.5).ceil() as usize;
    let (bigger, _) = radial_hamiltonian(spec, hbar, 1.5 * r_max, bigger_grid)?;
    let reference = bigger.lowest_eigenvalues(n_levels)?;
    let top = n_levels - 1;
    let shift = (numeric[top] - reference[top]).abs() / numeric[top].abs();
    if shift > 1e-4 {
        return Err(CoreError::BoxTooSmall(format!(
            "level {n_levels} moved by {shift:.2e} relative when the box grew 1.5x; \
             increase r_max"
        )));
    }

    let levels = (1..=n_levels)
        .map(|n| {
            let analytic = spec.analytic_energy(hbar, n);
            let found = numeric[n - 1];
            SpectrumLevel {
                n,
                analytic_radius: spec.analytic_radius(hbar, n),
                analytic_energy: analytic,
                numeric_energy: Some(found),
                relative_error: Some((found - analytic).abs() / analytic.abs()),
            }
        })
        .collect();
    Ok(SpectrumResult { levels })
}

/// Loop integrals over one radial period at energy `E`:
/// `p_action = 2 int_{0}^{r_+} sqrt(2m(E - V)) dr` and `v_action = p_action / m`.
#[derive(Debug, Clone, Copy)]
pub struct ActionIntegrals {
    pub p_action: f64,
    pub v_action: f64,
    /// Outer turning radius `r_+ = A / |E|`.
    pub turning_radius: f64,
}

/// Compute the actions by quadrature. The substitution `r = r_+ sin^2(th)`
/// absorbs both the square-root turning-point singularity at `r_+` and the
/// `1/sqrt(r)` momentum blow-up at the origin, leaving a smooth integrand
/// that Gauss-Legendre resolves to near machine precision.
pub fn action_integrals(
    spec: &CentralPotentialSpec,
    hbar: f64,
    energy: f64,
) -> Result<ActionIntegrals> {
    check_hbar(hbar)?;
    if energy >= 0.0 || !energy.is_finite() {
        return Err(CoreError::Domain(format!(
            "need a bound (negative) energy for a turning point, got {energy}"
        )));
    }
    let a = spec.attraction();
    let m = spec.mass;
    let r_plus = a / (-energy);
    let rule = GaussLegendre::new(96);
    let integral = rule.integrate(0.0, std::f64::consts::FRAC_PI_2, |theta| {
        let s = theta.sin();
        let c = theta.cos();
        let r = r_plus * s * s;
        let dr_dtheta = 2.0 * r_plus * s * c;
        (2.0 * m * (energy - spec.potential(r))).max(0.0).sqrt() * dr_dtheta
    });
    let p_action = 2.0 * integral;
    Ok(ActionIntegrals { p_action, v_action: p_action / m, turning_radius: r_plus })
}

/// Closed form of the same loop integral: `2 pi A sqrt(m / (2|E|))`.
/// At `E = E_n` this is exactly `n h`.
pub fn action_closed_form(spec: &CentralPotentialSpec, energy: f64) -> f64 {
    let a = spec.attraction();
    std::f64::consts::TAU * a * (spec.mass / (2.0 * (-energy))).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn natural() -> CentralPotentialSpec {
        // G M = 1, m = 1: r_n = n^2, E_n = -1/(2 n^2).
        CentralPotentialSpec::gravitational(1.0, 1.0, 1.0).unwrap()
    }

    #[test]
    fn natural_unit_spectrum() {
        let spec = analytic_spectrum(&natural(), 1.0, 5).unwrap();
        let l1 = spec.level(1).unwrap();
        assert_eq!(l1.analytic_radius, 1.0);
        assert_eq!(l1.analytic_energy, -0.5);
        let l3 = spec.level(3).unwrap();
        assert_eq!(l3.analytic_radius, 9.0);
        assert!((l3.analytic_energy + 1.0 / 18.0).abs() < 1e-15);
        // Ordering invariants.
        for pair in spec.levels().windows(2) {
            assert!(pair[0].analytic_energy < pair[1].analytic_energy);
            assert!(pair[1].analytic_energy < 0.0);
            assert!(pair[0].analytic_radius < pair[1].analytic_radius);
        }
    }

    #[test]
    fn gravitational_mass_scaling_is_exact() {
        // E ~ m^3 and r ~ 1/m^2 at fixed G M; dyadic masses make this exact.
        let base = natural();
        let doubled = base.with_mass(2.0).unwrap();
        assert_eq!(doubled.analytic_energy(1.0, 1), 8.0 * base.analytic_energy(1.0, 1));
        assert_eq!(doubled.analytic_radius(1.0, 1), base.analytic_radius(1.0, 1) / 4.0);
        // Mass-independent combinations.
        for n in 1..=4 {
            let m1 = base.analytic_radius(1.0, n) * base.mass().powi(2);
            let m2 = doubled.analytic_radius(1.0, n) * doubled.mass().powi(2);
            assert_eq!(m1, m2);
            let e1 = base.analytic_energy(1.0, n) / base.mass().powi(3);
            let e2 = doubled.analytic_energy(1.0, n) / doubled.mass().powi(3);
            assert_eq!(e1, e2);
        }
    }

    #[test]
    fn coulomb_equals_gravity_at_equal_coupling() {
        let coulomb = CentralPotentialSpec::coulomb(1.0, 1.0).unwrap();
        let grav = natural();
        for n in 1..=6 {
            assert_eq!(coulomb.analytic_energy(1.0, n), grav.analytic_energy(1.0, n));
            assert_eq!(coulomb.analytic_radius(1.0, n), grav.analytic_radius(1.0, n));
        }
    }

    #[test]
    fn constructors_reject_bad_couplings() {
        assert!(CentralPotentialSpec::coulomb(0.0, 1.0).is_err());
        assert!(CentralPotentialSpec::coulomb(-1.0, 1.0).is_err());
        assert!(CentralPotentialSpec::coulomb(1.0, 0.0).is_err());
        assert!(CentralPotentialSpec::gravitational(-1.0, 1.0, 1.0).is_err());
        assert!(CentralPotentialSpec::gravitational(1.0, 0.0, 1.0).is_err());
        assert!(natural().with_mass(f64::NAN).is_err());
        assert!(analytic_spectrum(&natural(), 0.0, 3).is_err());
        assert!(analytic_spectrum(&natural(), 1.0, 0).is_err());
    }

    #[test]
    fn action_quadrature_matches_closed_form() {
        let spec = natural();
        for n in [1usize, 3, 5, 8] {
            let e = spec.analytic_energy(1.0, n);
            let act = action_integrals(&spec, 1.0, e).unwrap();
            let exact = action_closed_form(&spec, e);
            assert!(
                (act.p_action - exact).abs() / exact < 1e-12,
                "n = {n}: {} vs {exact}",
                act.p_action
            );
            // At E_n the closed form is exactly n h = 2 pi n hbar.
            let nh = std::f64::consts::TAU * n as f64;
            assert!((act.p_action - nh).abs() / nh < 1e-12);
            // Definitional identity.
            assert_eq!(act.v_action, act.p_action / spec.mass());
            let r_plus = 2.0 * (n * n) as f64;
            assert!((act.turning_radius - r_plus).abs() / r_plus < 1e-14);
        }
    }

    #[test]
    fn action_rejects_unbound_energy() {
        assert!(matches!(action_integrals(&natural(), 1.0, 0.0), Err(CoreError::Domain(_))));
        assert!(action_integrals(&natural(), 1.0, 0.3).is_err());
    }

    #[test]
    fn small_eigensolver_run() {
        // Cheap smoke test; the full acceptance-scale run lives in the
        // integration suite.
        let spec = natural();
        let result = radial_eigensolver(&spec, 1.0, 60.0, 2000, 2).unwrap();
        for level in result.levels() {
            let err = level.relative_error.unwrap();
            assert!(err < 2e-3, "n = {}: err = {err}", level.n);
            assert!(level.numeric_energy.unwrap() < 0.0);
        }
    }

    #[test]
    fn eigensolver_contract_violations() {
        let spec = natural();
        // Box below 3 r_n.
        assert!(matches!(
            radial_eigensolver(&spec, 1.0, 20.0, 2000, 3),
            Err(CoreError::BoxTooSmall(_))
        ));
        // Grid too coarse.
        assert!(radial_eigensolver(&spec, 1.0, 60.0, 1000, 2).is_err());
        assert!(radial_eigensolver(&spec, 1.0, 60.0, 2000, 0).is_err());
    }
}
