//! Wavefunctions on a periodic grid and the measurements taken on them.

use num_complex::Complex64;

use crate::error::{CoreError, Result};
use crate::grid::SpatialGrid;
use crate::potential::Potential;
use crate::spectral::fft_forward;
use crate::HBAR;

/// Relative amplitude at the box edge above which a state is considered to
/// have escaped its grid.
pub const EDGE_TAIL_LIMIT: f64 = 1e-12;

/// Complex amplitudes sampled on a [`SpatialGrid`], together with the
/// particle mass and the time the snapshot refers to. States are kept
/// normalized: `sum |psi_j|^2 dx = 1`.
#[derive(Debug, Clone)]
pub struct Wavefunction {
    grid: SpatialGrid,
    amplitudes: Vec<Complex64>,
    mass: f64,
    time: f64,
}

impl Wavefunction {
    /// Wrap raw amplitudes, normalizing them. Rejects zero vectors, a
    /// length mismatch, and non-positive masses.
    pub fn from_amplitudes(
        grid: SpatialGrid,
        mut amplitudes: Vec<Complex64>,
        mass: f64,
        time: f64,
    ) -> Result<Self> {
        if amplitudes.len() != grid.n_points() {
            return Err(CoreError::State(format!(
                "amplitude count {} does not match grid size {}",
                amplitudes.len(),
                grid.n_points()
            )));
        }
        if mass <= 0.0 || !mass.is_finite() {
            return Err(CoreError::State(format!("mass must be positive, got {mass}")));
        }
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>() * grid.dx();
        if norm_sq <= 0.0 || !norm_sq.is_finite() {
            return Err(CoreError::State(format!(
                "cannot normalize state with |psi|^2 integral {norm_sq}"
            )));
        }
        let scale = 1.0 / norm_sq.sqrt();
        for a in &mut amplitudes {
            *a *= scale;
        }
        Ok(Wavefunction { grid, amplitudes, mass, time })
    }

    pub fn grid(&self) -> &SpatialGrid {
        self.grid_ref()
    }

    fn grid_ref(&self) -> &SpatialGrid {
        &self.grid
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub(crate) fn amplitudes_mut(&mut self) -> &mut Vec<Complex64> {
        &mut self.amplitudes
    }

    pub fn mass(&self) -> f64 {
        self.mass
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub(crate) fn set_time(&mut self, t: f64) {
        self.time = t;
    }

    /// `sum |psi_j|^2 dx`.
    pub fn norm(&self) -> f64 {
        (self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>() * self.grid.dx()).sqrt()
    }

    /// Largest edge amplitude relative to the peak amplitude. Used to decide
    /// whether a state still fits its box.
    pub fn edge_amplitude_ratio(&self) -> f64 {
        let peak = self.amplitudes.iter().map(|a| a.norm()).fold(0.0_f64, f64::max);
        if peak == 0.0 {
            return 0.0;
        }
        let n = self.amplitudes.len();
        let edge = self.amplitudes[0].norm().max(self.amplitudes[n - 1].norm());
        edge / peak
    }

    /// Error unless the edge tail is below `limit` (relative to the peak).
    pub fn check_contained(&self, limit: f64) -> Result<()> {
        let ratio = self.edge_amplitude_ratio();
        if ratio > limit {
            return Err(CoreError::Boundary(format!(
                "edge amplitude {ratio:.3e} of peak exceeds {limit:.1e}; \
                 the state no longer fits the box"
            )));
        }
        Ok(())
    }

    /// `<a|b> = sum conj(a_j) b_j dx`. Grids must match.
    pub fn inner_product(&self, other: &Wavefunction) -> Result<Complex64> {
        if !self.grid.same_as(&other.grid) {
            return Err(CoreError::Grid("inner product across different grids".into()));
        }
        Ok(self
            .amplitudes
            .iter()
            .zip(&other.amplitudes)
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            * self.grid.dx())
    }

    /// Position, momentum, and spread measurements. Momentum moments are
    /// taken from the discrete Fourier representation of the state.
    pub fn observables(&self) -> Observables {
        let dx = self.grid.dx();
        let mut norm_sq = 0.0;
        let mut mean_x = 0.0;
        let mut mean_xx = 0.0;
        for (x, a) in self.grid.points().zip(&self.amplitudes) {
            let w = a.norm_sqr() * dx;
            norm_sq += w;
            mean_x += w * x;
            mean_xx += w * x * x;
        }
        mean_x /= norm_sq;
        mean_xx /= norm_sq;

        let mut spec = self.amplitudes.clone();
        fft_forward(&mut spec);
        let mut pw = 0.0;
        let mut mean_p = 0.0;
        let mut mean_pp = 0.0;
        for (k, a) in self.grid.wavenumbers().into_iter().zip(&spec) {
            let p = HBAR * k;
            let w = a.norm_sqr();
            pw += w;
            mean_p += w * p;
            mean_pp += w * p * p;
        }
        mean_p /= pw;
        mean_pp /= pw;

        let spread_x = (mean_xx - mean_x * mean_x).max(0.0).sqrt();
        let spread_p = (mean_pp - mean_p * mean_p).max(0.0).sqrt();
        Observables {
            norm: norm_sq.sqrt(),
            mean_x,
            mean_p,
            spread_x,
            spread_p,
            spread_v: spread_p / self.mass,
        }
    }

    /// `<T> + <V>` with the kinetic part from the Fourier representation and
    /// the potential sampled at the state's own time.
    pub fn energy_expectation(&self, potential: &Potential) -> f64 {
        let dx = self.grid.dx();
        let mut spec = self.amplitudes.clone();
        fft_forward(&mut spec);
        let mut pw = 0.0;
        let mut kinetic = 0.0;
        for (k, a) in self.grid.wavenumbers().into_iter().zip(&spec) {
            let w = a.norm_sqr();
            pw += w;
            kinetic += w * HBAR * HBAR * k * k / (2.0 * self.mass);
        }
        kinetic /= pw;

        let mut potential_term = 0.0;
        for (x, a) in self.grid.points().zip(&self.amplitudes) {
            potential_term += a.norm_sqr() * dx * potential.value(x, self.time, self.mass);
        }
        kinetic + potential_term
    }
}

/// Snapshot of the standard measurements on a state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Observables {
    pub norm: f64,
    pub mean_x: f64,
    pub mean_p: f64,
    pub spread_x: f64,
    pub spread_p: f64,
    /// `spread_p / mass`.
    pub spread_v: f64,
}

/// Normalized Gaussian packet
/// `psi(x) = N exp(-(x - x0)^2 / (4 delta_x^2) + i p0 (x - x0))`
/// (hbar = 1). `delta_x` is the position spread, so the momentum spread is
/// `1 / (2 delta_x)` and the uncertainty product starts at the minimum.
///
/// The packet must be resolvable and containable: `delta_x >= 4 dx`,
/// `delta_x <= L / 8`, and the amplitude the formula assigns at the box
/// edges must be below [`EDGE_TAIL_LIMIT`] relative to the peak.
pub fn gaussian_packet(
    grid: &SpatialGrid,
    x0: f64,
    p0: f64,
    delta_x: f64,
    mass: f64,
) -> Result<Wavefunction> {
    if mass <= 0.0 || !mass.is_finite() {
        return Err(CoreError::State(format!("mass must be positive, got {mass}")));
    }
    if !delta_x.is_finite() || delta_x < 4.0 * grid.dx() {
        return Err(CoreError::State(format!(
            "delta_x = {delta_x} under-resolved: need at least 4 dx = {}",
            4.0 * grid.dx()
        )));
    }
    if delta_x > grid.length() / 8.0 {
        return Err(CoreError::State(format!(
            "delta_x = {delta_x} too wide for the box: limit is L/8 = {}",
            grid.length() / 8.0
        )));
    }
    let envelope = |x: f64| {
        let u = (x - x0) / (2.0 * delta_x);
        (-u * u).exp()
    };
    let edge = envelope(grid.x_min()).max(envelope(grid.point(grid.n_points() - 1)));
    if edge > EDGE_TAIL_LIMIT {
        return Err(CoreError::Boundary(format!(
            "packet tail at the box edge is {edge:.3e} of peak (limit {EDGE_TAIL_LIMIT:.0e}); \
             move x0 or shrink delta_x"
        )));
    }
    let amplitudes: Vec<Complex64> =
        grid.points().map(|x| Complex64::from_polar(envelope(x), p0 * (x - x0) / HBAR)).collect();
    Wavefunction::from_amplitudes(*grid, amplitudes, mass, 0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grid() -> SpatialGrid {
        SpatialGrid::new(-20.0, 20.0, 1024).unwrap()
    }

    #[test]
    fn packet_is_normalized() {
        let psi = gaussian_packet(&grid(), 0.0, 0.0, 1.0, 1.0).unwrap();
        assert!((psi.norm() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn packet_moments_match_parameters() {
        let psi = gaussian_packet(&grid(), 1.5, 2.0, 0.8, 1.0).unwrap();
        let obs = psi.observables();
        assert!((obs.mean_x - 1.5).abs() < 1e-9, "mean_x = {}", obs.mean_x);
        assert!((obs.mean_p - 2.0).abs() < 1e-9, "mean_p = {}", obs.mean_p);
        assert!((obs.spread_x - 0.8).abs() / 0.8 < 1e-9);
        assert!((obs.spread_p - 1.0 / 1.6).abs() * 1.6 < 1e-9);
    }

    #[test]
    fn uncertainty_product_at_minimum() {
        for (x0, p0, dxp, m) in [(0.0, 0.0, 1.0, 1.0), (2.0, -1.0, 0.5, 2.0), (-3.0, 3.5, 1.5, 0.7)]
        {
            let psi = gaussian_packet(&grid(), x0, p0, dxp, m).unwrap();
            let obs = psi.observables();
            let product = obs.spread_x * obs.spread_p;
            assert!((product - HBAR / 2.0).abs() / (HBAR / 2.0) < 1e-6, "product = {product}");
        }
    }

    #[test]
    fn kinetic_energy_of_resting_gaussian() {
        // <T> = hbar^2 / (8 m delta_x^2); cross-checked against a quadrature
        // of hbar^2/(2m) |dpsi/dx|^2 with the analytic derivative.
        let delta_x: f64 = 1.2;
        let mass = 1.7;
        let psi = gaussian_packet(&grid(), 0.0, 0.0, delta_x, mass).unwrap();
        let measured = psi.energy_expectation(&Potential::Free);
        let analytic = HBAR * HBAR / (8.0 * mass * delta_x * delta_x);

        // Independent oracle: Simpson quadrature on a fine mesh.
        let n = 20001;
        let (a, b) = (-15.0 * delta_x, 15.0 * delta_x);
        let h = (b - a) / (n - 1) as f64;
        let norm = 1.0 / ((std::f64::consts::TAU * delta_x * delta_x).sqrt()).sqrt();
        let dpsi = |x: f64| {
            let d2 = delta_x * delta_x;
            norm * (-x * x / (4.0 * d2)).exp() * (-x / (2.0 * d2))
        };
        let mut quad = 0.0;
        for j in 0..n {
            let w = if j == 0 || j == n - 1 {
                1.0
            } else if j % 2 == 1 {
                4.0
            } else {
                2.0
            };
            let x = a + j as f64 * h;
            quad += w * dpsi(x) * dpsi(x);
        }
        quad *= h / 3.0 * HBAR * HBAR / (2.0 * mass);

        assert!((analytic - quad).abs() / analytic < 1e-9, "oracle {quad} vs {analytic}");
        assert!((measured - analytic).abs() / analytic < 1e-8, "measured {measured}");
    }

    #[test]
    fn moving_packet_energy() {
        // <T> = p0^2/(2m) + hbar^2/(8 m delta_x^2)
        let psi = gaussian_packet(&grid(), 0.0, 1.5, 1.0, 1.0).unwrap();
        let e = psi.energy_expectation(&Potential::Free);
        let expect = 1.5f64.powi(2) / 2.0 + 1.0 / 8.0;
        assert!((e - expect).abs() / expect < 1e-8, "e = {e}");
    }

    #[test]
    fn packet_preconditions() {
        let g = grid();
        // under-resolved
        assert!(gaussian_packet(&g, 0.0, 0.0, 3.0 * g.dx(), 1.0).is_err());
        // too wide
        assert!(gaussian_packet(&g, 0.0, 0.0, 6.0, 1.0).is_err());
        // tail reaches the edge
        assert!(gaussian_packet(&g, -19.0, 0.0, 1.0, 1.0).is_err());
        // bad mass
        assert!(gaussian_packet(&g, 0.0, 0.0, 1.0, 0.0).is_err());
        assert!(gaussian_packet(&g, 0.0, 0.0, 1.0, -2.0).is_err());
    }

    #[test]
    fn spread_v_is_spread_p_over_mass() {
        let psi = gaussian_packet(&grid(), 0.0, 1.0, 1.0, 2.0).unwrap();
        let obs = psi.observables();
        // Dyadic mass, so the quotient is exact.
        assert_eq!(obs.spread_v * 2.0, obs.spread_p);
    }

    #[test]
    fn inner_product_requires_matching_grids() {
        let a = gaussian_packet(&grid(), 0.0, 0.0, 1.0, 1.0).unwrap();
        let other = SpatialGrid::new(-12.0, 12.0, 512).unwrap();
        let b = gaussian_packet(&other, 0.0, 0.0, 1.0, 1.0).unwrap();
        assert!(a.inner_product(&b).is_err());
        assert!((a.inner_product(&a).unwrap().re - 1.0).abs() < 1e-12);
    }
}
