//! Classical-limit machinery: classical orbits and their Fourier
//! coefficients, discretized bound-state bases, quantum-classical matrix
//! element comparisons, level spacings, and the mass/quantum-number scaling
//! checks that make the gravitational spectrum special.

use num_complex::Complex64;

use crate::bound::{action_integrals, radial_eigensolver, CentralPotentialSpec};
use crate::error::{CoreError, Result};
use crate::quadrature::{cumulative_integral, GaussLegendre};
use crate::tridiag::SymTridiag;

/// The two well families the correspondence experiments run on.
///
/// Quantum labels follow the usual conventions per family: the harmonic
/// ladder starts at n = 0, the radial Coulomb-like ladder at n = 1. Every
/// function here speaks in these labels, never in raw array indices.
#[derive(Debug, Clone, Copy)]
pub enum WellSpec {
    /// 1D well `V = 1/2 m omega0^2 x^2`.
    Harmonic { omega0: f64, mass: f64 },
    /// s-wave radial problem `V = -A/r` on `r > 0`.
    Radial(CentralPotentialSpec),
}

impl WellSpec {
    pub fn harmonic(omega0: f64, mass: f64) -> Result<WellSpec> {
        if omega0 <= 0.0 || !omega0.is_finite() || mass <= 0.0 || !mass.is_finite() {
            return Err(CoreError::InvalidInput(format!(
                "harmonic well needs positive omega0 and mass, got {omega0}, {mass}"
            )));
        }
        Ok(WellSpec::Harmonic { omega0, mass })
    }

    pub fn radial(spec: CentralPotentialSpec) -> WellSpec {
        WellSpec::Radial(spec)
    }

    pub fn mass(&self) -> f64 {
        match self {
            WellSpec::Harmonic { mass, .. } => *mass,
            WellSpec::Radial(spec) => spec.mass(),
        }
    }

    pub fn potential(&self, x: f64) -> f64 {
        match self {
            WellSpec::Harmonic { omega0, mass } => 0.5 * mass * omega0 * omega0 * x * x,
            WellSpec::Radial(spec) => spec.potential(x),
        }
    }

    /// Label of the ground state: 0 for the harmonic ladder, 1 for radial.
    pub fn ground_label(&self) -> usize {
        match self {
            WellSpec::Harmonic { .. } => 0,
            WellSpec::Radial(_) => 1,
        }
    }

    /// Closed-form level energy at label `n`.
    pub fn analytic_energy(&self, hbar: f64, n: usize) -> f64 {
        match self {
            WellSpec::Harmonic { omega0, .. } => (n as f64 + 0.5) * hbar * omega0,
            WellSpec::Radial(spec) => spec.analytic_energy(hbar, n),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            WellSpec::Harmonic { .. } => "harmonic",
            WellSpec::Radial(_) => "radial",
        }
    }

    /// Inner and outer turning radii of the classical motion at `energy`.
    fn turning_points(&self, energy: f64) -> Result<(f64, f64)> {
        match self {
            WellSpec::Harmonic { omega0, mass } => {
                if energy <= 0.0 || !energy.is_finite() {
                    return Err(CoreError::Domain(format!(
                        "harmonic orbit needs E > 0, got {energy}"
                    )));
                }
                let x_t = (2.0 * energy / (mass * omega0 * omega0)).sqrt();
                Ok((-x_t, x_t))
            }
            WellSpec::Radial(spec) => {
                if energy >= 0.0 || !energy.is_finite() {
                    return Err(CoreError::Domain(format!(
                        "radial orbit needs a bound E < 0, got {energy}"
                    )));
                }
                Ok((0.0, spec.attraction() / (-energy)))
            }
        }
    }

    /// `|v|(r) = sqrt(2 (E - V(r)) / m)`, clamped at turning points.
    fn speed(&self, energy: f64, r: f64) -> f64 {
        (2.0 * (energy - self.potential(r)) / self.mass()).max(0.0).sqrt()
    }
}

/// One full classical period, sampled at uniform times.
///
/// The orbit starts at the outer turning point (`r(0) = r_plus`), which
/// makes `r(t)` even in `t` and every Fourier coefficient real and positive
/// for these monotone-potential wells.
#[derive(Debug, Clone)]
pub struct ClassicalOrbit {
    energy: f64,
    well: WellSpec,
    period: f64,
    omega: f64,
    r_minus: f64,
    r_plus: f64,
    times: Vec<f64>,
    radii: Vec<f64>,
    speeds: Vec<f64>,
}

impl ClassicalOrbit {
    pub fn energy(&self) -> f64 {
        self.energy
    }

    pub fn period(&self) -> f64 {
        self.period
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn turning_points(&self) -> (f64, f64) {
        (self.r_minus, self.r_plus)
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn speeds(&self) -> &[f64] {
        &self.speeds
    }

    pub fn n_samples(&self) -> usize {
        self.radii.len()
    }

    /// Largest violation of `|1/2 m v^2 + V(r) - E| / |E|` over the samples.
    pub fn max_energy_violation(&self) -> f64 {
        let m = self.well.mass();
        self.radii
            .iter()
            .zip(&self.speeds)
            .map(|(&r, &v)| (0.5 * m * v * v + self.well.potential(r) - self.energy).abs())
            .fold(0.0_f64, f64::max)
            / self.energy.abs()
    }
}

/// Build the classical orbit at `energy` with `n_samples` uniform time
/// samples over one period.
///
/// The radial coordinate is parametrized as
/// `r(theta) = r_- + (r_+ - r_-) cos^2(theta)`, `theta in [0, pi/2]` for the
/// closing half period; the substitution absorbs the square-root
/// turning-point singularities (and the 1/sqrt(r) collision at the origin
/// of the s-wave Kepler orbit), so `dt/dtheta` is smooth and the time map
/// can be tabulated by panel quadrature and inverted by bracketed Newton.
pub fn classical_orbit(well: &WellSpec, energy: f64, n_samples: usize) -> Result<ClassicalOrbit> {
    if n_samples < 64 || !n_samples.is_multiple_of(2) {
        return Err(CoreError::InvalidInput(format!(
            "n_samples must be even and at least 64, got {n_samples}"
        )));
    }
    let (r_minus, r_plus) = well.turning_points(energy)?;
    let width = r_plus - r_minus;
    let radius_at = |theta: f64| {
        let c = theta.cos();
        r_minus + width * c * c
    };
    // dt/dtheta = |dr/dtheta| / v
    let g = |theta: f64| {
        let r = radius_at(theta);
        let v = well.speed(energy, r);
        width * (2.0 * theta).sin() / v
    };

    let rule = GaussLegendre::new(8);
    let n_panels = 1024;
    let half = std::f64::consts::FRAC_PI_2;
    let knots = cumulative_integral(&rule, 0.0, half, n_panels, g);
    let half_period = *knots.last().unwrap();
    if !half_period.is_finite() || half_period <= 0.0 {
        return Err(CoreError::Convergence(format!(
            "orbit period integration failed (half period = {half_period})"
        )));
    }
    let period = 2.0 * half_period;
    let dtheta = half / n_panels as f64;

    // Invert t(theta) on the first half; mirror the second half.
    let mut radii = vec![0.0; n_samples];
    let mut speeds = vec![0.0; n_samples];
    let mut times = vec![0.0; n_samples];
    radii[0] = r_plus;
    for j in 1..=n_samples / 2 {
        let target = period * j as f64 / n_samples as f64;
        times[j] = target;
        if j == n_samples / 2 {
            radii[j] = r_minus;
            continue;
        }
        // Bracket from the knot table (knots are monotone in theta).
        let k = match knots.binary_search_by(|t| t.partial_cmp(&target).unwrap()) {
            Ok(exact) => exact,
            Err(insert) => insert - 1,
        };
        let theta_knot = k as f64 * dtheta;
        let t_knot = knots[k];
        let mut lo = theta_knot;
        let mut hi = theta_knot + dtheta;
        let mut theta = 0.5 * (lo + hi);
        for _ in 0..60 {
            let t_here = t_knot + rule.integrate(theta_knot, theta, &g);
            let err = t_here - target;
            if err.abs() <= 1e-14 * half_period {
                break;
            }
            if err > 0.0 {
                hi = theta;
            } else {
                lo = theta;
            }
            let slope = g(theta);
            let newton = theta - err / slope;
            theta = if newton > lo && newton < hi { newton } else { 0.5 * (lo + hi) };
            if hi - lo < f64::EPSILON * half {
                break;
            }
        }
        radii[j] = radius_at(theta);
    }
    for j in n_samples / 2 + 1..n_samples {
        radii[j] = radii[n_samples - j];
        times[j] = period * j as f64 / n_samples as f64;
    }
    for j in 0..n_samples {
        speeds[j] = well.speed(energy, radii[j]);
    }

    Ok(ClassicalOrbit {
        energy,
        well: *well,
        period,
        omega: std::f64::consts::TAU / period,
        r_minus,
        r_plus,
        times,
        radii,
        speeds,
    })
}

/// Fourier coefficients `c_l = (1/T) int_0^T r(t) e^{-i l w t} dt` of a
/// sampled orbit, for `0 <= l <= ell_max`; negative orders follow from
/// `c_{-l} = conj(c_l)` since `r(t)` is real.
#[derive(Debug, Clone)]
pub struct FourierCoefficients {
    omega: f64,
    coeffs: Vec<Complex64>,
}

impl FourierCoefficients {
    pub fn omega(&self) -> f64 {
        self.omega
    }

    pub fn ell_max(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, ell: i64) -> Option<Complex64> {
        let idx = ell.unsigned_abs() as usize;
        let c = *self.coeffs.get(idx)?;
        Some(if ell < 0 { c.conj() } else { c })
    }

    /// Real part of `c_l`; for these even orbits the imaginary part is
    /// round-off only (see `max_imaginary_part`).
    pub fn real_coefficient(&self, ell: i64) -> Option<f64> {
        self.coefficient(ell).map(|c| c.re)
    }

    pub fn max_imaginary_part(&self) -> f64 {
        self.coeffs.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }
}

/// Discrete Fourier analysis of the orbit samples. Requires at least
/// `32 ell_max` samples so the top requested order is well clear of the
/// sampling limit.
pub fn fourier_coefficients(orbit: &ClassicalOrbit, ell_max: usize) -> Result<FourierCoefficients> {
    let n = orbit.n_samples();
    if ell_max > 0 && n < 32 * ell_max {
        return Err(CoreError::Undersampled(format!(
            "{n} samples cannot support ell_max = {ell_max}; need at least {}",
            32 * ell_max
        )));
    }
    let radii = orbit.radii();
    let mut coeffs = Vec::with_capacity(ell_max + 1);
    for ell in 0..=ell_max {
        let mut acc = Complex64::new(0.0, 0.0);
        let step = -std::f64::consts::TAU * ell as f64 / n as f64;
        for (j, &r) in radii.iter().enumerate() {
            acc += r * Complex64::from_polar(1.0, step * j as f64);
        }
        coeffs.push(acc / n as f64);
    }
    Ok(FourierCoefficients { omega: orbit.omega(), coeffs })
}

/// Uniform solver grid for the bound-state bases: `n_grid` cells on
/// `[x_min, x_max]` with Dirichlet walls at both ends.
#[derive(Debug, Clone, Copy)]
pub struct SolverGrid {
    x_min: f64,
    x_max: f64,
    n_grid: usize,
}

impl SolverGrid {
    pub fn new(x_min: f64, x_max: f64, n_grid: usize) -> Result<SolverGrid> {
        if !x_min.is_finite() || !x_max.is_finite() || x_max <= x_min {
            return Err(CoreError::Grid(format!(
                "need finite x_min < x_max, got [{x_min}, {x_max}]"
            )));
        }
        if n_grid < 1000 {
            return Err(CoreError::Grid(format!(
                "bound-state grids need at least 1000 cells, got {n_grid}"
            )));
        }
        Ok(SolverGrid { x_min, x_max, n_grid })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_grid(&self) -> usize {
        self.n_grid
    }

    pub fn h(&self) -> f64 {
        (self.x_max - self.x_min) / self.n_grid as f64
    }

    /// Interior point backing state-vector index `i`.
    pub fn interior_point(&self, i: usize) -> f64 {
        self.x_min + (i as f64 + 1.0) * self.h()
    }
}

/// Eigenpairs of a discretized well, labeled by the family's quantum
/// numbers (harmonic from 0, radial from 1). States are normalized as
/// `sum u_i^2 h = 1` and signed so the outermost (largest-x) lobe is
/// positive, the convention under which the semiclassical matrix elements
/// come out positive.
#[derive(Debug, Clone)]
pub struct BoundStateBasis {
    well: WellSpec,
    hbar: f64,
    grid: SolverGrid,
    energies: Vec<f64>,
    states: Vec<Vec<f64>>,
}

fn well_hamiltonian(well: &WellSpec, hbar: f64, grid: &SolverGrid) -> Result<SymTridiag> {
    let h = grid.h();
    let kinetic = hbar * hbar / (well.mass() * h * h);
    let diag: Vec<f64> =
        (0..grid.n_grid() - 1).map(|i| kinetic + well.potential(grid.interior_point(i))).collect();
    let off = vec![-0.5 * kinetic; grid.n_grid() - 2];
    SymTridiag::new(diag, off)
}

/// Diagonalize the well on `grid` and keep the lowest `n_levels` states.
///
/// Contracts enforced:
/// * radial grids start at exactly 0 and reach `3x` the outermost requested
///   level's classical radius; harmonic grids are symmetric and reach `2x`
///   the top turning point;
/// * the top eigenvalue must be grid-converged: re-solving with 1.5x the
///   resolution may move it by at most 1e-4 relative, else the call errors.
pub fn bound_basis(
    well: &WellSpec,
    hbar: f64,
    grid: &SolverGrid,
    n_levels: usize,
) -> Result<BoundStateBasis> {
    if n_levels < 1 {
        return Err(CoreError::InvalidInput("n_levels must be at least 1".into()));
    }
    if hbar <= 0.0 || !hbar.is_finite() {
        return Err(CoreError::InvalidInput(format!("hbar must be positive, got {hbar}")));
    }
    let top_label = well.ground_label() + n_levels - 1;
    match well {
        WellSpec::Radial(spec) => {
            if grid.x_min() != 0.0 {
                return Err(CoreError::Grid(format!(
                    "radial grids must start at r = 0, got {}",
                    grid.x_min()
                )));
            }
            let needed = 3.0 * spec.analytic_radius(hbar, top_label);
            if grid.x_max() < needed {
                return Err(CoreError::BoxTooSmall(format!(
                    "r_max = {} but level {top_label} needs at least {needed}",
                    grid.x_max()
                )));
            }
        }
        WellSpec::Harmonic { .. } => {
            if grid.x_min() != -grid.x_max() {
                return Err(CoreError::Grid(format!(
                    "harmonic grids must be symmetric, got [{}, {}]",
                    grid.x_min(),
                    grid.x_max()
                )));
            }
            let top_energy = well.analytic_energy(hbar, top_label);
            let (_, x_t) = well.turning_points(top_energy)?;
            if grid.x_max() < 2.0 * x_t {
                return Err(CoreError::BoxTooSmall(format!(
                    "box half-width {} but level {top_label} turns at {x_t}; need 2x margin",
                    grid.x_max()
                )));
            }
        }
    }

    let hamiltonian = well_hamiltonian(well, hbar, grid)?;
    let energies = hamiltonian.lowest_eigenvalues(n_levels)?;

    // Resolution check: 1.5x finer grid, same box.
    let finer =
        SolverGrid::new(grid.x_min(), grid.x_max(), (grid.n_grid() as f64 * 1.5).ceil() as usize)?;
    let finer_energies = well_hamiltonian(well, hbar, &finer)?.lowest_eigenvalues(n_levels)?;
    let top = n_levels - 1;
    let shift = (energies[top] - finer_energies[top]).abs() / energies[top].abs();
    if shift > 1e-4 {
        return Err(CoreError::Convergence(format!(
            "top level moved {shift:.2e} relative under 1.5x grid refinement; \
             the grid is too coarse for level {top_label}"
        )));
    }

    let h = grid.h();
    let mut states: Vec<Vec<f64>> = Vec::with_capacity(n_levels);
    for &e in &energies {
        let mut v = hamiltonian.eigenvector(e)?;
        // Clustered high-n levels limit how orthogonal independently
        // computed vectors can be; a short Gram-Schmidt sweep against the
        // nearest predecessors restores orthogonality to round-off without
        // disturbing well-separated pairs.
        let window = states.len().min(8);
        for prev in &states[states.len() - window..] {
            let overlap: f64 = prev.iter().zip(&v).map(|(p, x)| p * x).sum::<f64>() * h;
            for (x, p) in v.iter_mut().zip(prev) {
                *x -= overlap * p;
            }
        }
        let norm: f64 = (v.iter().map(|x| x * x).sum::<f64>() * h).sqrt();
        for x in &mut v {
            *x /= norm;
        }
        fix_outer_lobe_sign(&mut v);
        states.push(v);
    }

    Ok(BoundStateBasis { well: *well, hbar, grid: *grid, energies, states })
}

/// Flip the vector, if needed, so its outermost lobe is positive: the sign
/// is read off at the rightmost point still carrying 30% of the peak
/// amplitude, which lies on the outer flank of the last antinode.
fn fix_outer_lobe_sign(v: &mut [f64]) {
    let peak = v.iter().map(|x| x.abs()).fold(0.0_f64, f64::max);
    if peak == 0.0 {
        return;
    }
    let threshold = 0.3 * peak;
    if let Some(x) = v.iter().rev().find(|x| x.abs() >= threshold) {
        if *x < 0.0 {
            for y in v.iter_mut() {
                *y = -*y;
            }
        }
    }
}

impl BoundStateBasis {
    pub fn well(&self) -> &WellSpec {
        &self.well
    }

    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    pub fn grid(&self) -> &SolverGrid {
        &self.grid
    }

    /// Inclusive label range `(lowest, highest)` held by this basis.
    pub fn label_range(&self) -> (usize, usize) {
        let lo = self.well.ground_label();
        (lo, lo + self.energies.len() - 1)
    }

    fn index_of(&self, n: usize) -> Result<usize> {
        let (lo, hi) = self.label_range();
        if n < lo || n > hi {
            return Err(CoreError::InvalidInput(format!(
                "state {n} outside the computed range {lo}..={hi}"
            )));
        }
        Ok(n - lo)
    }

    pub fn energy(&self, n: usize) -> Result<f64> {
        Ok(self.energies[self.index_of(n)?])
    }

    pub fn state(&self, n: usize) -> Result<&[f64]> {
        Ok(&self.states[self.index_of(n)?])
    }

    /// `<u_n| V |u_n>` on the grid.
    pub fn potential_expectation(&self, n: usize) -> Result<f64> {
        let u = self.state(n)?;
        let h = self.grid.h();
        Ok(u.iter()
            .enumerate()
            .map(|(i, &ui)| ui * ui * self.well.potential(self.grid.interior_point(i)))
            .sum::<f64>()
            * h)
    }

    /// `<T> = E - <V>` for a numeric eigenstate.
    pub fn kinetic_expectation(&self, n: usize) -> Result<f64> {
        Ok(self.energy(n)? - self.potential_expectation(n)?)
    }

    /// Largest deviation from orthonormality over all held state pairs.
    pub fn orthonormality_residual(&self) -> f64 {
        let h = self.grid.h();
        let mut worst = 0.0_f64;
        for a in 0..self.states.len() {
            for b in a..self.states.len() {
                let dot: f64 =
                    self.states[a].iter().zip(&self.states[b]).map(|(x, y)| x * y).sum::<f64>() * h;
                let target = if a == b { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

/// `<u_{n+ell} | x | u_n>` on the basis grid. `ell` may be negative; both
/// labels must be inside the basis range.
pub fn matrix_element(basis: &BoundStateBasis, n: usize, ell: i64) -> Result<f64> {
    let m = n as i64 + ell;
    if m < 0 {
        return Err(CoreError::InvalidInput(format!("state {n} has no partner at ell = {ell}")));
    }
    let bra = basis.state(m as usize)?;
    let ket = basis.state(n)?;
    let h = basis.grid.h();
    Ok(bra
        .iter()
        .zip(ket)
        .enumerate()
        .map(|(i, (b, k))| b * basis.grid.interior_point(i) * k)
        .sum::<f64>()
        * h)
}

/// One order of the quantum-classical comparison.
#[derive(Debug, Clone, Copy)]
pub struct CorrespondenceRow {
    pub ell: usize,
    pub matrix_element: f64,
    pub classical_coefficient: f64,
    pub absolute_difference: f64,
    /// `|matrix_element - c_ell| / |c_ell|`.
    pub relative_difference: f64,
}

/// Compare `<u_{n+ell}|x|u_n>` against the classical `c_ell` for
/// `ell = 0..=ell_max`.
///
/// Each order's classical orbit is built at the mean of the two level
/// energies involved, `(E_n + E_{n+ell})/2` (closed-form energies). The
/// mean is the energy at which the semiclassical identification is cleanest
/// — for the harmonic ladder it makes the ell = 1 identity exact — and it
/// respects the gravitational (m, n) -> (Km, Kn) scaling, because every
/// level energy scales by the same factor K.
pub fn correspondence_check(
    basis: &BoundStateBasis,
    n: usize,
    ell_max: usize,
    n_samples: usize,
) -> Result<Vec<CorrespondenceRow>> {
    let mut rows = Vec::with_capacity(ell_max + 1);
    for ell in 0..=ell_max {
        let element = matrix_element(basis, n, ell as i64)?;
        let mean_energy = 0.5
            * (basis.well.analytic_energy(basis.hbar, n)
                + basis.well.analytic_energy(basis.hbar, n + ell));
        let orbit = classical_orbit(&basis.well, mean_energy, n_samples)?;
        let c = fourier_coefficients(&orbit, ell)?
            .real_coefficient(ell as i64)
            .expect("ell is within the computed range");
        let diff = (element - c).abs();
        rows.push(CorrespondenceRow {
            ell,
            matrix_element: element,
            classical_coefficient: c,
            absolute_difference: diff,
            relative_difference: diff / c.abs(),
        });
    }
    Ok(rows)
}

/// One order of the scaled gravitational comparison.
#[derive(Debug, Clone, Copy)]
pub struct ScaledCorrespondenceRow {
    pub ell: usize,
    /// `<u_{n+ell} | r | u_n>` at mass m.
    pub base_element: f64,
    /// `<u_{Kn+ell} | r | u_{Kn}>` at mass K m.
    pub scaled_element: f64,
    /// `c_ell` of the single classical orbit both must approach.
    pub classical_coefficient: f64,
    pub base_relative_difference: f64,
    pub scaled_relative_difference: f64,
    /// `|base - scaled|` over their mean.
    pub cross_relative_difference: f64,
}

#[derive(Debug, Clone)]
pub struct ScaledCorrespondence {
    pub n: usize,
    pub k: usize,
    pub rows: Vec<ScaledCorrespondenceRow>,
}

/// The gravitational correspondence experiment: matrix elements at
/// `(m, n)` and at `(K m, K n)` must approach the Fourier coefficients of
/// one and the same classical orbit.
///
/// The transition order stays `ell` on both sides: level `Kn` of the heavy
/// problem sits on the base level-n orbit (its adjacent level spacing is
/// `hbar omega` with the identical omega), so the `ell`-step element
/// `<u_{Kn+ell}|r|u_{Kn}>` probes the same `ell`-th harmonic of that shared
/// orbit as `<u_{n+ell}|r|u_n>` does. Scaling the step to `K ell` would
/// instead target the `K ell`-th harmonic, a different coefficient
/// altogether. The residual disagreement between the two sides is
/// `O(ell (1 - 1/K) / n)` from the slightly different mean transition
/// energies, and vanishes along the ray `(Km, Kn)` as n grows.
///
/// `base` holds states of the problem at mass m around level n; `scaled`
/// holds states of the same sources at mass K m around level K n.
pub fn gravitational_scaling_correspondence(
    base: &BoundStateBasis,
    scaled: &BoundStateBasis,
    n: usize,
    ell_max: usize,
    k: usize,
    n_samples: usize,
) -> Result<ScaledCorrespondence> {
    if k < 2 {
        return Err(CoreError::InvalidInput(format!("scaling factor K must be >= 2, got {k}")));
    }
    let (base_spec, scaled_spec) = match (&base.well, &scaled.well) {
        (WellSpec::Radial(a), WellSpec::Radial(b)) => (a, b),
        _ => {
            return Err(CoreError::InvalidInput(
                "scaling correspondence is defined for radial bases".into(),
            ))
        }
    };
    let expected_mass = k as f64 * base_spec.mass();
    if (scaled_spec.mass() - expected_mass).abs() > 1e-12 * expected_mass {
        return Err(CoreError::InvalidInput(format!(
            "scaled basis mass {} is not K x base mass {expected_mass}",
            scaled_spec.mass()
        )));
    }
    if base.hbar != scaled.hbar {
        return Err(CoreError::InvalidInput("bases disagree on hbar".into()));
    }

    let mut rows = Vec::with_capacity(ell_max);
    for ell in 1..=ell_max {
        let base_element = matrix_element(base, n, ell as i64)?;
        let scaled_element = matrix_element(scaled, k * n, ell as i64)?;
        let mean_energy = 0.5
            * (base.well.analytic_energy(base.hbar, n)
                + base.well.analytic_energy(base.hbar, n + ell));
        let orbit = classical_orbit(&base.well, mean_energy, n_samples)?;
        let c = fourier_coefficients(&orbit, ell)?
            .real_coefficient(ell as i64)
            .expect("ell is within the computed range");
        rows.push(ScaledCorrespondenceRow {
            ell,
            base_element,
            scaled_element,
            classical_coefficient: c,
            base_relative_difference: (base_element - c).abs() / c.abs(),
            scaled_relative_difference: (scaled_element - c).abs() / c.abs(),
            cross_relative_difference: (base_element - scaled_element).abs()
                / (0.5 * (base_element + scaled_element)).abs(),
        });
    }
    Ok(ScaledCorrespondence { n, k, rows })
}

/// The Eq.-style spacing comparison `Delta E` vs `ell hbar omega_n`.
#[derive(Debug, Clone, Copy)]
pub struct LevelSpacing {
    pub delta_e: f64,
    pub ell_hbar_omega: f64,
    /// `|Delta E - ell hbar omega_n| / Delta E`.
    pub relative_gap: f64,
}

/// Compare the closed-form level spacing `E_{n+ell} - E_n` against
/// `ell hbar omega_n`, with `omega_n` read off the classical orbit built at
/// `E_n` by quadrature (not from a spectrum formula).
pub fn level_spacing_check(
    well: &WellSpec,
    hbar: f64,
    n: usize,
    ell: usize,
) -> Result<LevelSpacing> {
    if ell < 1 {
        return Err(CoreError::InvalidInput("ell must be at least 1".into()));
    }
    if n < well.ground_label() {
        return Err(CoreError::InvalidInput(format!(
            "level {n} below the ground label {}",
            well.ground_label()
        )));
    }
    let delta_e = well.analytic_energy(hbar, n + ell) - well.analytic_energy(hbar, n);
    let orbit = classical_orbit(well, well.analytic_energy(hbar, n), 256)?;
    let ell_hbar_omega = ell as f64 * hbar * orbit.omega();
    Ok(LevelSpacing {
        delta_e,
        ell_hbar_omega,
        relative_gap: (delta_e - ell_hbar_omega).abs() / delta_e,
    })
}

/// Loop actions on both sides of the `(m, n) -> (Km, Kn)` map.
#[derive(Debug, Clone, Copy)]
pub struct ScalingCheck {
    pub k: usize,
    pub n: usize,
    pub v_action_base: f64,
    pub v_action_scaled: f64,
    /// `|v1 - v2| / v1`.
    pub v_action_relative_difference: f64,
    /// `p2 / p1`, which must be exactly K.
    pub p_action_ratio: f64,
}

/// Actions from the closed-form energies: `v_action` must be invariant and
/// `p_action` must scale by exactly K.
pub fn scaling_check(
    spec: &CentralPotentialSpec,
    hbar: f64,
    k: usize,
    n: usize,
) -> Result<ScalingCheck> {
    if k < 2 || n < 1 {
        return Err(CoreError::InvalidInput(format!("need K >= 2 and n >= 1, got {k}, {n}")));
    }
    let scaled_spec = spec.with_mass(k as f64 * spec.mass())?;
    let base = action_integrals(spec, hbar, spec.analytic_energy(hbar, n))?;
    let scaled = action_integrals(&scaled_spec, hbar, scaled_spec.analytic_energy(hbar, k * n))?;
    Ok(ScalingCheck {
        k,
        n,
        v_action_base: base.v_action,
        v_action_scaled: scaled.v_action,
        v_action_relative_difference: (base.v_action - scaled.v_action).abs() / base.v_action,
        p_action_ratio: scaled.p_action / base.p_action,
    })
}

/// Same comparison, but with both energies taken from the finite-difference
/// eigensolver instead of the closed forms: the end-to-end numeric version
/// of the scaling experiment.
pub fn scaling_check_numeric(
    spec: &CentralPotentialSpec,
    hbar: f64,
    k: usize,
    n: usize,
    r_max: f64,
    n_grid: usize,
) -> Result<ScalingCheck> {
    if k < 2 || n < 1 {
        return Err(CoreError::InvalidInput(format!("need K >= 2 and n >= 1, got {k}, {n}")));
    }
    let scaled_spec = spec.with_mass(k as f64 * spec.mass())?;
    let base_spectrum = radial_eigensolver(spec, hbar, r_max, n_grid, n)?;
    let scaled_spectrum = radial_eigensolver(&scaled_spec, hbar, r_max, n_grid, k * n)?;
    let e_base = base_spectrum.level(n).unwrap().numeric_energy.unwrap();
    let e_scaled = scaled_spectrum.level(k * n).unwrap().numeric_energy.unwrap();
    let base = action_integrals(spec, hbar, e_base)?;
    let scaled = action_integrals(&scaled_spec, hbar, e_scaled)?;
    Ok(ScalingCheck {
        k,
        n,
        v_action_base: base.v_action,
        v_action_scaled: scaled.v_action,
        v_action_relative_difference: (base.v_action - scaled.v_action).abs() / base.v_action,
        p_action_ratio: scaled.p_action / base.p_action,
    })
}
