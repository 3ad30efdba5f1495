//! Thin FFT layer: transforms, spectral translation, and a derivative for
//! linearly trended samples.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::grid::SpatialGrid;

/// In-place forward DFT (rustfft convention, unnormalized):
/// `F_m = sum_j f_j exp(-2 pi i j m / n)`.
pub fn fft_forward(values: &mut [Complex64]) {
    let mut planner = FftPlanner::new();
    planner.plan_fft_forward(values.len()).process(values);
}

/// In-place inverse DFT, normalized by `1/n` so it undoes [`fft_forward`].
pub fn fft_inverse(values: &mut [Complex64]) {
    let mut planner = FftPlanner::new();
    planner.plan_fft_inverse(values.len()).process(values);
    let scale = 1.0 / values.len() as f64;
    for v in values.iter_mut() {
        *v *= scale;
    }
}

/// Translate periodic samples by `shift`: returns g with g(x) = f(x - shift),
/// applied as the phase `exp(-i k shift)` on each Fourier mode.
pub fn translate(grid: &SpatialGrid, values: &[Complex64], shift: f64) -> Vec<Complex64> {
    let mut spec: Vec<Complex64> = values.to_vec();
    fft_forward(&mut spec);
    for (v, k) in spec.iter_mut().zip(grid.wavenumbers()) {
        *v *= Complex64::from_polar(1.0, -k * shift);
    }
    fft_inverse(&mut spec);
    spec
}

/// Derivative of real samples that are expected to be a linear ramp. The
/// endpoint slope is removed first (a bare ramp is not periodic, so
/// differentiating it through the DFT would ring), the remainder is
/// differentiated spectrally, and the slope is added back. For exactly
/// linear data the result is uniform to round-off; any curvature in the
/// samples shows up as spatial structure in the output, which is what the
/// phase-gradient identity checks look for.
pub fn derivative_linear_trended(grid: &SpatialGrid, values: &[f64]) -> Vec<f64> {
    let n = grid.n_points();
    assert_eq!(values.len(), n, "sample count must match the grid");
    let dx = grid.dx();
    // Endpoint slope; exact for data that is exactly linear.
    let slope = (values[n - 1] - values[0]) / ((n - 1) as f64 * dx);
    let mut spec: Vec<Complex64> = values
        .iter()
        .enumerate()
        .map(|(j, &v)| Complex64::new(v - slope * (j as f64) * dx, 0.0))
        .collect();
    fft_forward(&mut spec);
    let half = n / 2;
    for (m, (v, k)) in spec.iter_mut().zip(grid.wavenumbers()).enumerate() {
        // The Nyquist mode has no well-defined first derivative; drop it.
        *v *= if m == half { Complex64::new(0.0, 0.0) } else { Complex64::new(0.0, k) };
    }
    fft_inverse(&mut spec);
    spec.into_iter().map(|v| v.re + slope).collect()
}
