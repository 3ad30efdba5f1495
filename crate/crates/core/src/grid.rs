//! Uniform periodic spatial grid shared by all wavefunction code.

use crate::error::{CoreError, Result};

/// Uniform grid on `[x_min, x_max)` with periodic topology.
///
/// The right endpoint is excluded: point `j` sits at `x_min + j dx` with
/// `dx = (x_max - x_min) / n_points`, so the grid tiles the circle of
/// circumference `x_max - x_min`. `n_points` must be a power of two (the
/// propagator lives in the Fourier domain) and at least 16.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpatialGrid {
    x_min: f64,
    x_max: f64,
    n_points: usize,
}

impl SpatialGrid {
    pub fn new(x_min: f64, x_max: f64, n_points: usize) -> Result<Self> {
        if !x_min.is_finite() || !x_max.is_finite() || x_max <= x_min {
            return Err(CoreError::Grid(format!(
                "need finite x_min < x_max, got [{x_min}, {x_max})"
            )));
        }
        if n_points < 16 || !n_points.is_power_of_two() {
            return Err(CoreError::Grid(format!(
                "n_points must be a power of two >= 16, got {n_points}"
            )));
        }
        Ok(SpatialGrid { x_min, x_max, n_points })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn length(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn dx(&self) -> f64 {
        self.length() / self.n_points as f64
    }

    pub fn point(&self, j: usize) -> f64 {
        self.x_min + j as f64 * self.dx()
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_points).map(move |j| self.point(j))
    }

    /// Angular wavenumbers in FFT layout: index m holds `2 pi m / L` for
    /// `m <= n/2` and the negative alias `2 pi (m - n) / L` above that.
    pub fn wavenumbers(&self) -> Vec<f64> {
        let n = self.n_points as i64;
        let dk = std::f64::consts::TAU / self.length();
        (0..n)
            .map(|m| {
                let signed = if m <= n / 2 { m } else { m - n };
                signed as f64 * dk
            })
            .collect()
    }

    /// Largest resolvable wavenumber magnitude, `pi / dx`.
    pub fn k_max(&self) -> f64 {
        std::f64::consts::PI / self.dx()
    }

    pub fn same_as(&self, other: &SpatialGrid) -> bool {
        self == other
    }
}
