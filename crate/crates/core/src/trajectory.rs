//! Frame trajectories xi(t): the displacement of the moving frame's origin,
//! with the derivatives and the integral of xi_dot^2 that the phase
//! bookkeeping needs.

use crate::error::{CoreError, Result};

/// Rigid translation history of a reference frame.
///
/// The closed-form families evaluate exactly; [`Trajectory::TabulatedNumeric`]
/// carries sampled data and answers queries by finite differences and
/// trapezoid sums, so its accuracy is set by its sample spacing.
#[derive(Debug, Clone)]
pub enum Trajectory {
    Rest,
    ConstantVelocity {
        v: f64,
    },
    ConstantAcceleration {
        a: f64,
    },
    /// xi(t) = amplitude * sin(omega t); starts at the lab origin.
    Sinusoidal {
        amplitude: f64,
        omega: f64,
    },
    TabulatedNumeric(TabulatedTrajectory),
}

impl Trajectory {
    pub fn xi(&self, t: f64) -> f64 {
        match self {
            Trajectory::Rest => 0.0,
            Trajectory::ConstantVelocity { v } => v * t,
            Trajectory::ConstantAcceleration { a } => 0.5 * a * t * t,
            Trajectory::Sinusoidal { amplitude, omega } => amplitude * (omega * t).sin(),
            Trajectory::TabulatedNumeric(tab) => tab.xi(t),
        }
    }

    pub fn xi_dot(&self, t: f64) -> f64 {
        match self {
            Trajectory::Rest => 0.0,
            Trajectory::ConstantVelocity { v } => *v,
            Trajectory::ConstantAcceleration { a } => a * t,
            Trajectory::Sinusoidal { amplitude, omega } => amplitude * omega * (omega * t).cos(),
            Trajectory::TabulatedNumeric(tab) => tab.xi_dot(t),
        }
    }

    pub fn xi_ddot(&self, t: f64) -> f64 {
        match self {
            Trajectory::Rest | Trajectory::ConstantVelocity { .. } => 0.0,
            Trajectory::ConstantAcceleration { a } => *a,
            Trajectory::Sinusoidal { amplitude, omega } => {
                -amplitude * omega * omega * (omega * t).sin()
            }
            Trajectory::TabulatedNumeric(tab) => tab.xi_ddot(t),
        }
    }

    /// Integral of xi_dot(s)^2 from 0 to t.
    pub fn xi_dot_sq_integral(&self, t: f64) -> f64 {
        match self {
            Trajectory::Rest => 0.0,
            Trajectory::ConstantVelocity { v } => v * v * t,
            Trajectory::ConstantAcceleration { a } => a * a * t * t * t / 3.0,
            Trajectory::Sinusoidal { amplitude, omega } => {
                // integral of (A w cos(w s))^2 = A^2 w^2 (t/2 + sin(2 w t)/(4 w))
                let aw = amplitude * omega;
                aw * aw * (0.5 * t + (2.0 * omega * t).sin() / (4.0 * omega))
            }
            Trajectory::TabulatedNumeric(tab) => tab.xi_dot_sq_integral(t),
        }
    }

    /// For trajectories whose acceleration never changes, the value; the
    /// propagator uses this to cache the phase of a static linear potential.
    pub fn constant_acceleration(&self) -> Option<f64> {
        match self {
            Trajectory::Rest | Trajectory::ConstantVelocity { .. } => Some(0.0),
            Trajectory::ConstantAcceleration { a } => Some(*a),
            _ => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Trajectory::Rest => "rest",
            Trajectory::ConstantVelocity { .. } => "constant_velocity",
            Trajectory::ConstantAcceleration { .. } => "constant_acceleration",
            Trajectory::Sinusoidal { .. } => "sinusoidal",
            Trajectory::TabulatedNumeric(_) => "tabulated",
        }
    }
}

/// xi(t) sampled on a uniform time mesh. Derivatives come from centered
/// finite differences on the mesh (one-sided at the ends) and the integral
/// of xi_dot^2 from a cumulative trapezoid rule; queries between mesh points
/// interpolate linearly.
#[derive(Debug, Clone)]
pub struct TabulatedTrajectory {
    t0: f64,
    dt: f64,
    xi: Vec<f64>,
    xi_dot: Vec<f64>,
    xi_ddot: Vec<f64>,
    integral: Vec<f64>,
}

impl TabulatedTrajectory {
    pub fn new(t0: f64, dt: f64, xi: Vec<f64>) -> Result<Self> {
        if dt <= 0.0 || !dt.is_finite() {
            return Err(CoreError::InvalidInput(format!(
                "sample spacing must be positive, got {dt}"
            )));
        }
        if xi.len() < 5 {
            return Err(CoreError::InvalidInput(format!(
                "need at least 5 samples for finite differences, got {}",
                xi.len()
            )));
        }
        if xi.iter().any(|v| !v.is_finite()) {
            return Err(CoreError::InvalidInput("non-finite trajectory sample".into()));
        }
        let xi_dot = differentiate(&xi, dt);
        let xi_ddot = differentiate(&xi_dot, dt);
        let mut integral = Vec::with_capacity(xi.len());
        let mut acc = 0.0;
        integral.push(0.0);
        for w in xi_dot.windows(2) {
            acc += 0.5 * (w[0] * w[0] + w[1] * w[1]) * dt;
            integral.push(acc);
        }
        Ok(TabulatedTrajectory { t0, dt, xi, xi_dot, xi_ddot, integral })
    }

    fn sample(&self, data: &[f64], t: f64) -> f64 {
        let s = (t - self.t0) / self.dt;
        let max = (data.len() - 1) as f64;
        // Tolerate round-off just outside the table.
        if s < -1e-9 || s > max + 1e-9 {
            // Out-of-range queries have no data to answer with.
            return f64::NAN;
        }
        let s = s.clamp(0.0, max);
        let j = (s.floor() as usize).min(data.len() - 2);
        let frac = s - j as f64;
        data[j] * (1.0 - frac) + data[j + 1] * frac
    }

    fn checked(&self, data: &[f64], t: f64, what: &str) -> f64 {
        let v = self.sample(data, t);
        assert!(
            !v.is_nan(),
            "tabulated trajectory queried at t = {t}, outside [{}, {}] ({what})",
            self.t0,
            self.t0 + self.dt * (self.xi.len() - 1) as f64
        );
        v
    }

    pub fn xi(&self, t: f64) -> f64 {
        self.checked(&self.xi, t, "xi")
    }

    pub fn xi_dot(&self, t: f64) -> f64 {
        self.checked(&self.xi_dot, t, "xi_dot")
    }

    pub fn xi_ddot(&self, t: f64) -> f64 {
        self.checked(&self.xi_ddot, t, "xi_ddot")
    }

    pub fn xi_dot_sq_integral(&self, t: f64) -> f64 {
        self.checked(&self.integral, t, "xi_dot_sq_integral")
    }
}

/// Fourth-order centered differences inside, second-order one-sided stencils
/// at the two points on each end.
fn differentiate(data: &[f64], dt: f64) -> Vec<f64> {
    let n = data.len();
    let mut out = vec![0.0; n];
    for j in 0..n {
        out[j] = if j >= 2 && j + 2 < n {
            (data[j - 2] - 8.0 * data[j - 1] + 8.0 * data[j + 1] - data[j + 2]) / (12.0 * dt)
        } else if j == 0 {
            (-3.0 * data[0] + 4.0 * data[1] - data[2]) / (2.0 * dt)
        } else if j == n - 1 {
            (3.0 * data[n - 1] - 4.0 * data[n - 2] + data[n - 3]) / (2.0 * dt)
        } else if j == 1 {
            (data[2] - data[0]) / (2.0 * dt)
        } else {
            (data[n - 1] - data[n - 3]) / (2.0 * dt)
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FAMILIES: fn() -> Vec<Trajectory> = || {
        vec![
            Trajectory::Rest,
            Trajectory::ConstantVelocity { v: 0.7 },
            Trajectory::ConstantAcceleration { a: 0.5 },
            Trajectory::Sinusoidal { amplitude: 0.3, omega: 2.0 },
        ]
    };

    /// Central-difference consistency of the closed forms: both derivatives
    /// and the integrand of the squared-velocity integral.
    #[test]
    fn closed_forms_are_self_consistent() {
        let eps = 1e-5;
        for traj in FAMILIES() {
            for &t in &[0.0, 0.3, 0.9, 1.7, 2.5] {
                let d_num = (traj.xi(t + eps) - traj.xi(t - eps)) / (2.0 * eps);
                assert!(
                    (d_num - traj.xi_dot(t)).abs() <= 1e-6,
                    "{}: xi_dot at t={t}: {d_num} vs {}",
                    traj.label(),
                    traj.xi_dot(t)
                );
                let dd_num = (traj.xi_dot(t + eps) - traj.xi_dot(t - eps)) / (2.0 * eps);
                assert!(
                    (dd_num - traj.xi_ddot(t)).abs() <= 1e-6,
                    "{}: xi_ddot at t={t}",
                    traj.label()
                );
                let di_num = (traj.xi_dot_sq_integral(t + eps) - traj.xi_dot_sq_integral(t - eps))
                    / (2.0 * eps);
                let want = traj.xi_dot(t).powi(2);
                assert!(
                    (di_num - want).abs() <= 1e-6 * want.max(1.0),
                    "{}: integral derivative at t={t}",
                    traj.label()
                );
            }
        }
    }

    #[test]
    fn integral_starts_at_zero() {
        for traj in FAMILIES() {
            assert_eq!(traj.xi_dot_sq_integral(0.0), 0.0, "{}", traj.label());
        }
    }

    #[test]
    fn tabulated_tracks_its_source() {
        // Sample a sinusoid finely and compare the table against the closed form.
        let source = Trajectory::Sinusoidal { amplitude: 0.4, omega: 1.5 };
        let dt = 1e-3;
        let n = 4001;
        let samples: Vec<f64> = (0..n).map(|j| source.xi(j as f64 * dt)).collect();
        let tab = Trajectory::TabulatedNumeric(TabulatedTrajectory::new(0.0, dt, samples).unwrap());
        for &t in &[0.1, 0.77, 1.5, 2.9, 3.83] {
            assert!((tab.xi(t) - source.xi(t)).abs() < 1e-6, "xi at {t}");
            assert!((tab.xi_dot(t) - source.xi_dot(t)).abs() < 1e-5, "xi_dot at {t}");
            assert!((tab.xi_ddot(t) - source.xi_ddot(t)).abs() < 1e-4, "xi_ddot at {t}");
            assert!(
                (tab.xi_dot_sq_integral(t) - source.xi_dot_sq_integral(t)).abs() < 1e-5,
                "integral at {t}"
            );
        }
    }

    #[test]
    fn tabulated_rejects_bad_input() {
        assert!(TabulatedTrajectory::new(0.0, 0.0, vec![0.0; 10]).is_err());
        assert!(TabulatedTrajectory::new(0.0, 0.1, vec![0.0; 3]).is_err());
        assert!(TabulatedTrajectory::new(0.0, 0.1, vec![0.0, 1.0, f64::NAN, 0.0, 1.0]).is_err());
    }

    #[test]
    #[should_panic(expected = "outside")]
    fn tabulated_panics_out_of_range() {
        let tab = TabulatedTrajectory::new(0.0, 0.1, vec![0.0; 16]).unwrap();
        tab.xi(5.0);
    }
}
