//! Potentials the split-step propagator understands.

use crate::trajectory::Trajectory;

/// External potential V(x, t) for a particle of a given mass.
///
/// The uniform-gravity and accelerated-frame variants are linear in x and
/// proportional to the particle mass:
///
/// * `UniformGravity` is V = m g x,
/// * `AcceleratedFrame` is V = -m xi_ddot(t) x, the inertial potential seen
///   in a frame displaced by xi(t).
///
/// `Tabulated` wraps an arbitrary sampler V(x, t); the caller bakes any mass
/// dependence into the closure.
pub enum Potential {
    Free,
    UniformGravity { g: f64 },
    AcceleratedFrame { trajectory: Trajectory },
    Tabulated(TabulatedPotential),
}

pub struct TabulatedPotential {
    sampler: Box<dyn Fn(f64, f64) -> f64 + Send + Sync>,
    time_dependent: bool,
}

impl Potential {
    /// Arbitrary static potential V(x).
    pub fn tabulated_static(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Potential::Tabulated(TabulatedPotential {
            sampler: Box::new(move |x, _| f(x)),
            time_dependent: false,
        })
    }

    /// Arbitrary time-dependent potential V(x, t).
    pub fn tabulated(f: impl Fn(f64, f64) -> f64 + Send + Sync + 'static) -> Self {
        Potential::Tabulated(TabulatedPotential { sampler: Box::new(f), time_dependent: true })
    }

    pub fn value(&self, x: f64, t: f64, mass: f64) -> f64 {
        match self {
            Potential::Free => 0.0,
            Potential::UniformGravity { g } => mass * g * x,
            Potential::AcceleratedFrame { trajectory } => -mass * trajectory.xi_ddot(t) * x,
            Potential::Tabulated(tab) => (tab.sampler)(x, t),
        }
    }

    pub fn is_time_dependent(&self) -> bool {
        match self {
            Potential::Free | Potential::UniformGravity { .. } => false,
            Potential::AcceleratedFrame { trajectory } => {
                trajectory.constant_acceleration().is_none()
            }
            Potential::Tabulated(tab) => tab.time_dependent,
        }
    }

    /// Slope of a potential known to be linear in x, if this variant is.
    /// Used by the propagator to build phase ramps without per-point calls.
    pub(crate) fn linear_slope(&self, t: f64, mass: f64) -> Option<f64> {
        match self {
            Potential::Free => Some(0.0),
            Potential::UniformGravity { g } => Some(mass * g),
            Potential::AcceleratedFrame { trajectory } => Some(-mass * trajectory.xi_ddot(t)),
            Potential::Tabulated(_) => None,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Potential::Free => "free",
            Potential::UniformGravity { .. } => "uniform_gravity",
            Potential::AcceleratedFrame { .. } => "accelerated_frame",
            Potential::Tabulated(_) => "tabulated",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_gravity_scales_with_mass_and_x() {
        let v = Potential::UniformGravity { g: 0.5 };
        assert_eq!(v.value(2.0, 0.0, 1.0), 1.0);
        assert_eq!(v.value(2.0, 7.0, 3.0), 3.0);
        assert!(!v.is_time_dependent());
    }

    #[test]
    fn accelerated_frame_potential_sign() {
        // V = -m a x for constant acceleration: pushes the packet toward
        // larger x when a > 0, matching a frame accelerating into -x.
        let v =
            Potential::AcceleratedFrame { trajectory: Trajectory::ConstantAcceleration { a: 0.5 } };
        assert_eq!(v.value(1.0, 3.0, 2.0), -1.0);
        assert!(!v.is_time_dependent());

        let w = Potential::AcceleratedFrame {
            trajectory: Trajectory::Sinusoidal { amplitude: 0.3, omega: 2.0 },
        };
        assert!(w.is_time_dependent());
    }

    #[test]
    fn linearity_in_x() {
        // Second difference in x vanishes for the linear variants.
        let pots = [
            Potential::Free,
            Potential::UniformGravity { g: 0.7 },
            Potential::AcceleratedFrame {
                trajectory: Trajectory::Sinusoidal { amplitude: 0.3, omega: 2.0 },
            },
        ];
        for v in &pots {
            for &x in &[-3.0, 0.0, 1.7] {
                let h = 0.37;
                let second = v.value(x + h, 1.3, 2.0) - 2.0 * v.value(x, 1.3, 2.0)
                    + v.value(x - h, 1.3, 2.0);
                assert!(second.abs() <= 1e-10, "{}: {second}", v.label());
            }
        }
    }

    #[test]
    fn tabulated_passthrough() {
        let v = Potential::tabulated_static(|x| 0.5 * x * x);
        assert_eq!(v.value(2.0, 9.0, 5.0), 2.0);
        assert!(!v.is_time_dependent());
        let w = Potential::tabulated(|x, t| x * t);
        assert!(w.is_time_dependent());
        assert_eq!(w.value(2.0, 3.0, 1.0), 6.0);
    }
}
