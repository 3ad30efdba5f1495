//! Shared oracles for the integration suites: deliberately independent of
//! the crate's own numerics (composite Simpson instead of Gauss-Legendre,
//! closed forms instead of solver output) so agreement means something.

#![allow(dead_code)]

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Composite Simpson's rule on `n` panels (`n` even).
pub fn simpson(a: f64, b: f64, n: usize, mut f: impl FnMut(f64) -> f64) -> f64 {
    assert!(n >= 2 && n.is_multiple_of(2), "simpson needs an even panel count");
    let h = (b - a) / n as f64;
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    acc * h / 3.0
}

/// Fixed-seed deterministic RNG for "randomized" checks: reproducible on
/// every run and platform.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Gravitational/Coulomb closed forms in natural units (attraction 1,
/// mass 1, hbar 1).
pub fn natural_energy(n: usize) -> f64 {
    -0.5 / (n as f64 * n as f64)
}

/// Analytic spread of a free Gaussian packet after time `t`:
/// `dx(t)^2 = dx0^2 + (hbar t / (2 m dx0))^2`.
pub fn free_spread(dx0: f64, mass: f64, t: f64) -> f64 {
    (dx0 * dx0 + (t / (2.0 * mass * dx0)).powi(2)).sqrt()
}

/// Relative difference helper used all over the suites.
pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}
