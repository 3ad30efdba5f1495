//! Symmetric tridiagonal eigenpairs: Sturm-sequence bisection for the lowest
//! eigenvalues, inverse iteration for the matching eigenvectors.
//!
//! This is all the discretized radial problems need, and keeping it local
//! avoids hauling in a dense linear-algebra stack for matrices that are
//! nothing but two diagonals.

use crate::error::{CoreError, Result};

/// Symmetric tridiagonal matrix: `diag` of length n, `off` of length n - 1.
#[derive(Debug, Clone)]
pub struct SymTridiag {
    pub diag: Vec<f64>,
    pub off: Vec<f64>,
}

impl SymTridiag {
    pub fn new(diag: Vec<f64>, off: Vec<f64>) -> Result<Self> {
        if diag.len() < 2 || off.len() + 1 != diag.len() {
            return Err(CoreError::InvalidInput(format!(
                "tridiagonal shape mismatch: {} diagonal, {} off-diagonal entries",
                diag.len(),
                off.len()
            )));
        }
        if diag.iter().chain(off.iter()).any(|v| !v.is_finite()) {
            return Err(CoreError::InvalidInput("non-finite matrix entry".into()));
        }
        Ok(SymTridiag { diag, off })
    }

    pub fn n(&self) -> usize {
        self.diag.len()
    }

    /// Number of eigenvalues strictly below `x` (Sturm sequence count).
    fn count_below(&self, x: f64) -> usize {
        let tiny = f64::MIN_POSITIVE / f64::EPSILON;
        let mut count = 0;
        let mut q = self.diag[0] - x;
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.n() {
            let e = self.off[i - 1];
            let denom =
                if q.abs() < tiny { tiny.copysign(if q < 0.0 { -1.0 } else { 1.0 }) } else { q };
            q = self.diag[i] - x - e * e / denom;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// Interval certain to contain every eigenvalue (Gershgorin).
    fn spectrum_bounds(&self) -> (f64, f64) {
        let n = self.n();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let mut r = 0.0;
            if i > 0 {
                r += self.off[i - 1].abs();
            }
            if i + 1 < n {
                r += self.off[i].abs();
            }
            lo = lo.min(self.diag[i] - r);
            hi = hi.max(self.diag[i] + r);
        }
        (lo, hi)
    }

    /// The `count` smallest eigenvalues, ascending, each located by bisection
    /// on the Sturm count to a width of about `4 eps |lambda|` + absolute
    /// floor.
    pub fn lowest_eigenvalues(&self, count: usize) -> Result<Vec<f64>> {
        if count == 0 || count > self.n() {
            return Err(CoreError::InvalidInput(format!(
                "asked for {count} eigenvalues of a {}x{0} matrix",
                self.n()
            )));
        }
        let (lo, hi) = self.spectrum_bounds();
        let scale = lo.abs().max(hi.abs()).max(1.0);
        let tol = 4.0 * f64::EPSILON * scale;
        let mut out = Vec::with_capacity(count);
        for j in 0..count {
            // Find lambda_j: smallest x with count_below(x) >= j + 1.
            let mut a = if let Some(prev) = out.last() { *prev } else { lo };
            let mut b = hi;
            // Bisection keeps the invariant count(a) <= j < count(b).
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if b - a <= tol || mid <= a || mid >= b {
                    break;
                }
                if self.count_below(mid) > j {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            out.push(0.5 * (a + b));
        }
        Ok(out)
    }

    /// Eigenvector for an eigenvalue estimate, by inverse iteration with a
    /// partially pivoted tridiagonal solve. Returns a unit-norm vector whose
    /// sign is fixed by making the entry of largest magnitude positive.
    pub fn eigenvector(&self, lambda: f64) -> Result<Vec<f64>> {
        let n = self.n();
        // Deterministic, structureless start vector.
        let mut v: Vec<f64> = (0..n)
            .map(|i| {
                let s = (i as f64 + 1.0) * 0.754_877_666_246_692_8; // frac part of i * plastic-ish irrational
                2.0 * (s - s.floor()) - 1.0
            })
            .collect();
        normalize(&mut v);

        let mut residual = f64::INFINITY;
        for _ in 0..8 {
            let mut w = self.solve_shifted(lambda, &v)?;
            normalize(&mut w);
            v = w;
            residual = self.residual_norm(lambda, &v);
            if residual <= 1e-12 * self.op_norm_bound() {
                break;
            }
        }
        if residual > 1e-8 * self.op_norm_bound() {
            return Err(CoreError::Convergence(format!(
                "inverse iteration stalled: residual {residual:.3e} at lambda = {lambda:.6e}"
            )));
        }
        // Sign convention: largest-magnitude entry positive.
        let mut peak = 0usize;
        for i in 0..n {
            if v[i].abs() > v[peak].abs() {
                peak = i;
            }
        }
        if v[peak] < 0.0 {
            for x in &mut v {
                *x = -*x;
            }
        }
        Ok(v)
    }

    /// Upper bound on the operator norm (Gershgorin radius).
    pub fn op_norm_bound(&self) -> f64 {
        let (lo, hi) = self.spectrum_bounds();
        lo.abs().max(hi.abs())
    }

    /// ||A v - lambda v||_2 for a unit vector v.
    pub fn residual_norm(&self, lambda: f64, v: &[f64]) -> f64 {
        let n = self.n();
        let mut sum = 0.0;
        for i in 0..n {
            let mut r = (self.diag[i] - lambda) * v[i];
            if i > 0 {
                r += self.off[i - 1] * v[i - 1];
            }
            if i + 1 < n {
                r += self.off[i] * v[i + 1];
            }
            sum += r * r;
        }
        sum.sqrt()
    }

    /// Solve (A - lambda I) x = b by Gaussian elimination with partial
    /// pivoting on the three bands. A row swap pushes fill into a second
    /// superdiagonal, which back substitution then consumes. Near-singular
    /// pivots (expected: lambda is an eigenvalue) are nudged to `tiny`, which
    /// is exactly what inverse iteration wants.
    fn solve_shifted(&self, lambda: f64, b: &[f64]) -> Result<Vec<f64>> {
        let n = self.n();
        let mut d: Vec<f64> = self.diag.iter().map(|v| v - lambda).collect();
        // dl[i] = A[i+1][i], du[i] = A[i][i+1]; padded with zero for the
        // last row so the indexing below stays branch-free.
        let mut dl = vec![0.0; n];
        let mut du = vec![0.0; n];
        let mut du2 = vec![0.0; n];
        dl[..n - 1].copy_from_slice(&self.off[..n - 1]);
        du[..n - 1].copy_from_slice(&self.off[..n - 1]);
        let mut rhs = b.to_vec();
        let tiny = f64::EPSILON * self.op_norm_bound().max(f64::MIN_POSITIVE);
        let nudge = |p: f64| if p.abs() < tiny { tiny.copysign(p + f64::MIN_POSITIVE) } else { p };
        for i in 0..n - 1 {
            if dl[i].abs() > d[i].abs() {
                // Swap rows i and i+1, then eliminate.
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                let below_d = d[i + 1];
                let below_du = du[i + 1];
                d[i + 1] = du[i] - fact * below_d;
                du[i] = below_d;
                du2[i] = below_du;
                du[i + 1] = -fact * below_du;
                rhs.swap(i, i + 1);
                rhs[i + 1] -= fact * rhs[i];
            } else {
                let pivot = nudge(d[i]);
                d[i] = pivot;
                let fact = dl[i] / pivot;
                d[i + 1] -= fact * du[i];
                rhs[i + 1] -= fact * rhs[i];
            }
        }
        d[n - 1] = nudge(d[n - 1]);
        let mut x = vec![0.0; n];
        for i in (0..n).rev() {
            let mut s = rhs[i];
            if i + 1 < n {
                s -= du[i] * x[i + 1];
            }
            if i + 2 < n {
                s -= du2[i] * x[i + 2];
            }
            x[i] = s / d[i];
        }
        Ok(x)
    }
}

fn normalize(v: &mut [f64]) {
    let norm: f64 = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm > 0.0 {
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
}
