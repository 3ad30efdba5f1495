//! Gauss-Legendre quadrature and cumulative integrals of smooth functions.

/// Gauss-Legendre nodes and weights on [-1, 1].
///
/// Nodes are the roots of the Legendre polynomial P_n, found by Newton
/// iteration from the Chebyshev-based initial guess; weights are
/// `2 / ((1 - x^2) P_n'(x)^2)`. Exact for polynomials of degree `2n - 1`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "need at least two nodes");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Initial guess (Abramowitz & Stegun 25.4.30 neighborhood).
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // Evaluate P_n and P_n' by the three-term recurrence.
                let mut p0 = 1.0;
                let mut p1 = x;
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-15 {
                    break;
                }
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussLegendre { nodes, weights }
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Integrate `f` over `[a, b]`.
    pub fn integrate(&self, a: f64, b: f64, mut f: impl FnMut(f64) -> f64) -> f64 {
        let mid = 0.5 * (a + b);
        let half = 0.5 * (b - a);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        sum * half
    }
}

/// Cumulative integral of `f` from `a`, evaluated at the `n_panels + 1`
/// uniform points spanning `[a, b]`. Each panel is integrated with the
/// supplied rule, so panel-edge values carry its full order.
pub fn cumulative_integral(
    rule: &GaussLegendre,
    a: f64,
    b: f64,
    n_panels: usize,
    mut f: impl FnMut(f64) -> f64,
) -> Vec<f64> {
    assert!(n_panels >= 1 && b > a);
    let h = (b - a) / n_panels as f64;
    let mut out = Vec::with_capacity(n_panels + 1);
    out.push(0.0);
    let mut acc = 0.0;
    for j in 0..n_panels {
        let left = a + j as f64 * h;
        acc += rule.integrate(left, left + h, &mut f);
        out.push(acc);
    }
    out
}
