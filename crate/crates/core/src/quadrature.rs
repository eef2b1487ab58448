//! Quadrature rules shared by the geometry and counting modules.

use crate::scalar::Scalar;

/// Result of a periodic trapezoid run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrapezoidRun<S> {
    /// Approximation of the integral over one period.
    pub value: S,
    /// Samples used by the final estimate.
    pub samples: usize,
    /// Difference between the last two estimates.
    pub change: S,
    /// Whether `change` fell below the requested tolerance before the cap.
    pub settled: bool,
}

/// Integrates a `2pi`-periodic function over `[0, 2pi)` with the trapezoid
/// rule, doubling the number of equispaced samples from `start` until two
/// successive estimates differ by less than `tol(value)` or `cap` is reached.
///
/// Earlier samples are reused at each doubling.
pub fn periodic_trapezoid<S, F, T>(mut f: F, start: usize, cap: usize, tol: T) -> TrapezoidRun<S>
where
    S: Scalar,
    F: FnMut(S) -> S,
    T: Fn(S) -> S,
{
    let [run] = periodic_trapezoid_n(|x| [f(x)], start, cap, |v: [S; 1]| tol(v[0]));
    run
}

/// Component-wise [`periodic_trapezoid`] of a vector-valued integrand. The
/// doubling stops once every component has settled below `tol(values)`.
pub fn periodic_trapezoid_n<S, F, T, const N: usize>(
    mut f: F,
    start: usize,
    cap: usize,
    tol: T,
) -> [TrapezoidRun<S>; N]
where
    S: Scalar,
    F: FnMut(S) -> [S; N],
    T: Fn([S; N]) -> S,
{
    let start = start.max(2);
    let tau = S::TAU();
    let mut n = start;
    let mut sum = [S::zero(); N];
    let mut accumulate = |sum: &mut [S; N], x: S| {
        for (s, v) in sum.iter_mut().zip(f(x)) {
            *s = *s + v;
        }
    };
    for i in 0..n {
        accumulate(&mut sum, tau * S::from_count(i) / S::from_count(n));
    }
    let mut value = sum.map(|s| s * tau / S::from_count(n));
    let mut change = [S::infinity(); N];
    let mut settled = false;
    while n < cap {
        let m = 2 * n;
        for i in (1..m).step_by(2) {
            accumulate(&mut sum, tau * S::from_count(i) / S::from_count(m));
        }
        n = m;
        let next = sum.map(|s| s * tau / S::from_count(n));
        for j in 0..N {
            change[j] = (next[j] - value[j]).abs();
        }
        value = next;
        let limit = tol(value);
        if change.iter().all(|c| *c < limit) {
            settled = true;
            break;
        }
    }
    std::array::from_fn(|j| TrapezoidRun { value: value[j], samples: n, change: change[j], settled })
}

const GAUSS_POINTS: usize = 16;

/// Nodes and weights of the Gauss-Legendre rule on `[-1, 1]`.
fn gauss_legendre_rule() -> ([f64; GAUSS_POINTS], [f64; GAUSS_POINTS]) {
    let n = GAUSS_POINTS;
    let mut nodes = [0.0; GAUSS_POINTS];
    let mut weights = [0.0; GAUSS_POINTS];
    for i in 0..n.div_ceil(2) {
        // Tricomi initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let p2 = ((2 * k - 1) as f64 * x * p1 - (k - 1) as f64 * p0) / k as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    (nodes, weights)
}

/// Composite 16-point Gauss-Legendre quadrature of `f` over `[a, b]`
/// split into `panels` equal panels.
pub fn gauss_legendre<S, F>(f: F, a: S, b: S, panels: usize) -> S
where
    S: Scalar,
    F: Fn(S) -> S,
{
    let (nodes, weights) = gauss_legendre_rule();
    let panels = panels.max(1);
    let width = (b - a) / S::from_count(panels);
    let half = width / S::lit(2.0);
    let mut total = S::zero();
    for j in 0..panels {
        let mid = a + width * S::from_count(j) + half;
        let panel: S = nodes
            .iter()
            .zip(weights.iter())
            .map(|(&x, &w)| S::lit(w) * f(mid + half * S::lit(x)))
            .sum();
        total = total + panel * half;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    #[test]
    fn trapezoid_is_exact_for_low_harmonics() {
        let run = periodic_trapezoid(|x: f64| 1.0 + (3.0 * x).cos().powi(2), 16, 1 << 10, |_| 1e-13);
        assert!(run.settled);
        assert!((run.value - 3.0 * PI).abs() < 1e-13);
    }

    #[test]
    fn trapezoid_converges_spectrally_for_analytic_integrand() {
        // integral of 1 / (2 - cos x) over a period is 2 pi / sqrt(3)
        let run = periodic_trapezoid(|x: f64| 1.0 / (2.0 - x.cos()), 8, 1 << 12, |_| 1e-14);
        assert!(run.settled);
        assert!((run.value - TAU / 3f64.sqrt()).abs() < 1e-13);
        assert!(run.samples <= 128);
    }

    #[test]
    fn gauss_legendre_polynomial_and_trig() {
        let v = gauss_legendre(|x: f64| x.powi(7) - 3.0 * x * x, -1.0, 2.0, 1);
        let exact = (2f64.powi(8) - 1.0) / 8.0 - (8.0 + 1.0);
        assert!((v - exact).abs() < 1e-12);
        let s = gauss_legendre(|x: f64| x.sin(), 0.0, PI, 4);
        assert!((s - 2.0).abs() < 1e-14);
    }

    #[test]
    fn gauss_weights_sum_to_two() {
        let (nodes, weights) = gauss_legendre_rule();
        assert!((weights.iter().sum::<f64>() - 2.0).abs() < 1e-14);
        assert!(nodes.windows(2).all(|w| w[0] < w[1]));
    }
}
