//! The two counting integrals.
//!
//! For a profile `f` (the derivative `p'` of a support function, or
//! `p' - tan(alpha) p` on an incline) the number of distinct zeros of `f` is
//!
//! ```text
//! n = 1/pi  int (f'^2 - f f'') / (f^2 + f'^2) dphi
//! ```
//!
//! and the winding number of the curve `f u' - f' u` (the evolute when
//! `f = p'`) about the origin is
//!
//! ```text
//! m = 1/2pi int f (f + f'') / (f^2 + f'^2) dphi.
//! ```
//!
//! The integrands are bounded; at a zero of order `j` of `f` they extend
//! continuously with the values `1/j` and `(j-1)/j`.

use std::fmt;

use crate::body::{ConvexBody, TrigSupport};
use crate::error::{Error, Result};
use crate::evolute::EvolutePolyline;
use crate::quadrature::periodic_trapezoid_n;
use crate::scalar::Scalar;
use crate::vec2::Vec2;

/// An element of `Z/2`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct HalfInteger {
    twice: i64,
}

impl HalfInteger {
    pub const fn from_twice(twice: i64) -> Self {
        Self { twice }
    }

    pub const fn from_integer(m: i64) -> Self {
        Self { twice: 2 * m }
    }

    pub const fn twice(self) -> i64 {
        self.twice
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub fn to_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }

    /// `2 - 2m`, the equilibrium count belonging to this winding number.
    pub const fn equilibrium_count(self) -> i64 {
        2 - self.twice
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Outcome of one counting quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureReport<S> {
    /// Unrounded value (`n` or `m`).
    pub value: S,
    pub samples: usize,
    /// Distance to the nearest admissible value (`|n - round n|` or `|2m - round 2m|`).
    pub residual: S,
    /// Change of the value at the last doubling.
    pub change: S,
}

const START_SAMPLES: usize = 512;
const MAX_SAMPLES: usize = 1 << 20;
const COUNT_RESIDUAL: f64 = 0.05;
const WINDING_RESIDUAL: f64 = 0.1;

/// A trigonometric polynomial whose zeros are being counted, together
/// with the derivative bounds used to scale the guard thresholds.
#[derive(Debug, Clone)]
pub struct CountingProfile<S> {
    f: TrigSupport<S>,
    scale: S,
    bounds: [S; 6],
}

impl<S: Scalar> CountingProfile<S> {
    pub fn new(f: TrigSupport<S>) -> Self {
        let bounds = std::array::from_fn(|j| f.derivative_bound(j as u32));
        let scale = bounds[0] + bounds[1];
        Self { f, scale, bounds }
    }

    /// Profile `p'` for horizontal equilibria.
    pub fn horizontal(p: &TrigSupport<S>) -> Self {
        Self::new(p.derivative())
    }

    /// Profile `p' - t p` for equilibria on an incline with slope `t = tan(alpha)`.
    pub fn inclined(p: &TrigSupport<S>, slope: S) -> Self {
        Self::new(p.derivative().add_scaled(-slope, p))
    }

    pub fn function(&self) -> &TrigSupport<S> {
        &self.f
    }

    /// `max|f| + max|f'|` bound used as the length scale.
    pub fn scale(&self) -> S {
        self.scale
    }

    /// True when `f` vanishes identically.
    pub fn is_zero(&self) -> bool {
        let tol = S::lit(S::tolerances().coefficient) * self.f.derivative_bound(0).max(S::one());
        self.f.a0().abs() <= tol && self.f.is_constant(tol)
    }

    /// Point of the curve `f u' - f' u` at `phi`.
    pub fn curve_point(&self, phi: S) -> Vec2<S> {
        let [f0, f1] = self.f.derivs::<2>(phi);
        Vec2::unit_tangent(phi) * f0 - Vec2::unit(phi) * f1
    }

    /// Both integrands `[(f'^2 - f f'')/D, f (f + f'')/D]` at `phi`, where
    /// `D = f^2 + f'^2`, with the continuity limits substituted where `D`
    /// underflows relative to the scale.
    pub fn integrands(&self, phi: S) -> [S; 2] {
        let [f0, f1, f2] = self.f.derivs::<3>(phi);
        let denom = f0 * f0 + f1 * f1;
        let guard = S::lit(S::tolerances().kernel_guard);
        if denom > guard * self.scale * self.scale {
            return [(f1 * f1 - f0 * f2) / denom, f0 * (f0 + f2) / denom];
        }
        let order = self.zero_order(phi);
        let j = S::from_count(order);
        [S::one() / j, (j - S::one()) / j]
    }

    /// Order of the zero of `f` at `phi`, capped at 5; at least 2 since the
    /// caller has already seen `f` and `f'` vanish.
    fn zero_order(&self, phi: S) -> usize {
        let d = self.f.derivs::<6>(phi);
        let rel = S::lit(S::tolerances().kernel_guard).sqrt();
        (2..6).find(|&j| d[j].abs() > rel * self.bounds[j]).unwrap_or(5)
    }

    /// Runs both counting integrals in one doubling pass and returns
    /// `(n, m)` unrounded, in that order.
    fn integrate(&self) -> (QuadratureReport<S>, QuadratureReport<S>) {
        let tol = S::lit(S::tolerances().quadrature) * S::PI();
        let [n_run, m_run] = periodic_trapezoid_n(|phi| self.integrands(phi), START_SAMPLES, MAX_SAMPLES, |_| tol);
        let n = n_run.value / S::PI();
        let m = m_run.value / S::TAU();
        let n_report = QuadratureReport {
            value: n,
            samples: n_run.samples,
            residual: (n - n.round()).abs(),
            change: n_run.change / S::PI(),
        };
        let twice = S::lit(2.0) * m;
        let m_report = QuadratureReport {
            value: m,
            samples: m_run.samples,
            residual: (twice - twice.round()).abs(),
            change: m_run.change / S::TAU(),
        };
        (n_report, m_report)
    }

    /// Number of distinct zeros of `f` from the counting integral.
    pub fn zero_count(&self) -> Result<(usize, QuadratureReport<S>)> {
        if self.is_zero() {
            return Err(Error::DegenerateCircle);
        }
        let (report, _) = self.integrate();
        if !(report.residual <= S::lit(COUNT_RESIDUAL)) {
            return Err(not_converged(&report));
        }
        let n = report.value.round().to_i64().unwrap_or(-1);
        Ok((n.max(0) as usize, report))
    }

    /// Winding number of `f u' - f' u` about the origin, rounded to `Z/2`.
    pub fn winding(&self) -> Result<(HalfInteger, QuadratureReport<S>)> {
        if self.is_zero() {
            return Err(Error::DegeneratePointEvolute);
        }
        let (n_report, report) = self.integrate();
        if !(report.residual <= S::lit(WINDING_RESIDUAL)) {
            return Err(not_converged(&report));
        }
        let m = HalfInteger::from_twice((S::lit(2.0) * report.value).round().to_i64().unwrap_or(i64::MAX));
        // the integrands sum to one pointwise, so the two roundings must agree
        if n_report.residual <= S::lit(COUNT_RESIDUAL) {
            debug_assert_eq!(n_report.value.round().to_i64(), Some(m.equilibrium_count()));
        }
        Ok((m, report))
    }
}

fn not_converged<S: Scalar>(report: &QuadratureReport<S>) -> Error {
    Error::NotConverged { value: report.value.to_f64_lossy(), samples: report.samples }
}

/// Number of horizontal equilibria of `body` about its reference point,
/// from the zero-counting integral of `p'`.
pub fn zero_count_integral<S: Scalar>(body: &ConvexBody<S>) -> Result<(usize, QuadratureReport<S>)> {
    CountingProfile::horizontal(body.support()).zero_count()
}

/// Winding number of the evolute of `body` about its reference point.
///
/// The result is never positive for a convex body; a positive value is
/// reported as [`Error::PositiveWinding`].
pub fn evolute_winding<S: Scalar>(body: &ConvexBody<S>) -> Result<(HalfInteger, QuadratureReport<S>)> {
    let (m, report) = CountingProfile::horizontal(body.support()).winding()?;
    if m.twice() > 0 {
        return Err(Error::PositiveWinding { twice_m: m.twice() });
    }
    Ok((m, report))
}

/// Winding number of a closed polyline about `center` by summing the signed
/// angles subtended by its edges. The polyline is closed implicitly.
pub fn polygonal_winding<S: Scalar>(points: &[Vec2<S>], center: Vec2<S>) -> Result<S> {
    let eps = S::lit(1e-12);
    if let Some(index) = points.iter().position(|p| (*p - center).norm() <= eps) {
        return Err(Error::VertexAtCenter { index });
    }
    let n = points.len();
    let total: S = (0..n)
        .map(|i| {
            let a = points[i] - center;
            let b = points[(i + 1) % n] - center;
            a.cross(b).atan2(a.dot(b))
        })
        .sum();
    Ok(total / S::TAU())
}

/// [`polygonal_winding`] of a sampled evolute.
pub fn polyline_winding<S: Scalar>(poly: &EvolutePolyline<S>, center: Vec2<S>) -> Result<S> {
    polygonal_winding(&poly.points, center)
}
