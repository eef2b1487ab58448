//! Floating point abstraction used throughout the crate.
//!
//! Every geometric routine is generic over [`Scalar`]. The numerical
//! thresholds that make sense for `f64` are far below the resolution of
//! `f32`, so each implementation carries its own [`Tolerances`].

use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Thresholds used by the root finders, quadrature engines and validators.
///
/// All values are expressed in `f64` and converted on use. Relative
/// thresholds are multiplied by a problem scale at the call site.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Width of the bracket at which bisection stops, in radians.
    pub root_angle: f64,
    /// Smallest certified radius of curvature accepted as strongly convex.
    pub convexity: f64,
    /// `|f| / scale` below which a grid-local extremum of `f` counts as a touching root.
    pub touching: f64,
    /// `|f'| / scale` below which a root is classified as degenerate.
    pub degenerate: f64,
    /// Roots closer than this (radians) are merged into one.
    pub merge: f64,
    /// `(f^2 + f'^2) / scale^2` below which the counting kernel uses its limit value.
    pub kernel_guard: f64,
    /// Absolute change between successive trapezoid doublings accepted as converged.
    pub quadrature: f64,
    /// Relative agreement required by the centroid quadrature.
    pub centroid: f64,
    /// Harmonic coefficients below this magnitude are treated as zero.
    pub coefficient: f64,
}

/// Real scalar type the crate can compute with.
pub trait Scalar:
    Float + FloatConst + FromPrimitive + ToPrimitive + Sum + Default + Debug + Display + Send + Sync + 'static
{
    /// Numerical thresholds appropriate for this precision.
    fn tolerances() -> Tolerances;

    /// Lossy conversion from an `f64` literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal must be representable")
    }

    #[inline]
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count must be representable")
    }

    #[inline]
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn tolerances() -> Tolerances {
        Tolerances {
            root_angle: 1e-12,
            convexity: 1e-9,
            touching: 1e-9,
            degenerate: 1e-8,
            merge: 1e-6,
            kernel_guard: 1e-16,
            quadrature: 1e-10,
            centroid: 1e-10,
            coefficient: 1e-12,
        }
    }
}

impl Scalar for f32 {
    fn tolerances() -> Tolerances {
        Tolerances {
            root_angle: 1e-6,
            convexity: 1e-5,
            touching: 1e-4,
            degenerate: 1e-3,
            merge: 1e-3,
            kernel_guard: 1e-8,
            quadrature: 1e-4,
            centroid: 1e-5,
            coefficient: 1e-6,
        }
    }
}
