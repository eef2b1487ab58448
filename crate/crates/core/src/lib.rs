//! Equilibria of planar convex bodies.
//!
//! A strongly convex body is described by a trigonometric support function
//! `p(phi)`. The crate evaluates its boundary and evolute, classifies the
//! cusps of the evolute, counts horizontal and oblique equilibria directly
//! as roots of `p'` (respectively `p' - tan(alpha) p`), and counts them a
//! second time through the winding number `m` of the evolute via
//! `n = 2 - 2m`.
//!
//! All geometry is generic over [`Scalar`] (`f32` or `f64`); the aliases at
//! the crate root fix the scalar to `f64`.

// `!(x > tol)` is used on purpose so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod body;
pub mod equilibria;
pub mod error;
pub mod evolute;
pub mod oblique;
pub mod quadrature;
pub mod roots;
pub mod scalar;
pub mod vec2;
pub mod winding;

pub use error::{Error, Result};
pub use scalar::{Scalar, Tolerances};

pub type TrigPolySupport = body::TrigSupport<f64>;
pub type ConvexBody = body::ConvexBody<f64>;
pub type PlanePoint = vec2::Vec2<f64>;
pub type PlaneVector = vec2::Vec2<f64>;
pub type Cusp = evolute::Cusp<f64>;
pub type EvolutePolyline = evolute::EvolutePolyline<f64>;
pub type QuadratureReport = winding::QuadratureReport<f64>;
pub type Equilibrium = equilibria::Equilibrium<f64>;
pub type RegionMap = equilibria::RegionMap<f64>;
pub type Incline = oblique::Incline<f64>;
pub type ObliqueEquilibrium = oblique::ObliqueEquilibrium<f64>;
pub type ObliqueBody = oblique::ObliqueBody<f64>;

pub type TrigPolySupportF32 = body::TrigSupport<f32>;
pub type ConvexBodyF32 = body::ConvexBody<f32>;
pub type PlanePointF32 = vec2::Vec2<f32>;

pub use evolute::CuspKind;
pub use equilibria::Stability;
pub use winding::HalfInteger;
