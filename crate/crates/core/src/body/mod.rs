//! Strongly convex bodies described by their support function.
//!
//! The boundary is `z(phi) = p(phi) u(phi) + p'(phi) u'(phi)` with
//! `u = (cos, sin)`, and the radius of curvature is `rho = p + p''`.

mod support;

pub use support::TrigSupport;

use crate::error::{Error, Result};
use crate::quadrature::periodic_trapezoid;
use crate::roots::golden_min;
use crate::scalar::Scalar;
use crate::vec2::Vec2;

/// A validated support function with cached integral quantities.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvexBody<S> {
    support: TrigSupport<S>,
    rho_min: S,
    perimeter: S,
    area: S,
    centroid: Vec2<S>,
}

impl<S: Scalar> ConvexBody<S> {
    /// Certifies strong convexity and computes perimeter, area and centroid.
    pub fn new(support: TrigSupport<S>) -> Result<Self> {
        let (phi, rho_min) = min_curvature_radius(&support);
        if !(rho_min > S::lit(S::tolerances().convexity)) {
            return Err(Error::NotConvex { phi: phi.to_f64_lossy(), rho: rho_min.to_f64_lossy() });
        }
        Self::with_rho_min(support, rho_min)
    }

    fn with_rho_min(support: TrigSupport<S>, rho_min: S) -> Result<Self> {
        let perimeter = S::TAU() * support.a0();
        let area = area_of(&support);
        let centroid = centroid_of(&support, area)?;
        Ok(Self { support, rho_min, perimeter, area, centroid })
    }

    pub fn support(&self) -> &TrigSupport<S> {
        &self.support
    }

    /// Certified minimum of the radius of curvature.
    pub fn rho_min(&self) -> S {
        self.rho_min
    }

    pub fn perimeter(&self) -> S {
        self.perimeter
    }

    pub fn area(&self) -> S {
        self.area
    }

    /// Centroid of the homogeneous body.
    pub fn centroid(&self) -> Vec2<S> {
        self.centroid
    }

    /// Recomputes the centroid by quadrature instead of returning the cached value.
    pub fn integrate_centroid(&self) -> Result<Vec2<S>> {
        centroid_of(&self.support, self.area)
    }

    /// Mean support distance `a0`, used as the length scale of the body.
    pub fn scale(&self) -> S {
        self.support.a0()
    }

    /// The same body with `origin` as the new reference point. The radius
    /// of curvature does not change, so the convexity certificate carries over.
    pub fn recenter(&self, origin: Vec2<S>) -> Self {
        if origin == Vec2::zero() {
            return self.clone();
        }
        let support = self.support.recentered(origin);
        Self {
            support,
            rho_min: self.rho_min,
            perimeter: self.perimeter,
            area: self.area,
            centroid: self.centroid - origin,
        }
    }

    /// The body rotated counter-clockwise by `theta` about the reference point.
    pub fn rotate(&self, theta: S) -> Self {
        let support = self.support.rotated(theta);
        let (s, c) = theta.sin_cos();
        let o = self.centroid;
        Self {
            support,
            rho_min: self.rho_min,
            perimeter: self.perimeter,
            area: self.area,
            centroid: Vec2::new(c * o.x - s * o.y, s * o.x + c * o.y),
        }
    }

    /// Derivative of the support function of order `order`.
    pub fn eval(&self, phi: S, order: u32) -> S {
        self.support.eval(phi, order)
    }

    pub fn curvature_radius(&self, phi: S) -> S {
        let [p, _, p2] = self.support.derivs::<3>(phi);
        p + p2
    }

    /// `z(phi) = p u + p' u'`.
    pub fn boundary_point(&self, phi: S) -> Vec2<S> {
        let [p, p1] = self.support.derivs::<2>(phi);
        Vec2::unit(phi) * p + Vec2::unit_tangent(phi) * p1
    }

    /// Arc length of the boundary from `phi = 0` to `phi`, in closed form.
    pub fn arc_length(&self, phi: S) -> Result<S> {
        if !(phi >= S::zero() && phi <= S::TAU()) {
            return Err(Error::OutOfRange { phi: phi.to_f64_lossy() });
        }
        let p = &self.support;
        // antiderivative of p from 0
        let mut integral = p.a0() * phi;
        for k in 1..=p.degree() {
            let (c, s) = p.harmonic(k);
            let kf = S::from_count(k);
            let (sn, cs) = (kf * phi).sin_cos();
            integral = integral + (c * sn - s * (cs - S::one())) / kf;
        }
        Ok(integral + p.eval(phi, 1) - p.eval(S::zero(), 1))
    }

    /// Centroid of the boundary curve (uniform mass per unit length).
    pub fn boundary_centroid(&self) -> Result<Vec2<S>> {
        let p = &self.support;
        let moment = trapezoid_vec(p, |phi| {
            let [v, v1] = p.derivs::<2>(phi);
            Vec2::unit(phi) * (v * v - v1 * v1 / S::lit(2.0))
        })?;
        Ok(moment * (S::one() / self.perimeter))
    }

    /// Width `2 a0` if every even harmonic vanishes, i.e. `p(phi) + p(phi + pi)` is constant.
    pub fn constant_width(&self) -> Option<S> {
        let tol = S::lit(S::tolerances().coefficient);
        let p = &self.support;
        let even_vanish = (2..=p.degree()).step_by(2).all(|k| {
            let (c, s) = p.harmonic(k);
            c.abs() <= tol && s.abs() <= tol
        });
        even_vanish.then(|| S::lit(2.0) * p.a0())
    }
}

/// Sample count used to certify the minimum of `rho`.
fn convexity_grid(degree: usize) -> usize {
    1024.max(64 * degree)
}

/// Minimum of `rho = p + p''` over the circle by dense sampling and
/// golden-section refinement of every sampled local minimum.
pub(crate) fn min_curvature_radius<S: Scalar>(p: &TrigSupport<S>) -> (S, S) {
    let rho = p.curvature_radius();
    let n = convexity_grid(p.degree());
    let step = S::TAU() / S::from_count(n);
    let values: Vec<S> = (0..n).map(|i| rho.eval(step * S::from_count(i), 0)).collect();
    let tol = S::lit(S::tolerances().root_angle);
    let mut best = (S::zero(), S::infinity());
    for i in 0..n {
        let prev = values[(i + n - 1) % n];
        let next = values[(i + 1) % n];
        if values[i] <= prev && values[i] <= next {
            let center = step * S::from_count(i);
            let (x, v) = golden_min(|x| rho.eval(x, 0), center - step, center + step, tol);
            let (x, v) = if values[i] < v { (center, values[i]) } else { (x, v) };
            if v < best.1 {
                best = (crate::roots::wrap(x), v);
            }
        }
    }
    best
}

/// `A = 1/2 int (p^2 - p'^2)` via Parseval:
/// `pi a0^2 + pi/2 sum (1 - k^2)(c_k^2 + s_k^2)`.
fn area_of<S: Scalar>(p: &TrigSupport<S>) -> S {
    let pi = S::PI();
    let mut a = pi * p.a0() * p.a0();
    for k in 1..=p.degree() {
        let (c, s) = p.harmonic(k);
        let kf = S::from_count(k);
        a = a + pi / S::lit(2.0) * (S::one() - kf * kf) * (c * c + s * s);
    }
    a
}

fn centroid_of<S: Scalar>(p: &TrigSupport<S>, area: S) -> Result<Vec2<S>> {
    let moment = trapezoid_vec(p, |phi| {
        let [v, v1, v2] = p.derivs::<3>(phi);
        (Vec2::unit(phi) * v + Vec2::unit_tangent(phi) * v1) * (v * (v + v2))
    })?;
    Ok(moment * (S::one() / (S::lit(3.0) * area)))
}

/// Periodic trapezoid of a vector-valued integrand; both components must
/// settle within the centroid tolerance relative to the body scale.
fn trapezoid_vec<S: Scalar>(p: &TrigSupport<S>, f: impl Fn(S) -> Vec2<S>) -> Result<Vec2<S>> {
    let tol = S::lit(S::tolerances().centroid);
    let scale = p.derivative_bound(0).powi(3).max(S::min_positive_value());
    let start = 64.max(8 * p.degree().next_power_of_two());
    let cap = 1 << 16;
    let threshold = |v: S| tol * v.abs().max(scale);
    let x = periodic_trapezoid(|phi| f(phi).x, start, cap, threshold);
    let y = periodic_trapezoid(|phi| f(phi).y, start, cap, threshold);
    for run in [x, y] {
        if !run.settled {
            return Err(Error::QuadratureDiverged {
                samples: run.samples,
                change: run.change.to_f64_lossy(),
            });
        }
    }
    Ok(Vec2::new(x.value, y.value))
}
