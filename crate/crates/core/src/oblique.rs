//! Equilibria on an inclined supporting line.
//!
//! On a line of inclination `alpha` the body rests at `phi0` when
//! `p'(phi0) = tan(alpha) p(phi0)`. The count of such contacts equals
//! `2 - 2 m_alpha` where `m_alpha` is the winding number of the perturbed
//! evolute `e - tan(alpha) J z` about the center of mass.

use crate::body::{min_curvature_radius, ConvexBody, TrigSupport};
use crate::equilibria::{profile_roots, Stability};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vec2::Vec2;
use crate::winding::{CountingProfile, HalfInteger};

/// A supporting line inclined by `alpha` in `(-pi/2, pi/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Incline<S> {
    alpha: S,
    downhill: Vec2<S>,
    normal: Vec2<S>,
}

impl<S: Scalar> Incline<S> {
    pub fn new(alpha: S) -> Result<Self> {
        if !(alpha.abs() < S::FRAC_PI_2()) {
            return Err(Error::InvalidIncline { alpha: alpha.to_f64_lossy() });
        }
        let (s, c) = alpha.sin_cos();
        Ok(Self { alpha, downhill: Vec2::new(c, -s), normal: Vec2::new(s, c) })
    }

    pub fn horizontal() -> Self {
        Self { alpha: S::zero(), downhill: Vec2::new(S::one(), S::zero()), normal: Vec2::new(S::zero(), S::one()) }
    }

    pub fn alpha(&self) -> S {
        self.alpha
    }

    /// `tan(alpha)`.
    pub fn slope(&self) -> S {
        self.alpha.tan()
    }

    /// Downhill unit vector `(cos alpha, -sin alpha)`.
    pub fn downhill(&self) -> Vec2<S> {
        self.downhill
    }

    /// Upward unit normal of the line, `(sin alpha, cos alpha)`.
    pub fn normal(&self) -> Vec2<S> {
        self.normal
    }
}

/// A contact angle at which the body rests on the incline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObliqueEquilibrium<S> {
    pub phi: S,
    /// Contact point `z(phi0)` in the coordinates of the body passed in.
    pub point: Vec2<S>,
    pub stability: Stability,
    pub multiplicity: usize,
}

fn profile<S: Scalar>(p: &TrigSupport<S>, incline: &Incline<S>) -> CountingProfile<S> {
    if incline.alpha() == S::zero() {
        CountingProfile::horizontal(p)
    } else {
        CountingProfile::inclined(p, incline.slope())
    }
}

/// Roots of `p_O' - tan(alpha) p_O`, classified by the sign of
/// `p'' - tan(alpha) p'` (equal to `p'' - tan^2(alpha) p` at a root).
/// An empty list is a valid answer when `alpha != 0`.
pub fn find_oblique_equilibria<S: Scalar>(
    body: &ConvexBody<S>,
    o: Vec2<S>,
    incline: &Incline<S>,
) -> Result<Vec<ObliqueEquilibrium<S>>> {
    let centered = body.recenter(o);
    let f = profile(centered.support(), incline);
    if f.is_zero() {
        return Err(Error::DegenerateCircle);
    }
    Ok(profile_roots(&f, centered.support().degree())
        .into_iter()
        .map(|r| ObliqueEquilibrium {
            phi: r.phi,
            point: centered.boundary_point(r.phi) + o,
            stability: r.stability,
            multiplicity: r.multiplicity,
        })
        .collect())
}

impl<S: Scalar> ConvexBody<S> {
    /// `e(phi) - tan(alpha) J z(phi)`.
    pub fn perturbed_evolute_point(&self, incline: &Incline<S>, phi: S) -> Vec2<S> {
        self.evolute_point(phi) - self.boundary_point(phi).perp() * incline.slope()
    }
}

/// `(p' - t p) u' - (p'' - t p') u`, the expanded form of the perturbed evolute.
pub fn perturbed_evolute_expanded<S: Scalar>(body: &ConvexBody<S>, incline: &Incline<S>, phi: S) -> Vec2<S> {
    let t = incline.slope();
    let [p, p1, p2] = body.support().derivs::<3>(phi);
    Vec2::unit_tangent(phi) * (p1 - t * p) - Vec2::unit(phi) * (p2 - t * p1)
}

/// Oblique count `n_alpha = 2 - 2 m_alpha` from the winding of the
/// perturbed evolute about `o`, checked against the root count.
pub fn oblique_count_via_formula<S: Scalar>(
    body: &ConvexBody<S>,
    o: Vec2<S>,
    incline: &Incline<S>,
) -> Result<(i64, HalfInteger)> {
    let centered = body.recenter(o);
    let (m, _) = profile(centered.support(), incline).winding()?;
    let formula = m.equilibrium_count();
    let direct = find_oblique_equilibria(body, o, incline)?.len();
    if direct as i64 != formula {
        return Err(Error::Mismatch { direct, formula });
    }
    Ok((formula, m))
}

/// A primitive of `p' - t p`, split as `periodic(phi) + slope * phi`.
#[derive(Debug, Clone, PartialEq)]
pub struct ObliquePrimitive<S> {
    pub periodic: TrigSupport<S>,
    /// Coefficient of the linear term, `-t a0`.
    pub slope: S,
}

impl<S: Scalar> ObliquePrimitive<S> {
    pub fn new(p: &TrigSupport<S>, incline: &Incline<S>) -> Self {
        let t = incline.slope();
        // periodic part of the primitive of p, without the a0 phi term
        let k = |i: usize| S::from_count(i + 1);
        let cos: Vec<S> = p.sin_coeffs().iter().enumerate().map(|(i, &s)| -s / k(i)).collect();
        let sin: Vec<S> = p.cos_coeffs().iter().enumerate().map(|(i, &c)| c / k(i)).collect();
        let integral = TrigSupport::new(S::zero(), cos, sin).expect("lengths match");
        Self { periodic: p.add_scaled(-t, &integral), slope: -t * p.a0() }
    }

    /// Increment of the primitive over one turn, `2 pi slope`.
    pub fn drift(&self) -> S {
        S::TAU() * self.slope
    }

    /// Evolute computed from the first two derivatives of the primitive.
    pub fn evolute_point(&self, phi: S) -> Vec2<S> {
        let [_, d1, d2] = self.periodic.derivs::<3>(phi);
        Vec2::unit_tangent(phi) * (d1 + self.slope) - Vec2::unit(phi) * d2
    }
}

/// Support function of the body whose evolute is the perturbed evolute.
/// Only exists when the primitive closes up, which for a body with
/// `a0 > 0` means `alpha = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ObliqueBody<S> {
    support: TrigSupport<S>,
    constant: S,
    rho_min: S,
}

impl<S: Scalar> ObliqueBody<S> {
    pub fn support(&self) -> &TrigSupport<S> {
        &self.support
    }

    /// Integration constant added to the periodic primitive.
    pub fn constant(&self) -> S {
        self.constant
    }

    pub fn rho_min(&self) -> S {
        self.rho_min
    }
}

/// Builds the support function `p_alpha` with `p_alpha' = p' - tan(alpha) p`
/// and the smallest constant that keeps `rho_alpha >= 0.1 rho_min`.
pub fn build_oblique_body<S: Scalar>(body: &ConvexBody<S>, incline: &Incline<S>) -> Result<ObliqueBody<S>> {
    let primitive = ObliquePrimitive::new(body.support(), incline);
    let drift = primitive.drift();
    if drift.abs() > S::lit(1e-10) {
        return Err(Error::NonPeriodic { drift: drift.to_f64_lossy() });
    }
    let (_, periodic_min) = min_curvature_radius(&primitive.periodic);
    let target = S::lit(0.1) * body.rho_min();
    let constant = (target - periodic_min).max(S::zero());
    Ok(ObliqueBody {
        support: primitive.periodic.offset(constant),
        constant,
        rho_min: periodic_min + constant,
    })
}

/// Position of the center of mass while rolling on the incline.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceSample<S> {
    pub phi: S,
    pub center: Vec2<S>,
}

impl<S: Scalar> TraceSample<S> {
    /// Height above the horizontal through the initial contact point.
    pub fn height(&self) -> S {
        self.center.y
    }
}

/// `O(phi) = (s(phi) - p'(phi)) v + p(phi) v_perp` at `samples` uniform
/// angles covering `[0, 2 pi]` inclusive, for the body recentered at `o`.
pub fn center_trace<S: Scalar>(
    body: &ConvexBody<S>,
    o: Vec2<S>,
    incline: &Incline<S>,
    samples: usize,
) -> Result<Vec<TraceSample<S>>> {
    if samples < 2 {
        return Err(Error::TooFewSamples { got: samples, min: 2 });
    }
    let centered = body.recenter(o);
    let step = S::TAU() / S::from_count(samples - 1);
    (0..samples)
        .map(|i| {
            let phi = if i + 1 == samples { S::TAU() } else { step * S::from_count(i) };
            let s = centered.arc_length(phi)?;
            let [p, p1] = centered.support().derivs::<2>(phi);
            Ok(TraceSample { phi, center: incline.downhill() * (s - p1) + incline.normal() * p })
        })
        .collect()
}
