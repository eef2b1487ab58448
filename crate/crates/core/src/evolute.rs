//! Evolute of the boundary: evaluation, cusp classification, sampling and
//! distance queries.
//!
//! With `rho = p + p''` the evolute is `e = z - rho u = p' u' - p'' u` and
//! its velocity is `e' = -rho' u`, so it is singular exactly where `rho` is
//! stationary.

use crate::body::{ConvexBody, TrigSupport};
use crate::error::{Error, Result};
use crate::quadrature::gauss_legendre;
use crate::roots::{golden_min, wrap, Crossing, RootSearch};
use crate::scalar::Scalar;
use crate::vec2::Vec2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CuspKind {
    /// `rho'` changes sign from - to +; the cusp points towards `z(phi0)`.
    MinOfRho,
    /// `rho'` changes sign from + to -; the cusp points away from `z(phi0)`.
    MaxOfRho,
    /// `rho'` vanishes without changing sign; the evolute stays C^1 there.
    Saddle,
}

impl CuspKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CuspKind::MinOfRho => "min",
            CuspKind::MaxOfRho => "max",
            CuspKind::Saddle => "saddle",
        }
    }

    /// True for the kinds where `rho'` changes sign.
    pub fn is_sign_change(self) -> bool {
        !matches!(self, CuspKind::Saddle)
    }
}

/// A stationary point of the radius of curvature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cusp<S> {
    pub phi: S,
    pub kind: CuspKind,
    /// `e(phi)`.
    pub location: Vec2<S>,
    /// `rho(phi)`.
    pub rho: S,
}

/// Samples of the evolute in increasing angle, cusps included.
#[derive(Debug, Clone, PartialEq)]
pub struct EvolutePolyline<S> {
    pub angles: Vec<S>,
    pub points: Vec<Vec2<S>>,
    /// Indices into `angles` that are stationary points of `rho`.
    pub cusp_indices: Vec<usize>,
    /// Kind of the stationary point at each entry of `cusp_indices`.
    pub cusp_kinds: Vec<CuspKind>,
}

impl<S: Scalar> EvolutePolyline<S> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

impl<S: Scalar> ConvexBody<S> {
    /// `e(phi) = p'(phi) u'(phi) - p''(phi) u(phi)`.
    pub fn evolute_point(&self, phi: S) -> Vec2<S> {
        evolute_of(self.support(), phi)
    }
}

pub(crate) fn evolute_of<S: Scalar>(p: &TrigSupport<S>, phi: S) -> Vec2<S> {
    let [_, p1, p2] = p.derivs::<3>(phi);
    Vec2::unit_tangent(phi) * p1 - Vec2::unit(phi) * p2
}

fn cusp_grid(degree: usize) -> usize {
    2048.max(128 * degree)
}

/// All stationary points of `rho` on `[0, 2pi)`, sorted by angle.
pub fn find_cusps<S: Scalar>(body: &ConvexBody<S>) -> Result<Vec<Cusp<S>>> {
    let rho = body.support().curvature_radius();
    let drho = rho.derivative();
    let tol = S::tolerances();
    let bound = drho.derivative_bound(0);
    if drho.is_constant(S::lit(tol.coefficient) * body.scale().max(S::one())) {
        return Err(Error::DegenerateCircle);
    }
    let search = RootSearch::new(cusp_grid(body.support().degree()), S::lit(tol.touching * 0.1) * bound);
    Ok(search
        .run(&drho)
        .into_iter()
        .map(|r| {
            let kind = match r.crossing {
                Crossing::Rising => CuspKind::MinOfRho,
                Crossing::Falling => CuspKind::MaxOfRho,
                Crossing::Touching => CuspKind::Saddle,
            };
            Cusp { phi: r.phi, kind, location: body.evolute_point(r.phi), rho: rho.eval(r.phi, 0) }
        })
        .collect())
}

/// Arc lengths of the evolute between consecutive sign-changing cusps,
/// starting with the arc that leaves the first cusp after `phi = 0`.
pub fn arc_lengths<S: Scalar>(body: &ConvexBody<S>) -> Result<Vec<S>> {
    let cusps: Vec<S> = find_cusps(body)?
        .into_iter()
        .filter(|c| c.kind.is_sign_change())
        .map(|c| c.phi)
        .collect();
    if cusps.len() < 2 {
        return Ok(Vec::new());
    }
    let drho = body.support().curvature_radius().derivative();
    let degree = S::from_count(body.support().degree() + 1);
    Ok((0..cusps.len())
        .map(|i| {
            let a = cusps[i];
            let b = if i + 1 < cusps.len() { cusps[i + 1] } else { cusps[0] + S::TAU() };
            let panels = ((b - a) * degree).ceil().to_usize().unwrap_or(1).max(1);
            gauss_legendre(|x| drho.eval(x, 0).abs(), a, b, panels)
        })
        .collect())
}

/// Alternating sum of the evolute arc lengths between cusps, which equals
/// the integral of `rho'` over a period and therefore vanishes.
pub fn alternating_arc_sum<S: Scalar>(body: &ConvexBody<S>) -> Result<S> {
    Ok(arc_lengths(body)?
        .into_iter()
        .enumerate()
        .map(|(i, l)| if i % 2 == 0 { l } else { -l })
        .sum())
}

/// `n` uniform samples of the evolute with the stationary points of `rho`
/// inserted (or marked when they coincide with a uniform sample).
pub fn sample_evolute<S: Scalar>(body: &ConvexBody<S>, n: usize) -> Result<EvolutePolyline<S>> {
    const MIN_SAMPLES: usize = 16;
    if n < MIN_SAMPLES {
        return Err(Error::TooFewSamples { got: n, min: MIN_SAMPLES });
    }
    let cusps = match find_cusps(body) {
        Ok(c) => c,
        Err(Error::DegenerateCircle) => Vec::new(),
        Err(e) => return Err(e),
    };
    let step = S::TAU() / S::from_count(n);
    let snap = S::lit(S::tolerances().merge);
    let mut entries: Vec<(S, Option<CuspKind>)> =
        (0..n).map(|i| (step * S::from_count(i), None)).collect();
    for c in &cusps {
        let nearest = (c.phi / step).round().to_usize().unwrap_or(0) % n;
        let gap = (entries[nearest].0 - c.phi).abs().min(S::TAU() - (entries[nearest].0 - c.phi).abs());
        if gap <= snap {
            entries[nearest] = (c.phi, Some(c.kind));
        } else {
            entries.push((c.phi, Some(c.kind)));
        }
    }
    entries.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite angles"));
    let mut poly = EvolutePolyline {
        angles: Vec::with_capacity(entries.len()),
        points: Vec::with_capacity(entries.len()),
        cusp_indices: Vec::new(),
        cusp_kinds: Vec::new(),
    };
    for (i, (phi, kind)) in entries.into_iter().enumerate() {
        poly.angles.push(phi);
        poly.points.push(body.evolute_point(phi));
        if let Some(k) = kind {
            poly.cusp_indices.push(i);
            poly.cusp_kinds.push(k);
        }
    }
    Ok(poly)
}

const DISTANCE_SAMPLES: usize = 4096;

/// Precomputed evolute samples answering distance queries for many points.
#[derive(Debug, Clone)]
pub struct EvoluteDistance<'a, S> {
    body: &'a ConvexBody<S>,
    points: Vec<Vec2<S>>,
}

impl<'a, S: Scalar> EvoluteDistance<'a, S> {
    pub fn new(body: &'a ConvexBody<S>) -> Self {
        let step = S::TAU() / S::from_count(DISTANCE_SAMPLES);
        let points = (0..DISTANCE_SAMPLES).map(|i| body.evolute_point(step * S::from_count(i))).collect();
        Self { body, points }
    }

    /// `min_phi |e(phi) - o|`.
    pub fn distance(&self, o: Vec2<S>) -> S {
        let n = self.points.len();
        let step = S::TAU() / S::from_count(n);
        let d2: Vec<S> = self.points.iter().map(|e| (*e - o).norm_squared()).collect();
        let tol = S::lit(S::tolerances().root_angle);
        let mut best = S::infinity();
        for i in 0..n {
            let (prev, next) = (d2[(i + n - 1) % n], d2[(i + 1) % n]);
            if d2[i] <= prev && d2[i] <= next {
                let center = step * S::from_count(i);
                let (_, v) = golden_min(
                    |x| (self.body.evolute_point(wrap(x)) - o).norm_squared(),
                    center - step,
                    center + step,
                    tol,
                );
                best = best.min(v).min(d2[i]);
            }
        }
        best.sqrt()
    }
}

/// Distance from `o` to the evolute.
pub fn distance_to_evolute<S: Scalar>(body: &ConvexBody<S>, o: Vec2<S>) -> S {
    EvoluteDistance::new(body).distance(o)
}
