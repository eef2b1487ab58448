//! Horizontal equilibria as roots of `p'`, and their count through the
//! winding number of the evolute.

mod region;

pub use region::{region_map, region_map_with_default_delta, RegionMap};

use crate::body::ConvexBody;
use crate::error::{Error, Result};
use crate::roots::{bisect, Crossing, RootSearch};
use crate::scalar::Scalar;
use crate::vec2::Vec2;
use crate::winding::{evolute_winding, zero_count_integral, CountingProfile, HalfInteger};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stability {
    /// Strict local minimum of the height of the center of mass.
    Stable,
    /// Strict local maximum.
    Unstable,
    /// The second-order test is inconclusive.
    Degenerate,
}

impl Stability {
    pub fn as_str(self) -> &'static str {
        match self {
            Stability::Stable => "stable",
            Stability::Unstable => "unstable",
            Stability::Degenerate => "degenerate",
        }
    }
}

/// A horizontal equilibrium: `p_O'(phi0) = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Equilibrium<S> {
    pub phi: S,
    /// Contact point `z(phi0)` in the coordinates of the body passed in.
    pub point: Vec2<S>,
    pub stability: Stability,
    /// Order of the zero of `p_O'`.
    pub multiplicity: usize,
}

/// A root of a counting profile with its local classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct ProfileRoot<S> {
    pub phi: S,
    pub stability: Stability,
    pub multiplicity: usize,
}

fn root_grid(degree: usize) -> usize {
    4096.max(256 * degree)
}

/// Distinct roots of the profile, classified by the sign of `f'` at the root.
/// Even-order roots are counted once.
pub(crate) fn profile_roots<S: Scalar>(profile: &CountingProfile<S>, degree: usize) -> Vec<ProfileRoot<S>> {
    let tol = S::tolerances();
    let f = profile.function();
    let scale = profile.scale();
    let df = f.derivative();
    let search = RootSearch::new(root_grid(degree), S::lit(tol.touching) * scale);
    let degenerate = S::lit(tol.degenerate) * scale;
    search
        .run(f)
        .into_iter()
        .map(|r| {
            let mut phi = r.phi;
            if r.crossing == Crossing::Touching {
                // centre merged roots on the extremum of f
                let w = S::lit(tol.merge) * S::lit(10.0);
                let (lo, hi) = (phi - w, phi + w);
                let dlo = df.eval(lo, 0);
                if dlo * df.eval(hi, 0) < S::zero() {
                    phi = bisect(|x| df.eval(x, 0), lo, hi, dlo, S::lit(tol.root_angle));
                }
            }
            let d = f.derivs::<6>(phi);
            let mut order = (1..6)
                .find(|&j| {
                    let limit = if j == 1 { degenerate } else { S::lit(1e-4) * f.derivative_bound(j as u32) };
                    d[j].abs() > limit
                })
                .unwrap_or(6);
            let touching = r.crossing == Crossing::Touching;
            if touching == (order % 2 == 1) {
                order += 1;
            }
            let stability = if d[1].abs() <= degenerate {
                Stability::Degenerate
            } else if d[1] > S::zero() {
                Stability::Stable
            } else {
                Stability::Unstable
            };
            ProfileRoot { phi: crate::roots::wrap(phi), stability, multiplicity: order }
        })
        .collect()
}

/// All horizontal equilibria of `body` with respect to the center of mass `o`.
pub fn find_horizontal_equilibria<S: Scalar>(body: &ConvexBody<S>, o: Vec2<S>) -> Result<Vec<Equilibrium<S>>> {
    let centered = body.recenter(o);
    let profile = CountingProfile::horizontal(centered.support());
    if profile.is_zero() {
        return Err(Error::DegenerateCircle);
    }
    Ok(profile_roots(&profile, centered.support().degree())
        .into_iter()
        .map(|r| Equilibrium {
            phi: r.phi,
            point: centered.boundary_point(r.phi) + o,
            stability: r.stability,
            multiplicity: r.multiplicity,
        })
        .collect())
}

/// Equilibrium count obtained directly and through `n = 2 - 2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountComparison {
    pub direct: usize,
    pub formula: i64,
    pub winding: HalfInteger,
}

/// Counts equilibria about `o` by root finding and by the evolute winding
/// number; fails with [`Error::Mismatch`] when the two disagree.
pub fn count_consistency<S: Scalar>(body: &ConvexBody<S>, o: Vec2<S>) -> Result<CountComparison> {
    let direct = find_horizontal_equilibria(body, o)?.len();
    let (winding, _) = evolute_winding(&body.recenter(o))?;
    let formula = winding.equilibrium_count();
    if direct as i64 != formula {
        return Err(Error::Mismatch { direct, formula });
    }
    Ok(CountComparison { direct, formula, winding })
}

/// Counts on a regular point of the evolute and just off it on either side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighbourCounts {
    /// The reference point `e(phi*)`.
    pub on: usize,
    /// At `e(phi*) + eps u'(phi*)`.
    pub side_a: usize,
    /// At `e(phi*) - eps u'(phi*)`.
    pub side_b: usize,
}

impl NeighbourCounts {
    /// Whether the on-curve count is the mean of the two sides.
    pub fn is_average(&self) -> bool {
        2 * self.on == self.side_a + self.side_b
    }
}

/// Equilibrium counts at the regular evolute point `e(phi*)` and at the two
/// points `1e-3 * a0` away along the evolute normal `+-u'(phi*)`.
///
/// The evolute tangent there is `u(phi*)`, since `e' = -rho' u`.
pub fn neighbour_average_check<S: Scalar>(body: &ConvexBody<S>, phi: S) -> Result<NeighbourCounts> {
    let drho = body.support().curvature_radius().derivative();
    let regular_tol = S::lit(1e-6) * drho.derivative_bound(0).max(S::lit(S::tolerances().coefficient));
    if !(drho.eval(phi, 0).abs() > regular_tol) {
        return Err(Error::NotRegularEvolutePoint { phi: phi.to_f64_lossy() });
    }
    let o = body.evolute_point(phi);
    let step = Vec2::unit_tangent(phi) * (S::lit(1e-3) * body.scale());
    let count = |c: Vec2<S>| zero_count_integral(&body.recenter(c)).map(|(n, _)| n);
    Ok(NeighbourCounts { on: count(o)?, side_a: count(o + step)?, side_b: count(o - step)? })
}
