//! Root isolation for trigonometric polynomials on the circle.
//!
//! Roots are bracketed by sign changes on a uniform grid and polished by
//! bisection. Even-order roots, which do not change sign, are picked up as
//! grid-local minima of `|f|` whose nearby extremum (a root of `f'`) is
//! within a touching tolerance of zero. Roots closer than the merge
//! distance are fused; the fused root's kind follows the net sign change.

use std::cmp::Ordering;

use crate::body::TrigSupport;
use crate::scalar::Scalar;

/// How `f` behaves across a root, scanning in increasing angle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Crossing {
    /// `f` goes from negative to positive.
    Rising,
    /// `f` goes from positive to negative.
    Falling,
    /// `f` keeps its sign.
    Touching,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CircleRoot<S> {
    /// Angle in `[0, 2pi)`.
    pub phi: S,
    pub crossing: Crossing,
}

/// Parameters of one search.
#[derive(Debug, Clone, Copy)]
pub struct RootSearch<S> {
    /// Number of uniform grid samples on `[0, 2pi)`.
    pub grid: usize,
    /// Absolute threshold on `|f|` at an extremum for a touching root.
    pub touch_tol: S,
    /// Bisection stops when the bracket is narrower than this.
    pub angle_tol: S,
    /// Roots closer than this are merged.
    pub merge: S,
}

impl<S: Scalar> RootSearch<S> {
    pub fn new(grid: usize, touch_tol: S) -> Self {
        let tol = S::tolerances();
        Self { grid, touch_tol, angle_tol: S::lit(tol.root_angle), merge: S::lit(tol.merge) }
    }

    /// All distinct roots of `f` in `[0, 2pi)`, sorted by angle.
    ///
    /// Returns an empty list for the zero polynomial; callers that care must
    /// rule that case out first.
    pub fn run(&self, f: &TrigSupport<S>) -> Vec<CircleRoot<S>> {
        let n = self.grid.max(8);
        let tau = S::TAU();
        let angle = |i: usize| tau * S::from_count(i) / S::from_count(n);
        let values: Vec<S> = (0..n).map(|i| f.eval(angle(i), 0)).collect();
        if values.iter().all(|v| *v == S::zero()) {
            return Vec::new();
        }
        let df = f.derivative();
        let at = |i: isize| values[i.rem_euclid(n as isize) as usize];

        // (phi, sign before, sign after)
        let mut raw: Vec<(S, i8, i8)> = Vec::new();
        for i in 0..n {
            let a = at(i as isize);
            let b = at(i as isize + 1);
            if a * b < S::zero() {
                let phi = bisect(|x| f.eval(x, 0), angle(i), angle(i + 1), a, self.angle_tol);
                raw.push((phi, sign(a), sign(b)));
            } else if a == S::zero() {
                let before = (1..n as isize).map(|d| at(i as isize - d)).find(|v| *v != S::zero());
                let after = (1..n as isize).map(|d| at(i as isize + d)).find(|v| *v != S::zero());
                raw.push((angle(i), before.map_or(0, sign), after.map_or(0, sign)));
            } else {
                let (prev, next) = (at(i as isize - 1), at(i as isize + 1));
                let same_sign = prev * a > S::zero() && next * a > S::zero();
                if same_sign && a.abs() <= prev.abs() && a.abs() <= next.abs() {
                    let x = extremum_near(&df, angle(i), tau / S::from_count(n), self.angle_tol);
                    if f.eval(x, 0).abs() <= self.touch_tol {
                        raw.push((x, sign(a), sign(a)));
                    }
                }
            }
        }
        self.merge_cyclic(raw)
    }

    fn merge_cyclic(&self, mut raw: Vec<(S, i8, i8)>) -> Vec<CircleRoot<S>> {
        let tau = S::TAU();
        for r in raw.iter_mut() {
            r.0 = wrap(r.0);
        }
        raw.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal));
        let mut groups: Vec<Vec<(S, i8, i8)>> = Vec::new();
        for r in raw {
            match groups.last_mut() {
                Some(g) if r.0 - g.last().expect("groups are non-empty").0 <= self.merge => g.push(r),
                _ => groups.push(vec![r]),
            }
        }
        if groups.len() > 1 {
            let first = groups[0][0].0;
            let last = groups.last().and_then(|g| g.last()).expect("non-empty").0;
            if first + tau - last <= self.merge {
                let mut tail = groups.pop().expect("len > 1");
                for r in tail.iter_mut() {
                    r.0 = r.0 - tau;
                }
                tail.append(&mut groups[0]);
                groups[0] = tail;
            }
        }
        let mut roots: Vec<CircleRoot<S>> = groups
            .into_iter()
            .map(|g| {
                let before = g.first().expect("non-empty").1;
                let after = g.last().expect("non-empty").2;
                let phi = g.iter().map(|r| r.0).sum::<S>() / S::from_count(g.len());
                let crossing = match (before, after) {
                    (b, a) if b < 0 && a > 0 => Crossing::Rising,
                    (b, a) if b > 0 && a < 0 => Crossing::Falling,
                    _ => Crossing::Touching,
                };
                CircleRoot { phi: wrap(phi), crossing }
            })
            .collect();
        roots.sort_by(|a, b| a.phi.partial_cmp(&b.phi).unwrap_or(Ordering::Equal));
        roots
    }
}

fn sign<S: Scalar>(v: S) -> i8 {
    if v > S::zero() {
        1
    } else if v < S::zero() {
        -1
    } else {
        0
    }
}

/// Maps an angle into `[0, 2pi)`.
pub fn wrap<S: Scalar>(phi: S) -> S {
    let tau = S::TAU();
    let r = phi % tau;
    let r = if r < S::zero() { r + tau } else { r };
    if r >= tau {
        S::zero()
    } else {
        r
    }
}

/// Bisection on a bracket `[lo, hi]` with `f(lo) = f_lo` of opposite sign to `f(hi)`.
pub fn bisect<S: Scalar>(f: impl Fn(S) -> S, mut lo: S, mut hi: S, f_lo: S, tol: S) -> S {
    let lo_negative = f_lo < S::zero();
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        let mid = (lo + hi) / S::lit(2.0);
        let v = f(mid);
        if v == S::zero() {
            return mid;
        }
        if (v < S::zero()) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo + hi) / S::lit(2.0)
}

/// Location of the extremum of `f` nearest to `center`, found as a root of
/// `df` within one grid step on either side; falls back to `center`.
fn extremum_near<S: Scalar>(df: &TrigSupport<S>, center: S, step: S, tol: S) -> S {
    let (lo, hi) = (center - step, center + step);
    let (dlo, dmid, dhi) = (df.eval(lo, 0), df.eval(center, 0), df.eval(hi, 0));
    if dmid == S::zero() {
        center
    } else if dlo * dmid < S::zero() {
        bisect(|x| df.eval(x, 0), lo, center, dlo, tol)
    } else if dmid * dhi < S::zero() {
        bisect(|x| df.eval(x, 0), center, hi, dmid, tol)
    } else {
        center
    }
}

/// Golden-section minimisation of a unimodal function on `[a, b]`.
pub fn golden_min<S: Scalar>(f: impl Fn(S) -> S, mut a: S, mut b: S, tol: S) -> (S, S) {
    let inv_phi = (S::lit(5.0).sqrt() - S::one()) / S::lit(2.0);
    let mut c = b - (b - a) * inv_phi;
    let mut d = a + (b - a) * inv_phi;
    let (mut fc, mut fd) = (f(c), f(d));
    for _ in 0..200 {
        if (b - a).abs() <= tol {
            break;
        }
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - (b - a) * inv_phi;
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + (b - a) * inv_phi;
            fd = f(d);
        }
    }
    let x = (a + b) / S::lit(2.0);
    let fx = f(x);
    [(c, fc), (d, fd), (x, fx)]
        .into_iter()
        .min_by(|p, q| p.1.partial_cmp(&q.1).unwrap_or(Ordering::Equal))
        .expect("three candidates")
}
