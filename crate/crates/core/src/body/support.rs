//! Finite Fourier series used as support functions.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::vec2::Vec2;

/// A trigonometric polynomial
/// `p(phi) = a0 + sum_k (cos_k cos(k phi) + sin_k sin(k phi))`, `k = 1..=K`.
///
/// Index `i` of the coefficient lists holds harmonic `k = i + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct TrigSupport<S> {
    a0: S,
    cos: Vec<S>,
    sin: Vec<S>,
}

impl<S: Scalar> TrigSupport<S> {
    pub fn new(a0: S, cos: Vec<S>, sin: Vec<S>) -> Result<Self> {
        if cos.len() != sin.len() {
            return Err(Error::CoefficientLength { cos: cos.len(), sin: sin.len() });
        }
        if !a0.is_finite() || cos.iter().chain(sin.iter()).any(|c| !c.is_finite()) {
            return Err(Error::NonFinite);
        }
        Ok(Self { a0, cos, sin })
    }

    /// The constant function `p = r`: a disk of radius `r` about the origin.
    pub fn constant(r: S) -> Self {
        Self { a0: r, cos: Vec::new(), sin: Vec::new() }
    }

    /// Builds from `(cos_k, sin_k)` pairs for `k = 1, 2, ...`.
    pub fn from_harmonics(a0: S, harmonics: &[(S, S)]) -> Result<Self> {
        let (cos, sin) = harmonics.iter().copied().unzip();
        Self::new(a0, cos, sin)
    }

    pub fn a0(&self) -> S {
        self.a0
    }

    pub fn cos_coeffs(&self) -> &[S] {
        &self.cos
    }

    pub fn sin_coeffs(&self) -> &[S] {
        &self.sin
    }

    /// Highest harmonic `K`.
    pub fn degree(&self) -> usize {
        self.cos.len()
    }

    /// Coefficients of harmonic `k >= 1`, zero beyond the degree.
    pub fn harmonic(&self, k: usize) -> (S, S) {
        assert!(k >= 1, "harmonic index starts at 1");
        match (self.cos.get(k - 1), self.sin.get(k - 1)) {
            (Some(&c), Some(&s)) => (c, s),
            _ => (S::zero(), S::zero()),
        }
    }

    fn harmonics(&self) -> impl Iterator<Item = (S, S, S)> + '_ {
        self.cos
            .iter()
            .zip(&self.sin)
            .enumerate()
            .map(|(i, (&c, &s))| (S::from_count(i + 1), c, s))
    }

    /// Value of the derivative of the given order at `phi`.
    pub fn eval(&self, phi: S, order: u32) -> S {
        let mut out = [S::zero()];
        self.eval_derivs_from(phi, order, &mut out);
        out[0]
    }

    /// `[p, p', ..., p^(N-1)]` at `phi`, sharing the trigonometric evaluations.
    pub fn derivs<const N: usize>(&self, phi: S) -> [S; N] {
        let mut out = [S::zero(); N];
        self.eval_derivs_from(phi, 0, &mut out);
        out
    }

    /// Fills `out[j]` with the derivative of order `first + j`.
    fn eval_derivs_from(&self, phi: S, first: u32, out: &mut [S]) {
        for (j, v) in out.iter_mut().enumerate() {
            *v = if first as usize + j == 0 { self.a0 } else { S::zero() };
        }
        for (k, c, s) in self.harmonics() {
            if c == S::zero() && s == S::zero() {
                continue;
            }
            let (sn, cs) = (k * phi).sin_cos();
            let even = c * cs + s * sn;
            let odd = s * cs - c * sn;
            let mut kp = k.powi(first as i32);
            for (j, v) in out.iter_mut().enumerate() {
                let term = match (first as usize + j) % 4 {
                    0 => even,
                    1 => odd,
                    2 => -even,
                    _ => -odd,
                };
                *v = *v + kp * term;
                kp = kp * k;
            }
        }
    }

    /// Radius of curvature `p + p''` as a trigonometric polynomial.
    pub fn curvature_radius(&self) -> Self {
        self.map_harmonics(|k, c, s| {
            let f = S::one() - k * k;
            (c * f, s * f)
        })
    }

    /// Term-wise derivative.
    pub fn derivative(&self) -> Self {
        let mut d = self.map_harmonics(|k, c, s| (k * s, -k * c));
        d.a0 = S::zero();
        d
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: S, other: &Self) -> Self {
        let k = self.degree().max(other.degree());
        let mut cos = Vec::with_capacity(k);
        let mut sin = Vec::with_capacity(k);
        for i in 1..=k {
            let (c1, s1) = self.harmonic(i);
            let (c2, s2) = other.harmonic(i);
            cos.push(c1 + factor * c2);
            sin.push(s1 + factor * s2);
        }
        Self { a0: self.a0 + factor * other.a0, cos, sin }
    }

    /// Support function of the same body seen from `origin`:
    /// `p(phi) - <origin, u(phi)>`. Only the first harmonic changes.
    pub fn recentered(&self, origin: Vec2<S>) -> Self {
        let mut out = self.clone();
        if out.cos.is_empty() {
            out.cos.push(S::zero());
            out.sin.push(S::zero());
        }
        out.cos[0] = out.cos[0] - origin.x;
        out.sin[0] = out.sin[0] - origin.y;
        out
    }

    /// Support function of the body rotated counter-clockwise by `theta`
    /// about the origin: `phi -> p(phi - theta)`.
    pub fn rotated(&self, theta: S) -> Self {
        self.map_harmonics(|k, c, s| {
            let (sn, cs) = (k * theta).sin_cos();
            (c * cs - s * sn, c * sn + s * cs)
        })
    }

    /// Adds a constant (a parallel curve).
    pub fn offset(&self, delta: S) -> Self {
        let mut out = self.clone();
        out.a0 = out.a0 + delta;
        out
    }

    /// Upper bound `sum_k k^order |(c_k, s_k)|` on the derivative of the given
    /// order (plus `|a0|` for order zero).
    pub fn derivative_bound(&self, order: u32) -> S {
        let base = if order == 0 { self.a0.abs() } else { S::zero() };
        base + self.harmonics().map(|(k, c, s)| k.powi(order as i32) * c.hypot(s)).sum::<S>()
    }

    /// True when every harmonic has magnitude at most `tol`.
    pub fn is_constant(&self, tol: S) -> bool {
        self.harmonics().all(|(_, c, s)| c.abs() <= tol && s.abs() <= tol)
    }

    fn map_harmonics(&self, f: impl Fn(S, S, S) -> (S, S)) -> Self {
        let (cos, sin) = self.harmonics().map(|(k, c, s)| f(k, c, s)).unzip();
        Self { a0: self.a0, cos, sin }
    }
}
