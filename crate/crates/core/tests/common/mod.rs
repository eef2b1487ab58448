#![allow(dead_code)]

use planar_equilibria::body::TrigSupport;
use planar_equilibria::ConvexBody;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn body(a0: f64, cos: &[f64], sin: &[f64]) -> ConvexBody {
    ConvexBody::new(TrigSupport::new(a0, cos.to_vec(), sin.to_vec()).unwrap()).unwrap()
}

pub fn oval() -> ConvexBody {
    body(3.0, &[0.0, 0.3], &[0.0, 0.0])
}

/// Support function with a0 = 1 and `1 <= K <= 6` harmonics, scaled so that
/// `sum_{k>=2} (k^2 - 1) |h_k|` is at most 0.8, which keeps rho >= 0.2.
pub fn random_support(rng: &mut impl Rng) -> TrigSupport<f64> {
    let k_max = rng.gen_range(2..=6usize);
    let mut cos = vec![0.0; k_max];
    let mut sin = vec![0.0; k_max];
    let mut weight = 0.0;
    for k in 1..=k_max {
        let amp: f64 = rng.gen_range(0.0..1.0) / k as f64;
        let angle: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        cos[k - 1] = amp * angle.cos();
        sin[k - 1] = amp * angle.sin();
        weight += ((k * k) as f64 - 1.0) * amp;
    }
    let budget = rng.gen_range(0.1..0.8);
    let s = budget / weight;
    for k in 2..=k_max {
        cos[k - 1] *= s;
        sin[k - 1] *= s;
    }
    cos[0] *= 0.3;
    sin[0] *= 0.3;
    TrigSupport::new(1.0, cos, sin).unwrap()
}

pub fn random_body(rng: &mut impl Rng) -> ConvexBody {
    ConvexBody::new(random_support(rng)).unwrap()
}

/// Direct evaluation of p and its derivatives from the coefficients.
pub fn eval(p: &TrigSupport<f64>, phi: f64) -> (f64, f64, f64) {
    let mut v = (p.a0(), 0.0, 0.0);
    for (i, (&c, &s)) in p.cos_coeffs().iter().zip(p.sin_coeffs()).enumerate() {
        let k = (i + 1) as f64;
        let (sn, cs) = (k * phi).sin_cos();
        v.0 += c * cs + s * sn;
        v.1 += k * (s * cs - c * sn);
        v.2 -= k * k * (c * cs + s * sn);
    }
    v
}

/// Local maxima of `p'/p` by dense sampling, each polished by bisection
/// on the numerator `p'' p - p'^2` of the derivative. Sorted by value.
pub fn log_derivative_maxima(p: &TrigSupport<f64>) -> Vec<(f64, f64)> {
    let n = 20000;
    let h = std::f64::consts::TAU / n as f64;
    let g = |x: f64| {
        let (a, b, _) = eval(p, x);
        b / a
    };
    let dg = |x: f64| {
        let (a, b, c) = eval(p, x);
        c * a - b * b
    };
    let mut out = Vec::new();
    for i in 0..n {
        let x = i as f64 * h;
        if g(x) >= g(x - h) && g(x) > g(x + h) {
            let (mut lo, mut hi) = (x - h, x + h);
            for _ in 0..200 {
                let mid = 0.5 * (lo + hi);
                if dg(mid) > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let x = 0.5 * (lo + hi);
            out.push((x.rem_euclid(std::f64::consts::TAU), g(x)));
        }
    }
    out.sort_by(|a, b| b.1.partial_cmp(&a.1).unwrap());
    out
}

/// `(max, min)` of `p'/p`.
pub fn log_derivative_range(p: &TrigSupport<f64>) -> (f64, f64) {
    let max = log_derivative_maxima(p)[0].1;
    // q(phi) = p(-phi) has q'/q = -(p'/p)(-phi)
    let mirror = TrigSupport::new(p.a0(), p.cos_coeffs().to_vec(), p.sin_coeffs().iter().map(|s| -s).collect()).unwrap();
    let min = -log_derivative_maxima(&mirror)[0].1;
    (max, min)
}
