//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any criterion fails.

mod common;

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI, TAU};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::{body, log_derivative_maxima, log_derivative_range, oval, random_body, rng};
use planar_equilibria::body::TrigSupport;
use planar_equilibria::equilibria::{
    count_consistency, find_horizontal_equilibria, neighbour_average_check, region_map,
};
use planar_equilibria::evolute::{alternating_arc_sum, distance_to_evolute, find_cusps};
use planar_equilibria::oblique::{find_oblique_equilibria, oblique_count_via_formula};
use planar_equilibria::winding::evolute_winding;
use planar_equilibria::{ConvexBody, Error, HalfInteger, Incline, PlanePoint, Stability};
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn random_bodies(seed: u64, count: usize) -> Vec<ConvexBody> {
    let mut r = rng(seed);
    (0..count).map(|_| random_body(&mut r)).collect()
}

fn formula_identity() -> Outcome {
    let start = Instant::now();
    let mut r = rng(11);
    let bodies = random_bodies(1, 100);
    let (mut converged, mut total) = (0, 0);
    for (i, b) in bodies.iter().enumerate() {
        let mut centers = 0;
        while centers < 10 {
            let o = b.centroid() + PlanePoint::new(r.gen_range(-0.6..0.6), r.gen_range(-0.6..0.6));
            if distance_to_evolute(b, o) <= 0.05 * b.scale() {
                continue;
            }
            centers += 1;
            total += 1;
            match count_consistency(b, o) {
                Ok(c) => {
                    check(c.direct as i64 == 2 - c.winding.twice(), format!("body {i}: identity broken"))?;
                    converged += 1;
                }
                Err(Error::NotConverged { .. }) => {}
                Err(e) => return Err(format!("body {i} at ({}, {}): {e}", o.x, o.y)),
            }
        }
    }
    let elapsed = start.elapsed();
    check(converged * 100 >= total * 99, format!("only {converged}/{total} converged"))?;
    check(elapsed < Duration::from_secs(30), format!("took {elapsed:?}"))?;
    Ok(format!("{converged}/{total} converged, all n = 2 - 2m, {:.1} s", elapsed.as_secs_f64()))
}

fn centroid_bound() -> Outcome {
    let mut least = usize::MAX;
    for (i, b) in random_bodies(1, 100).iter().enumerate() {
        let n = find_horizontal_equilibria(b, b.centroid()).map_err(|e| format!("body {i}: {e}"))?.len();
        check(n >= 4, format!("body {i}: only {n} equilibria about the centroid"))?;
        least = least.min(n);
    }
    Ok(format!("minimum count about the centroid is {least}"))
}

fn offset_disk() -> Outcome {
    let b = body(1.0, &[-0.3], &[0.0]);
    let eq = find_horizontal_equilibria(&b, PlanePoint::zero()).map_err(|e| e.to_string())?;
    check(eq.len() == 2, format!("{} equilibria", eq.len()))?;
    check(eq[0].phi.abs() < 1e-10 && eq[0].stability == Stability::Stable, "no stable equilibrium at 0")?;
    check((eq[1].phi - PI).abs() < 1e-10 && eq[1].stability == Stability::Unstable, "no unstable equilibrium at pi")?;
    let (m, _) = evolute_winding(&b).map_err(|e| e.to_string())?;
    check(m == HalfInteger::from_integer(0), format!("m = {m}"))?;
    // the evolute of a disk is its center, here (-0.3, 0)
    let center = PlanePoint::new(-0.3, 0.0);
    for i in 0..64 {
        let e = b.evolute_point(TAU * i as f64 / 64.0);
        check((e - center).norm() < 1e-10, format!("evolute point ({}, {})", e.x, e.y))?;
    }
    Ok("2 equilibria (stable at 0, unstable at pi), m = 0, evolute is the point (-0.3, 0)".into())
}

fn oval_fixture() -> Outcome {
    let b = oval();
    for (x, n, twice_m) in [(0.0, 4, -2), (1.0, 4, -2), (2.5, 2, 0)] {
        let c = count_consistency(&b, PlanePoint::new(x, 0.0)).map_err(|e| e.to_string())?;
        check(c.direct == n && c.winding.twice() == twice_m, format!("at ({x}, 0): n = {}, m = {}", c.direct, c.winding))?;
    }
    let cusps = find_cusps(&b).map_err(|e| e.to_string())?;
    check(cusps.len() == 4, format!("{} cusps", cusps.len()))?;
    let expected = [(1.2, 0.0), (0.0, -1.2), (-1.2, 0.0), (0.0, 1.2)];
    for (c, (x, y)) in cusps.iter().zip(expected) {
        check((c.location - PlanePoint::new(x, y)).norm() < 1e-8, format!("cusp at ({}, {})", c.location.x, c.location.y))?;
    }
    let sum = alternating_arc_sum(&b).map_err(|e| e.to_string())?;
    check(sum.abs() < 1e-8, format!("alternating sum {sum}"))?;
    Ok(format!("counts 4/4/2, cusps at (+-1.2, 0), (0, +-1.2), alternating sum {sum:.1e}"))
}

fn constant_width() -> Outcome {
    let b = body(2.0, &[0.0, 0.0, 0.1], &[0.0, 0.0, 0.0]);
    check(b.constant_width() == Some(4.0), format!("width {:?}", b.constant_width()))?;
    let mut gap: f64 = 0.0;
    for i in 0..2000 {
        let phi = TAU * i as f64 / 2000.0;
        gap = gap.max((b.evolute_point(phi) - b.evolute_point(phi + PI)).norm());
    }
    check(gap < 1e-10, format!("evolute period gap {gap}"))?;
    let c = count_consistency(&b, PlanePoint::zero()).map_err(|e| e.to_string())?;
    check(c.direct == 6, format!("n = {} at the origin", c.direct))?;
    let mut r = rng(5);
    let mut seen = Vec::new();
    while seen.len() < 20 {
        let o = PlanePoint::new(r.gen_range(-0.4..0.4), r.gen_range(-0.4..0.4));
        if distance_to_evolute(&b, o) <= 0.05 * b.scale() {
            continue;
        }
        let c = count_consistency(&b, o).map_err(|e| format!("({}, {}): {e}", o.x, o.y))?;
        check(c.direct % 4 == 2, format!("n = {} at ({}, {})", c.direct, o.x, o.y))?;
        seen.push(c.direct);
    }
    seen.sort();
    seen.dedup();
    Ok(format!("width 4, period gap {gap:.1e}, n = 6 at origin, random centers give n in {seen:?}"))
}

fn on_evolute() -> Outcome {
    let b = oval();
    let offsets = [-0.3, 0.0, 0.3];
    for i in 0..10 {
        let phi = FRAC_PI_4 + (i / 3) as f64 * FRAC_PI_2 + offsets[i % 3];
        let o = b.evolute_point(phi);
        let (m, report) = evolute_winding(&b.recenter(o)).map_err(|e| format!("phi {phi}: {e}"))?;
        check(m.twice() % 2 != 0, format!("phi {phi}: 2m = {}", m.twice()))?;
        check(report.residual < 0.1, format!("phi {phi}: residual {}", report.residual))?;
        check(m.equilibrium_count() % 2 == 1, format!("phi {phi}: n even"))?;
        let nb = neighbour_average_check(&b, phi).map_err(|e| format!("phi {phi}: {e}"))?;
        check(nb.is_average(), format!("phi {phi}: {nb:?}"))?;
        check(nb.on as i64 == m.equilibrium_count(), format!("phi {phi}: on-count {} vs {}", nb.on, m))?;
    }
    Ok("10 evolute points: 2m odd, n odd, on-count is the mean of the sides".into())
}

fn skewed_family(c: f64) -> ConvexBody {
    let d = 9.0 - 43.0 * c * c;
    body(3.0, &[36.0 * c * c / d, 3.0 * c, 2.0 * c], &[-9.0 * (4.0 - 9.0 * c) * c * c / d, 3.0 * c, 0.0])
}

fn skewed_fixture() -> Outcome {
    let exact = TrigSupport::new(3.0, vec![36.0 / 857.0, 0.3, 0.2], vec![-279.0 / 8570.0, 0.3, 0.0]).unwrap();
    let b = ConvexBody::new(exact).map_err(|e| e.to_string())?;
    check(b.rho_min() > 0.0, "not convex")?;
    let g = b.integrate_centroid().map_err(|e| e.to_string())?;
    check(g.norm() < 1e-8, format!("centroid ({}, {})", g.x, g.y))?;
    let (max, min) = log_derivative_range(b.support());
    check(max + min > 0.0, format!("max + min = {}", max + min))?;
    let t = 0.5 * (max - min);
    let up = find_oblique_equilibria(&b, PlanePoint::zero(), &Incline::new(t.atan()).unwrap()).map_err(|e| e.to_string())?;
    let down = find_oblique_equilibria(&b, PlanePoint::zero(), &Incline::new(-t.atan()).unwrap()).map_err(|e| e.to_string())?;
    check(!up.is_empty() && down.is_empty(), format!("{} roots at alpha, {} at -alpha", up.len(), down.len()))?;
    Ok(format!(
        "rho_min {:.4}, centroid {:.1e}, max + min of p'/p = {:.5}, tan(alpha) = {t:.4}: {} vs 0 equilibria",
        b.rho_min(),
        g.norm(),
        max + min,
        up.len()
    ))
}

fn single_tangency() -> Outcome {
    let b = skewed_family(0.05);
    let maxima = log_derivative_maxima(b.support());
    let (phi_max, max) = maxima[0];
    check(maxima.len() == 1 || maxima[1].1 < max - 1e-6, "maximum of p'/p is not unique")?;
    let at = find_oblique_equilibria(&b, PlanePoint::zero(), &Incline::new(max.atan()).unwrap()).map_err(|e| e.to_string())?;
    check(at.len() == 1, format!("{} equilibria at tan(alpha) = max", at.len()))?;
    check(at[0].stability == Stability::Degenerate, format!("{:?} at the maximum", at[0].stability))?;
    check((at[0].phi - phi_max).abs() < 1e-5, format!("root at {} vs maximiser {phi_max}", at[0].phi))?;
    let below = find_oblique_equilibria(&b, PlanePoint::zero(), &Incline::new((0.95 * max).atan()).unwrap())
        .map_err(|e| e.to_string())?;
    let mut kinds: Vec<_> = below.iter().map(|e| e.stability).collect();
    kinds.sort_by_key(|s| s.as_str());
    check(kinds == [Stability::Stable, Stability::Unstable], format!("{kinds:?} at 0.95 max"))?;
    Ok(format!("max p'/p = {max:.6} at phi = {phi_max:.4}: 1 degenerate root, 2 roots (stable, unstable) at 0.95 max"))
}

fn oblique_formula() -> Outcome {
    let (mut checked, mut skipped) = (0, 0);
    for (i, b) in random_bodies(3, 50).iter().enumerate() {
        let o = b.centroid();
        for t in [0.02, 0.05, 0.1] {
            let incline = Incline::new(f64::atan(t)).unwrap();
            let roots = find_oblique_equilibria(b, o, &incline).map_err(|e| e.to_string())?;
            if roots.iter().any(|r| r.stability == Stability::Degenerate) {
                skipped += 1;
                continue;
            }
            match oblique_count_via_formula(b, o, &incline) {
                Ok((n, _)) => {
                    check(n == roots.len() as i64, format!("body {i}, t = {t}"))?;
                    checked += 1;
                }
                Err(Error::NotConverged { .. }) => skipped += 1,
                Err(e) => return Err(format!("body {i}, t = {t}: {e}")),
            }
        }
        let (max, _) = log_derivative_range(b.recenter(o).support());
        let steep = Incline::new((max + 0.06).atan()).unwrap();
        let (n, m) = oblique_count_via_formula(b, o, &steep).map_err(|e| format!("body {i} steep: {e}"))?;
        check(n == 0 && m == HalfInteger::from_integer(1), format!("body {i} steep: n = {n}, m = {m}"))?;
    }
    Ok(format!("{checked} cases agree ({skipped} skipped); n = 0, m = 1 beyond max p'/p for all 50"))
}

fn grid_components(mask: &[bool], cols: usize, rows: usize, diagonal: bool) -> Vec<usize> {
    // label per cell, 0 = not in mask
    let mut label = vec![0; mask.len()];
    let mut next = 0;
    for start in 0..mask.len() {
        if !mask[start] || label[start] != 0 {
            continue;
        }
        next += 1;
        let mut stack = vec![start];
        label[start] = next;
        while let Some(k) = stack.pop() {
            let (i, j) = ((k % cols) as i64, (k / cols) as i64);
            for di in -1..=1i64 {
                for dj in -1..=1i64 {
                    if (di, dj) == (0, 0) || (!diagonal && di != 0 && dj != 0) {
                        continue;
                    }
                    let (a, b) = (i + di, j + dj);
                    if a < 0 || b < 0 || a >= cols as i64 || b >= rows as i64 {
                        continue;
                    }
                    let n = b as usize * cols + a as usize;
                    if mask[n] && label[n] == 0 {
                        label[n] = next;
                        stack.push(n);
                    }
                }
            }
        }
    }
    label
}

fn region_map_fixture() -> Outcome {
    let b = oval();
    let (cols, rows) = (41, 41);
    let cell = 4.0 / 41.0;
    let delta = 0.5 * cell * std::f64::consts::SQRT_2;
    let start = Instant::now();
    let map = region_map(&b, PlanePoint::new(-2.0, -2.0), PlanePoint::new(2.0, 2.0), cols, rows, delta)
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    check(elapsed < Duration::from_secs(10), format!("took {elapsed:?}"))?;
    for k in 0..cols * rows {
        if !map.near_evolute[k] {
            check(matches!(map.counts[k], Some(2) | Some(4)), format!("cell {k}: {:?}", map.counts[k]))?;
        }
    }
    // pad by one ring so the outside is a single region
    let (pc, pr) = (cols + 2, rows + 2);
    let padded = |f: &dyn Fn(usize) -> bool, pad: bool| -> Vec<bool> {
        (0..pc * pr)
            .map(|k| {
                let (i, j) = (k % pc, k / pc);
                if i == 0 || j == 0 || i == pc - 1 || j == pr - 1 {
                    pad
                } else {
                    f((j - 1) * cols + (i - 1))
                }
            })
            .collect()
    };
    let center = 21 * pc + 21;
    let four = padded(&|k| !map.near_evolute[k] && map.counts[k] == Some(4), false);
    let labels = grid_components(&four, pc, pr, false);
    check(four[center], "origin cell is not in the 4-region")?;
    check(labels.iter().all(|&l| l == 0 || l == labels[center]), "4-region is not connected")?;
    let outside: Vec<bool> = four.iter().map(|v| !v).collect();
    let out_labels = grid_components(&outside, pc, pr, true);
    check(outside.iter().zip(&out_labels).all(|(&o, &l)| !o || l == out_labels[0]), "4-region has a hole")?;
    let flagged = padded(&|k| map.near_evolute[k], false);
    let f_labels = grid_components(&flagged, pc, pr, true);
    let first = f_labels.iter().copied().find(|&l| l != 0).ok_or("no flagged cells")?;
    check(f_labels.iter().all(|&l| l == 0 || l == first), "flagged cells are not connected")?;
    let free: Vec<bool> = flagged.iter().map(|v| !v).collect();
    let free_labels = grid_components(&free, pc, pr, false);
    check(free_labels[center] != free_labels[0], "flagged cells do not enclose the origin")?;
    let n_flag = map.near_evolute.iter().filter(|&&f| f).count();
    let n_four = four.iter().filter(|&&f| f).count();
    Ok(format!(
        "{n_four} cells with n = 4 form one simply connected region, {n_flag} flagged cells form a closed band, {:.2} s",
        elapsed.as_secs_f64()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("formula identity n = 2 - 2m on random bodies", formula_identity),
        ("at least four equilibria about the centroid", centroid_bound),
        ("offset disk", offset_disk),
        ("oval fixture", oval_fixture),
        ("constant width trefoil", constant_width),
        ("half-integer winding on the evolute", on_evolute),
        ("asymmetric oblique fixture", skewed_fixture),
        ("single degenerate oblique equilibrium", single_tangency),
        ("oblique formula n = 2 - 2m", oblique_formula),
        ("region map of the oval", region_map_fixture),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {detail}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
