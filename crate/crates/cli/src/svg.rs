//! Static SVG scene: boundary, evolute with cusps, center of mass and
//! equilibrium contact points.

use std::fmt::Write;

use planar_equilibria::evolute::{find_cusps, sample_evolute};
use planar_equilibria::{ConvexBody, Error, PlanePoint};

use crate::format::num;
use crate::report::horizontal;

const BOUNDARY_SAMPLES: usize = 720;
const EVOLUTE_SAMPLES: usize = 720;

fn path(points: &[PlanePoint]) -> String {
    let mut d = String::new();
    for (i, p) in points.iter().enumerate() {
        let cmd = if i == 0 { 'M' } else { 'L' };
        write!(d, "{cmd}{},{} ", num(p.x), num(-p.y)).unwrap();
    }
    d.push('Z');
    d
}

fn marker(out: &mut String, class: &str, p: PlanePoint, r: f64) {
    writeln!(out, r#"  <circle class="{class}" cx="{}" cy="{}" r="{}"/>"#, num(p.x), num(-p.y), num(r)).unwrap();
}

/// Renders the scene; the output depends only on the inputs.
pub fn render_scene(body: &ConvexBody, center: PlanePoint) -> Result<String, Error> {
    let step = std::f64::consts::TAU / BOUNDARY_SAMPLES as f64;
    let boundary: Vec<PlanePoint> = (0..BOUNDARY_SAMPLES).map(|i| body.boundary_point(step * i as f64)).collect();
    // a disk's evolute is a single point and is not drawn
    let evolute = match find_cusps(body) {
        Ok(_) => Some(sample_evolute(body, EVOLUTE_SAMPLES)?),
        Err(Error::DegenerateCircle) => None,
        Err(e) => return Err(e),
    };
    let (equilibria, _) = horizontal(body, center)?;

    let mut lo = center;
    let mut hi = center;
    for p in boundary.iter().chain(evolute.iter().flat_map(|e| e.points.iter())) {
        lo = PlanePoint::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = PlanePoint::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let size = (hi.x - lo.x).max(hi.y - lo.y);
    let margin = 0.05 * size;
    let stroke = 0.004 * size;
    let r = 0.012 * size;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{} {} {} {}">"#,
        num(lo.x - margin),
        num(-hi.y - margin),
        num(hi.x - lo.x + 2.0 * margin),
        num(hi.y - lo.y + 2.0 * margin)
    )
    .unwrap();
    writeln!(
        out,
        r#"  <path class="boundary" d="{}" fill="none" stroke="black" stroke-width="{}"/>"#,
        path(&boundary),
        num(stroke)
    )
    .unwrap();
    if let Some(poly) = &evolute {
        writeln!(
            out,
            r#"  <path class="evolute" d="{}" fill="none" stroke="red" stroke-width="{}"/>"#,
            path(&poly.points),
            num(stroke)
        )
        .unwrap();
        for &i in &poly.cusp_indices {
            marker(&mut out, "cusp", poly.points[i], r);
        }
    }
    for e in &equilibria {
        marker(&mut out, "equilibrium", PlanePoint::new(e.contact.x, e.contact.y), r);
    }
    marker(&mut out, "center", center, 1.5 * r);
    out.push_str("</svg>\n");
    Ok(out)
}
