//! JSON reports for `analyze` and `equilibria`.

use planar_equilibria::equilibria::{count_consistency, find_horizontal_equilibria};
use planar_equilibria::evolute::find_cusps;
use planar_equilibria::oblique::{find_oblique_equilibria, oblique_count_via_formula};
use planar_equilibria::{ConvexBody, Error, Incline, PlanePoint};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl From<PlanePoint> for Point {
    fn from(p: PlanePoint) -> Self {
        Self { x: p.x, y: p.y }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CuspEntry {
    pub phi: f64,
    pub kind: &'static str,
    pub location: Point,
    pub rho: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquilibriumEntry {
    pub phi: f64,
    pub contact: Point,
    pub stability: &'static str,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Counts {
    pub n_direct: usize,
    pub n_formula: i64,
    /// Winding number, a multiple of 1/2.
    pub m: f64,
}

/// Summary of a body and its equilibria about one center of mass.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct AnalysisReport {
    pub perimeter: f64,
    pub area: f64,
    pub centroid: Point,
    pub constant_width: Option<f64>,
    pub center: Point,
    pub cusps: Vec<CuspEntry>,
    pub equilibria: Vec<EquilibriumEntry>,
    /// `None` when the body is a disk centered at `center`.
    pub counts: Option<Counts>,
}

pub fn cusp_entries(body: &ConvexBody) -> Result<Vec<CuspEntry>, Error> {
    match find_cusps(body) {
        Ok(cusps) => Ok(cusps
            .into_iter()
            .map(|c| CuspEntry { phi: c.phi, kind: c.kind.as_str(), location: c.location.into(), rho: c.rho })
            .collect()),
        Err(Error::DegenerateCircle) => Ok(Vec::new()),
        Err(e) => Err(e),
    }
}

/// Horizontal equilibria about `center` with both counts; a disk about its
/// own center yields no equilibria and no counts.
pub fn horizontal(body: &ConvexBody, center: PlanePoint) -> Result<(Vec<EquilibriumEntry>, Option<Counts>), Error> {
    let eq = match find_horizontal_equilibria(body, center) {
        Ok(eq) => eq,
        Err(Error::DegenerateCircle) => return Ok((Vec::new(), None)),
        Err(e) => return Err(e),
    };
    let c = count_consistency(body, center)?;
    let entries = eq
        .into_iter()
        .map(|e| EquilibriumEntry {
            phi: e.phi,
            contact: e.point.into(),
            stability: e.stability.as_str(),
            multiplicity: e.multiplicity,
        })
        .collect();
    Ok((entries, Some(Counts { n_direct: c.direct, n_formula: c.formula, m: c.winding.to_f64() })))
}

pub fn analyze(body: &ConvexBody, center: Option<PlanePoint>) -> Result<AnalysisReport, Error> {
    let center = center.unwrap_or_else(|| body.centroid());
    let (equilibria, counts) = horizontal(body, center)?;
    Ok(AnalysisReport {
        perimeter: body.perimeter(),
        area: body.area(),
        centroid: body.centroid().into(),
        constant_width: body.constant_width(),
        center: center.into(),
        cusps: cusp_entries(body)?,
        equilibria,
        counts,
    })
}

/// Equilibria about `center`, horizontal or on an incline.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquilibriaReport {
    pub center: Point,
    /// Inclination in radians, present for oblique runs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    pub equilibria: Vec<EquilibriumEntry>,
    pub counts: Option<Counts>,
}

pub fn equilibria(body: &ConvexBody, center: PlanePoint, alpha: Option<f64>) -> Result<EquilibriaReport, Error> {
    let Some(alpha) = alpha else {
        let (equilibria, counts) = horizontal(body, center)?;
        return Ok(EquilibriaReport { center: center.into(), alpha: None, equilibria, counts });
    };
    let incline = Incline::new(alpha)?;
    let eq = find_oblique_equilibria(body, center, &incline)?;
    let (n, m) = oblique_count_via_formula(body, center, &incline)?;
    let equilibria: Vec<_> = eq
        .into_iter()
        .map(|e| EquilibriumEntry {
            phi: e.phi,
            contact: e.point.into(),
            stability: e.stability.as_str(),
            multiplicity: e.multiplicity,
        })
        .collect();
    let counts = Counts { n_direct: equilibria.len(), n_formula: n, m: m.to_f64() };
    Ok(EquilibriaReport { center: center.into(), alpha: Some(alpha), equilibria, counts: Some(counts) })
}
