use rayon::prelude::*;

use crate::body::ConvexBody;
use crate::error::{Error, Result};
use crate::evolute::EvoluteDistance;
use crate::scalar::Scalar;
use crate::vec2::Vec2;
use crate::winding::evolute_winding;

/// Equilibrium counts `n(O)` sampled at the cell centers of a raster grid.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionMap<S> {
    /// Lower-left corner of the bounding box.
    pub min: Vec2<S>,
    /// Upper-right corner of the bounding box.
    pub max: Vec2<S>,
    pub columns: usize,
    pub rows: usize,
    /// Row-major counts, `None` where the quadrature did not converge.
    pub counts: Vec<Option<i64>>,
    /// Row-major flags: cell center within `delta` of the evolute.
    pub near_evolute: Vec<bool>,
    pub delta: S,
}

impl<S: Scalar> RegionMap<S> {
    /// Center of cell `(column, row)`; row 0 is at the bottom.
    pub fn cell_center(&self, column: usize, row: usize) -> Vec2<S> {
        cell_center(self.min, self.max, self.columns, self.rows, column, row)
    }

    pub fn index(&self, column: usize, row: usize) -> usize {
        row * self.columns + column
    }

    pub fn count(&self, column: usize, row: usize) -> Option<i64> {
        self.counts[self.index(column, row)]
    }

    pub fn is_near_evolute(&self, column: usize, row: usize) -> bool {
        self.near_evolute[self.index(column, row)]
    }

    /// Cell diagonal length.
    pub fn cell_diagonal(&self) -> S {
        let w = (self.max.x - self.min.x) / S::from_count(self.columns);
        let h = (self.max.y - self.min.y) / S::from_count(self.rows);
        w.hypot(h)
    }
}

fn cell_center<S: Scalar>(min: Vec2<S>, max: Vec2<S>, columns: usize, rows: usize, i: usize, j: usize) -> Vec2<S> {
    let half = S::lit(0.5);
    Vec2::new(
        min.x + (max.x - min.x) * (S::from_count(i) + half) / S::from_count(columns),
        min.y + (max.y - min.y) * (S::from_count(j) + half) / S::from_count(rows),
    )
}

/// Rasterises `n(O) = 2 - 2 m(O)` over the box `[min, max]`.
///
/// Cells whose center lies within `delta` of the evolute are flagged but
/// still carry the rounded count. Cells are computed in parallel; the
/// result does not depend on the schedule.
pub fn region_map<S: Scalar>(
    body: &ConvexBody<S>,
    min: Vec2<S>,
    max: Vec2<S>,
    columns: usize,
    rows: usize,
    delta: S,
) -> Result<RegionMap<S>> {
    if columns < 2 || rows < 2 {
        return Err(Error::InvalidGrid(format!("resolution {columns}x{rows} is below 2x2")));
    }
    if !(max.x > min.x && max.y > min.y) {
        return Err(Error::InvalidGrid("bounding box is empty".into()));
    }
    let distance = EvoluteDistance::new(body);
    let cells: Vec<(Option<i64>, bool)> = (0..columns * rows)
        .into_par_iter()
        .map(|k| {
            let o = cell_center(min, max, columns, rows, k % columns, k / columns);
            let near = distance.distance(o) < delta;
            let count = evolute_winding(&body.recenter(o)).ok().map(|(m, _)| m.equilibrium_count());
            (count, near)
        })
        .collect();
    let (counts, near_evolute) = cells.into_iter().unzip();
    Ok(RegionMap { min, max, columns, rows, counts, near_evolute, delta })
}

/// [`region_map`] with `delta = 0.01 * a0`.
pub fn region_map_with_default_delta<S: Scalar>(
    body: &ConvexBody<S>,
    min: Vec2<S>,
    max: Vec2<S>,
    columns: usize,
    rows: usize,
) -> Result<RegionMap<S>> {
    region_map(body, min, max, columns, rows, S::lit(1e-2) * body.scale())
}
