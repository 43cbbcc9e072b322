//! Local refinement error and the consistency errors built on it.
//!
//! A region is the set of all pixels sharing a label; spatially split
//! regions first with [`crate::mask::split_components`] if needed.

use crate::error::Result;
use crate::mask::ContingencyTable;
use crate::mask::{contingency_table, LabelMap};
use crate::sum::compensated_sum;

/// Per-pixel refinement error in both directions.
#[derive(Debug, Clone, PartialEq)]
pub struct LreField {
    width: usize,
    height: usize,
    /// `|R(a,p) \ R(b,p)| / |R(a,p)|`
    pub forward: Vec<f64>,
    /// `|R(b,p) \ R(a,p)| / |R(b,p)|`
    pub backward: Vec<f64>,
}

impl LreField {
    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }
}

pub fn lre_field(a: &LabelMap, b: &LabelMap) -> Result<LreField> {
    let (t, ai, bi) = crate::mask::contingency::contingency_with_indices(a, b)?;
    let rows = t.row_sums();
    let cols = t.col_sums();
    let (forward, backward) = ai
        .iter()
        .zip(&bi)
        .map(|(&i, &j)| {
            let (i, j) = (i as usize, j as usize);
            let cell = t.get(i, j);
            ((rows[i] - cell) as f64 / rows[i] as f64, (cols[j] - cell) as f64 / cols[j] as f64)
        })
        .unzip();
    Ok(LreField { width: a.width(), height: a.height(), forward, backward })
}

/// Per-cell refinement errors `(pixels, forward, backward)`; every pixel of
/// a cell shares the same pair.
fn cell_errors(t: &ContingencyTable) -> Vec<(f64, f64, f64)> {
    let rows = t.row_sums();
    let cols = t.col_sums();
    t.cells()
        .map(|(i, j, c)| (c as f64, (rows[i] - c) as f64 / rows[i] as f64, (cols[j] - c) as f64 / cols[j] as f64))
        .collect()
}

/// Local, global and bidirectional consistency errors of one comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConsistencyErrors {
    pub lce: f64,
    pub gce: f64,
    pub bce: f64,
}

pub fn consistency_errors(a: &LabelMap, b: &LabelMap) -> Result<ConsistencyErrors> {
    let t = contingency_table(a, b)?;
    let n = t.n() as f64;
    let cells = cell_errors(&t);
    let lce = compensated_sum(cells.iter().map(|&(c, f, b)| c * f.min(b))) / n;
    let bce = compensated_sum(cells.iter().map(|&(c, f, b)| c * f.max(b))) / n;
    let fwd = compensated_sum(cells.iter().map(|&(c, f, _)| c * f));
    let bwd = compensated_sum(cells.iter().map(|&(c, _, b)| c * b));
    Ok(ConsistencyErrors { lce, gce: fwd.min(bwd) / n, bce })
}

pub fn lce(a: &LabelMap, b: &LabelMap) -> Result<f64> {
    consistency_errors(a, b).map(|e| e.lce)
}

pub fn gce(a: &LabelMap, b: &LabelMap) -> Result<f64> {
    consistency_errors(a, b).map(|e| e.gce)
}

pub fn bce(a: &LabelMap, b: &LabelMap) -> Result<f64> {
    consistency_errors(a, b).map(|e| e.bce)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn squares() -> (LabelMap, LabelMap) {
        let gt = LabelMap::from_fn(100, 100, |x, y| u32::from((15..85).contains(&x) && (15..85).contains(&y))).unwrap();
        let auto =
            LabelMap::from_fn(100, 100, |x, y| u32::from((32..67).contains(&x) && (32..67).contains(&y))).unwrap();
        (auto, gt)
    }

    #[test]
    fn identical_maps_are_consistent() {
        let m = LabelMap::from_rows(&[[0, 1, 1], [2, 2, 1]]).unwrap();
        let f = lre_field(&m, &m).unwrap();
        assert!(f.forward.iter().chain(&f.backward).all(|&v| v == 0.0));
        let e = consistency_errors(&m, &m).unwrap();
        assert_eq!((e.lce, e.gce, e.bce), (0.0, 0.0, 0.0));
    }

    #[test]
    fn square_fixture_lre() {
        let (auto, gt) = squares();
        let f = lre_field(&auto, &gt).unwrap();
        let tp = 50 * 100 + 50;
        let tn = 0;
        assert_eq!(f.forward[tp], 0.0);
        assert_eq!(f.backward[tp], 0.75);
        assert!((f.forward[tn] - 3675.0 / 8775.0).abs() < 1e-15);
        assert_eq!(f.backward[tn], 0.0);
    }

    #[test]
    fn square_fixture_consistency() {
        let (auto, gt) = squares();
        let e = consistency_errors(&auto, &gt).unwrap();
        assert!((e.lce - 0.091875).abs() < 1e-12);
        assert!((e.gce - 0.18375).abs() < 1e-12);
        let bce = (1225.0 * 0.75 + 2.0 * 3675.0 * 5100.0 / 8775.0) / 10000.0;
        assert!((e.bce - bce).abs() < 1e-12);
        assert!((e.bce - 0.519).abs() < 5e-4);
    }

    #[test]
    fn single_region_gives_zero_lce() {
        let a = LabelMap::from_rows(&[[0, 1, 3], [2, 2, 1], [4, 0, 0]]).unwrap();
        let one = LabelMap::filled(3, 3, 0).unwrap();
        assert_eq!(lce(&a, &one).unwrap(), 0.0);
        assert_eq!(lce(&one, &a).unwrap(), 0.0);
        assert!(gce(&a, &one).unwrap() == 0.0);
        assert!(bce(&a, &one).unwrap() > 0.0);
    }
}
