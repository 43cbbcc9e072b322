//! Boundary distances (Hausdorff, MASD, ASD, BDE, NSD) and the Hamming
//! family.

use crate::error::{Error, Result};
use crate::mask::{confusion_counts, distance_field, extract_boundary, BinaryMask, BoundarySet, DistanceField};
use crate::measure::Measure;

/// Summary of `d_min(p, target)` over every point `p` of a source set.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectedDistanceStats {
    /// Supremum-infimum distance.
    pub max: f64,
    pub mean: f64,
    pub sum: f64,
    pub count: usize,
}

/// Distances from each point of `src` to the set `field` was built from.
pub fn directed_stats(src: &BoundarySet, tgt: &BoundarySet, field: &DistanceField) -> Result<DirectedDistanceStats> {
    if src.is_empty() || tgt.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if field.dims() != tgt.dims() {
        return Err(Error::dims(field.dims(), tgt.dims()));
    }
    if let Some(p) = src.points().iter().find(|p| p.x >= field.width() || p.y >= field.height()) {
        return Err(Error::PointOutOfBounds { x: p.x, y: p.y, width: field.width(), height: field.height() });
    }
    let mut max = 0.0f64;
    let mut sum = 0.0;
    for &p in src.points() {
        let d = field.at(p);
        max = max.max(d);
        sum += d;
    }
    let count = src.len();
    Ok(DirectedDistanceStats { max, mean: sum / count as f64, sum, count })
}

/// Both directed summaries between two boundaries on the same grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SurfaceDistances {
    pub auto_to_gt: DirectedDistanceStats,
    pub gt_to_auto: DirectedDistanceStats,
}

impl SurfaceDistances {
    pub fn new(b_auto: &BoundarySet, b_gt: &BoundarySet) -> Result<Self> {
        if b_auto.dims() != b_gt.dims() {
            return Err(Error::dims(b_auto.dims(), b_gt.dims()));
        }
        if b_auto.is_empty() || b_gt.is_empty() {
            return Err(Error::EmptyPointSet);
        }
        let (w, h) = b_gt.dims();
        let to_gt = distance_field(b_gt, w, h)?;
        let to_auto = distance_field(b_auto, w, h)?;
        Ok(SurfaceDistances {
            auto_to_gt: directed_stats(b_auto, b_gt, &to_gt)?,
            gt_to_auto: directed_stats(b_gt, b_auto, &to_auto)?,
        })
    }

    pub fn hausdorff(&self) -> f64 {
        self.auto_to_gt.max.max(self.gt_to_auto.max)
    }

    pub fn masd(&self) -> f64 {
        0.5 * (self.auto_to_gt.mean + self.gt_to_auto.mean)
    }

    pub fn asd(&self) -> f64 {
        (self.gt_to_auto.sum + self.auto_to_gt.sum) / (self.auto_to_gt.count + self.gt_to_auto.count) as f64
    }

    /// Mean distance from the automatic boundary to the reference one.
    pub fn bde(&self) -> f64 {
        self.auto_to_gt.mean
    }
}

pub fn hausdorff(b_auto: &BoundarySet, b_gt: &BoundarySet) -> Result<f64> {
    SurfaceDistances::new(b_auto, b_gt).map(|s| s.hausdorff())
}

pub fn masd(b_auto: &BoundarySet, b_gt: &BoundarySet) -> Result<f64> {
    SurfaceDistances::new(b_auto, b_gt).map(|s| s.masd())
}

pub fn asd(b_auto: &BoundarySet, b_gt: &BoundarySet) -> Result<f64> {
    SurfaceDistances::new(b_auto, b_gt).map(|s| s.asd())
}

/// Boundary displacement error; directional, `b_auto` to `b_gt`.
pub fn bde(b_auto: &BoundarySet, b_gt: &BoundarySet) -> Result<f64> {
    if b_auto.dims() != b_gt.dims() {
        return Err(Error::dims(b_auto.dims(), b_gt.dims()));
    }
    if b_gt.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let (w, h) = b_gt.dims();
    let field = distance_field(b_gt, w, h)?;
    directed_stats(b_auto, b_gt, &field).map(|s| s.mean)
}

/// Normalised sum of distances: distance to the reference boundary summed
/// over misclassified pixels, over the same sum for the union of both
/// foregrounds.
pub fn nsd(auto: &BinaryMask, gt: &BinaryMask, b_gt: &BoundarySet) -> Result<Measure> {
    auto.check_same_dims(gt)?;
    if b_gt.dims() != gt.dims() {
        return Err(Error::dims(b_gt.dims(), gt.dims()));
    }
    let (w, h) = gt.dims();
    let field = distance_field(b_gt, w, h)?;
    let mut num = 0.0;
    let mut den = 0.0;
    for ((&a, &g), &d) in auto.bits().iter().zip(gt.bits()).zip(field.values()) {
        if a || g {
            den += d;
            if a != g {
                num += d;
            }
        }
    }
    Ok(Measure::ratio(num, den, "every foreground pixel lies on the reference boundary"))
}

/// Share of pixels whose foreground/background assignment differs.
pub fn hamming(auto: &BinaryMask, gt: &BinaryMask) -> Result<f64> {
    let c = confusion_counts(auto, gt)?;
    Ok((c.fn_ + c.fp) as f64 / auto.len() as f64)
}

/// Boundary pixels owned by only one boundary, over all boundary pixels.
pub fn boundary_hamming(b_auto: &BoundarySet, b_gt: &BoundarySet) -> Measure {
    let shared = b_auto.intersection_len(b_gt);
    let union = b_auto.len() + b_gt.len() - shared;
    Measure::ratio((union - shared) as f64, union as f64, "both boundaries are empty")
}

/// Inner boundaries of both masks.
pub fn boundaries(auto: &BinaryMask, gt: &BinaryMask) -> (BoundarySet, BoundarySet) {
    (extract_boundary(auto), extract_boundary(gt))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::Point;

    fn set(w: usize, h: usize, pts: &[(usize, usize)]) -> BoundarySet {
        BoundarySet::from_points(w, h, pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    fn square(w: usize, h: usize, x0: usize, y0: usize, side: usize) -> BinaryMask {
        BinaryMask::from_fn(w, h, |x, y| (x0..x0 + side).contains(&x) && (y0..y0 + side).contains(&y)).unwrap()
    }

    #[test]
    fn singletons() {
        let a = set(10, 10, &[(0, 0)]);
        let b = set(10, 10, &[(3, 4)]);
        let field = distance_field(&b, 10, 10).unwrap();
        let s = directed_stats(&a, &b, &field).unwrap();
        assert_eq!((s.max, s.mean, s.sum, s.count), (5.0, 5.0, 5.0, 1));
        assert_eq!(hausdorff(&a, &b).unwrap(), 5.0);
        assert_eq!(masd(&a, &b).unwrap(), 5.0);
        assert_eq!(asd(&a, &b).unwrap(), 5.0);
        assert_eq!(bde(&a, &b).unwrap(), 5.0);
    }

    #[test]
    fn identical_boundaries() {
        let b = extract_boundary(&square(20, 20, 3, 4, 9));
        let s = SurfaceDistances::new(&b, &b).unwrap();
        assert_eq!((s.hausdorff(), s.masd(), s.asd(), s.bde()), (0.0, 0.0, 0.0, 0.0));
        assert_eq!(boundary_hamming(&b, &b).unwrap(), 0.0);
    }

    #[test]
    fn translated_square() {
        let a = extract_boundary(&square(40, 40, 5, 5, 10));
        let b = extract_boundary(&square(40, 40, 10, 5, 10));
        // brute-force double loop
        let d = |src: &BoundarySet, tgt: &BoundarySet| {
            src.points()
                .iter()
                .map(|&p| tgt.points().iter().map(|&q| p.dist(q)).fold(f64::INFINITY, f64::min))
                .fold(0.0, f64::max)
        };
        let bf = d(&a, &b).max(d(&b, &a));
        assert_eq!(bf, 5.0);
        assert_eq!(hausdorff(&a, &b).unwrap(), bf);
    }

    #[test]
    fn empty_sets_are_errors() {
        let a = set(5, 5, &[]);
        let b = set(5, 5, &[(1, 1)]);
        assert!(matches!(hausdorff(&a, &b), Err(Error::EmptyPointSet)));
        assert!(matches!(bde(&b, &a), Err(Error::EmptyPointSet)));
        assert!(!boundary_hamming(&a, &a).is_defined());
    }

    #[test]
    fn square_fixture_boundaries() {
        // values from an independent numpy brute-force computation
        let gt = square(100, 100, 15, 15, 70);
        let auto = square(100, 100, 32, 32, 35);
        let (ba, bg) = boundaries(&auto, &gt);
        assert_eq!((ba.len(), bg.len()), (136, 276));
        let s = SurfaceDistances::new(&ba, &bg).unwrap();
        assert!((s.hausdorff() - 25.455_844_122_715_71).abs() < 1e-12);
        assert!((s.masd() - 18.154_742_108_035_11).abs() < 1e-12);
        assert!((s.asd() - 18.379_725_862_621_57).abs() < 1e-12);
        assert!((s.bde() - 17.492_647_058_823_53).abs() < 1e-12);
        let reverse = bde(&bg, &ba).unwrap();
        assert!((reverse - 18.816_837_157_246_69).abs() < 1e-12);
        assert_ne!(s.bde(), reverse);
        let n = nsd(&auto, &gt, &bg).unwrap().unwrap();
        assert!((n - 0.489_130_434_782_608_7).abs() < 1e-12);
        assert_eq!(boundary_hamming(&ba, &bg).unwrap(), 1.0);
        assert!((hamming(&auto, &gt).unwrap() - 0.3675).abs() < 1e-12);
    }

    #[test]
    fn nsd_poles() {
        let gt = square(20, 20, 4, 4, 8);
        let bg = extract_boundary(&gt);
        assert_eq!(nsd(&gt, &gt, &bg).unwrap().unwrap(), 0.0);
        let empty = BinaryMask::empty(20, 20).unwrap();
        assert_eq!(nsd(&empty, &gt, &bg).unwrap().unwrap(), 1.0);
        // a foreground that is all boundary has a zero denominator
        let thin = square(20, 20, 4, 4, 2);
        let bt = extract_boundary(&thin);
        assert!(!nsd(&thin, &thin, &bt).unwrap().is_defined());
    }

    #[test]
    fn hamming_poles() {
        let gt = square(10, 10, 2, 2, 5);
        assert_eq!(hamming(&gt, &gt).unwrap(), 0.0);
        assert_eq!(hamming(&gt.complement(), &gt).unwrap(), 1.0);
    }

    #[test]
    fn half_shared_boundary() {
        let gt = set(10, 10, &[(0, 0), (1, 0), (2, 0), (3, 0)]);
        let auto = set(10, 10, &[(0, 0), (1, 0)]);
        assert_eq!(boundary_hamming(&auto, &gt).unwrap(), 0.5);
    }
}
