//! Exact Euclidean distance transform.
//!
//! Two separable passes of the lower-envelope-of-parabolas method
//! (Felzenszwalb & Huttenlocher). All envelope arithmetic is carried out on
//! integer squared distances with rational breakpoints, so the result matches
//! a brute-force minimum bit for bit.

use super::{BoundarySet, Point};
use crate::error::{Error, Result};

/// Per-pixel distance to the nearest site, in pixel units.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceField {
    width: usize,
    height: usize,
    sq: Vec<u64>,
    dist: Vec<f64>,
}

impl DistanceField {
    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn at(&self, p: Point) -> f64 {
        self.dist[p.y * self.width + p.x]
    }

    pub fn squared_at(&self, p: Point) -> u64 {
        self.sq[p.y * self.width + p.x]
    }

    /// Row-major distances.
    pub fn values(&self) -> &[f64] {
        &self.dist
    }
}

// Breakpoint between two parabolas as a fraction num/den with den > 0;
// `None` stands for minus infinity.
type Breakpoint = Option<(i128, i128)>;

/// 1-D squared distance transform of `f`, where `None` marks a cell with no
/// site. Writes `None` everywhere when `f` has no finite entry.
fn envelope_1d(f: &[Option<u64>], out: &mut [Option<u64>], v: &mut Vec<usize>, z: &mut Vec<Breakpoint>) {
    v.clear();
    z.clear();
    for (q, fq) in f.iter().enumerate() {
        let Some(fq) = *fq else { continue };
        let hq = fq as i128 + (q * q) as i128;
        loop {
            let Some(&p) = v.last() else {
                v.push(q);
                z.push(None);
                break;
            };
            let hp = f[p].expect("envelope holds finite cells") as i128 + (p * p) as i128;
            let num = hq - hp;
            let den = 2 * (q - p) as i128;
            let dominated = match z.last().copied().flatten() {
                None => false,
                Some((zn, zd)) => num * zd <= zn * den,
            };
            if dominated {
                v.pop();
                z.pop();
            } else {
                v.push(q);
                z.push(Some((num, den)));
                break;
            }
        }
    }
    if v.is_empty() {
        out.iter_mut().for_each(|o| *o = None);
        return;
    }
    let mut k = 0;
    for (q, o) in out.iter_mut().enumerate() {
        while k + 1 < v.len() {
            let (zn, zd) = z[k + 1].expect("only the first breakpoint is unbounded");
            if zn < q as i128 * zd {
                k += 1;
            } else {
                break;
            }
        }
        let p = v[k];
        let d = q.abs_diff(p) as u64;
        *o = Some(d * d + f[p].expect("finite"));
    }
}

/// Exact distance from every pixel of a `width` x `height` grid to the
/// nearest point of `sites`.
pub fn distance_field(sites: &BoundarySet, width: usize, height: usize) -> Result<DistanceField> {
    if sites.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if let Some(p) = sites.points().iter().find(|p| p.x >= width || p.y >= height) {
        return Err(Error::PointOutOfBounds { x: p.x, y: p.y, width, height });
    }

    let mut grid: Vec<Option<u64>> = vec![None; width * height];
    for p in sites.points() {
        grid[p.y * width + p.x] = Some(0);
    }

    let mut v = Vec::with_capacity(width.max(height));
    let mut z = Vec::with_capacity(width.max(height));

    let mut row_out = vec![None; width];
    for row in grid.chunks_mut(width) {
        envelope_1d(row, &mut row_out, &mut v, &mut z);
        row.copy_from_slice(&row_out);
    }

    let mut col_in = vec![None; height];
    let mut col_out = vec![None; height];
    for x in 0..width {
        for y in 0..height {
            col_in[y] = grid[y * width + x];
        }
        envelope_1d(&col_in, &mut col_out, &mut v, &mut z);
        for y in 0..height {
            grid[y * width + x] = col_out[y];
        }
    }

    let sq: Vec<u64> = grid.into_iter().map(|d| d.expect("a non-empty site set reaches every pixel")).collect();
    let dist = sq.iter().map(|&s| (s as f64).sqrt()).collect();
    Ok(DistanceField { width, height, sq, dist })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sites(w: usize, h: usize, pts: &[(usize, usize)]) -> BoundarySet {
        BoundarySet::from_points(w, h, pts.iter().map(|&(x, y)| Point::new(x, y)).collect()).unwrap()
    }

    #[test]
    fn all_sites_is_zero() {
        let all: Vec<_> = (0..4).flat_map(|y| (0..5).map(move |x| (x, y))).collect();
        let f = distance_field(&sites(5, 4, &all), 5, 4).unwrap();
        assert!(f.values().iter().all(|&d| d == 0.0));
    }

    #[test]
    fn three_four_five() {
        let f = distance_field(&sites(8, 8, &[(0, 0)]), 8, 8).unwrap();
        assert_eq!(f.at(Point::new(3, 4)), 5.0);
        assert_eq!(f.squared_at(Point::new(7, 7)), 98);
    }

    #[test]
    fn empty_sites_rejected() {
        let s = BoundarySet::from_points(3, 3, vec![]).unwrap();
        assert!(matches!(distance_field(&s, 3, 3), Err(Error::EmptyPointSet)));
    }

    #[test]
    fn site_outside_grid_rejected() {
        let s = sites(10, 10, &[(9, 9)]);
        assert!(distance_field(&s, 5, 5).is_err());
    }

    #[test]
    fn matches_brute_force_on_small_grid() {
        let pts = [(1, 1), (6, 2), (3, 7), (7, 7)];
        let s = sites(9, 8, &pts);
        let f = distance_field(&s, 9, 8).unwrap();
        for y in 0..8 {
            for x in 0..9 {
                let p = Point::new(x, y);
                let bf = s.points().iter().map(|&q| p.dist_sq(q)).min().unwrap();
                assert_eq!(f.squared_at(p), bf, "({x},{y})");
            }
        }
    }
}
