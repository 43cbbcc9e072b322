use super::{BinaryMask, Point};
use crate::error::{Error, Result};

/// Pixel coordinates on a region's inner boundary, sorted and unique.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundarySet {
    width: usize,
    height: usize,
    points: Vec<Point>,
}

impl BoundarySet {
    /// Builds a set from arbitrary in-bounds points; duplicates collapse.
    pub fn from_points(width: usize, height: usize, mut points: Vec<Point>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.x >= width || p.y >= height) {
            return Err(Error::PointOutOfBounds { x: p.x, y: p.y, width, height });
        }
        points.sort_unstable();
        points.dedup();
        Ok(BoundarySet { width, height, points })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    pub fn intersection_len(&self, other: &BoundarySet) -> usize {
        let (small, large) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        small.points.iter().filter(|p| large.contains(**p)).count()
    }

    pub fn union_len(&self, other: &BoundarySet) -> usize {
        self.len() + other.len() - self.intersection_len(other)
    }
}

/// Foreground pixels with at least one 4-neighbour that is background or
/// off the image.
pub fn extract_boundary(mask: &BinaryMask) -> BoundarySet {
    let (w, h) = mask.dims();
    let fg = |x: isize, y: isize| {
        x >= 0 && y >= 0 && (x as usize) < w && (y as usize) < h && mask.get(x as usize, y as usize)
    };
    let points = mask
        .foreground()
        .filter(|p| {
            let (x, y) = (p.x as isize, p.y as isize);
            !(fg(x - 1, y) && fg(x + 1, y) && fg(x, y - 1) && fg(x, y + 1))
        })
        .collect::<Vec<_>>();
    BoundarySet::from_points(w, h, points).expect("foreground pixels are in bounds")
}
