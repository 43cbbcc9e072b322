//! Label maps, binary masks and the counting/geometry primitives every
//! metric is built from.

mod boundary;
mod components;
mod confusion;
pub(crate) mod contingency;
mod distance;

pub use boundary::{extract_boundary, BoundarySet};
pub use components::split_components;
pub use confusion::{confusion_counts, ConfusionCounts};
pub use contingency::{contingency_table, ContingencyTable};
pub use distance::{distance_field, DistanceField};

use std::collections::BTreeMap;

use crate::error::{Error, Result};

/// An integer pixel coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: usize,
    pub y: usize,
}

impl Point {
    pub const fn new(x: usize, y: usize) -> Self {
        Point { x, y }
    }

    /// Squared Euclidean distance, exact in integers.
    pub fn dist_sq(self, other: Point) -> u64 {
        let dx = self.x.abs_diff(other.x) as u64;
        let dy = self.y.abs_diff(other.y) as u64;
        dx * dx + dy * dy
    }

    pub fn dist(self, other: Point) -> f64 {
        (self.dist_sq(other) as f64).sqrt()
    }
}

/// A width x height grid of region labels, stored row-major.
///
/// Label 0 is background when the map is read as a binary segmentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LabelMap {
    width: usize,
    height: usize,
    labels: Vec<u32>,
}

impl LabelMap {
    pub fn new(width: usize, height: usize, labels: Vec<u32>) -> Result<Self> {
        if width == 0 || height == 0 || labels.len() != width * height {
            return Err(Error::InvalidDimensions { width, height, len: labels.len() });
        }
        Ok(LabelMap { width, height, labels })
    }

    pub fn filled(width: usize, height: usize, label: u32) -> Result<Self> {
        Self::new(width, height, vec![label; width * height])
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> u32) -> Result<Self> {
        let mut labels = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                labels.push(f(x, y));
            }
        }
        Self::new(width, height, labels)
    }

    /// Builds a map from equal-length rows.
    pub fn from_rows<R: AsRef<[u32]>>(rows: &[R]) -> Result<Self> {
        let height = rows.len();
        let width = rows.first().map_or(0, |r| r.as_ref().len());
        let mut labels = Vec::with_capacity(width * height);
        for row in rows {
            let row = row.as_ref();
            if row.len() != width {
                return Err(Error::InvalidDimensions { width, height, len: labels.len() + row.len() });
            }
            labels.extend_from_slice(row);
        }
        Self::new(width, height, labels)
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

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn get(&self, x: usize, y: usize) -> u32 {
        self.labels[y * self.width + x]
    }

    /// Pixel count per label, in label order.
    pub fn histogram(&self) -> BTreeMap<u32, usize> {
        let mut hist = BTreeMap::new();
        for &l in &self.labels {
            *hist.entry(l).or_insert(0) += 1;
        }
        hist
    }

    /// Applies `f` to every label.
    pub fn relabel(&self, f: impl Fn(u32) -> u32) -> LabelMap {
        LabelMap { width: self.width, height: self.height, labels: self.labels.iter().map(|&l| f(l)).collect() }
    }

    pub fn binarize(&self, selector: Selector) -> Result<BinaryMask> {
        binarize(self, selector)
    }

    pub(crate) fn check_same_dims(&self, other: &LabelMap) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::dims(self.dims(), other.dims()));
        }
        Ok(())
    }
}

/// Which labels count as foreground when reducing a label map to a mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Selector {
    Label(u32),
    #[default]
    AnyNonzero,
}

/// Foreground/background pixel mask.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinaryMask {
    width: usize,
    height: usize,
    bits: Vec<bool>,
}

impl BinaryMask {
    pub fn new(width: usize, height: usize, bits: Vec<bool>) -> Result<Self> {
        if width == 0 || height == 0 || bits.len() != width * height {
            return Err(Error::InvalidDimensions { width, height, len: bits.len() });
        }
        Ok(BinaryMask { width, height, bits })
    }

    pub fn empty(width: usize, height: usize) -> Result<Self> {
        Self::new(width, height, vec![false; width * height])
    }

    pub fn from_fn(width: usize, height: usize, mut f: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        let mut bits = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                bits.push(f(x, y));
            }
        }
        Self::new(width, height, bits)
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

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn get(&self, x: usize, y: usize) -> bool {
        self.bits[y * self.width + x]
    }

    pub fn foreground_count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn background_count(&self) -> usize {
        self.len() - self.foreground_count()
    }

    pub fn complement(&self) -> BinaryMask {
        BinaryMask { width: self.width, height: self.height, bits: self.bits.iter().map(|b| !b).collect() }
    }

    /// Foreground pixels in row-major order.
    pub fn foreground(&self) -> impl Iterator<Item = Point> + '_ {
        let w = self.width;
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(move |(i, _)| Point::new(i % w, i / w))
    }

    /// Foreground = 1, background = 0.
    pub fn to_label_map(&self) -> LabelMap {
        LabelMap { width: self.width, height: self.height, labels: self.bits.iter().map(|&b| u32::from(b)).collect() }
    }

    pub(crate) fn check_same_dims(&self, other: &BinaryMask) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::dims(self.dims(), other.dims()));
        }
        Ok(())
    }
}

pub fn binarize(map: &LabelMap, selector: Selector) -> Result<BinaryMask> {
    let bits = match selector {
        Selector::AnyNonzero => map.labels.iter().map(|&l| l != 0).collect(),
        Selector::Label(want) => {
            if !map.labels.contains(&want) {
                return Err(Error::UnknownLabel(want));
            }
            map.labels.iter().map(|&l| l == want).collect()
        }
    };
    BinaryMask::new(map.width, map.height, bits)
}
