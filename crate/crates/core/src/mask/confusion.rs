use serde::{Deserialize, Serialize};

use super::BinaryMask;
use crate::error::{Error, Result};

/// Pixel tallies of a binary prediction against a binary reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ConfusionCounts {
    pub tp: u64,
    pub fp: u64,
    pub tn: u64,
    #[serde(rename = "fn")]
    pub fn_: u64,
}

impl ConfusionCounts {
    pub const fn new(tp: u64, fp: u64, tn: u64, fn_: u64) -> Self {
        ConfusionCounts { tp, fp, tn, fn_ }
    }

    pub fn total(&self) -> u64 {
        self.tp + self.fp + self.tn + self.fn_
    }

    /// |S_auto(f)|
    pub fn predicted_foreground(&self) -> u64 {
        self.tp + self.fp
    }

    /// |S_GT(f)|
    pub fn reference_foreground(&self) -> u64 {
        self.tp + self.fn_
    }

    /// Counts with prediction and reference exchanged.
    pub fn transposed(&self) -> Self {
        ConfusionCounts::new(self.tp, self.fn_, self.tn, self.fp)
    }
}

impl std::ops::Add for ConfusionCounts {
    type Output = ConfusionCounts;

    fn add(self, rhs: Self) -> Self {
        ConfusionCounts::new(self.tp + rhs.tp, self.fp + rhs.fp, self.tn + rhs.tn, self.fn_ + rhs.fn_)
    }
}

pub fn confusion_counts(auto: &BinaryMask, gt: &BinaryMask) -> Result<ConfusionCounts> {
    if auto.dims() != gt.dims() {
        return Err(Error::dims(auto.dims(), gt.dims()));
    }
    let mut c = ConfusionCounts::default();
    for (&a, &g) in auto.bits().iter().zip(gt.bits()) {
        match (a, g) {
            (true, true) => c.tp += 1,
            (true, false) => c.fp += 1,
            (false, true) => c.fn_ += 1,
            (false, false) => c.tn += 1,
        }
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(rows: &[&[u8]]) -> BinaryMask {
        let h = rows.len();
        let w = rows[0].len();
        BinaryMask::from_fn(w, h, |x, y| rows[y][x] == 1).unwrap()
    }

    #[test]
    fn identity() {
        let m = mask(&[&[1, 0, 1], &[0, 0, 1]]);
        assert_eq!(confusion_counts(&m, &m).unwrap(), ConfusionCounts::new(3, 0, 3, 0));
    }

    #[test]
    fn two_by_two() {
        let auto = mask(&[&[1, 0], &[0, 0]]);
        let gt = mask(&[&[1, 0], &[1, 0]]);
        assert_eq!(confusion_counts(&auto, &gt).unwrap(), ConfusionCounts::new(1, 0, 2, 1));
        assert_eq!(confusion_counts(&gt, &auto).unwrap(), confusion_counts(&auto, &gt).unwrap().transposed());
    }

    #[test]
    fn mismatch_reports_both_shapes() {
        let a = BinaryMask::empty(2, 3).unwrap();
        let b = BinaryMask::empty(3, 2).unwrap();
        let msg = confusion_counts(&a, &b).unwrap_err().to_string();
        assert!(msg.contains("2x3") && msg.contains("3x2"), "{msg}");
    }
}
