//! Set-overlap and pair-counting metrics.

use crate::error::{Error, Result};
use crate::mask::{confusion_counts, contingency_table, BinaryMask, ConfusionCounts, LabelMap};
use crate::measure::Measure;

fn counts(auto: &BinaryMask, gt: &BinaryMask) -> Result<ConfusionCounts> {
    confusion_counts(auto, gt)
}

/// Intersection over union of the foregrounds; 1 when both are empty.
pub fn jaccard(auto: &BinaryMask, gt: &BinaryMask) -> Result<f64> {
    let c = counts(auto, gt)?;
    let union = c.tp + c.fp + c.fn_;
    Ok(if union == 0 { 1.0 } else { c.tp as f64 / union as f64 })
}

/// `2|A∩B| / (|A|+|B|)`; 1 when both foregrounds are empty.
pub fn dice(auto: &BinaryMask, gt: &BinaryMask) -> Result<f64> {
    let c = counts(auto, gt)?;
    let sizes = c.predicted_foreground() + c.reference_foreground();
    Ok(if sizes == 0 { 1.0 } else { 2.0 * c.tp as f64 / sizes as f64 })
}

/// `(|A∪B| - |A∩B|) / |B|`, undefined for an empty reference foreground.
pub fn xor_set(auto: &BinaryMask, gt: &BinaryMask) -> Result<Measure> {
    let c = counts(auto, gt)?;
    let union = c.tp + c.fp + c.fn_;
    Ok(Measure::ratio((union - c.tp) as f64, c.reference_foreground() as f64, "empty reference foreground"))
}

/// `|A∩B| / sqrt(|A||B|)`, undefined when either foreground is empty.
pub fn fmi(auto: &BinaryMask, gt: &BinaryMask) -> Result<Measure> {
    let c = counts(auto, gt)?;
    let a = c.predicted_foreground() as f64;
    let b = c.reference_foreground() as f64;
    Ok(Measure::ratio(c.tp as f64, (a * b).sqrt(), "empty foreground"))
}

fn pairs(n: u64) -> u128 {
    let n = n as u128;
    n * n.saturating_sub(1) / 2
}

/// Number of pixel pairs on which the two partitions agree, and the total
/// number of pairs.
pub(crate) fn rand_agreements(a: &LabelMap, b: &LabelMap) -> Result<(u128, u128)> {
    let t = contingency_table(a, b)?;
    let n = t.n();
    if n < 2 {
        return Err(Error::TooFewPixels(n as usize));
    }
    let same_both: u128 = t.cells().map(|(_, _, c)| pairs(c)).sum();
    let same_a: u128 = t.row_sums().into_iter().map(pairs).sum();
    let same_b: u128 = t.col_sums().into_iter().map(pairs).sum();
    let total = pairs(n);
    // pairs together in both + pairs apart in both
    let agree = same_both + (total + same_both - same_a - same_b);
    Ok((agree, total))
}

/// Fraction of unordered pixel pairs on which two partitions agree.
pub fn rand_index(a: &LabelMap, b: &LabelMap) -> Result<f64> {
    let (agree, total) = rand_agreements(a, b)?;
    Ok(agree as f64 / total as f64)
}

/// Ground truths for one image, plus the dataset-wide PRI values NPR is
/// normalised against.
#[derive(Debug, Clone, PartialEq)]
pub struct PriContext {
    gt_set: Vec<LabelMap>,
    dataset_pri_values: Vec<f64>,
}

impl PriContext {
    pub fn new(gt_set: Vec<LabelMap>) -> Result<Self> {
        let first = gt_set.first().ok_or(Error::NoGroundTruth)?;
        for g in &gt_set[1..] {
            first.check_same_dims(g)?;
        }
        Ok(PriContext { gt_set, dataset_pri_values: Vec::new() })
    }

    pub fn with_dataset(mut self, values: Vec<f64>) -> Self {
        self.dataset_pri_values = values;
        self
    }

    pub fn gt_set(&self) -> &[LabelMap] {
        &self.gt_set
    }

    pub fn dataset_pri_values(&self) -> &[f64] {
        &self.dataset_pri_values
    }

    /// Mean of the dataset PRI values (EV).
    pub fn expected_pri(&self) -> Option<f64> {
        if self.dataset_pri_values.is_empty() {
            return None;
        }
        let n = self.dataset_pri_values.len() as f64;
        Some(self.dataset_pri_values.iter().sum::<f64>() / n)
    }

    pub fn max_pri(&self) -> Option<f64> {
        self.dataset_pri_values.iter().copied().reduce(f64::max)
    }
}

/// Mean Rand index of `auto` against every ground truth.
pub fn pri(auto: &LabelMap, ctx: &PriContext) -> Result<f64> {
    let mut agree = 0u128;
    let mut total = 0u128;
    for gt in ctx.gt_set() {
        let (a, t) = rand_agreements(auto, gt)?;
        agree += a;
        total += t;
    }
    if total == 0 {
        return Err(Error::NoGroundTruth);
    }
    Ok(agree as f64 / total as f64)
}

/// `(PRI - EV) / (MaxPR - EV)` over the context's dataset values.
pub fn npr(pri_value: f64, ctx: &PriContext) -> Measure {
    match (ctx.expected_pri(), ctx.max_pri()) {
        (Some(ev), Some(max)) => normalize_pri(pri_value, ev, max),
        _ => Measure::Undefined("no dataset PRI values"),
    }
}

/// `(pri - ev) / (max_pri - ev)`; undefined when the dataset maximum does
/// not exceed its mean.
pub fn normalize_pri(pri_value: f64, ev: f64, max_pri: f64) -> Measure {
    if max_pri - ev <= 1e-12 * max_pri.abs().max(1.0) {
        return Measure::Undefined("degenerate dataset");
    }
    Measure::Value((pri_value - ev) / (max_pri - ev))
}

/// Fraction of pixels whose foreground/background assignment disagrees.
pub fn mce(auto: &BinaryMask, gt: &BinaryMask) -> Result<f64> {
    let c = counts(auto, gt)?;
    let agree = c.tn + c.tp;
    let n = auto.background_count() + auto.foreground_count();
    Ok(1.0 - agree as f64 / n as f64)
}

/// Misplaced pixels as a percentage of the reference image size.
pub fn error_rate(auto: &BinaryMask, gt: &BinaryMask) -> Result<f64> {
    let c = counts(auto, gt)?;
    Ok((c.fp + c.fn_) as f64 / gt.len() as f64 * 100.0)
}
