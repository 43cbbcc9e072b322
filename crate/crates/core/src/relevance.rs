//! Confusion-matrix ("relevance") metrics.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::mask::{ConfusionCounts, ContingencyTable};
use crate::measure::Measure;

/// Every confusion-derived rate for one binary comparison.
///
/// `f_measure` is `P*R / (P+R)`, which tops out at 0.5; the usual harmonic
/// mean is `f1_conventional`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RelevanceReport {
    pub tnr: Measure,
    pub tpr: Measure,
    pub plr: Measure,
    pub nlr: Measure,
    pub fpr: Measure,
    pub fnr: Measure,
    pub precision: Measure,
    pub f_measure: Measure,
    pub f1_conventional: Measure,
    pub xor: Measure,
    pub accuracy: Measure,
    pub error_probability: Measure,
    pub volumetric_distance: Measure,
    pub volumetric_similarity: Measure,
    pub auc: Measure,
}

fn both(a: Measure, b: Measure, f: impl FnOnce(f64, f64) -> Measure) -> Measure {
    match (a, b) {
        (Measure::Value(x), Measure::Value(y)) => f(x, y),
        (Measure::Undefined(r), _) | (_, Measure::Undefined(r)) => Measure::Undefined(r),
    }
}

pub fn relevance_report(c: &ConfusionCounts) -> Result<RelevanceReport> {
    let total = c.total();
    if total == 0 {
        return Err(Error::ZeroTotal);
    }
    let (tp, fp, tn, fn_) = (c.tp as f64, c.fp as f64, c.tn as f64, c.fn_ as f64);

    let tnr = Measure::ratio(tn, tn + fp, "no reference background (tn+fp = 0)");
    let tpr = Measure::ratio(tp, tp + fn_, "no reference foreground (tp+fn = 0)");
    let fpr = Measure::ratio(fp, fp + tn, "no reference background (tn+fp = 0)");
    let fnr = Measure::ratio(fn_, fn_ + tp, "no reference foreground (tp+fn = 0)");
    let plr = both(tpr, tnr, |sens, spec| Measure::ratio(sens, 1.0 - spec, "specificity is 1"));
    let nlr = both(tpr, tnr, |sens, spec| Measure::ratio(1.0 - sens, spec, "specificity is 0"));
    let precision = Measure::ratio(tp, tp + fp, "no predicted foreground (tp+fp = 0)");
    let f_measure = both(precision, tpr, |p, r| Measure::ratio(p * r, p + r, "precision and recall are both 0"));
    let f1_conventional =
        both(precision, tpr, |p, r| Measure::ratio(2.0 * p * r, p + r, "precision and recall are both 0"));
    let xor = Measure::ratio(fp + fn_, tp + fn_, "no reference foreground (tp+fn = 0)");
    let accuracy = Measure::Value((tp + tn) / total as f64);
    let error_probability = accuracy.map(|ac| 1.0 - ac);
    let volumetric_distance = Measure::ratio((fn_ - fp).abs(), 2.0 * tp + fn_ + fp, "both foregrounds empty");
    let volumetric_similarity = volumetric_distance.map(|vd| 1.0 - vd);
    let auc = both(fpr, fnr, |fpr, fnr| Measure::Value(1.0 - (fpr + fnr) / 2.0));

    Ok(RelevanceReport {
        tnr,
        tpr,
        plr,
        nlr,
        fpr,
        fnr,
        precision,
        f_measure,
        f1_conventional,
        xor,
        accuracy,
        error_probability,
        volumetric_distance,
        volumetric_similarity,
        auc,
    })
}

/// Checks that the count form of VD agrees with the foreground-size form
/// `||GT| - |auto|| / (|GT| + |auto|)` to 1e-12.
pub fn vd_identity_check(auto_fg_size: u64, gt_fg_size: u64, c: &ConfusionCounts) -> bool {
    let from_counts = Measure::ratio((c.fn_ as f64 - c.fp as f64).abs(), (2 * c.tp + c.fn_ + c.fp) as f64, "");
    let from_sizes =
        Measure::ratio((gt_fg_size as f64 - auto_fg_size as f64).abs(), (gt_fg_size + auto_fg_size) as f64, "");
    match (from_counts, from_sizes) {
        (Measure::Value(a), Measure::Value(b)) => (a - b).abs() <= 1e-12,
        (Measure::Undefined(_), Measure::Undefined(_)) => true,
        _ => false,
    }
}

/// One-vs-rest counts for every label present in either map, with the
/// table's rows as prediction and columns as reference.
pub fn per_class_counts(table: &ContingencyTable) -> Vec<(u32, ConfusionCounts)> {
    let labels: BTreeSet<u32> = table.row_labels().iter().chain(table.col_labels()).copied().collect();
    let rows = table.row_sums();
    let cols = table.col_sums();
    labels
        .into_iter()
        .map(|label| {
            let tp = table.count_labels(label, label);
            let predicted = table.row_index(label).map_or(0, |i| rows[i]);
            let reference = table.col_index(label).map_or(0, |j| cols[j]);
            let fp = predicted - tp;
            let fn_ = reference - tp;
            let tn = table.n() - tp - fp - fn_;
            (label, ConfusionCounts::new(tp, fp, tn, fn_))
        })
        .collect()
}

/// Micro-aggregated counts: diagonal sum as TP, off-diagonal sum as FP and
/// FN. The total is `classes * pixels`.
pub fn micro_counts(table: &ContingencyTable) -> ConfusionCounts {
    per_class_counts(table).into_iter().map(|(_, c)| c).fold(ConfusionCounts::default(), |acc, c| acc + c)
}
