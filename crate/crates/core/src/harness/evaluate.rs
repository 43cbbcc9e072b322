//! Runs every selected metric over one image or a whole dataset.

use std::collections::{BTreeMap, BTreeSet};
use std::str::FromStr;

use rayon::prelude::*;

use super::dataset::Dataset;
use crate::consistency::consistency_errors;
use crate::distance::{boundary_hamming, hamming, nsd, SurfaceDistances};
use crate::error::{Error, Result};
use crate::info::{PartitionEntropy, ENTROPY_BASE};
use crate::mask::{
    confusion_counts, contingency_table, extract_boundary, split_components, BinaryMask, LabelMap, Selector,
};
use crate::measure::Measure;
use crate::metric::Metric;
use crate::overlap::{self, PriContext};
use crate::relevance::relevance_report;
use crate::sum::compensated_sum;

/// Which metrics to compute.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MetricSelection(BTreeSet<Metric>);

impl MetricSelection {
    pub fn all() -> Self {
        MetricSelection(Metric::ALL.iter().copied().collect())
    }

    pub fn none() -> Self {
        MetricSelection::default()
    }

    pub fn contains(&self, m: Metric) -> bool {
        self.0.contains(&m)
    }

    pub fn iter(&self) -> impl Iterator<Item = Metric> + '_ {
        self.0.iter().copied()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn any(&self, ms: &[Metric]) -> bool {
        ms.iter().any(|m| self.contains(*m))
    }
}

impl FromIterator<Metric> for MetricSelection {
    fn from_iter<I: IntoIterator<Item = Metric>>(iter: I) -> Self {
        MetricSelection(iter.into_iter().collect())
    }
}

impl FromStr for MetricSelection {
    type Err = Error;

    /// `all`, or a comma-separated list of identifiers/symbols.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(Self::all());
        }
        s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
    }
}

#[derive(Debug, Clone, Default)]
pub struct EvalOptions {
    /// Foreground definition for the binary metrics.
    pub selector: Selector,
    /// Split every label into 4-connected regions before the partition
    /// metrics (RI, PRI, MI, VOI, NMI, LCE, GCE, BCE).
    pub split_components: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricEntry {
    pub value: Measure,
    /// Value against each ground truth, when there are several.
    pub per_gt: Vec<Measure>,
}

impl MetricEntry {
    fn single(value: Measure) -> Self {
        MetricEntry { value, per_gt: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ImageReport {
    pub id: String,
    pub metrics: BTreeMap<Metric, MetricEntry>,
}

impl ImageReport {
    pub fn value(&self, m: Metric) -> Option<Measure> {
        self.metrics.get(&m).map(|e| e.value)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Parameters {
    pub entropy_base: u32,
    pub boundary_connectivity: u32,
    pub f_convention: &'static str,
    pub foreground: String,
    pub split_components: bool,
}

impl Parameters {
    pub(crate) fn new(opts: &EvalOptions) -> Self {
        Parameters {
            entropy_base: ENTROPY_BASE,
            boundary_connectivity: 4,
            f_convention: "P*R/(P+R)",
            foreground: match opts.selector {
                Selector::AnyNonzero => "any-nonzero".into(),
                Selector::Label(l) => format!("label:{l}"),
            },
            split_components: opts.split_components,
        }
    }
}

/// Dataset-level anchors used to normalise PRI.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NprBaseline {
    pub ev: f64,
    pub max_pri: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct MetricReport {
    pub parameters: Parameters,
    pub images: Vec<ImageReport>,
    pub aggregates: BTreeMap<Metric, MetricEntry>,
    pub npr_baseline: Option<NprBaseline>,
}

impl MetricReport {
    pub fn image(&self, id: &str) -> Option<&ImageReport> {
        self.images.iter().find(|i| i.id == id)
    }
}

const RELEVANCE: &[Metric] = &[
    Metric::Tnr,
    Metric::Tpr,
    Metric::Plr,
    Metric::Nlr,
    Metric::Fpr,
    Metric::Fnr,
    Metric::Precision,
    Metric::FMeasure,
    Metric::F1Conventional,
    Metric::Xor,
    Metric::Accuracy,
    Metric::ErrorProbability,
    Metric::VolumetricDistance,
    Metric::VolumetricSimilarity,
    Metric::Auc,
];
const OVERLAP: &[Metric] = &[Metric::Jaccard, Metric::Dice, Metric::Fmi, Metric::Mce, Metric::ErrorRate];
const ENTROPY: &[Metric] = &[Metric::MutualInformation, Metric::Voi, Metric::Nmi];
const CONSISTENCY: &[Metric] = &[Metric::Lce, Metric::Gce, Metric::Bce];
const SURFACE: &[Metric] = &[Metric::Hausdorff, Metric::Masd, Metric::Asd, Metric::Bde];

fn undefined(e: &Error) -> Measure {
    Measure::Undefined(match e {
        Error::EmptyPointSet => "empty boundary",
        Error::TooFewPixels(_) => "fewer than two pixels",
        Error::ZeroTotal => "empty image",
        _ => "computation failed",
    })
}

fn foreground(map: &LabelMap, selector: Selector) -> BinaryMask {
    let bits = match selector {
        Selector::AnyNonzero => map.labels().iter().map(|&l| l != 0).collect(),
        Selector::Label(want) => map.labels().iter().map(|&l| l == want).collect(),
    };
    BinaryMask::new(map.width(), map.height(), bits).expect("same shape as the map")
}

fn partition(map: &LabelMap, opts: &EvalOptions) -> LabelMap {
    if opts.split_components {
        split_components(map)
    } else {
        map.clone()
    }
}

/// Every selected metric that compares `auto` against a single reference.
fn single_gt(
    auto: &LabelMap,
    gt: &LabelMap,
    sel: &MetricSelection,
    opts: &EvalOptions,
) -> Result<BTreeMap<Metric, Measure>> {
    auto.check_same_dims(gt)?;
    let mut out = BTreeMap::new();
    let mut put = |m: Metric, v: Measure| {
        if sel.contains(m) {
            out.insert(m, v);
        }
    };

    let binary = sel.any(RELEVANCE)
        || sel.any(OVERLAP)
        || sel.any(SURFACE)
        || sel.any(&[Metric::Nsd, Metric::Hamming, Metric::BoundaryHamming]);
    if binary {
        let a = foreground(auto, opts.selector);
        let g = foreground(gt, opts.selector);
        let c = confusion_counts(&a, &g)?;

        if sel.any(RELEVANCE) {
            let r = relevance_report(&c)?;
            put(Metric::Tnr, r.tnr);
            put(Metric::Tpr, r.tpr);
            put(Metric::Plr, r.plr);
            put(Metric::Nlr, r.nlr);
            put(Metric::Fpr, r.fpr);
            put(Metric::Fnr, r.fnr);
            put(Metric::Precision, r.precision);
            put(Metric::FMeasure, r.f_measure);
            put(Metric::F1Conventional, r.f1_conventional);
            put(Metric::Xor, r.xor);
            put(Metric::Accuracy, r.accuracy);
            put(Metric::ErrorProbability, r.error_probability);
            put(Metric::VolumetricDistance, r.volumetric_distance);
            put(Metric::VolumetricSimilarity, r.volumetric_similarity);
            put(Metric::Auc, r.auc);
        }
        if sel.any(OVERLAP) {
            put(Metric::Jaccard, overlap::jaccard(&a, &g)?.into());
            put(Metric::Dice, overlap::dice(&a, &g)?.into());
            put(Metric::Fmi, overlap::fmi(&a, &g)?);
            put(Metric::Mce, overlap::mce(&a, &g)?.into());
            put(Metric::ErrorRate, overlap::error_rate(&a, &g)?.into());
        }
        put(Metric::Hamming, hamming(&a, &g)?.into());

        if sel.any(SURFACE) || sel.any(&[Metric::Nsd, Metric::BoundaryHamming]) {
            let ba = extract_boundary(&a);
            let bg = extract_boundary(&g);
            put(Metric::BoundaryHamming, boundary_hamming(&ba, &bg));
            if sel.any(SURFACE) {
                match SurfaceDistances::new(&ba, &bg) {
                    Ok(s) => {
                        put(Metric::Hausdorff, s.hausdorff().into());
                        put(Metric::Masd, s.masd().into());
                        put(Metric::Asd, s.asd().into());
                        put(Metric::Bde, s.bde().into());
                    }
                    Err(e) => {
                        for &m in SURFACE {
                            put(m, undefined(&e));
                        }
                    }
                }
            }
            if sel.contains(Metric::Nsd) {
                put(Metric::Nsd, nsd(&a, &g, &bg).unwrap_or_else(|e| undefined(&e)));
            }
        }
    }

    if sel.any(ENTROPY) || sel.any(CONSISTENCY) || sel.contains(Metric::RandIndex) {
        let pa = partition(auto, opts);
        let pg = partition(gt, opts);
        if sel.contains(Metric::RandIndex) {
            put(Metric::RandIndex, overlap::rand_index(&pa, &pg).map_or_else(|e| undefined(&e), Measure::Value));
        }
        if sel.any(ENTROPY) {
            let e = PartitionEntropy::from_table(&contingency_table(&pa, &pg)?);
            put(Metric::MutualInformation, e.mutual_information().into());
            put(Metric::Voi, e.voi().into());
            put(Metric::Nmi, e.nmi());
        }
        if sel.any(CONSISTENCY) {
            let c = consistency_errors(&pa, &pg)?;
            put(Metric::Lce, c.lce.into());
            put(Metric::Gce, c.gce.into());
            put(Metric::Bce, c.bce.into());
        }
    }
    Ok(out)
}

/// Evaluates one image. NPR is never produced here; it needs the dataset.
pub fn evaluate_image(
    id: &str,
    auto: &LabelMap,
    gts: &[LabelMap],
    sel: &MetricSelection,
    opts: &EvalOptions,
) -> Result<ImageReport> {
    if gts.is_empty() {
        return Err(Error::NoGroundTruth);
    }
    let per_gt = gts.iter().map(|gt| single_gt(auto, gt, sel, opts)).collect::<Result<Vec<_>>>()?;

    let mut metrics = BTreeMap::new();
    for (&m, &value) in &per_gt[0] {
        let per = if gts.len() > 1 { per_gt.iter().map(|r| r[&m]).collect() } else { Vec::new() };
        metrics.insert(m, MetricEntry { value, per_gt: per });
    }
    if sel.contains(Metric::Pri) {
        let ctx = PriContext::new(gts.iter().map(|g| partition(g, opts)).collect())?;
        let v = overlap::pri(&partition(auto, opts), &ctx).map_or_else(|e| undefined(&e), Measure::Value);
        metrics.insert(Metric::Pri, MetricEntry::single(v));
    }
    Ok(ImageReport { id: id.to_owned(), metrics })
}

/// Evaluates a prediction against one or more ground truths. Single-GT
/// metrics use the first ground truth and list the others in `per_gt`.
pub fn evaluate_pair(
    auto: &LabelMap,
    gts: &[LabelMap],
    sel: &MetricSelection,
    opts: &EvalOptions,
) -> Result<MetricReport> {
    let image = evaluate_image("image", auto, gts, sel, opts)?;
    Ok(MetricReport {
        parameters: Parameters::new(opts),
        images: vec![image],
        aggregates: BTreeMap::new(),
        npr_baseline: None,
    })
}

fn mean_entry(values: impl Iterator<Item = Measure>) -> MetricEntry {
    let defined: Vec<f64> = values.filter_map(Measure::value).collect();
    let value = if defined.is_empty() {
        Measure::Undefined("undefined for every image")
    } else {
        Measure::Value(compensated_sum(defined.iter().copied()) / defined.len() as f64)
    };
    MetricEntry::single(value)
}

/// Per-image reports sorted by id, per-metric means, and NPR normalised
/// over the dataset's PRI values.
pub fn evaluate_dataset(ds: &Dataset, sel: &MetricSelection, opts: &EvalOptions) -> Result<MetricReport> {
    let want_npr = sel.contains(Metric::Npr);
    let inner: MetricSelection =
        sel.iter().filter(|&m| m != Metric::Npr).chain(want_npr.then_some(Metric::Pri)).collect();

    let mut images = ds
        .entries()
        .par_iter()
        .map(|e| evaluate_image(&e.id, &e.prediction, &e.ground_truths, &inner, opts))
        .collect::<Result<Vec<_>>>()?;
    images.sort_by(|a, b| a.id.cmp(&b.id));

    let mut npr_baseline = None;
    if want_npr {
        let pris: Vec<Option<f64>> = images.iter().map(|i| i.value(Metric::Pri).and_then(Measure::value)).collect();
        let values: Vec<f64> = pris.iter().flatten().copied().collect();
        if !values.is_empty() {
            let ev = compensated_sum(values.iter().copied()) / values.len() as f64;
            let max_pri = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            npr_baseline = Some(NprBaseline { ev, max_pri });
        }
        for (img, pri) in images.iter_mut().zip(pris) {
            let v = match pri {
                Some(p) => {
                    let b = npr_baseline.expect("a defined PRI implies a baseline");
                    overlap::normalize_pri(p, b.ev, b.max_pri)
                }
                None => Measure::Undefined("PRI undefined"),
            };
            img.metrics.insert(Metric::Npr, MetricEntry::single(v));
            if !sel.contains(Metric::Pri) {
                img.metrics.remove(&Metric::Pri);
            }
        }
    }

    let aggregates = sel.iter().map(|m| (m, mean_entry(images.iter().filter_map(|i| i.value(m))))).collect();

    Ok(MetricReport { parameters: Parameters::new(opts), images, aggregates, npr_baseline })
}
