//! Evaluation metrics for image segmentation.
//!
//! Binary metrics compare a predicted foreground mask with a reference
//! mask; partition metrics (Rand index, information measures, consistency
//! errors) compare whole label maps; boundary metrics work on inner
//! 4-connected boundaries through an exact Euclidean distance transform.
//!
//! Values that cannot be computed (zero denominators, empty sets) are
//! returned as [`Measure::Undefined`] rather than NaN.

pub mod consistency;
pub mod distance;
mod error;
pub mod harness;
pub mod info;
pub mod mask;
mod measure;
pub mod metric;
pub mod overlap;
pub mod relevance;
mod sum;

pub use error::{Error, Result};
pub use mask::{
    binarize, confusion_counts, contingency_table, distance_field, extract_boundary, split_components, BinaryMask,
    BoundarySet, ConfusionCounts, ContingencyTable, DistanceField, LabelMap, Point, Selector,
};
pub use measure::Measure;
pub use metric::{polarity_of, polarity_table, Metric, MetricPolarity, Polarity};
