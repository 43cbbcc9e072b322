//! Fixtures, image I/O, dataset evaluation, sweeps and report output.

pub mod dataset;
pub mod evaluate;
pub mod fixture;
pub mod io;
pub mod report;
pub mod sweep;

pub use dataset::{load_manifest, Dataset, DatasetEntry};
pub use evaluate::{
    evaluate_dataset, evaluate_image, evaluate_pair, EvalOptions, ImageReport, MetricEntry, MetricReport,
    MetricSelection, NprBaseline, Parameters,
};
pub use fixture::{generate_fixture, Fixture, FixtureSpec, Rect};
pub use io::{load_label_map, save_label_map, ImageFormat};
pub use report::{emit_report, render_report, report_to_json, round_sig6, ReportFormat};
pub use sweep::{perturbation_sweep, SweepKind, SweepResult, SweepStep, Trend};
