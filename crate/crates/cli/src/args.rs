use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use segscore::harness::{ImageFormat, MetricSelection, ReportFormat};

#[derive(Debug, Parser)]
#[command(name = "segscore", version, about = "Segmentation evaluation metrics")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score one prediction against one or more ground truths.
    Eval(EvalArgs),
    /// Score every entry of a JSON manifest, with dataset aggregates and NPR.
    Dataset(DatasetArgs),
    /// Write synthetic fixture images.
    Fixtures(FixturesArgs),
    /// Re-score a fixture while rotating or translating the prediction.
    Sweep(SweepArgs),
}

#[derive(Debug, Args)]
pub struct MetricArgs {
    /// `all` or a comma-separated list of metric names.
    #[arg(long, default_value = "all", value_parser = parse_selection)]
    pub metrics: MetricSelection,
    /// Label treated as foreground by the binary metrics (default: any non-zero label).
    #[arg(long)]
    pub foreground: Option<u32>,
    /// Split labels into 4-connected regions before the partition metrics.
    #[arg(long)]
    pub split_components: bool,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file (default: stdout).
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub pred: PathBuf,
    /// Ground-truth images, comma-separated.
    #[arg(long, value_delimiter = ',', required = true)]
    pub gt: Vec<PathBuf>,
    #[command(flatten)]
    pub metrics: MetricArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DatasetArgs {
    /// JSON list of `{"id", "pred", "gts": [...]}` objects.
    #[arg(long)]
    pub manifest: PathBuf,
    #[command(flatten)]
    pub metrics: MetricArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Args)]
pub struct FixturesArgs {
    /// Directory to write into; created if missing.
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, value_enum, default_value_t = FixtureSet::S1)]
    pub which: FixtureSet,
    /// Rotation angles in degrees, for `--which rotations`.
    #[arg(long, value_delimiter = ',', default_value = "0,15,30,45", allow_hyphen_values = true)]
    pub angles: Vec<f64>,
    #[arg(long, value_enum, default_value_t = ImageKind::Pgm)]
    pub image_format: ImageKind,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum)]
    pub which: SweepSet,
    /// Degrees for rotation, whole pixels for translation.
    #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
    pub steps: Vec<f64>,
    #[arg(long, default_value = "all", value_parser = parse_selection)]
    pub metrics: MetricSelection,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

impl From<Format> for ReportFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Json => ReportFormat::Json,
            Format::Csv => ReportFormat::Csv,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FixtureSet {
    S1,
    S3,
    Rotations,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum ImageKind {
    Pgm,
    Png,
}

impl From<ImageKind> for ImageFormat {
    fn from(k: ImageKind) -> Self {
        match k {
            ImageKind::Pgm => ImageFormat::Pgm,
            ImageKind::Png => ImageFormat::Png,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SweepSet {
    Rotation,
    Translation,
}

fn parse_selection(s: &str) -> Result<MetricSelection, String> {
    s.parse().map_err(|e: segscore::Error| e.to_string())
}
