use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {left_w}x{left_h} vs {right_w}x{right_h}")]
    DimensionMismatch { left_w: usize, left_h: usize, right_w: usize, right_h: usize },

    #[error("invalid dimensions {width}x{height} for {len} pixels")]
    InvalidDimensions { width: usize, height: usize, len: usize },

    #[error("label {0} does not occur in the map")]
    UnknownLabel(u32),

    #[error("point ({x}, {y}) lies outside a {width}x{height} grid")]
    PointOutOfBounds { x: usize, y: usize, width: usize, height: usize },

    #[error("distance to an empty point set is undefined")]
    EmptyPointSet,

    #[error("total pixel count is zero")]
    ZeroTotal,

    #[error("at least two pixels are required, got {0}")]
    TooFewPixels(usize),

    #[error("at least one ground truth is required")]
    NoGroundTruth,

    #[error("dataset is empty")]
    EmptyDataset,

    #[error("duplicate image id {0:?}")]
    DuplicateImageId(String),

    #[error("unknown metric {0:?}")]
    UnknownMetric(String),

    #[error("invalid fixture: {0}")]
    InvalidFixture(String),

    #[error("sweep steps must be monotone")]
    NonMonotoneSteps,

    #[error("unsupported pixel format in {path}: {detail}; pre-quantize to 8-bit single-channel labels")]
    UnsupportedPixelFormat { path: PathBuf, detail: String },

    #[error("cannot decode {path}: {detail}")]
    Decode { path: PathBuf, detail: String },

    #[error("label {0} does not fit in an 8-bit image")]
    LabelOutOfRange(u32),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn dims(left: (usize, usize), right: (usize, usize)) -> Self {
        Error::DimensionMismatch { left_w: left.0, left_h: left.1, right_w: right.0, right_h: right.1 }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io { path: path.into(), source }
    }

    /// True for failures of the filesystem rather than of the data.
    pub fn is_io(&self) -> bool {
        matches!(self, Error::Io { .. })
    }
}
