use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use serde::Deserialize;

use super::io::load_label_map;
use crate::error::{Error, Result};
use crate::mask::LabelMap;

#[derive(Debug, Clone, PartialEq)]
pub struct DatasetEntry {
    pub id: String,
    pub prediction: LabelMap,
    pub ground_truths: Vec<LabelMap>,
}

impl DatasetEntry {
    pub fn new(id: impl Into<String>, prediction: LabelMap, ground_truths: Vec<LabelMap>) -> Self {
        DatasetEntry { id: id.into(), prediction, ground_truths }
    }
}

/// Images with one prediction and at least one ground truth each.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    entries: Vec<DatasetEntry>,
}

impl Dataset {
    pub fn new(entries: Vec<DatasetEntry>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyDataset);
        }
        let mut ids = HashSet::new();
        for e in &entries {
            if !ids.insert(e.id.as_str()) {
                return Err(Error::DuplicateImageId(e.id.clone()));
            }
            if e.ground_truths.is_empty() {
                return Err(Error::NoGroundTruth);
            }
            for gt in &e.ground_truths {
                e.prediction.check_same_dims(gt)?;
            }
        }
        Ok(Dataset { entries })
    }

    pub fn entries(&self) -> &[DatasetEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Deserialize)]
struct ManifestEntry {
    id: String,
    pred: PathBuf,
    gts: Vec<PathBuf>,
}

/// Reads a JSON manifest `[{"id", "pred", "gts": [...]}]`. Relative image
/// paths resolve against the manifest's directory.
pub fn load_manifest(path: impl AsRef<Path>) -> Result<Dataset> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let manifest: Vec<ManifestEntry> =
        serde_json::from_str(&text).map_err(|e| Error::Decode { path: path.to_owned(), detail: e.to_string() })?;
    let base = path.parent().unwrap_or_else(|| Path::new(""));
    let resolve = |p: &Path| if p.is_absolute() { p.to_owned() } else { base.join(p) };
    let entries = manifest
        .into_iter()
        .map(|m| {
            let prediction = load_label_map(resolve(&m.pred), None)?;
            let ground_truths = m.gts.iter().map(|g| load_label_map(resolve(g), None)).collect::<Result<Vec<_>>>()?;
            Ok(DatasetEntry::new(m.id, prediction, ground_truths))
        })
        .collect::<Result<Vec<_>>>()?;
    Dataset::new(entries)
}
