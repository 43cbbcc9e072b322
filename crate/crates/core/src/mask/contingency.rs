use std::collections::HashMap;

use super::{ConfusionCounts, LabelMap};
use crate::error::Result;

/// Label co-occurrence counts between two partitions of the same grid.
///
/// Rows index the distinct labels of the first map, columns those of the
/// second, both in ascending label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContingencyTable {
    row_labels: Vec<u32>,
    col_labels: Vec<u32>,
    counts: Vec<u64>,
    n: u64,
}

impl ContingencyTable {
    pub fn rows(&self) -> usize {
        self.row_labels.len()
    }

    pub fn cols(&self) -> usize {
        self.col_labels.len()
    }

    /// Label of row `i` in the first map.
    pub fn row_labels(&self) -> &[u32] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[u32] {
        &self.col_labels
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.counts[i * self.cols() + j]
    }

    pub fn row_index(&self, label: u32) -> Option<usize> {
        self.row_labels.binary_search(&label).ok()
    }

    pub fn col_index(&self, label: u32) -> Option<usize> {
        self.col_labels.binary_search(&label).ok()
    }

    /// Count of pixels labelled `a` in the first map and `b` in the second.
    pub fn count_labels(&self, a: u32, b: u32) -> u64 {
        match (self.row_index(a), self.col_index(b)) {
            (Some(i), Some(j)) => self.get(i, j),
            _ => 0,
        }
    }

    pub fn row_sums(&self) -> Vec<u64> {
        self.counts.chunks(self.cols()).map(|r| r.iter().sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<u64> {
        let mut sums = vec![0; self.cols()];
        for row in self.counts.chunks(self.cols()) {
            for (s, c) in sums.iter_mut().zip(row) {
                *s += c;
            }
        }
        sums
    }

    /// Non-zero cells as `(row, col, count)`.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        let cols = self.cols();
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(move |(k, &c)| (k / cols, k % cols, c))
    }

    /// Reads a binary (labels 0/1) table as confusion counts, with the first
    /// map as prediction and the second as reference.
    pub fn as_confusion(&self) -> ConfusionCounts {
        ConfusionCounts::new(
            self.count_labels(1, 1),
            self.count_labels(1, 0),
            self.count_labels(0, 0),
            self.count_labels(0, 1),
        )
    }
}

fn dense_index(labels: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let mut seen: HashMap<u32, u32> = HashMap::new();
    for &l in labels {
        seen.entry(l).or_insert(0);
    }
    let mut distinct: Vec<u32> = seen.keys().copied().collect();
    distinct.sort_unstable();
    for (i, l) in distinct.iter().enumerate() {
        seen.insert(*l, i as u32);
    }
    let idx = labels.iter().map(|l| seen[l]).collect();
    (distinct, idx)
}

/// Builds the table together with each pixel's dense row and column index.
pub(crate) fn contingency_with_indices(a: &LabelMap, b: &LabelMap) -> Result<(ContingencyTable, Vec<u32>, Vec<u32>)> {
    a.check_same_dims(b)?;
    let (row_labels, ai) = dense_index(a.labels());
    let (col_labels, bi) = dense_index(b.labels());
    let cols = col_labels.len();
    let mut counts = vec![0u64; row_labels.len() * cols];
    for (&i, &j) in ai.iter().zip(&bi) {
        counts[i as usize * cols + j as usize] += 1;
    }
    let table = ContingencyTable { row_labels, col_labels, counts, n: a.len() as u64 };
    Ok((table, ai, bi))
}

pub fn contingency_table(a: &LabelMap, b: &LabelMap) -> Result<ContingencyTable> {
    contingency_with_indices(a, b).map(|(t, _, _)| t)
}
