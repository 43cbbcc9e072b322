//! Entropy-based comparison of two partitions. All logarithms are base 2.

use crate::error::Result;
use crate::mask::{contingency_table, ContingencyTable, LabelMap};
use crate::measure::Measure;
use crate::sum::compensated_sum;

/// Logarithm base used for every entropy.
pub const ENTROPY_BASE: u32 = 2;

/// Marginal and joint entropies of two label maps, in bits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartitionEntropy {
    pub h_a: f64,
    pub h_b: f64,
    pub h_joint: f64,
}

impl PartitionEntropy {
    pub fn from_table(t: &ContingencyTable) -> Self {
        let n = t.n() as f64;
        let h = |counts: &mut dyn Iterator<Item = u64>| {
            compensated_sum(counts.filter(|&c| c > 0).map(|c| {
                let p = c as f64 / n;
                -p * p.log2()
            }))
        };
        PartitionEntropy {
            h_a: h(&mut t.row_sums().into_iter()),
            h_b: h(&mut t.col_sums().into_iter()),
            h_joint: h(&mut t.cells().map(|(_, _, c)| c)),
        }
    }

    pub fn mutual_information(&self) -> f64 {
        self.h_a + self.h_b - self.h_joint
    }

    pub fn voi(&self) -> f64 {
        self.h_a + self.h_b - 2.0 * self.mutual_information()
    }

    pub fn nmi(&self) -> Measure {
        Measure::ratio(
            self.mutual_information(),
            (self.h_a * self.h_b).sqrt(),
            "a partition has a single region (zero entropy)",
        )
    }
}

pub fn partition_entropy(a: &LabelMap, b: &LabelMap) -> Result<PartitionEntropy> {
    Ok(PartitionEntropy::from_table(&contingency_table(a, b)?))
}

pub fn mutual_information(a: &LabelMap, b: &LabelMap) -> Result<f64> {
    Ok(partition_entropy(a, b)?.mutual_information())
}

/// Variation of information, `H(a) + H(b) - 2 MI(a, b)`.
pub fn voi(a: &LabelMap, b: &LabelMap) -> Result<f64> {
    Ok(partition_entropy(a, b)?.voi())
}

/// `MI / sqrt(H(a) H(b))`; undefined when either map has one region.
pub fn nmi(a: &LabelMap, b: &LabelMap) -> Result<Measure> {
    Ok(partition_entropy(a, b)?.nmi())
}
