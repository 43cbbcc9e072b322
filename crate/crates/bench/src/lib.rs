//! Input generators shared by the benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use segscore::{BinaryMask, LabelMap};

/// Blob-like label map: `regions` random rectangles painted over a
/// background, so regions are spatially coherent rather than noise.
pub fn blobs(side: usize, regions: u32, seed: u64) -> LabelMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut labels = vec![0u32; side * side];
    for label in 1..=regions {
        let (w, h) = (rng.random_range(side / 8..=side / 2), rng.random_range(side / 8..=side / 2));
        let (x0, y0) = (rng.random_range(0..side - w), rng.random_range(0..side - h));
        for y in y0..y0 + h {
            labels[y * side + x0..y * side + x0 + w].fill(label);
        }
    }
    LabelMap::new(side, side, labels).expect("sizes agree")
}

/// Prediction/reference pair of blob maps over the same grid.
pub fn blob_pair(side: usize, regions: u32, seed: u64) -> (LabelMap, LabelMap) {
    (blobs(side, regions, seed), blobs(side, regions, seed ^ 0x9e37_79b9))
}

/// Foreground masks of a blob pair.
pub fn mask_pair(side: usize, seed: u64) -> (BinaryMask, BinaryMask) {
    let (a, b) = blob_pair(side, 3, seed);
    let fg = |m: &LabelMap| m.binarize(segscore::Selector::AnyNonzero).expect("any-nonzero never fails");
    (fg(&a), fg(&b))
}
