#![allow(dead_code)]

use proptest::prelude::*;
use segscore::{BinaryMask, LabelMap};

/// Label map of up to `max_side` x `max_side` pixels with up to `max_labels`
/// distinct labels.
pub fn label_map(max_side: usize, max_labels: u32) -> impl Strategy<Value = LabelMap> {
    (1..=max_side, 1..=max_side).prop_flat_map(move |(w, h)| {
        prop::collection::vec(0..max_labels, w * h).prop_map(move |v| LabelMap::new(w, h, v).unwrap())
    })
}

/// Two label maps on the same grid.
pub fn map_pair(max_side: usize, max_labels: u32) -> impl Strategy<Value = (LabelMap, LabelMap)> {
    (1..=max_side, 1..=max_side).prop_flat_map(move |(w, h)| {
        let side =
            move || prop::collection::vec(0..max_labels, w * h).prop_map(move |v| LabelMap::new(w, h, v).unwrap());
        (side(), side())
    })
}

/// Two binary masks on the same grid.
pub fn mask_pair(max_side: usize) -> impl Strategy<Value = (BinaryMask, BinaryMask)> {
    (1..=max_side, 1..=max_side).prop_flat_map(move |(w, h)| {
        let side =
            move || prop::collection::vec(any::<bool>(), w * h).prop_map(move |v| BinaryMask::new(w, h, v).unwrap());
        (side(), side())
    })
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}
