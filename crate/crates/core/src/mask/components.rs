use std::collections::VecDeque;

use super::LabelMap;

/// Relabels so that every 4-connected run of equal labels becomes its own
/// region. New ids are assigned from 0 in raster order of first pixel.
pub fn split_components(map: &LabelMap) -> LabelMap {
    let (w, h) = map.dims();
    let src = map.labels();
    let mut out = vec![u32::MAX; src.len()];
    let mut next = 0u32;
    let mut queue = VecDeque::new();
    for start in 0..src.len() {
        if out[start] != u32::MAX {
            continue;
        }
        let label = src[start];
        out[start] = next;
        queue.push_back(start);
        while let Some(i) = queue.pop_front() {
            let (x, y) = (i % w, i / w);
            let mut visit = |j: usize| {
                if out[j] == u32::MAX && src[j] == label {
                    out[j] = next;
                    queue.push_back(j);
                }
            };
            if x > 0 {
                visit(i - 1);
            }
            if x + 1 < w {
                visit(i + 1);
            }
            if y > 0 {
                visit(i - w);
            }
            if y + 1 < h {
                visit(i + w);
            }
        }
        next += 1;
    }
    LabelMap::new(w, h, out).expect("same shape as input")
}
