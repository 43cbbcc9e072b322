use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use segscore::consistency::consistency_errors;
use segscore::distance::{boundaries, SurfaceDistances};
use segscore::harness::{evaluate_dataset, evaluate_pair, Dataset, DatasetEntry, EvalOptions, MetricSelection};
use segscore::info::partition_entropy;
use segscore::overlap::rand_index;
use segscore::{distance_field, extract_boundary};
use segscore_bench::{blob_pair, blobs, mask_pair};

const SIDES: [usize; 3] = [64, 256, 512];

fn partition(c: &mut Criterion) {
    let mut g = c.benchmark_group("partition");
    for side in SIDES {
        let (a, b) = blob_pair(side, 12, 1);
        g.bench_with_input(BenchmarkId::new("rand_index", side), &(&a, &b), |bench, (a, b)| {
            bench.iter(|| rand_index(black_box(a), black_box(b)))
        });
        g.bench_with_input(BenchmarkId::new("entropy", side), &(&a, &b), |bench, (a, b)| {
            bench.iter(|| partition_entropy(black_box(a), black_box(b)))
        });
        g.bench_with_input(BenchmarkId::new("consistency", side), &(&a, &b), |bench, (a, b)| {
            bench.iter(|| consistency_errors(black_box(a), black_box(b)))
        });
    }
    g.finish();
}

fn boundary(c: &mut Criterion) {
    let mut g = c.benchmark_group("boundary");
    for side in SIDES {
        let (a, b) = mask_pair(side, 2);
        let ba = extract_boundary(&a);
        g.bench_with_input(BenchmarkId::new("extract", side), &a, |bench, a| {
            bench.iter(|| extract_boundary(black_box(a)))
        });
        g.bench_with_input(BenchmarkId::new("distance_field", side), &ba, |bench, ba| {
            bench.iter(|| distance_field(black_box(ba), side, side))
        });
        g.bench_with_input(BenchmarkId::new("surface_distances", side), &(&a, &b), |bench, (a, b)| {
            bench.iter(|| {
                let (ba, bb) = boundaries(a, b);
                SurfaceDistances::new(&ba, &bb)
            })
        });
    }
    g.finish();
}

fn harness(c: &mut Criterion) {
    let sel = MetricSelection::all();
    let opts = EvalOptions::default();
    let (a, b) = blob_pair(256, 8, 3);
    c.bench_function("evaluate_pair/256/all", |bench| {
        bench.iter(|| evaluate_pair(black_box(&a), std::slice::from_ref(&b), &sel, &opts))
    });
    let entries = (0..16)
        .map(|i| {
            DatasetEntry::new(format!("img{i}"), blobs(128, 6, i), vec![blobs(128, 6, i + 100), blobs(128, 6, i + 200)])
        })
        .collect();
    let ds = Dataset::new(entries).expect("valid dataset");
    c.bench_function("evaluate_dataset/16x128/all", |bench| {
        bench.iter(|| evaluate_dataset(black_box(&ds), &sel, &opts))
    });
}

criterion_group!(benches, partition, boundary, harness);
criterion_main!(benches);
