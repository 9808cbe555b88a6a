use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use tritile::kernel::quad_sign;
use tritile::numtheory::{rational_point_search, torsion_points, KNOWN_CURVES};
use tritile::verify;
use tritile_bench::{near_zero_quads, tilings};

fn bench_quad_sign(c: &mut Criterion) {
    let values = near_zero_quads(1000);
    c.bench_function("quad_sign/near_zero_1000", |b| {
        b.iter(|| values.iter().map(|v| quad_sign(black_box(v))).sum::<i32>())
    });
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(20);
    for (name, t) in tilings() {
        group.bench_function(&name, |b| b.iter(|| verify(black_box(&t))));
    }
    group.finish();
}

fn bench_curves(c: &mut Criterion) {
    let mut group = c.benchmark_group("curves");
    group.sample_size(10);
    for known in KNOWN_CURVES {
        group.bench_function(format!("torsion/{}", known.name), |b| {
            b.iter(|| torsion_points(black_box(&known.curve)).unwrap())
        });
    }
    let curve = KNOWN_CURVES[0].curve;
    group.bench_function("search/height_200", |b| {
        b.iter(|| rational_point_search(black_box(&curve), 200).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_quad_sign, bench_verify, bench_curves);
criterion_main!(benches);
