use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use fgtqft::builders;
use fgtqft::{enumerate_homs, fg_matrix, identity_cospan, nat_classes, EnumConfig, FiniteGroup};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_homs");
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let s4 = FiniteGroup::symmetric(4).unwrap();
    let cfg = EnumConfig::default();
    for n in [2, 3, 4] {
        let p = builders::bouquet(n);
        g.bench_with_input(BenchmarkId::new("bouquet/S3", n), &p, |b, p| b.iter(|| enumerate_homs(black_box(p), &s3, &cfg)));
    }
    let pants_m = builders::pair_of_pants().m().clone();
    g.bench_function("pants-middle/S4", |b| b.iter(|| enumerate_homs(black_box(&pants_m), &s4, &cfg)));
    g.finish();
}

fn classes(c: &mut Criterion) {
    let mut g = c.benchmark_group("nat_classes");
    let cfg = EnumConfig::default();
    for (name, grp) in [("S3", FiniteGroup::symmetric(3).unwrap()), ("S4", FiniteGroup::symmetric(4).unwrap())] {
        let p = builders::two_circles();
        g.bench_function(format!("two-circles/{name}"), |b| b.iter(|| nat_classes(black_box(&p), &grp, &cfg)));
        let q = builders::bouquet(2);
        g.bench_function(format!("figure-eight/{name}"), |b| b.iter(|| nat_classes(black_box(&q), &grp, &cfg)));
    }
    g.finish();
}

fn matrices(c: &mut Criterion) {
    let mut g = c.benchmark_group("fg_matrix");
    g.sample_size(20);
    let s3 = FiniteGroup::symmetric(3).unwrap();
    let cases = [
        ("pair-of-pants", builders::pair_of_pants()),
        ("three-strand-tube", builders::three_strand_tube()),
        ("artin-3-1", builders::artin_braid_generator(3, 1, false).unwrap()),
        ("identity-two-circles", identity_cospan(&Arc::new(builders::two_circles()))),
    ];
    for (name, cospan) in &cases {
        for threads in [1, 4] {
            let cfg = EnumConfig::default().with_parallelism(threads);
            g.bench_function(format!("{name}/S3/t{threads}"), |b| b.iter(|| fg_matrix(black_box(cospan), &s3, &cfg)));
        }
    }
    g.finish();
}

criterion_group!(benches, enumeration, classes, matrices);
criterion_main!(benches);
