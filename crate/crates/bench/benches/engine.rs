use criterion::{black_box, criterion_group, criterion_main, Criterion};

use fulltwist::{
    enumerate, enumerate_rugged, mellit_superpolynomial, two_strand_homfly, verify_full_twist,
    TorusShape,
};

fn shape(m: u32, n: u32) -> TorusShape {
    TorusShape::new(m, n).unwrap()
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.bench_function("full_11_7", |b| {
        b.iter(|| enumerate(black_box(shape(11, 7))).count())
    });
    group.bench_function("rugged_16_7", |b| {
        b.iter(|| enumerate_rugged(black_box(shape(16, 7))).count())
    });
    group.finish();
}

fn bench_statistics(c: &mut Criterion) {
    let paths: Vec<_> = enumerate(shape(9, 5)).collect();
    c.bench_function("statistics_9_5", |b| {
        b.iter(|| {
            let mut acc = 0u64;
            for p in &paths {
                acc += p.area() + p.h_statistic();
                let (_p0, vs) = p.outer_vertices();
                acc += vs.iter().map(|v| v.k).sum::<u64>();
            }
            acc
        })
    });
}

fn bench_superpolynomial(c: &mut Criterion) {
    c.bench_function("superpoly_8_5", |b| {
        b.iter(|| mellit_superpolynomial(black_box(shape(8, 5))).unwrap())
    });
}

fn bench_full_twist(c: &mut Criterion) {
    c.bench_function("full_twist_7_5", |b| {
        b.iter(|| {
            let r = verify_full_twist(black_box(shape(7, 5))).unwrap();
            assert!(r.pass);
            r
        })
    });
}

fn bench_oracle(c: &mut Criterion) {
    c.bench_function("two_strand_homfly_11", |b| {
        b.iter(|| two_strand_homfly(black_box(11)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_statistics,
    bench_superpolynomial,
    bench_full_twist,
    bench_oracle
);
criterion_main!(benches);
