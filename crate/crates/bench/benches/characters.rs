use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use updown::symfunc::{berele_identity, frobenius_via_descents, frobenius_via_lr, schur};
use updown::Partition;

fn bench_characters(c: &mut Criterion) {
    let mu = Partition::new(vec![1, 1]).unwrap();
    c.bench_function("schur 321 in 6 vars", |b| {
        let shape = Partition::new(vec![3, 2, 1]).unwrap();
        b.iter(|| schur(black_box(&shape), 6).len())
    });
    c.bench_function("frobenius_via_lr r=6 mu=11 n=2", |b| b.iter(|| frobenius_via_lr(6, black_box(&mu), 2, 6).len()));
    c.bench_function("frobenius_via_descents r=6 mu=11 n=2", |b| {
        b.iter(|| frobenius_via_descents(6, black_box(&mu), 2, 6).len())
    });
    c.bench_function("berele r=6 n=2", |b| b.iter(|| berele_identity(black_box(6), 2).holds()));
}

criterion_group!(benches, bench_characters);
criterion_main!(benches);
