use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use dyck_poset::conjecture::scan_rank2_max;
use dyck_poset::word::{staircase, two_peak};
use dyck_poset::{contains, generate_all, DyckWord, Interval, Limits};

fn containment(c: &mut Criterion) {
    let limits = Limits::default();
    let words = generate_all(8, &limits).unwrap();
    let top = staircase(12).unwrap();
    c.bench_function("contains/semilength8_in_staircase12", |b| {
        b.iter(|| {
            words
                .iter()
                .filter(|w| contains(w, black_box(&top)))
                .count()
        })
    });
}

fn generation(c: &mut Criterion) {
    let limits = Limits::default();
    c.bench_function("generate_all/12", |b| {
        b.iter(|| generate_all(black_box(12), &limits).unwrap().len())
    });
}

fn intervals(c: &mut Criterion) {
    let limits = Limits::new(15);
    let ud: DyckWord = "UD".parse().unwrap();
    let stair = staircase(9).unwrap();
    c.bench_function("interval/staircase9", |b| {
        b.iter(|| Interval::build(ud, black_box(stair), &limits).unwrap().s1())
    });
    let q = two_peak(6, 6, 3).unwrap();
    c.bench_function("interval/two_peak_6_6_3_mobius", |b| {
        b.iter(|| {
            Interval::build(ud, black_box(q), &limits)
                .unwrap()
                .mobius()
                .unwrap()
        })
    });
}

fn scans(c: &mut Criterion) {
    let limits = Limits::default();
    let mut group = c.benchmark_group("scan");
    group.sample_size(10);
    group.bench_function("rank2max/4", |b| {
        b.iter(|| scan_rank2_max(black_box(4), &limits).unwrap().observed)
    });
    group.finish();
}

criterion_group!(benches, containment, generation, intervals, scans);
criterion_main!(benches);
