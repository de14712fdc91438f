use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qsdl_core::alt;
use qsdl_core::sieve::{enumerate_for_v, SearchBox};

fn sieve_single_v(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_for_v");
    for v in [120u64, 3600, 216000] {
        g.bench_with_input(BenchmarkId::from_parameter(v), &v, |b, &v| {
            b.iter(|| enumerate_for_v(&SearchBox::new(black_box(v), 2..=10)).unwrap())
        });
    }
    g.finish();
}

fn sieve_range(c: &mut Criterion) {
    c.bench_function("enumerate_for_v 5..=2000", |b| {
        b.iter(|| (5..=2000u64).map(|v| enumerate_for_v(&SearchBox::new(v, 2..=10)).unwrap().len()).sum::<usize>())
    });
}

fn scans(c: &mut Criterion) {
    c.bench_function("intransitive_scan", |b| b.iter(|| alt::intransitive_scan(black_box(10)).unwrap()));
}

criterion_group!(benches, sieve_single_v, sieve_range, scans);
criterion_main!(benches);
