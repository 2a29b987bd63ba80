use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rrclosure::ass::{ass_rr_sequence, ass_successive_rr};
use rrclosure::closure::{rr_ideal, rr_power};
use rrclosure::{ChainLimits, MonomialIdeal, QuotientPresentation};
use rrclosure_bench::{classic_ideal, mixed_ideal, rank_two_module};

// `power` is memoized, so the uncached cost is measured by repeated products.
fn powers(c: &mut Criterion) {
    let mut g = c.benchmark_group("power");
    for ideal in [classic_ideal(), mixed_ideal()] {
        for n in [2u32, 4, 6] {
            g.bench_with_input(BenchmarkId::new(format!("dim{}", ideal.dim()), n), &n, |b, &n| {
                b.iter(|| {
                    let mut acc = MonomialIdeal::unit(ideal.dim());
                    for _ in 0..n {
                        acc = acc.product(black_box(&ideal)).unwrap();
                    }
                    acc
                })
            });
        }
    }
    g.finish();
}

fn colons(c: &mut Criterion) {
    let i = mixed_ideal();
    let big = i.power(5).unwrap();
    let small = i.power(2).unwrap();
    c.bench_function("colon I^5 : I^2", |b| {
        b.iter(|| black_box(&big).colon(black_box(&small)).unwrap())
    });
}

fn closures(c: &mut Criterion) {
    let limits = ChainLimits::default();
    c.bench_function("closure classic", |b| {
        b.iter(|| rr_ideal(black_box(&classic_ideal()), limits).unwrap())
    });
    let i = mixed_ideal();
    let ring = QuotientPresentation::ring(3);
    let module = rank_two_module();
    let mut g = c.benchmark_group("rr_power");
    for n in [1u32, 2, 3] {
        g.bench_with_input(BenchmarkId::new("ring", n), &n, |b, &n| {
            b.iter(|| rr_power(&i, n, &ring, limits).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("rank2", n), &n, |b, &n| {
            b.iter(|| rr_power(&i, n, &module, limits).unwrap())
        });
    }
    g.finish();
}

fn sequences(c: &mut Criterion) {
    let limits = ChainLimits::default();
    let i = mixed_ideal();
    let module = rank_two_module();
    let mut g = c.benchmark_group("ass");
    g.sample_size(10);
    g.bench_function("quotient sequence n<=4", |b| {
        b.iter(|| ass_rr_sequence(&i, &module, 4, limits).unwrap())
    });
    g.bench_function("successive sequence n<=4", |b| {
        b.iter(|| ass_successive_rr(&i, &module, 4, limits).unwrap())
    });
    g.finish();
}

criterion_group!(benches, powers, colons, closures, sequences);
criterion_main!(benches);
