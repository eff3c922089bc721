//! Construction and recognition throughput.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use mptkit_core::{
    common_neighborhood_certificates, contact_lsystem_from_outerplanar,
    cyclic_segments_from_order, is_interval_graph, order_from_rep, random_maximal_outerplanar,
    random_mpt_rep, two_interval_decomposition,
};

fn bench_two_interval(c: &mut Criterion) {
    let mut group = c.benchmark_group("two_interval_decomposition");
    group.sample_size(10);
    for n in [50usize, 200] {
        let rep = random_mpt_rep(n, 11);
        group.bench_with_input(BenchmarkId::from_parameter(n), &rep, |b, rep| {
            b.iter(|| two_interval_decomposition(black_box(rep)))
        });
    }
    group.finish();
}

fn bench_cyclic_segments(c: &mut Criterion) {
    let mut group = c.benchmark_group("cyclic_segments");
    group.sample_size(10);
    for n in [50usize, 200] {
        let rep = random_mpt_rep(n, 11);
        let g = rep.adjacency();
        let ord = order_from_rep(&rep);
        group.bench_with_input(BenchmarkId::from_parameter(n), &(g, ord), |b, (g, ord)| {
            b.iter(|| cyclic_segments_from_order(black_box(g), black_box(ord)).unwrap())
        });
    }
    group.finish();
}

fn bench_contact(c: &mut Criterion) {
    let mut group = c.benchmark_group("outerplanar_contact");
    group.sample_size(10);
    for n in [50usize, 100] {
        let g = random_maximal_outerplanar(n, 11);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| contact_lsystem_from_outerplanar(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn bench_interval_recognition(c: &mut Criterion) {
    let mut group = c.benchmark_group("interval_recognition");
    group.sample_size(10);
    for n in [40usize, 80] {
        let g = mptkit_core::random_interval_rep(n, 11).adjacency();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| is_interval_graph(black_box(g)))
        });
    }
    group.finish();
}

fn bench_certificates(c: &mut Criterion) {
    let mut group = c.benchmark_group("common_neighborhood_certificates");
    group.sample_size(10);
    for n in [20usize, 40] {
        let g = random_mpt_rep(n, 11).adjacency();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| common_neighborhood_certificates(black_box(g)))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_two_interval,
    bench_cyclic_segments,
    bench_contact,
    bench_interval_recognition,
    bench_certificates
);
criterion_main!(benches);
