//! Timings for the kernels that dominate sweeps: cover-inequality solving,
//! Betti tables over the lcm lattice, cover enumeration, and isomorphism
//! deduped graph enumeration. The memoized entry points are deliberately
//! absent; they would time a map lookup.

use criterion::{criterion_group, criterion_main, Criterion};

use edgeal_bench::{c5_squared, c7, k5_covers};
use edgeal_core::betti::{betti_table, regularity, taylor_betti_oracle};
use edgeal_core::graphs::{complete, enumerate_graphs};
use edgeal_core::symbolic::minimal_solutions;

fn kernels(c: &mut Criterion) {
    let covers = k5_covers();
    c.bench_function("minimal_solutions k5 s3", |b| {
        b.iter(|| minimal_solutions(&covers, 3))
    });

    let ideal = c5_squared();
    c.bench_function("betti_table c5 squared", |b| b.iter(|| betti_table(&ideal)));
    c.bench_function("regularity c5 squared", |b| b.iter(|| regularity(&ideal)));
    c.bench_function("taylor_betti_oracle c5 squared", |b| {
        b.iter(|| taylor_betti_oracle(&ideal))
    });

    let k8 = complete(8);
    c.bench_function("minimal_vertex_covers k8", |b| {
        b.iter(|| k8.minimal_vertex_covers())
    });

    let heptagon = c7();
    c.bench_function("canonical_form c7", |b| {
        b.iter(|| heptagon.canonical_form())
    });

    c.bench_function("enumerate_graphs n6 deduped", |b| {
        b.iter(|| enumerate_graphs(6, true).expect("n in range").count())
    });
}

criterion_group!(benches, kernels);
criterion_main!(benches);
