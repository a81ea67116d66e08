//! Verification sweeps on a one-thread rayon pool versus the default pool.
//! Build with `--no-default-features` to time the sequential fallback instead.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ncmac::kostka::{det_check, kostka_matrix, triangular_products};
use ncmac::product_rule::verify_product_range;
use ncmac::qsym::duality_check;
use ncmac::statistics::Mode;

type Work = (&'static str, fn());

fn workloads() -> Vec<Work> {
    vec![
        ("kostka_matrix_10_multi", || {
            kostka_matrix(10, Mode::Multi);
        }),
        ("det_points_6_single", || {
            det_check(6, Mode::Single, 1).unwrap();
        }),
        ("duality_points_6", || {
            duality_check(6, 1).unwrap();
        }),
        ("triangular_points_5_multi", || {
            triangular_products(5, Mode::Multi, 1).unwrap();
        }),
        ("product_range_3", || {
            verify_product_range(3, 6, 1).unwrap();
        }),
    ]
}

fn sweeps(c: &mut Criterion) {
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let default = rayon::ThreadPoolBuilder::new().build().unwrap();
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    for (name, work) in workloads() {
        group.bench_with_input(BenchmarkId::new("one_thread", name), &work, |b, w| b.iter(|| single.install(w)));
        group.bench_with_input(BenchmarkId::new("default_pool", name), &work, |b, w| b.iter(|| default.install(w)));
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
