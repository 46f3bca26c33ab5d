use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use powersum_bench::{all_closed_forms, brute_even, c_routes, materialize, partitions_row};
use powersum_core::verify::{run_suite, CheckSpec, Suite};
use powersum_core::Family;

fn power_sums(c: &mut Criterion) {
    let mut group = c.benchmark_group("power_sums");
    for k in [2usize, 5, 10] {
        group.bench_with_input(BenchmarkId::new("closed_forms", k), &k, |b, &k| {
            b.iter(|| all_closed_forms(black_box(k), black_box(100)))
        });
        group.bench_with_input(BenchmarkId::new("brute", k), &k, |b, &k| {
            b.iter(|| brute_even(black_box(k), black_box(100)))
        });
    }
    group.finish();
}

fn triangles(c: &mut Criterion) {
    c.bench_function("partitions_row_10", |b| {
        b.iter(|| partitions_row(black_box(10)))
    });
    c.bench_function("salie_rows_20", |b| {
        b.iter(|| materialize(Family::Salie, black_box(20)))
    });
}

fn faulhaber(c: &mut Criterion) {
    c.bench_function("c_routes_8", |b| b.iter(|| c_routes(black_box(8))));
}

fn verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("all_k4_n20", |b| {
        b.iter(|| run_suite(&CheckSpec::suite(Suite::All, 4, 20)).unwrap())
    });
    group.finish();
}

criterion_group!(benches, power_sums, triangles, faulhaber, verify);
criterion_main!(benches);
