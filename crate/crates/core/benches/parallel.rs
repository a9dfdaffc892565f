//! Benchmarks comparing the data-parallel and sequential code paths on the
//! hot operations: species enumeration, the divergence matrix, and chain
//! complex homology.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use aromalab_core::complexes::{build_ce_complex, CeVariant};
use aromalab_core::linalg::{BasisIndex, SparseRationalMatrix};
use aromalab_core::operad::div;
use aromalab_core::par;
use aromalab_core::species::{enumerate_aromas, enumerate_rooted_trees};

fn labels(n: usize) -> Vec<u32> {
    (1..=n as u32).collect()
}

fn modes() -> [(&'static str, bool); 2] {
    [("parallel", true), ("sequential", false)]
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate-trees");
    for (mode, enabled) in modes() {
        group.bench_with_input(BenchmarkId::new(mode, 6), &enabled, |b, &enabled| {
            par::set_parallel(enabled);
            b.iter(|| enumerate_rooted_trees(&labels(6)).unwrap().len());
        });
    }
    group.finish();
    par::set_parallel(true);
}

fn bench_divergence_matrix(c: &mut Criterion) {
    let n = 5;
    let trees = enumerate_rooted_trees(&labels(n)).unwrap();
    let ambient = BasisIndex::new(enumerate_aromas(&labels(n), 1).unwrap());
    let mut group = c.benchmark_group("divergence-matrix");
    for (mode, enabled) in modes() {
        group.bench_with_input(BenchmarkId::new(mode, n), &enabled, |b, &enabled| {
            par::set_parallel(enabled);
            b.iter(|| {
                SparseRationalMatrix::of_map(&trees, &ambient, div)
                    .unwrap()
                    .rank()
            });
        });
    }
    group.finish();
    par::set_parallel(true);
}

fn bench_homology(c: &mut Criterion) {
    let mut group = c.benchmark_group("ce-homology");
    group.sample_size(10);
    for (mode, enabled) in modes() {
        group.bench_with_input(BenchmarkId::new(mode, 4), &enabled, |b, &enabled| {
            par::set_parallel(enabled);
            b.iter(|| {
                build_ce_complex(CeVariant::Reduced, 4)
                    .unwrap()
                    .complex()
                    .homology_dimensions()
            });
        });
    }
    group.finish();
    par::set_parallel(true);
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_divergence_matrix,
    bench_homology
);
criterion_main!(benches);
