//! Determinant benchmarks: the default (rayon, with the `parallel`
//! feature) elimination against the always-available sequential path,
//! on the number-valued and polynomial-valued moment matrices.
//!
//! Build with `--no-default-features` to measure the pure sequential
//! build; in that configuration both entry points run the same code.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hankelfrac::hankel::{bareiss, hankel_matrix};
use hankelfrac::seq::{MomentSeq, SeqSpec};

fn matrix_for(spec: SeqSpec, n: usize) -> bareiss::Matrix {
    let seq = MomentSeq::new(spec);
    hankel_matrix(&seq, n).entries
}

fn bench_determinants(c: &mut Criterion) {
    let cases = vec![
        ("bernoulli-num", SeqSpec::BernoulliNum, 12usize),
        ("euler-num", SeqSpec::EulerNum, 12),
        ("bernoulli-odd-half", SeqSpec::BernoulliOddHalf, 6),
        ("euler-nu-half-1", SeqSpec::EulerNuHalf(1), 6),
    ];
    let mut group = c.benchmark_group("hankel_det");
    for (name, spec, n) in cases {
        // materialize once so only the elimination is measured
        let matrix = matrix_for(spec, n);
        group.bench_with_input(
            BenchmarkId::new("default", format!("{name}/n{n}")),
            &matrix,
            |b, m| b.iter(|| black_box(bareiss::det(m.clone()))),
        );
        group.bench_with_input(
            BenchmarkId::new("sequential", format!("{name}/n{n}")),
            &matrix,
            |b, m| b.iter(|| black_box(bareiss::det_sequential(m.clone()))),
        );
    }
    group.finish();
}

criterion_group!(benches, bench_determinants);
criterion_main!(benches);
