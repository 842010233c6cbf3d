//! Benchmark bodies shared by the `benches/` entry points.

use std::hint::black_box;

use criterion::{BenchmarkId, Criterion};
use hyperseq::combcert::{certify, comb_poly, AttachedPolys};
use hyperseq::formulas::{path_poly, pknl_table};
use hyperseq::hypergraph::hypercomb;
use hyperseq::polyseq::is_real_rooted;
use hyperseq::Enumerator;

pub fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_strong/hypercomb");
    let e = Enumerator::default();
    for n in [3, 5, 7] {
        let h = hypercomb(n, 3).expect("valid comb");
        group.bench_with_input(BenchmarkId::from_parameter(h.n_vertices()), &h, |b, h| {
            b.iter(|| e.count_strong(black_box(h)).expect("within limit"))
        });
    }
    group.finish();
}

pub fn formulas(c: &mut Criterion) {
    c.bench_function("pknl_table/ell5_n60", |b| {
        b.iter(|| pknl_table(black_box(5), black_box(60)).expect("valid"))
    });
    c.bench_function("comb_poly/ell3_n500", |b| {
        b.iter(|| comb_poly(black_box(500), black_box(3)).expect("valid"))
    });
}

pub fn real_roots(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_real_rooted/path_poly");
    for n in [10, 40, 80] {
        let p = path_poly(n, 4).expect("valid");
        group.bench_with_input(BenchmarkId::from_parameter(n), &p, |b, p| {
            b.iter(|| is_real_rooted(black_box(p)).expect("nonzero"))
        });
    }
    group.finish();
}

pub fn certificate(c: &mut Criterion) {
    let polys = AttachedPolys::hypercomb(12).expect("valid");
    c.bench_function("certify/comb_ell12", |b| {
        b.iter(|| certify(black_box(&polys)))
    });
}
