use criterion::{black_box, criterion_group, criterion_main, Criterion};

use grassmorph::cayley_bacharach::cb_check;
use grassmorph::classify::{table, Mode};
use grassmorph::morphisms::{example_split, EliminationConfig};
use grassmorph::poly::{common_zeros, HomPoly};
use grassmorph::Seed;
use grassmorph_bench::{conic_points, dense_matrix};

fn rank(c: &mut Criterion) {
    for n in [8, 16, 32] {
        let m = dense_matrix(n);
        c.bench_function(&format!("rank {n}x{n}"), |b| b.iter(|| black_box(&m).rank()));
    }
}

fn zeros(c: &mut Criterion) {
    let (x, y, z) = (HomPoly::var(0), HomPoly::var(1), HomPoly::var(2));
    let f = &(&x * &x) - &(&y * &z);
    let g = &(&(&y * &y) * &y) - &(&(&x * &z) * &z);
    c.bench_function("common zeros conic and cubic", |b| {
        b.iter(|| common_zeros(black_box(&f), black_box(&g), &mut Seed(0).stream("bench")).unwrap())
    });
    let s = example_split(2, 3).unwrap();
    let cfg = EliminationConfig::default();
    c.bench_function("class of split (2,3)", |b| b.iter(|| s.cohomology_class(&cfg, Seed(0)).unwrap()));
}

fn classification(c: &mut Criterion) {
    c.bench_function("table c <= 12", |b| b.iter(|| table(black_box(12), Mode::Full)));
}

fn cayley_bacharach(c: &mut Criterion) {
    for (n, d) in [(10, 3), (21, 5)] {
        let z = conic_points(n);
        c.bench_function(&format!("cb_check {n} points degree {d}"), |b| b.iter(|| cb_check(black_box(&z), d)));
    }
}

criterion_group!(benches, rank, zeros, classification, cayley_bacharach);
criterion_main!(benches);
