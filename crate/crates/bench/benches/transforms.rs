use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qfourier::fixtures::{function_algebra, group_algebra, sweedler_fixture, FiniteGroupTable};
use qfourier::padic::{padic_fourier, Ball, PAdic, SchwartzFunction};
use qfourier::quantum::build_dual;
use qfourier::{Cyclotomic, FiniteQuantumGroup, Scalar};

fn fixtures() -> Vec<FiniteQuantumGroup<Cyclotomic>> {
    let s3 = FiniteGroupTable::builtin("S3").unwrap();
    let z2z2 = FiniteGroupTable::builtin("Z2xZ2").unwrap();
    vec![
        function_algebra(&s3),
        group_algebra(&s3),
        group_algebra(&z2z2),
        sweedler_fixture(),
    ]
}

fn finite(c: &mut Criterion) {
    let mut group = c.benchmark_group("finite");
    for a in fixtures() {
        let x = a
            .element((0..a.dim()).map(|i| Cyclotomic::gaussian(i as i64 - 2, 1)).collect())
            .unwrap();
        let w = a.fourier(&x).unwrap();
        group.bench_with_input(BenchmarkId::new("fourier", a.id()), &x, |b, x| {
            b.iter(|| a.fourier(black_box(x)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("inverse_fourier", a.id()), &w, |b, w| {
            b.iter(|| a.inverse_fourier(black_box(w)).unwrap())
        });
        group.bench_function(BenchmarkId::new("build_dual", a.id()), |b| {
            b.iter(|| build_dual(black_box(&a)).unwrap())
        });
    }
    group.finish();
}

/// Three cells spread over a window of width `p^4`, and its transform.
fn wide(p: u64) -> (SchwartzFunction, SchwartzFunction) {
    let cells = [(-2, 1), (0, 1), (1, p - 1)].map(|(j, d)| {
        let c = PAdic::from_digits(p, [(j, d)]).unwrap();
        (Ball::new(&c, 2), Cyclotomic::gaussian(1, j))
    });
    let f = SchwartzFunction::from_cells(p, cells).unwrap();
    let g = padic_fourier(&f).unwrap();
    (f, g)
}

fn padic(c: &mut Criterion) {
    let mut group = c.benchmark_group("padic");
    group.sample_size(20);
    for p in [2u64, 3, 5, 7] {
        let h = SchwartzFunction::subgroup_indicator(p, 2);
        group.bench_with_input(BenchmarkId::new("subgroup_indicator", p), &h, |b, h| {
            b.iter(|| padic_fourier(black_box(h)).unwrap())
        });
        let (f, g) = wide(p);
        group.bench_with_input(BenchmarkId::new("sparse_wide", p), &f, |b, f| {
            b.iter(|| padic_fourier(black_box(f)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("dense_wide", p), &g, |b, g| {
            b.iter(|| padic_fourier(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, finite, padic);
criterion_main!(benches);
