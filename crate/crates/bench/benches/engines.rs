use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lieh2_core::catalog;
use lieh2_core::cohomology::second_cohomology;
use lieh2_core::fock::{self, FockConfig};
use lieh2_core::matrix::rref;
use lieh2_core::rational::ratio;
use lieh2_core::weyl::WeylAlgebra;

fn bench_h2(c: &mut Criterion) {
    let mut group = c.benchmark_group("second_cohomology");
    for two_n in [2usize, 4, 6] {
        let l = catalog::inhomogeneous_symplectic(two_n).unwrap().algebra;
        group.bench_with_input(BenchmarkId::new("isp", two_n), &l, |b, l| {
            b.iter(|| second_cohomology(l).unwrap())
        });
    }
    group.finish();
}

fn bench_rref(c: &mut Criterion) {
    let m: Vec<Vec<_>> = (0..24)
        .map(|i| {
            (0..24)
                .map(|j| ratio((i * 7 + j * 3) as i64 % 11 - 5, (j + 1) as i64))
                .collect()
        })
        .collect();
    c.bench_function("rref_24x24_rational", |b| b.iter(|| rref(&m)));
}

fn bench_normal_order(c: &mut Criterion) {
    let alg = WeylAlgebra::with_degree_cap(2, 16);
    let word: Vec<usize> = (0..10).map(|i| (i * 3 + 2) % 4).collect();
    c.bench_function("normal_order_len10_n2", |b| {
        b.iter(|| alg.normal_order(&word).unwrap())
    });
}

fn bench_fock(c: &mut Criterion) {
    let config = FockConfig {
        modes: 2,
        levels: 8,
        lambda: 1.0,
    };
    c.bench_function("fock_build_and_ww_n2_levels8", |b| {
        b.iter(|| {
            let z = fock::build_z(&config).unwrap();
            let w = fock::build_w(&config, &z).unwrap();
            fock::ww_check(&config, &w, 4, 1e-9).unwrap()
        })
    });
}

criterion_group!(benches, bench_h2, bench_rref, bench_normal_order, bench_fock);
criterion_main!(benches);
