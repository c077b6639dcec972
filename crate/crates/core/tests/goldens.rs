//! Frozen cohomology dimensions for the catalog families, pinned against
//! the declared metadata on each entry.

use lieh2_core::catalog::{self, CatalogEntry};
use lieh2_core::cohomology::second_cohomology;

fn check(entry: CatalogEntry, expected: usize) {
    let h = second_cohomology(&entry.algebra).unwrap();
    assert_eq!(h.dim_h2, expected, "{}", entry.algebra.name);
    if let Some(declared) = entry.declared.h2_dim {
        assert_eq!(declared, expected, "{} declared value", entry.algebra.name);
    }
}

#[test]
fn abelian_dimensions() {
    for n in 1..=5 {
        check(catalog::abelian(n).unwrap(), n * (n - 1) / 2);
    }
}

#[test]
fn heisenberg_dimensions() {
    check(catalog::heisenberg(1).unwrap(), 2);
    check(catalog::heisenberg(2).unwrap(), 5);
}

#[test]
fn sp_whitehead() {
    check(catalog::sp(2).unwrap(), 0);
    check(catalog::sp(4).unwrap(), 0);
}

#[test]
fn lorentz_semisimple() {
    check(catalog::lorentz(2).unwrap(), 0);
    check(catalog::lorentz(3).unwrap(), 0);
}

#[test]
fn inhomogeneous_lorentz_rigid() {
    check(catalog::inhomogeneous_lorentz(2).unwrap(), 0);
    check(catalog::inhomogeneous_lorentz(3).unwrap(), 0);
}

#[test]
fn inhomogeneous_symplectic_one_dimensional() {
    check(catalog::inhomogeneous_symplectic(2).unwrap(), 1);
    check(catalog::inhomogeneous_symplectic(4).unwrap(), 1);
    check(catalog::inhomogeneous_symplectic(6).unwrap(), 1);
}

#[test]
fn hsp_exhausted() {
    check(catalog::hsp(2).unwrap(), 0);
    check(catalog::hsp(4).unwrap(), 0);
}

#[test]
fn every_catalog_entry_satisfies_jacobi() {
    let entries = [
        catalog::abelian(4).unwrap(),
        catalog::heisenberg(3).unwrap(),
        catalog::sp(6).unwrap(),
        catalog::lorentz(4).unwrap(),
        catalog::inhomogeneous_lorentz(4).unwrap(),
        catalog::inhomogeneous_symplectic(6).unwrap(),
        catalog::hsp(6).unwrap(),
    ];
    for e in entries {
        assert!(e.algebra.is_jacobi(), "{}", e.algebra.name);
    }
}
