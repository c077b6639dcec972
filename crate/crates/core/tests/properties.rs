//! Property-based suites: bilinearity/antisymmetry of brackets, rational
//! linear algebra invariants, Weyl commutator identities, and format
//! round-trips, over randomly generated inputs.

use num_traits::Zero;
use proptest::prelude::*;

use lieh2_core::algebra::AlgebraElement;
use lieh2_core::catalog;
use lieh2_core::matrix::{nullspace_basis, rank, rref};
use lieh2_core::rational::{rat, ratio, Rat};
use lieh2_core::weyl::{WeylAlgebra, WeylPolynomial};
use lieh2_core::LieAlgebra;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn sample_algebras() -> Vec<LieAlgebra> {
    vec![
        catalog::heisenberg(1).unwrap().algebra,
        catalog::sp(2).unwrap().algebra,
        catalog::inhomogeneous_symplectic(2).unwrap().algebra,
        catalog::lorentz(2).unwrap().algebra,
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bracket_is_bilinear_and_antisymmetric(
        which in 0usize..4,
        xs in prop::collection::vec(arb_rat(), 6),
        ys in prop::collection::vec(arb_rat(), 6),
        zs in prop::collection::vec(arb_rat(), 6),
        a in arb_rat(),
        b in arb_rat(),
    ) {
        let l = &sample_algebras()[which];
        let d = l.dim;
        let x = AlgebraElement { coeffs: xs[..d].to_vec() };
        let y = AlgebraElement { coeffs: ys[..d].to_vec() };
        let z = AlgebraElement { coeffs: zs[..d].to_vec() };

        // [ax + by, z] = a[x,z] + b[y,z]
        let mut combo = AlgebraElement::zero(d);
        for i in 0..d {
            combo.coeffs[i] = &a * &x.coeffs[i] + &b * &y.coeffs[i];
        }
        let lhs = l.bracket(&combo, &z).unwrap();
        let xz = l.bracket(&x, &z).unwrap();
        let yz = l.bracket(&y, &z).unwrap();
        for i in 0..d {
            prop_assert_eq!(
                lhs.coeffs[i].clone(),
                &a * &xz.coeffs[i] + &b * &yz.coeffs[i]
            );
        }

        // [x,y] = -[y,x] and [x,x] = 0
        let xy = l.bracket(&x, &y).unwrap();
        let yx = l.bracket(&y, &x).unwrap();
        for i in 0..d {
            prop_assert_eq!(xy.coeffs[i].clone(), -yx.coeffs[i].clone());
        }
        prop_assert!(l.bracket(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn rref_is_idempotent_and_rank_is_transpose_invariant(
        rows in 1usize..5,
        cols in 1usize..5,
        entries in prop::collection::vec(arb_rat(), 16),
    ) {
        let m: Vec<Vec<Rat>> = (0..rows)
            .map(|i| (0..cols).map(|j| entries[i * 4 + j].clone()).collect())
            .collect();
        let (reduced, r, _) = rref(&m);
        let (again, r2, _) = rref(&reduced);
        prop_assert_eq!(r, r2);
        prop_assert_eq!(&reduced, &again);

        let t: Vec<Vec<Rat>> = (0..cols)
            .map(|j| (0..rows).map(|i| m[i][j].clone()).collect())
            .collect();
        prop_assert_eq!(rank(&m), rank(&t));

        // rank-nullity
        prop_assert_eq!(nullspace_basis(&m, cols).len(), cols - rank(&m));
    }

    #[test]
    fn weyl_commutator_is_antisymmetric_and_satisfies_jacobi(
        n in 1usize..=2,
        seeds in prop::collection::vec((0usize..8, 0usize..8, arb_rat()), 3..6),
    ) {
        let alg = WeylAlgebra::new(n);
        // three random polynomials of degree <= 2 built from generator products
        let build = |offset: usize| {
            let mut p = WeylPolynomial::zero(n);
            for (a, b, c) in seeds.iter().skip(offset % 2) {
                let word = [a % (2 * n), b % (2 * n)];
                let q = alg.normal_order(&word).unwrap().scale(c);
                p = p.add(&q);
            }
            p
        };
        let x = build(0);
        let y = build(1);
        let z = build(2);

        let xy = alg.commutator(&x, &y).unwrap();
        let yx = alg.commutator(&y, &x).unwrap();
        prop_assert_eq!(xy.clone(), yx.scale(&rat(-1)));

        // [[x,y],z] + [[y,z],x] + [[z,x],y] = 0
        let t1 = alg.commutator(&xy, &z).unwrap();
        let t2 = alg.commutator(&alg.commutator(&y, &z).unwrap(), &x).unwrap();
        let t3 = alg.commutator(&alg.commutator(&z, &x).unwrap(), &y).unwrap();
        prop_assert!(t1.add(&t2).add(&t3).is_zero());
    }

    #[test]
    fn rational_text_round_trip(p in -1000i64..=1000, q in 1i64..=999) {
        let r = ratio(p, q);
        let text = lieh2_core::rational::format_rat(&r);
        let back = lieh2_core::rational::parse_rat(&text).unwrap();
        prop_assert_eq!(r, back);
    }

    #[test]
    fn dsl_round_trip_preserves_random_antisymmetric_tables(
        dim in 2usize..=4,
        entries in prop::collection::vec(arb_rat(), 6),
    ) {
        // random (not necessarily Jacobi) antisymmetric table with a single
        // target generator per pair; document round-trip is table-exact
        let names: Vec<String> = (0..dim).map(|i| format!("X{}", i + 1)).collect();
        let mut brackets = std::collections::BTreeMap::new();
        let mut e = entries.iter().cycle();
        for a in 0..dim {
            for b in (a + 1)..dim {
                let c = e.next().unwrap().clone();
                if !c.is_zero() {
                    brackets.insert((a, b), vec![((a + b) % dim, c)]);
                }
            }
        }
        let l = LieAlgebra::new("random", names, brackets).unwrap();
        let doc = lieh2_core::dsl::AlgebraDocument::from_algebra(&l);
        let text = lieh2_core::dsl::print_algebra(&doc);
        let back = lieh2_core::dsl::parse_algebra(&text)
            .unwrap()
            .to_algebra()
            .unwrap();
        prop_assert!(back.same_table(&l));
    }
}
