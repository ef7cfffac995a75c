use contact_core::coadjoint::{is_stable_by_elimination, is_stable_point, stabiliser};
use contact_core::families::{construct, FamilySpec};
use contact_core::lie::LieAlgebra;
use contact_core::linalg::{determinant, pfaffian, rank, rank_kernel, rat, rref, Matrix, Rat, SkewMat};
use contact_core::poly::{poly_gcd2, symbolic_pfaffian, MPoly};
use num_traits::Zero;
use proptest::prelude::*;

fn algebra(i: usize) -> LieAlgebra {
    let specs = [
        FamilySpec::Heisenberg(2),
        FamilySpec::BorelSl3,
        FamilySpec::Sl(3),
        FamilySpec::Gl(2),
        FamilySpec::Q(1, 2),
        FamilySpec::R(1, 1),
        FamilySpec::QBar(1, 1),
        FamilySpec::Sp4Parabolic,
        FamilySpec::Sl2MCopies(2),
    ];
    construct(&specs[i % specs.len()]).unwrap().algebra
}

fn point(v: &[i64], n: usize) -> Vec<Rat> {
    (0..n).map(|i| rat(v[i % v.len()])).collect()
}

fn skew(n: usize, entries: &[i64]) -> SkewMat {
    let mut k = 0;
    SkewMat::from_upper(n, |_, _| {
        k += 1;
        rat(entries[(k - 1) % entries.len()])
    })
}

fn poly(terms: &[(u16, u16, u16, i64)]) -> MPoly {
    terms.iter().fold(MPoly::zero(3), |acc, &(a, b, c, k)| {
        let m = MPoly::var(3, 0)
            .pow(a.into())
            .mul(&MPoly::var(3, 1).pow(b.into()))
            .mul(&MPoly::var(3, 2).pow(c.into()));
        acc.add(&m.scale(&rat(k)))
    })
}

fn small_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec((0u16..3, 0u16..3, 0u16..2, -3i64..=3), 1..4).prop_map(|t| poly(&t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pfaffian_squares_to_determinant(half in 1usize..5, entries in prop::collection::vec(-5i64..=5, 1..30)) {
        let m = skew(2 * half, &entries);
        let pf = pfaffian(&m).unwrap();
        prop_assert_eq!(&pf * &pf, determinant(m.matrix()));
    }

    #[test]
    fn symbolic_pfaffian_evaluates_to_numeric(which in 0usize..2, v in prop::collection::vec(-9i64..=9, 1..8)) {
        let q = if which == 0 { algebra(3) } else { construct(&FamilySpec::SeaweedSl { n: 3, top: vec![1, 2], bottom: vec![3] }).unwrap().algebra };
        let n = q.dim();
        let alpha = point(&v, n);
        let sym = symbolic_pfaffian(&q.symbolic_structure_matrix(), n, 16).unwrap();
        prop_assert_eq!(sym.eval(&alpha), pfaffian(&q.structure_matrix(&alpha)).unwrap());
    }

    #[test]
    fn gcd_divides_both(a in small_poly(), b in small_poly(), c in small_poly()) {
        let (x, y) = (a.mul(&c), b.mul(&c));
        let g = poly_gcd2(&x, &y);
        if x.is_zero() && y.is_zero() {
            prop_assert!(g.is_zero());
        } else {
            prop_assert!(g.divides(&x) && g.divides(&y));
            if !c.is_zero() {
                prop_assert!(c.divides(&g));
            }
        }
    }

    #[test]
    fn jacobi_holds_on_random_triples(i in 0usize..9, v in prop::collection::vec(-4i64..=4, 3..40)) {
        let q = algebra(i);
        let n = q.dim();
        let a = point(&v, n);
        let b: Vec<Rat> = point(&v[1..], n);
        let c: Vec<Rat> = (0..n).map(|k| rat(v[(3 * k + 2) % v.len()])).collect();
        prop_assert!(q.jacobi_residual(&a, &b, &c).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn structure_matrix_rank_is_even(i in 0usize..9, v in prop::collection::vec(-6i64..=6, 1..40)) {
        let q = algebra(i);
        let alpha = point(&v, q.dim());
        prop_assert_eq!(q.structure_matrix(&alpha).rank() % 2, 0);
    }

    #[test]
    fn stabiliser_contains_centre(i in 0usize..9, v in prop::collection::vec(-6i64..=6, 1..40)) {
        let q = algebra(i);
        let alpha = point(&v, q.dim());
        let (_, centre) = q.derived_and_center();
        prop_assert!(stabiliser(&q, &alpha).contains_space(&centre));
    }

    #[test]
    fn stability_shortcut_matches_elimination(i in 0usize..9, v in prop::collection::vec(-6i64..=6, 1..40)) {
        let q = algebra(i);
        let alpha = point(&v, q.dim());
        prop_assert_eq!(is_stable_point(&q, &alpha), is_stable_by_elimination(&q, &alpha));
    }

    #[test]
    fn kernel_agrees_with_rational_elimination(
        r in 1usize..4,
        rows in 1usize..7,
        cols in 1usize..7,
        v in prop::collection::vec(-7i64..=7, 1..50),
        den in 1i64..5,
    ) {
        // a product of thin factors has rank at most r
        let left = Matrix::from_fn(rows, r, |i, j| Rat::new(v[(i * r + j) % v.len()].into(), den.into()));
        let right = Matrix::from_fn(r, cols, |i, j| rat(v[(7 * i + j + 3) % v.len()]));
        let m = left.mul(&right);
        let (rk, ker) = rank_kernel(&m);
        let mut rows_copy = m.row_vecs();
        let (_, pivots) = rref(&mut rows_copy);
        prop_assert_eq!(rk, pivots.len());
        prop_assert_eq!(rank(&m), rk);
        prop_assert_eq!(rk + ker.len(), cols);
        for k in &ker {
            prop_assert!(m.mul_vec(k).iter().all(Zero::is_zero));
        }
    }
}
