use proptest::collection::vec;
use proptest::prelude::*;

use spherecert::algebra::{associator, conjugate, int, mul, norm_sq, ratio, AlgebraElement, ExactScalar};
use spherecert::cr::{holomorphic_tangent, verify_orthocomplement};
use spherecert::fibration::{
    ehresmann_select, hopf_s3_kernel_is_vertical, hopf_s3_map, quat_hopf_jacobian, rotate_fiber,
    transversality_check, RegionTag,
};
use spherecert::fields::{bracket, eval_field, flag_dimensions, invariant_frame, Distribution, SpherePoint};
use spherecert::linalg;
use spherecert::poly::{poly_det, MultiPoly, PolyMatrix};
use spherecert::sampling::inverse_stereographic;

fn rational() -> impl Strategy<Value = ExactScalar> {
    (-20i64..=20, 1i64..=12).prop_map(|(n, d)| ratio(n, d))
}

fn element(dim: usize) -> impl Strategy<Value = AlgebraElement> {
    vec(rational(), dim).prop_map(|c| AlgebraElement::new(c).unwrap())
}

fn sphere_point(dim: usize) -> impl Strategy<Value = SpherePoint> {
    vec((-100i64..=100, 1i64..=100).prop_map(|(n, d)| ratio(n, d)), dim - 1)
        .prop_map(|u| inverse_stereographic(&u))
}

/// Random polynomial in 3 variables with small integer coefficients.
fn poly3() -> impl Strategy<Value = MultiPoly> {
    vec(((0u8..3, 0u8..3, 0u8..3), -5i64..=5), 0..5).prop_map(|terms| {
        terms.into_iter().fold(MultiPoly::zero(3), |acc, ((a, b, c), k)| {
            &acc + &MultiPoly::monomial(3, &[a, b, c], int(k))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn norm_is_multiplicative(a2 in element(2), b2 in element(2), a4 in element(4), b4 in element(4),
                              a8 in element(8), b8 in element(8)) {
        for (a, b) in [(a2, b2), (a4, b4), (a8, b8)] {
            prop_assert_eq!(norm_sq(&mul(&a, &b).unwrap()), norm_sq(&a) * norm_sq(&b));
        }
    }

    #[test]
    fn product_is_bilinear(a in element(8), b in element(8), c in element(8), k in rational()) {
        let left = mul(&a.checked_add(&b).unwrap(), &c).unwrap();
        let split = mul(&a, &c).unwrap().checked_add(&mul(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, split);
        prop_assert_eq!(mul(&a.scale(&k), &b).unwrap(), mul(&a, &b).unwrap().scale(&k));
        prop_assert_eq!(mul(&a, &b.scale(&k)).unwrap(), mul(&a, &b).unwrap().scale(&k));
    }

    #[test]
    fn quaternion_conjugate_reverses_products(a in element(4), b in element(4)) {
        let lhs = conjugate(&mul(&a, &b).unwrap());
        let rhs = mul(&conjugate(&b), &conjugate(&a)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn quaternions_associate(a in element(4), b in element(4), c in element(4)) {
        prop_assert!(associator(&a, &b, &c).unwrap().is_zero());
    }

    #[test]
    fn octonions_are_alternative(a in element(8), b in element(8)) {
        prop_assert!(associator(&a, &a, &b).unwrap().is_zero());
        prop_assert!(associator(&a, &b, &b).unwrap().is_zero());
    }

    #[test]
    fn polynomial_ring_axioms(p in poly3(), q in poly3(), r in poly3()) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn sphere_reduction_is_idempotent_and_exact_on_sphere(
        coeffs in vec(((0u8..3, 0u8..3, 0u8..3, 0u8..3), -5i64..=5), 1..6),
        p in sphere_point(4),
    ) {
        let f = coeffs.into_iter().fold(MultiPoly::zero(4), |acc, ((a, b, c, d), k)| {
            &acc + &MultiPoly::monomial(4, &[a, b, c, d], int(k))
        });
        let once = f.reduce_mod_sphere();
        prop_assert_eq!(once.reduce_mod_sphere(), once.clone());
        prop_assert_eq!(once.eval(p.coords()).unwrap(), f.eval(p.coords()).unwrap());
    }

    #[test]
    fn determinant_matches_permutation_expansion(m in vec(-9i64..=9, 9)) {
        let rows: Vec<Vec<i64>> = m.chunks(3).map(<[i64]>::to_vec).collect();
        let d = poly_det(&PolyMatrix::from_ints(&rows, 1)).unwrap();
        let e = |r: usize, c: usize| rows[r][c];
        let expected = e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1))
            - e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0))
            + e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
        prop_assert_eq!(d, MultiPoly::from_int(1, expected));
    }

    #[test]
    fn bracket_antisymmetry_and_jacobi(i in 0usize..8, j in 0usize..8, k in 0usize..8) {
        let fr = invariant_frame(8).unwrap();
        let (a, b, c) = (&fr[i], &fr[j], &fr[k]);
        prop_assert_eq!(bracket(a, b).unwrap(), bracket(b, a).unwrap().neg());
        let t1 = bracket(a, &bracket(b, c).unwrap()).unwrap();
        let t2 = bracket(b, &bracket(c, a).unwrap()).unwrap();
        let t3 = bracket(c, &bracket(a, b).unwrap()).unwrap();
        prop_assert!(t1.checked_add(&t2).unwrap().checked_add(&t3).unwrap().is_zero());
    }

    #[test]
    fn frame_fields_are_tangent(p in sphere_point(8), q in sphere_point(4)) {
        for (dim, pt) in [(8, &p), (4, &q)] {
            for f in &invariant_frame(dim).unwrap()[1..] {
                let v = eval_field(f, pt.coords()).unwrap();
                prop_assert!(linalg::dot(&v, pt.coords()) == int(0), "{} at {}", f.name(), pt);
            }
        }
    }

    #[test]
    fn rank_six_flag(p in sphere_point(8)) {
        let fr = invariant_frame(8).unwrap();
        let d = Distribution::new("Y2..Y7", fr[2..].to_vec()).unwrap();
        prop_assert_eq!(flag_dimensions(&d, p.coords(), 2).unwrap(), vec![6, 7]);
    }

    #[test]
    fn holomorphic_tangent_dimensions(p in sphere_point(8), q in sphere_point(4)) {
        prop_assert_eq!(holomorphic_tangent(&p).unwrap().dim(), 6);
        prop_assert_eq!(holomorphic_tangent(&q).unwrap().dim(), 2);
        prop_assert!(verify_orthocomplement(&p).unwrap());
        prop_assert!(verify_orthocomplement(&q).unwrap());
    }

    #[test]
    fn hopf_map_is_circle_invariant(p in sphere_point(4), (m, n) in (1i64..20, 0i64..20)) {
        // (m² − n², 2mn) / (m² + n²) is a rational point of the unit circle.
        let h = m * m + n * n;
        let c = ratio(m * m - n * n, h);
        let s = ratio(2 * m * n, h);
        let rotated = rotate_fiber(&p, &c, &s).unwrap();
        prop_assert_eq!(hopf_s3_map(&rotated).unwrap(), hopf_s3_map(&p).unwrap());
        prop_assert!(hopf_s3_kernel_is_vertical(&p).unwrap());
    }

    #[test]
    fn ehresmann_choice_is_transverse(p in sphere_point(8)) {
        let choice = ehresmann_select(&p).unwrap();
        prop_assert!(transversality_check(&choice.distribution, &p).unwrap());
        if choice.region != RegionTag::S1 {
            prop_assert!(choice.distribution.label().starts_with('H'));
        }
        let jac = quat_hopf_jacobian(&p).unwrap();
        prop_assert_eq!(jac.vertical, [true; 3]);
    }
}
