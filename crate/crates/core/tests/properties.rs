use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use qhankel_core::exactalg::parse::{
    mpoly_from_json, parse_laurent, parse_mpoly, parse_qrational, qrational_from_json, series_from_json,
};
use qhankel_core::exactalg::render::{
    laurent_text, mpoly_json, mpoly_text, qrational_json, qrational_text, series_json,
};
use qhankel_core::hankel::{build_hankel, MomentFamily};
use qhankel_core::qcore::{p_poly, p_poly_expanded, q_binomial, q_derivative, q_factorial, q_int};
use qhankel_core::rstirling::{check_bigphi_recurrences, to_falling_basis, BasisKind};
use qhankel_core::{det_bareiss, det_cofactor, MPoly, QLaurent, QRational, SquareMatrix, TruncSeries};

fn rational() -> impl Strategy<Value = BigRational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn laurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec((-3i32..=3, rational()), 0..4).prop_map(QLaurent::from_terms)
}

fn int_laurent() -> impl Strategy<Value = QLaurent> {
    prop::collection::vec(-4i64..=4, 0..4)
        .prop_flat_map(|c| (-2i32..=2).prop_map(move |lo| QLaurent::from_coeffs(lo, &c)))
}

fn mpoly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u32..3, 0u32..3), laurent()), 0..5).prop_map(MPoly::from_terms)
}

fn x_poly() -> impl Strategy<Value = MPoly> {
    prop::collection::vec(((0u32..5, 0u32..2), int_laurent()), 0..5).prop_map(MPoly::from_terms)
}

fn matrix() -> impl Strategy<Value = SquareMatrix> {
    (1usize..=4).prop_flat_map(|n| {
        let entry = prop::collection::vec(((0u32..=2, 0u32..=2), int_laurent()), 0..3).prop_map(MPoly::from_terms);
        prop::collection::vec(prop::collection::vec(entry, n), n)
            .prop_map(|rows| SquareMatrix::from_rows(rows).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in mpoly(), b in mpoly(), c in mpoly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MPoly::one(), a.clone());
    }

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_inverts_multiplication(a in mpoly(), b in mpoly()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn laurent_exact_division(a in laurent(), b in laurent()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
    }

    #[test]
    fn series_inverse(tail in prop::collection::vec(int_laurent(), 0..6), order in 1usize..=16) {
        let coeffs = std::iter::once(QLaurent::one()).chain(tail);
        let s = TruncSeries::from_laurents(coeffs, order);
        let inv = s.inverse().unwrap();
        prop_assert_eq!(s.mul(&inv).unwrap(), TruncSeries::one(order));
    }

    #[test]
    fn text_round_trip(p in mpoly()) {
        prop_assert_eq!(parse_mpoly(&mpoly_text(&p)).unwrap(), p);
    }

    #[test]
    fn laurent_text_round_trip(p in laurent()) {
        prop_assert_eq!(parse_laurent(&laurent_text(&p)).unwrap(), p);
    }

    #[test]
    fn json_round_trip(p in mpoly()) {
        let json = serde_json::to_string(&mpoly_json(&p)).unwrap();
        let back: Vec<_> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(mpoly_from_json(&back).unwrap(), p);
    }

    #[test]
    fn qrational_round_trip(n in int_laurent(), d in int_laurent()) {
        prop_assume!(!d.is_zero());
        let r = QRational::new(n, d).unwrap();
        prop_assert_eq!(&parse_qrational(&qrational_text(&r)).unwrap(), &r);
        prop_assert_eq!(&qrational_from_json(&qrational_json(&r)).unwrap(), &r);
    }

    #[test]
    fn series_json_round_trip(c in prop::collection::vec(int_laurent(), 1..5)) {
        let s = TruncSeries::from_laurents(c, 5);
        prop_assert_eq!(series_from_json(&series_json(&s)).unwrap(), s);
    }

    #[test]
    fn q_int_addition(m in -12i64..12, n in -12i64..12) {
        prop_assert_eq!(q_int(m + n), q_int(m) + q_int(n).shift(m as i32));
    }

    #[test]
    fn q_binomial_symmetry((n, k) in (0u32..10).prop_flat_map(|n| (Just(n), 0..=n))) {
        prop_assert_eq!(q_binomial(n, k as i64), q_binomial(n, (n - k) as i64));
        let lhs = &(&q_binomial(n, k as i64) * &q_factorial(k)) * &q_factorial(n - k);
        prop_assert_eq!(lhs, q_factorial(n));
    }

    #[test]
    fn derivative_of_p(n in 1u32..8) {
        prop_assert_eq!(q_derivative(&p_poly(n)), p_poly(n - 1).scale(&q_int(n as i64)));
        prop_assert_eq!(p_poly(n), p_poly_expanded(n));
    }

    #[test]
    fn q_one_substitution(a in mpoly(), b in mpoly()) {
        prop_assert_eq!((&a * &b).at_q_one(), &a.at_q_one() * &b.at_q_one());
    }

    #[test]
    fn basis_round_trip(f in x_poly(), r in -2i64..4) {
        for kind in [BasisKind::Plain, BasisKind::Scaled] {
            prop_assert_eq!(to_falling_basis(&f, r, kind).reconstruct(), f.clone());
        }
    }

    #[test]
    fn bigphi_recurrences(n in 0u32..7, r in -2i64..4) {
        let rep = check_bigphi_recurrences(n, r);
        prop_assert!(rep.passed, "{}", rep);
    }

    #[test]
    fn bareiss_matches_cofactor(m in matrix()) {
        prop_assert_eq!(det_bareiss(&m).unwrap(), det_cofactor(&m).unwrap());
    }

    #[test]
    fn hankel_is_symmetric(n in 1u32..5, offset in 0u32..2, r in 0i64..4) {
        for family in [MomentFamily::Phi, MomentFamily::BigPhi] {
            let h = build_hankel(family, n, offset, r);
            for i in 0..n as usize {
                for j in 0..n as usize {
                    prop_assert_eq!(h.entry(i, j), h.entry(j, i));
                }
            }
        }
    }
}
