use k3fib_core::exact_ring::{parse_wpoly, rat, BasePoly, Var, WPoly};
use proptest::prelude::*;

fn base_poly() -> impl Strategy<Value = BasePoly> {
    prop::collection::vec((-5i64..=5, 1i64..=4), 0..4)
        .prop_map(|c| BasePoly::from_coeffs(c.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

/// Homogeneous polynomial of weighted degree `d` in `x1, x2, x3, y`.
fn homogeneous(d: u32) -> impl Strategy<Value = WPoly> {
    let monos = k3fib_core::exact_ring::wpoly::monomials_of_degree(d, &[Var::X1, Var::X2, Var::X3, Var::Y]);
    prop::collection::vec((0..monos.len(), base_poly()), 1..5)
        .prop_map(move |ts| WPoly::from_terms(ts.into_iter().map(|(i, c)| (monos[i], c))))
}

fn any_wpoly() -> impl Strategy<Value = WPoly> {
    (0u32..4).prop_flat_map(homogeneous)
}

proptest! {
    #[test]
    fn base_ring_axioms(a in base_poly(), b in base_poly(), c in base_poly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&(&a + &b) - &b) == a);
    }

    #[test]
    fn division_with_remainder(a in base_poly(), b in base_poly()) {
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_both(a in base_poly(), b in base_poly()) {
        let g = BasePoly::gcd(&a, &b);
        if !g.is_zero() {
            prop_assert!(g.divides(&a) && g.divides(&b));
        }
    }

    #[test]
    fn weighted_ring_axioms(a in any_wpoly(), b in any_wpoly(), c in any_wpoly()) {
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert!((&(&a - &b) + &b) == a);
    }

    #[test]
    fn products_stay_homogeneous(
        (a, b, d) in (0u32..4, 0u32..4).prop_flat_map(|(d, e)| (homogeneous(d), homogeneous(e), Just(d + e)))
    ) {
        let p = &a * &b;
        prop_assert!(p.is_zero() || p.homogeneous_degree() == Some(d));
    }

    #[test]
    fn display_parses_back(a in any_wpoly()) {
        prop_assert_eq!(parse_wpoly(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn evaluation_is_a_ring_map(a in any_wpoly(), b in any_wpoly(), n in -3i64..=3, d in 1i64..=3) {
        let c = rat(n, d);
        prop_assert_eq!((&a * &b).evaluate_base(&c), &a.evaluate_base(&c) * &b.evaluate_base(&c));
    }
}
