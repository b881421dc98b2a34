use proptest::prelude::*;
use tjurina_core::{parse_poly, Poly, Rational, Valuation};

fn rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn poly() -> impl Strategy<Value = Poly> {
    proptest::collection::vec((0u32..5, 0u32..5, rational()), 0..7).prop_map(Poly::from_terms)
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #[test]
    fn print_then_parse_is_identity(p in poly()) {
        prop_assert_eq!(parse_poly(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn addition_cancels(p in poly(), q in poly()) {
        prop_assert_eq!(&(&p + &q) - &q, p);
    }

    #[test]
    fn multiplication_commutes(p in poly(), q in poly()) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn order_is_additive(p in nonzero_poly(), q in nonzero_poly()) {
        let sum = match (p.order(), q.order()) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => unreachable!(),
        };
        prop_assert_eq!((&p * &q).order(), sum);
    }

    #[test]
    fn exact_division_recovers_quotient(p in poly(), d in nonzero_poly()) {
        prop_assert_eq!((&p * &d).exact_divide(&d).unwrap(), p);
    }

    #[test]
    fn identity_substitution(p in poly()) {
        prop_assert_eq!(p.substitute(&Poly::x(), &Poly::y()), p);
    }

    #[test]
    fn homogeneous_components_sum_to_p(p in nonzero_poly()) {
        let lo = p.order_u32().unwrap();
        let hi = p.total_degree().unwrap();
        let sum = (lo..=hi).fold(Poly::zero(), |acc, d| &acc + &p.homogeneous_component(d));
        prop_assert_eq!(sum, p);
    }

    #[test]
    fn product_rule(p in poly(), q in poly()) {
        let lhs = (&p * &q).dx();
        let rhs = &(&p.dx() * &q) + &(&p * &q.dx());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_divides_both(p in nonzero_poly(), q in nonzero_poly(), r in nonzero_poly()) {
        let (a, b) = (&p * &r, &q * &r);
        let g = a.gcd(&b);
        prop_assert!(g.divides(&a) && g.divides(&b));
        prop_assert!(r.monic().gcd(&g) == r.monic());
    }
}
