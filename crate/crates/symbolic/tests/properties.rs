use numtower::{imaginary_unit, TowerElem};
use proptest::prelude::*;
use symbolic::*;

fn coeff() -> impl Strategy<Value = TowerElem> {
    (-6i64..=6, 1i64..=4, -2i64..=2).prop_map(|(n, d, g)| {
        let q = TowerElem::from_frac(n, d);
        if g == 0 {
            q
        } else {
            &q + &(&TowerElem::from_int(g) * &imaginary_unit())
        }
    })
}

fn poly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec((coeff(), 0u32..4, 0u32..4), 0..6).prop_map(|ts| BiPoly::from_terms(ts.into_iter().map(|(c, i, j)| ((i, j), c))))
}

fn rat_poly_at_origin() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec((-3i64..=3, 0u32..3, 0u32..3), 1..4)
        .prop_map(|ts| BiPoly::from_ints(&ts.into_iter().map(|(c, i, j)| (c, i + (j == 0) as u32, j)).collect::<Vec<_>>()))
        .prop_filter("nonzero", |p| !p.is_zero())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn print_parse_round_trip(a in poly(), b in poly()) {
        prop_assert_eq!(parse_poly(&a.to_string()).unwrap(), a.clone());
        let w = OneForm::new(a, b);
        if !w.is_zero() {
            prop_assert_eq!(parse_form(&w.to_string()).unwrap(), w);
        }
    }

    #[test]
    fn order_is_additive(a in poly(), b in poly()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!(order_at_origin(&a.mul(&b)), Some(order_at_origin(&a).unwrap() + order_at_origin(&b).unwrap()));
    }

    #[test]
    fn stripped_form_is_reduced(a in poly(), b in poly(), c in poly()) {
        prop_assume!(!c.is_zero());
        let w = OneForm::new(a.mul(&c), b.mul(&c));
        prop_assume!(!w.is_zero());
        let (r, g) = strip_common_factor(&w);
        prop_assert!(gcd(&r.a, &r.b).is_constant());
        prop_assert_eq!(r.mul_poly(&g), w);
    }

    #[test]
    fn intersection_is_symmetric(f in rat_poly_at_origin(), g in rat_poly_at_origin()) {
        prop_assert_eq!(intersection_multiplicity(&f, &g), intersection_multiplicity(&g, &f));
    }
}
