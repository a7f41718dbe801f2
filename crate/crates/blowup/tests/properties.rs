use blowup::*;
use divisor::CDivisor;
use numtower::TowerElem;
use proptest::prelude::*;
use symbolic::{BiPoly, OneForm};

fn poly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec((-4i64..=4, 0u32..=3, 0u32..=3), 1..=5)
        .prop_map(|ts| BiPoly::from_ints(&ts))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn chart() -> impl Strategy<Value = Chart> {
    prop_oneof![Just(Chart::First), Just(Chart::Second)]
}

proptest! {
    #[test]
    fn strict_transform_times_exceptional_power_is_the_substitution(p in poly(), c in chart()) {
        let r = transform_poly(&p, c).unwrap();
        let (sx, sy) = c.substitution();
        let back = r.strict.mul(&c.exceptional_equation().pow(r.exceptional_order));
        prop_assert_eq!(back, p.compose(&sx, &sy));
    }

    #[test]
    fn exact_forms_lose_their_order(p in poly(), c in chart()) {
        // d(f) with f(0) = 0 of order >= 2 is never dicritical.
        let f = p.mul(&BiPoly::x().add(&BiPoly::y().pow(2)));
        let w = OneForm::exact(&f).strip_common_factor().0;
        let r = transform_form(&w, c).unwrap();
        if !r.dicritical {
            prop_assert_eq!(Some(r.exceptional_order), w.order());
        }
    }

    #[test]
    fn pullback_is_projectively_equivariant(l in proptest::collection::vec(1i64..=5, 1..=4), s in 1i64..=7) {
        let d = CDivisor::from_pairs(l.iter().enumerate().map(|(i, &x)| (format!("H{i}"), TowerElem::from_int(x))));
        let nus: Vec<(String, u32)> = (0..l.len()).map(|i| (format!("H{i}"), i as u32 % 3)).collect();
        let nus: Vec<(&str, u32)> = nus.iter().map(|(a, n)| (a.as_str(), *n)).collect();
        let k = TowerElem::from_int(s);
        let a = pullback_divisor(&d.scale(&k), &nus, "E");
        let b = pullback_divisor(&d, &nus, "E");
        prop_assert_eq!(a.divisor, b.divisor.scale(&k));
        prop_assert_eq!(a.mu, &b.mu * &k);
    }
}
