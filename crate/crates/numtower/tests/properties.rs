use num_traits::Signed;
use numtower::*;
use proptest::prelude::*;
use std::sync::OnceLock;

/// Q(sqrt2)(cbrt of (1 + sqrt2)), degree 6 with a non-rational minimal
/// polynomial at the top level.
fn tower() -> &'static (Tower, TowerElem, TowerElem) {
    static T: OnceLock<(Tower, TowerElem, TowerElem)> = OnceLock::new();
    T.get_or_init(|| {
        let (t1, s) = adjoin_root(&Tower::rationals(), &UPoly::from_ints(&[-2, 0, 1]), &Region::from_ints(1, 2, -1, 1, 1)).unwrap();
        let c0 = -&(&TowerElem::one() + &s);
        let p = UPoly::new(vec![c0, TowerElem::zero(), TowerElem::zero(), TowerElem::one()]);
        let (t2, c) = adjoin_root(&t1, &p, &Region::from_ints(1, 2, -1, 1, 1)).unwrap();
        (t2, s, c)
    })
}

fn elem() -> impl Strategy<Value = TowerElem> {
    proptest::collection::vec((-9i64..=9, 1i64..=5), 6).prop_map(|cs| {
        let (_, s, c) = tower();
        let mut acc = TowerElem::zero();
        for (k, (n, d)) in cs.into_iter().enumerate() {
            let mono = &s.pow((k % 2) as u32) * &c.pow((k / 2) as u32);
            acc = &acc + &(&TowerElem::from_frac(n, d) * &mono);
        }
        acc
    })
}

fn rpoly() -> impl Strategy<Value = UPoly> {
    proptest::collection::vec(-5i64..=5, 1..5).prop_map(|v| UPoly::from_ints(&v))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in elem(), b in elem(), c in elem()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
            prop_assert_eq!(&(&b / &a) * &a, b.clone());
        }
    }

    #[test]
    fn is_rational_is_exact(a in elem()) {
        if let Some(r) = a.is_rational() {
            prop_assert!((&a - &TowerElem::rational(r)).is_zero());
        }
        let sq = &a * &a;
        if let Some(r) = sq.is_rational() {
            prop_assert!((&sq - &TowerElem::rational(r)).is_zero());
        }
    }

    #[test]
    fn factors_multiply_back(f in rpoly(), g in rpoly(), h in rpoly()) {
        let p = f.mul(&g).mul(&h);
        prop_assume!(!p.is_zero());
        let fs = factor_univariate(&p).unwrap();
        let prod = fs.iter().fold(UPoly::from_ints(&[1]), |acc, (f, m)| acc.mul(&f.pow(*m as u32)));
        prop_assert_eq!(prod.scale(&p.lc()), p);
        for (f, _) in &fs {
            prop_assert!(f.lc().is_one());
            // A rational root of a nonlinear factor would contradict irreducibility.
            if f.degree().unwrap() > 1 {
                for n in -20i64..=20 {
                    for d in 1i64..=6 {
                        prop_assert!(!f.eval(&TowerElem::from_frac(n, d)).is_zero());
                    }
                }
            }
        }
    }
}

fn eigen_pair() -> impl Strategy<Value = (i64, i64, i64, i64)> {
    prop_oneof![
        // Rational eigenvalues a/b and c/d, which exercise the rational branches.
        (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4),
        // Arbitrary trace and determinant (encoded with unit denominators).
        (-8i64..=8, Just(0i64), -8i64..=8, Just(0i64)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    /// Agrees with building both eigenvalues explicitly and dividing them.
    #[test]
    fn eigen_ratio_matches_construction((a, b, c, d) in eigen_pair()) {
        let (tr, det) = if b == 0 {
            (TowerElem::from_int(a), TowerElem::from_int(c))
        } else {
            let (l1, l2) = (TowerElem::from_frac(a, b), TowerElem::from_frac(c, d));
            (&l1 + &l2, &l1 * &l2)
        };
        let class = eigen_ratio_class(&tr, &det);
        let char_poly = UPoly::new(vec![det.clone(), -&tr, TowerElem::one()]);
        let (_, roots) = all_roots(&Tower::rationals(), &char_poly).unwrap();
        let (l1, l2) = match roots.len() {
            1 => (roots[0].clone(), roots[0].clone()),
            _ => (roots[0].clone(), roots[1].clone()),
        };
        match class {
            EigenRatio::BothZero => prop_assert!(l1.is_zero() && l2.is_zero()),
            EigenRatio::OneZero => prop_assert!(l1.is_zero() != l2.is_zero()),
            EigenRatio::Irrational => {
                prop_assert!(!l1.is_zero() && !l2.is_zero());
                prop_assert!((&l1 / &l2).is_rational().is_none());
            }
            EigenRatio::PosRational(r) | EigenRatio::NonPosRational(r) => {
                let x = (&l1 / &l2).is_rational().unwrap();
                prop_assert!(x == r || x.recip() == r);
                prop_assert!(r.abs() >= Rational::from_integer(1.into()));
                let pos = matches!(eigen_ratio_class(&tr, &det), EigenRatio::PosRational(_));
                prop_assert_eq!(pos, r > Rational::from_integer(0.into()));
            }
        }
    }
}
