use num_bigint::BigInt;
use numtower::*;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn sqrt_tower(t: &Tower, n: i64) -> (Tower, TowerElem) {
    let p = UPoly::from_ints(&[-n, 0, 1]);
    let reg = Region::from_ints(0, 4 * n, -1, 1, 2);
    adjoin_root(t, &p, &reg).unwrap()
}

/// Q(sqrt2, sqrt3) as 4-vectors over the basis {1, sqrt2, sqrt3, sqrt6}.
fn hand_mul(a: [Rational; 4], b: [Rational; 4]) -> [Rational; 4] {
    let two = q(2, 1);
    let three = q(3, 1);
    let six = q(6, 1);
    let [a0, a1, a2, a3] = a;
    let [b0, b1, b2, b3] = b;
    [
        &a0 * &b0 + &two * &a1 * &b1 + &three * &a2 * &b2 + &six * &a3 * &b3,
        &a0 * &b1 + &a1 * &b0 + &three * (&a2 * &b3 + &a3 * &b2),
        &a0 * &b2 + &a2 * &b0 + &two * (&a1 * &b3 + &a3 * &b1),
        &a0 * &b3 + &a3 * &b0 + &a1 * &b2 + &a2 * &b1,
    ]
}

#[test]
fn rational_sum() {
    let s = TowerElem::from_frac(1, 2) + TowerElem::from_frac(1, 3);
    assert_eq!(s.is_rational(), Some(q(5, 6)));
    let d = arith(&TowerElem::one(), &TowerElem::zero(), ArithOp::Div);
    assert_eq!(d.unwrap_err(), TowerError::DivisionByZero);
}

#[test]
fn sqrt_two_squared() {
    let (_, r2) = sqrt_tower(&Tower::rationals(), 2);
    assert_eq!((&r2 * &r2).is_rational(), Some(q(2, 1)));
    assert_eq!((&(&r2 * &r2) / &TowerElem::from_int(2)).is_rational(), Some(q(1, 1)));
    let one = TowerElem::one();
    assert_eq!((&(&one + &r2) * &(&one - &r2)).is_rational(), Some(q(-1, 1)));
    assert_eq!(r2.is_rational(), None);
}

#[test]
fn biquadratic_square_matches_hand_basis() {
    let (t2, r2) = sqrt_tower(&Tower::rationals(), 2);
    let (t3, r3) = sqrt_tower(&t2, 3);
    assert_eq!(t3.degree(), 4);
    let s = &r2.in_tower(&t3).unwrap() + &r3;
    let sq = &s * &s;
    let z = q(0, 1);
    let one = q(1, 1);
    let hand = [z.clone(), one.clone(), one, z];
    let want = hand_mul(hand.clone(), hand);
    assert_eq!(want, [q(5, 1), q(0, 1), q(0, 1), q(2, 1)]);
    assert_eq!(sq.to_rational_vector(), want.to_vec());
    let expect = &TowerElem::from_int(5) + &(&TowerElem::from_int(2) * &(&r2 * &r3));
    assert_eq!(sq, expect);
}

#[test]
fn adjoin_degree_one_and_gaussian() {
    let (t, r) = adjoin_root(&Tower::rationals(), &UPoly::from_ints(&[-3, 1]), &Region::from_ints(0, 8, -1, 1, 1)).unwrap();
    assert_eq!(t.height(), 0);
    assert_eq!(r.is_rational(), Some(q(3, 1)));
    let (t, i) = adjoin_root(&Tower::rationals(), &UPoly::from_ints(&[1, 0, 1]), &Region::from_ints(-1, 1, 1, 3, 2)).unwrap();
    assert_eq!(t.height(), 1);
    assert_eq!((&i * &i).is_rational(), Some(q(-1, 1)));
    assert!(i.approx().1 > 0.9);
    let g = imaginary_unit();
    assert_eq!((&g * &g).is_rational(), Some(q(-1, 1)));
}

#[test]
fn adjoin_errors() {
    let t = Tower::rationals();
    let e = adjoin_root(&t, &UPoly::from_ints(&[-1, 0, 1]), &Region::from_ints(-2, 2, -1, 1, 1));
    assert_eq!(e.unwrap_err(), TowerError::ReduciblePolynomial);
    let e = adjoin_root(&t, &UPoly::from_ints(&[-2, 0, 1]), &Region::from_ints(-2, 2, -1, 1, 1));
    assert_eq!(e.unwrap_err(), TowerError::AmbiguousRegion);
    let capped = Tower::with_cap(2);
    let (t2, _) = sqrt_tower(&capped, 2);
    let e = adjoin_root(&t2, &UPoly::from_ints(&[-3, 0, 1]), &Region::from_ints(0, 4, -1, 1, 1));
    assert_eq!(e.unwrap_err(), TowerError::DegreeCapExceeded { cap: 2, needed: 4 });
}

fn product(fs: &[(UPoly, usize)]) -> UPoly {
    fs.iter().fold(UPoly::from_ints(&[1]), |acc, (f, m)| acc.mul(&f.pow(*m as u32)))
}

#[test]
fn factor_over_q() {
    let p = UPoly::from_ints(&[-1, 0, 1]);
    let fs = factor_univariate(&p).unwrap();
    assert_eq!(fs, vec![(UPoly::from_ints(&[-1, 1]), 1), (UPoly::from_ints(&[1, 1]), 1)]);

    let p = UPoly::from_ints(&[-4, 0, 0, 0, 1]);
    let fs = factor_univariate(&p).unwrap();
    assert_eq!(product(&fs), p);
    assert_eq!(fs.len(), 2);
    // Oracle: neither quadratic has a rational root (candidates +-1, +-2)
    // and x^4 - 4 has no linear factor, so the split must be the two
    // monic quadratics x^2 - 2 and x^2 + 2.
    for c in [-2i64, -1, 1, 2] {
        assert!(!p.eval(&TowerElem::from_int(c)).is_zero());
    }
    let mut got: Vec<UPoly> = fs.iter().map(|(f, _)| f.clone()).collect();
    got.sort_by(cmp_upoly);
    assert!(got.contains(&UPoly::from_ints(&[-2, 0, 1])));
    assert!(got.contains(&UPoly::from_ints(&[2, 0, 1])));

    let p = UPoly::from_ints(&[0, 0, 1, 1]).mul(&UPoly::from_ints(&[1, 1]));
    let fs = factor_univariate(&p).unwrap();
    assert_eq!(fs, vec![(UPoly::from_ints(&[0, 1]), 2), (UPoly::from_ints(&[1, 1]), 2)]);
    assert_eq!(factor_univariate(&UPoly::zero()).unwrap_err(), TowerError::ZeroInput);
}

#[test]
fn factor_over_extension() {
    let (t, r2) = sqrt_tower(&Tower::rationals(), 2);
    let p = UPoly::from_ints(&[-2, 0, 1]);
    let fs = factor_over(&t, &p).unwrap();
    assert_eq!(fs.len(), 2);
    let roots: Vec<TowerElem> = fs.iter().map(|(f, _)| -&f.coeff(0)).collect();
    assert!(roots.contains(&r2) && roots.contains(&-&r2));
    assert_eq!(product(&fs), p);

    // x^4 - 10x^2 + 1 = (x^2 - 2 sqrt2 x - 1)(x^2 + 2 sqrt2 x - 1) over Q(sqrt2).
    let p = UPoly::from_ints(&[1, 0, -10, 0, 1]);
    let fs = factor_over(&t, &p).unwrap();
    assert_eq!(fs.len(), 2);
    assert_eq!(product(&fs), p);
    for (f, _) in &fs {
        assert_eq!(f.degree(), Some(2));
    }
    // Over Q it stays irreducible.
    assert_eq!(factor_univariate(&p).unwrap().len(), 1);
}

#[test]
fn roots_of_gaussian_quartic() {
    let (t, roots) = all_roots(&Tower::rationals(), &UPoly::from_ints(&[-1, 0, 0, 0, 1])).unwrap();
    assert_eq!(roots.len(), 4);
    assert_eq!(t.degree(), 2);
    for r in &roots {
        assert!(r.pow(4).is_one());
    }
    let (t, roots) = all_roots(&Tower::rationals(), &UPoly::from_ints(&[-2, 0, 0, 1])).unwrap();
    assert_eq!(roots.len(), 3);
    assert_eq!(t.degree(), 6);
    for r in &roots {
        assert_eq!(r.pow(3).is_rational(), Some(q(2, 1)));
    }
}

#[test]
fn signs() {
    let (_, r2) = sqrt_tower(&Tower::rationals(), 2);
    let one = TowerElem::one();
    assert_eq!((&r2 - &one).sign(), Ok(Sign::Positive));
    assert_eq!((&one - &r2).sign(), Ok(Sign::Negative));
    assert_eq!(TowerElem::zero().sign(), Ok(Sign::Zero));
    assert_eq!(imaginary_unit().sign(), Err(TowerError::NotReal));
    // 1.41421356... - 99/70 is about -7.2e-5.
    assert_eq!((&r2 - &TowerElem::from_frac(99, 70)).sign(), Ok(Sign::Negative));
    assert_eq!((&r2 - &TowerElem::from_frac(140, 99)).sign(), Ok(Sign::Positive));
}

#[test]
fn eigen_examples() {
    let e = |t: i64, d: i64| eigen_ratio_class(&TowerElem::from_int(t), &TowerElem::from_int(d));
    assert_eq!(e(0, -1), EigenRatio::NonPosRational(q(-1, 1)));
    assert_eq!(e(2, 1), EigenRatio::PosRational(q(1, 1)));
    assert_eq!(e(1, -1), EigenRatio::Irrational);
    assert_eq!(e(3, 2), EigenRatio::PosRational(q(2, 1)));
    assert_eq!(e(1, 0), EigenRatio::OneZero);
    assert_eq!(e(0, 0), EigenRatio::BothZero);
    assert_eq!(e(0, 1), EigenRatio::NonPosRational(q(-1, 1)));
    assert_eq!(e(1, 1), EigenRatio::Irrational);
}

#[test]
fn json_round_trip() {
    let (t2, r2) = sqrt_tower(&Tower::rationals(), 2);
    let (t3, r3) = sqrt_tower(&t2, 3);
    let a = &(&r2.in_tower(&t3).unwrap() * &r3) + &TowerElem::from_frac(-7, 3);
    let v = json::to_json(&a);
    let s = serde_json::to_string(&v).unwrap();
    let b = json::from_json_str(&s).unwrap();
    assert_eq!(serde_json::to_string(&json::to_json(&b)).unwrap(), s);
    assert_eq!(b.to_rational_vector(), a.to_rational_vector());
    // Decoding against the original tower reuses its levels.
    let c = json::from_json_in(&t3, &v).unwrap();
    assert_eq!(c, a);

    let g = &imaginary_unit() + &TowerElem::one();
    let d = json::from_json(&json::to_json(&g)).unwrap();
    assert_eq!(d, g);

    let r = TowerElem::from_frac(5, 6);
    let v = json::to_json(&r);
    assert_eq!(serde_json::to_string(&v).unwrap(), r#"{"coords":"5/6","tower":[]}"#);
    assert!(json::from_json_str("{\"tower\":[[[\"-1/1\",\"0/1\",\"1/1\"],[\"0\",\"2\",\"-1\",\"1\"]]],\"coords\":[\"0\",\"1\"]}").is_err());
}
