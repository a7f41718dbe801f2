use blowup::*;
use divisor::CDivisor;
use numtower::TowerElem;
use symbolic::{parse_form, parse_poly, BiPoly, OneForm};

fn p(s: &str) -> BiPoly {
    parse_poly(s).unwrap()
}

#[test]
fn polynomial_transforms() {
    let r = transform_poly(&p("y^2 - x^3"), Chart::First).unwrap();
    assert_eq!((r.strict, r.exceptional_order), (p("y^2 - x"), 2));
    let r = transform_poly(&p("x"), Chart::First).unwrap();
    assert_eq!((r.strict, r.exceptional_order), (p("1"), 1));
    let r = transform_poly(&p("x*y"), Chart::First).unwrap();
    assert_eq!((r.strict, r.exceptional_order), (p("y"), 2));
    let r = transform_poly(&p("y^2 - x^3"), Chart::Second).unwrap();
    assert_eq!((r.strict, r.exceptional_order), (p("1 - x^3*y"), 2));
}

#[test]
fn form_transforms() {
    // Radial form: pull-back is -x'^2 dy', so k = 2 = nu + 1.
    let r = transform_form(&parse_form("y*dx - x*dy").unwrap(), Chart::First).unwrap();
    assert_eq!(r.exceptional_order, 2);
    assert!(r.dicritical);
    assert_eq!(r.strict, OneForm::new(BiPoly::zero(), p("-1")));
    // Hand expansion: 2x'y' dx' + 3x'(y' dx' + x' dy') = x'(5y' dx' + 3x' dy').
    let r = transform_form(&parse_form("2*y*dx + 3*x*dy").unwrap(), Chart::First).unwrap();
    assert_eq!((r.exceptional_order, r.dicritical), (1, false));
    assert_eq!(r.strict, parse_form("5*y*dx + 3*x*dy").unwrap());
    // Hand expansion: -3x'^2 dx' + 2x'y'(y' dx' + x' dy')
    //   = x'((2y'^2 - 3x') dx' + 2x'y' dy').
    let r = transform_form(&parse_form("-3*x^2*dx + 2*y*dy").unwrap(), Chart::First).unwrap();
    assert_eq!((r.exceptional_order, r.dicritical), (1, false));
    assert_eq!(r.strict, parse_form("(2*y^2 - 3*x)*dx + 2*x*y*dy").unwrap());
    // Second chart of the cusp differential: -3x'^2y'^2(y' dx' + x' dy') + 2y' dy'.
    let r = transform_form(&parse_form("-3*x^2*dx + 2*y*dy").unwrap(), Chart::Second).unwrap();
    assert_eq!(r.exceptional_order, 1);
    assert_eq!(r.strict, parse_form("-3*x^2*y^2*dx + (2 - 3*x^3*y)*dy").unwrap());
}

#[test]
fn divisor_pullbacks() {
    let one = TowerElem::one;
    let d = CDivisor::from_pairs([("x", one()), ("y", -&one())]);
    let r = pullback_divisor(&d, &[("x", 1), ("y", 1)], "E1");
    assert!(r.mu.is_zero() && r.dicritical && r.admissible);
    assert_eq!(r.divisor, d);
    let (a, b) = (TowerElem::from_int(2), TowerElem::from_int(7));
    let d = CDivisor::from_pairs([("x", a.clone()), ("y", b.clone())]);
    let r = pullback_divisor(&d, &[("x", 1), ("y", 1)], "E1");
    assert_eq!(r.divisor.coeff("E1"), Some(&(&a + &b)));
    assert!(!r.dicritical);
    let d = CDivisor::from_pairs([("cusp", one())]);
    let r = pullback_divisor(&d, &[("cusp", 2)], "E1");
    assert_eq!(r.mu, TowerElem::from_int(2));
    let r = pullback_divisor(&d, &[], "E1");
    assert!(!r.admissible && !r.dicritical);
}
