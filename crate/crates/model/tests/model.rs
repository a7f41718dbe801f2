use divisor::CDivisor;
use model::*;
use numtower::TowerElem;
use resolution::*;
use symbolic::{parse_form, parse_poly, BiPoly, OneForm};

fn form(s: &str) -> OneForm {
    parse_form(s).unwrap()
}

fn q(n: i64, d: i64) -> TowerElem {
    TowerElem::from_frac(n, d)
}

fn ints(v: &[i64]) -> Vec<TowerElem> {
    v.iter().map(|&x| TowerElem::from_int(x)).collect()
}

fn with_equations(w: &str, eqs: &[&str]) -> ResolutionTree {
    let opts = ResolveOptions { equations: eqs.iter().map(|e| parse_poly(e).unwrap()).collect(), ..Default::default() };
    resolve_with(&form(w), &opts).unwrap()
}

/// `d(prod f_i^a_i)`: the model is `sum a_i (f_i = 0)`, read through the
/// equations that land on each branch.
fn first_integral_case(factors: &[(&str, i64)]) {
    let mut f = BiPoly::one();
    for (g, a) in factors {
        f = f.mul(&parse_poly(g).unwrap().pow(*a as u32));
    }
    let eqs: Vec<&str> = factors.iter().map(|p| p.0).collect();
    let opts = ResolveOptions { equations: eqs.iter().map(|e| parse_poly(e).unwrap()).collect(), ..Default::default() };
    let t = resolve_with(&OneForm::exact(&f).strip_common_factor().0, &opts).unwrap();
    let r = compute_model(&t).unwrap();
    let b1 = t.branches[0].equation.unwrap();
    for (b, l) in t.branches.iter().zip(&r.model.lambdas) {
        let e = b.equation.unwrap();
        assert_eq!(l, &q(factors[e].1, factors[b1].1), "{factors:?}");
    }
    let log = logarithmic_model_form(&t, &r.model).unwrap();
    assert!(log.to_reduced_form().parallel(&t.root().local_form));
}

#[test]
fn first_integrals_give_their_exponents() {
    first_integral_case(&[("x", 1)]);
    first_integral_case(&[("x", 1), ("y", 1)]);
    first_integral_case(&[("x", 2), ("y", 3)]);
    first_integral_case(&[("x", 1), ("y", 1), ("x + y", 1)]);
    first_integral_case(&[("y^2 - x^3", 1)]);
    first_integral_case(&[("y^2 - x^3", 1), ("x", 1)]);
    first_integral_case(&[("y - x^2", 1), ("y + x^2", 1)]);
    first_integral_case(&[("y^2 - x^3", 2), ("y", 5)]);
}

#[test]
fn index_matrices() {
    let t = resolve(&form("d(x*y)")).unwrap();
    assert_eq!(build_index_matrix(&t).unwrap().entries, vec![ints(&[-1, 1]), ints(&[1, -1])]);
    let t = resolve(&form("d(x*y*(x+y))")).unwrap();
    let a = build_index_matrix(&t).unwrap();
    assert_eq!(a.entries, vec![ints(&[-2, 1, 1]), ints(&[1, -2, 1]), ints(&[1, 1, -2])]);
    assert_eq!(a.rank(), 2);
    assert_eq!(a.det_b0(), TowerElem::from_int(3));
    let t = resolve(&form("d(y^2 - x^3)")).unwrap();
    let a = build_index_matrix(&t).unwrap();
    assert_eq!(a.entries, vec![ints(&[0])]);
    assert_eq!(a.det_b0(), TowerElem::one());
}

#[test]
fn cusp_model_and_exceptional_coefficients() {
    let t = resolve(&form("d(y^2 - x^3)")).unwrap();
    let r = compute_model(&t).unwrap();
    assert_eq!(r.model.lambdas, ints(&[1]));
    assert_eq!(r.model.mu, ints(&[2, 3, 6]));
    assert!(r.cs_sums.iter().all(|(_, s)| *s == TowerElem::from_int(-1)));
}

#[test]
fn martinet_ramis_models() {
    for (p, qq) in [(1i64, 1i64), (1, 2), (2, 3)] {
        let t = resolve(&form(&format!("{p}*y*dx + ({qq} + x^{p}*y^{qq})*x*dy"))).unwrap();
        let r = compute_model(&t).unwrap();
        // B1 is y = 0: the model is q (y = 0) + p (x = 0) up to scale.
        assert_eq!(r.model.lambdas, vec![TowerElem::one(), q(p, qq)]);
    }
}

#[test]
fn recursion_matches_residue_formula() {
    for w in ["d(y^2 - x^3)", "d(x*(y^2 - x^3))", "d((y - x^2)*(y + x^2))", "d(y^3 - x^5)"] {
        let t = resolve(&form(w)).unwrap();
        for (i, n) in t.nodes.iter().enumerate() {
            for (e, axis) in &n.exceptional {
                let rec = cs_along(&t, i, ComponentId::Exceptional(*e)).unwrap();
                assert_eq!(Some(rec), cs_residue(&n.local_form, *axis), "{w} at {}", n.address);
            }
        }
    }
    // Along the coordinate axes at an unblown root.
    let t = resolve(&form("d(x*y*(x+y))")).unwrap();
    let a = build_index_matrix(&t).unwrap();
    let w = &t.root().local_form;
    assert_eq!(Some(a.entries[0][0].clone()), cs_residue(w, Axis::Y));
    assert_eq!(cs_residue(&form("2*y*dx + 3*x*dy"), Axis::Y), Some(q(-2, 3)));
}

#[test]
fn verification_of_given_divisors() {
    let t = resolve(&form("d(x*y*(x+y))")).unwrap();
    let d = CDivisor::from_pairs([("B1", q(1, 1)), ("B2", q(1, 1)), ("B3", q(1, 1))]);
    assert!(verify_model(&t, &d).unwrap().is_model());
    assert!(verify_model(&t, &d.scale(&TowerElem::from_int(7))).unwrap().is_model());
    let bad = CDivisor::from_pairs([("B1", q(1, 1)), ("B2", q(2, 1)), ("B3", q(1, 1))]);
    let r = verify_model(&t, &bad).unwrap();
    assert!(!r.is_model());
    assert_eq!(r.index_violations, vec!["B1", "B2", "B3"]);
    let short = CDivisor::from_pairs([("B1", q(1, 1)), ("B2", q(1, 1))]);
    assert!(!verify_model(&t, &short).unwrap().support_ok);
}

#[test]
fn opposite_parabolas_divisor_is_dicritical() {
    let t = resolve(&form("d(y^2 - x^4)")).unwrap();
    let d = CDivisor::from_pairs([("B1", q(1, 1)), ("B2", q(-1, 1))]);
    let r = verify_model(&t, &d).unwrap();
    assert_eq!(r.dicritical, Some(("E1".to_string(), vec![1, 1])));
    assert!(!r.is_model());
    let model = compute_model(&t).unwrap().model;
    assert_eq!(divisor_dicriticality(&t, &model.lambdas).unwrap(), None);
}

#[test]
fn dicritical_corner_resonance() {
    // The corner of B1 and B2 at the unblown origin carries (1, -2).
    let t = resolve(&form("d(x*y)")).unwrap();
    let w = divisor_dicriticality(&t, &[q(1, 1), q(-2, 1)]).unwrap().unwrap();
    assert_eq!(w.1, vec![2, 1]);
    assert_eq!(divisor_dicriticality(&t, &[q(1, 1), q(2, 1)]).unwrap(), None);
}

#[test]
fn equation_mismatch_is_reported() {
    let t = with_equations("d(x^2*y^3)", &["x*y"]);
    let m = compute_model(&t).unwrap().model;
    assert!(matches!(logarithmic_model_form(&t, &m), Err(ModelError::EquationMismatch(_))));
    let t = with_equations("d(x*y)", &["x", "y", "x - y"]);
    let m = compute_model(&t).unwrap().model;
    assert!(matches!(logarithmic_model_form(&t, &m), Err(ModelError::EquationMismatch(_))));
}

#[test]
fn stability_under_blowup() {
    for w in ["d(x*y)", "d(x^2*y^3)", "d(x*y*(x+y))", "d(y^2 - x^3)", "d(x*(y^2 - x^3))", "y*dx + (2 + x*y^2)*x*dy"] {
        let t = resolve(&form(w)).unwrap();
        let m = compute_model(&t).unwrap().model;
        let checks = blowup_stability(&t, &m).unwrap();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c.ok), "{w}: {checks:?}");
    }
}

#[test]
fn reports_are_sorted_json_and_dot() {
    let t = resolve(&form("d(y^2 - x^3)")).unwrap();
    let r = compute_model(&t).unwrap();
    let j = model_json(&t, &r);
    let keys: Vec<&String> = j.as_object().unwrap().keys().collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    assert_eq!(j["exceptional"][2]["coefficient"]["text"], "6");
    assert_eq!(j["branches"][0]["cs_index"]["text"], "0");
    let dot = annotated_dot(&t, Some(&r.model));
    assert!(dot.contains("E3 [shape=box, label=\"E3\\n6\"]"));
}

/// Model of `phi^* w` for `phi = (x^a, y^b)`, read through the tracked
/// equations `[x, y, phi^* g]`.
fn pulled_model(w: &OneForm, a: u32, b: u32, g: &str) -> Vec<TowerElem> {
    let (sx, sy) = (BiPoly::x().pow(a), BiPoly::y().pow(b));
    let pw = w.pullback(&sx, &sy).strip_common_factor().0;
    let g = parse_poly(g).unwrap().compose(&sx, &sy);
    let opts = ResolveOptions { equations: vec![BiPoly::x(), BiPoly::y(), g], ..Default::default() };
    let t = resolve_with(&pw, &opts).unwrap();
    let m = compute_model(&t).unwrap().model;
    let mut by_eq = vec![TowerElem::zero(); 3];
    for (br, l) in t.branches.iter().zip(&m.lambdas) {
        by_eq[br.equation.unwrap()] = l.clone();
    }
    by_eq
}

#[test]
fn models_commute_with_monomial_pullbacks() {
    // The Martinet-Ramis form with (p, q) = (1, 2) has model (x = 0) + 2 (y = 0);
    // the pull-back multiplies the coefficient of x by 2 and that of y by 3.
    let mr = form("y*dx + (2 + x*y^2)*x*dy");
    let got = pulled_model(&mr, 2, 3, "x + y");
    let lx = &got[0] / &got[1];
    assert_eq!(lx, q(2 * 1, 3 * 2));
    // dx/x + 2 dy/y + 3 d(x+y)/(x+y): x + y pulls back to the irreducible
    // x^2 + y^3 with coefficient 3.
    let log = match symbolic::parse("d(x)/x + 2*d(y)/y + 3*d(x + y)/(x + y)").unwrap() {
        symbolic::Parsed::Log(l) => l.to_reduced_form(),
        other => panic!("unexpected {other:?}"),
    };
    let got = pulled_model(&log, 2, 3, "x + y");
    let n = got[0].clone();
    assert_eq!(got.iter().map(|c| c / &n).collect::<Vec<_>>(), vec![q(1, 1), q(6, 2), q(3, 2)]);
}
