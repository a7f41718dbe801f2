use model::*;
use numtower::TowerElem;
use proptest::prelude::*;
use resolution::*;
use symbolic::{BiPoly, OneForm};

/// `y + c x^k` for distinct `(c, k)` gives smooth branches with prescribed
/// contact; `x` is added when requested.
fn germ(curves: &[(i64, u32, i64)], with_x: Option<i64>) -> (OneForm, Vec<BiPoly>, Vec<i64>) {
    let mut f = BiPoly::one();
    let mut eqs = Vec::new();
    let mut exps = Vec::new();
    for &(c, k, a) in curves {
        let g = BiPoly::y().add(&BiPoly::monomial(TowerElem::from_int(c), k, 0));
        f = f.mul(&g.pow(a as u32));
        eqs.push(g);
        exps.push(a);
    }
    if let Some(a) = with_x {
        f = f.mul(&BiPoly::x().pow(a as u32));
        eqs.push(BiPoly::x());
        exps.push(a);
    }
    (OneForm::exact(&f).strip_common_factor().0, eqs, exps)
}

fn curves() -> impl Strategy<Value = (Vec<(i64, u32, i64)>, Option<i64>)> {
    (
        proptest::collection::btree_map((-3i64..=3, 1u32..=3), 1i64..=3, 1..=3),
        proptest::option::of(1i64..=3),
    )
        .prop_map(|(m, x)| (m.into_iter().map(|((c, k), a)| (c, k, a)).collect(), x))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn exact_forms_have_their_exponents_as_model((cs, x) in curves()) {
        let (w, eqs, exps) = germ(&cs, x);
        let opts = ResolveOptions { equations: eqs, ..Default::default() };
        let t = resolve_with(&w, &opts).unwrap();
        let r = compute_model(&t).unwrap();
        let e0 = exps[t.branches[0].equation.unwrap()];
        for (b, l) in t.branches.iter().zip(&r.model.lambdas) {
            prop_assert_eq!(l, &TowerElem::from_frac(exps[b.equation.unwrap()], e0));
        }
        for (_, s) in &r.cs_sums {
            prop_assert_eq!(s, &TowerElem::from_int(-1));
        }
        prop_assert!(r.matrix.is_symmetric());
        prop_assert_eq!(r.matrix.rank(), t.branches.len() - 1);
        prop_assert!(blowup_stability(&t, &r.model).unwrap().iter().all(|c| c.ok));
    }

    #[test]
    fn scaled_models_verify((cs, x) in curves(), k in 1i64..=9) {
        let (w, _, _) = germ(&cs, x);
        let t = resolve(&w).unwrap();
        let m = compute_model(&t).unwrap().model;
        let d = m.divisor().scale(&TowerElem::from_int(k));
        prop_assert!(verify_model(&t, &d).unwrap().is_model());
    }
}
