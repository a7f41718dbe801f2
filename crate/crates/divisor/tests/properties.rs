use divisor::*;
use numtower::{adjoin_root, Region, Tower, TowerElem, UPoly};
use proptest::prelude::*;
use std::sync::OnceLock;

fn sqrt2() -> TowerElem {
    static S: OnceLock<TowerElem> = OnceLock::new();
    S.get_or_init(|| adjoin_root(&Tower::rationals(), &UPoly::from_ints(&[-2, 0, 1]), &Region::from_ints(1, 2, -1, 1, 1)).unwrap().1)
        .clone()
}

/// Every `m` with `1 <= sum m <= cap`, in a fixed order.
fn brute_force(lam: &[TowerElem], cap: u64) -> Option<Vec<u64>> {
    fn rec(lam: &[TowerElem], k: usize, left: u64, m: &mut Vec<u64>) -> Option<Vec<u64>> {
        if k == lam.len() {
            return is_witness(lam, m).then(|| m.clone());
        }
        for v in 0..=left {
            m.push(v);
            let r = rec(lam, k + 1, left - v, m);
            m.pop();
            if r.is_some() {
                return r;
            }
        }
        None
    }
    rec(lam, 0, cap, &mut Vec::new())
}

/// Exhaustive search shows every resonant vector of length at most 3 drawn
/// from `entry()` has a witness with sum at most 24.
const WITNESS_BOUND: u64 = 24;

fn entry() -> impl Strategy<Value = TowerElem> {
    (-3i64..=3, 1i64..=2, -1i64..=1)
        .prop_filter("nonzero", |(n, _, k)| *n != 0 || *k != 0)
        .prop_map(|(n, d, k)| &TowerElem::from_frac(n, d) + &(&TowerElem::from_int(k) * &sqrt2()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn decide_matches_brute_force(lam in proptest::collection::vec(entry(), 2..=3)) {
        let lp = dicritical_decide(&lam).unwrap();
        let bf = brute_force(&lam, WITNESS_BOUND);
        prop_assert_eq!(lp.is_some(), bf.is_some());
        if let Some(m) = lp {
            prop_assert!(is_witness(&lam, &m));
            let steps = resonance_descent(&lam, &m).unwrap();
            prop_assert!(steps.last().unwrap().combined.is_zero());
            for w in steps.windows(2) {
                prop_assert!(w[1].invariant < w[0].invariant);
            }
        }
    }

    #[test]
    fn index_is_projectively_invariant(a in entry(), b in entry(), c in entry(), s in entry(), n1 in 1u32..4, n2 in 1u32..4) {
        let d = CDivisor::from_pairs([("T", a), ("H1", b), ("H2", c)]);
        let p = [("H1", n1), ("H2", n2)];
        prop_assert_eq!(index(&d, "T", &p).unwrap(), index(&d.scale(&s), "T", &p).unwrap());
    }
}
