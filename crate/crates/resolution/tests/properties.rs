use numtower::TowerElem;
use proptest::prelude::*;
use resolution::*;
use symbolic::{intersection_multiplicity, BiPoly, OneForm};

/// Distinct curves `y + c x^k` and optionally `x`.
fn factors() -> impl Strategy<Value = Vec<BiPoly>> {
    (proptest::collection::btree_set((-3i64..=3, 1u32..=4), 1..=3), any::<bool>()).prop_map(|(s, with_x)| {
        let mut v: Vec<BiPoly> =
            s.into_iter().map(|(c, k)| BiPoly::y().add(&BiPoly::monomial(TowerElem::from_int(c), k, 0))).collect();
        v.dedup_by_key(|p| p.to_string());
        if with_x {
            v.push(BiPoly::x());
        }
        v
    })
}

fn product(fs: &[BiPoly]) -> BiPoly {
    fs.iter().fold(BiPoly::one(), |a, b| a.mul(b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn exact_products_resolve_consistently(fs in factors()) {
        let w = OneForm::exact(&product(&fs)).strip_common_factor().0;
        let t = resolve(&w).unwrap();
        prop_assert_eq!(t.branches.len(), fs.len());
        for n in t.leaves() {
            let node = &t.nodes[n];
            if node.classification != Classification::Regular {
                prop_assert_eq!(node.classification.is_simple(), log_order(node) == Some(0));
            }
        }
        // Multiplicity law for generalized curves.
        let nu_s: u32 = t.branches.iter().map(|b| b.order()).sum();
        prop_assert_eq!(w.order(), Some(nu_s - 1));
        // The exceptional part of the dual graph is a tree.
        let e = t.exceptional.len();
        let edges: Vec<(usize, usize)> = t
            .dual_graph()
            .into_iter()
            .filter_map(|(a, b, _)| match (a, b) {
                (ComponentId::Exceptional(i), ComponentId::Exceptional(j)) => Some((i, j)),
                _ => None,
            })
            .collect();
        if e > 0 {
            prop_assert_eq!(edges.len(), e - 1);
            let mut seen = vec![false; e];
            let mut stack = vec![0];
            while let Some(i) = stack.pop() {
                if !std::mem::replace(&mut seen[i], true) {
                    stack.extend(edges.iter().filter(|p| p.0 == i).map(|p| p.1));
                    stack.extend(edges.iter().filter(|p| p.1 == i).map(|p| p.0));
                }
            }
            prop_assert!(seen.iter().all(|&s| s));
        }
    }

    #[test]
    fn tree_intersections_match_resultants(fs in factors()) {
        let w = OneForm::exact(&product(&fs)).strip_common_factor().0;
        let opts = ResolveOptions { equations: fs.clone(), ..Default::default() };
        let t = resolve_with(&w, &opts).unwrap();
        for i in 0..t.branches.len() {
            for j in i + 1..t.branches.len() {
                let (a, b) = (t.branches[i].equation.unwrap(), t.branches[j].equation.unwrap());
                prop_assert_eq!(Some(t.branch_intersection(i, j)), intersection_multiplicity(&fs[a], &fs[b]));
                prop_assert_eq!(noether_intersection(&fs[a], &fs[b]).unwrap(), intersection_multiplicity(&fs[a], &fs[b]));
            }
        }
    }
}
