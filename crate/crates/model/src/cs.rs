//! Camacho-Sad indices.

use crate::ModelError;
use numtower::TowerElem;
use resolution::{Axis, ComponentId, ResolutionTree};
use symbolic::OneForm;

/// `-lambda/mu` for `w = (lambda + ...) y dx + (mu + ...) x dy` along the
/// invariant axis `along`; zero at a regular point.
pub fn cs_index_of_form(w: &OneForm, along: Axis) -> Result<TowerElem, ModelError> {
    if !w.is_singular_at_origin() {
        return Ok(TowerElem::zero());
    }
    let (a_y, b_x) = (w.a.coeff(0, 1), w.b.coeff(1, 0));
    if a_y.is_zero() || b_x.is_zero() {
        return Err(ModelError::NotSimple(format!("{w}")));
    }
    Ok(match along {
        Axis::Y => -&(&a_y / &b_x),
        Axis::X => -&(&b_x / &a_y),
    })
}

/// Index along an invariant axis by the residue formula: writing
/// `w = h dy + y (a / y) dx` along `y = 0`, the index is
/// `-Res_{x=0} (a/y)(x, 0) / b(x, 0)`; symmetrically along `x = 0`.
/// Valid at any point where the axis is invariant.
pub fn cs_residue(w: &OneForm, along: Axis) -> Option<TowerElem> {
    let zero = TowerElem::zero();
    let (p, q) = match along {
        Axis::Y => {
            if w.a.y_adic_order().is_some_and(|k| k == 0) {
                return None;
            }
            (w.a.div_monomial(0, 1).restrict_y(&zero), w.b.restrict_y(&zero))
        }
        Axis::X => {
            if w.b.x_adic_order().is_some_and(|k| k == 0) {
                return None;
            }
            (w.b.div_monomial(1, 0).restrict_x(&zero), w.a.restrict_x(&zero))
        }
    };
    let k = q.coeffs().iter().position(|c| !c.is_zero())?;
    if k == 0 {
        return Some(zero);
    }
    // Residue = coefficient of t^(k-1) in p / (q / t^k).
    let qs: Vec<TowerElem> = q.coeffs()[k..].to_vec();
    let inv0 = qs[0].inv().ok()?;
    let mut s: Vec<TowerElem> = Vec::with_capacity(k);
    for n in 0..k {
        let mut acc = p.coeff(n);
        for i in 1..=n {
            if let Some(qi) = qs.get(i) {
                acc -= &(qi * &s[n - i]);
            }
        }
        s.push(&acc * &inv0);
    }
    Some(-&s[k - 1])
}

/// Index at a leaf along a component through it.
pub fn cs_index_simple(tree: &ResolutionTree, node: usize, along: ComponentId) -> Result<TowerElem, ModelError> {
    let n = &tree.nodes[node];
    if !n.is_leaf() {
        return Err(ModelError::NotSimple(n.address.to_string()));
    }
    match along {
        ComponentId::Exceptional(e) => {
            let axis = n.axis_of(e).ok_or_else(|| ModelError::NotIncident(along.to_string(), n.address.to_string()))?;
            cs_index_of_form(&n.local_form, axis)
        }
        ComponentId::Branch(b) => {
            let br = tree.branches.get(b).ok_or_else(|| ModelError::UnknownBranch(along.to_string()))?;
            if br.leaf != node {
                return Err(ModelError::NotIncident(along.to_string(), n.address.to_string()));
            }
            Ok(br.local_cs.clone())
        }
    }
}

/// Index at any node of the tree along a component through it:
/// `CS_p = CS_q(strict) + nu_p^2` where `q` is the next point on the
/// component.
pub fn cs_along(tree: &ResolutionTree, node: usize, along: ComponentId) -> Result<TowerElem, ModelError> {
    let n = &tree.nodes[node];
    if n.is_leaf() {
        return cs_index_simple(tree, node, along);
    }
    let (next, nu) = match along {
        ComponentId::Exceptional(e) => {
            let axis = n.axis_of(e).ok_or_else(|| ModelError::NotIncident(along.to_string(), n.address.to_string()))?;
            let next = n.children.iter().copied().find(|&c| tree.nodes[c].axis_of(e) == Some(axis));
            (next, 1)
        }
        ComponentId::Branch(b) => {
            let br = tree.branches.get(b).ok_or_else(|| ModelError::UnknownBranch(along.to_string()))?;
            let path = tree.path(br.leaf);
            let next = path.iter().position(|&p| p == node).and_then(|i| path.get(i + 1)).copied();
            (next, br.nu_at(node))
        }
    };
    let next = next.ok_or_else(|| ModelError::NotIncident(along.to_string(), n.address.to_string()))?;
    Ok(&cs_along(tree, next, along)? + &TowerElem::from_int((nu * nu) as i64))
}

/// `CS_0(F, H)` for a branch of the tree.
pub fn cs_index_branch(tree: &ResolutionTree, branch: usize) -> Result<TowerElem, ModelError> {
    if branch >= tree.branches.len() {
        return Err(ModelError::UnknownBranch(format!("B{}", branch + 1)));
    }
    cs_along(tree, 0, ComponentId::Branch(branch))
}

/// For every blow-up, the sum of the indices along the new component over
/// the singular points on it (`-1` for a non-dicritical blow-up).
pub fn cs_sums(tree: &ResolutionTree) -> Result<Vec<(usize, TowerElem)>, ModelError> {
    let mut out = Vec::new();
    for &p in &tree.blowup_order {
        let e = tree.nodes[p].created.unwrap();
        let mut s = TowerElem::zero();
        for &c in &tree.nodes[p].children {
            s = &s + &cs_along(tree, c, ComponentId::Exceptional(e))?;
        }
        out.push((e, s));
    }
    Ok(out)
}
