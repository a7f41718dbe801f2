//! Logarithmic order of a node's generator along its local divisor.

use crate::tree::{Axis, ResolutionNode};
use symbolic::{BiPoly, OneForm};

/// `min nu_0` of the coefficients of `w / (product of the local divisor)`
/// written in the basis `dx_i / x_i` (divisor coordinates) and `dx_j`.
///
/// The local divisor is the set of exceptional axes through the point; at a
/// simple unblown origin it is the pair of separatrices, straightened by the
/// linear change to eigen-coordinates (only the 1-jet is used when the
/// separatrices are not lines). Returns `None` when a divisor component is
/// not invariant.
pub fn log_order(node: &ResolutionNode) -> Option<u32> {
    let w = &node.local_form;
    if node.exceptional.is_empty() && node.root_separatrices.len() == 2 {
        let (p1, q1) = &node.root_separatrices[0].tangent;
        let (p2, q2) = &node.root_separatrices[1].tangent;
        let sx = BiPoly::x().scale(p1).add(&BiPoly::y().scale(p2));
        let sy = BiPoly::x().scale(q1).add(&BiPoly::y().scale(q2));
        let v = w.pullback(&sx, &sy);
        return log_coefficients(&v, &[Axis::Y, Axis::X])
            .or_else(|| {
                let j1 = OneForm::new(v.a.homogeneous_part(1), v.b.homogeneous_part(1));
                log_coefficients(&j1, &[Axis::Y, Axis::X])
            })
            .map(|f| min_order(&f));
    }
    let axes: Vec<Axis> = node.exceptional.iter().map(|p| p.1).collect();
    log_coefficients(w, &axes).map(|f| min_order(&f))
}

/// Coefficients `(A, B)` of `w` divided by the listed axes: dividing by the
/// line `x = 0` turns `b dy` into `(b / x) dy` next to `a dx/x`, and so on.
fn log_coefficients(w: &OneForm, axes: &[Axis]) -> Option<OneForm> {
    let (mut a, mut b) = (w.a.clone(), w.b.clone());
    for ax in axes {
        match ax {
            Axis::X => {
                if b.x_adic_order().is_some_and(|k| k == 0) {
                    return None;
                }
                b = b.div_monomial(1, 0);
            }
            Axis::Y => {
                if a.y_adic_order().is_some_and(|k| k == 0) {
                    return None;
                }
                a = a.div_monomial(0, 1);
            }
        }
    }
    Some(OneForm::new(a, b))
}

fn min_order(f: &OneForm) -> u32 {
    f.a.order().into_iter().chain(f.b.order()).min().unwrap_or(0)
}
