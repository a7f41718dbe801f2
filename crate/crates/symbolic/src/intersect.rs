//! Local intersection multiplicity at the origin by resultants.

use crate::bipoly::BiPoly;
use crate::gcd::{exact_div, gcd};
use numtower::{TowerElem, UPoly};

/// `Res_x(f, g)` as a polynomial in `y`, by evaluation and interpolation.
/// Both inputs must have constant leading coefficient in `x`.
fn resultant_x(f: &BiPoly, g: &BiPoly) -> UPoly {
    let bound = (f.total_degree().unwrap_or(0) * g.total_degree().unwrap_or(0)) as i64;
    let xs: Vec<TowerElem> = (0..=bound).map(TowerElem::from_int).collect();
    let ys: Vec<TowerElem> = xs.iter().map(|y0| f.restrict_y(y0).resultant(&g.restrict_y(y0))).collect();
    UPoly::interpolate(&xs, &ys)
}

fn lc_x_constant(f: &BiPoly) -> bool {
    let d = f.deg_x().unwrap_or(0);
    f.total_degree() == Some(d) && !f.coeff(d, 0).is_zero()
}

/// Intersection multiplicity of `f = 0` and `g = 0` at the origin; `None`
/// stands for infinity (a common component through the origin).
///
/// After removing common factors that miss the origin, the shear
/// `y -> y + k x` (k = 0, 1, 2, ...) is applied until both polynomials have
/// constant leading coefficient in `x` and the line `y = 0` meets their
/// common zero set only at the origin. Then the answer is the order in `y`
/// of `Res_x`.
pub fn intersection_multiplicity(f: &BiPoly, g: &BiPoly) -> Option<u32> {
    if f.is_zero() || g.is_zero() {
        return None;
    }
    if !f.vanishes_at_origin() || !g.vanishes_at_origin() {
        return Some(0);
    }
    let h = gcd(f, g);
    let (f, g) = if h.is_constant() {
        (f.clone(), g.clone())
    } else if h.vanishes_at_origin() {
        return None;
    } else {
        (exact_div(f, &h).unwrap(), exact_div(g, &h).unwrap())
    };
    for k in 0i64.. {
        let sy = BiPoly::y().add(&BiPoly::x().scale(&TowerElem::from_int(k)));
        let (fk, gk) = (f.compose(&BiPoly::x(), &sy), g.compose(&BiPoly::x(), &sy));
        if !lc_x_constant(&fk) || !lc_x_constant(&gk) {
            continue;
        }
        let zero = TowerElem::zero();
        let common = fk.restrict_y(&zero).gcd(&gk.restrict_y(&zero));
        let e = common.degree().unwrap_or(0);
        if common != UPoly::x().pow(e as u32) {
            continue;
        }
        let r = resultant_x(&fk, &gk);
        let ord = r.coeffs().iter().position(|c| !c.is_zero()).expect("coprime inputs");
        return Some(ord as u32);
    }
    unreachable!()
}
