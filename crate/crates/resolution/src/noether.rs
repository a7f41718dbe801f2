//! Intersection numbers of plane curves by Noether's recursion.

use blowup::{transform_poly, Chart};
use numtower::{all_roots, Tower, TowerElem, TowerError};
use symbolic::{gcd, BiPoly};

/// `(f, g)_0 = nu_0(f) nu_0(g) + sum over common points q on the exceptional
/// line of (f', g')_q`, following strict transforms until they separate.
/// `None` when `f` and `g` share a component through the origin.
pub fn noether_intersection(f: &BiPoly, g: &BiPoly) -> Result<Option<u32>, TowerError> {
    if f.is_zero() || g.is_zero() {
        return Ok(None);
    }
    if !f.vanishes_at_origin() || !g.vanishes_at_origin() {
        return Ok(Some(0));
    }
    if gcd(f, g).vanishes_at_origin() {
        return Ok(None);
    }
    let mut tower = f.tower();
    if g.tower().height() > tower.height() {
        tower = g.tower();
    }
    Ok(Some(recurse(f, g, &mut tower)?))
}

fn recurse(f: &BiPoly, g: &BiPoly, tower: &mut Tower) -> Result<u32, TowerError> {
    let (nf, ng) = (f.order().unwrap(), g.order().unwrap());
    let mut total = nf * ng;
    let zero = TowerElem::zero();
    let f1 = transform_poly(f, Chart::First).expect("nonzero").strict;
    let g1 = transform_poly(g, Chart::First).expect("nonzero").strict;
    let common = f1.restrict_x(&zero).gcd(&g1.restrict_x(&zero));
    if common.degree().unwrap_or(0) > 0 {
        let (t, roots) = all_roots(tower, &common)?;
        *tower = t;
        for c in roots {
            total += recurse(&f1.eval_shift(&zero, &c), &g1.eval_shift(&zero, &c), tower)?;
        }
    }
    let f2 = transform_poly(f, Chart::Second).expect("nonzero").strict;
    let g2 = transform_poly(g, Chart::Second).expect("nonzero").strict;
    if f2.vanishes_at_origin() && g2.vanishes_at_origin() {
        total += recurse(&f2, &g2, tower)?;
    }
    Ok(total)
}
