//! Exact bivariate gcd (primitive remainder sequence over `K[x][y]`) and
//! exact division.

use crate::bipoly::BiPoly;
use numtower::{TowerElem, UPoly};

type YPoly = Vec<UPoly>;

fn trim(mut a: YPoly) -> YPoly {
    while a.last().is_some_and(UPoly::is_zero) {
        a.pop();
    }
    a
}

fn content(a: &YPoly) -> UPoly {
    a.iter().fold(UPoly::zero(), |g, c| g.gcd(c))
}

fn primitive(a: &YPoly) -> YPoly {
    let c = content(a);
    a.iter().map(|r| r.exact_div(&c)).collect()
}

/// `lc(b)^(deg a - deg b + 1) a mod b` in `K[x][y]`.
fn prem(a: &YPoly, b: &YPoly) -> YPoly {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.clone();
    let mut steps = (a.len() - db) as u32;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let sh = dr - db;
        let mut next: YPoly = r.iter().map(|c| c.mul(lb)).collect();
        for (j, bj) in b.iter().enumerate() {
            next[sh + j] = next[sh + j].sub(&bj.mul(&lr));
        }
        r = trim(next);
        steps -= 1;
    }
    let scale = lb.pow(steps);
    trim(r.iter().map(|c| c.mul(&scale)).collect())
}

/// Upper bound for `deg_y gcd(a, b)`: the degree of the gcd after
/// specializing `x` to a small integer where neither leading coefficient
/// vanishes. `None` when no such point is found.
fn y_degree_bound(a: &YPoly, b: &YPoly) -> Option<usize> {
    let (la, lb) = (a.last()?, b.last()?);
    let mut best: Option<usize> = None;
    let mut tried = 0;
    for x0 in (0..16).map(|k: i64| if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 }) {
        let x0 = TowerElem::from_int(x0);
        if la.eval(&x0).is_zero() || lb.eval(&x0).is_zero() {
            continue;
        }
        let sa = UPoly::new(a.iter().map(|c| c.eval(&x0)).collect());
        let sb = UPoly::new(b.iter().map(|c| c.eval(&x0)).collect());
        let d = sa.gcd(&sb).degree().unwrap_or(0);
        best = Some(best.map_or(d, |m: usize| m.min(d)));
        tried += 1;
        if d == 0 || tried == 2 {
            break;
        }
    }
    best
}

fn divides(d: &YPoly, a: &YPoly) -> bool {
    exact_div(&BiPoly::from_y_coeffs(a), &BiPoly::from_y_coeffs(d)).is_some()
}

/// Greatest common divisor, normalized with [`BiPoly::monic`]; the gcd of
/// two zero polynomials is zero.
pub fn gcd(f: &BiPoly, g: &BiPoly) -> BiPoly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    let (mut a, mut b) = (trim(f.y_coeffs()), trim(g.y_coeffs()));
    let c = content(&a).gcd(&content(&b));
    a = primitive(&a);
    b = primitive(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    let bound = y_degree_bound(&a, &b);
    let (a0, b0) = (a.clone(), b.clone());
    while !b.is_empty() {
        if bound == Some(0) || b.len() == 1 {
            a = vec![UPoly::constant(TowerElem::one())];
            break;
        }
        if bound == Some(b.len() - 1) && divides(&b, &a0) && divides(&b, &b0) {
            a = b;
            break;
        }
        let r = prem(&a, &b);
        a = b;
        b = if r.is_empty() { r } else { primitive(&r) };
    }
    let pp = primitive(&a);
    BiPoly::from_y_coeffs(&pp).mul(&BiPoly::from_upoly_x(&c)).monic()
}

/// `f / g` when `g` divides `f` exactly.
pub fn exact_div(f: &BiPoly, g: &BiPoly) -> Option<BiPoly> {
    assert!(!g.is_zero(), "division by the zero polynomial");
    let b = trim(g.y_coeffs());
    let db = b.len() - 1;
    let mut r = trim(f.y_coeffs());
    let mut q: YPoly = vec![UPoly::zero(); r.len().saturating_sub(db).max(1)];
    while !r.is_empty() {
        if r.len() <= db {
            return None;
        }
        let dr = r.len() - 1;
        let (qc, rem) = r[dr].divrem(&b[db]);
        if !rem.is_zero() {
            return None;
        }
        let sh = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[sh + j] = r[sh + j].sub(&bj.mul(&qc));
        }
        q[sh] = qc;
        r = trim(r);
    }
    Some(BiPoly::from_y_coeffs(&q))
}

/// Product of the distinct irreducible factors (normalized monic).
pub fn squarefree_part(f: &BiPoly) -> BiPoly {
    if f.is_constant() {
        return BiPoly::one();
    }
    let g = gcd(&gcd(f, &f.dx()), &f.dy());
    exact_div(f, &g).expect("gcd divides").monic()
}
