//! Sparse bivariate polynomials.

use numtower::{Tower, TowerElem, UPoly};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Exponent pair `(i, j)` for the monomial `x^i y^j`.
pub type Exp = (u32, u32);

/// Graded lexicographic order: total degree first, then the x exponent.
pub fn grlex(a: &Exp, b: &Exp) -> Ordering {
    (a.0 + a.1).cmp(&(b.0 + b.1)).then(a.0.cmp(&b.0))
}

/// A polynomial in `x, y` with no stored zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Exp, TowerElem>,
}

impl BiPoly {
    pub fn zero() -> BiPoly {
        BiPoly::default()
    }

    pub fn one() -> BiPoly {
        BiPoly::constant(TowerElem::one())
    }

    pub fn constant(c: TowerElem) -> BiPoly {
        BiPoly::monomial(c, 0, 0)
    }

    pub fn from_int(n: i64) -> BiPoly {
        BiPoly::constant(TowerElem::from_int(n))
    }

    pub fn monomial(c: TowerElem, i: u32, j: u32) -> BiPoly {
        let mut p = BiPoly::zero();
        p.add_term((i, j), c);
        p
    }

    pub fn x() -> BiPoly {
        BiPoly::monomial(TowerElem::one(), 1, 0)
    }

    pub fn y() -> BiPoly {
        BiPoly::monomial(TowerElem::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exp, TowerElem)>>(it: I) -> BiPoly {
        let mut p = BiPoly::zero();
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    /// Builds from integer triples `(coefficient, i, j)`.
    pub fn from_ints(ts: &[(i64, u32, u32)]) -> BiPoly {
        BiPoly::from_terms(ts.iter().map(|&(c, i, j)| ((i, j), TowerElem::from_int(c))))
    }

    pub fn add_term(&mut self, e: Exp, c: TowerElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: u32, j: u32) -> TowerElem {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(TowerElem::zero)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> Vec<(Exp, &TowerElem)> {
        let mut v: Vec<(Exp, &TowerElem)> = self.terms.iter().map(|(e, c)| (*e, c)).collect();
        v.sort_by(|a, b| grlex(&a.0, &b.0));
        v
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> TowerElem {
        self.coeff(0, 0)
    }

    /// The constant value, if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<TowerElem> {
        match self.terms.len() {
            0 => Some(TowerElem::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Least total degree of a term (`None` for zero).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).min()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(i, j)| i + j).max()
    }

    pub fn deg_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).max()
    }

    pub fn deg_y(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).max()
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().filter(|(e, _)| e.0 + e.1 == d).map(|(e, c)| (*e, c.clone())))
    }

    /// Lowest-degree homogeneous component.
    pub fn initial_form(&self) -> BiPoly {
        self.order().map(|d| self.homogeneous_part(d)).unwrap_or_default()
    }

    /// Largest `k` with `x^k` dividing the polynomial.
    pub fn x_adic_order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.0).min()
    }

    pub fn y_adic_order(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.1).min()
    }

    /// Divides by `x^kx y^ky`; panics if that monomial does not divide.
    pub fn div_monomial(&self, kx: u32, ky: u32) -> BiPoly {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    assert!(e.0 >= kx && e.1 >= ky, "monomial does not divide");
                    ((e.0 - kx, e.1 - ky), c.clone())
                })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, kx: u32, ky: u32) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(e, c)| ((e.0 + kx, e.1 + ky), c.clone())).collect() }
    }

    /// The tower spanned by the coefficients (the longest one).
    pub fn tower(&self) -> Tower {
        let mut t = Tower::rationals();
        for c in self.terms.values() {
            if c.tower().height() > t.height() {
                t = c.tower().clone();
            }
        }
        t
    }

    /// Rebases every coefficient onto `t`; `None` if some coefficient does not
    /// live in a prefix of `t`.
    pub fn in_tower(&self, t: &Tower) -> Option<BiPoly> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(*e, c.in_tower(t).ok()?);
        }
        Some(BiPoly { terms })
    }

    pub fn add(&self, o: &BiPoly) -> BiPoly {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(*e, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &BiPoly) -> BiPoly {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn scale(&self, s: &TowerElem) -> BiPoly {
        if s.is_zero() {
            return BiPoly::zero();
        }
        BiPoly { terms: self.terms.iter().map(|(e, c)| (*e, c * s)).collect() }
    }

    pub fn mul(&self, o: &BiPoly) -> BiPoly {
        let mut r = BiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term((e1.0 + e2.0, e1.1 + e2.1), c1 * c2);
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn dx(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.0 > 0)
                .map(|(e, c)| ((e.0 - 1, e.1), c * &TowerElem::from_int(e.0 as i64))),
        )
    }

    pub fn dy(&self) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| e.1 > 0)
                .map(|(e, c)| ((e.0, e.1 - 1), c * &TowerElem::from_int(e.1 as i64))),
        )
    }

    /// `p(sx, sy)` for polynomial substitutions.
    pub fn compose(&self, sx: &BiPoly, sy: &BiPoly) -> BiPoly {
        let dx = self.deg_x().unwrap_or(0);
        let dy = self.deg_y().unwrap_or(0);
        let mut px = vec![BiPoly::one()];
        for k in 0..dx {
            let next = px[k as usize].mul(sx);
            px.push(next);
        }
        let mut py = vec![BiPoly::one()];
        for k in 0..dy {
            let next = py[k as usize].mul(sy);
            py.push(next);
        }
        let mut r = BiPoly::zero();
        for (e, c) in &self.terms {
            r = r.add(&px[e.0 as usize].mul(&py[e.1 as usize]).scale(c));
        }
        r
    }

    /// `p(x + cx, y + cy)`.
    pub fn eval_shift(&self, cx: &TowerElem, cy: &TowerElem) -> BiPoly {
        let sx = BiPoly::x().add(&BiPoly::constant(cx.clone()));
        let sy = BiPoly::y().add(&BiPoly::constant(cy.clone()));
        self.compose(&sx, &sy)
    }

    pub fn eval(&self, x: &TowerElem, y: &TowerElem) -> TowerElem {
        let mut acc = TowerElem::zero();
        for (e, c) in &self.terms {
            acc = &acc + &(&(c * &x.pow(e.0)) * &y.pow(e.1));
        }
        acc
    }

    /// `p(x, y0)` as a polynomial in `x`.
    pub fn restrict_y(&self, y0: &TowerElem) -> UPoly {
        let n = self.deg_x().map_or(0, |d| d as usize + 1);
        let mut c = vec![TowerElem::zero(); n];
        for (e, v) in &self.terms {
            c[e.0 as usize] += &(v * &y0.pow(e.1));
        }
        UPoly::new(c)
    }

    /// `p(x0, y)` as a polynomial in `y`.
    pub fn restrict_x(&self, x0: &TowerElem) -> UPoly {
        self.swap().restrict_y(x0)
    }

    /// `p(y, x)`.
    pub fn swap(&self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(e, c)| ((e.1, e.0), c.clone())).collect() }
    }

    /// Coefficients of the powers of `y`, each a polynomial in `x`.
    pub fn y_coeffs(&self) -> Vec<UPoly> {
        let n = self.deg_y().map_or(0, |d| d as usize + 1);
        let mut rows: Vec<Vec<TowerElem>> = vec![Vec::new(); n];
        for (e, c) in &self.terms {
            let row = &mut rows[e.1 as usize];
            if row.len() <= e.0 as usize {
                row.resize(e.0 as usize + 1, TowerElem::zero());
            }
            row[e.0 as usize] = c.clone();
        }
        rows.into_iter().map(UPoly::new).collect()
    }

    /// Inverse of [`y_coeffs`](Self::y_coeffs).
    pub fn from_y_coeffs(rows: &[UPoly]) -> BiPoly {
        let mut p = BiPoly::zero();
        for (j, r) in rows.iter().enumerate() {
            for (i, c) in r.coeffs().iter().enumerate() {
                p.add_term((i as u32, j as u32), c.clone());
            }
        }
        p
    }

    pub fn from_upoly_x(u: &UPoly) -> BiPoly {
        BiPoly::from_y_coeffs(std::slice::from_ref(u))
    }

    pub fn from_upoly_y(u: &UPoly) -> BiPoly {
        BiPoly::from_upoly_x(u).swap()
    }

    /// Normalizes so that the graded-lex largest coefficient is one.
    pub fn monic(&self) -> BiPoly {
        match self.terms().last() {
            Some((_, c)) => self.scale(&c.inv().unwrap()),
            None => BiPoly::zero(),
        }
    }
}

fn write_coeff_term(f: &mut fmt::Formatter<'_>, c: &TowerElem, e: Exp, first: bool) -> fmt::Result {
    let neg = c.is_rational().is_some_and(|q| q < numtower::Rational::from_integer(0.into()));
    let shown = if neg { -c } else { c.clone() };
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, " {} ", if neg { "-" } else { "+" })?;
    }
    let mut parts: Vec<String> = Vec::new();
    if !shown.is_one() || e == (0, 0) {
        parts.push(shown.to_string());
    }
    for (v, k) in [("x", e.0), ("y", e.1)] {
        match k {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{k}")),
        }
    }
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().into_iter().rev().enumerate() {
            write_coeff_term(f, c, e, k == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
