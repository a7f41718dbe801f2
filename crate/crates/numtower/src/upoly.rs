//! Univariate polynomials over tower elements.

use crate::tower::{Tower, TowerElem};
use crate::Rational;
use std::cmp::Ordering;
use std::fmt;

/// Coefficients from low to high degree, with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    c: Vec<TowerElem>,
}

impl UPoly {
    pub fn new(mut c: Vec<TowerElem>) -> UPoly {
        while c.last().is_some_and(TowerElem::is_zero) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> UPoly {
        UPoly { c: Vec::new() }
    }

    pub fn constant(e: TowerElem) -> UPoly {
        UPoly::new(vec![e])
    }

    pub fn x() -> UPoly {
        UPoly::new(vec![TowerElem::zero(), TowerElem::one()])
    }

    pub fn from_ints(v: &[i64]) -> UPoly {
        UPoly::new(v.iter().map(|&n| TowerElem::from_int(n)).collect())
    }

    pub fn from_rationals(v: &[Rational]) -> UPoly {
        UPoly::new(v.iter().cloned().map(TowerElem::rational).collect())
    }

    pub fn coeffs(&self) -> &[TowerElem] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> TowerElem {
        self.c.get(i).cloned().unwrap_or_else(TowerElem::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lc(&self) -> TowerElem {
        self.c.last().cloned().unwrap_or_else(TowerElem::zero)
    }

    /// The longest tower among the coefficients (they must be compatible).
    pub fn tower(&self) -> Tower {
        let mut t = Tower::rationals();
        for c in &self.c {
            if c.tower().height() > t.height() {
                t = c.tower().clone();
            }
        }
        t
    }

    /// Rational coefficients if every coefficient is rational.
    pub fn to_rationals(&self) -> Option<Vec<Rational>> {
        self.c.iter().map(TowerElem::is_rational).collect()
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        UPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn neg(&self) -> UPoly {
        UPoly { c: self.c.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, s: &TowerElem) -> UPoly {
        UPoly::new(self.c.iter().map(|x| x * s).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![TowerElem::zero(); self.c.len() + o.c.len() - 1];
        for (i, x) in self.c.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in o.c.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                out[i + j] += &(x * y);
            }
        }
        UPoly::new(out)
    }

    pub fn pow(&self, n: u32) -> UPoly {
        let mut acc = UPoly::constant(TowerElem::one());
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.c.len() - 1;
        let mut r = self.c.clone();
        if r.len() < d.c.len() {
            return (UPoly::zero(), self.clone());
        }
        let li = d.lc().inv().expect("nonzero leading coefficient");
        let mut q = vec![TowerElem::zero(); r.len() - dd];
        while r.len() >= d.c.len() {
            let i = r.len() - 1;
            let c = &r[i] * &li;
            let sh = i - dd;
            for (j, dj) in d.c.iter().enumerate() {
                let t = &c * dj;
                r[sh + j] -= &t;
            }
            q[sh] = c;
            while r.last().is_some_and(TowerElem::is_zero) {
                r.pop();
            }
        }
        (UPoly::new(q), UPoly::new(r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.divrem(d).1
    }

    /// Quotient of an exact division.
    pub fn exact_div(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let li = self.lc().inv().unwrap();
        self.scale(&li)
    }

    /// Monic greatest common divisor (zero if both inputs vanish).
    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, x)| x * &TowerElem::from_int(i as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &TowerElem) -> TowerElem {
        let mut acc = TowerElem::zero();
        for c in self.c.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// `p(x + s)`.
    pub fn shift(&self, s: &TowerElem) -> UPoly {
        let lin = UPoly::new(vec![s.clone(), TowerElem::one()]);
        let mut acc = UPoly::zero();
        for c in self.c.iter().rev() {
            acc = acc.mul(&lin).add(&UPoly::constant(c.clone()));
        }
        acc
    }

    /// Resultant over the coefficient field.
    pub fn resultant(&self, o: &UPoly) -> TowerElem {
        if self.is_zero() || o.is_zero() {
            return TowerElem::zero();
        }
        let (m, n) = (self.c.len() - 1, o.c.len() - 1);
        if n == 0 {
            return o.lc().pow(m as u32);
        }
        if m == 0 {
            return self.lc().pow(n as u32);
        }
        let r = self.rem(o);
        if r.is_zero() {
            return TowerElem::zero();
        }
        let k = r.c.len() - 1;
        let sign = if m % 2 == 1 && n % 2 == 1 { -TowerElem::one() } else { TowerElem::one() };
        &(&sign * &o.lc().pow((m - k) as u32)) * &o.resultant(&r)
    }

    /// Newton interpolation through `(xs[i], ys[i])`.
    pub fn interpolate(xs: &[TowerElem], ys: &[TowerElem]) -> UPoly {
        let n = xs.len();
        let mut dd: Vec<TowerElem> = ys.to_vec();
        for j in 1..n {
            for i in (j..n).rev() {
                dd[i] = &(&dd[i] - &dd[i - 1]) / &(&xs[i] - &xs[i - j]);
            }
        }
        let mut acc = UPoly::constant(dd[n - 1].clone());
        for i in (0..n - 1).rev() {
            let lin = UPoly::new(vec![-&xs[i], TowerElem::one()]);
            acc = acc.mul(&lin).add(&UPoly::constant(dd[i].clone()));
        }
        acc
    }

    /// Squarefree decomposition `[(a_1, 1), (a_2, 2), ...]` of a monic input
    /// (Yun's algorithm; characteristic zero).
    pub fn squarefree_decomposition(&self) -> Vec<(UPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let a = self.monic();
        let da = a.derivative();
        let b = a.gcd(&da);
        let mut c = a.exact_div(&b);
        let mut d = da.exact_div(&b).sub(&c.derivative());
        let mut i = 1;
        while c.degree().unwrap_or(0) > 0 {
            let g = c.gcd(&d);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.clone(), i));
            }
            c = c.exact_div(&g);
            d = d.exact_div(&g).sub(&c.derivative());
            i += 1;
        }
        out
    }

    pub fn squarefree_part(&self) -> UPoly {
        let a = self.monic();
        a.exact_div(&a.gcd(&a.derivative()))
    }
}

/// Canonical order used to sort factor lists deterministically.
pub fn cmp_upoly(a: &UPoly, b: &UPoly) -> Ordering {
    a.c.len().cmp(&b.c.len()).then_with(|| {
        for (x, y) in a.c.iter().rev().zip(b.c.iter().rev()) {
            let o = x.cmp(y);
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.c.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*X")?,
                _ => write!(f, "{c}*X^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
