//! Raw field arithmetic on recursive coordinate vectors.
//!
//! A value of level `k > 0` is a polynomial of degree at least one in the
//! `k`-th generator whose coefficients have level `< k`. Keeping every value
//! at the lowest level it can live on makes the representation canonical.

use crate::tower::Level;
use crate::Rational;
use num_traits::{One, Zero};
use std::cmp::Ordering;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) enum Val {
    Q(Rational),
    E(usize, Vec<Val>),
}

impl Val {
    pub(crate) fn zero() -> Val {
        Val::Q(Rational::zero())
    }

    pub(crate) fn one() -> Val {
        Val::Q(Rational::one())
    }

    pub(crate) fn level(&self) -> usize {
        match self {
            Val::Q(_) => 0,
            Val::E(k, _) => *k,
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        matches!(self, Val::Q(q) if q.is_zero())
    }

    /// Coefficients in the power basis of generator `k`; requires `level() <= k`.
    pub(crate) fn coeffs_at(&self, k: usize) -> Vec<Val> {
        match self {
            Val::E(l, c) if *l == k => c.clone(),
            _ => vec![self.clone()],
        }
    }
}

impl Ord for Val {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Val::Q(a), Val::Q(b)) => a.cmp(b),
            (Val::Q(_), Val::E(..)) => Ordering::Less,
            (Val::E(..), Val::Q(_)) => Ordering::Greater,
            (Val::E(k, a), Val::E(l, b)) => k.cmp(l).then(a.len().cmp(&b.len())).then_with(|| {
                for (x, y) in a.iter().rev().zip(b.iter().rev()) {
                    let c = x.cmp(y);
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

impl PartialOrd for Val {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn normalize(k: usize, mut c: Vec<Val>) -> Val {
    while c.last().is_some_and(Val::is_zero) {
        c.pop();
    }
    match c.len() {
        0 => Val::zero(),
        1 => c.pop().unwrap(),
        _ => Val::E(k, c),
    }
}

pub(crate) fn neg(a: &Val) -> Val {
    match a {
        Val::Q(q) => Val::Q(-q),
        Val::E(k, c) => Val::E(*k, c.iter().map(neg).collect()),
    }
}

pub(crate) fn add(a: &Val, b: &Val) -> Val {
    if let (Val::Q(x), Val::Q(y)) = (a, b) {
        return Val::Q(x + y);
    }
    let (ka, kb) = (a.level(), b.level());
    if ka > kb {
        let mut c = a.coeffs_at(ka);
        c[0] = add(&c[0], b);
        normalize(ka, c)
    } else if kb > ka {
        let mut c = b.coeffs_at(kb);
        c[0] = add(a, &c[0]);
        normalize(kb, c)
    } else {
        let (ca, cb) = (a.coeffs_at(ka), b.coeffs_at(kb));
        let n = ca.len().max(cb.len());
        let c = (0..n)
            .map(|i| match (ca.get(i), cb.get(i)) {
                (Some(x), Some(y)) => add(x, y),
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        normalize(ka, c)
    }
}

pub(crate) fn sub(a: &Val, b: &Val) -> Val {
    add(a, &neg(b))
}

pub(crate) fn mul(lv: &[Arc<Level>], a: &Val, b: &Val) -> Val {
    if a.is_zero() || b.is_zero() {
        return Val::zero();
    }
    if let (Val::Q(x), Val::Q(y)) = (a, b) {
        return Val::Q(x * y);
    }
    let (ka, kb) = (a.level(), b.level());
    if ka > kb {
        let c = a.coeffs_at(ka).iter().map(|x| mul(lv, x, b)).collect();
        normalize(ka, c)
    } else if kb > ka {
        let c = b.coeffs_at(kb).iter().map(|y| mul(lv, a, y)).collect();
        normalize(kb, c)
    } else {
        let prod = pmul(lv, &a.coeffs_at(ka), &b.coeffs_at(ka));
        normalize(ka, reduce(lv, ka, prod))
    }
}

pub(crate) fn inv(lv: &[Arc<Level>], a: &Val) -> Option<Val> {
    match a {
        Val::Q(q) => {
            if q.is_zero() {
                None
            } else {
                Some(Val::Q(q.recip()))
            }
        }
        Val::E(k, c) => {
            let k = *k;
            // Extended Euclid in K_{k-1}[t] against the minimal polynomial.
            let mut r0 = lv[k - 1].minpoly.clone();
            let mut r1 = c.clone();
            let mut s0: Vec<Val> = Vec::new();
            let mut s1 = vec![Val::one()];
            while !r1.is_empty() {
                let (q, r) = pdivrem(lv, &r0, &r1);
                let s2 = psub(&s0, &pmul_trim(lv, &q, &s1));
                r0 = r1;
                r1 = r;
                s0 = s1;
                s1 = s2;
            }
            let g = inv(lv, &r0[0])?;
            let res = s0.iter().map(|x| mul(lv, x, &g)).collect();
            Some(normalize(k, res))
        }
    }
}

fn pmul(lv: &[Arc<Level>], a: &[Val], b: &[Val]) -> Vec<Val> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Val::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let t = mul(lv, x, y);
            out[i + j] = add(&out[i + j], &t);
        }
    }
    out
}

fn reduce(lv: &[Arc<Level>], k: usize, mut p: Vec<Val>) -> Vec<Val> {
    let m = &lv[k - 1].minpoly;
    let d = m.len() - 1;
    while p.len() > d {
        let top = p.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let shift = p.len() - d;
        for (j, mj) in m.iter().enumerate().take(d) {
            let t = mul(lv, &top, mj);
            p[shift + j] = sub(&p[shift + j], &t);
        }
    }
    p
}

fn ptrim(mut p: Vec<Val>) -> Vec<Val> {
    while p.last().is_some_and(Val::is_zero) {
        p.pop();
    }
    p
}

fn psub(a: &[Val], b: &[Val]) -> Vec<Val> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => sub(x, y),
            (Some(x), None) => x.clone(),
            (None, Some(y)) => neg(y),
            (None, None) => unreachable!(),
        })
        .collect();
    ptrim(out)
}

fn pmul_trim(lv: &[Arc<Level>], a: &[Val], b: &[Val]) -> Vec<Val> {
    ptrim(pmul(lv, a, b))
}

fn pdivrem(lv: &[Arc<Level>], a: &[Val], b: &[Val]) -> (Vec<Val>, Vec<Val>) {
    let mut r = ptrim(a.to_vec());
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lcinv = inv(lv, &b[db]).expect("nonzero leading coefficient");
    let mut q = vec![Val::zero(); r.len() - db];
    while r.len() >= b.len() {
        let i = r.len() - 1;
        let c = mul(lv, &r[i], &lcinv);
        let sh = i - db;
        for (j, bj) in b.iter().enumerate() {
            let t = mul(lv, &c, bj);
            r[sh + j] = sub(&r[sh + j], &t);
        }
        q[sh] = c;
        r = ptrim(r);
    }
    (ptrim(q), r)
}
