use crate::error::TowerError;
use crate::isolate::{Disk, CQ};
use crate::rat::format_short;
use crate::val::{self, Val};
use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

pub const DEFAULT_DEGREE_CAP: usize = 64;

/// A closed rational rectangle `[re_lo, re_hi] x [im_lo, im_hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Region {
    pub re_lo: Rational,
    pub re_hi: Rational,
    pub im_lo: Rational,
    pub im_hi: Rational,
}

impl Region {
    pub fn new(re_lo: Rational, re_hi: Rational, im_lo: Rational, im_hi: Rational) -> Region {
        Region { re_lo, re_hi, im_lo, im_hi }
    }

    /// Convenience constructor from integer numerators over a common denominator.
    pub fn from_ints(re_lo: i64, re_hi: i64, im_lo: i64, im_hi: i64, den: i64) -> Region {
        let f = |n: i64| Rational::new(BigInt::from(n), BigInt::from(den));
        Region::new(f(re_lo), f(re_hi), f(im_lo), f(im_hi))
    }
}

pub(crate) struct Level {
    pub(crate) minpoly: Vec<Val>,
    pub(crate) region: Region,
    pub(crate) qpoly: Vec<Rational>,
    pub(crate) disk: Disk,
    pub(crate) real: bool,
    pub(crate) name: String,
}

struct TowerInner {
    levels: Vec<Arc<Level>>,
    cap: usize,
}

/// An append-only chain of algebraic extensions of Q. Cloning is cheap and
/// extensions share every lower level with their parent.
#[derive(Clone)]
pub struct Tower(Arc<TowerInner>);

impl Tower {
    pub fn rationals() -> Tower {
        Tower::with_cap(DEFAULT_DEGREE_CAP)
    }

    pub fn with_cap(cap: usize) -> Tower {
        Tower(Arc::new(TowerInner { levels: Vec::new(), cap: cap.max(1) }))
    }

    /// The same levels under a different degree cap.
    pub fn recapped(&self, cap: usize) -> Tower {
        Tower(Arc::new(TowerInner { levels: self.0.levels.clone(), cap: cap.max(1) }))
    }

    pub fn cap(&self) -> usize {
        self.0.cap
    }

    pub fn height(&self) -> usize {
        self.0.levels.len()
    }

    pub fn level_degree(&self, k: usize) -> usize {
        self.0.levels[k - 1].minpoly.len() - 1
    }

    /// Degree of the top field over Q.
    pub fn degree(&self) -> usize {
        (1..=self.height()).map(|k| self.level_degree(k)).product()
    }

    pub fn region(&self, k: usize) -> &Region {
        &self.0.levels[k - 1].region
    }

    pub fn level_is_real(&self, k: usize) -> bool {
        self.0.levels[k - 1].real
    }

    pub fn level_name(&self, k: usize) -> &str {
        &self.0.levels[k - 1].name
    }

    /// Minimal polynomial of generator `k` over the field below it, low to high.
    pub fn minpoly(&self, k: usize) -> Vec<TowerElem> {
        self.0.levels[k - 1]
            .minpoly
            .iter()
            .map(|v| TowerElem { tower: self.clone(), val: v.clone() })
            .collect()
    }

    /// Minimal polynomial of generator `k` over Q, low to high.
    pub fn rational_minpoly(&self, k: usize) -> Vec<Rational> {
        self.0.levels[k - 1].qpoly.clone()
    }

    pub fn generator(&self, k: usize) -> TowerElem {
        TowerElem { tower: self.clone(), val: Val::E(k, vec![Val::zero(), Val::one()]) }
    }

    /// True if both towers are literally the same chain of levels.
    pub fn same(&self, other: &Tower) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.height() == other.height() && compatible(self, other, self.height()))
    }

    /// True if `self` is an initial segment of `other`.
    pub fn is_prefix_of(&self, other: &Tower) -> bool {
        self.height() <= other.height() && compatible(self, other, self.height())
    }

    /// The first `k` levels.
    pub fn truncated(&self, k: usize) -> Tower {
        Tower(Arc::new(TowerInner { levels: self.0.levels[..k].to_vec(), cap: self.0.cap }))
    }

    pub(crate) fn levels(&self) -> &[Arc<Level>] {
        &self.0.levels
    }

    pub(crate) fn extended(&self, level: Level) -> Tower {
        let mut levels = self.0.levels.clone();
        levels.push(Arc::new(level));
        Tower(Arc::new(TowerInner { levels, cap: self.0.cap }))
    }

    pub(crate) fn elem(&self, val: Val) -> TowerElem {
        TowerElem { tower: self.clone(), val }
    }
}

impl fmt::Debug for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tower[")?;
        for k in 1..=self.height() {
            if k > 1 {
                write!(f, ", ")?;
            }
            let mp = self.minpoly(k);
            write!(f, "{}:", self.level_name(k))?;
            for (i, c) in mp.iter().enumerate() {
                write!(f, " {}*X^{}", c, i)?;
            }
        }
        write!(f, "]")
    }
}

fn compatible(a: &Tower, b: &Tower, upto: usize) -> bool {
    upto == 0
        || (a.height() >= upto
            && b.height() >= upto
            && Arc::ptr_eq(&a.0.levels[upto - 1], &b.0.levels[upto - 1]))
}

/// An exact element of a tower, kept in canonical normal form.
#[derive(Clone)]
pub struct TowerElem {
    tower: Tower,
    pub(crate) val: Val,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl TowerElem {
    pub fn zero() -> TowerElem {
        TowerElem::rational(Rational::zero())
    }

    pub fn one() -> TowerElem {
        TowerElem::rational(Rational::one())
    }

    pub fn rational(q: Rational) -> TowerElem {
        TowerElem { tower: Tower::rationals(), val: Val::Q(q) }
    }

    pub fn from_int(n: i64) -> TowerElem {
        TowerElem::rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_frac(n: i64, d: i64) -> TowerElem {
        TowerElem::rational(Rational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn tower(&self) -> &Tower {
        &self.tower
    }

    /// Index of the highest generator the element actually involves.
    pub fn level(&self) -> usize {
        self.val.level()
    }

    pub fn is_zero(&self) -> bool {
        self.val.is_zero()
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.val, Val::Q(q) if q.is_one())
    }

    pub fn is_rational(&self) -> Option<Rational> {
        match &self.val {
            Val::Q(q) => Some(q.clone()),
            Val::E(..) => None,
        }
    }

    /// The same value viewed in a (compatible) tower.
    pub fn in_tower(&self, t: &Tower) -> Result<TowerElem, TowerError> {
        if compatible(&self.tower, t, self.level()) {
            Ok(TowerElem { tower: t.clone(), val: self.val.clone() })
        } else {
            Err(TowerError::TowerMismatch)
        }
    }

    /// Coordinates over the field below generator `k` (requires `level() <= k`).
    pub fn coeffs_at_level(&self, k: usize) -> Vec<TowerElem> {
        assert!(self.level() <= k && k <= self.tower.height().max(self.level()));
        if k == 0 {
            return vec![self.clone()];
        }
        self.val.coeffs_at(k).into_iter().map(|v| self.tower.elem(v)).collect()
    }

    /// Inverse of [`coeffs_at_level`](Self::coeffs_at_level).
    pub fn from_level_coeffs(t: &Tower, k: usize, coeffs: &[TowerElem]) -> TowerElem {
        if k == 0 {
            return coeffs.first().cloned().unwrap_or_else(TowerElem::zero).in_tower(t).unwrap();
        }
        let mut acc = TowerElem { tower: t.clone(), val: Val::zero() };
        let g = t.generator(k);
        for c in coeffs.iter().rev() {
            acc = &(&acc * &g) + c;
        }
        acc
    }

    /// Expansion over the power-product basis of the full tower, length
    /// `tower().degree()`.
    pub fn to_rational_vector(&self) -> Vec<Rational> {
        fn dense(t: &Tower, v: &Val, k: usize, out: &mut Vec<Rational>) {
            if k == 0 {
                match v {
                    Val::Q(q) => out.push(q.clone()),
                    Val::E(..) => unreachable!(),
                }
                return;
            }
            let c = v.coeffs_at(k);
            for i in 0..t.level_degree(k) {
                dense(t, c.get(i).unwrap_or(&Val::zero()), k - 1, out);
            }
        }
        let mut out = Vec::with_capacity(self.tower.degree());
        dense(&self.tower, &self.val, self.tower.height(), &mut out);
        out
    }

    pub fn inv(&self) -> Result<TowerElem, TowerError> {
        let v = val::inv(self.tower.levels(), &self.val).ok_or(TowerError::DivisionByZero)?;
        Ok(self.tower.elem(v))
    }

    pub fn pow(&self, n: u32) -> TowerElem {
        let mut acc = TowerElem::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact sign of a real element, by refining enclosures of the generators
    /// until the enclosure of the value leaves zero (zero itself is decided
    /// algebraically up front).
    pub fn sign(&self) -> Result<Sign, TowerError> {
        match &self.val {
            Val::Q(q) => {
                return Ok(if q.is_zero() {
                    Sign::Zero
                } else if q.is_positive() {
                    Sign::Positive
                } else {
                    Sign::Negative
                })
            }
            Val::E(..) => {}
        }
        let k = self.level();
        if (1..=k).any(|i| !self.tower.level_is_real(i)) {
            return Err(TowerError::NotReal);
        }
        let mut prec = 64u32;
        loop {
            let d = self.enclosure(prec);
            if d.c.re.abs() > d.r {
                return Ok(if d.c.re.is_positive() { Sign::Positive } else { Sign::Negative });
            }
            prec *= 2;
            assert!(prec <= 1 << 20, "sign refinement did not terminate");
        }
    }

    pub(crate) fn enclosure(&self, prec: u32) -> Disk {
        let gens = generator_disks(&self.tower, self.level(), prec);
        eval_disk(&self.val, &gens)
    }

    /// Floating-point value, for display only.
    pub fn approx(&self) -> (f64, f64) {
        use num_traits::ToPrimitive;
        let d = self.enclosure(64);
        (d.c.re.to_f64().unwrap_or(f64::NAN), d.c.im.to_f64().unwrap_or(f64::NAN))
    }
}

pub(crate) fn generator_disks(t: &Tower, upto: usize, prec: u32) -> Vec<Disk> {
    t.levels()[..upto]
        .iter()
        .map(|l| crate::isolate::refine_root(&l.qpoly, &l.disk, prec))
        .collect()
}

pub(crate) fn eval_disk(v: &Val, gens: &[Disk]) -> Disk {
    match v {
        Val::Q(q) => Disk::point(CQ::real(q.clone())),
        Val::E(k, c) => {
            let g = &gens[k - 1];
            let mut acc = eval_disk(c.last().unwrap(), gens);
            for ci in c.iter().rev().skip(1) {
                acc = acc.mul(g).add(&eval_disk(ci, gens));
            }
            acc
        }
    }
}

fn join(a: &TowerElem, b: &TowerElem) -> Result<Tower, TowerError> {
    if Arc::ptr_eq(&a.tower.0, &b.tower.0) {
        return Ok(a.tower.clone());
    }
    let ka = (a.level(), a.tower.height());
    let kb = (b.level(), b.tower.height());
    let (hi, lo) = if ka >= kb { (a, b) } else { (b, a) };
    if !compatible(&hi.tower, &lo.tower, lo.level()) {
        return Err(TowerError::TowerMismatch);
    }
    if lo.tower.height() > hi.tower.height() && compatible(&lo.tower, &hi.tower, hi.level()) {
        Ok(lo.tower.clone())
    } else {
        Ok(hi.tower.clone())
    }
}

/// Exact field arithmetic with tower promotion.
pub fn arith(a: &TowerElem, b: &TowerElem, op: ArithOp) -> Result<TowerElem, TowerError> {
    let t = join(a, b)?;
    let v = match op {
        ArithOp::Add => val::add(&a.val, &b.val),
        ArithOp::Sub => val::sub(&a.val, &b.val),
        ArithOp::Mul => val::mul(t.levels(), &a.val, &b.val),
        ArithOp::Div => {
            let inv = val::inv(t.levels(), &b.val).ok_or(TowerError::DivisionByZero)?;
            val::mul(t.levels(), &a.val, &inv)
        }
    };
    Ok(TowerElem { tower: t, val: v })
}

macro_rules! binop {
    ($tr:ident, $m:ident, $op:expr) => {
        impl<'a, 'b> std::ops::$tr<&'b TowerElem> for &'a TowerElem {
            type Output = TowerElem;
            fn $m(self, rhs: &'b TowerElem) -> TowerElem {
                arith(self, rhs, $op).unwrap_or_else(|e| panic!("tower arithmetic: {e}"))
            }
        }
        impl std::ops::$tr<TowerElem> for TowerElem {
            type Output = TowerElem;
            fn $m(self, rhs: TowerElem) -> TowerElem {
                std::ops::$tr::$m(&self, &rhs)
            }
        }
        impl<'a> std::ops::$tr<&'a TowerElem> for TowerElem {
            type Output = TowerElem;
            fn $m(self, rhs: &'a TowerElem) -> TowerElem {
                std::ops::$tr::$m(&self, rhs)
            }
        }
        impl<'a> std::ops::$tr<TowerElem> for &'a TowerElem {
            type Output = TowerElem;
            fn $m(self, rhs: TowerElem) -> TowerElem {
                std::ops::$tr::$m(self, &rhs)
            }
        }
    };
}

binop!(Add, add, ArithOp::Add);
binop!(Sub, sub, ArithOp::Sub);
binop!(Mul, mul, ArithOp::Mul);
binop!(Div, div, ArithOp::Div);

impl std::ops::Neg for &TowerElem {
    type Output = TowerElem;
    fn neg(self) -> TowerElem {
        TowerElem { tower: self.tower.clone(), val: val::neg(&self.val) }
    }
}

impl std::ops::Neg for TowerElem {
    type Output = TowerElem;
    fn neg(self) -> TowerElem {
        -&self
    }
}

impl std::ops::AddAssign<&TowerElem> for TowerElem {
    fn add_assign(&mut self, rhs: &TowerElem) {
        *self = &*self + rhs;
    }
}

impl std::ops::SubAssign<&TowerElem> for TowerElem {
    fn sub_assign(&mut self, rhs: &TowerElem) {
        *self = &*self - rhs;
    }
}

impl From<i64> for TowerElem {
    fn from(n: i64) -> TowerElem {
        TowerElem::from_int(n)
    }
}

impl From<Rational> for TowerElem {
    fn from(q: Rational) -> TowerElem {
        TowerElem::rational(q)
    }
}

impl PartialEq for TowerElem {
    fn eq(&self, other: &Self) -> bool {
        self.val == other.val && compatible(&self.tower, &other.tower, self.level())
    }
}

impl Eq for TowerElem {}

impl Hash for TowerElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.val.hash(state)
    }
}

impl Ord for TowerElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.val.cmp(&other.val)
    }
}

impl PartialOrd for TowerElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn write_val(f: &mut fmt::Formatter<'_>, t: &Tower, v: &Val) -> fmt::Result {
    match v {
        Val::Q(q) => write!(f, "{}", format_short(q)),
        Val::E(k, c) => {
            let name = if *k <= t.height() { t.level_name(*k).to_string() } else { format!("t{k}") };
            write!(f, "(")?;
            let mut first = true;
            for (i, ci) in c.iter().enumerate() {
                if ci.is_zero() {
                    continue;
                }
                let neg = matches!(ci, Val::Q(q) if q.is_negative());
                let shown = if neg { val::neg(ci) } else { ci.clone() };
                if first {
                    if neg {
                        write!(f, "-")?;
                    }
                } else {
                    write!(f, " {} ", if neg { "-" } else { "+" })?;
                }
                first = false;
                let unit = matches!(&shown, Val::Q(q) if q.is_one());
                if i == 0 {
                    write_val(f, t, &shown)?;
                    continue;
                }
                if !unit {
                    write_val(f, t, &shown)?;
                    write!(f, "*")?;
                }
                write!(f, "{name}")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
            write!(f, ")")
        }
    }
}

impl fmt::Display for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_val(f, &self.tower, &self.val)
    }
}

impl fmt::Debug for TowerElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
