use crate::tower::TowerElem;
use crate::Rational;
use num_traits::{Signed, Zero};

/// Class of the eigenvalue ratio `r = l1/l2` of a 2x2 linear part, decided
/// from its trace and determinant alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EigenRatio {
    PosRational(Rational),
    NonPosRational(Rational),
    Irrational,
    OneZero,
    BothZero,
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let (n, d) = (q.numer().sqrt(), q.denom().sqrt());
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// With `T = l1 + l2` and `D = l1 l2`, the ratio satisfies
/// `D (1 + r)^2 - T^2 r = 0`, i.e. `r + 1/r = T^2/D - 2`. A rational `r`
/// forces `c = T^2/D` rational with `c (c - 4)` a rational square, and both
/// roots `r`, `1/r` share the sign of `c - 2`. The root with `|r| >= 1` is
/// reported.
pub fn eigen_ratio_class(trace: &TowerElem, det: &TowerElem) -> EigenRatio {
    if det.is_zero() {
        return if trace.is_zero() { EigenRatio::BothZero } else { EigenRatio::OneZero };
    }
    let c = match (&(trace * trace) / det).is_rational() {
        Some(c) => c,
        None => return EigenRatio::Irrational,
    };
    let four = Rational::from_integer(4.into());
    let two = Rational::from_integer(2.into());
    let s = match rational_sqrt(&(&c * (&c - &four))) {
        Some(s) => s,
        None => return EigenRatio::Irrational,
    };
    let m = &c - &two;
    let r = if m.is_negative() { (&m - &s) / &two } else { (&m + &s) / &two };
    if r.is_positive() {
        EigenRatio::PosRational(r)
    } else {
        debug_assert!(!r.is_zero());
        EigenRatio::NonPosRational(r)
    }
}
