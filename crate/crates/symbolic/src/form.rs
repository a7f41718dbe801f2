//! Polynomial 1-forms `a dx + b dy` and logarithmic presentations.

use crate::bipoly::BiPoly;
use crate::gcd::{exact_div, gcd, squarefree_part};
use numtower::TowerElem;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct OneForm {
    pub a: BiPoly,
    pub b: BiPoly,
}

impl OneForm {
    pub fn new(a: BiPoly, b: BiPoly) -> OneForm {
        OneForm { a, b }
    }

    pub fn zero() -> OneForm {
        OneForm::new(BiPoly::zero(), BiPoly::zero())
    }

    /// The exterior derivative `df`.
    pub fn exact(f: &BiPoly) -> OneForm {
        OneForm::new(f.dx(), f.dy())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Minimum of the orders of the coefficients (`None` for the zero form).
    pub fn order(&self) -> Option<u32> {
        match (self.a.order(), self.b.order()) {
            (Some(p), Some(q)) => Some(p.min(q)),
            (p, q) => p.or(q),
        }
    }

    pub fn is_singular_at_origin(&self) -> bool {
        self.a.vanishes_at_origin() && self.b.vanishes_at_origin()
    }

    /// True when the coefficients have no common nonconstant factor.
    pub fn is_reduced(&self) -> bool {
        gcd(&self.a, &self.b).is_constant()
    }

    pub fn add(&self, o: &OneForm) -> OneForm {
        OneForm::new(self.a.add(&o.a), self.b.add(&o.b))
    }

    pub fn sub(&self, o: &OneForm) -> OneForm {
        OneForm::new(self.a.sub(&o.a), self.b.sub(&o.b))
    }

    pub fn neg(&self) -> OneForm {
        OneForm::new(self.a.neg(), self.b.neg())
    }

    pub fn mul_poly(&self, p: &BiPoly) -> OneForm {
        OneForm::new(self.a.mul(p), self.b.mul(p))
    }

    pub fn scale(&self, s: &TowerElem) -> OneForm {
        OneForm::new(self.a.scale(s), self.b.scale(s))
    }

    /// Exact division of both coefficients.
    pub fn div_poly(&self, p: &BiPoly) -> Option<OneForm> {
        Some(OneForm::new(exact_div(&self.a, p)?, exact_div(&self.b, p)?))
    }

    /// Splits off `gcd(a, b)`: returns the reduced form and the gcd, whose
    /// product is the input.
    pub fn strip_common_factor(&self) -> (OneForm, BiPoly) {
        if self.is_zero() {
            return (self.clone(), BiPoly::one());
        }
        let g = gcd(&self.a, &self.b);
        if g.is_constant() {
            return (self.clone(), BiPoly::one());
        }
        (self.div_poly(&g).expect("gcd divides"), g)
    }

    pub fn eval_shift(&self, cx: &TowerElem, cy: &TowerElem) -> OneForm {
        OneForm::new(self.a.eval_shift(cx, cy), self.b.eval_shift(cx, cy))
    }

    /// Pull-back under the polynomial map `(x, y) -> (sx, sy)`.
    pub fn pullback(&self, sx: &BiPoly, sy: &BiPoly) -> OneForm {
        let a = self.a.compose(sx, sy);
        let b = self.b.compose(sx, sy);
        OneForm::new(a.mul(&sx.dx()).add(&b.mul(&sy.dx())), a.mul(&sx.dy()).add(&b.mul(&sy.dy())))
    }

    /// `p dx + q dy` is proportional to `self` (their wedge vanishes).
    pub fn parallel(&self, o: &OneForm) -> bool {
        self.a.mul(&o.b) == self.b.mul(&o.a)
    }

    /// The polynomial `c` with `self = c * o`, if one exists.
    pub fn quotient(&self, o: &OneForm) -> Option<BiPoly> {
        if !self.parallel(o) || o.is_zero() {
            return None;
        }
        let c = if o.a.is_zero() { exact_div(&self.b, &o.b)? } else { exact_div(&self.a, &o.a)? };
        (o.mul_poly(&c) == *self).then_some(c)
    }

    /// The dual vector field `b d/dx - a d/dy` (as its component pair).
    pub fn dual_field(&self) -> (BiPoly, BiPoly) {
        (self.b.clone(), self.a.neg())
    }

    pub fn tower(&self) -> numtower::Tower {
        let (ta, tb) = (self.a.tower(), self.b.tower());
        if ta.height() >= tb.height() {
            ta
        } else {
            tb
        }
    }
}

fn wrap(p: &BiPoly) -> String {
    if p.num_terms() <= 1 && p.as_constant().is_none_or(|c| c.is_rational().is_some()) {
        format!("{p}")
    } else {
        format!("({p})")
    }
}

impl fmt::Display for OneForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (true, true) => write!(f, "0*dx"),
            (false, true) => write!(f, "{}*dx", wrap(&self.a)),
            (true, false) => write!(f, "{}*dy", wrap(&self.b)),
            (false, false) => write!(f, "{}*dx + {}*dy", wrap(&self.a), wrap(&self.b)),
        }
    }
}

/// `sum lambda_i df_i / f_i`, optionally plus a holomorphic remainder form.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LogPresentation {
    pub pairs: Vec<(TowerElem, BiPoly)>,
    pub remainder: Option<OneForm>,
}

impl LogPresentation {
    pub fn new(pairs: Vec<(TowerElem, BiPoly)>, remainder: Option<OneForm>) -> LogPresentation {
        LogPresentation { pairs, remainder }
    }

    /// Checks that every `f_i` is squarefree, nonconstant and passes through
    /// the origin.
    pub fn is_well_formed(&self) -> bool {
        self.pairs.iter().all(|(_, f)| {
            !f.is_constant() && f.vanishes_at_origin() && squarefree_part(f) == f.monic()
        })
    }

    /// `(prod f_i) * eta`, a polynomial form.
    pub fn cleared(&self) -> OneForm {
        let prod = self.pairs.iter().fold(BiPoly::one(), |acc, (_, f)| acc.mul(f));
        let mut w = OneForm::zero();
        for (k, (lam, f)) in self.pairs.iter().enumerate() {
            let others = self
                .pairs
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .fold(BiPoly::one(), |acc, (_, (_, g))| acc.mul(g));
            w = w.add(&OneForm::exact(f).mul_poly(&others).scale(lam));
        }
        if let Some(r) = &self.remainder {
            w = w.add(&r.mul_poly(&prod));
        }
        w
    }

    /// The reduced generator of the foliation defined by `eta`.
    pub fn to_reduced_form(&self) -> OneForm {
        self.cleared().strip_common_factor().0
    }
}

impl fmt::Display for LogPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (lam, p) in &self.pairs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*d({p})/({p})", wrap(&BiPoly::constant(lam.clone())))?;
        }
        if let Some(r) = &self.remainder {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{r}")?;
        }
        if first {
            write!(f, "0*dx")?;
        }
        Ok(())
    }
}
