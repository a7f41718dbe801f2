//! Finite formal sums of components with tower coefficients.

use crate::error::DivisorError;
use numtower::TowerElem;
use symbolic::BiPoly;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
pub struct Component {
    pub label: String,
    pub coeff: TowerElem,
    /// Local equation, when the component is a plane curve germ.
    pub equation: Option<BiPoly>,
}

/// `sum lambda_H H`, kept in insertion order with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CDivisor {
    comps: Vec<Component>,
}

impl CDivisor {
    pub fn new() -> CDivisor {
        CDivisor::default()
    }

    /// Builds from `(label, coefficient)` pairs.
    pub fn from_pairs<S: Into<String>>(pairs: impl IntoIterator<Item = (S, TowerElem)>) -> CDivisor {
        let mut d = CDivisor::new();
        for (l, c) in pairs {
            d.add(&l.into(), c);
        }
        d
    }

    /// Adds `c` to the coefficient of `label`; a component whose coefficient
    /// becomes zero leaves the support.
    pub fn add(&mut self, label: &str, c: TowerElem) {
        match self.comps.iter().position(|k| k.label == label) {
            Some(i) => {
                let v = &self.comps[i].coeff + &c;
                if v.is_zero() {
                    self.comps.remove(i);
                } else {
                    self.comps[i].coeff = v;
                }
            }
            None if !c.is_zero() => self.comps.push(Component { label: label.to_string(), coeff: c, equation: None }),
            None => {}
        }
    }

    pub fn set_equation(&mut self, label: &str, eq: BiPoly) -> Result<(), DivisorError> {
        let c = self
            .comps
            .iter_mut()
            .find(|k| k.label == label)
            .ok_or_else(|| DivisorError::ComponentNotInSupport(label.to_string()))?;
        c.equation = Some(eq);
        Ok(())
    }

    pub fn components(&self) -> &[Component] {
        &self.comps
    }

    pub fn support(&self) -> Vec<&str> {
        self.comps.iter().map(|c| c.label.as_str()).collect()
    }

    pub fn coeff(&self, label: &str) -> Option<&TowerElem> {
        self.comps.iter().find(|c| c.label == label).map(|c| &c.coeff)
    }

    pub fn coefficients(&self) -> Vec<TowerElem> {
        self.comps.iter().map(|c| c.coeff.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn scale(&self, s: &TowerElem) -> CDivisor {
        if s.is_zero() {
            return CDivisor::new();
        }
        CDivisor {
            comps: self
                .comps
                .iter()
                .map(|c| Component { label: c.label.clone(), coeff: &c.coeff * s, equation: c.equation.clone() })
                .collect(),
        }
    }

    /// The same divisor with the first coefficient scaled to one.
    pub fn normalized(&self) -> CDivisor {
        match self.comps.first() {
            Some(c) => self.scale(&c.coeff.inv().expect("nonzero coefficient")),
            None => self.clone(),
        }
    }
}

impl fmt::Display for CDivisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.comps.iter().map(|c| format!("{}*{}", c.coeff, c.label)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Index `I_p(D, T) = -(sum_{H != T} lambda_H (T, H)_p) / lambda_T`.
/// `pairings` gives `(T, H)_p` by label; missing labels count as zero.
pub fn index(d: &CDivisor, t: &str, pairings: &[(&str, u32)]) -> Result<TowerElem, DivisorError> {
    let mu = d.coeff(t).ok_or_else(|| DivisorError::ComponentNotInSupport(t.to_string()))?;
    let mut s = TowerElem::zero();
    for c in d.components() {
        if c.label == t {
            continue;
        }
        let n = pairings.iter().find(|(l, _)| *l == c.label).map_or(0, |p| p.1);
        s = &s + &(&c.coeff * &TowerElem::from_int(n as i64));
    }
    Ok(-&(&s / mu))
}

/// True iff both divisors have the same support and proportional
/// coefficients (one global scalar).
pub fn projective_equiv(d1: &CDivisor, d2: &CDivisor) -> bool {
    projective_equiv_partitioned(d1, d2, &[d1.support().iter().map(|s| s.to_string()).collect()])
}

/// Projective equivalence with one scalar per block of `partition`
/// (connected components of the support); labels outside every block are
/// compared with the first block's scalar.
pub fn projective_equiv_partitioned(d1: &CDivisor, d2: &CDivisor, partition: &[Vec<String>]) -> bool {
    let mut s1: Vec<&str> = d1.support();
    let mut s2: Vec<&str> = d2.support();
    s1.sort_unstable();
    s2.sort_unstable();
    if s1 != s2 {
        return false;
    }
    let mut scalars: Vec<Option<TowerElem>> = vec![None; partition.len().max(1)];
    for c in d1.components() {
        let b = partition.iter().position(|blk| blk.iter().any(|l| *l == c.label)).unwrap_or(0);
        let r = &d2.coeff(&c.label).unwrap().clone() / &c.coeff;
        match &scalars[b] {
            Some(s) if *s != r => return false,
            Some(_) => {}
            None => scalars[b] = Some(r),
        }
    }
    true
}
