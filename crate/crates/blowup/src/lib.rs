//! The blow-up of the origin of the plane in its two affine charts.
//!
//! First chart: `(x, y) = (x', x' y')`, exceptional line `x' = 0`.
//! Second chart: `(x, y) = (x' y', y')`, exceptional line `y' = 0`. The
//! charts glue by `y' -> 1/y'` off the axes; the second chart is used only
//! for the point at infinity of the first.

use divisor::CDivisor;
use numtower::TowerElem;
use symbolic::{BiPoly, OneForm};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chart {
    First,
    Second,
}

impl Chart {
    /// Images of `x` and `y` under the chart map.
    pub fn substitution(self) -> (BiPoly, BiPoly) {
        let xy = BiPoly::x().mul(&BiPoly::y());
        match self {
            Chart::First => (BiPoly::x(), xy),
            Chart::Second => (xy, BiPoly::y()),
        }
    }

    /// The coordinate vanishing on the exceptional line.
    pub fn exceptional_equation(self) -> BiPoly {
        match self {
            Chart::First => BiPoly::x(),
            Chart::Second => BiPoly::y(),
        }
    }

    /// Exact power of the exceptional coordinate dividing `p` (`None` for zero).
    fn adic_order(self, p: &BiPoly) -> Option<u32> {
        match self {
            Chart::First => p.x_adic_order(),
            Chart::Second => p.y_adic_order(),
        }
    }

    fn divide(self, p: &BiPoly, k: u32) -> BiPoly {
        match self {
            Chart::First => p.div_monomial(k, 0),
            Chart::Second => p.div_monomial(0, k),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Chart::First => "1",
            Chart::Second => "2",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TransformResult<T> {
    pub strict: T,
    pub exceptional_order: u32,
    pub dicritical: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlowupError {
    #[error("zero input")]
    ZeroInput,
    #[error("strict transform keeps a non-exceptional common factor {0}")]
    Inconsistent(String),
}

/// Total transform divided by the exceptional coordinate to the power
/// `nu_0(p)`.
pub fn transform_poly(p: &BiPoly, chart: Chart) -> Result<TransformResult<BiPoly>, BlowupError> {
    let nu = p.order().ok_or(BlowupError::ZeroInput)?;
    let (sx, sy) = chart.substitution();
    let strict = chart.divide(&p.compose(&sx, &sy), nu);
    Ok(TransformResult { strict, exceptional_order: nu, dicritical: false })
}

/// Pull-back of a reduced form, divided by the largest power `k` of the
/// exceptional coordinate; dicritical iff `k >= nu_0(w) + 1`.
pub fn transform_form(w: &OneForm, chart: Chart) -> Result<TransformResult<OneForm>, BlowupError> {
    let nu = w.order().ok_or(BlowupError::ZeroInput)?;
    let (sx, sy) = chart.substitution();
    let pb = w.pullback(&sx, &sy);
    let k = match (chart.adic_order(&pb.a), chart.adic_order(&pb.b)) {
        (Some(p), Some(q)) => p.min(q),
        (p, q) => p.or(q).ok_or(BlowupError::ZeroInput)?,
    };
    let divided = OneForm::new(chart.divide(&pb.a, k), chart.divide(&pb.b, k));
    let (strict, g) = divided.strip_common_factor();
    if !g.is_constant() {
        return Err(BlowupError::Inconsistent(g.to_string()));
    }
    Ok(TransformResult { strict, exceptional_order: k, dicritical: k > nu })
}

/// Result of pulling a divisor back under the blow-up of a point.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisorPullback {
    pub divisor: CDivisor,
    /// `mu = sum nu_p(H) lambda_H`.
    pub mu: TowerElem,
    /// The blow-up is D-dicritical: admissible with `mu = 0`.
    pub dicritical: bool,
    /// The center lies in the support.
    pub admissible: bool,
}

/// Keeps every strict component with its coefficient and adds the
/// exceptional component `exceptional` with coefficient `mu`, omitted when
/// `mu = 0`. `nus` gives `nu_p(H)` by label (missing labels count as zero).
pub fn pullback_divisor(d: &CDivisor, nus: &[(&str, u32)], exceptional: &str) -> DivisorPullback {
    let mut mu = TowerElem::zero();
    let mut admissible = false;
    for c in d.components() {
        let n = nus.iter().find(|(l, _)| *l == c.label).map_or(0, |p| p.1);
        if n > 0 {
            admissible = true;
        }
        mu = &mu + &(&c.coeff * &TowerElem::from_int(n as i64));
    }
    let mut out = d.clone();
    out.add(exceptional, mu.clone());
    DivisorPullback { divisor: out, dicritical: admissible && mu.is_zero(), mu, admissible }
}
