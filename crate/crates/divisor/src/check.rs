//! Index bookkeeping across one point blow-up.

use numtower::TowerElem;

/// Indices on both sides of a blow-up of `p` for one component `T`.
#[derive(Clone, Debug)]
pub struct BlowupIndexData {
    /// `I_p(D, T)`.
    pub before: TowerElem,
    /// `nu_p(T)`.
    pub nu: u32,
    /// `I_{p'}(D', T')` for every `p'` in `T' ∩ E`.
    pub strict: Vec<TowerElem>,
    /// `I_{p'}(D', E)` for every `p'` in `E` meeting the support, when the
    /// blow-up is non-dicritical.
    pub exceptional: Option<Vec<TowerElem>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndexCheckReport {
    pub ok: bool,
    pub strict_sum: TowerElem,
    pub expected_strict_sum: TowerElem,
    pub exceptional_sum: Option<TowerElem>,
}

/// Checks `sum I_{p'}(D', T') = I_p(D, T) - nu_p(T)^2` and, for
/// non-dicritical blow-ups, `sum I_{p'}(D', E) = -1`.
pub fn index_blowup_check(data: &BlowupIndexData) -> IndexCheckReport {
    let sum = |v: &[TowerElem]| v.iter().fold(TowerElem::zero(), |a, b| &a + b);
    let strict_sum = sum(&data.strict);
    let nu2 = TowerElem::from_int((data.nu * data.nu) as i64);
    let expected = &data.before - &nu2;
    let exceptional_sum = data.exceptional.as_deref().map(sum);
    let ok = strict_sum == expected && exceptional_sum.as_ref().is_none_or(|s| *s == TowerElem::from_int(-1));
    IndexCheckReport { ok, strict_sum, expected_strict_sum: expected, exceptional_sum }
}
