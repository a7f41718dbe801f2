//! Non-negative resonances: exact decision by linear programming and the
//! constructive descent to a dicritical blow-up.

use crate::error::DivisorError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use numtower::{Rational, Tower, TowerElem};

/// Coefficients of every `lambda_i` over the power basis of one common tower.
fn rational_rows(lambdas: &[TowerElem]) -> Result<Vec<Vec<Rational>>, DivisorError> {
    let mut t = Tower::rationals();
    for l in lambdas {
        if l.tower().height() > t.height() {
            t = l.tower().clone();
        }
    }
    let cols: Vec<Vec<Rational>> =
        lambdas.iter().map(|l| l.in_tower(&t).map(|e| e.to_rational_vector())).collect::<Result<_, _>>()?;
    let n = t.degree();
    Ok((0..n).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect())
}

/// Phase-one simplex with Bland's rule on `A m = 0, sum m = 1, m >= 0`.
/// Returns a feasible `m` if one exists.
fn feasible_point(a: &[Vec<Rational>], s: usize) -> Option<Vec<Rational>> {
    let mut rows: Vec<Vec<Rational>> = a.to_vec();
    rows.push(vec![Rational::one(); s]);
    let r = rows.len();
    let width = s + r + 1;
    let mut tab: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v = row.clone();
            v.extend((0..r).map(|k| if k == i { Rational::one() } else { Rational::zero() }));
            v.push(if i == r - 1 { Rational::one() } else { Rational::zero() });
            v
        })
        .collect();
    // Objective row: reduced costs of the sum of artificials; last entry is -w.
    let mut z: Vec<Rational> = vec![Rational::zero(); width];
    for row in &tab {
        for j in 0..s {
            z[j] -= &row[j];
        }
        z[width - 1] -= &row[width - 1];
    }
    let mut basis: Vec<usize> = (s..s + r).collect();
    loop {
        let Some(enter) = (0..s + r).find(|&j| z[j].is_negative()) else { break };
        let mut best: Option<(Rational, usize, usize)> = None;
        for (i, row) in tab.iter().enumerate() {
            if row[enter].is_positive() {
                let ratio = &row[width - 1] / &row[enter];
                let better = match &best {
                    None => true,
                    Some((b, _, bv)) => ratio < *b || (ratio == *b && basis[i] < *bv),
                };
                if better {
                    best = Some((ratio, i, basis[i]));
                }
            }
        }
        let (_, p, _) = best.expect("phase one is bounded below");
        let piv = tab[p][enter].clone();
        for v in tab[p].iter_mut() {
            *v /= &piv;
        }
        let prow = tab[p].clone();
        for (i, row) in tab.iter_mut().enumerate() {
            if i != p && !row[enter].is_zero() {
                let f = row[enter].clone();
                for (v, pv) in row.iter_mut().zip(&prow) {
                    *v -= &f * pv;
                }
            }
        }
        let f = z[enter].clone();
        for (v, pv) in z.iter_mut().zip(&prow) {
            *v -= &f * pv;
        }
        basis[p] = enter;
    }
    if !z[width - 1].is_zero() {
        return None;
    }
    let mut m = vec![Rational::zero(); s];
    for (i, &b) in basis.iter().enumerate() {
        if b < s {
            m[b] = tab[i][width - 1].clone();
        }
    }
    Some(m)
}

fn to_integer_vector(m: &[Rational]) -> Vec<u64> {
    let l = m.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = m.iter().map(|q| (q * Rational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    ints.iter()
        .map(|v| u64::try_from(v / &g).expect("witness entry fits in u64"))
        .collect()
}

/// A nonzero `m` in `Z_{>=0}^s` with `sum m_i lambda_i = 0`, or `None` when
/// no non-negative resonance exists. Expanding each `lambda_i` over a
/// Q-basis of the tower turns the question into a rational homogeneous
/// system; rational feasibility and integer feasibility coincide by scaling.
pub fn dicritical_decide(lambdas: &[TowerElem]) -> Result<Option<Vec<u64>>, DivisorError> {
    if let Some(i) = lambdas.iter().position(TowerElem::is_zero) {
        return Err(DivisorError::ZeroCoefficient(i));
    }
    if lambdas.is_empty() {
        return Ok(None);
    }
    let a = rational_rows(lambdas)?;
    Ok(feasible_point(&a, lambdas.len()).map(|m| to_integer_vector(&m)))
}

/// Checks `m != 0` and `sum m_i lambda_i = 0` exactly.
pub fn is_witness(lambdas: &[TowerElem], m: &[u64]) -> bool {
    if m.len() != lambdas.len() || m.iter().all(|&v| v == 0) {
        return false;
    }
    let s = lambdas
        .iter()
        .zip(m)
        .fold(TowerElem::zero(), |acc, (l, &k)| &acc + &(l * &TowerElem::from_int(k as i64)));
    s.is_zero()
}

/// One blow-up of the descent: the component in slot `i` (the one with the
/// smaller `m`) is replaced by the exceptional component of the blow-up of
/// `H_i ∩ H_j`, whose coefficient is `combined = lambda_i + lambda_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct DescentStep {
    pub i: usize,
    pub j: usize,
    pub lambdas: Vec<TowerElem>,
    pub m: Vec<u64>,
    /// `(t, delta)` before the step; `delta = 0` when `t < 2`.
    pub invariant: (usize, u64),
    pub combined: TowerElem,
}

fn invariant(m: &[u64]) -> (usize, u64, Option<(usize, usize)>) {
    let support: Vec<usize> = (0..m.len()).filter(|&k| m[k] > 0).collect();
    let mut best: Option<(u64, usize, usize)> = None;
    for (a, &p) in support.iter().enumerate() {
        for &q in &support[a + 1..] {
            let d = m[p] + m[q];
            if best.is_none_or(|b| d < b.0) {
                best = Some((d, p, q));
            }
        }
    }
    match best {
        Some((d, p, q)) => (support.len(), d, Some((p, q))),
        None => (support.len(), 0, None),
    }
}

/// Replays the descent on `(lambda, m)` until some exceptional coefficient
/// is exactly zero. Each step records the state before it; the last step's
/// `combined` is zero.
pub fn resonance_descent(lambdas: &[TowerElem], m: &[u64]) -> Result<Vec<DescentStep>, DivisorError> {
    if let Some(i) = lambdas.iter().position(TowerElem::is_zero) {
        return Err(DivisorError::ZeroCoefficient(i));
    }
    if !is_witness(lambdas, m) {
        return Err(DivisorError::InvalidWitness("need m != 0 with sum m_i lambda_i = 0".into()));
    }
    let mut lam = lambdas.to_vec();
    let mut m = m.to_vec();
    let mut steps = Vec::new();
    loop {
        let (t, delta, pair) = invariant(&m);
        // t >= 2 holds throughout: a single m_k > 0 would force lambda_k = 0.
        let (p, q) = pair.expect("a witness with nonzero coefficients has two active slots");
        let (i, j) = if m[p] <= m[q] { (p, q) } else { (q, p) };
        let combined = &lam[i] + &lam[j];
        steps.push(DescentStep {
            i,
            j,
            lambdas: lam.clone(),
            m: m.clone(),
            invariant: (t, delta),
            combined: combined.clone(),
        });
        if combined.is_zero() {
            return Ok(steps);
        }
        lam[i] = combined;
        m[j] -= m[i];
    }
}
