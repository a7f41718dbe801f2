//! Divisorial models: kernel and propagation methods, verification of
//! given divisors, logarithmic presentations and blow-up stability.

use crate::cs::{cs_index_simple, cs_sums};
use crate::matrix::{build_index_matrix, IndexMatrix};
use crate::ModelError;
use blowup::{pullback_divisor, transform_form, Chart};
use divisor::{dicritical_decide, projective_equiv, CDivisor};
use numtower::{all_roots, TowerElem};
use resolution::{resolve_with, ComponentId, ResolutionTree, ResolveOptions, Step};
use std::collections::BTreeMap;
use symbolic::{BiPoly, LogPresentation};

/// `sum lambda_B B` over the branches, normalized so that `lambda_B1 = 1`,
/// with the coefficients of the exceptional components of its pull-back.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisorialModel {
    pub lambdas: Vec<TowerElem>,
    /// `mu_E` for every non-preexisting exceptional component, in creation
    /// order.
    pub mu: Vec<TowerElem>,
}

impl DivisorialModel {
    pub fn from_lambdas(tree: &ResolutionTree, lambdas: Vec<TowerElem>) -> DivisorialModel {
        let mu = exceptional_coefficients(tree, &lambdas);
        DivisorialModel { lambdas, mu }
    }

    /// The divisor on the branches, labelled `B1, B2, ...`.
    pub fn divisor(&self) -> CDivisor {
        CDivisor::from_pairs(self.lambdas.iter().enumerate().map(|(i, l)| (format!("B{}", i + 1), l.clone())))
    }

    pub fn coefficient(&self, tree: &ResolutionTree, c: ComponentId) -> TowerElem {
        match c {
            ComponentId::Branch(i) => self.lambdas[i].clone(),
            ComponentId::Exceptional(e) => self.mu[e - tree.preexisting].clone(),
        }
    }
}

/// `mu_{E_p} = sum_B lambda_B nu_p(B) + sum_{E_j through p} mu_{E_j}`.
pub fn exceptional_coefficients(tree: &ResolutionTree, lambdas: &[TowerElem]) -> Vec<TowerElem> {
    let mut mu: Vec<TowerElem> = Vec::new();
    for e in tree.preexisting..tree.exceptional.len() {
        let p = tree.exceptional[e].created_at;
        let mut m = TowerElem::zero();
        for (b, l) in tree.branches.iter().zip(lambdas) {
            m = &m + &(l * &TowerElem::from_int(b.nu_at(p) as i64));
        }
        for (j, _) in &tree.nodes[p].exceptional {
            if *j >= tree.preexisting {
                m = &m + &mu[*j - tree.preexisting];
            }
        }
        mu.push(m);
    }
    mu
}

fn normalize(v: &[TowerElem]) -> Result<Vec<TowerElem>, ModelError> {
    let first = v.first().filter(|x| !x.is_zero()).ok_or_else(|| ModelError::ZeroCoefficient("B1".into()))?;
    let inv = first.inv().unwrap();
    Ok(v.iter().map(|x| x * &inv).collect())
}

fn check_nonzero(tree: &ResolutionTree, m: &DivisorialModel) -> Result<(), ModelError> {
    for c in tree.all_components() {
        if m.coefficient(tree, c).is_zero() {
            return Err(ModelError::ZeroCoefficient(c.to_string()));
        }
    }
    Ok(())
}

/// The model as the kernel of the index matrix, which must have rank
/// `s - 1` with `B0` invertible.
pub fn divisorial_model_kernel(tree: &ResolutionTree, a: &IndexMatrix) -> Result<DivisorialModel, ModelError> {
    let s = a.size();
    if s == 0 {
        return Err(ModelError::Rank { expected: 0, got: 0 });
    }
    let r = a.rank();
    if r != s - 1 {
        return Err(ModelError::Rank { expected: s - 1, got: r });
    }
    if a.det_b0().is_zero() {
        return Err(ModelError::SingularMinor);
    }
    let k = a.kernel();
    let m = DivisorialModel::from_lambdas(tree, normalize(&k[0])?);
    check_nonzero(tree, &m)?;
    Ok(m)
}

/// The model by propagating `coef(C) = -CS_p(F, C') coef(C')` over the
/// dual graph from `lambda_B1 = 1`, then checked against the blow-up law.
pub fn divisorial_model_propagation(tree: &ResolutionTree) -> Result<DivisorialModel, ModelError> {
    if tree.branches.is_empty() {
        return Err(ModelError::Unreached("B1".into()));
    }
    let edges = tree.dual_graph();
    let mut coef: BTreeMap<ComponentId, TowerElem> = BTreeMap::new();
    coef.insert(ComponentId::Branch(0), TowerElem::one());
    loop {
        let mut changed = false;
        for &(c, d, n) in &edges {
            match (coef.get(&c).cloned(), coef.get(&d).cloned()) {
                (Some(x), None) => {
                    coef.insert(d, -&(&cs_index_simple(tree, n, c)? * &x));
                    changed = true;
                }
                (None, Some(y)) => {
                    coef.insert(c, -&(&cs_index_simple(tree, n, d)? * &y));
                    changed = true;
                }
                (Some(x), Some(y)) => {
                    if x != -&(&cs_index_simple(tree, n, d)? * &y) {
                        return Err(ModelError::Inconsistent(tree.nodes[n].address.to_string()));
                    }
                }
                (None, None) => {}
            }
        }
        if !changed {
            break;
        }
    }
    let get = |c: ComponentId| coef.get(&c).cloned().ok_or_else(|| ModelError::Unreached(c.to_string()));
    let lambdas = (0..tree.branches.len()).map(|i| get(ComponentId::Branch(i))).collect::<Result<Vec<_>, _>>()?;
    let m = DivisorialModel::from_lambdas(tree, lambdas);
    for e in tree.preexisting..tree.exceptional.len() {
        let c = ComponentId::Exceptional(e);
        if get(c)? != m.coefficient(tree, c) {
            return Err(ModelError::BlowupLaw(c.to_string()));
        }
    }
    check_nonzero(tree, &m)?;
    Ok(m)
}

/// Everything computed for a resolved germ.
#[derive(Clone, Debug)]
pub struct ModelResult {
    pub matrix: IndexMatrix,
    pub model: DivisorialModel,
    /// Sum of indices along each new exceptional component.
    pub cs_sums: Vec<(usize, TowerElem)>,
}

/// Runs both methods; disagreement is an error.
pub fn compute_model(tree: &ResolutionTree) -> Result<ModelResult, ModelError> {
    let matrix = build_index_matrix(tree)?;
    let k = divisorial_model_kernel(tree, &matrix)?;
    let p = divisorial_model_propagation(tree)?;
    if k != p {
        return Err(ModelError::Disagreement);
    }
    Ok(ModelResult { matrix, model: k, cs_sums: cs_sums(tree)? })
}

/// Where a divisor becomes dicritical, with the resonance witness.
pub fn divisor_dicriticality(
    tree: &ResolutionTree,
    lambdas: &[TowerElem],
) -> Result<Option<(String, Vec<u64>)>, ModelError> {
    let m = DivisorialModel::from_lambdas(tree, lambdas.to_vec());
    for (k, mu) in m.mu.iter().enumerate() {
        if mu.is_zero() {
            let p = tree.exceptional[tree.preexisting + k].created_at;
            let nus = tree.branches.iter().map(|b| b.nu_at(p) as u64).collect();
            return Ok(Some((format!("E{}", tree.preexisting + k + 1), nus)));
        }
    }
    for (c, d, n) in tree.dual_graph() {
        let pair = [m.coefficient(tree, c), m.coefficient(tree, d)];
        if let Some(w) = dicritical_decide(&pair)? {
            return Ok(Some((tree.nodes[n].address.to_string(), w)));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    /// The support is exactly the set of branches.
    pub support_ok: bool,
    /// Branches where the index differs from the Camacho-Sad index.
    pub index_violations: Vec<String>,
    /// Location and witness when the divisor is dicritical.
    pub dicritical: Option<(String, Vec<u64>)>,
}

impl VerifyReport {
    pub fn is_model(&self) -> bool {
        self.support_ok && self.index_violations.is_empty() && self.dicritical.is_none()
    }
}

/// Checks that `d`, over labels `B1..Bs`, is a divisorial model.
pub fn verify_model(tree: &ResolutionTree, d: &CDivisor) -> Result<VerifyReport, ModelError> {
    let s = tree.branches.len();
    let labels: Vec<String> = (1..=s).map(|i| format!("B{i}")).collect();
    let mut support: Vec<&str> = d.support();
    support.sort();
    let mut expect: Vec<&str> = labels.iter().map(String::as_str).collect();
    expect.sort();
    let support_ok = support == expect;
    let lambdas: Vec<TowerElem> = labels.iter().map(|l| d.coeff(l).cloned().unwrap_or_else(TowerElem::zero)).collect();
    let a = build_index_matrix(tree)?;
    let mut index_violations = Vec::new();
    for (i, r) in a.apply(&lambdas).iter().enumerate() {
        if !r.is_zero() {
            index_violations.push(labels[i].clone());
        }
    }
    let dicritical = if support_ok { divisor_dicriticality(tree, &lambdas)? } else { None };
    Ok(VerifyReport { support_ok, index_violations, dicritical })
}

/// `sum lambda_i df_i / f_i` over the tracked equations; each equation must
/// land on branches sharing one coefficient.
pub fn logarithmic_model_form(tree: &ResolutionTree, m: &DivisorialModel) -> Result<LogPresentation, ModelError> {
    if let Some((i, why)) = tree.unmatched_equations.first() {
        return Err(ModelError::EquationMismatch(format!("equation {} {why}", i + 1)));
    }
    let mut pairs = Vec::new();
    for (i, f) in tree.equations.iter().enumerate() {
        let mut coef: Option<&TowerElem> = None;
        for (b, l) in tree.branches.iter().zip(&m.lambdas) {
            if b.equation == Some(i) {
                match coef {
                    Some(c) if c != l => {
                        return Err(ModelError::EquationMismatch(format!("equation {} has unequal coefficients", i + 1)))
                    }
                    _ => coef = Some(l),
                }
            }
        }
        let c = coef.ok_or_else(|| ModelError::EquationMismatch(format!("equation {} has no branch", i + 1)))?;
        pairs.push((c.clone(), f.clone()));
    }
    if let Some(b) = tree.branches.iter().position(|b| b.equation.is_none()) {
        return Err(ModelError::EquationMismatch(format!("B{} has no equation", b + 1)));
    }
    Ok(LogPresentation::new(pairs, None))
}

/// Outcome of the stability check at one point of the first exceptional
/// line.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityCheck {
    pub point: String,
    pub ok: bool,
}

/// Blows up the origin and, at every singular point of the exceptional
/// line, compares the model of the local germ (with the line as a branch)
/// with the pull-back `mu E + sum lambda_B B` of the global model.
pub fn blowup_stability(tree: &ResolutionTree, m: &DivisorialModel) -> Result<Vec<StabilityCheck>, ModelError> {
    let w = &tree.root().local_form;
    let nus: Vec<(String, u32)> =
        tree.branches.iter().enumerate().map(|(i, b)| (format!("B{}", i + 1), b.order())).collect();
    let nu_refs: Vec<(&str, u32)> = nus.iter().map(|(l, n)| (l.as_str(), *n)).collect();
    let pulled = pullback_divisor(&m.divisor(), &nu_refs, "E").divisor;
    let zero = TowerElem::zero();
    let mut points: Vec<(Step, symbolic::OneForm, BiPoly)> = Vec::new();
    let s1 = transform_form(w, Chart::First)?.strict;
    let restr = s1.a.restrict_x(&zero);
    let gcd_like = if restr.is_zero() { s1.b.restrict_x(&zero) } else { restr };
    if gcd_like.degree().unwrap_or(0) > 0 {
        let (_, mut roots) = all_roots(&tree.tower, &gcd_like).map_err(|_| ModelError::NotSimple("E".into()))?;
        roots.sort();
        for c in roots {
            let local = s1.eval_shift(&zero, &c);
            if local.is_singular_at_origin() {
                points.push((Step::first(c), local, BiPoly::x()));
            }
        }
    }
    let s2 = transform_form(w, Chart::Second)?.strict;
    if s2.is_singular_at_origin() {
        points.push((Step::second(), s2, BiPoly::y()));
    }
    let opts = ResolveOptions { tower_cap: tree.tower.cap(), equations: Vec::new(), ..Default::default() };
    let mut out = Vec::new();
    for (step, local, line) in points {
        let point = format!("{}[{}]", step.chart.name(), step.center);
        let ok = stable_at(tree, &step, &local, line, &pulled, &opts).unwrap_or(false);
        out.push(StabilityCheck { point, ok });
    }
    Ok(out)
}

fn stable_at(
    tree: &ResolutionTree,
    step: &Step,
    local: &symbolic::OneForm,
    line: BiPoly,
    pulled: &CDivisor,
    opts: &ResolveOptions,
) -> Result<bool, ModelError> {
    let opts = ResolveOptions { equations: vec![line], ..opts.clone() };
    let lt = resolve_with(local, &opts)?;
    let lm = crate::compute_model(&lt)?.model;
    let mut pairs: Vec<(String, TowerElem)> = Vec::new();
    let mut expect = CDivisor::new();
    for (k, lb) in lt.branches.iter().enumerate() {
        let label = if lb.equation == Some(0) {
            "E".to_string()
        } else {
            let g = tree.branches.iter().position(|gb| {
                gb.address.path.first() == Some(step)
                    && (gb.address.path[1..] == lb.address.path[..]
                        || (gb.address.path.len() == 1 && lb.leaf == 0 && lb.address.path.len() == 1))
            });
            match g {
                Some(g) => format!("B{}", g + 1),
                None => return Ok(false),
            }
        };
        if let Some(c) = pulled.coeff(&label) {
            expect.add(&label, c.clone());
        }
        pairs.push((label, lm.lambdas[k].clone()));
    }
    let got = CDivisor::from_pairs(pairs);
    Ok(got.len() == expect.len() && projective_equiv(&got, &expect))
}
