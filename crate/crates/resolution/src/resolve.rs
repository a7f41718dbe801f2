//! The reduction-of-singularities driver.

use crate::address::{NodeAddress, Step};
use crate::tree::*;
use blowup::{transform_form, transform_poly, BlowupError, Chart};
use numtower::{all_roots, eigen_ratio_class, EigenRatio, Tower, TowerElem, TowerError, UPoly};
use std::fmt;
use symbolic::{exact_div, BiPoly, OneForm};
use thiserror::Error;

#[derive(Clone, Debug)]
pub struct ResolveOptions {
    /// Maximum number of blow-ups.
    pub max_depth: usize,
    /// Cap on the degree of the run's tower over Q.
    pub tower_cap: usize,
    /// Separatrix equations to follow to their trace leaves.
    pub equations: Vec<BiPoly>,
    /// Blow-up budget for diagnosing a resonant point; 0 disables it.
    pub explore: usize,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions { max_depth: 64, tower_cap: numtower::DEFAULT_DEGREE_CAP, equations: Vec::new(), explore: 8 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RejectReason {
    Dicritical,
    SaddleNode,
    ResonantPresimple,
}

impl fmt::Display for RejectReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RejectReason::Dicritical => "dicritical",
            RejectReason::SaddleNode => "saddle_node",
            RejectReason::ResonantPresimple => "resonant_presimple",
        })
    }
}

/// What a bounded exploration below a resonant point found.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Diagnosis {
    Dicritical,
    HiddenSaddleNode,
    Undetermined,
}

impl fmt::Display for Diagnosis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Diagnosis::Dicritical => "dicritical",
            Diagnosis::HiddenSaddleNode => "hidden saddle-node",
            Diagnosis::Undetermined => "undetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rejection {
    pub reason: RejectReason,
    pub address: NodeAddress,
    pub diagnosis: Option<Diagnosis>,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {}", self.reason, self.address)?;
        if let Some(d) = self.diagnosis {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Error)]
pub enum ResolveError {
    #[error("zero form")]
    ZeroForm,
    #[error("not a generalized curve: {0}")]
    Rejected(Rejection),
    #[error("more than {0} blow-ups needed")]
    DepthCap(usize),
    #[error(transparent)]
    Tower(#[from] TowerError),
    #[error(transparent)]
    Blowup(#[from] BlowupError),
}

/// Classification of a reduced form centred at a point lying on
/// `n_exceptional` invariant exceptional components.
pub fn classify_form(w: &OneForm, n_exceptional: usize) -> (Classification, Option<LinearData>) {
    if !w.is_singular_at_origin() {
        return (Classification::Regular, None);
    }
    let lin = LinearData::of(w);
    let class = match eigen_ratio_class(&lin.trace(), &lin.det()) {
        EigenRatio::BothZero => Classification::ToBlowUp,
        EigenRatio::OneZero => Classification::SaddleNode,
        EigenRatio::PosRational(_) => Classification::ResonantPresimple,
        EigenRatio::NonPosRational(_) | EigenRatio::Irrational => {
            if n_exceptional == 1 {
                Classification::SimpleTrace
            } else {
                Classification::SimpleCorner
            }
        }
    };
    (class, Some(lin))
}

/// Recomputes the classification of a node from its local data.
pub fn classify(node: &ResolutionNode) -> Classification {
    match node.classification {
        Classification::DicriticalBlowupHere => Classification::DicriticalBlowupHere,
        _ => classify_form(&node.local_form, node.exceptional.len()).0,
    }
}

/// Zeros of the singular scheme of `w` on the exceptional line of `chart`
/// (`x = 0` in the first chart, `y = 0` in the second), extending `tower`.
pub fn singular_points_on_divisor(
    w: &OneForm,
    chart: Chart,
    tower: &Tower,
) -> Result<(Vec<TowerElem>, Tower), TowerError> {
    let zero = TowerElem::zero();
    let (ra, rb) = match chart {
        Chart::First => (w.a.restrict_x(&zero), w.b.restrict_x(&zero)),
        Chart::Second => (w.a.restrict_y(&zero), w.b.restrict_y(&zero)),
    };
    let g = ra.gcd(&rb);
    if g.is_zero() {
        return Err(TowerError::ZeroInput);
    }
    if g.degree() == Some(0) {
        return Ok((Vec::new(), tower.clone()));
    }
    let (t, mut roots) = all_roots(tower, &g)?;
    roots.sort();
    Ok((roots, t))
}

/// Reduction of singularities with default options.
pub fn resolve(w: &OneForm) -> Result<ResolutionTree, ResolveError> {
    resolve_with(w, &ResolveOptions::default())
}

pub fn resolve_with(w: &OneForm, opts: &ResolveOptions) -> Result<ResolutionTree, ResolveError> {
    run(w, &[], opts)
}

struct Run<'a> {
    opts: &'a ResolveOptions,
    tower: Tower,
    nodes: Vec<ResolutionNode>,
    blowup_order: Vec<usize>,
    exceptional: Vec<ExceptionalComponent>,
    total: Vec<Vec<u32>>,
    /// Local strict transforms of the tracked equations through each node.
    carried: Vec<Vec<(usize, BiPoly)>>,
    unmatched: Vec<(usize, String)>,
    preexisting: usize,
}

/// Resolves `w` at the origin where the axes in `axes` already carry
/// (invariant) exceptional components.
fn run(w: &OneForm, axes: &[Axis], opts: &ResolveOptions) -> Result<ResolutionTree, ResolveError> {
    if w.is_zero() {
        return Err(ResolveError::ZeroForm);
    }
    let (w, _) = w.strip_common_factor();
    let mut tower = w.tower();
    for e in &opts.equations {
        let t = e.tower();
        if t.height() > tower.height() {
            tower = t;
        }
    }
    let tower = tower.recapped(opts.tower_cap);
    let n = axes.len();
    let mut r = Run {
        opts,
        tower,
        nodes: Vec::new(),
        blowup_order: Vec::new(),
        exceptional: (0..n).map(|_| ExceptionalComponent { created_at: 0, self_intersection: -1 }).collect(),
        total: (0..n).map(|j| (0..n).map(|k| u32::from(j == k)).collect()).collect(),
        carried: Vec::new(),
        unmatched: Vec::new(),
        preexisting: n,
    };
    let mut root_eqs = Vec::new();
    for (i, e) in opts.equations.iter().enumerate() {
        if e.is_zero() || !e.vanishes_at_origin() {
            r.unmatched.push((i, "does not pass through the origin".into()));
        } else if !is_invariant(&w, e) {
            r.unmatched.push((i, "not invariant".into()));
        } else {
            root_eqs.push((i, e.clone()));
        }
    }
    let exc: Vec<(usize, Axis)> = axes.iter().copied().enumerate().collect();
    r.push_node(NodeAddress::root(), None, w, exc, root_eqs);
    let mut stack = vec![0usize];
    while let Some(n) = stack.pop() {
        let kids = r.visit(n)?;
        stack.extend(kids.into_iter().rev());
    }
    Ok(r.finish())
}

/// `e` defines an invariant curve of `w`: `e` divides `w ^ de`.
pub fn is_invariant(w: &OneForm, e: &BiPoly) -> bool {
    let wedge = w.a.mul(&e.dy()).sub(&w.b.mul(&e.dx()));
    exact_div(&wedge, e).is_some()
}

impl Run<'_> {
    fn push_node(
        &mut self,
        address: NodeAddress,
        parent: Option<usize>,
        w: OneForm,
        exceptional: Vec<(usize, Axis)>,
        eqs: Vec<(usize, BiPoly)>,
    ) -> usize {
        self.nodes.push(ResolutionNode {
            address,
            parent,
            children: Vec::new(),
            local_form: w,
            exceptional,
            classification: Classification::ToBlowUp,
            linear: None,
            created: None,
            branches: Vec::new(),
            root_separatrices: Vec::new(),
        });
        self.carried.push(eqs);
        self.nodes.len() - 1
    }

    fn reject(&self, n: usize, reason: RejectReason, diagnosis: Option<Diagnosis>) -> ResolveError {
        ResolveError::Rejected(Rejection { reason, address: self.nodes[n].address.clone(), diagnosis })
    }

    /// Classifies node `n`, blowing it up if needed; returns its children.
    fn visit(&mut self, n: usize) -> Result<Vec<usize>, ResolveError> {
        let w = self.nodes[n].local_form.clone();
        let (class, lin) = classify_form(&w, self.nodes[n].exceptional.len());
        self.nodes[n].classification = class;
        self.nodes[n].linear = lin.clone();
        match class {
            Classification::SaddleNode => Err(self.reject(n, RejectReason::SaddleNode, None)),
            Classification::ResonantPresimple => {
                let d = self.diagnose(n);
                Err(self.reject(n, RejectReason::ResonantPresimple, d))
            }
            Classification::Regular => {
                if n == 0 && self.nodes[0].exceptional.is_empty() {
                    let (a0, b0) = (w.a.constant_term(), w.b.constant_term());
                    self.nodes[0].root_separatrices =
                        vec![RootSeparatrix { tangent: (b0, -&a0), cs: TowerElem::zero() }];
                }
                Ok(Vec::new())
            }
            Classification::SimpleCorner | Classification::SimpleTrace => {
                if self.nodes[n].exceptional.is_empty() {
                    self.root_separatrices(n, lin.as_ref().unwrap())?;
                }
                Ok(Vec::new())
            }
            Classification::ToBlowUp | Classification::DicriticalBlowupHere => self.blow_up(n),
        }
    }

    fn root_separatrices(&mut self, n: usize, lin: &LinearData) -> Result<(), ResolveError> {
        let char_poly = UPoly::new(vec![lin.det(), -&lin.trace(), TowerElem::one()]);
        let (t, ls) = all_roots(&self.tower, &char_poly)?;
        self.tower = t;
        let mut seps: Vec<RootSeparatrix> = (0..2)
            .map(|i| RootSeparatrix { tangent: lin.eigenvector(&ls[i]), cs: &ls[1 - i] / &ls[i] })
            .collect();
        seps.sort_by_key(|s| Step::from_tangent(&s.tangent.0, &s.tangent.1));
        self.nodes[n].root_separatrices = seps;
        Ok(())
    }

    fn diagnose(&self, n: usize) -> Option<Diagnosis> {
        if self.opts.explore == 0 {
            return None;
        }
        let axes: Vec<Axis> = self.nodes[n].exceptional.iter().map(|p| p.1).collect();
        let sub = ResolveOptions {
            max_depth: self.opts.explore,
            tower_cap: self.opts.tower_cap,
            equations: Vec::new(),
            explore: self.opts.explore - 1,
        };
        let w = &self.nodes[n].local_form;
        // The point itself is resonant; look below it.
        let t1 = transform_form(w, Chart::First).ok()?;
        if t1.dicritical {
            return Some(Diagnosis::Dicritical);
        }
        let mut axes2 = vec![Axis::Y];
        axes2.extend(axes.iter().filter(|a| **a == Axis::X));
        let mut germs = Vec::new();
        let (pts, _) = singular_points_on_divisor(&t1.strict, Chart::First, &self.tower).ok()?;
        for c in pts {
            let mut ax = vec![Axis::X];
            if c.is_zero() {
                ax.extend(axes.iter().filter(|a| **a == Axis::Y));
            }
            germs.push((t1.strict.eval_shift(&TowerElem::zero(), &c), ax));
        }
        let t2 = transform_form(w, Chart::Second).ok()?;
        if t2.strict.is_singular_at_origin() {
            germs.push((t2.strict, axes2));
        }
        let mut out = Diagnosis::Undetermined;
        for (g, ax) in germs {
            if let Err(ResolveError::Rejected(rj)) = run(&g, &ax, &sub) {
                match rj.reason {
                    RejectReason::Dicritical => return Some(Diagnosis::Dicritical),
                    RejectReason::SaddleNode => out = Diagnosis::HiddenSaddleNode,
                    RejectReason::ResonantPresimple => match rj.diagnosis {
                        Some(Diagnosis::Dicritical) => return Some(Diagnosis::Dicritical),
                        Some(Diagnosis::HiddenSaddleNode) => out = Diagnosis::HiddenSaddleNode,
                        _ => {}
                    },
                }
            }
        }
        Some(out)
    }

    fn blow_up(&mut self, n: usize) -> Result<Vec<usize>, ResolveError> {
        if self.blowup_order.len() >= self.opts.max_depth {
            return Err(ResolveError::DepthCap(self.opts.max_depth));
        }
        let w = self.nodes[n].local_form.clone();
        let t1 = transform_form(&w, Chart::First)?;
        let t2 = transform_form(&w, Chart::Second)?;
        if t1.dicritical || t2.dicritical {
            self.nodes[n].classification = Classification::DicriticalBlowupHere;
            return Err(self.reject(n, RejectReason::Dicritical, None));
        }
        let s = self.exceptional.len();
        let through: Vec<(usize, Axis)> = self.nodes[n].exceptional.clone();
        for j in 0..s {
            let v = through.iter().map(|(c, _)| self.total[j][*c]).sum();
            self.total[j].push(v);
        }
        let mut row = vec![0; s];
        row.push(1);
        self.total.push(row);
        for (c, _) in &through {
            self.exceptional[*c].self_intersection -= 1;
        }
        self.exceptional.push(ExceptionalComponent { created_at: n, self_intersection: -1 });
        self.nodes[n].created = Some(s);
        self.blowup_order.push(n);

        let (pts, t) = singular_points_on_divisor(&t1.strict, Chart::First, &self.tower)?;
        self.tower = t;
        let eqs = self.carried[n].clone();
        let eq1: Vec<(usize, BiPoly)> =
            eqs.iter().map(|(i, e)| Ok((*i, transform_poly(e, Chart::First)?.strict))).collect::<Result<_, BlowupError>>()?;
        let eq2: Vec<(usize, BiPoly)> =
            eqs.iter().map(|(i, e)| Ok((*i, transform_poly(e, Chart::Second)?.strict))).collect::<Result<_, BlowupError>>()?;
        let mut met = vec![0u32; eqs.len()];
        let zero = TowerElem::zero();
        let mut kids = Vec::new();
        for c in pts {
            let mut exc = vec![(s, Axis::X)];
            if c.is_zero() {
                exc.extend(through.iter().filter(|p| p.1 == Axis::Y));
            }
            let mut here = Vec::new();
            for (k, (i, e)) in eq1.iter().enumerate() {
                let loc = e.eval_shift(&zero, &c);
                if loc.vanishes_at_origin() {
                    met[k] += axis_contact(&loc, Axis::X);
                    here.push((*i, loc));
                }
            }
            let addr = self.nodes[n].address.child(Step::first(c.clone()));
            let form = t1.strict.eval_shift(&zero, &c);
            kids.push(self.push_node(addr, Some(n), form, exc, here));
        }
        if t2.strict.is_singular_at_origin() {
            let mut exc = vec![(s, Axis::Y)];
            exc.extend(through.iter().filter(|p| p.1 == Axis::X));
            let mut here = Vec::new();
            for (k, (i, e)) in eq2.iter().enumerate() {
                if e.vanishes_at_origin() {
                    met[k] += axis_contact(e, Axis::Y);
                    here.push((*i, e.clone()));
                }
            }
            let addr = self.nodes[n].address.child(Step::second());
            kids.push(self.push_node(addr, Some(n), t2.strict, exc, here));
        }
        for (k, (i, e)) in eqs.iter().enumerate() {
            let nu = e.order().unwrap_or(0);
            if met[k] < nu {
                self.unmatched.push((*i, format!("leaves the singular locus at {}", self.nodes[n].address)));
            }
        }
        self.nodes[n].children = kids.clone();
        Ok(kids)
    }

    fn finish(mut self) -> ResolutionTree {
        let mut branches = Vec::new();
        for n in 0..self.nodes.len() {
            let node = &self.nodes[n];
            if !node.is_leaf() {
                continue;
            }
            let mut local = Vec::new();
            if node.exceptional.is_empty() {
                for s in &node.root_separatrices {
                    let step = Step::from_tangent(&s.tangent.0, &s.tangent.1);
                    local.push((node.address.child(step), s.cs.clone(), None));
                }
            } else if node.classification == Classification::SimpleTrace {
                let (e, axis) = node.exceptional[0];
                let lin = node.linear.as_ref().unwrap();
                let cs = match axis {
                    Axis::X => -&(&lin.a_y / &lin.b_x),
                    Axis::Y => -&(&lin.b_x / &lin.a_y),
                };
                local.push((node.address.clone(), cs, Some(e)));
            }
            for (address, local_cs, e) in local {
                let multiplicities = match e {
                    None => Vec::new(),
                    Some(k) => self
                        .path_to(n)
                        .into_iter()
                        .filter_map(|p| self.nodes[p].created.map(|j| (p, self.total[j][k])))
                        .collect(),
                };
                branches.push(Branch { address, leaf: n, multiplicities, local_cs, equation: None });
            }
        }
        branches.sort_by(|a, b| a.address.cmp(&b.address));
        for (i, b) in branches.iter().enumerate() {
            self.nodes[b.leaf].branches.push(i);
        }
        self.match_equations(&mut branches);
        self.unmatched.sort_by_key(|u| u.0);
        self.unmatched.dedup_by_key(|u| u.0);
        ResolutionTree {
            nodes: self.nodes,
            blowup_order: self.blowup_order,
            exceptional: self.exceptional,
            branches,
            tower: self.tower,
            equations: self.opts.equations.clone(),
            unmatched_equations: self.unmatched,
            total: self.total,
            preexisting: self.preexisting,
        }
    }

    fn path_to(&self, n: usize) -> Vec<usize> {
        let mut out = vec![n];
        let mut c = n;
        while let Some(p) = self.nodes[c].parent {
            out.push(p);
            c = p;
        }
        out.reverse();
        out
    }

    fn match_equations(&mut self, branches: &mut [Branch]) {
        for n in 0..self.nodes.len() {
            if !self.nodes[n].is_leaf() {
                continue;
            }
            let here = self.carried[n].clone();
            let node = &self.nodes[n];
            for (i, e) in here {
                let mut hits = Vec::new();
                if node.exceptional.is_empty() {
                    let init = e.initial_form();
                    for &b in &node.branches {
                        let (v1, v2) = match node.root_separatrices.iter().find(|s| {
                            node.address.child(Step::from_tangent(&s.tangent.0, &s.tangent.1)) == branches[b].address
                        }) {
                            Some(s) => s.tangent.clone(),
                            None => continue,
                        };
                        let line = BiPoly::x().scale(&v2).sub(&BiPoly::y().scale(&v1));
                        if exact_div(&init, &line).is_some() {
                            hits.push(b);
                        }
                    }
                    if e.order() != Some(hits.len() as u32) {
                        hits.clear();
                    }
                } else if node.branches.len() == 1 && e.order() == Some(1) {
                    let axis = node.exceptional[0].1.equation();
                    if exact_div(&e.initial_form(), &axis).is_none() {
                        hits.push(node.branches[0]);
                    }
                }
                if hits.is_empty() {
                    self.unmatched.push((i, format!("does not land on a trace leaf at {}", node.address)));
                }
                for b in hits {
                    if branches[b].equation.is_some_and(|j| j != i) {
                        self.unmatched.push((i, format!("shares a branch with equation {}", branches[b].equation.unwrap() + 1)));
                    } else {
                        branches[b].equation = Some(i);
                    }
                }
            }
        }
    }
}

/// Intersection multiplicity at the origin of `e` with the axis line.
fn axis_contact(e: &BiPoly, axis: Axis) -> u32 {
    let zero = TowerElem::zero();
    let r = match axis {
        Axis::X => e.restrict_x(&zero),
        Axis::Y => e.restrict_y(&zero),
    };
    r.coeffs().iter().position(|c| !c.is_zero()).map_or(u32::MAX / 4, |k| k as u32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eigenvector_is_eigen() {
        let w = OneForm::new(BiPoly::from_ints(&[(2, 0, 1), (1, 1, 0)]), BiPoly::from_ints(&[(3, 1, 0)]));
        let lin = LinearData::of(&w);
        let (_, ls) = all_roots(&Tower::rationals(), &UPoly::new(vec![lin.det(), -&lin.trace(), TowerElem::one()]))
            .unwrap();
        for l in ls {
            let (v1, v2) = lin.eigenvector(&l);
            let r1 = &(&lin.b_x * &v1) + &(&lin.b_y * &v2);
            let r2 = -&(&(&lin.a_x * &v1) + &(&lin.a_y * &v2));
            assert_eq!(r1, &l * &v1);
            assert_eq!(r2, &l * &v2);
        }
    }
}
