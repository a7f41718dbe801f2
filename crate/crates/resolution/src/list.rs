//! Desingularization of finite lists of functions.
//!
//! A list is desingularized at a point when, in suitable coordinates
//! `(u, v)`, every nonzero germ is a unit times `u^a v^b` and the germs are
//! totally ordered by divisibility. The condition is applied literally at
//! every point, the unblown origin included, so `{x, y}` needs one blow-up.

use crate::address::{NodeAddress, Step};
use crate::tree::Axis;
use blowup::{transform_poly, Chart};
use numtower::{all_roots, Tower, TowerElem, TowerError, UPoly};
use symbolic::{exact_div, squarefree_part, BiPoly};
use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum ListError {
    #[error("zero function in the list")]
    ZeroInput,
    #[error("more than {0} blow-ups needed")]
    DepthCap(usize),
    #[error(transparent)]
    Tower(#[from] TowerError),
}

/// `f = U u^a v^b` with `U(p) = unit`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub unit: TowerElem,
    pub exponents: (u32, u32),
}

#[derive(Clone, Debug)]
pub struct PointCertificate {
    /// Tangent lines of `u = 0` and `v = 0` at the point (exceptional axes
    /// are used verbatim); missing when fewer curves pass.
    pub lines: Vec<BiPoly>,
    pub functions: Vec<Certificate>,
}

impl PointCertificate {
    /// Re-checks the divisibility order and that each initial form matches
    /// `unit * lines^exponents`.
    pub fn verify(&self, germs: &[BiPoly]) -> bool {
        let one = BiPoly::one();
        let l0 = self.lines.first().unwrap_or(&one);
        let l1 = self.lines.get(1).unwrap_or(&one);
        for (g, c) in germs.iter().zip(&self.functions) {
            let expect = l0.pow(c.exponents.0).mul(&l1.pow(c.exponents.1)).scale(&c.unit);
            if c.unit.is_zero() || g.initial_form() != expect {
                return false;
            }
        }
        totally_ordered(&self.functions.iter().map(|c| c.exponents).collect::<Vec<_>>())
    }
}

#[derive(Clone, Debug)]
pub struct ListNode {
    pub address: NodeAddress,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    pub exceptional: Vec<Axis>,
    /// Total transforms of the list, centred at the point.
    pub germs: Vec<BiPoly>,
    pub blown_up: bool,
    pub certificate: Option<PointCertificate>,
}

#[derive(Clone, Debug)]
pub struct ListTree {
    pub nodes: Vec<ListNode>,
    pub tower: Tower,
}

impl ListTree {
    pub fn num_blowups(&self) -> usize {
        self.nodes.iter().filter(|n| n.blown_up).count()
    }

    /// Points where no further blow-up happens, with their certificates.
    pub fn terminal(&self) -> impl Iterator<Item = &ListNode> {
        self.nodes.iter().filter(|n| !n.blown_up)
    }
}

/// Blows up points until the list is desingularized over the origin.
/// Points of an exceptional line met by no strict transform are
/// desingularized automatically (every germ is a unit times a power of the
/// line) and are not listed.
pub fn desingularize_list(fs: &[BiPoly], max_depth: usize) -> Result<ListTree, ListError> {
    if fs.iter().any(BiPoly::is_zero) {
        return Err(ListError::ZeroInput);
    }
    let mut tower = Tower::rationals();
    for f in fs {
        if f.tower().height() > tower.height() {
            tower = f.tower();
        }
    }
    let mut tree = ListTree {
        nodes: vec![ListNode {
            address: NodeAddress::root(),
            parent: None,
            children: Vec::new(),
            exceptional: Vec::new(),
            germs: fs.to_vec(),
            blown_up: false,
            certificate: None,
        }],
        tower,
    };
    let mut stack = vec![0];
    let mut blowups = 0;
    while let Some(n) = stack.pop() {
        let (cert, t) = certify(&tree.nodes[n].germs, &tree.nodes[n].exceptional, &tree.tower)?;
        tree.tower = t;
        if cert.is_some() {
            tree.nodes[n].certificate = cert;
            continue;
        }
        if blowups >= max_depth {
            return Err(ListError::DepthCap(max_depth));
        }
        blowups += 1;
        tree.nodes[n].blown_up = true;
        let kids = blow_up(&mut tree, n)?;
        stack.extend(kids.into_iter().rev());
    }
    Ok(tree)
}

fn blow_up(tree: &mut ListTree, n: usize) -> Result<Vec<usize>, ListError> {
    let zero = TowerElem::zero();
    let node = tree.nodes[n].clone();
    let sub = |c: Chart, g: &BiPoly| {
        let (sx, sy) = c.substitution();
        g.compose(&sx, &sy)
    };
    let mut meet = UPoly::constant(TowerElem::one());
    for g in &node.germs {
        let s = transform_poly(g, Chart::First).expect("nonzero").strict;
        meet = meet.mul(&s.restrict_x(&zero));
    }
    let (t, mut roots) = if meet.degree().unwrap_or(0) > 0 {
        all_roots(&tree.tower, &meet)?
    } else {
        (tree.tower.clone(), Vec::new())
    };
    tree.tower = t;
    roots.sort();
    let mut kids = Vec::new();
    for c in roots {
        let mut exc = vec![Axis::X];
        if c.is_zero() && node.exceptional.contains(&Axis::Y) {
            exc.push(Axis::Y);
        }
        let germs = node.germs.iter().map(|g| sub(Chart::First, g).eval_shift(&zero, &c)).collect();
        kids.push(push(tree, n, node.address.child(Step::first(c)), exc, germs));
    }
    let mut exc = vec![Axis::Y];
    if node.exceptional.contains(&Axis::X) {
        exc.push(Axis::X);
    }
    let germs = node.germs.iter().map(|g| sub(Chart::Second, g)).collect();
    kids.push(push(tree, n, node.address.child(Step::second()), exc, germs));
    tree.nodes[n].children = kids.clone();
    Ok(kids)
}

fn push(tree: &mut ListTree, parent: usize, address: NodeAddress, exceptional: Vec<Axis>, germs: Vec<BiPoly>) -> usize {
    tree.nodes.push(ListNode {
        address,
        parent: Some(parent),
        children: Vec::new(),
        exceptional,
        germs,
        blown_up: false,
        certificate: None,
    });
    tree.nodes.len() - 1
}

fn totally_ordered(e: &[(u32, u32)]) -> bool {
    e.iter().all(|p| e.iter().all(|q| (p.0 <= q.0 && p.1 <= q.1) || (q.0 <= p.0 && q.1 <= p.1)))
}

/// A certificate at the point, or `None` if the list is not desingularized.
fn certify(germs: &[BiPoly], axes: &[Axis], tower: &Tower) -> Result<(Option<PointCertificate>, Tower), TowerError> {
    // Reduced curve through the point: exceptional axes and the vanishing
    // non-exceptional parts.
    let mut z = BiPoly::one();
    for g in germs {
        let mut s = g.clone();
        for ax in axes {
            s = match ax {
                Axis::X => s.div_monomial(s.x_adic_order().unwrap_or(0), 0),
                Axis::Y => s.div_monomial(0, s.y_adic_order().unwrap_or(0)),
            };
        }
        if s.vanishes_at_origin() {
            z = z.mul(&s);
        }
    }
    let mut lines: Vec<BiPoly> = axes.iter().map(|a| a.equation()).collect();
    let h = squarefree_part(&z);
    let init = h.initial_form();
    let mut tower = tower.clone();
    match h.order().unwrap_or(0) {
        0 => {}
        1 => lines.push(init.monic()),
        2 if lines.is_empty() => {
            let (a, b, c) = (init.coeff(2, 0), init.coeff(1, 1), init.coeff(0, 2));
            if a.is_zero() {
                lines.push(BiPoly::y());
                lines.push(BiPoly::x().scale(&b).add(&BiPoly::y().scale(&c)).monic());
            } else {
                let (t, r) = all_roots(&tower, &UPoly::new(vec![c, b, a]))?;
                tower = t;
                if r.len() < 2 {
                    return Ok((None, tower));
                }
                for root in r {
                    lines.push(BiPoly::x().sub(&BiPoly::y().scale(&root)));
                }
            }
        }
        _ => return Ok((None, tower)),
    }
    if lines.len() > 2 || (lines.len() == 2 && exact_div(&lines[0], &lines[1]).is_some()) {
        return Ok((None, tower));
    }
    let mut functions = Vec::new();
    for g in germs {
        let mut f = g.initial_form();
        let mut ex = [0u32; 2];
        for (k, l) in lines.iter().enumerate() {
            while let Some(q) = exact_div(&f, l) {
                f = q;
                ex[k] += 1;
            }
        }
        match f.as_constant() {
            Some(u) => functions.push(Certificate { unit: u, exponents: (ex[0], ex[1]) }),
            None => return Ok((None, tower)),
        }
    }
    let cert = PointCertificate { lines, functions };
    Ok((cert.verify(germs).then_some(cert), tower))
}
