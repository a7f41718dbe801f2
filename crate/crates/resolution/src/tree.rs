//! The resolution tree and its bookkeeping.

use crate::address::NodeAddress;
use numtower::{Tower, TowerElem};
use std::fmt;
use symbolic::{BiPoly, OneForm};

/// A local coordinate line carrying an exceptional component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    /// The line `x = 0`.
    X,
    /// The line `y = 0`.
    Y,
}

impl Axis {
    pub fn equation(self) -> BiPoly {
        match self {
            Axis::X => BiPoly::x(),
            Axis::Y => BiPoly::y(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentId {
    /// Zero-based; displayed `E1, E2, ...` in creation order.
    Exceptional(usize),
    /// Zero-based; displayed `B1, B2, ...` in canonical order.
    Branch(usize),
}

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentId::Exceptional(i) => write!(f, "E{}", i + 1),
            ComponentId::Branch(i) => write!(f, "B{}", i + 1),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Regular,
    SimpleTrace,
    SimpleCorner,
    SaddleNode,
    ResonantPresimple,
    DicriticalBlowupHere,
    ToBlowUp,
}

impl Classification {
    pub fn is_simple(self) -> bool {
        matches!(self, Classification::SimpleTrace | Classification::SimpleCorner)
    }

    pub fn name(self) -> &'static str {
        match self {
            Classification::Regular => "regular",
            Classification::SimpleTrace => "simple_trace",
            Classification::SimpleCorner => "simple_corner",
            Classification::SaddleNode => "saddle_node",
            Classification::ResonantPresimple => "resonant_presimple",
            Classification::DicriticalBlowupHere => "dicritical_blowup_here",
            Classification::ToBlowUp => "to_blow_up",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Linear part of `w = a dx + b dy` at the point. The dual field
/// `X = b d/dx - a d/dy` has matrix `[[b_x, b_y], [-a_x, -a_y]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearData {
    pub a_x: TowerElem,
    pub a_y: TowerElem,
    pub b_x: TowerElem,
    pub b_y: TowerElem,
}

impl LinearData {
    pub fn of(w: &OneForm) -> LinearData {
        LinearData { a_x: w.a.coeff(1, 0), a_y: w.a.coeff(0, 1), b_x: w.b.coeff(1, 0), b_y: w.b.coeff(0, 1) }
    }

    pub fn trace(&self) -> TowerElem {
        &self.b_x - &self.a_y
    }

    pub fn det(&self) -> TowerElem {
        &(&self.a_x * &self.b_y) - &(&self.b_x * &self.a_y)
    }

    pub fn is_zero(&self) -> bool {
        self.a_x.is_zero() && self.a_y.is_zero() && self.b_x.is_zero() && self.b_y.is_zero()
    }

    /// An eigenvector of the dual field for the eigenvalue `l`.
    pub fn eigenvector(&self, l: &TowerElem) -> (TowerElem, TowerElem) {
        let r0 = &self.b_x - l;
        if !r0.is_zero() || !self.b_y.is_zero() {
            (self.b_y.clone(), -&r0)
        } else {
            (&self.a_y + l, -&self.a_x)
        }
    }
}

/// An invariant curve through the unblown origin, known by its tangent.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSeparatrix {
    pub tangent: (TowerElem, TowerElem),
    /// Camacho-Sad index of the foliation along it.
    pub cs: TowerElem,
}

#[derive(Clone, Debug)]
pub struct ResolutionNode {
    pub address: NodeAddress,
    pub parent: Option<usize>,
    pub children: Vec<usize>,
    /// Reduced generator in coordinates centred at the point.
    pub local_form: OneForm,
    /// Exceptional components through the point, by index, with their axis.
    pub exceptional: Vec<(usize, Axis)>,
    pub classification: Classification,
    pub linear: Option<LinearData>,
    /// Index of the exceptional component created by blowing up here.
    pub created: Option<usize>,
    /// Branches whose trace leaf is this node.
    pub branches: Vec<usize>,
    /// Separatrices of a regular or simple root, in canonical order.
    pub root_separatrices: Vec<RootSeparatrix>,
}

impl ResolutionNode {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty() && self.created.is_none()
    }

    pub fn axis_of(&self, e: usize) -> Option<Axis> {
        self.exceptional.iter().find(|(i, _)| *i == e).map(|p| p.1)
    }
}

#[derive(Clone, Debug)]
pub struct ExceptionalComponent {
    /// Node whose blow-up created it.
    pub created_at: usize,
    pub self_intersection: i64,
}

#[derive(Clone, Debug)]
pub struct Branch {
    /// Trace leaf, or the root with the tangent step appended for branches
    /// through an unblown origin.
    pub address: NodeAddress,
    pub leaf: usize,
    /// `nu_p` for every blown-up point on the branch, root first.
    pub multiplicities: Vec<(usize, u32)>,
    /// Camacho-Sad index at the trace leaf along the strict branch.
    pub local_cs: TowerElem,
    /// Index into the tracked equations, when one lands here.
    pub equation: Option<usize>,
}

impl Branch {
    /// Multiplicity at the origin.
    pub fn order(&self) -> u32 {
        self.multiplicities.first().map_or(1, |m| m.1)
    }

    pub fn nu_at(&self, node: usize) -> u32 {
        self.multiplicities.iter().find(|m| m.0 == node).map_or(0, |m| m.1)
    }
}

#[derive(Clone, Debug)]
pub struct ResolutionTree {
    pub nodes: Vec<ResolutionNode>,
    /// Blown-up nodes in creation order of their exceptional components.
    pub blowup_order: Vec<usize>,
    pub exceptional: Vec<ExceptionalComponent>,
    pub branches: Vec<Branch>,
    pub tower: Tower,
    pub equations: Vec<BiPoly>,
    /// Equations that did not land on a branch, with the reason.
    pub unmatched_equations: Vec<(usize, String)>,
    /// `total[j][k]`: coefficient of `E_k` in the total transform of `E_j`.
    pub total: Vec<Vec<u32>>,
    /// Exceptional components given at the root (diagnostic runs only).
    pub preexisting: usize,
}

impl ResolutionTree {
    pub fn root(&self) -> &ResolutionNode {
        &self.nodes[0]
    }

    pub fn node(&self, a: &NodeAddress) -> Option<usize> {
        self.nodes.iter().position(|n| &n.address == a)
    }

    /// Node indices from the root to `n` inclusive.
    pub fn path(&self, n: usize) -> Vec<usize> {
        let mut out = vec![n];
        let mut c = n;
        while let Some(p) = self.nodes[c].parent {
            out.push(p);
            c = p;
        }
        out.reverse();
        out
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.nodes.len()).filter(|&i| self.nodes[i].is_leaf())
    }

    pub fn num_blowups(&self) -> usize {
        self.blowup_order.len()
    }

    /// Components through a node, exceptional first.
    pub fn components_at(&self, n: usize) -> Vec<ComponentId> {
        let mut out: Vec<ComponentId> =
            self.nodes[n].exceptional.iter().map(|(e, _)| ComponentId::Exceptional(*e)).collect();
        for (i, b) in self.branches.iter().enumerate() {
            if b.leaf == n || b.multiplicities.iter().any(|m| m.0 == n) {
                out.push(ComponentId::Branch(i));
            }
        }
        out
    }

    /// Edges of the dual graph: pairs of components meeting at a leaf.
    pub fn dual_graph(&self) -> Vec<(ComponentId, ComponentId, usize)> {
        let mut out = Vec::new();
        for n in self.leaves() {
            let cs = self.components_at(n);
            if cs.len() == 2 {
                out.push((cs[0].min(cs[1]), cs[0].max(cs[1]), n));
            }
        }
        out
    }

    /// All components in display order: exceptional then branches.
    pub fn all_components(&self) -> Vec<ComponentId> {
        let mut v: Vec<ComponentId> = (self.preexisting..self.exceptional.len()).map(ComponentId::Exceptional).collect();
        v.extend((0..self.branches.len()).map(ComponentId::Branch));
        v
    }

    /// `(H_i, H_j)_0` by Noether's formula over shared infinitely near points.
    pub fn branch_intersection(&self, i: usize, j: usize) -> u32 {
        let (a, b) = (&self.branches[i], &self.branches[j]);
        if i != j && a.leaf == b.leaf {
            return 1;
        }
        a.multiplicities
            .iter()
            .map(|(p, n)| n * b.nu_at(*p))
            .sum()
    }
}
