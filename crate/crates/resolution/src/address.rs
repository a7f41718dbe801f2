//! Addresses of infinitely near points.

use blowup::Chart;
use numtower::TowerElem;
use std::fmt;

/// One blow-up step: the chart and the recentring value of `y'` (always
/// zero in the second chart, which is only used at infinity).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step {
    pub chart: Chart,
    pub center: TowerElem,
}

impl Step {
    pub fn first(center: TowerElem) -> Step {
        Step { chart: Chart::First, center }
    }

    pub fn second() -> Step {
        Step { chart: Chart::Second, center: TowerElem::zero() }
    }

    /// The point of the exceptional line reached by the tangent direction
    /// `(v1, v2)`.
    pub fn from_tangent(v1: &TowerElem, v2: &TowerElem) -> Step {
        if v1.is_zero() {
            Step::second()
        } else {
            Step::first(v2 / v1)
        }
    }
}

/// Path from the root germ; lexicographic order is the canonical order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeAddress {
    pub path: Vec<Step>,
}

impl NodeAddress {
    pub fn root() -> NodeAddress {
        NodeAddress::default()
    }

    pub fn child(&self, s: Step) -> NodeAddress {
        let mut path = self.path.clone();
        path.push(s);
        NodeAddress { path }
    }

    pub fn depth(&self) -> usize {
        self.path.len()
    }

    pub fn is_prefix_of(&self, o: &NodeAddress) -> bool {
        o.path.starts_with(&self.path)
    }
}

impl fmt::Display for NodeAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "root")?;
        for s in &self.path {
            match s.chart {
                Chart::First => write!(f, ".1[{}]", s.center)?,
                Chart::Second => write!(f, ".2")?,
            }
        }
        Ok(())
    }
}
