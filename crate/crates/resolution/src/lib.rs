//! Reduction of singularities of plane foliation germs by point blow-ups.
//!
//! [`resolve`] locates singular points exactly on each new exceptional line,
//! classifies them through the linear part of the dual vector field and
//! either reaches simple points everywhere or rejects the germ with the
//! first offending point. The tree records charts, exceptional incidences,
//! branch multiplicities and the dual graph. The crate also desingularizes
//! lists of functions, computes logarithmic orders and evaluates
//! intersection numbers by Noether's recursion.

mod address;
mod dot;
mod list;
mod logorder;
mod noether;
mod resolve;
mod tree;

pub use address::{NodeAddress, Step};
pub use dot::to_dot;
pub use list::{desingularize_list, Certificate, ListError, ListNode, ListTree, PointCertificate};
pub use logorder::log_order;
pub use noether::noether_intersection;
pub use resolve::{
    classify, classify_form, is_invariant, resolve, resolve_with, singular_points_on_divisor, Diagnosis, RejectReason,
    Rejection, ResolveError, ResolveOptions,
};
pub use tree::{
    Axis, Branch, Classification, ComponentId, ExceptionalComponent, LinearData, ResolutionNode, ResolutionTree,
    RootSeparatrix,
};
