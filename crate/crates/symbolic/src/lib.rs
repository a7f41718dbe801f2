//! Bivariate polynomials and polynomial 1-forms over tower coefficients:
//! arithmetic, orders, exact gcds, intersection multiplicities by
//! resultants, coordinate changes, and a small text syntax.

mod bipoly;
mod form;
mod gcd;
mod intersect;
mod parse;

pub use bipoly::{grlex, BiPoly, Exp};
pub use form::{LogPresentation, OneForm};
pub use gcd::{exact_div, gcd, squarefree_part};
pub use intersect::intersection_multiplicity;
pub use parse::{
    parse, parse_constant, parse_foliation_document, parse_form, parse_list_document, parse_poly, split_document,
    Header, Line, ParseError, Parsed,
};

/// `nu_0(p)`, the least total degree of a term; `None` for zero.
pub fn order_at_origin(p: &BiPoly) -> Option<u32> {
    p.order()
}

/// `nu_0(w) = min(nu_0(a), nu_0(b))`; `None` for the zero form.
pub fn order_form(w: &OneForm) -> Option<u32> {
    w.order()
}

/// Splits `w` into its reduced form and the common factor of its
/// coefficients.
pub fn strip_common_factor(w: &OneForm) -> (OneForm, BiPoly) {
    w.strip_common_factor()
}
