//! Exact arithmetic in towers of simple algebraic extensions of Q.
//!
//! A [`Tower`] is a chain `Q = K_0 < K_1 < ... < K_h` with `K_k = K_{k-1}(theta_k)`,
//! each generator pinned to one complex root of its minimal polynomial by a
//! rational isolating rectangle. Elements are kept in normal form, so zero
//! tests and equality are exact. Enclosures of the generators are used only
//! to decide signs and to locate roots.

mod eigen;
mod error;
mod factor;
mod isolate;
pub mod json;
mod qfactor;
mod rat;
mod tower;
mod upoly;
mod val;

pub type Rational = num_rational::BigRational;

pub use eigen::{eigen_ratio_class, EigenRatio};
pub use error::TowerError;
pub use factor::{adjoin_root, all_roots, factor_over, factor_univariate, isolating_regions};
pub use rat::{format_pq, format_short, parse_rational};
pub use tower::{arith, ArithOp, Region, Sign, Tower, TowerElem, DEFAULT_DEGREE_CAP};
pub use upoly::{cmp_upoly, UPoly};

use std::sync::OnceLock;

/// `Q(i)` with the generator named `i`, shared process-wide so that every
/// Gaussian constant (parsed or decoded) lives in one compatible tower.
pub fn gaussian_tower() -> Tower {
    static T: OnceLock<Tower> = OnceLock::new();
    T.get_or_init(|| factor::adjoin_named(&Tower::rationals(), &UPoly::from_ints(&[1, 0, 1]), &Region::from_ints(-1, 1, 1, 3, 2), "i"))
        .clone()
}

/// The imaginary unit of [`gaussian_tower`].
pub fn imaginary_unit() -> TowerElem {
    gaussian_tower().generator(1)
}
