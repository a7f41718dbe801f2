//! C-divisors: formal sums of components with algebraic coefficients,
//! indices, projective equivalence, and the dicriticality decision for
//! normal-crossings supports through non-negative resonances.

mod cdivisor;
mod check;
mod error;
mod file;
mod resonance;

pub use cdivisor::{index, projective_equiv, projective_equiv_partitioned, CDivisor, Component};
pub use check::{index_blowup_check, BlowupIndexData, IndexCheckReport};
pub use error::DivisorError;
pub use file::parse_divisor;
pub use resonance::{dicritical_decide, is_witness, resonance_descent, DescentStep};
