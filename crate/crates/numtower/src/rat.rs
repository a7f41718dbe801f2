use crate::Rational;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Parses `p/q`, `p` or `-p/q` (surrounding whitespace allowed).
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (s, None),
    };
    if n.is_empty() {
        return None;
    }
    let n: BigInt = n.parse().ok()?;
    let d: BigInt = match d {
        Some(d) => d.parse().ok()?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return None;
    }
    Some(Rational::new(n, d))
}

/// Always `p/q`, the serialization form.
pub fn format_pq(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// `p` for integers, `p/q` otherwise.
pub fn format_short(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format_pq(q)
    }
}
