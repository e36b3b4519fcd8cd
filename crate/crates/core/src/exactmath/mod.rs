//! Exact arithmetic: rationals, polynomials over Q, cyclotomic polynomials
//! and the cyclotomic fields Q[x]/Φ_N(x).

mod cyclotomic;
mod field;
mod poly;

pub use cyclotomic::{cyclotomic_poly, divisors, euler_phi};
pub use field::{ArithOp, CycElt, CyclotomicField};
pub use poly::Poly;

/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// `ζ^k` in `field`, with `k` reduced modulo the field order.
pub fn elt_from_power(field: &CyclotomicField, k: i64) -> CycElt {
    field.zeta_pow(k)
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    s.trim().parse().ok()
}
