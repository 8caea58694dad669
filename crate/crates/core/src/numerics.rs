//! Exact integer and rational arithmetic.
//!
//! [`Int`] is an unbounded signed integer and [`Rat`] a reduced fraction with a
//! strictly positive denominator. Both come from the `num` family of crates;
//! this module adds the few number-theoretic predicates the rest of the crate
//! relies on.

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt as Int;

/// Reduced fraction of two [`Int`]s. Construction via [`rat`] or
/// `Rat::new` always normalizes sign and common factors.
pub type Rat = num_rational::BigRational;

/// Shorthand for building a reduced fraction.
///
/// Panics if `den` is zero.
pub fn rat(num: impl Into<Int>, den: impl Into<Int>) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Nonnegative greatest common divisor; `gcd(0, 0) == 0`.
pub fn gcd(a: &Int, b: &Int) -> Int {
    a.gcd(b)
}

/// `gcd(big, small)` where `small` is known to be short. Reduces `big` first
/// so the expensive part is a single remainder.
pub(crate) fn gcd_with_small(big: &Int, small: &Int) -> Int {
    if small.is_zero() {
        return big.abs();
    }
    let r = big.mod_floor(small);
    r.gcd(small)
}

/// Floor of the square root.
pub fn isqrt(n: &Int) -> Result<Int> {
    if n.is_negative() {
        return Err(Error::NegativeInput(n.to_string()));
    }
    Ok(n.sqrt())
}

/// `Some(r)` with `r * r == n` when `n` is a perfect square.
pub fn perfect_square_root(n: &Int) -> Result<Option<Int>> {
    let r = isqrt(n)?;
    Ok((&r * &r == *n).then_some(r))
}

pub(crate) fn is_odd(n: &Int) -> bool {
    n.is_odd()
}
