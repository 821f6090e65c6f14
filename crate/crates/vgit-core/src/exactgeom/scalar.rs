//! Scalar aliases and constructors.
//!
//! `num-rational` already maintains the invariants the engine relies on:
//! lowest terms, strictly positive denominator.

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// `n` as an exact rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}
