//! Exact scalar, polynomial and rational-function arithmetic.
//!
//! Every value is kept in a canonical form, so derived `PartialEq` is
//! mathematical equality:
//!
//! * [`Rational`]: reduced fraction with positive denominator.
//! * [`Poly`]: dense coefficient vector in `z` with no trailing zeros.
//! * [`RatFunc`]: `num / den` with `gcd(num, den) = 1` and monic `den`.

mod poly;
mod ratfunc;
mod rational;

pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use rational::{binom_general, factorial, Rational};
