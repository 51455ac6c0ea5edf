//! Exact enumeration and verification of hook length identities for binomial
//! (`(s, m)`-weighted) families of ordered trees.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`]: rationals, polynomials in `z` and reduced rational functions.
//! * [`trees`]: ordered trees, their enumeration, hook lengths and family weights.
//! * [`identities`]: both sides of every hook length identity, plus the
//!   recursive evaluators used as cross-checks.
//! * [`series`]: truncated power series with polynomial coefficients and the
//!   two functional-equation solvers.
//! * [`involution`]: increasing ordered trees and the sign-reversing involution.
//! * [`cli`]: the command line front end.

pub mod cli;
pub mod error;
pub mod exactnum;
pub mod identities;
pub mod involution;
pub mod series;
pub mod trees;

pub use error::{Error, Result};
pub use exactnum::{Poly, RatFunc, Rational};
pub use trees::{FamilyParams, OrderedTree};
