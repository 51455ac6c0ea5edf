//! Power series in `x` truncated after `x^N`, with coefficients that are
//! polynomials in `z`.
//!
//! Used to check the two generating-function facts behind the identities:
//! `y = x (1 + s y)^m` generates the weighted tree counts, and for
//! `u = exp(x u)` one has `[x^n] u^z = z (z + n)^(n-1) / n!`.

use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{binom_general, factorial, Poly, Rational};
use crate::trees::FamilyParams;

/// `sum_{k=0}^{N} c_k x^k`, exact modulo `x^(N+1)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Poly>,
}

impl Series {
    /// Pads with zeros or drops terms beyond `x^order`.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Poly>) -> Self {
        coeffs.resize(order + 1, Poly::zero());
        Series { coeffs }
    }

    pub fn from_rationals(order: usize, coeffs: impl IntoIterator<Item = Rational>) -> Self {
        Series::from_coeffs(order, coeffs.into_iter().map(Poly::constant).collect())
    }

    pub fn zero(order: usize) -> Self {
        Series::from_coeffs(order, Vec::new())
    }

    pub fn one(order: usize) -> Self {
        Series::from_coeffs(order, vec![Poly::one()])
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Series::from_coeffs(order, vec![Poly::zero(), Poly::one()])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    /// `[x^k]`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Poly {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    fn same_order(&self, other: &Series) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Series) -> Result<Series> {
        self.same_order(other)?;
        let n = self.order();
        let mut coeffs = vec![Poly::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        Ok(Series { coeffs })
    }

    /// Multiplies every coefficient by the polynomial `c`.
    pub fn scale(&self, c: &Poly) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x`, dropping the term that falls off the end.
    pub fn shift(&self) -> Series {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(Poly::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        Series { coeffs }
    }

    /// `self^k` by repeated multiplication.
    pub fn powu(&self, k: u32) -> Series {
        (0..k).fold(Series::one(self.order()), |acc, _| {
            acc.checked_mul(self).expect("same order")
        })
    }

    /// `self^e = sum_k binom(e, k) (self - 1)^k` for a series with constant
    /// term 1. Since `self - 1` has no constant term the sum stops at `k = N`.
    pub fn binomial_pow(&self, e: &Rational) -> Result<Series> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm { expected: "1" });
        }
        let n = self.order();
        let t = self.checked_sub(&Series::one(n))?;
        let mut power = Series::one(n);
        let mut acc = Series::zero(n);
        for k in 0..=n as u32 {
            let c = binom_general(e, k);
            if !c.is_zero() {
                acc = acc.checked_add(&power.scale(&Poly::constant(c)))?;
            }
            power = power.checked_mul(&t)?;
        }
        Ok(acc)
    }

    /// `exp(self) = sum_k self^k / k!` for a series with zero constant term.
    pub fn exp(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm { expected: "0" });
        }
        let n = self.order();
        let mut power = Series::one(n);
        let mut acc = Series::zero(n);
        for k in 0..=n as u32 {
            let inv = factorial(k).recip()?;
            acc = acc.checked_add(&power.scale(&Poly::constant(inv)))?;
            power = power.checked_mul(self)?;
        }
        Ok(acc)
    }
}

/// The series `y` with `y(0) = 0` and `y = x (1 + s y)^m`, by fixed-point
/// iteration. Round `k` makes the coefficients through `x^k` final.
pub fn solve_y(fam: &FamilyParams, order: usize) -> Series {
    let one = Series::one(order);
    let s = Poly::constant(fam.s().clone());
    let mut y = Series::zero(order);
    for _ in 0..order {
        let base = one.checked_add(&y.scale(&s)).expect("same order");
        y = base
            .binomial_pow(fam.m())
            .expect("constant term is 1")
            .shift();
    }
    y
}

/// The series `u` with `u(0) = 1` and `u = exp(x u)`, by fixed-point
/// iteration.
pub fn solve_u(order: usize) -> Series {
    let mut u = Series::one(order);
    for _ in 0..order {
        u = u.shift().exp().expect("x*u has zero constant term");
    }
    u
}

/// `u^z` with `z` symbolic. Since `log u = x u`, this is `exp(z x u)`.
pub fn u_pow_z(order: usize) -> Series {
    solve_u(order)
        .shift()
        .scale(&Poly::z())
        .exp()
        .expect("zero constant term")
}

/// `z (z + n)^(n-1) / n!`, and 1 for `n = 0`.
pub fn lagrange_coefficient(n: usize) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    let k = n as u32;
    let inv = factorial(k).recip().expect("factorials are nonzero");
    (Poly::z() * Poly::linear(Rational::one(), Rational::from(n as i64)).pow(k - 1)).scale(&inv)
}

/// Checks `[x^n] u^z = z (z + n)^(n-1) / n!` for `n = 1..=order`.
pub fn verify_lagrange(order: usize) -> bool {
    let uz = u_pow_z(order);
    uz.coeff(0).is_one() && (1..=order).all(|n| uz.coeff(n) == lagrange_coefficient(n))
}

/// `(c0) + (c1)*x + ... + (cN)*x^N`, zero terms omitted.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{}]({self})", self.order())
    }
}
