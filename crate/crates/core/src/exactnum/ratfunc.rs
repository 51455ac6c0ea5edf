use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};

use super::{Poly, Rational};

/// Quotient of two polynomials in `z`, kept fully reduced with a monic
/// denominator. The representation is unique, so `==` decides equality of
/// rational functions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = Poly::gcd(&num, &den)?;
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_rem(&g)?.0, den.div_rem(&g)?.0)
        };
        let lc = den.leading_coeff().expect("nonzero denominator").clone();
        if !lc.is_one() {
            let inv = lc.recip()?;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(RatFunc { num, den })
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from(Poly::one())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// True when the reduced denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&Poly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn scale(&self, c: &Rational) -> RatFunc {
        if c.is_zero() {
            return RatFunc::zero();
        }
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn recip(&self) -> Result<RatFunc> {
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn pow(&self, exp: u32) -> RatFunc {
        // powers of coprime polynomials stay coprime, and a monic power is monic
        RatFunc {
            num: self.num.pow(exp),
            den: self.den.pow(exp),
        }
    }

    /// Value at `z = at`; `None` at a pole.
    pub fn eval(&self, at: &Rational) -> Option<Rational> {
        self.num.eval(at).checked_div(&self.den.eval(at)).ok()
    }

    fn reduce(num: Poly, den: Poly) -> RatFunc {
        RatFunc::new(num, den).expect("product of nonzero denominators is nonzero")
    }
}

impl From<Poly> for RatFunc {
    fn from(num: Poly) -> Self {
        RatFunc {
            num,
            den: Poly::one(),
        }
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::from(Poly::constant(c))
    }
}

impl<'b> Add<&'b RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &'b RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::reduce(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'b> Sub<&'b RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &'b RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl<'b> Mul<&'b RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &'b RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        RatFunc::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: RatFunc) -> RatFunc {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $method(self, rhs: &'a RatFunc) -> RatFunc {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl std::iter::Sum for RatFunc {
    fn sum<I: Iterator<Item = RatFunc>>(iter: I) -> Self {
        iter.fold(RatFunc::zero(), |acc, x| acc + x)
    }
}

/// Polynomials print as-is; proper quotients as `(num)/(den)`.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&c| Rational::from(c)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RatFunc {
        RatFunc::new(p(num), p(den)).unwrap()
    }

    fn assert_canonical(f: &RatFunc) {
        assert!(!f.den().is_zero());
        assert!(f.den().leading_coeff().unwrap().is_one(), "{f:?} not monic");
        if !f.num().is_zero() {
            assert!(
                Poly::gcd(f.num(), f.den()).unwrap().is_one(),
                "{f:?} not reduced"
            );
        } else {
            assert!(f.den().is_one());
        }
    }

    #[test]
    fn cancelling_sum() {
        let a = rf(&[1], &[1, 1]);
        let b = rf(&[0, 1], &[1, 1]);
        let s = &a + &b;
        assert_eq!(s, RatFunc::one());
        assert!(s.is_polynomial());
    }

    #[test]
    fn multiplicative_identity() {
        let a = rf(&[3, 0, 2], &[5, 7]);
        assert_eq!(&a * &RatFunc::one(), a);
    }

    #[test]
    fn construction_reduces() {
        let f = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(f, RatFunc::from(p(&[1, 1])));
        let g = rf(&[2], &[4, 2]);
        assert_eq!(g.num(), &p(&[1]));
        assert_eq!(g.den(), &p(&[2, 1]));
        assert_canonical(&g);
    }

    #[test]
    fn zero_denominator_and_divisor() {
        assert_eq!(
            RatFunc::new(p(&[1]), Poly::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(
            RatFunc::one().checked_div(&RatFunc::zero()),
            Err(Error::DivisionByZero)
        );
        assert_eq!(RatFunc::zero().recip(), Err(Error::DivisionByZero));
    }

    #[test]
    fn rendering() {
        assert_eq!(rf(&[0, 2], &[3]).to_string(), "2/3*z");
        assert_eq!(rf(&[1], &[2, 1]).to_string(), "(1)/(z + 2)");
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        prop::collection::vec(-5i64..5, 0..4)
            .prop_map(|cs| Poly::from_coeffs(cs.into_iter().map(Rational::from).collect()))
    }

    fn small_ratfunc() -> impl Strategy<Value = RatFunc> {
        (small_poly(), small_poly())
            .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
            .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
    }

    proptest! {
        #[test]
        fn operations_stay_canonical(a in small_ratfunc(), b in small_ratfunc()) {
            for v in [&a + &b, &a - &b, &a * &b] {
                assert_canonical(&v);
            }
            if let Ok(q) = a.checked_div(&b) {
                assert_canonical(&q);
                prop_assert_eq!(&q * &b, a.clone());
            }
            assert_canonical(&a.pow(3));
        }

        // structural equality agrees with cross-multiplication
        #[test]
        fn equality_is_structural(n1 in small_poly(), d1 in small_poly(), n2 in small_poly(), d2 in small_poly(), k in small_poly()) {
            prop_assume!(!d1.is_zero() && !d2.is_zero() && !k.is_zero());
            let a = RatFunc::new(n1.clone(), d1.clone()).unwrap();
            let b = RatFunc::new(n2.clone(), d2.clone()).unwrap();
            prop_assert_eq!(a == b, &n1 * &d2 == &n2 * &d1);
            let a_scaled = RatFunc::new(&n1 * &k, &d1 * &k).unwrap();
            prop_assert_eq!(a_scaled, a);
        }
    }
}
