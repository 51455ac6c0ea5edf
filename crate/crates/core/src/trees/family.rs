use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::{binom_general, Rational};

use super::{enumerate_ordered, OrderedTree};

/// Parameters `(s, m)` of a binomial tree family. A vertex with `d`
/// children contributes `binom(m, d) * s^d` to the weight of its tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    s: Rational,
    m: Rational,
}

impl FamilyParams {
    /// Requires `s * m > 0`, and `m` a positive integer whenever `s > 0`.
    pub fn new(s: Rational, m: Rational) -> Result<Self> {
        let invalid = |reason| Error::InvalidFamily {
            s: s.to_string(),
            m: m.to_string(),
            reason,
        };
        if !(&s * &m).is_positive() {
            return Err(invalid("s*m must be positive"));
        }
        if s.is_positive() && !m.is_integer() {
            return Err(invalid("m must be a positive integer when s > 0"));
        }
        Ok(FamilyParams { s, m })
    }

    fn from_ints(s: i64, m: i64) -> Result<Self> {
        FamilyParams::new(Rational::from(s), Rational::from(m))
    }

    /// Incomplete binary trees, `(1, 2)`.
    pub fn binary() -> Self {
        FamilyParams::kary(2).expect("valid preset")
    }

    /// Plain ordered trees, `(-1, -1)`; every weight is 1.
    pub fn ordered() -> Self {
        FamilyParams::neg_k(1).expect("valid preset")
    }

    /// Incomplete `k`-ary trees, `(1, k)`.
    pub fn kary(k: i64) -> Result<Self> {
        FamilyParams::from_ints(1, k)
    }

    /// `(-1, -k)`.
    pub fn neg_k(k: i64) -> Result<Self> {
        FamilyParams::from_ints(-1, -k)
    }

    /// `(1/m, m)`.
    pub fn recip(m: i64) -> Result<Self> {
        let m = Rational::from(m);
        let s = m.recip().map_err(|_| Error::InvalidFamily {
            s: "1/0".into(),
            m: "0".into(),
            reason: "s*m must be positive",
        })?;
        FamilyParams::new(s, m)
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    pub fn m(&self) -> &Rational {
        &self.m
    }

    /// `binom(m, d) * s^d`.
    pub fn degree_factor(&self, d: u32) -> Rational {
        binom_general(&self.m, d) * self.s.powu(d)
    }

    pub fn degree_factors(&self, max_degree: usize) -> Vec<Rational> {
        (0..=max_degree as u32)
            .map(|d| self.degree_factor(d))
            .collect()
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.s, self.m)
    }
}

impl FromStr for FamilyParams {
    type Err = Error;

    /// `s,m` as rational literals, or one of the presets `binary`,
    /// `ordered`, `kary:k`, `negk:k`, `recip:m`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some((s, m)) = text.split_once(',') {
            return FamilyParams::new(s.parse()?, m.parse()?);
        }
        let int_arg = |arg: &str| {
            arg.parse::<i64>()
                .map_err(|_| Error::UnknownPreset(text.to_string()))
        };
        match text.split_once(':') {
            None if text == "binary" => Ok(FamilyParams::binary()),
            None if text == "ordered" => Ok(FamilyParams::ordered()),
            Some(("kary", k)) => FamilyParams::kary(int_arg(k)?),
            Some(("negk", k)) => FamilyParams::neg_k(int_arg(k)?),
            Some(("recip", m)) => FamilyParams::recip(int_arg(m)?),
            _ => Err(Error::UnknownPreset(text.to_string())),
        }
    }
}

/// `w(T) = prod_v binom(m, d_v) s^{d_v}`.
pub fn weight(tree: &OrderedTree, fam: &FamilyParams) -> Rational {
    tree.preorder()
        .map(|v| fam.degree_factor(v.degree() as u32))
        .product()
}

/// Sum of `weight` over all ordered trees with `n` vertices.
pub fn weighted_count(n: usize, fam: &FamilyParams) -> Result<Rational> {
    let factors = fam.degree_factors(n);
    Ok(enumerate_ordered(n)?
        .iter()
        .map(|t| {
            t.preorder()
                .map(|v| factors[v.degree()].clone())
                .product::<Rational>()
        })
        .sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }

    fn fam(s: Rational, m: Rational) -> FamilyParams {
        FamilyParams::new(s, m).unwrap()
    }

    #[test]
    fn family_constraints() {
        assert!(FamilyParams::new(r(1, 1), r(0, 1)).is_err());
        assert!(FamilyParams::new(r(1, 1), r(-2, 1)).is_err());
        assert!(FamilyParams::new(r(1, 1), r(5, 2)).is_err());
        assert!(FamilyParams::new(r(-1, 2), r(-3, 1)).is_ok());
        assert!(FamilyParams::new(r(-1, 1), r(-1, 3)).is_ok());
        assert!(FamilyParams::new(r(1, 3), r(3, 1)).is_ok());
        match FamilyParams::new(r(2, 1), r(1, 2)) {
            Err(Error::InvalidFamily { reason, .. }) => {
                assert!(reason.contains("positive integer"))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn preset_parsing() {
        assert_eq!(
            "binary".parse::<FamilyParams>().unwrap(),
            fam(r(1, 1), r(2, 1))
        );
        assert_eq!(
            "ordered".parse::<FamilyParams>().unwrap(),
            fam(r(-1, 1), r(-1, 1))
        );
        assert_eq!(
            "kary:5".parse::<FamilyParams>().unwrap(),
            fam(r(1, 1), r(5, 1))
        );
        assert_eq!(
            "negk:3".parse::<FamilyParams>().unwrap(),
            fam(r(-1, 1), r(-3, 1))
        );
        assert_eq!(
            "recip:3".parse::<FamilyParams>().unwrap(),
            fam(r(1, 3), r(3, 1))
        );
        assert_eq!(
            "1/3,3".parse::<FamilyParams>().unwrap(),
            fam(r(1, 3), r(3, 1))
        );
        assert_eq!(
            "-1/2,-3".parse::<FamilyParams>().unwrap(),
            fam(r(-1, 2), r(-3, 1))
        );
        assert!(matches!(
            "trinary".parse::<FamilyParams>(),
            Err(Error::UnknownPreset(_))
        ));
        assert!(matches!(
            "kary:x".parse::<FamilyParams>(),
            Err(Error::UnknownPreset(_))
        ));
        assert!(matches!(
            "recip:0".parse::<FamilyParams>(),
            Err(Error::InvalidFamily { .. })
        ));
        assert!(matches!(
            "1,-1".parse::<FamilyParams>(),
            Err(Error::InvalidFamily { .. })
        ));
    }

    #[test]
    fn weights_of_named_shapes() {
        let k5 = FamilyParams::kary(5).unwrap();
        assert_eq!(weight(&OrderedTree::star(4), &k5), r(10, 1));
        assert_eq!(
            weight(&OrderedTree::path(4), &FamilyParams::binary()),
            r(8, 1)
        );
        for n in 1..=6 {
            for t in enumerate_ordered(n).unwrap() {
                assert_eq!(weight(&t, &FamilyParams::ordered()), Rational::one());
            }
        }
    }

    #[test]
    fn weighted_counts() {
        for f in [
            FamilyParams::binary(),
            FamilyParams::ordered(),
            fam(r(-1, 2), r(-3, 1)),
        ] {
            assert_eq!(weighted_count(1, &f).unwrap(), Rational::one());
        }
        // binary trees on 3 vertices: two-child root (1) plus four unary chains
        assert_eq!(weighted_count(3, &FamilyParams::binary()).unwrap(), r(5, 1));
        assert_eq!(
            weighted_count(5, &FamilyParams::ordered()).unwrap(),
            r(14, 1)
        );
    }

    #[test]
    fn unary_family_keeps_only_the_path() {
        let unary = FamilyParams::kary(1).unwrap();
        let ternary = FamilyParams::kary(3).unwrap();
        for n in 1..=8 {
            assert_eq!(weighted_count(n, &unary).unwrap(), Rational::one());
            for t in enumerate_ordered(n).unwrap() {
                let too_wide = t.preorder().any(|v| v.degree() > 3);
                assert_eq!(weight(&t, &ternary).is_zero(), too_wide);
            }
        }
    }
}
