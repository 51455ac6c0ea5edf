//! Both sides of every hook length identity, evaluated exactly.
//!
//! For a family `(s, m)` and trees with `n` vertices:
//!
//! * `p_n = sum_T w(T) prod_v 1 / (h_v m^(h_v - 1))`, claimed equal to `s^(n-1) / n!`;
//! * `q_n = sum_T w(T) prod_v (z + h_v)^(h_v - 1) / (h_v (m z + h_v - 1)^(h_v - 2))`,
//!   claimed equal to `s^(n-1) m^n z (z + n)^(n-1) / n!`.
//!
//! Each left side is computed two independent ways: by summing over every
//! enumerated tree, and by the root-decomposition recursion over
//! compositions of `n - 1`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{factorial, Poly, RatFunc, Rational};
use crate::trees::{enumerate_ordered, weight, FamilyParams, OrderedTree};

fn nonempty(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::EmptyTree)
    } else {
        Ok(())
    }
}

/// `z + c`
fn z_plus(c: i64) -> Poly {
    Poly::linear(Rational::one(), Rational::from(c))
}

/// `m z + c`
fn mz_plus(m: &Rational, c: i64) -> Poly {
    Poly::linear(m.clone(), Rational::from(c))
}

/// One summand of `p_n`: `w(T) prod_v 1 / (h_v m^(h_v - 1))`.
pub fn p_term(tree: &OrderedTree, fam: &FamilyParams) -> Rational {
    let w = weight(tree, fam);
    if w.is_zero() {
        return w;
    }
    let den: Rational = tree
        .hook_lengths()
        .hooks
        .iter()
        .map(|&h| Rational::from(h as i64) * fam.m().powu(h - 1))
        .product();
    w / den
}

pub fn p_direct(n: usize, fam: &FamilyParams) -> Result<Rational> {
    Ok(enumerate_ordered(n)?.iter().map(|t| p_term(t, fam)).sum())
}

/// `s^(n-1) / n!`
pub fn p_closed(n: usize, fam: &FamilyParams) -> Result<Rational> {
    nonempty(n)?;
    Ok(fam.s().powu(n as u32 - 1) / factorial(n as u32))
}

/// `result[d]` = sum over compositions `(j_1..j_d)` of `total` of
/// `values[j_1] * ... * values[j_d]`, for `d = 0..=total`. `values[0]` is
/// never read.
fn composition_sums<T>(values: &[T], total: usize) -> Vec<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    // row[k] = sum over compositions of k into the current number of parts
    let mut row: Vec<T> = (0..=total).map(|_| T::zero()).collect();
    row[0] = T::one();
    let mut out = vec![row[total].clone()];
    for _ in 1..=total {
        let mut next: Vec<T> = (0..=total).map(|_| T::zero()).collect();
        for (k, slot) in next.iter_mut().enumerate().skip(1) {
            for j in 1..=k {
                if !row[k - j].is_zero() {
                    *slot = slot.clone() + &values[j] * &row[k - j];
                }
            }
        }
        row = next;
        out.push(row[total].clone());
    }
    out
}

/// `p_n` by the root recursion
/// `p_n = 1/(n m^(n-1)) sum_d binom(m, d) s^d sum_(j) p_{j_1} ... p_{j_d}`.
pub fn p_recursive(n: usize, fam: &FamilyParams) -> Result<Rational> {
    nonempty(n)?;
    let factors = fam.degree_factors(n);
    // p[0] is a placeholder so that p[j] is p_j
    let mut p = vec![Rational::zero(), Rational::one()];
    for k in 2..=n {
        let sums = composition_sums(&p, k - 1);
        let inner: Rational = (1..k).map(|d| &factors[d] * &sums[d]).sum();
        let scale = Rational::from(k as i64) * fam.m().powu(k as u32 - 1);
        p.push(inner / scale);
    }
    Ok(p.swap_remove(n))
}

/// Per-vertex factor of `q_n` for hook `h`, with the exponent of
/// `(m z + h - 1)` moved to whichever side keeps it non-negative:
/// `(z+h)^(h-1) (mz+h-1)^max(0,2-h) / (h (mz+h-1)^max(0,h-2))`.
fn q_factor(h: u32, m: &Rational) -> (Poly, Poly) {
    let shifted = mz_plus(m, h as i64 - 1);
    let num = z_plus(h as i64).pow(h - 1) * shifted.pow(2u32.saturating_sub(h));
    let den = shifted
        .pow(h.saturating_sub(2))
        .scale(&Rational::from(h as i64));
    (num, den)
}

/// Unreduced `(numerator, denominator)` of one summand of `q_n`.
fn q_term_parts(tree: &OrderedTree, fam: &FamilyParams) -> Option<(Poly, Poly)> {
    let w = weight(tree, fam);
    if w.is_zero() {
        return None;
    }
    Some(tree.hook_lengths().hooks.iter().fold(
        (Poly::constant(w), Poly::one()),
        |(num, den), &h| {
            let (fnum, fden) = q_factor(h, fam.m());
            (num * fnum, den * fden)
        },
    ))
}

/// One summand of `q_n`: `w(T) prod_v factor(h_v)`.
pub fn q_term(tree: &OrderedTree, fam: &FamilyParams) -> RatFunc {
    match q_term_parts(tree, fam) {
        Some((num, den)) => RatFunc::new(num, den).expect("q factors have nonzero denominators"),
        None => RatFunc::zero(),
    }
}

pub fn q_direct(n: usize, fam: &FamilyParams) -> Result<RatFunc> {
    // trees sharing a hook multiset share a denominator; add their
    // numerators before paying for any gcd
    let mut groups: Vec<(Poly, Poly)> = Vec::new();
    for tree in enumerate_ordered(n)? {
        let Some((num, den)) = q_term_parts(&tree, fam) else {
            continue;
        };
        match groups.iter_mut().find(|(d, _)| *d == den) {
            Some((_, acc)) => *acc = &*acc + &num,
            None => groups.push((den, num)),
        }
    }
    Ok(groups
        .into_iter()
        .map(|(den, num)| RatFunc::new(num, den).expect("nonzero denominator"))
        .sum())
}

/// `s^(n-1) m^n z (z+n)^(n-1) / n!`
pub fn q_closed(n: usize, fam: &FamilyParams) -> Result<RatFunc> {
    nonempty(n)?;
    let k = n as u32;
    let c = fam.s().powu(k - 1) * fam.m().powu(k) / factorial(k);
    Ok(RatFunc::from(
        (Poly::z() * z_plus(n as i64).pow(k - 1)).scale(&c),
    ))
}

/// `q_n` by the root recursion
/// `q_n = (z+n)^(n-1) / (n (mz+n-1)^(n-2)) sum_d binom(m, d) s^d sum_(j) q_{j_1} ... q_{j_d}`.
pub fn q_recursive(n: usize, fam: &FamilyParams) -> Result<RatFunc> {
    nonempty(n)?;
    let factors = fam.degree_factors(n);
    let q1 = RatFunc::from(Poly::z().scale(fam.m()));
    let mut q = vec![RatFunc::zero(), q1];
    for k in 2..=n {
        let sums = composition_sums(&q, k - 1);
        let inner: RatFunc = (1..k).map(|d| sums[d].scale(&factors[d])).sum();
        let (num, den) = q_factor(k as u32, fam.m());
        let prefactor = RatFunc::new(num, den).expect("nonzero prefactor denominator");
        q.push(prefactor * inner);
    }
    Ok(q.swap_remove(n))
}

/// `sum_T prod_v 1 / d_v!` over ordered trees with `n` vertices.
pub fn limit_identity_lhs(n: usize) -> Result<Rational> {
    let inv_fact: Vec<Rational> = (0..n as u32)
        .map(|d| factorial(d).recip().expect("factorials are nonzero"))
        .collect();
    Ok(enumerate_ordered(n)?
        .iter()
        .map(|t| {
            t.preorder()
                .map(|v| inv_fact[v.degree()].clone())
                .product::<Rational>()
        })
        .sum())
}

/// `n^(n-1) / n!`
pub fn limit_identity_rhs(n: usize) -> Result<Rational> {
    nonempty(n)?;
    Ok(Rational::from(n as i64).powu(n as u32 - 1) / factorial(n as u32))
}

/// Right side of Han's first binary-tree identity, `1 / n!`.
pub fn han_p_rhs(n: usize) -> Result<Rational> {
    nonempty(n)?;
    Ok(factorial(n as u32).recip().expect("factorials are nonzero"))
}

/// Right side of Han's second binary-tree identity, `2^n z (z+n)^(n-1) / n!`.
pub fn han_q_rhs(n: usize) -> Result<RatFunc> {
    nonempty(n)?;
    let k = n as u32;
    let c = Rational::from(2).powu(k) / factorial(k);
    Ok(RatFunc::from(
        (Poly::z() * z_plus(n as i64).pow(k - 1)).scale(&c),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `p_direct == p_closed`
    MainP,
    /// `q_direct == q_closed`
    MainQ,
    /// `p_recursive == p_direct`
    RecP,
    /// `q_recursive == q_direct`
    RecQ,
    /// binary family, `p_direct == 1/n!`
    HanP,
    /// binary family, `q_direct == 2^n z (z+n)^(n-1) / n!`
    HanQ,
    /// `sum prod 1/d_v! == n^(n-1)/n!`
    Limit,
}

impl IdentityId {
    pub const ALL: [IdentityId; 7] = [
        IdentityId::MainP,
        IdentityId::MainQ,
        IdentityId::RecP,
        IdentityId::RecQ,
        IdentityId::HanP,
        IdentityId::HanQ,
        IdentityId::Limit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::MainP => "main_p",
            IdentityId::MainQ => "main_q",
            IdentityId::RecP => "rec_p",
            IdentityId::RecQ => "rec_q",
            IdentityId::HanP => "han_p",
            IdentityId::HanQ => "han_q",
            IdentityId::Limit => "limit",
        }
    }

    /// Whether the identity is checked against a caller-chosen family.
    pub fn uses_family(self) -> bool {
        !matches!(
            self,
            IdentityId::HanP | IdentityId::HanQ | IdentityId::Limit
        )
    }

    /// The family actually used: Han's identities are about binary trees and
    /// the limit identity sums over plain ordered trees.
    pub fn effective_family(self, requested: &FamilyParams) -> FamilyParams {
        match self {
            IdentityId::HanP | IdentityId::HanQ => FamilyParams::binary(),
            IdentityId::Limit => FamilyParams::ordered(),
            _ => requested.clone(),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

/// Outcome of checking one identity at one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub family: FamilyParams,
    pub n: usize,
    pub lhs: RatFunc,
    pub rhs: RatFunc,
    pub holds: bool,
}

impl IdentityReport {
    pub fn new(id: IdentityId, family: FamilyParams, n: usize, lhs: RatFunc, rhs: RatFunc) -> Self {
        let holds = lhs == rhs;
        IdentityReport {
            id,
            family,
            n,
            lhs,
            rhs,
            holds,
        }
    }

    /// `id,s,m,n,holds,lhs,rhs`
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{}",
            self.id,
            self.family.s(),
            self.family.m(),
            self.n,
            self.holds,
            self.lhs,
            self.rhs
        )
    }
}

/// Evaluate both sides of `id` for `n = 1..=n_max`.
pub fn verify(id: IdentityId, fam: &FamilyParams, n_max: usize) -> Result<Vec<IdentityReport>> {
    nonempty(n_max)?;
    let fam = id.effective_family(fam);
    (1..=n_max)
        .map(|n| {
            let (lhs, rhs) = match id {
                IdentityId::MainP => (p_direct(n, &fam)?.into(), p_closed(n, &fam)?.into()),
                IdentityId::MainQ => (q_direct(n, &fam)?, q_closed(n, &fam)?),
                IdentityId::RecP => (p_recursive(n, &fam)?.into(), p_direct(n, &fam)?.into()),
                IdentityId::RecQ => (q_recursive(n, &fam)?, q_direct(n, &fam)?),
                IdentityId::HanP => (p_direct(n, &fam)?.into(), han_p_rhs(n)?.into()),
                IdentityId::HanQ => (q_direct(n, &fam)?, han_q_rhs(n)?),
                IdentityId::Limit => (limit_identity_lhs(n)?.into(), limit_identity_rhs(n)?.into()),
            };
            Ok(IdentityReport::new(id, fam.clone(), n, lhs, rhs))
        })
        .collect()
}

/// Aligned text table: identity, family, n, lhs, rhs, verdict.
pub fn render_table(reports: &[IdentityReport]) -> String {
    let header = ["identity", "family", "n", "lhs", "rhs", "verdict"];
    let rows: Vec<[String; 6]> = reports
        .iter()
        .map(|r| {
            [
                r.id.to_string(),
                format!("({})", r.family),
                r.n.to_string(),
                r.lhs.to_string(),
                r.rhs.to_string(),
                if r.holds { "PASS" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let mut push_row = |cells: &[&str]| {
        let line: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    push_row(&header);
    for row in &rows {
        push_row(&row.each_ref().map(String::as_str));
    }
    out
}
