//! Exponent vectors and the monomial orders used throughout the crate.

use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// A multi-index `α ∈ ℕ^d`, i.e. the monomial `x1^α1 ⋯ xd^αd`.
///
/// The derived `Ord` is plain lexicographic comparison of the entries, which
/// is exactly `Lex(1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries)
    }

    pub fn zero(dim: usize) -> Self {
        Exponent(alloc::vec![0; dim])
    }

    /// The exponent of the variable `x_{var+1}` (zero-based `var`).
    pub fn unit(dim: usize, var: usize) -> Self {
        let mut e = alloc::vec![0; dim];
        e[var] = 1;
        Exponent(e)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self ≤ other`, i.e. `x^self` divides `x^other`.
    pub fn leq(&self, other: &Exponent) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise `self ≤ other` with `self ≠ other`.
    pub fn lt(&self, other: &Exponent) -> bool {
        self.leq(other) && self != other
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`, or `None` unless `other ≤ self`.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// Coprime as monomials: no variable occurs in both.
    pub fn is_coprime(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is a pure power `x_i^k` with `k ≥ 1`, the zero-based `i`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    /// `α! = α1! ⋯ αd!`.
    pub fn factorial(&self) -> BigUint {
        let mut acc = BigUint::one();
        for &e in &self.0 {
            for k in 2..=e {
                acc *= k;
            }
        }
        acc
    }

    /// Render with the given variable names, `"1"` for the zero exponent.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        MonomialDisplay { exp: self, names }
    }

    pub(crate) fn write_monomial(&self, f: &mut fmt::Formatter<'_>, names: Option<&[&str]>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            match names {
                Some(n) => f.write_str(n[i])?,
                None => write!(f, "x{}", i + 1)?,
            }
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

struct MonomialDisplay<'a> {
    exp: &'a Exponent,
    names: &'a [&'a str],
}

impl fmt::Display for MonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.exp.write_monomial(f, Some(self.names))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_monomial(f, None)
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

impl<const N: usize> From<[u32; N]> for Exponent {
    fn from(v: [u32; N]) -> Self {
        Exponent(v.to_vec())
    }
}

/// Monomial orders.
///
/// `Lex(i)` (1-based) ranks variables cyclically as
/// `x_i ≻ … ≻ x_d ≻ x_1 ≻ … ≻ x_{i-1}`; `GradedLex` compares total degree
/// first and breaks ties with `Lex(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex(usize),
    GradedLex,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::Lex(1)
    }
}

impl MonomialOrder {
    /// `Lex(1)`, the default order.
    pub const fn lex1() -> Self {
        MonomialOrder::Lex(1)
    }

    /// `Lex(1), …, Lex(d)`.
    pub fn all_lex(dim: usize) -> Vec<MonomialOrder> {
        (1..=dim).map(MonomialOrder::Lex).collect()
    }

    /// The `d` rotated lex orders followed by `GradedLex`.
    pub fn all(dim: usize) -> Vec<MonomialOrder> {
        let mut v = Self::all_lex(dim);
        v.push(MonomialOrder::GradedLex);
        v
    }

    /// Checks that the order makes sense in `dim` variables.
    pub fn validate(self, dim: usize) -> Result<()> {
        match self {
            MonomialOrder::Lex(i) if i == 0 || i > dim => Err(Error::DimensionMismatch {
                expected: dim,
                found: i,
            }),
            _ => Ok(()),
        }
    }

    /// Compare two exponents of equal dimension. Callers that cannot
    /// guarantee matching dimensions should use [`compare_monomials`].
    pub fn cmp(self, a: &Exponent, b: &Exponent) -> Ordering {
        match self {
            MonomialOrder::Lex(i) => {
                let d = a.dim();
                let start = i - 1;
                for k in 0..d {
                    let v = (start + k) % d;
                    match a.0[v].cmp(&b.0[v]) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::GradedLex => a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)),
        }
    }

    /// A vector whose plain lexicographic order agrees with this order.
    pub fn sort_key(self, e: &Exponent) -> Vec<u32> {
        match self {
            MonomialOrder::Lex(i) => {
                let d = e.dim();
                (0..d).map(|k| e.0[(i - 1 + k) % d]).collect()
            }
            MonomialOrder::GradedLex => {
                let mut k = Vec::with_capacity(e.dim() + 1);
                k.push(e.degree());
                k.extend_from_slice(&e.0);
                k
            }
        }
    }

    /// Inverse of [`MonomialOrder::sort_key`].
    pub fn from_sort_key(self, key: &[u32]) -> Exponent {
        match self {
            MonomialOrder::Lex(i) => {
                let d = key.len();
                let mut v = alloc::vec![0; d];
                for (k, &e) in key.iter().enumerate() {
                    v[(i - 1 + k) % d] = e;
                }
                Exponent(v)
            }
            MonomialOrder::GradedLex => Exponent(key[1..].to_vec()),
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex(i) => write!(f, "lex{i}"),
            MonomialOrder::GradedLex => f.write_str("grlex"),
        }
    }
}

/// Dimension-checked comparison of two monomials under `order`.
pub fn compare_monomials(order: MonomialOrder, a: &Exponent, b: &Exponent) -> Result<Ordering> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    order.validate(a.dim())?;
    Ok(order.cmp(a, b))
}

/// Componentwise `a ≤ b` with a dimension check.
pub fn exponent_leq(a: &Exponent, b: &Exponent) -> Result<bool> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(a.leq(b))
}

/// All exponents in `dim` variables of total degree at most `max_degree`,
/// in ascending `Lex(1)` order.
pub fn monomials_up_to(dim: usize, max_degree: u32) -> Vec<Exponent> {
    let mut out = Vec::new();
    let mut cur = alloc::vec![0u32; dim];
    fn rec(out: &mut Vec<Exponent>, cur: &mut Vec<u32>, var: usize, left: u32) {
        if var == cur.len() {
            out.push(Exponent(cur.clone()));
            return;
        }
        for e in 0..=left {
            cur[var] = e;
            rec(out, cur, var + 1, left - e);
        }
        cur[var] = 0;
    }
    rec(&mut out, &mut cur, 0, max_degree);
    out.sort();
    out
}
