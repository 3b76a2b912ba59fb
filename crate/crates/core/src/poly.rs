//! Sparse multivariate polynomials with exact rational coefficients.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialOrder};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Shorthand for the rational `num/den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A polynomial in `dim` variables.
///
/// Only nonzero coefficients are stored. Terms are kept in a `BTreeMap` keyed
/// by exponent, so iteration in reverse is descending `Lex(1)`, the canonical
/// order used for printing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    dim: usize,
    terms: BTreeMap<Exponent, Rational>,
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

impl Polynomial {
    pub fn zero(dim: usize) -> Self {
        Polynomial {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn constant(dim: usize, c: Rational) -> Self {
        Self::monomial(Exponent::zero(dim), c)
    }

    pub fn monomial(exp: Exponent, c: Rational) -> Self {
        let dim = exp.dim();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Polynomial { dim, terms }
    }

    /// The variable `x_{var+1}` (zero-based `var`).
    pub fn var(dim: usize, var: usize) -> Self {
        Self::monomial(Exponent::unit(dim, var), Rational::one())
    }

    /// Build from arbitrary terms; repeated exponents are summed and zero
    /// coefficients dropped.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut p = Polynomial::zero(dim);
        for (e, c) in terms {
            check_dim(dim, e.dim())?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (descending `Lex(1)`) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exp: &Exponent) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Exponent::zero(self.dim))
    }

    pub(crate) fn add_term(&mut self, exp: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Largest exponent under `order` together with its coefficient.
    pub fn leading_term(&self, order: MonomialOrder) -> Result<(Exponent, Rational)> {
        order.validate(self.dim)?;
        let (e, c) = self
            .terms
            .iter()
            .max_by(|a, b| order.cmp(a.0, b.0))
            .ok_or(Error::ZeroPolynomial)?;
        Ok((e.clone(), c.clone()))
    }

    pub fn leading_exponent(&self, order: MonomialOrder) -> Result<Exponent> {
        self.leading_term(order).map(|(e, _)| e)
    }

    /// Total degree, with `-1` for the zero polynomial.
    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|e| i64::from(e.degree())).max().unwrap_or(-1)
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_dim(self.dim, other.dim)?;
        let mut out = Polynomial::zero(self.dim);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ea.add(eb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    /// `c · x^exp · self`.
    pub fn mul_term(&self, exp: &Exponent, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.dim);
        }
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, v)| (e.add(exp), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut k: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one(self.dim);
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Divide by the leading coefficient under `order`.
    pub fn monic(&self, order: MonomialOrder) -> Result<Polynomial> {
        let (_, lc) = self.leading_term(order)?;
        Ok(self.scale(&lc.recip()))
    }

    /// `D^α self` with the raw (un-normalised) derivative.
    pub fn differentiate(&self, alpha: &Exponent) -> Result<Polynomial> {
        check_dim(self.dim, alpha.dim())?;
        let mut out = Polynomial::zero(self.dim);
        for (gamma, c) in &self.terms {
            if let Some(rest) = gamma.checked_sub(alpha) {
                out.add_term(rest, c * falling_factor(gamma, alpha));
            }
        }
        Ok(out)
    }

    /// Evaluate at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        check_dim(self.dim, point.len())?;
        let mut powers: Vec<Vec<Rational>> = point.iter().map(|p| alloc::vec![Rational::one(), p.clone()]).collect();
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.entries().iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let pw = &mut powers[i];
                while pw.len() <= k as usize {
                    let next = pw.last().unwrap() * &point[i];
                    pw.push(next);
                }
                t *= &pw[k as usize];
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exponents carrying a nonzero coefficient, ascending `Lex(1)`.
    pub fn support(&self) -> impl Iterator<Item = &Exponent> + '_ {
        self.terms.keys()
    }

    /// Canonical text using custom variable names.
    pub fn display_with<'a>(&'a self, names: &'a [&'a str]) -> impl fmt::Display + 'a {
        PolyDisplay {
            poly: self,
            names: Some(names),
        }
    }
}

/// `γ! / (γ-α)!`, assuming `α ≤ γ`.
fn falling_factor(gamma: &Exponent, alpha: &Exponent) -> Rational {
    let mut acc = BigInt::one();
    for (&g, &a) in gamma.entries().iter().zip(alpha.entries()) {
        for k in (g - a + 1)..=g {
            acc *= k;
        }
    }
    Rational::from_integer(acc)
}

/// Apply the differential operator `h(D) = Σ c_α D^α` to `f`.
pub fn apply_diff_operator(h: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    check_dim(h.dim, f.dim)?;
    let mut out = Polynomial::zero(f.dim);
    for (alpha, c) in &h.terms {
        for (gamma, d) in &f.terms {
            if let Some(rest) = gamma.checked_sub(alpha) {
                out.add_term(rest, c * d * falling_factor(gamma, alpha));
            }
        }
    }
    Ok(out)
}

struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: Option<&'a [&'a str]>,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.poly.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let a = c.abs();
            if e.is_zero() {
                write!(f, "{a}")?;
            } else {
                if !a.is_one() {
                    write!(f, "{a}*")?;
                }
                e.write_monomial(f, self.names)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        PolyDisplay {
            poly: self,
            names: None,
        }
        .fmt(f)
    }
}

// Operator impls panic on dimension mismatch; the `checked_*` methods report it.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial dimension mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial dimension mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial dimension mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
