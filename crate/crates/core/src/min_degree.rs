//! Degree-reduction and minimal-degree checks for interpolation spaces.

use alloc::vec::Vec;

use crate::conditions::{collocation_matrix_monomials, is_poised, ConditionSet};
use crate::error::{Error, Result};
use crate::linalg::{in_column_span, RationalMatrix};
use crate::monomial::{monomials_up_to, Exponent};
use crate::order_ideal::OrderIdeal;
use crate::poly::{Polynomial, Rational};
use crate::projector::{project, IdealProjector};

/// Outcome of the minimal-degree check for a range `span O`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimalDegreeReport {
    /// Largest total degree in `O`.
    pub r: u32,
    pub degree_reducing: bool,
    /// Rank of the conditions on all monomials of degree `≤ r − 1`.
    pub rank_lower: usize,
    pub n: usize,
    /// `rank_lower < n`: no poised space fits inside degree `r − 1`.
    pub minimal: bool,
}

/// `deg P x^γ ≤ |γ|` for every monomial of degree at most the largest
/// degree in the range.
pub fn is_degree_reducing(p: &IdealProjector) -> bool {
    let r = p.escalier().max_degree();
    monomials_up_to(p.dim(), r).iter().all(|gamma| {
        let img = project(
            p,
            &Polynomial::monomial(gamma.clone(), Rational::from_integer(1.into())),
        )
        .expect("same dimension");
        img.total_degree() <= i64::from(gamma.degree())
    })
}

fn lower_monomials(dim: usize, r: u32) -> Vec<Exponent> {
    if r == 0 {
        Vec::new()
    } else {
        monomials_up_to(dim, r - 1)
    }
}

/// Minimal-degree report for conditions `Λ` and a poised range `span O`.
///
/// Degree reduction is decided from the collocation matrix alone: the
/// interpolant of `x^γ` has degree `≤ |γ|` iff `Λ(x^γ)` lies in the span of
/// the columns of `O`-monomials of degree `≤ |γ|`.
pub fn minimal_degree_check(conditions: &ConditionSet, range: &OrderIdeal) -> Result<MinimalDegreeReport> {
    if range.len() != conditions.len() {
        return Err(Error::SizeMismatch {
            expected: conditions.len(),
            found: range.len(),
        });
    }
    if !is_poised(conditions, range)? {
        return Err(Error::NotPoised);
    }
    let n = conditions.len();
    let r = range.max_degree();
    let mut degree_reducing = true;
    for k in 0..=r {
        let basis: Vec<Exponent> = range.iter().filter(|e| e.degree() <= k).cloned().collect();
        let a = collocation_matrix_monomials(conditions, &basis)?;
        for gamma in monomials_up_to(conditions.dim(), k)
            .into_iter()
            .filter(|g| g.degree() == k)
        {
            let col = collocation_matrix_monomials(conditions, core::slice::from_ref(&gamma))?;
            let b: Vec<Rational> = (0..n).map(|i| col.get(i, 0).clone()).collect();
            if !in_column_span(&a, &b)? {
                degree_reducing = false;
            }
        }
    }
    let lower = lower_monomials(conditions.dim(), r);
    let rank_lower = collocation_matrix_monomials(conditions, &lower)?.rank();
    Ok(MinimalDegreeReport {
        r,
        degree_reducing,
        rank_lower,
        n,
        minimal: rank_lower < n,
    })
}

/// Minimal-degree report for a projector without explicit conditions, using
/// the coordinate functionals `f ↦ coefficient of x^β in Pf`, `β ∈ O`, which
/// have the same kernel as `P`.
pub fn minimal_degree_check_projector(p: &IdealProjector) -> MinimalDegreeReport {
    let range = p.escalier();
    let n = range.len();
    let r = range.max_degree();
    let lower = lower_monomials(p.dim(), r);
    let columns: Vec<Vec<Rational>> = lower
        .iter()
        .map(|gamma| {
            let img = project(
                p,
                &Polynomial::monomial(gamma.clone(), Rational::from_integer(1.into())),
            )
            .expect("same dimension");
            range.iter().map(|b| img.coeff(b)).collect()
        })
        .collect();
    let rank_lower = RationalMatrix::from_columns(n, columns)
        .expect("consistent sizes")
        .rank();
    MinimalDegreeReport {
        r,
        degree_reducing: is_degree_reducing(p),
        rank_lower,
        n,
        minimal: rank_lower < n,
    }
}
