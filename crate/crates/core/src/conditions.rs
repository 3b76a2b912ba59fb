//! Hermite interpolation conditions and the vanishing ideal they define.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{escalier, GroebnerBasis, LexFamily};
use crate::linalg::RationalMatrix;
use crate::monomial::{Exponent, MonomialOrder};
use crate::order_ideal::{is_lower_set, OrderIdeal};
use crate::poly::{Polynomial, Rational};

/// The functional `f ↦ (D^α f)(ξ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HermiteFunctional {
    pub point: Vec<Rational>,
    pub derivative: Exponent,
}

impl HermiteFunctional {
    pub fn new(point: Vec<Rational>, derivative: Exponent) -> Result<Self> {
        if point.len() != derivative.dim() {
            return Err(Error::DimensionMismatch {
                expected: point.len(),
                found: derivative.dim(),
            });
        }
        Ok(HermiteFunctional { point, derivative })
    }

    /// Plain point evaluation.
    pub fn evaluation(point: Vec<Rational>) -> Self {
        let d = point.len();
        HermiteFunctional {
            point,
            derivative: Exponent::zero(d),
        }
    }

    pub fn dim(&self) -> usize {
        self.point.len()
    }
}

/// Hermite conditions grouped by interpolation site.
///
/// Groups are kept in input order and the flattened sequence of functionals
/// lists each group's derivatives in input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionSet {
    dim: usize,
    groups: Vec<(Vec<Rational>, Vec<Exponent>)>,
    functionals: Vec<HermiteFunctional>,
}

impl ConditionSet {
    /// Conditions given per site as `(point, derivative indices)`. Only
    /// dimensions are checked here; see [`ConditionSet::check`].
    pub fn from_groups(dim: usize, groups: Vec<(Vec<Rational>, Vec<Exponent>)>) -> Result<Self> {
        for (p, ders) in &groups {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: p.len(),
                });
            }
            if let Some(bad) = ders.iter().find(|e| e.dim() != dim) {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: bad.dim(),
                });
            }
        }
        let functionals = groups
            .iter()
            .flat_map(|(p, ders)| {
                ders.iter().map(move |a| HermiteFunctional {
                    point: p.clone(),
                    derivative: a.clone(),
                })
            })
            .collect();
        Ok(ConditionSet {
            dim,
            groups,
            functionals,
        })
    }

    /// Lagrange conditions: one evaluation per point.
    pub fn lagrange(dim: usize, points: Vec<Vec<Rational>>) -> Result<Self> {
        Self::from_groups(
            dim,
            points
                .into_iter()
                .map(|p| (p, alloc::vec![Exponent::zero(dim)]))
                .collect(),
        )
    }

    /// Regroup a flat list of functionals by site (first appearance order).
    pub fn from_functionals(dim: usize, functionals: Vec<HermiteFunctional>) -> Result<Self> {
        let mut groups: Vec<(Vec<Rational>, Vec<Exponent>)> = Vec::new();
        for f in functionals {
            if f.dim() != dim || f.derivative.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: f.dim(),
                });
            }
            match groups.iter_mut().find(|(p, _)| *p == f.point) {
                Some((_, ders)) => ders.push(f.derivative),
                None => groups.push((f.point, alloc::vec![f.derivative])),
            }
        }
        Self::from_groups(dim, groups)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.functionals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functionals.is_empty()
    }

    pub fn functionals(&self) -> &[HermiteFunctional] {
        &self.functionals
    }

    pub fn groups(&self) -> &[(Vec<Rational>, Vec<Exponent>)] {
        &self.groups
    }

    /// Distinct sites, no repeated derivative at a site, and every
    /// derivative index set a lower set.
    pub fn check(&self) -> Result<()> {
        for (i, (p, ders)) in self.groups.iter().enumerate() {
            if self.groups[..i].iter().any(|(q, _)| q == p) {
                return Err(Error::DuplicateFunctional);
            }
            let set: BTreeSet<Exponent> = ders.iter().cloned().collect();
            if set.len() != ders.len() {
                return Err(Error::DuplicateFunctional);
            }
            if !is_lower_set(&set) {
                return Err(Error::NotLowerSet);
            }
        }
        Ok(())
    }
}

/// Verdict form of [`ConditionSet::check`].
pub fn validate_conditions(conditions: &ConditionSet) -> bool {
    conditions.check().is_ok()
}

/// `(D^α f)(ξ)` without the `1/α!` normalisation.
pub fn apply_functional(functional: &HermiteFunctional, f: &Polynomial) -> Result<Rational> {
    if functional.dim() != f.dim() {
        return Err(Error::DimensionMismatch {
            expected: functional.dim(),
            found: f.dim(),
        });
    }
    f.differentiate(&functional.derivative)?.evaluate(&functional.point)
}

/// `(D^α x^γ)(ξ)` computed directly from the exponents.
fn apply_to_monomial(functional: &HermiteFunctional, gamma: &Exponent) -> Rational {
    let Some(rest) = gamma.checked_sub(&functional.derivative) else {
        return Rational::zero();
    };
    let mut acc = Rational::one();
    for ((&g, &r), x) in gamma.entries().iter().zip(rest.entries()).zip(&functional.point) {
        for k in (r + 1)..=g {
            acc *= Rational::from_integer(k.into());
        }
        for _ in 0..r {
            acc *= x;
        }
    }
    acc
}

fn values_on_monomial(conditions: &ConditionSet, gamma: &Exponent) -> Vec<Rational> {
    conditions
        .functionals
        .iter()
        .map(|l| apply_to_monomial(l, gamma))
        .collect()
}

/// The `n × k` matrix with entry `(i, j) = λ_i(f_j)`.
pub fn collocation_matrix(conditions: &ConditionSet, polys: &[Polynomial]) -> Result<RationalMatrix> {
    let columns = polys
        .iter()
        .map(|f| {
            conditions
                .functionals
                .iter()
                .map(|l| apply_functional(l, f))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    RationalMatrix::from_columns(conditions.len(), columns)
}

/// Collocation matrix on a list of monomials.
pub fn collocation_matrix_monomials(conditions: &ConditionSet, monomials: &[Exponent]) -> Result<RationalMatrix> {
    if let Some(bad) = monomials.iter().find(|e| e.dim() != conditions.dim) {
        return Err(Error::DimensionMismatch {
            expected: conditions.dim,
            found: bad.dim(),
        });
    }
    let columns = monomials.iter().map(|e| values_on_monomial(conditions, e)).collect();
    RationalMatrix::from_columns(conditions.len(), columns)
}

/// Unique solvability of interpolation from `span{x^β : β ∈ O}`.
pub fn is_poised(conditions: &ConditionSet, range: &OrderIdeal) -> Result<bool> {
    if range.len() != conditions.len() {
        return Err(Error::SizeMismatch {
            expected: conditions.len(),
            found: range.len(),
        });
    }
    let monomials: Vec<Exponent> = range.iter().cloned().collect();
    Ok(collocation_matrix_monomials(conditions, &monomials)?.is_invertible())
}

/// Reduced Gröbner basis of `ker Λ = {f : λ(f) = 0 for all λ ∈ Λ}`.
///
/// Monomials are visited in increasing `order`, starting from `1` and
/// extending only accepted (standard) monomials by one variable. A monomial
/// whose value vector is independent of those already accepted becomes
/// standard; otherwise the dependency gives the basis element
/// `x^γ − Σ c_β x^β` whose tail lies on the escalier. Monomials divisible by
/// a leading monomial already found are skipped.
pub fn moller_vanishing_gb(conditions: &ConditionSet, order: MonomialOrder) -> Result<GroebnerBasis> {
    conditions.check()?;
    let dim = conditions.dim;
    order.validate(dim)?;
    let n = conditions.len();

    // Echelon rows: (pivot column, value vector, polynomial with those values).
    let mut echelon: Vec<(usize, Vec<Rational>, Polynomial)> = Vec::new();
    let mut leads: Vec<Exponent> = Vec::new();
    let mut generators: Vec<Polynomial> = Vec::new();
    let mut candidates: BTreeSet<Vec<u32>> = BTreeSet::new();
    candidates.insert(order.sort_key(&Exponent::zero(dim)));

    while let Some(key) = candidates.pop_first() {
        let t = order.from_sort_key(&key);
        if leads.iter().any(|l| l.leq(&t)) {
            continue;
        }
        let mut w = values_on_monomial(conditions, &t);
        let mut p = Polynomial::monomial(t.clone(), Rational::one());
        for (piv, v, q) in &echelon {
            if w[*piv].is_zero() {
                continue;
            }
            let f = &w[*piv] / &v[*piv];
            for (wi, vi) in w.iter_mut().zip(v) {
                *wi -= &f * vi;
            }
            p = &p - &q.scale(&f);
        }
        match w.iter().position(|x| !x.is_zero()) {
            None => {
                leads.push(t);
                generators.push(p);
            }
            Some(piv) => {
                echelon.push((piv, w, p));
                for i in 0..dim {
                    let next = t.add(&Exponent::unit(dim, i));
                    candidates.insert(order.sort_key(&next));
                }
            }
        }
    }
    if echelon.len() < n {
        return Err(Error::DependentConditions {
            rank: echelon.len(),
            count: n,
        });
    }
    Ok(GroebnerBasis::from_reduced_parts(order, generators))
}

/// Escaliers of `ker Λ` under `Lex(1), …, Lex(d)`, each from its own Möller run.
pub fn lex_escaliers(conditions: &ConditionSet) -> Result<LexFamily> {
    let escaliers = MonomialOrder::all_lex(conditions.dim)
        .into_iter()
        .map(|o| moller_vanishing_gb(conditions, o).and_then(|g| escalier(&g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LexFamily::from_escaliers(escaliers))
}
