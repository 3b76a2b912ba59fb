//! Ideal projectors whose kernel has a universal reduced Gröbner basis, the
//! error decomposition `f − Pf = Σ A_j(f) g_j`, and the dual-pairing
//! certificate for a good error formula.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::conditions::{moller_vanishing_gb, ConditionSet};
use crate::error::{Error, Result};
use crate::groebner::{classify_universal, divide, escalier, GroebnerBasis};
use crate::monomial::{monomials_up_to, Exponent, MonomialOrder};
use crate::order_ideal::{escalier_from_corners, CornerSet, OrderIdeal};
use crate::poly::{apply_diff_operator, Polynomial, Rational};

/// An ideal projector `P` with `ker P = ⟨g_1, …, g_m⟩` and
/// `ran P = span{x^β : β ∈ O}`, where each `g_j = x^α(j) − Σ_{β<α(j)} c_{j,β} x^β`.
///
/// The basis is stored for `Lex(1)`; by the shape condition it is the
/// reduced Gröbner basis for every monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealProjector {
    basis: GroebnerBasis,
    escalier: OrderIdeal,
    /// `corners[j]` is the leading exponent of `basis.generators()[j]`.
    corners: Vec<Exponent>,
    /// `tails[j]` lists `(β, c_{j,β})`.
    tails: Vec<Vec<(Exponent, Rational)>>,
}

impl IdealProjector {
    /// Wrap a reduced basis after checking the universal shape.
    pub fn from_basis(basis: GroebnerBasis) -> Result<Self> {
        if !basis.is_reduced() || !classify_universal(&basis) {
            return Err(Error::NotInUniversalClass);
        }
        let escalier = escalier(&basis)?;
        let order = basis.order();
        let corners = basis.leading_exponents().to_vec();
        let tails = basis
            .generators()
            .iter()
            .zip(&corners)
            .map(|(g, a)| {
                g.terms()
                    .filter(|(e, _)| *e != a)
                    .map(|(e, c)| (e.clone(), -c.clone()))
                    .collect()
            })
            .collect();
        let basis = if order == MonomialOrder::Lex(1) {
            basis
        } else {
            GroebnerBasis::from_generators(MonomialOrder::Lex(1), basis.generators().to_vec())?
        };
        Ok(IdealProjector {
            basis,
            escalier,
            corners,
            tails,
        }
        .realigned())
    }

    // Keep corners/tails aligned with the basis after re-sorting.
    fn realigned(mut self) -> Self {
        let order: Vec<usize> = self
            .basis
            .leading_exponents()
            .iter()
            .map(|e| self.corners.iter().position(|c| c == e).expect("same corners"))
            .collect();
        self.corners = order.iter().map(|&k| self.corners[k].clone()).collect();
        self.tails = order.iter().map(|&k| self.tails[k].clone()).collect();
        self
    }

    pub fn basis(&self) -> &GroebnerBasis {
        &self.basis
    }

    pub fn generators(&self) -> &[Polynomial] {
        self.basis.generators()
    }

    pub fn escalier(&self) -> &OrderIdeal {
        &self.escalier
    }

    /// The corners `α(1), …, α(m)`, aligned with [`IdealProjector::generators`].
    pub fn corners(&self) -> &[Exponent] {
        &self.corners
    }

    pub fn corner_set(&self) -> &CornerSet {
        self.escalier.corner_set()
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// `Pf` under an explicit order; equal to [`project`] for every order.
    pub fn project_under(&self, f: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
        self.check_dim(f)?;
        order.validate(self.dim())?;
        Ok(divide(f, self.basis.generators(), order, false).remainder)
    }

    fn check_dim(&self, f: &Polynomial) -> Result<()> {
        if f.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: f.dim(),
            });
        }
        Ok(())
    }
}

/// Projector interpolating the Hermite conditions `Λ`, provided `ker Λ` has
/// a universal reduced basis.
pub fn projector_from_conditions(conditions: &ConditionSet) -> Result<IdealProjector> {
    let gb = moller_vanishing_gb(conditions, MonomialOrder::Lex(1))?;
    IdealProjector::from_basis(gb)
}

/// Projector defined by `P x^α = image` on each corner `α`.
///
/// Images must be supported on standard monomials strictly below their
/// corner; the resulting generators must form a Gröbner basis.
pub fn projector_from_corner_images(dim: usize, images: Vec<(Exponent, Polynomial)>) -> Result<IdealProjector> {
    let corners = CornerSet::new(dim, images.iter().map(|(a, _)| a.clone()))?;
    if corners.len() != images.len() {
        return Err(Error::DuplicateFunctional);
    }
    let range = escalier_from_corners(&corners)?;
    let mut generators = Vec::with_capacity(images.len());
    for (alpha, image) in images {
        if image.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: image.dim(),
            });
        }
        if !image.support().all(|b| b.lt(&alpha) && range.contains(b)) {
            return Err(Error::ShapeViolation);
        }
        generators.push(&Polynomial::monomial(alpha, Rational::one()) - &image);
    }
    let basis = GroebnerBasis::from_generators(MonomialOrder::Lex(1), generators)?;
    IdealProjector::from_basis(basis)
}

/// `Pf`, the normal form of `f` modulo the kernel basis.
pub fn project(p: &IdealProjector, f: &Polynomial) -> Result<Polynomial> {
    p.project_under(f, MonomialOrder::Lex(1))
}

/// Coefficients `A_j(f)` with `Σ A_j(f) g_j = f − Pf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorDecomposition {
    pub coefficients: Vec<Polynomial>,
    /// Whether `Σ A_j(f) g_j + Pf = f` was confirmed exactly.
    pub residual_check: bool,
}

/// Memoised per-monomial decomposition `x^γ − P x^γ = Σ_j A_{γ,j} g_j`.
///
/// For `γ` on the escalier all `A_{γ,j}` vanish. Otherwise take the lowest
/// `j` with `α(j) ≤ γ`, write `δ = γ − α(j)`, and use
/// `x^γ = x^δ g_j + Σ_β c_{j,β} x^{β+δ}`, so that
/// `A_{γ,·} = x^δ e_j + Σ_β c_{j,β} A_{β+δ,·}`. Each `β + δ < γ`
/// componentwise, so the recursion terminates and `A_{γ,k} ≠ 0` only when
/// `α(k) ≤ γ`.
pub struct Decomposer<'a> {
    projector: &'a IdealProjector,
    memo: BTreeMap<Exponent, Vec<Polynomial>>,
}

impl<'a> Decomposer<'a> {
    pub fn new(projector: &'a IdealProjector) -> Self {
        Decomposer {
            projector,
            memo: BTreeMap::new(),
        }
    }

    pub fn monomial(&mut self, gamma: &Exponent) -> Vec<Polynomial> {
        if let Some(v) = self.memo.get(gamma) {
            return v.clone();
        }
        let p = self.projector;
        let dim = p.dim();
        let mut out = alloc::vec![Polynomial::zero(dim); p.corners.len()];
        if !p.escalier.contains(gamma) {
            let j = p
                .corners
                .iter()
                .position(|a| a.leq(gamma))
                .expect("some corner divides a non-standard monomial");
            let delta = gamma.checked_sub(&p.corners[j]).expect("divides");
            out[j] = Polynomial::monomial(delta.clone(), Rational::one());
            for (beta, c) in &p.tails[j] {
                let sub = self.monomial(&beta.add(&delta));
                for (o, s) in out.iter_mut().zip(sub) {
                    if !s.is_zero() {
                        *o = &*o + &s.scale(c);
                    }
                }
            }
        }
        self.memo.insert(gamma.clone(), out.clone());
        out
    }

    pub fn polynomial(&mut self, f: &Polynomial) -> Vec<Polynomial> {
        let mut acc = alloc::vec![Polynomial::zero(f.dim()); self.projector.corners.len()];
        for (gamma, c) in f.terms() {
            for (a, s) in acc.iter_mut().zip(self.monomial(gamma)) {
                if !s.is_zero() {
                    *a = &*a + &s.scale(c);
                }
            }
        }
        acc
    }
}

pub fn error_decompose(p: &IdealProjector, f: &Polynomial) -> Result<ErrorDecomposition> {
    p.check_dim(f)?;
    let coefficients = Decomposer::new(p).polynomial(f);
    let mut sum = project(p, f)?;
    for (a, g) in coefficients.iter().zip(p.generators()) {
        sum = &sum + &(a * g);
    }
    Ok(ErrorDecomposition {
        residual_check: sum == *f,
        coefficients,
    })
}

/// Evidence that `P` admits a good error formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodFormulaCertificate {
    /// `H_j = x^α(j) / α(j)!`.
    pub duals: Vec<Polynomial>,
    /// `H_j(D) g_k = δ_{j,k}` for all `j, k`.
    pub kronecker_ok: bool,
    /// `A_j(x^γ) = 0` whenever `α(j) ≰ γ`, for all `|γ| ≤ checked_degree_bound`.
    pub kernel_containment_ok: bool,
    pub checked_degree_bound: u32,
}

impl GoodFormulaCertificate {
    pub fn ok(&self) -> bool {
        self.kronecker_ok && self.kernel_containment_ok
    }
}

/// Default truncation for [`certify_good_formula`]: max corner degree + 3.
pub fn default_degree_bound(p: &IdealProjector) -> u32 {
    p.corners.iter().map(Exponent::degree).max().unwrap_or(0) + 3
}

/// Build the duals `H_j`, check the pairing with the basis and check
/// `ker H_j(D) ⊆ ker A_j` on all monomials up to `degree_bound` (raised to
/// the largest corner degree if smaller).
pub fn certify_good_formula(p: &IdealProjector, degree_bound: u32) -> GoodFormulaCertificate {
    let dim = p.dim();
    let duals: Vec<Polynomial> = p
        .corners
        .iter()
        .map(|a| Polynomial::monomial(a.clone(), Rational::new(One::one(), a.factorial().into())))
        .collect();
    let kronecker_ok = duals.iter().enumerate().all(|(j, h)| {
        p.generators().iter().enumerate().all(|(k, g)| {
            let v = apply_diff_operator(h, g).expect("same dimension");
            let want = if j == k { Rational::one() } else { Rational::zero() };
            v == Polynomial::constant(dim, want)
        })
    });
    let bound = degree_bound.max(p.corners.iter().map(Exponent::degree).max().unwrap_or(0));
    let mut dec = Decomposer::new(p);
    let kernel_containment_ok = monomials_up_to(dim, bound).iter().all(|gamma| {
        let a = dec.monomial(gamma);
        p.corners
            .iter()
            .zip(&a)
            .all(|(alpha, aj)| alpha.leq(gamma) || aj.is_zero())
    });
    GoodFormulaCertificate {
        duals,
        kronecker_ok,
        kernel_containment_ok,
        checked_degree_bound: bound,
    }
}

/// Residuals of `P(fg) = P(f·Pg)` and `P'(fg) = f·P'(g) + P'(f·Pg)` with `P' = I − P`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResiduals {
    pub law1: Polynomial,
    pub law2: Polynomial,
}

impl LawResiduals {
    pub fn is_zero(&self) -> bool {
        self.law1.is_zero() && self.law2.is_zero()
    }
}

pub fn check_ideal_projector_laws(p: &IdealProjector, f: &Polynomial, g: &Polynomial) -> Result<LawResiduals> {
    p.check_dim(f)?;
    p.check_dim(g)?;
    let comp = |h: &Polynomial| -> Result<Polynomial> { Ok(h - &project(p, h)?) };
    let fg = f * g;
    let pg = project(p, g)?;
    let f_pg = f * &pg;
    let law1 = &project(p, &fg)? - &project(p, &f_pg)?;
    let law2 = &(&comp(&fg)? - &(f * &comp(g)?)) - &comp(&f_pg)?;
    Ok(LawResiduals { law1, law2 })
}
