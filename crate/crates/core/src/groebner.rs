//! Multivariate division, Buchberger's algorithm and Gröbner escaliers.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialOrder};
use crate::order_ideal::{escalier_from_corners, CornerSet, OrderIdeal};
use crate::poly::{Polynomial, Rational};

/// A Gröbner basis together with the order it was computed for.
///
/// Generators are monic and, whenever produced by this crate, sorted
/// descending by leading exponent under `Lex(1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    order: MonomialOrder,
    generators: Vec<Polynomial>,
    leading: Vec<Exponent>,
    reduced: bool,
}

/// Outcome of dividing `f` by a basis: `f = Σ q_j g_j + remainder`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult {
    pub quotients: Vec<Polynomial>,
    pub remainder: Polynomial,
}

impl GroebnerBasis {
    /// Wraps generators that the caller already knows to form a reduced basis
    /// (used by the Möller construction, which produces one directly).
    pub(crate) fn from_reduced_parts(order: MonomialOrder, mut generators: Vec<Polynomial>) -> Self {
        sort_canonical(&mut generators, order);
        let leading = generators
            .iter()
            .map(|g| g.leading_exponent(order).expect("nonzero"))
            .collect();
        GroebnerBasis {
            order,
            generators,
            leading,
            reduced: true,
        }
    }

    /// Checks that monic `generators` form a Gröbner basis under `order` (every
    /// S-polynomial reduces to zero) and records whether it is reduced.
    pub fn from_generators(order: MonomialOrder, mut generators: Vec<Polynomial>) -> Result<Self> {
        let dim = common_dim(&generators)?;
        order.validate(dim)?;
        for g in generators.iter_mut() {
            *g = g.monic(order)?;
        }
        if !is_groebner(&generators, order) {
            return Err(Error::NotAGroebnerBasis);
        }
        sort_canonical(&mut generators, order);
        let leading: Vec<Exponent> = generators
            .iter()
            .map(|g| g.leading_exponent(order).expect("nonzero"))
            .collect();
        let reduced = is_inter_reduced(&generators, &leading);
        Ok(GroebnerBasis {
            order,
            generators,
            leading,
            reduced,
        })
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    pub fn dim(&self) -> usize {
        self.generators.first().map_or(0, Polynomial::dim)
    }

    /// Leading exponents, aligned with [`GroebnerBasis::generators`].
    pub fn leading_exponents(&self) -> &[Exponent] {
        &self.leading
    }

    /// Each variable appears as a pure power among the leading monomials.
    pub fn is_zero_dimensional(&self) -> bool {
        let mut seen = alloc::vec![false; self.dim()];
        for e in &self.leading {
            if e.is_zero() {
                return true;
            }
            if let Some(i) = e.pure_power_var() {
                seen[i] = true;
            }
        }
        seen.iter().all(|&s| s)
    }
}

fn common_dim(polys: &[Polynomial]) -> Result<usize> {
    let first = polys.first().ok_or(Error::ZeroPolynomial)?;
    let dim = first.dim();
    for p in polys {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
    }
    Ok(dim)
}

fn sort_canonical(gens: &mut [Polynomial], order: MonomialOrder) {
    gens.sort_by_cached_key(|g| core::cmp::Reverse(g.leading_exponent(order).expect("nonzero")));
}

fn is_inter_reduced(gens: &[Polynomial], leading: &[Exponent]) -> bool {
    gens.iter().enumerate().all(|(j, g)| {
        g.support()
            .all(|e| leading.iter().enumerate().all(|(k, lm)| k == j || !lm.leq(e)))
    })
}

struct Divisor<'a> {
    lead: Exponent,
    lead_coeff: Rational,
    tail: Vec<(&'a Exponent, &'a Rational)>,
}

fn divisors<'a>(gens: &'a [Polynomial], order: MonomialOrder) -> Vec<Divisor<'a>> {
    gens.iter()
        .map(|g| {
            let (lead, lead_coeff) = g.leading_term(order).expect("nonzero divisor");
            let tail = g.terms().filter(|(e, _)| **e != lead).collect();
            Divisor { lead, lead_coeff, tail }
        })
        .collect()
}

/// Division with remainder. Repeatedly eliminates the largest monomial of the
/// running dividend, using the lowest-index generator whose leading monomial
/// divides it; monomials no leading monomial divides move to the remainder.
pub(crate) fn divide(
    f: &Polynomial,
    gens: &[Polynomial],
    order: MonomialOrder,
    want_quotients: bool,
) -> ReductionResult {
    let dim = f.dim();
    let divs = divisors(gens, order);
    let mut work: BTreeMap<Vec<u32>, Rational> = f.terms().map(|(e, c)| (order.sort_key(e), c.clone())).collect();
    let mut quotients: Vec<Vec<(Exponent, Rational)>> = alloc::vec![Vec::new(); gens.len()];
    let mut remainder = Vec::new();
    while let Some((key, c)) = work.pop_last() {
        let e = order.from_sort_key(&key);
        match divs.iter().position(|d| d.lead.leq(&e)) {
            Some(j) => {
                let d = &divs[j];
                let shift = e.checked_sub(&d.lead).expect("divides");
                let factor = &c / &d.lead_coeff;
                for (b, cb) in &d.tail {
                    let k = order.sort_key(&b.add(&shift));
                    let v = work.entry(k).or_insert_with(Rational::zero);
                    *v -= &factor * *cb;
                    if v.is_zero() {
                        let k = order.sort_key(&b.add(&shift));
                        work.remove(&k);
                    }
                }
                if want_quotients {
                    quotients[j].push((shift, factor));
                }
            }
            None => remainder.push((e, c)),
        }
    }
    ReductionResult {
        quotients: quotients
            .into_iter()
            .map(|q| Polynomial::from_terms(dim, q).expect("same dimension"))
            .collect(),
        remainder: Polynomial::from_terms(dim, remainder).expect("same dimension"),
    }
}

/// Divide `f` by the generators of `basis` under the basis order.
pub fn reduce(f: &Polynomial, basis: &GroebnerBasis) -> Result<ReductionResult> {
    if basis.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    if f.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: f.dim(),
        });
    }
    Ok(divide(f, &basis.generators, basis.order, true))
}

/// Normal form of `f` modulo `gens` under `order`.
pub fn normal_form(f: &Polynomial, gens: &[Polynomial], order: MonomialOrder) -> Polynomial {
    divide(f, gens, order, false).remainder
}

/// `S(g, h) = (L/lt(g))·g − (L/lt(h))·h` with `L` the lcm of the leading monomials.
pub fn s_polynomial(g: &Polynomial, h: &Polynomial, order: MonomialOrder) -> Result<Polynomial> {
    if g.dim() != h.dim() {
        return Err(Error::DimensionMismatch {
            expected: g.dim(),
            found: h.dim(),
        });
    }
    let (lg, cg) = g.leading_term(order)?;
    let (lh, ch) = h.leading_term(order)?;
    let l = lg.lcm(&lh);
    let a = g.mul_term(&l.checked_sub(&lg).expect("lcm"), &cg.recip());
    let b = h.mul_term(&l.checked_sub(&lh).expect("lcm"), &ch.recip());
    Ok(&a - &b)
}

/// Every S-polynomial reduces to zero (coprime pairs are skipped by
/// Buchberger's first criterion).
pub fn is_groebner(gens: &[Polynomial], order: MonomialOrder) -> bool {
    for i in 0..gens.len() {
        for j in (i + 1)..gens.len() {
            let li = gens[i].leading_exponent(order).expect("nonzero");
            let lj = gens[j].leading_exponent(order).expect("nonzero");
            if li.is_coprime(&lj) {
                continue;
            }
            let s = s_polynomial(&gens[i], &gens[j], order).expect("nonzero");
            if !normal_form(&s, gens, order).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Buchberger's algorithm followed by minimisation and inter-reduction,
/// yielding the unique reduced Gröbner basis of the ideal generated by `input`.
///
/// Pairs are processed by the normal strategy (smallest lcm first) and pairs
/// with coprime leading monomials are discarded.
pub fn buchberger_reduced(input: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis> {
    let dim = common_dim(input)?;
    order.validate(dim)?;
    let mut gens: Vec<Polynomial> = Vec::new();
    for f in input.iter().filter(|f| !f.is_zero()) {
        let r = normal_form(f, &gens, order);
        if !r.is_zero() {
            gens.push(r.monic(order)?);
        }
    }
    if gens.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    let mut leads: Vec<Exponent> = gens
        .iter()
        .map(|g| g.leading_exponent(order).expect("nonzero"))
        .collect();
    let mut pairs: Vec<(usize, usize, Exponent)> = Vec::new();
    for j in 0..gens.len() {
        for i in 0..j {
            pairs.push((i, j, leads[i].lcm(&leads[j])));
        }
    }
    while !pairs.is_empty() {
        let best = pairs
            .iter()
            .enumerate()
            .min_by(|a, b| {
                order
                    .cmp(&a.1 .2, &b.1 .2)
                    .then_with(|| (a.1 .0, a.1 .1).cmp(&(b.1 .0, b.1 .1)))
            })
            .map(|(k, _)| k)
            .expect("nonempty");
        let (i, j, _) = pairs.swap_remove(best);
        if leads[i].is_coprime(&leads[j]) {
            continue;
        }
        let s = s_polynomial(&gens[i], &gens[j], order)?;
        let r = normal_form(&s, &gens, order);
        if r.is_zero() {
            continue;
        }
        let r = r.monic(order)?;
        let lr = r.leading_exponent(order)?;
        let n = gens.len();
        for (k, lk) in leads.iter().enumerate() {
            pairs.push((k, n, lk.lcm(&lr)));
        }
        gens.push(r);
        leads.push(lr);
    }

    // Keep one generator per minimal leading monomial.
    let mut keep: Vec<usize> = Vec::new();
    for j in 0..gens.len() {
        let redundant = (0..gens.len()).any(|k| k != j && leads[k].leq(&leads[j]) && (leads[k] != leads[j] || k < j));
        if !redundant {
            keep.push(j);
        }
    }
    let minimal: Vec<Polynomial> = keep.iter().map(|&j| gens[j].clone()).collect();
    let mut reduced = Vec::with_capacity(minimal.len());
    for (j, g) in minimal.iter().enumerate() {
        let (lead, _) = g.leading_term(order)?;
        let tail = g.checked_sub(&Polynomial::monomial(lead.clone(), Rational::one()))?;
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != j)
            .map(|(_, p)| p.clone())
            .collect();
        let tail = normal_form(&tail, &others, order);
        reduced.push(&Polynomial::monomial(lead, Rational::one()) + &tail);
    }
    Ok(GroebnerBasis::from_reduced_parts(order, reduced))
}

/// Standard monomials of a zero-dimensional ideal given by a Gröbner basis.
pub fn escalier(basis: &GroebnerBasis) -> Result<OrderIdeal> {
    if !basis.is_zero_dimensional() {
        return Err(Error::NotZeroDimensional);
    }
    let corners = CornerSet::new(basis.dim(), basis.leading.iter().cloned())?;
    escalier_from_corners(&corners)
}

/// True iff every generator has the shape `x^α − Σ_{β < α} c_β x^β` with
/// `β < α` componentwise, which makes the basis reduced under every
/// monomial order.
pub fn classify_universal(basis: &GroebnerBasis) -> bool {
    basis
        .generators
        .iter()
        .zip(&basis.leading)
        .all(|(g, lead)| g.support().all(|e| e == lead || e.lt(lead)))
}

/// Escaliers of one ideal under the rotated lex orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexFamily {
    /// `escaliers[i]` is the escalier under `Lex(i + 1)`.
    pub escaliers: Vec<OrderIdeal>,
    pub all_equal: bool,
}

impl LexFamily {
    pub fn from_escaliers(escaliers: Vec<OrderIdeal>) -> Self {
        let all_equal = escaliers.windows(2).all(|w| w[0] == w[1]);
        LexFamily { escaliers, all_equal }
    }
}

/// Escaliers of `⟨generators⟩` under `Lex(1), …, Lex(d)`.
pub fn lex_escalier_family(generators: &[Polynomial]) -> Result<LexFamily> {
    let dim = common_dim(generators)?;
    let escaliers = MonomialOrder::all_lex(dim)
        .into_iter()
        .map(|o| buchberger_reduced(generators, o).and_then(|g| escalier(&g)))
        .collect::<Result<Vec<_>>>()?;
    Ok(LexFamily::from_escaliers(escaliers))
}

/// Compare two bases as sets of polynomials.
pub fn same_generators(a: &GroebnerBasis, b: &GroebnerBasis) -> bool {
    let mut x: Vec<&Polynomial> = a.generators.iter().collect();
    let mut y: Vec<&Polynomial> = b.generators.iter().collect();
    let key = |p: &&Polynomial| p.leading_exponent(MonomialOrder::Lex(1)).expect("nonzero");
    x.sort_by_key(key);
    y.sort_by_key(key);
    x == y
}
