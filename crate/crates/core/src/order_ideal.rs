//! Finite order ideals of monomials (lower sets) and their corner sets.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::monomial::Exponent;

/// True iff every member's immediate divisors are members.
///
/// Checking one step down per variable suffices: closure under all divisors
/// follows by induction on total degree.
pub fn is_lower_set(set: &BTreeSet<Exponent>) -> bool {
    set.iter().all(|e| {
        (0..e.dim()).all(|i| {
            if e.entries()[i] == 0 {
                return true;
            }
            let mut v = e.entries().to_vec();
            v[i] -= 1;
            set.contains(&Exponent::new(v))
        })
    })
}

/// A finite, divisibility-closed set of monomials (an escalier).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderIdeal {
    dim: usize,
    members: BTreeSet<Exponent>,
    corners: CornerSet,
}

/// An antichain of exponents under the componentwise order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerSet {
    dim: usize,
    corners: BTreeSet<Exponent>,
}

impl OrderIdeal {
    pub fn new(dim: usize, members: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        let members: BTreeSet<Exponent> = members.into_iter().collect();
        if let Some(bad) = members.iter().find(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        if !is_lower_set(&members) {
            return Err(Error::NotLowerSet);
        }
        let corners = compute_corners(dim, &members);
        Ok(OrderIdeal { dim, members, corners })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.members.contains(e)
    }

    /// Members in ascending `Lex(1)` order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Exponent> + '_ {
        self.members.iter()
    }

    pub fn members(&self) -> &BTreeSet<Exponent> {
        &self.members
    }

    /// Maximal total degree of a member (`0` for the empty set).
    pub fn max_degree(&self) -> u32 {
        self.members.iter().map(Exponent::degree).max().unwrap_or(0)
    }

    pub fn corner_set(&self) -> &CornerSet {
        &self.corners
    }
}

fn compute_corners(dim: usize, members: &BTreeSet<Exponent>) -> CornerSet {
    let mut corners = BTreeSet::new();
    if members.is_empty() {
        corners.insert(Exponent::zero(dim));
        return CornerSet { dim, corners };
    }
    for m in members {
        for i in 0..dim {
            let mut v = m.entries().to_vec();
            v[i] += 1;
            let t = Exponent::new(v);
            if members.contains(&t) || corners.contains(&t) {
                continue;
            }
            let minimal = (0..dim).all(|j| {
                if t.entries()[j] == 0 {
                    return true;
                }
                let mut w = t.entries().to_vec();
                w[j] -= 1;
                members.contains(&Exponent::new(w))
            });
            if minimal {
                corners.insert(t);
            }
        }
    }
    CornerSet { dim, corners }
}

/// Corner set of an order ideal: the minimal monomials outside it.
pub fn corner_set(o: &OrderIdeal) -> CornerSet {
    o.corners.clone()
}

impl CornerSet {
    /// Validates dimensions and that no corner divides another.
    pub fn new(dim: usize, corners: impl IntoIterator<Item = Exponent>) -> Result<Self> {
        let corners: BTreeSet<Exponent> = corners.into_iter().collect();
        if let Some(bad) = corners.iter().find(|e| e.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: bad.dim(),
            });
        }
        for a in &corners {
            for b in &corners {
                if a != b && a.leq(b) {
                    return Err(Error::NotLowerSet);
                }
            }
        }
        Ok(CornerSet { dim, corners })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.corners.len()
    }

    pub fn is_empty(&self) -> bool {
        self.corners.is_empty()
    }

    pub fn contains(&self, e: &Exponent) -> bool {
        self.corners.contains(e)
    }

    /// Corners in ascending `Lex(1)` order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = &Exponent> + '_ {
        self.corners.iter()
    }

    pub fn is_antichain(&self) -> bool {
        self.corners
            .iter()
            .all(|a| self.corners.iter().all(|b| a == b || !a.leq(b)))
    }

    /// True iff some corner divides `e`.
    pub fn divides(&self, e: &Exponent) -> bool {
        self.corners.iter().any(|c| c.leq(e))
    }

    /// True iff each variable has a pure-power corner, i.e. the complement is finite.
    pub fn has_finite_complement(&self) -> bool {
        let mut seen = alloc::vec![false; self.dim];
        for c in &self.corners {
            if c.is_zero() {
                return true;
            }
            if let Some(i) = c.pure_power_var() {
                seen[i] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    pub fn max_degree(&self) -> u32 {
        self.corners.iter().map(Exponent::degree).max().unwrap_or(0)
    }
}

/// The monomials divisible by no corner.
pub fn escalier_from_corners(corners: &CornerSet) -> Result<OrderIdeal> {
    if !corners.has_finite_complement() {
        return Err(Error::NotZeroDimensional);
    }
    let dim = corners.dim;
    let mut members = BTreeSet::new();
    let zero = Exponent::zero(dim);
    if corners.divides(&zero) {
        return Ok(OrderIdeal {
            dim,
            members,
            corners: corners.clone(),
        });
    }
    let mut queue = VecDeque::from([zero]);
    while let Some(e) = queue.pop_front() {
        if members.contains(&e) {
            continue;
        }
        for i in 0..dim {
            let mut v = e.entries().to_vec();
            v[i] += 1;
            let t = Exponent::new(v);
            if !corners.divides(&t) && !members.contains(&t) {
                queue.push_back(t);
            }
        }
        members.insert(e);
    }
    Ok(OrderIdeal {
        dim,
        members,
        corners: corners.clone(),
    })
}

/// Monomials (as exponents) of an order ideal sorted descending by `Lex(1)`.
pub fn sorted_desc(o: &OrderIdeal) -> Vec<Exponent> {
    o.iter().rev().cloned().collect()
}
