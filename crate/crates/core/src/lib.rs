//! Exact ideal interpolation over the rationals.
//!
//! The crate builds ideal projectors from Hermite interpolation conditions or
//! from prescribed corner images, recognises the class of projectors whose
//! kernel has a reduced Gröbner basis of the shape
//! `g_j = x^α(j) - Σ_{β < α(j)} c_{j,β} x^β`, decomposes interpolation errors
//! as `f - Pf = Σ A_j(f) g_j`, certifies the dual pairing
//! `H_j(D) g_k = δ_{j,k}` and checks the minimal-degree property of the range.
//!
//! Everything is exact rational arithmetic; the crate is `no_std` and only
//! needs `alloc`.

#![no_std]

extern crate alloc;

pub mod conditions;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod min_degree;
pub mod monomial;
pub mod order_ideal;
pub mod poly;
pub mod projector;

pub use conditions::{ConditionSet, HermiteFunctional};
pub use error::{Error, Result};
pub use groebner::{GroebnerBasis, LexFamily, ReductionResult};
pub use linalg::RationalMatrix;
pub use min_degree::MinimalDegreeReport;
pub use monomial::{Exponent, MonomialOrder};
pub use order_ideal::{CornerSet, OrderIdeal};
pub use poly::{Polynomial, Rational};
pub use projector::{ErrorDecomposition, GoodFormulaCertificate, IdealProjector, LawResiduals};
