use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Failures of the algebraic operations.
///
/// [`Error::kind`] maps every variant onto a stable identifier that the CLI
/// prints and that scripts may match on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DimensionMismatch {
        expected: usize,
        found: usize,
    },
    ZeroPolynomial,
    /// A set of exponents that should be divisibility-closed is not.
    NotLowerSet,
    /// Some variable has no pure power among the corners / leading monomials,
    /// so the set of standard monomials is infinite.
    NotZeroDimensional,
    DependentConditions {
        rank: usize,
        count: usize,
    },
    DuplicateFunctional,
    NotAGroebnerBasis,
    NotInUniversalClass,
    /// A corner image uses an exponent that is not componentwise below its corner.
    ShapeViolation,
    SizeMismatch {
        expected: usize,
        found: usize,
    },
    NotPoised,
}

impl Error {
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } | Error::SizeMismatch { .. } => "DimensionMismatch",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::NotLowerSet => "NotLowerSet",
            Error::NotZeroDimensional => "NotZeroDimensional",
            Error::DependentConditions { .. } | Error::DuplicateFunctional => "DependentConditions",
            Error::NotAGroebnerBasis => "NotAGroebnerBasis",
            Error::NotInUniversalClass | Error::ShapeViolation => "NotInUniversalClass",
            Error::NotPoised => "NotPoised",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ZeroPolynomial => f.write_str("operation undefined on the zero polynomial"),
            Error::NotLowerSet => f.write_str("exponent set is not closed under division"),
            Error::NotZeroDimensional => {
                f.write_str("ideal is not zero-dimensional (some variable has no pure-power corner)")
            }
            Error::DependentConditions { rank, count } => {
                write!(
                    f,
                    "interpolation conditions are linearly dependent (rank {rank} < {count})"
                )
            }
            Error::DuplicateFunctional => f.write_str("interpolation conditions contain a duplicate"),
            Error::NotAGroebnerBasis => f.write_str("generators do not form a Gröbner basis"),
            Error::NotInUniversalClass => f.write_str("kernel has no reduced Gröbner basis of universal shape"),
            Error::ShapeViolation => f.write_str("corner image contains a monomial not strictly below its corner"),
            Error::SizeMismatch { expected, found } => {
                write!(f, "size mismatch: expected {expected}, found {found}")
            }
            Error::NotPoised => f.write_str("interpolation problem is not poised on this space"),
        }
    }
}

impl core::error::Error for Error {}
