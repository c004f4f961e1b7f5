use thiserror::Error;

/// Errors raised by the field, polynomial, curve and classification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is too small: characteristic must exceed 3")]
    PrimeTooSmall(u64),
    #[error("prime {0} is too large: moduli must stay below 2^32")]
    PrimeTooLarge(u64),
    #[error("curve is singular (discriminant is zero)")]
    SingularCurve,
    #[error("division polynomial index must be at least 1, got {0}")]
    BadIndex(i64),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("unsupported degree {0}")]
    UnsupportedDegree(usize),
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("point has order {found}, expected {expected}")]
    WrongOrder { expected: u64, found: u64 },
    #[error("point is not defined over the base field")]
    PointNotRational,
    #[error("parameter {0} is excluded from the family")]
    ExcludedParameter(u64),
    #[error("operation requires p ≡ {required} (mod 3), but p = {p}")]
    WrongFieldClass { p: u64, required: u64 },
    #[error("field of order {p} exceeds the enumeration bound {bound}")]
    FieldTooLarge { p: u64, bound: u64 },
    #[error("no decomposition 4p = A^2 + 27B^2 exists for p = {0}")]
    NoDecomposition(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
