use thiserror::Error;

/// Every failure the library reports. Variants are grouped roughly by the
/// layer that raises them; all are exact preconditions, never numerical.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // field construction and arithmetic
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field size p^e exceeds the 2^20 limit")]
    FieldTooLarge,
    #[error("extension degree must be at least 1")]
    BadExtensionDegree,
    #[error("modulus must be a monic irreducible of degree e over F_p")]
    BadModulus,
    #[error("designated primitive element must have order q-1")]
    BadPrimitiveElement,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero cannot be raised to a negative power")]
    ZeroToNegativePower,

    // polynomials
    #[error("polynomial division by zero")]
    DivisionByZeroPoly,
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
    #[error("{0} does not divide {1}")]
    NotADivisor(String, String),
    #[error("generator must be monic")]
    NotMonic,
    #[error("bad token in coefficient string: {0}")]
    BadToken(String),
    #[error("coefficient {0} is not an element of the field")]
    CoefficientOutOfField(String),

    // split rings
    #[error("index out of range")]
    IndexOutOfRange,
    #[error("operands belong to different ring specs")]
    MixedSpecs,
    #[error("component {0} of a unit must be nonzero")]
    ZeroComponent(usize),
    #[error("polynomial does not split into distinct linear factors")]
    NotSplit,
    #[error("idempotent count m_1*...*m_k exceeds the limit 64")]
    ProfileTooLarge,

    // codes
    #[error("shift constant lambda must be nonzero")]
    ZeroLambda,
    #[error("vector length does not match the code length")]
    LengthMismatch,
    #[error("matrix does not have full row rank")]
    RankDeficient,
    #[error("lambda component is not +1 or -1; dual containment requires lambda^2 = 1")]
    LambdaNotInvolution,

    // Gray map and quantum parameters
    #[error("ring profile does not match the Gray matrix order")]
    DimensionMismatch,
    #[error("Gray matrix is singular")]
    SingularGrayMatrix,
    #[error("Gray matrix carries no orthogonality certificate V V^T = beta I")]
    BetaMissing,
    #[error("code is not dual-containing")]
    NotDualContaining,
    #[error("minimum distance was not resolved exactly")]
    UnresolvedDistance,
    #[error("quantum dimension 2l - n is negative")]
    NegativeQuantumDimension,
    #[error("n must share a factor with the field characteristic")]
    GcdCoprime,
    #[error("ring specs have different degree profiles")]
    DegreeProfileMismatch,
    #[error("zero-dimensional code has no minimum distance")]
    ZeroDimensionalCode,
    #[error("search space exceeds the configured limit")]
    SearchSpaceTooLarge,
}

pub type Result<T> = std::result::Result<T, Error>;
