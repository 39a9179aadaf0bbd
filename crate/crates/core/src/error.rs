use thiserror::Error;

/// Every failure mode of the toolkit.
///
/// [`Error::exit_code`] maps each variant onto the CLI's exit status: input
/// problems are 2, work-cap refusals are 3, and violated mathematical
/// guarantees are 4.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {p}^{k} is out of range")]
    FieldTooLarge { p: u64, k: u32 },
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("no monic irreducible polynomial of degree {k} over F_{p} found")]
    NoIrreducible { p: u64, k: u32 },
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not invertible")]
    Singular,
    #[error("invalid field element: {0}")]
    InvalidElement(String),
    #[error("cannot embed F_{from} into F_{to}")]
    NoEmbedding { from: u64, to: u64 },

    #[error("invalid root system {letter}{rank}")]
    InvalidRootSystem { letter: char, rank: usize },
    #[error("order must be at least 1")]
    InvalidOrder,

    #[error("group closure exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("work estimate {estimate} exceeds the work cap {cap}")]
    WorkCapExceeded { estimate: u128, cap: u64 },

    #[error("generator {index} has determinant different from 1")]
    NotSpecialLinear { index: usize },
    #[error("product of the generators is not a scalar matrix")]
    ProductNotCentral,
    #[error("generator {index} has projective order {actual}, which does not divide the declared order {declared}")]
    OrderMismatch {
        index: usize,
        actual: u64,
        declared: u64,
    },
    #[error("malformed tuple: {0}")]
    MalformedTuple(String),
    #[error("schema violation: {0}")]
    Schema(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("i/o: {0}")]
    Io(String),

    #[error("guaranteed implication violated: {0}")]
    TheoremViolation(String),
}

impl Error {
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::CapExceeded { .. } | Error::WorkCapExceeded { .. } => 3,
            Error::TheoremViolation(_) | Error::NoIrreducible { .. } => 4,
            _ => 2,
        }
    }

    /// Stable machine-readable identifier for error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "not_prime",
            Error::FieldTooLarge { .. } => "field_too_large",
            Error::ZeroDegree => "zero_degree",
            Error::NoIrreducible { .. } => "no_irreducible",
            Error::FieldMismatch => "field_mismatch",
            Error::DimensionMismatch(_) => "dimension_mismatch",
            Error::Singular => "singular",
            Error::InvalidElement(_) => "invalid_element",
            Error::NoEmbedding { .. } => "no_embedding",
            Error::InvalidRootSystem { .. } => "invalid_root_system",
            Error::InvalidOrder => "invalid_order",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::WorkCapExceeded { .. } => "work_cap_exceeded",
            Error::NotSpecialLinear { .. } => "not_special_linear",
            Error::ProductNotCentral => "product_not_central",
            Error::OrderMismatch { .. } => "order_mismatch",
            Error::MalformedTuple(_) => "malformed_tuple",
            Error::Schema(_) => "schema",
            Error::Unsupported(_) => "unsupported",
            Error::Io(_) => "io",
            Error::TheoremViolation(_) => "theorem_violation",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
