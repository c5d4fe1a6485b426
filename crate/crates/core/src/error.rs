use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("element index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("invalid unit vector: {0}")]
    InvalidUnit(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("operation requires an MV-chain")]
    NotAChain,
    #[error("chain component must differ from 1")]
    TopComponent,
    #[error("operands belong to different base algebras")]
    BaseMismatch,
    #[error("subtrahend is not below the minuend in the monoid order")]
    NotLeq,
    #[error("order hypothesis x<y => y-x<-x fails at x={x}, y={y}")]
    OrderHypothesis { x: usize, y: usize },
    #[error("relation is not a strict partial order: {0}")]
    NotAnOrder(String),
    #[error("not a cyclically ordered group")]
    NotCyclicallyOrdered,
    #[error("structure is not in the AC class: {0}")]
    NotInAcClass(String),
    #[error("tuple notation needs at least 3 entries, got {0}")]
    Arity(usize),
    #[error("structure has no first positive element")]
    NotDiscrete,
    #[error("invalid D-formula parameters: {0}")]
    DParams(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("no product decomposition of width at most {0}")]
    WidthExceeded(usize),
    #[error("structure of size {size} exceeds the isomorphism cap {cap}")]
    SizeCap { size: usize, cap: usize },
    #[error("search bound exceeded: {0}")]
    ResourceBound(String),
    #[error("schema error at {path}: {msg}")]
    Schema { path: String, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
