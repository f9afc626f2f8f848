use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty table: semigroups must have at least one element")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({i},{j}) = {value} is out of range for order {order}")]
    OutOfRangeEntry { i: usize, j: usize, value: usize, order: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("expected {expected} names, got {got}")]
    NameCount { expected: usize, got: usize },
    #[error("declared zero {0} does not satisfy the zero law")]
    ZeroMismatch(usize),
    #[error("semigroup has no zero element")]
    NoZeroElement,
    #[error("not an ideal: {multiplier} * {element} = {product} (side: {side}) leaves the set")]
    NotAnIdeal { element: usize, multiplier: usize, product: usize, side: &'static str },
    #[error("enumeration budget exceeded: order {0} > 5")]
    BudgetExceeded(usize),
    #[error("semigroup is not a group")]
    NotAGroup,
    #[error("invalid sandwich matrix: {0}")]
    InvalidSandwich(String),
    #[error("sandwich invertibility is only decided over the rationals (trivial structural group)")]
    UnsupportedBase,
    #[error("sandwich matrix is not invertible")]
    NotInvertible,
    #[error("structure constants are not associative on basis triple ({0},{1},{2})")]
    AlgebraNotAssociative(usize, usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("radical is not one-dimensional (dim {0})")]
    RadicalNotALine(usize),
    #[error("algebra is not unital; rerun with an identity adjoined")]
    NonUnital,
    #[error("invalid field parameter d = {0}: must be a positive square-free integer")]
    InvalidD(i64),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal inconsistency between classification and algebra oracle: {0}")]
    InternalInconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

pub type Result<T> = std::result::Result<T, Error>;
