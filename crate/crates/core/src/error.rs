use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different towers")]
    TowerMismatch,
    #[error("invalid radicand list: {0}")]
    InvalidTower(String),
    #[error("square root of negative rational {0}")]
    NegativeSquareRoot(String),
    #[error("coordinate has squarefree part {0} outside the declared tower")]
    OutsideTower(u64),
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: u32, got: u32 },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("points of a line restriction must be distinct")]
    CoincidentPoints,
    #[error("zero polynomial has no root data")]
    ZeroPolynomial,
    #[error("form is divisible by the edge line")]
    DivisibleByEdge,
    #[error("point does not satisfy the conditions for kind {0}")]
    ConditionKindMismatch(String),
    #[error("kernel dimension {0} (expected 1)")]
    KernelDimension(usize),
    #[error("parameters outside the family domain: {0}")]
    InvalidParameters(String),
    #[error("projective point must have a nonzero coordinate")]
    ZeroPoint,
    #[error("malformed input: {0}")]
    Malformed(String),
}
