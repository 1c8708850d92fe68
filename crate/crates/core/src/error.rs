use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("group order {order} exceeds cap {cap}")]
    OrderCapExceeded { order: usize, cap: usize },

    #[error("generator closure exceeded the order cap {cap}")]
    ClosureDiverged { cap: usize },

    #[error("malformed group table: {0}")]
    MalformedTable(String),

    #[error("unsupported group family for this operation: {0}")]
    UnsupportedFamily(String),

    #[error("group mismatch: expected `{expected}`, got `{got}`")]
    GroupMismatch { expected: String, got: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("operation requires a scalar function (t = 1), got t = {0}")]
    NotScalar(usize),

    #[error("irrep set is incomplete: sum of squared dimensions {found} != group order {expected}")]
    IncompleteIrrepSet { found: usize, expected: usize },

    #[error("eigenvalue clustering stayed ambiguous after {retries} retries")]
    EigClusterAmbiguous { retries: usize },

    #[error("biased set is empty")]
    EmptySet,

    #[error("biased set carries no certificate; run bias_of first")]
    UncertifiedSet,

    #[error("cannot pad irreps of total dimension {need} into t = {t}")]
    PaddingImpossible { need: usize, t: usize },

    #[error("unknown function kind: {0}")]
    UnknownKind(String),

    #[error("bad parameter: {0}")]
    BadParameter(String),

    #[error("parse error in `{input}`: {msg}")]
    Parse { input: String, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
