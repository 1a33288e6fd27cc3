use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials are expressed over different variable tables")]
    VarTableMismatch,
    #[error("no image given for variable `{0}`")]
    MissingImage(String),
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("index {value} is outside 1..={n}")]
    IndexOutOfRange { value: i64, n: usize },
    #[error("index sequence {0:?} is not strictly increasing")]
    NotIncreasing(Vec<usize>),
    #[error("length {d} is outside 1..={max}")]
    LengthOutOfRange { d: usize, max: usize },
    #[error("n = {0} is not supported; n must be at least 2")]
    InvalidRank(usize),
    #[error("objects belong to different ranks ({0} vs {1})")]
    RankMismatch(usize, usize),
    #[error("the zero polynomial has no torus weight")]
    ZeroPolynomial,
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("Plücker degrees must satisfy 1 <= p <= q <= n-1 (got p = {p}, q = {q})")]
    BadDegrees { p: usize, q: usize },
    #[error("every generator is zero")]
    AllZeroGenerators,
    #[error("polynomial is not bihomogeneous for the requested leg split")]
    NotBihomogeneous,
    #[error("matrix is not traceless")]
    NotTraceless,
    #[error("invariant space has dimension {0}, expected exactly 1")]
    InvariantDimension(usize),
    #[error("the given elements do not form a basis of sl_n")]
    SingularBasis,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown check `{name}`; valid checks are: {valid}")]
    UnknownCheck { name: String, valid: String },
}
