use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generators {gens:?} have gcd {gcd}, complement is infinite")]
    Gcd { gens: Vec<usize>, gcd: usize },
    #[error("set is not closed under addition: {x} + {y} = {sum} is missing")]
    NotClosed { x: usize, y: usize, sum: usize },
    #[error("{0} is not a positive member of the semigroup")]
    NotMember(usize),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("semigroup is ordinary (or the full monoid); it has no ordinarization transform")]
    OrdinaryInput,
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("independent methods disagree on {what}: {left} vs {right}")]
    OracleMismatch { what: String, left: String, right: String },
    #[error("variable x{0} has no finite bound")]
    UnboundedSystem(usize),
    #[error("residue class {residue} has {found} samples, need at least {needed}")]
    InsufficientSamples { residue: u64, found: usize, needed: usize },
    #[error("fitted quasipolynomial disagrees with sample at t = {t}: expected {expected}, got {got}")]
    InconsistentSamples { t: i64, expected: String, got: String },
    #[error("value {0} is not a nonnegative integer")]
    IntegralityViolation(String),
    #[error("no row for residue class {0}")]
    InapplicableResidue(u64),
    #[error("factors {0:?} are not pairwise coprime")]
    NotPairwiseCoprime(Vec<u64>),
    #[error("arguments out of order: {0}")]
    BadOrder(String),
    #[error("parameter out of range: {0}")]
    BadRange(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
