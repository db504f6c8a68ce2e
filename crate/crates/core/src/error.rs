use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported cap of 2^20")]
    ModulusTooLarge(u64),
    #[error("operation requires an odd prime, got q = {0}")]
    EvenCharacteristic(u32),
    #[error("no square root of -1 exists modulo {0}")]
    NoSquareRootOfMinusOne(u32),
    #[error("entry {value} is not a residue modulo {q}")]
    EntryOutOfRange { value: u64, q: u32 },
    #[error("field mismatch: GF({0}) vs GF({1})")]
    FieldMismatch(u32, u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("invalid weight-4 support: {0}")]
    InvalidSupport(String),
    #[error("word length must be at least 1")]
    EmptyWord,
    #[error("orbit exceeds cap of {0} points")]
    OrbitExceedsCap(usize),
    #[error("action too large: q^n = {points} exceeds the point cap {cap}")]
    ActionTooLarge { points: u128, cap: u128 },
    #[error("enumeration too large: q^k = {size} exceeds the cap {cap}")]
    EnumerationTooLarge { size: u128, cap: u128 },
    #[error("generator matrix is rank deficient (rank {rank} < {rows} rows)")]
    RankDeficient { rank: usize, rows: usize },
    #[error("code has no nonzero codewords")]
    ZeroCode,
    #[error("inconsistent weight enumerator: {0}")]
    InconsistentEnumerator(String),
    #[error("Singleton bound violated: d = {d} > {bound}")]
    SingletonViolation { d: usize, bound: usize },
    #[error("witness check failed: A*A^T != -I ({0})")]
    WitnessCheck(String),
    #[error("code is not self-dual")]
    NotSelfDual,
    #[error("generator is not in systematic form (I | A)")]
    NotSystematic,
    #[error("no valid x supplied: {0}")]
    InvalidExtensionVector(String),
    #[error("minimum-weight subcode is the whole code")]
    DegenerateSplit,
    #[error("completion failed: {0}")]
    CompletionFailed(String),
    #[error("index is not integral: {0}")]
    IndexNotIntegral(String),
    #[error("invalid search spec: {0}")]
    InvalidSpec(String),
    #[error("search produced no code with a certified distance")]
    NoCandidate,
    #[error("no target recorded for q = {q}, length {length}")]
    NoTarget { q: u32, length: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("I/O error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
