use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} coordinates, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("level entry {entry} out of range 1..={level}")]
    LevelOutOfRange { entry: u32, level: u32 },

    #[error("cannot compose: source {source_vertex} differs from range {range}")]
    Composition {
        source_vertex: String,
        range: String,
    },

    #[error("degree split {m} + {n} does not equal path degree {degree}")]
    DegreeSplit {
        m: String,
        n: String,
        degree: String,
    },

    #[error("shape error: {0}")]
    Shape(String),

    #[error("range mismatch: {0} vs {1}")]
    RangeMismatch(String, String),

    #[error("coefficient rings differ: {0} vs {1}")]
    RingMismatch(String, String),

    #[error("pair is not in A: {0}")]
    NotInA(String),

    #[error("class key has no member in A: {0}")]
    UnrealizableKey(String),

    #[error("redex does not match word: {0}")]
    RedexMismatch(String),

    #[error("ordering violation: {rule} at position {position} produced {produced} which is not below {original}")]
    OrderingViolation {
        rule: String,
        position: usize,
        original: String,
        produced: String,
    },

    #[error("step guard of {0} rewrites exhausted before reaching a normal form")]
    StepGuard(u64),

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("invalid configuration: {0}")]
    Config(String),
}
