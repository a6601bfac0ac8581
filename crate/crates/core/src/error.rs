use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid degree {0}: degrees start at 1")]
    InvalidDegree(usize),

    #[error("{what}: requested {requested} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        requested: usize,
        bound: usize,
    },

    #[error("grafting needs at least two trees, got {0}")]
    ArityTooSmall(usize),

    #[error("cannot contract the root edge of a leaf (position {0})")]
    ContractLeaf(usize),

    #[error("contraction position {position} out of range 1..={arity}")]
    ContractOutOfRange { position: usize, arity: usize },

    #[error("a decorated tree is tagged iff it is not the leaf")]
    InvalidTag,

    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },

    #[error("generator {0:?} is not in the alphabet")]
    AlphabetMismatch(String),

    #[error("no value assigned to generator {0:?}")]
    UnboundGenerator(String),

    #[error("syntax error at {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("mixed '.' and '*' chain at {position}; add parentheses")]
    MixedChain { position: usize },

    #[error("unknown generator {name:?} at {position}")]
    UnknownGenerator { name: String, position: usize },

    #[error("not a permutation of 1..={degree}: {detail}")]
    NotABijection { degree: usize, detail: String },

    #[error("the stub tree has no left/right split")]
    StubNotSplittable,

    #[error("expected a degree of at least {minimum}, got {degree}")]
    DegreeTooSmall { degree: usize, minimum: usize },

    #[error("composition needs an inner series with zero constant term")]
    ComposeNonzeroConstant,

    #[error("{source_name}: routes disagree at degree {degree} ({left} vs {right})")]
    CountMismatch {
        source_name: String,
        degree: usize,
        left: String,
        right: String,
    },
}
