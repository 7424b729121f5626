use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("qubit count mismatch: expected {expected}, found {found}")]
    QubitMismatch { expected: usize, found: usize },

    #[error("vector length {found} is not 2^{n}")]
    BadLength { n: usize, found: usize },

    #[error("max weight {max_weight} exceeds qubit count {n}")]
    WeightOutOfRange { max_weight: usize, n: usize },

    #[error("cannot parse Pauli string {0:?}")]
    ParsePauli(String),

    #[error("bitstring {bits:?} does not have length {n}")]
    BadBitstring { bits: String, n: usize },

    #[error("basis vector {0} is zero")]
    ZeroVector(usize),

    #[error("basis vectors {i} and {j} are not orthogonal (|<i|j>| = {overlap:.3e})")]
    NotOrthogonal { i: usize, j: usize, overlap: f64 },

    #[error("components {a} and {b} overlap: |<{a}.{i}|{b}.{j}>| = {overlap:.3e}")]
    ComponentsOverlap {
        a: usize,
        b: usize,
        i: usize,
        j: usize,
        overlap: f64,
    },

    #[error("union needs at least two codes, got {0}")]
    TooFewComponents(usize),

    #[error("code has no basis vectors")]
    EmptyCode,

    #[error("code dimension {k} exceeds 2^{n}")]
    DimensionTooLarge { k: usize, n: usize },

    #[error("{0} is not a permutation")]
    BadPermutation(String),

    #[error("local operator on qubit {qubit} is not unitary (deviation {deviation:.3e})")]
    NotUnitary { qubit: usize, deviation: f64 },

    #[error("matrix is not unitary (deviation {0:.3e})")]
    MatrixNotUnitary(f64),

    #[error("unknown local gate {0:?}")]
    UnknownGate(String),

    #[error("subspace is not closed under the adjoint (residual {0:.3e})")]
    NotAdjointClosed(f64),

    #[error("{0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Short stable identifier used by the CLI error line.
    pub fn code(&self) -> &'static str {
        match self {
            Error::QubitMismatch { .. } | Error::BadLength { .. } => "dimension",
            Error::WeightOutOfRange { .. } => "max-weight",
            Error::ParsePauli(_) => "pauli-syntax",
            Error::BadBitstring { .. } => "bitstring",
            Error::ZeroVector(_) => "zero-vector",
            Error::NotOrthogonal { .. } => "orthogonality",
            Error::ComponentsOverlap { .. } => "orthogonality",
            Error::TooFewComponents(_) => "union-arity",
            Error::EmptyCode | Error::DimensionTooLarge { .. } => "code-dimension",
            Error::BadPermutation(_) => "permutation",
            Error::NotUnitary { .. } | Error::MatrixNotUnitary(_) => "unitarity",
            Error::UnknownGate(_) => "unknown-gate",
            Error::NotAdjointClosed(_) => "adjoint-closure",
            Error::Malformed(_) => "malformed",
        }
    }
}
