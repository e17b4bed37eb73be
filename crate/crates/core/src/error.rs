use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid shape: {0}")]
    Shape(String),

    #[error("division by m - n is undefined when m = n")]
    DivisionForbidden,

    #[error("the supertrace form is degenerate on this algebra")]
    DegenerateForm,

    #[error("the Cartan subalgebra does not act semisimply over the rationals: {0}")]
    NonSemisimpleAction(String),

    #[error("weight is not integral in the chosen frame: {0}")]
    NonIntegralWeight(String),

    #[error("rank {rank} exceeds the desk limit {limit}")]
    RankTooLarge { rank: usize, limit: usize },

    #[error("weight is not dominant for the even part: {0}")]
    NotDominant(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("structure constant ({i}, {j}, {k}) violates the parity grading")]
    ParityViolation { i: usize, j: usize, k: usize },

    #[error("unit axiom fails: {0}")]
    UnitAxiom(String),

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("subspace is not invariant under the action")]
    NonInvariantSubmodule,

    #[error("modules are defined over different algebras")]
    MismatchedAlgebra,

    #[error("schema error: {0}")]
    Schema(String),

    #[error("i/o error: {0}")]
    Io(String),
}
