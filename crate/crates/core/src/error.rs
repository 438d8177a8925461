use thiserror::Error;

/// Errors raised while constructing or analysing groups, G-sets and functions on them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invariant factor {0} is smaller than 2")]
    InvalidInvariant(usize),

    #[error("expected {expected} residues, got {got}")]
    RankMismatch { expected: usize, got: usize },

    #[error("residue {value} out of range for factor {modulus} at position {position}")]
    ResidueOutOfRange {
        position: usize,
        value: usize,
        modulus: usize,
    },

    #[error("element index {index} out of range for a group of order {order}")]
    ElementOutOfRange { index: usize, order: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("expected {expected} generator permutations, got {got}")]
    GeneratorCount { expected: usize, got: usize },

    #[error("row {row} of the action is not a permutation of {points} points")]
    NotAPermutation { row: usize, points: usize },

    #[error("generator e{generator} raised to its order {order} is not the identity")]
    GeneratorOrder { generator: usize, order: usize },

    #[error("generators e{first} and e{second} do not commute")]
    GeneratorsDoNotCommute { first: usize, second: usize },

    #[error("the identity element does not act trivially on point {point}")]
    IdentityNotTrivial { point: usize },

    #[error("action is not compatible: (ab)x != a(bx) for a={a}, b={b}, x={x}")]
    IncompatibleAction { a: usize, b: usize, x: usize },

    #[error("function is identically zero")]
    ZeroFunction,

    #[error("basis vector {row} is not G-linear")]
    NotGLinear { row: usize },

    #[error("function is not unitary: |f({point})| = {modulus}")]
    NotUnitary { point: usize, modulus: f64 },

    #[error("function is not differentiable: its zero set is not invariant on orbit {orbit:?}")]
    NotDifferentiable { orbit: Vec<usize> },

    #[error("candidate space of size {size} exceeds the enumeration budget {budget}")]
    BudgetExceeded { size: f64, budget: u64 },

    #[error("value {value} is not a valid element of a group of order {order}")]
    InvalidValue { value: usize, order: usize },

    #[error("set of functions is empty")]
    EmptySet,

    #[error("root order must be at least 1")]
    InvalidRootOrder,
}

pub type Result<T> = std::result::Result<T, Error>;
