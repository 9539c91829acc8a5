use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header declares {declared} {what}, body has {found}")]
    CountMismatch {
        what: &'static str,
        declared: usize,
        found: usize,
    },
    #[error("cannot combine directed and undirected graphs")]
    DirectednessMismatch,
    #[error("coloring has length {found}, graph has {expected} vertices")]
    ColoringLength { expected: usize, found: usize },
    #[error("color {color} at vertex {vertex} is outside 1..={k}")]
    ColorOutOfRange { vertex: usize, color: u32, k: u32 },
    #[error("at least {min} colors required, got {k}")]
    TooFewColors { k: u32, min: u32 },
    #[error("operation requires an undirected graph")]
    DirectedUnsupported,
    #[error("operation requires a directed graph")]
    UndirectedUnsupported,
    #[error("invalid initial coloring: {0}")]
    InvalidInit(String),
    #[error("search space of {required} colorings exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
    #[error("graph has no stable coloring")]
    NoEquilibrium,
    #[error("price of anarchy needs at least one edge")]
    NoEdges,
    #[error("{vars} variables exceed the brute-force limit of {max}")]
    TooManyVariables { vars: usize, max: usize },
    #[error("graph has odd order {0}")]
    OddOrder(usize),
    #[error("graph order {n} exceeds limit {max}")]
    TooLarge { n: usize, max: usize },
    #[error("malformed clause {index}: {msg}")]
    MalformedClause { index: usize, msg: String },
    #[error("gadget contract violated: {0}")]
    ContractViolation(String),
    #[error("coloring is not strictly stable")]
    NotStrictlyStable,
    #[error("extracted assignment does not satisfy the formula")]
    ExtractionUnsatisfied,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
