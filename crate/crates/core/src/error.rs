use thiserror::Error;

/// Errors raised while assembling table data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatError {
    #[error("unknown object `{0}`")]
    UnknownObject(String),
    #[error("unknown morphism `{0}`")]
    UnknownMorphism(String),
    #[error("duplicate name `{0}`")]
    Duplicate(String),
    #[error("morphisms `{g}` and `{f}` are not composable")]
    NotComposable { g: String, f: String },
    #[error("table `{table}` has {found} entries, expected {expected}")]
    TableSize { table: String, expected: usize, found: usize },
    #[error("shape mismatch in `{family}` at {at}: {detail}")]
    ShapeMismatch { family: String, at: String, detail: String },
}

/// Errors raised while evaluating a term or a construction step.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("cannot compose {g} after {f}")]
    NotComposable { g: String, f: String },
    #[error("{0} has no inverse")]
    NoInverse(String),
    #[error("`{0}` is not available in this structure")]
    Unavailable(String),
    #[error("`{name}` expects {expected} arguments, got {found}")]
    Arity { name: String, expected: usize, found: usize },
    #[error("variable #{0} is unbound")]
    Unbound(usize),
    #[error("cannot lift {0}: no preimage under the equivalence")]
    NoPreimage(String),
    #[error("cannot lift {0}: several preimages")]
    AmbiguousPreimage(String),
    #[error("ill-typed: {0}")]
    IllTyped(String),
}

/// Errors raised by the term parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown name `{name}` at byte {pos}")]
    UnknownName { pos: usize, name: String },
    #[error("`{name}` at byte {pos} expects {expected} arguments, got {found}")]
    Arity { pos: usize, name: String, expected: usize, found: usize },
}

/// Errors raised by the constructions (transference, strictification, End, Λ).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("search space of {estimate} candidates exceeds bound {bound}")]
    BoundExceeded { estimate: u128, bound: u128 },
    #[error("multiplicity must be at least 1, got {0}")]
    InvalidMultiplicity(usize),
    #[error("no morphism satisfies the defining square of {0}")]
    NoSolution(String),
    #[error("{count} morphisms satisfy the defining square of {what}")]
    MultipleSolutions { what: String, count: usize },
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Cat(#[from] CatError),
}

/// Errors raised by the algebraic model generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid bimodule: {0}")]
    InvalidBimodule(String),
    #[error("search space of {estimate} candidates exceeds bound {bound}")]
    BoundExceeded { estimate: u128, bound: u128 },
    #[error(transparent)]
    Cat(#[from] CatError),
}
