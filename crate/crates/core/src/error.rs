use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("group order {order} exceeds the limit {max}")]
    TooLarge { order: usize, max: usize },
    #[error("invalid group parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("cannot compose words: first ends at object {first_target}, second starts at object {second_source}")]
    EndpointMismatch { first_target: usize, second_source: usize },
    #[error("unknown generator {0}")]
    UnknownGenerator(usize),
    #[error("unknown object {0}")]
    UnknownObject(usize),
    #[error("word letters do not chain: letter {position} starts at object {found}, expected {expected}")]
    BrokenChain { position: usize, expected: usize, found: usize },
    #[error("pushout legs do not share a source presentation")]
    SourceMismatch,
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error("invalid presentation map: {0}")]
    InvalidMap(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomError {
    #[error("enumeration needs up to {required} candidate assignments, budget is {budget}")]
    BudgetExceeded { required: String, budget: u64 },
    #[error("homomorphisms are over different presentations")]
    MismatchedPresentations,
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CospanError {
    #[error("boundary mismatch: {0}")]
    BoundaryMismatch(String),
    #[error("cospan invariant violated: {0}")]
    InvariantViolation(String),
    #[error("restriction of a hom along `{leg}` is not a hom of the boundary; the map does not respect relations")]
    InconsistentMap { leg: &'static str },
    #[error("{0}")]
    Parameter(String),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Hom(#[from] HomError),
}

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("{context}: {message}")]
    Schema { context: String, message: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    Cospan(#[from] CospanError),
}

impl FormatError {
    pub(crate) fn schema(context: impl Into<String>, message: impl Into<String>) -> Self {
        FormatError::Schema { context: context.into(), message: message.into() }
    }
}
