use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed code text: {0}")]
    MalformedCode(String),

    #[error("label {label} occurs {count} times (expected 2)")]
    LabelMultiplicity { label: usize, count: usize },

    #[error("label {label} out of range 1..={n}")]
    LabelOutOfRange { label: usize, n: usize },

    #[error("band count {0} out of range (0..=8)")]
    BandCountOutOfRange(usize),

    #[error("labels must be distinct and valid, got ({0}, {1})")]
    InvalidLabelPair(usize, usize),

    #[error("bands ({0}, {1}) do not admit a Type I move")]
    MoveNotApplicable(usize, usize),

    #[error("malformed braid: {0}")]
    MalformedBraid(String),

    #[error("braid word is not in the required normal form: {0}")]
    NotNormalForm(String),

    #[error("diagram has {0} components, a knot is required")]
    NotAKnot(usize),

    #[error("malformed Gauss code: {0}")]
    MalformedGauss(String),

    #[error("malformed DT code: {0}")]
    MalformedDt(String),

    #[error("DT code has no planar realization")]
    NonPlanarDt,

    #[error("diagram has {crossings} crossings, budget is {budget}")]
    CrossingBudget { crossings: usize, budget: usize },

    #[error("reference source line {line}: {msg}")]
    ReferenceParse { line: usize, msg: String },

    #[error("duplicate reference name {0}")]
    DuplicateName(String),

    #[error("fingerprint collision between {0} and {1}")]
    FingerprintCollision(String, String),

    #[error("reference table is missing required entries: {0}")]
    MissingReference(String),

    #[error("no flat plumbing basket number known for {0}")]
    UnknownName(String),

    #[error("resume file: {0}")]
    Resume(String),

    #[error("i/o: {0}")]
    Io(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
