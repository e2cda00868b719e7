use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A monic series (constant term 1) or a series without constant term
    /// was required.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("insufficient precision: target order {target} exceeds {available}")]
    Precision { target: usize, available: usize },

    #[error("size cap exceeded: {what} = {value} (cap {cap})")]
    SizeCap {
        what: &'static str,
        value: usize,
        cap: usize,
    },

    /// The map is not admissible up to the requested order; `order` is the
    /// first iterate at which admissibility fails.
    #[error("non-admissible at order {order}: {detail}")]
    NonAdmissible { order: usize, detail: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

impl Error {
    /// Short machine-readable code used in CLI error objects.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "domain",
            Error::Precision { .. } => "precision",
            Error::SizeCap { .. } => "size_cap",
            Error::NonAdmissible { .. } => "inadmissible",
            Error::Dimension(_) => "dimension",
            Error::Malformed(_) => "malformed_input",
        }
    }
}
