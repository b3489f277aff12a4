use thiserror::Error;

/// Errors raised by graph construction, parsing, and the solvers' contracts.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({u}, {v}): {reason}")]
    Construction { u: usize, v: usize, reason: &'static str },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{what}: size {got} exceeds the bound {max}")]
    Size { what: &'static str, got: usize, max: usize },

    /// A precondition was violated; `witness` lists the offending vertices when there are any.
    #[error("contract violated: {msg}{}", fmt_witness(.witness))]
    Contract { msg: String, witness: Vec<usize> },

    #[error("internal invariant failed: {0}")]
    Internal(String),

    #[error("rule consistency error: {0}")]
    Consistency(String),

    #[error("unsupported: {0}")]
    Unsupported(String),
}

fn fmt_witness(w: &[usize]) -> String {
    if w.is_empty() {
        String::new()
    } else {
        format!(" (witness vertices {w:?})")
    }
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>, witness: Vec<usize>) -> Self {
        Error::Contract { msg: msg.into(), witness }
    }

    pub(crate) fn size(what: &'static str, got: usize, max: usize) -> Self {
        Error::Size { what, got, max }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
