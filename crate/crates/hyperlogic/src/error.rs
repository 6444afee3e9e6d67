//! Crate-wide error type.

use thiserror::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors reported by parsers, model constructors, and engines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Lexical or syntactic error in a formula or file, with 1-based position.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse {
        line: usize,
        col: usize,
        msg: String,
    },

    /// An atom refers to a variable that no enclosing quantifier binds.
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),

    /// A quantifier rebinds a variable already in scope.
    #[error("variable `{0}` is bound more than once")]
    DuplicateVariable(String),

    /// A prenex sentence was required but quantifiers occur inside the body.
    #[error("formula is not in prenex form: quantifier below a connective")]
    NotPrenex,

    /// A quantifier-free formula was required.
    #[error("formula is not quantifier-free")]
    NotQuantifierFree,

    /// A lasso loop must contain at least one letter (or vertex).
    #[error("lasso loop must be non-empty")]
    EmptyLoop,

    /// The checked trace set contains no traces.
    #[error("trace set is empty")]
    EmptyTraceSet,

    /// A trace letter uses a proposition outside the declared alphabet.
    #[error("letter uses proposition `{0}` outside the declared alphabet")]
    LetterOutsideAlphabet(String),

    /// The trace-set alphabet does not cover a proposition of the formula.
    #[error("alphabet does not cover formula proposition `{0}`")]
    AlphabetMismatch(String),

    /// Two traces in one set share a name.
    #[error("duplicate trace name `{0}`")]
    DuplicateTraceName(String),

    /// Two vertices in one structure share a name.
    #[error("duplicate vertex name `{0}`")]
    DuplicateVertex(String),

    /// An edge or init declaration names an undeclared vertex.
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    /// Kripke structures must be total.
    #[error("vertex `{0}` has no outgoing edge (structure must be total)")]
    NotTotal(String),

    /// A Kripke structure needs exactly one initial vertex.
    #[error("no initial vertex declared")]
    MissingInitial,

    /// A Kripke structure needs exactly one initial vertex.
    #[error("more than one initial vertex declared")]
    MultipleInitial,

    /// A tile set failed validation.
    #[error("invalid tile set: {0}")]
    InvalidTileSet(String),

    /// An arithmetic formula failed validation.
    #[error("invalid arithmetic formula: {0}")]
    InvalidArith(String),

    /// Catch-all for semantic preconditions on operation inputs.
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Shorthand for [`Error::Invalid`] from anything displayable.
    pub fn invalid(msg: impl std::fmt::Display) -> Self {
        Error::Invalid(msg.to_string())
    }
}
