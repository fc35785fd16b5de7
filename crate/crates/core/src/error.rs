use core::fmt;

use crate::family::Relation;

/// Errors raised by the algebra core.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Word text was empty after trimming.
    EmptyWord,
    /// A character outside `a`, `b`, `^` and digits.
    BadSymbol(char),
    /// Exponent missing, zero, misplaced or too large.
    BadExponent,
    /// Operands live in different families.
    FamilyMismatch,
    /// The operation needs a combinatorial family element.
    NotCombinatorial,
    /// The operation needs an idempotent.
    NotIdempotent,
    /// The operation is only defined in `O(inf,inf)`.
    WrongFamily,
    /// An inferred family does not satisfy this input relation.
    NotInScope(Relation),
    /// A numeric argument is outside its documented range.
    InvalidParameter(&'static str),
    /// A window of idempotents below `e` was not totally ordered.
    NotAChain,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyWord => write!(f, "empty word"),
            Error::BadSymbol(c) => write!(f, "bad symbol {c:?} (expected a, b, ^ or digits)"),
            Error::BadExponent => write!(f, "bad exponent (must be an integer >= 1 after '^')"),
            Error::FamilyMismatch => write!(f, "elements belong to different families"),
            Error::NotCombinatorial => write!(f, "element is not in a combinatorial family"),
            Error::NotIdempotent => write!(f, "element is not idempotent"),
            Error::WrongFamily => write!(f, "operation is only defined in O(inf,inf)"),
            Error::NotInScope(r) => {
                write!(f, "relation {r} does not hold in any classified family")
            }
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::NotAChain => write!(f, "idempotents below e are not totally ordered"),
        }
    }
}

impl core::error::Error for Error {}
