use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// An element identifier outside the ambient quasi-order.
    UnknownElement(usize),
    /// The relation handed to a constructor is missing `a ≤ a`.
    NotReflexive(usize),
    /// `a ≤ b` and `b ≤ c` hold but `a ≤ c` does not.
    NotTransitive(usize, usize, usize),
    /// A map that is not total over its domain, or whose image leaves the codomain.
    BadMap(usize),
    /// No grade was supplied for a label.
    MissingGrade(usize),
    /// A tree that violates the grade condition was used as a graded term.
    NotGraded,
    ArityMismatch {
        op: usize,
        expected: usize,
        found: usize,
    },
    /// A term universe that is not closed under taking subterms.
    NotSubtermClosed,
    /// A computation would exceed the caller's bit or step budget.
    BudgetExceeded,
    /// Input outside the mathematical domain of an operation.
    Domain(&'static str),
    /// A bounded search ran out of candidates.
    SearchExhausted,
    /// An oracle returned an answer that fails verification.
    OracleRejected,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownElement(e) => write!(f, "unknown element {e}"),
            Error::NotReflexive(a) => write!(f, "relation is not reflexive at {a}"),
            Error::NotTransitive(a, b, c) => {
                write!(f, "relation is not transitive: {a} <= {b} <= {c} but not {a} <= {c}")
            }
            Error::BadMap(e) => write!(f, "map is not total or leaves its codomain at {e}"),
            Error::MissingGrade(l) => write!(f, "no grade for label {l}"),
            Error::NotGraded => f.write_str("term violates the grade condition"),
            Error::ArityMismatch { op, expected, found } => {
                write!(f, "operation {op} expects {expected} arguments, got {found}")
            }
            Error::NotSubtermClosed => f.write_str("universe is not closed under subterms"),
            Error::BudgetExceeded => f.write_str("budget exceeded"),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::SearchExhausted => f.write_str("search exhausted"),
            Error::OracleRejected => f.write_str("oracle answer failed verification"),
        }
    }
}

impl core::error::Error for Error {}
