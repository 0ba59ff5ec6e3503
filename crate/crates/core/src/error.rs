//! Error type shared by all engine modules.

use alloc::string::String;
use core::fmt;

/// Errors raised by the fusion engine.
///
/// Validation findings are *not* errors: [`crate::validate::validate`]
/// reports them without aborting. An `Error` means an operation could not
/// produce a meaningful value at all (unknown label, malformed input,
/// resource bound exceeded, or an internal consistency assertion that
/// signals a modeling mistake).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A label was not found in the category it was used with.
    UnknownLabel { category: String, label: String },
    /// A fusion table has no entry for the given pair (in either order).
    MissingFusionEntry { a: String, b: String },
    /// An operation required a simple label.
    NotSimple(String),
    /// An operation required an invertible simple label.
    NotInvertible(String),
    /// A fusion result expected to be a single simple label was not.
    NotSingleSimple { a: String, b: String },
    /// Two indecomposables were declared with the same label.
    DuplicateLabel(String),
    /// A label name violates the naming rules (empty, whitespace,
    /// unbalanced parentheses, leading `(`, or a top-level comma).
    BadLabelName(String),
    /// A tuple label does not have the arity the category expects.
    ArityMismatch {
        label: String,
        expected: usize,
        found: usize,
    },
    /// An input category failed the structural pre-checks of a constructor.
    InvalidCategory(String),
    /// `power(cat, 0)` is not defined.
    ZeroPower,
    /// A code and a weight list disagree on the ambient dimension.
    DimensionMismatch { code_dim: usize, p_len: usize },
    /// A generator contains an element outside `1..=d`.
    ElementOutOfRange { element: usize, d: usize },
    /// A scalar parameter is outside its documented domain.
    BadParameter(String),
    /// A size-bounded operation was asked to exceed its bound.
    OverBound {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    /// The code fails the admissibility conditions required here.
    InadmissibleCode(String),
    /// The base category is not the expected tensor power of the W_2 atlas.
    WrongBase(String),
    /// Induction was applied to (or produced) a non-local object.
    NonLocal(String),
    /// A simple-object orbit carries inconsistent twist phases.
    TwistInconsistent(String),
    /// The Frobenius hom pattern of a projective cover did not single out
    /// exactly one simple with dimension one.
    HomPattern(String),
    /// A structural map (dual, composition factor) left the engine's domain.
    DomainEscape(String),
    /// A relabeling map is not a bijection on the category's labels.
    Relabel(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownLabel { category, label } => {
                write!(f, "unknown label `{label}` in category `{category}`")
            }
            Error::MissingFusionEntry { a, b } => {
                write!(f, "fusion table has no entry for ({a}, {b})")
            }
            Error::NotSimple(l) => write!(f, "label `{l}` is not simple"),
            Error::NotInvertible(l) => write!(f, "label `{l}` is not invertible"),
            Error::NotSingleSimple { a, b } => {
                write!(f, "fusion ({a}, {b}) is not a single simple label")
            }
            Error::DuplicateLabel(l) => write!(f, "duplicate label `{l}`"),
            Error::BadLabelName(l) => write!(f, "invalid label name `{l}`"),
            Error::ArityMismatch {
                label,
                expected,
                found,
            } => write!(f, "label `{label}` has arity {found}, expected {expected}"),
            Error::InvalidCategory(msg) => write!(f, "invalid category data: {msg}"),
            Error::ZeroPower => write!(f, "tensor power requires d >= 1"),
            Error::DimensionMismatch { code_dim, p_len } => write!(
                f,
                "code dimension {code_dim} does not match weight list of length {p_len}"
            ),
            Error::ElementOutOfRange { element, d } => {
                write!(f, "element {element} out of range 1..={d}")
            }
            Error::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
            Error::OverBound {
                what,
                requested,
                limit,
            } => write!(f, "{what} = {requested} exceeds bound {limit}"),
            Error::InadmissibleCode(msg) => write!(f, "inadmissible code: {msg}"),
            Error::WrongBase(msg) => write!(f, "wrong base category: {msg}"),
            Error::NonLocal(msg) => write!(f, "non-local object: {msg}"),
            Error::TwistInconsistent(msg) => write!(f, "inconsistent twist: {msg}"),
            Error::HomPattern(msg) => write!(f, "unexpected hom pattern: {msg}"),
            Error::DomainEscape(msg) => write!(f, "object leaves the engine domain: {msg}"),
            Error::Relabel(msg) => write!(f, "invalid relabeling: {msg}"),
        }
    }
}

/// Convenience alias used across the crate.
pub type Result<T> = core::result::Result<T, Error>;
