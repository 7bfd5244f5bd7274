use thiserror::Error;

use crate::embeddings::KitViolation;

/// Result alias used throughout the crate.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or querying spaces.
///
/// Sets inside messages are rendered with their labels, e.g. `{a,b}`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid label `{label}`: {reason}")]
    InvalidLabel { label: String, reason: &'static str },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("ground set has {found} points, at most {max} are supported")]
    TooManyPoints { found: usize, max: usize },
    #[error("subset does not belong to the ground set")]
    GroundMismatch,
    #[error("atoms do not partition the ground set: {0}")]
    NotAPartition(String),
    #[error("expected {expected} atom values, found {found}")]
    ValueCount { expected: usize, found: usize },
    #[error("invalid extended real `{0}`")]
    ParseValue(String),
    #[error("set {0} is not measurable")]
    NotMeasurable(String),
    #[error("family is empty")]
    EmptyFamily,
    #[error("family is not a filter-base: {0}")]
    NotFilterBase(String),
    #[error("family is not an ultrafilter")]
    NotUltrafilter,
    #[error("ultrafilter does not have the countable intersection property")]
    NoCountableIntersection,
    #[error("measure is not {{0,1}}-valued: {0}")]
    NotZeroOne(String),
    #[error("measure is identically zero")]
    TrivialMeasure,
    #[error("null sets do not cover the ground set: `{0}` lies in no null set")]
    NullSetsDoNotCover(String),
    #[error("points {0} are not all contained in the larger ground set")]
    NotASubspace(String),
    #[error("trace mismatch: {0}")]
    TraceMismatch(String),
    #[error("member {0} misses the subspace")]
    MemberMissesSubspace(String),
    #[error("not an embedding: {0}")]
    NotEmbedded(String),
    #[error("invalid extension kit ({} violation(s)): {}", .0.len(), .0.first().map(|v| v.to_string()).unwrap_or_default())]
    InvalidKit(Vec<KitViolation>),
    #[error("label `{0}` is not fresh")]
    LabelNotFresh(String),
    #[error("enumeration is capped at {cap} points, requested {requested}")]
    EnumerationCap { requested: usize, cap: usize },
    #[error("singleton {{{0}}} is not measurable")]
    SingletonNotMeasurable(String),
    #[error("kernel {0} is not a singleton; only the ultrafilter-indexed form exists")]
    NotSeparated(String),
    #[error("malformed document: {0}")]
    Format(String),
    #[error("space has no atom values")]
    MissingValues,
    #[error("internal consistency check failed: {0}")]
    Invariant(String),
}

impl Error {
    /// Stable machine-readable code, used by the command-line front end.
    pub fn code(&self) -> &'static str {
        match self {
            Error::DuplicateLabel(_) => "duplicate_label",
            Error::InvalidLabel { .. } => "invalid_label",
            Error::UnknownLabel(_) => "unknown_label",
            Error::TooManyPoints { .. } => "too_many_points",
            Error::GroundMismatch => "ground_mismatch",
            Error::NotAPartition(_) => "not_a_partition",
            Error::ValueCount { .. } => "value_count",
            Error::ParseValue(_) => "parse_value",
            Error::NotMeasurable(_) => "not_measurable",
            Error::EmptyFamily => "empty_family",
            Error::NotFilterBase(_) => "not_filter_base",
            Error::NotUltrafilter => "not_ultrafilter",
            Error::NoCountableIntersection => "no_cip",
            Error::NotZeroOne(_) => "not_zero_one",
            Error::TrivialMeasure => "trivial_measure",
            Error::NullSetsDoNotCover(_) => "null_sets_do_not_cover",
            Error::NotASubspace(_) => "not_a_subspace",
            Error::TraceMismatch(_) => "trace_mismatch",
            Error::MemberMissesSubspace(_) => "member_misses_subspace",
            Error::NotEmbedded(_) => "not_embedded",
            Error::InvalidKit(_) => "invalid_kit",
            Error::LabelNotFresh(_) => "label_not_fresh",
            Error::EnumerationCap { .. } => "enumeration_cap",
            Error::SingletonNotMeasurable(_) => "singleton_not_measurable",
            Error::NotSeparated(_) => "not_separated",
            Error::Format(_) => "format",
            Error::MissingValues => "missing_values",
            Error::Invariant(_) => "invariant",
        }
    }
}
