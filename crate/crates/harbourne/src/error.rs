use thiserror::Error;

/// Errors raised by arrangement operations.
///
/// Every inequality and invariant in this crate is stated as `lhs >= rhs`
/// for specific combinatorial hypotheses; the variants below signal that a
/// hypothesis of the requested operation does not hold for the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The operation needs an arrangement with only ordinary singularities.
    #[error("arrangement is not ordinary")]
    NotOrdinary,

    /// The operation is defined on a different surface kind.
    #[error("operation requires a {expected} arrangement")]
    WrongSurface { expected: &'static str },

    /// The operation needs at least one singular point (f0 > 0).
    #[error("arrangement has no singular points")]
    NoSingularities,

    /// A Harbourne quotient was requested over an empty point set.
    #[error("point set is empty")]
    EmptyPointSet,

    /// Multiplicity below the supported range for the operation.
    #[error("multiplicity {0} out of range")]
    BadMultiplicity(u64),

    /// Branching order outside the supported range for the operation.
    #[error("branching order {0} out of range")]
    BadOrder(u32),

    /// A component violates the genus hypothesis of the operation.
    #[error("arrangement has a component of genus != 1")]
    NotElliptic,

    /// Abelian cover formulas need at least two components.
    #[error("arrangement must have at least two components")]
    TooFewComponents,

    /// Malformed data fed to an operation.
    #[error("invalid input: {0}")]
    BadInput(String),

    /// Parameter outside the domain of a family or sweep.
    #[error("invalid parameter: {0}")]
    BadParameter(String),

    /// Catalog lookup with a name that matches no entry or family pattern.
    #[error("unknown catalog name: {0}")]
    UnknownCatalogName(String),
}
