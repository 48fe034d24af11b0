//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A vector handed to the rest-space cross product is not orthogonal to
    /// the observer.
    #[error("vector is not in the observer's rest space (defect {0:.3e})")]
    NotInRestSpace(f64),

    /// The spanning vectors of a would-be 2-plane are linearly dependent.
    #[error("spanning vectors are linearly dependent")]
    DegenerateSpan,

    /// A binary chiral operation received operands from opposite sectors.
    #[error("operands have different chirality")]
    MixedChirality,

    /// The operation is undefined on the zero operator.
    #[error("operator is zero")]
    ZeroOperator,

    /// The matrix is not a proper orthochronous Lorentz transformation.
    #[error("matrix is not a proper orthochronous Lorentz transformation (defect {0:.3e})")]
    NotOrthochronous(f64),

    /// The principal logarithm is ambiguous: the rotation angle of the input
    /// sits on the branch cut within tolerance.
    #[error("logarithm branch ambiguous: rotation angle within {0:.3e} of the cut")]
    BranchAmbiguous(f64),

    /// The eigenvalue path derivative divides by the base eigenvalue, which
    /// is zero for a null base operator.
    #[error("base operator is null; eigenvalue path derivative undefined")]
    NullBase,

    /// A charge state violates its invariants.
    #[error("invalid charge state: {0}")]
    InvalidState(String),

    /// An exponential composition is determined only up to a 2*pi*n unit
    /// rotation because sinh(lambda)/lambda vanishes.
    #[error("composition determined only up to a 2*pi*n rotation (sinh(lambda)/lambda = 0)")]
    Unresolvable,

    /// Exponential-equality classification received exponentials equal to
    /// +/- identity, which the classification hypothesis excludes.
    #[error("exponentials equal +/-identity; classification hypothesis excluded")]
    ExcludedCase,

    /// An iterative numeric kernel failed to converge.
    #[error("iteration failed to converge: {0}")]
    NoConvergence(&'static str),

    /// The spectrum touches the dense logarithm's branch cut.
    #[error("matrix spectrum touches the logarithm branch cut")]
    BranchCut,

    /// Only the canonical observer e0 is supported in this version.
    #[error("only the canonical observer e0 is supported for this operation")]
    UnsupportedObserver,
}

pub type Result<T> = std::result::Result<T, Error>;
