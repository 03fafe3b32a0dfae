use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    // Number field construction.
    #[error("defining polynomial is not squarefree")]
    NotSquarefree,
    #[error("defining polynomial is not monic with integer coefficients")]
    NotMonic,
    #[error("no root of the defining polynomial in the given interval")]
    NoRootInInterval,
    #[error("more than one root of the defining polynomial in the given interval")]
    MultipleRootsInInterval,
    #[error("the isolated root is provably <= 1")]
    RootNotGreaterThanOne,
    #[error("defining polynomial is reducible over the rationals")]
    NotIrreducible,

    // Field arithmetic.
    #[error("division by zero in the number field")]
    DivisionByZero,
    #[error("operands belong to different number fields")]
    FieldMismatch,
    #[error("cannot certify root isolation at the requested precision")]
    RootEnclosureFailure,

    // Expansions.
    #[error("input lies outside [0, 1]")]
    InputOutOfRange,
    #[error("a quasi-greedy expansion did not become periodic within the step cap")]
    QuasiGreedyNotPeriodic,
    #[error("step cap exceeded before the expansion became periodic")]
    CapExceeded,

    // Spectra.
    #[error("spectrum element cap exceeded")]
    ElementCapExceeded,
    #[error("fewer than two spectrum elements")]
    TooFewElements,
    #[error("the base product is not a Pisot number")]
    NotPisot,

    // Automata.
    #[error("an alphabet does not contain the digit 0")]
    ZeroNotInAlphabet,

    // Polynomial system.
    #[error("an expansion starts with the digit 0")]
    FirstDigitZero,
    #[error("the field generator is not a root of the candidate polynomial")]
    DeltaNotRoot,
    #[error("the eigenvector system does not have rank p-1")]
    RankNotPminus1,
    #[error("recovered base does not reproduce the given expansions")]
    VerificationFailed,
    #[error("candidate polynomial has an unexpected leading coefficient")]
    LeadingCoefficientUnexpected,

    // Normalization.
    #[error("representation value lies outside [0, 1)")]
    ValueOutOfRange,

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
