use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrimeCharacteristic(u64),
    #[error("structure constants are not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("the given unit is not a two-sided identity")]
    NoUnit,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("ideal basis is linearly dependent or has the wrong length")]
    BadIdealBasis,
    #[error("ideal is not two-sided")]
    NotTwoSided,
    #[error("ideal does not square to zero")]
    IdealNotSquareZero,
    #[error("not a bimodule: {0}")]
    NotBimodule(String),
    #[error("module axioms fail: {0}")]
    NotModule(String),
    #[error("matrix does not intertwine the actions")]
    NotHom,
    #[error("enumeration budget of {0} exceeded")]
    EnumerationBudgetExceeded(u64),
    #[error("composition factor not found among the simple modules")]
    UnrecognizedFactor,
    #[error("subspace is not a submodule")]
    NotSubmodule,
    #[error("the subobject Y is not killed by the ideal")]
    NotKilledByI,
    #[error("X/Y is not killed by the ideal (X·I is not contained in Y)")]
    QuotientNotInB,
    #[error("module is not killed by the ideal")]
    NotInB,
    #[error("morphism does not map Y into Y'")]
    NotPairHom,
    #[error("condition (i) fails: v ∘ ĵ(u) ≠ 0")]
    ConditionOneFails,
    #[error("condition (ii) fails: u ∘ v differs from the multiplication map ĵ(X) → X")]
    ConditionTwoFails,
    #[error("invalid quadruple: {0}")]
    InvalidCObject(String),
    #[error("morphisms are not composable")]
    NotComposable,
    #[error("verification failed: {0}")]
    VerificationFailure(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
