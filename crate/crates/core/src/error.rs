use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse scalar `{0}`")]
    BadScalar(String),
    #[error("ambient dimension mismatch: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("ideal is not Lie-central")]
    NotLieCentral,
    #[error("operation needs 2 invertible in the field (characteristic 2 rejected)")]
    CharacteristicTwo,
    #[error("map is not a homomorphism")]
    NotAHomomorphism,
    #[error("projection is not surjective")]
    NotSurjective,
    #[error("projection kernel does not match the declared ideal")]
    KernelMismatch,
    #[error("witness shape mismatch: {0}")]
    WitnessShape(String),
    #[error("mixed scalar fields: {left:?} vs {right:?}")]
    FieldMismatch {
        left: crate::scalar::FieldSpec,
        right: crate::scalar::FieldSpec,
    },
    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),
    #[error("invalid algebra file: {0}")]
    BadFile(String),
}
