use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("expression depends on the parameter s where a plain germ is required")]
    UnexpectedParameter,

    #[error("polynomial is zero")]
    ZeroPolynomial,

    #[error("germ does not vanish at the origin (nonzero constant term)")]
    ConstantTerm,

    #[error("support is empty")]
    EmptySupport,

    #[error("support contains the origin")]
    OriginInSupport,

    #[error("Newton polygon is not convenient (it must touch both axes)")]
    NotConvenient,

    #[error("Newton polygon has no compact face")]
    NoCompactFace,

    #[error("the constant monomial cannot be used as a deformation term")]
    OriginMonomial,

    #[error("face endpoint is not in the support of the polynomial")]
    FaceEndpointMissing,

    #[error("germ is degenerate; this invariant is only defined in the non-degenerate case")]
    Degenerate,

    #[error("germ is smooth at the origin; no nonzero jump exists")]
    Smooth,

    #[error("singularity at the origin is not isolated")]
    NonIsolated,

    #[error("one-slope extents must satisfy p >= q >= 2 (q = 1 is a smooth germ), got ({p}, {q})")]
    InvalidSlopeExtents { p: u32, q: u32 },

    #[error("family does not specialize to the base germ at s = 0")]
    FamilyBaseMismatch,

    #[error("family is constant in the parameter s")]
    ConstantFamily,

    #[error("sample value s = 0 does not deform the germ")]
    ZeroSampleValue,

    #[error("no sample values supplied")]
    NoSamples,

    #[error("every sample has a Milnor number exceeding the base germ's; samples are non-generic")]
    NonGenericSample,
}

pub type Result<T> = std::result::Result<T, Error>;
