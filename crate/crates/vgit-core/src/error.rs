use thiserror::Error;

/// Errors shared across the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("matrix is not symmetric positive definite")]
    NotPositiveDefinite,

    #[error("index {index} out of range for {count} weights")]
    IndexOutOfRange { index: usize, count: usize },

    #[error("zero vector where a nonzero vector is required")]
    ZeroVector,

    #[error(
        "bounding polytope is not full-dimensional (affine dim {affine_dim} < ambient {ambient})"
    )]
    DegenerateBound { affine_dim: usize, ambient: usize },

    #[error(
        "weights do not span: affine dimension {affine_dim} < torus rank {rank}; \
         every linearization lies on the improper wall"
    )]
    ImproperWall { affine_dim: usize, rank: usize },

    #[error("linearization is not G-effective: normalized point lies outside the weight polytope")]
    Ineffective,

    #[error("adapted one-parameter subgroup undefined: the point is semistable")]
    AdaptedUndefined,

    #[error("cell is a chamber: nothing to cross")]
    CellIsChamber,

    #[error("cell does not lie on a single codimension-one wall")]
    NotCodimOne,

    #[error("cell lies on the boundary of the G-ample cone and cannot be crossed")]
    BoundaryCell,

    #[error("wall is not truly faithful: pivotal state set has stabilizer dimension {0}")]
    NotTrulyFaithful(usize),

    #[error("cell is not contained in the closure of the chamber")]
    NotInClosure,

    #[error("points do not span projective space: matrix rank {rank} < {required}")]
    NotSpanning { rank: usize, required: usize },

    #[error("instance too large: {what} = {value} exceeds the configured bound {bound}")]
    ScaleGuard {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("invalid input: {0}")]
    Invalid(String),
}
