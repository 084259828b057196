use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("enumeration over {coords} coordinates exceeds the limit of {limit}")]
    EnumerationBound { coords: usize, limit: usize },
    #[error("FACE_EMPTY: the face torus contains no point of the variety")]
    FaceEmpty,
    #[error("DEGENERATE_WALL: wall {0} contains the whole ambient cone")]
    DegenerateWall(usize),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ambient cone is not full-dimensional")]
    AmbientNotFullDimensional,
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
}
