use thiserror::Error;

use crate::field::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("symmetric form is degenerate (det B = 0)")]
    DegenerateForm,
    #[error("spanning vectors of the plane are linearly dependent")]
    DegeneratePlane,
    #[error("direction vector is zero")]
    ZeroDirection,
    #[error("projection axis is B-null")]
    NullAxis,
    #[error("a line direction is B-null")]
    NullDirection,
    #[error("a plane normal is B-null")]
    NullNormal,
    #[error("a pairwise B-vector product is B-null")]
    NullCross,
    #[error("opposite edges are not skew, or the skew denominator vanishes")]
    NotSkewOrDegenerate,
    #[error("common B-perpendicular of opposite edges is B-null")]
    NullCommonPerpendicular,
    #[error("orthogonalization met a B-null pivot at seed vector {0}")]
    NullPivot(usize),
    #[error("tetrahedron is not B-tri-rectangular at A0")]
    NotTriRectangular,
    #[error("tri-rectangular parameters are degenerate: {0}")]
    DegenerateParams(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
