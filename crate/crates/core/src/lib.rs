//! Exact rational trigonometry of tetrahedra over the rationals and prime
//! fields, with respect to an arbitrary non-degenerate symmetric bilinear
//! form.

pub mod affine;
pub mod blinalg;
pub mod checks;
pub mod cli;
pub mod error;
pub mod field;
pub mod tetra;
pub mod trig;

pub use error::{Error, Result};
pub use field::{FieldElement, FieldError, FieldSpec};
pub use tetra::{analyze, Entry, InvariantReport, SkewPairing, Tetrahedron, UndefinedReason};
