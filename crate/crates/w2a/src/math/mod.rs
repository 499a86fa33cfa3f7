//! Rotation representations, distances and orientation sampling.

mod rot;
mod vec;

pub use rot::{rot_distance, rot6d_distance, Rot3, Rot6d};
pub use vec::{Transform, UnitVec3, Vec3};

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum MathError {
    /// The 6D input cannot be orthonormalized (zero or parallel axes).
    #[error("degenerate 6d rotation input")]
    DegenerateInput,
    /// A vector with (near-)zero norm where a direction is required.
    #[error("zero-length vector cannot be normalized")]
    ZeroVector,
}
