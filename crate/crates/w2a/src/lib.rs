//! Desk-scale learning-from-interaction pipeline for articulated objects.
//!
//! The crate bundles a deterministic quasi-static simulator of box-composed
//! articulated objects, a two-finger gripper interaction oracle for six
//! action primitives, and a trainable per-point affordance network
//! (actionability, action proposals, action scoring) with hybrid
//! offline/online data sampling and an evaluation harness.
//!
//! Core math and the tensor engine are generic over the scalar type via
//! [`scalar::Scalar`]; the simulator side runs at [`Real`] (f64) and the
//! network trains in f32 with an f64 mode reserved for gradient checking.

pub mod bench;
pub mod config;
pub mod data;
pub mod interact;
pub mod math;
pub mod net;
pub mod scalar;
pub mod sensor;
pub mod sim;
pub mod tensor;

/// Scalar used by the simulator, geometry and sampling code.
pub type Real = f64;

pub type Vec3 = math::Vec3<Real>;
pub type UnitVec3 = math::UnitVec3<Real>;
pub type Rot3 = math::Rot3<Real>;
pub type Rot6d = math::Rot6d<Real>;
pub type Transform = math::Transform<Real>;

/// Scalar used for network training and checkpoints.
pub type TrainScalar = f32;
