//! Integral cubes in `Z^4`: construction, decomposition, extension and
//! counting of systems of pairwise orthogonal equal-length integer vectors,
//! through the arithmetic of Hurwitz integral quaternions.

pub mod quaternion;

pub use quaternion::{KElement, Quat, QuatError, Unit24};
pub mod icube;

pub use icube::{ICube, IVec, IcubeError};
pub mod counting;
pub mod enumeration;

pub use counting::{count_report, cross_check, CountError, CountReport};
pub use enumeration::{EnumBudget, EnumError};
