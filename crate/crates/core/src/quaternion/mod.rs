//! Exact arithmetic in the Lipschitz and Hurwitz quaternion rings.

mod division;
mod parity;
mod quat;
mod search;
mod text;
mod units;

pub use division::{
    div_rem_left, div_rem_right, extract_prime_left, extract_prime_right, gcd_left, gcd_right,
    left_divides, left_quotient, normalize_left, normalize_right, right_divides, right_quotient,
};
pub use parity::{
    classify_sg, content, dyadic_prefix, eta_parity_condition, factor_dyadic, is_primary,
    is_primitive, left_quotient_by_eta, primary_left_associate, primary_right_associate,
    DyadicFactor, Eta, KElement,
};
pub use quat::Quat;
pub(crate) use search::isqrt;
pub use search::{hurwitz_of_norm, is_prime, norm_p_elements, pure_square_root};
pub use units::{units, Unit24};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuatError {
    #[error("doubled coefficients {0:?} do not share one parity")]
    MixedParity([i64; 4]),
    #[error("quaternion has half-integer coefficients")]
    NotLipschitz,
    #[error("norm is even")]
    EvenNorm,
    #[error("quaternion is zero")]
    Zero,
    #[error("both arguments are zero")]
    BothZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("p divides every coefficient")]
    PDividesAlpha,
    #[error("p does not divide the norm")]
    NotDivisor,
    #[error("quaternion is not pure")]
    NotPure,
    #[error("norm is not a perfect square")]
    NotSquareNorm,
    #[error("quaternion is not primitive")]
    NotPrimitive,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("cannot parse quaternion {0:?}")]
    Parse(String),
}
