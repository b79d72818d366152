//! Twins and icubes: validation, types, decomposition and extension.

mod cube;
mod decompose;
mod dyadic;
mod extend;
mod types;

pub use cube::{validate_icube, ICube, IVec, FORMAT_VERSION};
pub use decompose::{compose, decompose, decompose_with, Decomposition, Side};
pub use dyadic::{lift_dyadic, reduce_dyadic, DyadicReduction};
pub use extend::{cayley_extend, extend_minor, extend_z4};
pub use types::{icube_type, permute_components, to_orderly, KPerm, TypeSig};

use thiserror::Error;

use crate::quaternion::{KElement, Quat, QuatError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IcubeError {
    #[error("an icube needs at least one vector of positive dimension")]
    Empty,
    #[error("vector {index} has dimension {found}, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("{m} vectors cannot be pairwise orthogonal in dimension {n}")]
    TooManyVectors { m: usize, n: usize },
    #[error("vector {0} is zero")]
    ZeroVector(usize),
    #[error("vectors {0} and {1} are not twins")]
    NotTwins(usize, usize),
    #[error("quaternion argument is zero")]
    Zero,
    #[error("quaternion has half-integer coefficients")]
    NotLipschitz,
    #[error("operation needs dimension 4, got {0}")]
    NotFourDimensional(usize),
    #[error("edge norm is even")]
    EvenNorm,
    #[error("class {0} appears twice in the type")]
    RepeatedType(KElement),
    #[error("images do not form a permutation of K")]
    NotAPermutation,
    #[error("the icube already has four vectors")]
    AlreadyFull,
    #[error("expected an (n-1)-icube in dimension n, got m = {m}, n = {n}")]
    WrongSize { m: usize, n: usize },
    #[error("odd dimension {n} needs a square edge norm, got {norm}")]
    OddDimensionNonsquareNorm { n: usize, norm: u64 },
    #[error("unsupported dimension {0} (expected 2, 4 or 8)")]
    UnsupportedDimension(usize),
    #[error("inconsistent certificate: {0}")]
    InconsistentCertificate(String),
    #[error("arithmetic overflow")]
    Overflow,
    #[error(transparent)]
    Quat(#[from] QuatError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Equal norms and `conj(a)·b = -conj(b)·a`.
pub fn are_twins(a: &Quat, b: &Quat) -> Result<bool, IcubeError> {
    if a.is_zero() || b.is_zero() {
        return Err(IcubeError::Zero);
    }
    if !a.is_lipschitz() || !b.is_lipschitz() {
        return Err(IcubeError::NotLipschitz);
    }
    Ok(a.norm() == b.norm() && a.conj() * *b == -(b.conj() * *a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn twin_examples() {
        assert_eq!(are_twins(&Quat::ONE, &Quat::I), Ok(true));
        assert_eq!(
            are_twins(&Quat::new(1, 1, 0, 0), &Quat::new(1, -1, 0, 0)),
            Ok(true)
        );
        assert_eq!(
            are_twins(&Quat::new(1, 1, 0, 0), &Quat::new(1, 0, 1, 0)),
            Ok(false)
        );
        assert_eq!(are_twins(&Quat::ZERO, &Quat::I), Err(IcubeError::Zero));
    }

    #[test]
    fn twin_characterization_matches_vectors() {
        let r = -2..=2i64;
        let box_: Vec<Quat> = r
            .clone()
            .flat_map(|a| {
                let r = r.clone();
                r.clone().flat_map(move |b| {
                    let r = r.clone();
                    r.clone()
                        .flat_map(move |c| r.clone().map(move |d| Quat::new(a, b, c, d)))
                })
            })
            .filter(|q| !q.is_zero())
            .collect();
        for a in &box_ {
            let va = IVec::from_quat(a).unwrap();
            for b in &box_ {
                let vb = IVec::from_quat(b).unwrap();
                let by_vectors = va.norm() == vb.norm() && va.dot(&vb) == 0;
                assert_eq!(are_twins(a, b).unwrap(), by_vectors, "{a} {b}");
            }
        }
    }

    fn lipschitz(r: i64) -> impl Strategy<Value = Quat> {
        prop::array::uniform4(-r..=r).prop_map(Quat::from_coeffs)
    }

    proptest! {
        #[test]
        fn multiplication_preserves_twins(
            a in lipschitz(20), g in lipschitz(20), u in 1usize..4,
        ) {
            prop_assume!(!a.is_zero() && !g.is_zero());
            let b = a * crate::quaternion::KElement::from_index(u).quat();
            prop_assert!(are_twins(&a, &b).unwrap());
            prop_assert!(are_twins(&(a * g), &(b * g)).unwrap());
            prop_assert!(are_twins(&(g * a), &(g * b)).unwrap());
        }
    }
}
