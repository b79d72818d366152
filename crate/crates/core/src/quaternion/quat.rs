//! The Hurwitz quaternion value type.
//!
//! A quaternion `(d1 + di*i + dj*j + dk*k) / 2` is stored by its doubled
//! coefficients, so half-integers stay exact. All four doubled coefficients
//! must have the same parity; the Lipschitz (integer) quaternions are those
//! where they are all even.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::QuatError;

/// A Hurwitz integral quaternion.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quat {
    d: [i64; 4],
}

const OVERFLOW: &str = "quaternion arithmetic overflow";

fn narrow(x: i128) -> Option<i64> {
    i64::try_from(x).ok()
}

/// Hamilton product of two coefficient vectors, widened.
fn hamilton(a: [i64; 4], b: [i64; 4]) -> [i128; 4] {
    let [a1, ai, aj, ak] = a.map(i128::from);
    let [b1, bi, bj, bk] = b.map(i128::from);
    [
        a1 * b1 - ai * bi - aj * bj - ak * bk,
        a1 * bi + ai * b1 + aj * bk - ak * bj,
        a1 * bj - ai * bk + aj * b1 + ak * bi,
        a1 * bk + ai * bj - aj * bi + ak * b1,
    ]
}

impl Quat {
    pub const ZERO: Quat = Quat { d: [0; 4] };
    pub const ONE: Quat = Quat { d: [2, 0, 0, 0] };
    pub const I: Quat = Quat { d: [0, 2, 0, 0] };
    pub const J: Quat = Quat { d: [0, 0, 2, 0] };
    pub const K: Quat = Quat { d: [0, 0, 0, 2] };
    /// `(1+i+j+k)/2`.
    pub const SIGMA: Quat = Quat { d: [1, 1, 1, 1] };

    /// Lipschitz quaternion `a + bi + cj + dk`.
    ///
    /// Panics if a coefficient does not fit after doubling.
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Quat {
        Quat::checked_new(a, b, c, d).expect(OVERFLOW)
    }

    pub fn checked_new(a: i64, b: i64, c: i64, d: i64) -> Option<Quat> {
        Some(Quat {
            d: [
                a.checked_mul(2)?,
                b.checked_mul(2)?,
                c.checked_mul(2)?,
                d.checked_mul(2)?,
            ],
        })
    }

    /// Builds a quaternion from doubled coefficients, checking the Hurwitz
    /// parity condition.
    pub fn from_doubled(d: [i64; 4]) -> Result<Quat, QuatError> {
        let p = d[0].rem_euclid(2);
        if d.iter().all(|x| x.rem_euclid(2) == p) {
            Ok(Quat { d })
        } else {
            Err(QuatError::MixedParity(d))
        }
    }

    pub fn from_coeffs(c: [i64; 4]) -> Quat {
        Quat::new(c[0], c[1], c[2], c[3])
    }

    pub fn doubled(&self) -> [i64; 4] {
        self.d
    }

    /// Integer coefficients, if the quaternion is Lipschitz.
    pub fn coeffs(&self) -> Option<[i64; 4]> {
        if self.is_lipschitz() {
            Some(self.d.map(|x| x / 2))
        } else {
            None
        }
    }

    pub fn is_lipschitz(&self) -> bool {
        self.d[0] % 2 == 0
    }

    pub fn is_zero(&self) -> bool {
        self.d == [0; 4]
    }

    /// Zero real part.
    pub fn is_pure(&self) -> bool {
        self.d[0] == 0
    }

    pub fn conj(&self) -> Quat {
        Quat {
            d: [self.d[0], -self.d[1], -self.d[2], -self.d[3]],
        }
    }

    pub fn norm(&self) -> u64 {
        self.checked_norm().expect(OVERFLOW)
    }

    pub fn checked_norm(&self) -> Option<u64> {
        let s: i128 = self.d.iter().map(|&x| i128::from(x) * i128::from(x)).sum();
        u64::try_from(s / 4).ok()
    }

    pub fn checked_add(&self, o: &Quat) -> Option<Quat> {
        Some(Quat {
            d: [
                self.d[0].checked_add(o.d[0])?,
                self.d[1].checked_add(o.d[1])?,
                self.d[2].checked_add(o.d[2])?,
                self.d[3].checked_add(o.d[3])?,
            ],
        })
    }

    pub fn checked_sub(&self, o: &Quat) -> Option<Quat> {
        Some(Quat {
            d: [
                self.d[0].checked_sub(o.d[0])?,
                self.d[1].checked_sub(o.d[1])?,
                self.d[2].checked_sub(o.d[2])?,
                self.d[3].checked_sub(o.d[3])?,
            ],
        })
    }

    pub fn checked_mul(&self, o: &Quat) -> Option<Quat> {
        let w = hamilton(self.d, o.d);
        // doubled product is (A*B)/2, exact for Hurwitz operands
        Some(Quat {
            d: [
                narrow(w[0] / 2)?,
                narrow(w[1] / 2)?,
                narrow(w[2] / 2)?,
                narrow(w[3] / 2)?,
            ],
        })
    }

    pub fn checked_scale(&self, s: i64) -> Option<Quat> {
        Some(Quat {
            d: [
                self.d[0].checked_mul(s)?,
                self.d[1].checked_mul(s)?,
                self.d[2].checked_mul(s)?,
                self.d[3].checked_mul(s)?,
            ],
        })
    }

    pub fn scale(&self, s: i64) -> Quat {
        self.checked_scale(s).expect(OVERFLOW)
    }

    /// Exact division by a nonzero integer, if the result is Hurwitz.
    pub fn div_int(&self, s: i64) -> Option<Quat> {
        if s == 0 || self.d.iter().any(|x| x % s != 0) {
            return None;
        }
        Quat::from_doubled(self.d.map(|x| x / s)).ok()
    }

    /// Sum of the four (undoubled) coefficients, doubled.
    pub(crate) fn doubled_sum(&self) -> i64 {
        self.d.iter().sum()
    }
}

impl Add for Quat {
    type Output = Quat;
    fn add(self, o: Quat) -> Quat {
        self.checked_add(&o).expect(OVERFLOW)
    }
}

impl Sub for Quat {
    type Output = Quat;
    fn sub(self, o: Quat) -> Quat {
        self.checked_sub(&o).expect(OVERFLOW)
    }
}

impl Mul for Quat {
    type Output = Quat;
    fn mul(self, o: Quat) -> Quat {
        self.checked_mul(&o).expect(OVERFLOW)
    }
}

impl Neg for Quat {
    type Output = Quat;
    fn neg(self) -> Quat {
        self.checked_scale(-1).expect(OVERFLOW)
    }
}

impl fmt::Debug for Quat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quat({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defining_relations() {
        assert_eq!(Quat::I * Quat::J, Quat::K);
        assert_eq!(Quat::J * Quat::K, Quat::I);
        assert_eq!(Quat::K * Quat::I, Quat::J);
        assert_eq!(Quat::J * Quat::I, -Quat::K);
        assert_eq!(Quat::I * Quat::I, -Quat::ONE);
    }

    #[test]
    fn one_plus_i_times_conj_is_two() {
        assert_eq!(
            Quat::new(1, 1, 0, 0) * Quat::new(1, -1, 0, 0),
            Quat::new(2, 0, 0, 0)
        );
    }

    #[test]
    fn sigma_squared() {
        // expanded by hand: ((1+i+j+k)/2)^2 = (-1+i+j+k)/2
        let s2 = Quat::SIGMA * Quat::SIGMA;
        assert_eq!(s2, Quat::from_doubled([-1, 1, 1, 1]).unwrap());
    }

    #[test]
    fn mixed_parity_rejected() {
        assert!(Quat::from_doubled([1, 0, 1, 1]).is_err());
        assert!(Quat::from_doubled([3, -1, 1, 5]).is_ok());
    }

    #[test]
    fn overflow_is_detected() {
        let big = Quat::from_doubled([i64::MAX - 1, 0, 0, 0]).unwrap();
        assert!(big.checked_mul(&big).is_none());
        assert!(big.checked_add(&big).is_none());
        assert!(Quat::checked_new(i64::MAX, 0, 0, 0).is_none());
    }

    #[test]
    fn norm_of_half_integer() {
        assert_eq!(Quat::SIGMA.norm(), 1);
        assert_eq!(Quat::from_doubled([3, 1, 1, 1]).unwrap().norm(), 3);
    }
}
