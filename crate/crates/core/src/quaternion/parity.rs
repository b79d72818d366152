//! Parity classes of odd-norm Lipschitz quaternions, primary associates and
//! the extraction of dyadic factors.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{units, Quat, QuatError, Unit24};

/// An element of `K = {1, i, j, k}`, used as a coefficient position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KElement {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "i")]
    I,
    #[serde(rename = "j")]
    J,
    #[serde(rename = "k")]
    K,
}

impl KElement {
    pub const ALL: [KElement; 4] = [KElement::One, KElement::I, KElement::J, KElement::K];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> KElement {
        KElement::ALL[i]
    }

    /// Klein-group product: quaternion multiplication ignoring signs.
    pub fn klein(self, other: KElement) -> KElement {
        KElement::from_index(self.index() ^ other.index())
    }

    pub fn quat(self) -> Quat {
        [Quat::ONE, Quat::I, Quat::J, Quat::K][self.index()]
    }
}

impl fmt::Display for KElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["1", "i", "j", "k"][self.index()])
    }
}

fn require_odd_lipschitz(a: &Quat) -> Result<[i64; 4], QuatError> {
    let c = a.coeffs().ok_or(QuatError::NotLipschitz)?;
    if a.norm().is_multiple_of(2) {
        return Err(QuatError::EvenNorm);
    }
    Ok(c)
}

/// The class `S_g` containing an odd-norm Lipschitz quaternion: `g` is the
/// unique position whose coefficient parity differs from the other three.
pub fn classify_sg(a: &Quat) -> Result<KElement, QuatError> {
    let c = require_odd_lipschitz(a)?;
    let odd: Vec<usize> = (0..4).filter(|&p| c[p].rem_euclid(2) == 1).collect();
    let pos = match odd.len() {
        1 => odd[0],
        3 => (0..4).find(|p| !odd.contains(p)).unwrap(),
        _ => unreachable!("odd norm has one or three odd coefficients"),
    };
    Ok(KElement::from_index(pos))
}

/// Lipschitz, in `S_1`, and coefficient sum `≡ 1 (mod 4)`.
pub fn is_primary(a: &Quat) -> bool {
    a.is_lipschitz()
        && a.norm() % 2 == 1
        && classify_sg(a) == Ok(KElement::One)
        && (a.doubled_sum() / 2).rem_euclid(4) == 1
}

fn require_odd_nonzero(a: &Quat) -> Result<(), QuatError> {
    if a.is_zero() {
        Err(QuatError::Zero)
    } else if a.norm().is_multiple_of(2) {
        Err(QuatError::EvenNorm)
    } else {
        Ok(())
    }
}

/// The unit `ε` and the primary quaternion `ε·a`.
pub fn primary_left_associate(a: &Quat) -> Result<(Unit24, Quat), QuatError> {
    require_odd_nonzero(a)?;
    unique_primary(units().iter().map(|&u| (u, u.value() * *a)))
}

/// The primary quaternion `a·ε` and the unit `ε`.
pub fn primary_right_associate(a: &Quat) -> Result<(Quat, Unit24), QuatError> {
    require_odd_nonzero(a)?;
    unique_primary(units().iter().map(|&u| (u, *a * u.value()))).map(|(u, q)| (q, u))
}

fn unique_primary(
    cands: impl Iterator<Item = (Unit24, Quat)>,
) -> Result<(Unit24, Quat), QuatError> {
    let hits: Vec<_> = cands.filter(|(_, q)| is_primary(q)).collect();
    assert_eq!(
        hits.len(),
        1,
        "odd-norm quaternion must have exactly one primary associate"
    );
    Ok(hits[0])
}

/// Coefficients have gcd 1.
pub fn is_primitive(a: &Quat) -> Result<bool, QuatError> {
    let c = a.coeffs().ok_or(QuatError::NotLipschitz)?;
    Ok(content(&c) == 1)
}

/// Nonnegative gcd of a list of integers.
pub fn content(xs: &[i64]) -> u64 {
    xs.iter().fold(0u64, |g, &x| gcd_u64(g, x.unsigned_abs()))
}

pub(crate) fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// One of `1+i`, `1+j`, `1+k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Eta {
    #[serde(rename = "1+i")]
    I,
    #[serde(rename = "1+j")]
    J,
    #[serde(rename = "1+k")]
    K,
}

impl Eta {
    pub const ALL: [Eta; 3] = [Eta::I, Eta::J, Eta::K];

    pub fn quat(self) -> Quat {
        match self {
            Eta::I => Quat::new(1, 1, 0, 0),
            Eta::J => Quat::new(1, 0, 1, 0),
            Eta::K => Quat::new(1, 0, 0, 1),
        }
    }
}

/// `a = η·b` with `b` Lipschitz, if such `b` exists.
pub fn left_quotient_by_eta(a: &Quat, eta: Eta) -> Option<Quat> {
    let b = (eta.quat().conj() * *a).div_int(2)?;
    b.is_lipschitz().then_some(b)
}

/// The parity test for `a ∈ (1+g)·L`: the coefficients pair up by parity,
/// position 1 with `g` and the remaining two with each other.
pub fn eta_parity_condition(a: &Quat, eta: Eta) -> Result<bool, QuatError> {
    let c = a.coeffs().ok_or(QuatError::NotLipschitz)?;
    let g = match eta {
        Eta::I => 1,
        Eta::J => 2,
        Eta::K => 3,
    };
    let rest: Vec<usize> = (1..4).filter(|&p| p != g).collect();
    Ok((c[0] - c[g]).rem_euclid(2) == 0 && (c[rest[0]] - c[rest[1]]).rem_euclid(2) == 0)
}

/// A Lipschitz quaternion split as `(1+i)^(power-1) · η · rest` with odd
/// `norm(rest)`; `eta` is `None` exactly when `power == 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DyadicFactor {
    pub eta: Option<Eta>,
    pub power: u32,
    pub rest: Quat,
}

impl DyadicFactor {
    /// `(1+i)^(power-1) · η`, or 1 for odd norm.
    pub fn prefix(&self) -> Quat {
        dyadic_prefix(self.power, self.eta)
    }
}

pub fn dyadic_prefix(power: u32, eta: Option<Eta>) -> Quat {
    match eta {
        None => Quat::ONE,
        Some(e) => {
            let one_plus_i = Eta::I.quat();
            (1..power).fold(Quat::ONE, |acc, _| acc * one_plus_i) * e.quat()
        }
    }
}

pub fn factor_dyadic(a: &Quat) -> Result<DyadicFactor, QuatError> {
    if a.is_zero() {
        return Err(QuatError::Zero);
    }
    if !a.is_lipschitz() {
        return Err(QuatError::NotLipschitz);
    }
    let mut b = *a;
    let mut power = 0;
    while b.norm().is_multiple_of(4) {
        b = left_quotient_by_eta(&b, Eta::I).expect("norm divisible by 4 admits a (1+i) factor");
        power += 1;
    }
    if b.norm() % 2 == 1 {
        debug_assert_eq!(power, 0, "norm 2^n D with n >= 1 always reaches norm 2D");
        return Ok(DyadicFactor {
            eta: None,
            power: 0,
            rest: b,
        });
    }
    let hits: Vec<(Eta, Quat)> = Eta::ALL
        .iter()
        .filter_map(|&e| left_quotient_by_eta(&b, e).map(|q| (e, q)))
        .collect();
    assert_eq!(hits.len(), 1, "norm 2 (mod 4) has exactly one eta factor");
    Ok(DyadicFactor {
        eta: Some(hits[0].0),
        power: power + 1,
        rest: hits[0].1,
    })
}
