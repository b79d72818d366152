//! Canonical quaternion certificates for icubes in `Z^4`.
//!
//! Every icube is reduced to an orderly primitive icube of odd edge norm, which
//! is then written as `(γ ε_1 δ, …, γ ε_m δ)` with `γ`, `δ` primary and
//! `ε_ℓ = ±(1, i, j, k)_ℓ`. The certificate is unique for `m >= 2` once `γ` is
//! primitive (`m >= 3`) or `γ i conj(γ)` is primitive (`m = 2`); for `m = 1`
//! it is fixed by taking `γ = 1`.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{lift_dyadic, permute_components, reduce_dyadic, to_orderly, ICube, IcubeError, KPerm};
use crate::quaternion::{
    content, extract_prime_left, extract_prime_right, is_primary, left_quotient, right_quotient,
    Eta, KElement, Quat,
};

/// Which side prime factors are pulled from first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Side {
    #[default]
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub dyadic_power: u32,
    pub eta: Option<Eta>,
    pub coord_perm: KPerm,
    pub gamma: Quat,
    pub delta: Quat,
    /// `±1` for each member; `ε_ℓ = signs[ℓ] · (1, i, j, k)[ℓ]`.
    pub signs: Vec<i8>,
    pub scalar_content: u64,
}

impl Decomposition {
    pub fn m(&self) -> usize {
        self.signs.len()
    }

    pub fn epsilon(&self, l: usize) -> Quat {
        KElement::from_index(l)
            .quat()
            .scale(i64::from(self.signs[l]))
    }
}

pub(crate) fn smallest_prime_factor(n: u64) -> u64 {
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return d;
        }
        d += 1;
    }
    n
}

/// `±p`, whichever is `≡ 1 (mod 4)`; multiplying by it keeps primary elements primary.
fn primary_scalar(p: u64) -> Result<i64, IcubeError> {
    let p = i64::try_from(p).map_err(|_| IcubeError::Overflow)?;
    Ok(if p % 4 == 1 { p } else { -p })
}

/// The primary prime of norm `p` dividing every member on `side`, if the
/// members agree on one.
fn common_prime(members: &[Quat], p: u64, side: Side) -> Option<Quat> {
    let pi = i64::try_from(p).ok()?;
    let mut found: Option<Quat> = None;
    for b in members.iter().filter(|b| b.div_int(pi).is_none()) {
        let e = match side {
            Side::Left => extract_prime_left(b, p),
            Side::Right => extract_prime_right(b, p),
        }
        .ok()?;
        match found {
            None => found = Some(e),
            Some(f) if f != e => return None,
            Some(_) => {}
        }
    }
    found
}

/// Pulls primary primes of norm `p` out of an orderly odd-norm icube until
/// only units remain: `members[ℓ] = γ · rest[ℓ] · δ`.
fn peel(members: &[Quat], prefer: Side) -> Result<(Quat, Quat, Vec<Quat>), IcubeError> {
    let internal = |s: &str| IcubeError::Internal(s.to_string());
    let mut gamma = Quat::ONE;
    let mut delta = Quat::ONE;
    let mut rest = members.to_vec();
    loop {
        let n = rest[0].norm();
        if n == 1 {
            break;
        }
        let p = smallest_prime_factor(n);
        let pi = i64::try_from(p).map_err(|_| IcubeError::Overflow)?;
        if rest.iter().all(|b| b.div_int(pi).is_some()) {
            let s = primary_scalar(p)?;
            rest = rest.iter().map(|b| b.div_int(s).unwrap()).collect();
            delta = delta.scale(s);
            continue;
        }
        let order = match prefer {
            Side::Left => [Side::Left, Side::Right],
            Side::Right => [Side::Right, Side::Left],
        };
        let (side, prime) = order
            .into_iter()
            .find_map(|side| common_prime(&rest, p, side).map(|q| (side, q)))
            .ok_or_else(|| internal("no common prime divisor on either side"))?;
        rest = rest
            .iter()
            .map(|b| match side {
                Side::Left => left_quotient(b, &prime),
                Side::Right => right_quotient(b, &prime),
            })
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| internal("common prime does not divide every member"))?;
        match side {
            Side::Left => gamma = gamma * prime,
            Side::Right => delta = prime * delta,
        }
    }
    Ok((gamma, delta, rest))
}

/// Canonical `(γ, δ, signs)` of an orderly primitive icube with odd norm.
fn canonical_core(members: &[Quat], prefer: Side) -> Result<(Quat, Quat, Vec<i8>), IcubeError> {
    let internal = |s: &str| IcubeError::Internal(s.to_string());
    let (mut gamma, mut delta, units) = peel(members, prefer)?;
    let mut signs = Vec::with_capacity(units.len());
    for (l, u) in units.iter().enumerate() {
        let base = KElement::from_index(l).quat();
        signs.push(if *u == base {
            1
        } else if *u == -base {
            -1
        } else {
            return Err(internal("peeled unit does not match orderly position"));
        });
    }

    match members.len() {
        1 => {
            delta = gamma * delta;
            gamma = Quat::ONE;
        }
        2 => loop {
            // make γ i conj(γ) primitive by moving right prime factors of γ into δ
            let theta = gamma * Quat::I * gamma.conj();
            let c = content(&theta.coeffs().unwrap());
            if c == 1 {
                break;
            }
            let p = smallest_prime_factor(c);
            let pi = i64::try_from(p).map_err(|_| IcubeError::Overflow)?;
            if gamma.div_int(pi).is_some() {
                let s = primary_scalar(p)?;
                gamma = gamma.div_int(s).unwrap();
                delta = delta.scale(s);
                continue;
            }
            let rho = extract_prime_right(&gamma, p).map_err(IcubeError::Quat)?;
            let u = (rho * Quat::I * rho.conj())
                .div_int(pi)
                .ok_or_else(|| internal("conjugated unit is not integral"))?;
            if u == -Quat::I {
                signs[1] = -signs[1];
            } else if u != Quat::I {
                return Err(internal("prime does not commute with i up to sign"));
            }
            gamma =
                right_quotient(&gamma, &rho).ok_or_else(|| internal("prime does not divide"))?;
            delta = rho * delta;
        },
        _ => {
            let g = content(&gamma.coeffs().unwrap());
            let s = primary_scalar(g)?;
            gamma = gamma
                .div_int(s)
                .ok_or_else(|| internal("content does not divide"))?;
            delta = delta.scale(s);
        }
    }
    debug_assert!(is_primary(&gamma) && is_primary(&delta));
    Ok((gamma, delta, signs))
}

pub fn decompose(c: &ICube) -> Result<Decomposition, IcubeError> {
    decompose_with(c, Side::Left)
}

/// Like [`decompose`], choosing which side prime factors are pulled from
/// first. The canonical certificate does not depend on the choice.
pub fn decompose_with(c: &ICube, prefer: Side) -> Result<Decomposition, IcubeError> {
    c.require_z4()?;
    let dy = reduce_dyadic(c)?;
    let (coord_perm, orderly) = to_orderly(&dy.reduced)?;
    let scalar = orderly.content();
    let s = i64::try_from(scalar).map_err(|_| IcubeError::Overflow)?;
    let primitive: Vec<Quat> = orderly
        .require_z4()?
        .iter()
        .map(|q| q.div_int(s).unwrap())
        .collect();
    let (gamma, delta, signs) = canonical_core(&primitive, prefer)?;
    Ok(Decomposition {
        dyadic_power: dy.power,
        eta: dy.eta,
        coord_perm,
        gamma,
        delta,
        signs,
        scalar_content: scalar,
    })
}

/// Rebuilds the icube described by a certificate.
pub fn compose(d: &Decomposition) -> Result<ICube, IcubeError> {
    let bad = |s: &str| Err(IcubeError::InconsistentCertificate(s.to_string()));
    if !(1..=4).contains(&d.m()) {
        return bad("between 1 and 4 signs required");
    }
    if d.signs.iter().any(|s| *s != 1 && *s != -1) {
        return bad("signs must be +1 or -1");
    }
    if !is_primary(&d.gamma) || !is_primary(&d.delta) {
        return bad("gamma and delta must be primary");
    }
    if d.scalar_content == 0 || d.scalar_content.is_multiple_of(2) {
        return bad("scalar content must be a positive odd integer");
    }
    let c = i64::try_from(d.scalar_content).map_err(|_| IcubeError::Overflow)?;
    let members = (0..d.m())
        .map(|l| {
            d.gamma
                .checked_mul(&d.epsilon(l))
                .and_then(|x| x.checked_mul(&d.delta))
                .and_then(|x| x.checked_scale(c))
                .ok_or(IcubeError::Overflow)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let orderly = ICube::from_quats(&members)?;
    let unpermuted = permute_components(&orderly, &d.coord_perm.inverse())?;
    lift_dyadic(&unpermuted, d.dyadic_power, d.eta)
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    v: u32,
    m: usize,
    dyadic_power: u32,
    eta: Option<Eta>,
    coord_perm: KPerm,
    gamma: Quat,
    delta: Quat,
    signs: Vec<i8>,
    scalar_content: u64,
}

impl Serialize for Decomposition {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        DecompositionJson {
            v: super::FORMAT_VERSION,
            m: self.m(),
            dyadic_power: self.dyadic_power,
            eta: self.eta,
            coord_perm: self.coord_perm,
            gamma: self.gamma,
            delta: self.delta,
            signs: self.signs.clone(),
            scalar_content: self.scalar_content,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Decomposition {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Decomposition, D::Error> {
        use serde::de::Error;
        let j = DecompositionJson::deserialize(de)?;
        if j.v != super::FORMAT_VERSION {
            return Err(D::Error::custom(format!(
                "unsupported format version {}",
                j.v
            )));
        }
        if j.m != j.signs.len() {
            return Err(D::Error::custom("m does not match the number of signs"));
        }
        Ok(Decomposition {
            dyadic_power: j.dyadic_power,
            eta: j.eta,
            coord_perm: j.coord_perm,
            gamma: j.gamma,
            delta: j.delta,
            signs: j.signs,
            scalar_content: j.scalar_content,
        })
    }
}
