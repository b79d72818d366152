//! Euclidean division in the Hurwitz ring and the one-sided gcds built on it.
//!
//! The quotient is the Hurwitz point nearest to the exact quotient. Among the
//! candidates of both cosets (integer and half-integer), the one with the
//! smallest remainder norm wins; ties go to the lexicographically least
//! doubled-coefficient tuple.

use super::parity::{primary_left_associate, primary_right_associate};
use super::{units, Quat, QuatError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    Left,
    Right,
}

/// `a = b·q + r` with `norm(r) < norm(b)`.
pub fn div_rem_left(a: &Quat, b: &Quat) -> Result<(Quat, Quat), QuatError> {
    div_rem(a, b, Side::Left)
}

/// `a = q·b + r` with `norm(r) < norm(b)`.
pub fn div_rem_right(a: &Quat, b: &Quat) -> Result<(Quat, Quat), QuatError> {
    div_rem(a, b, Side::Right)
}

fn div_rem(a: &Quat, b: &Quat, side: Side) -> Result<(Quat, Quat), QuatError> {
    if b.is_zero() {
        return Err(QuatError::DivisionByZero);
    }
    let n = i64::try_from(b.norm()).map_err(|_| QuatError::Overflow)?;
    // exact quotient has doubled coefficients p / n
    let p = match side {
        Side::Left => b.conj().checked_mul(a),
        Side::Right => a.checked_mul(&b.conj()),
    }
    .ok_or(QuatError::Overflow)?
    .doubled();

    let mut best: Option<(u64, [i64; 4], Quat, Quat)> = None;
    for parity in 0..2 {
        let lo = p.map(|x| {
            let f = x.div_euclid(n);
            if f.rem_euclid(2) == parity {
                f
            } else {
                f - 1
            }
        });
        for mask in 0..16u32 {
            let d: [i64; 4] = std::array::from_fn(|c| lo[c] + 2 * i64::from(mask >> c & 1));
            let q = Quat::from_doubled(d).expect("candidate has uniform parity");
            let bq = match side {
                Side::Left => b.checked_mul(&q),
                Side::Right => q.checked_mul(b),
            }
            .ok_or(QuatError::Overflow)?;
            let r = a.checked_sub(&bq).ok_or(QuatError::Overflow)?;
            let rn = r.checked_norm().ok_or(QuatError::Overflow)?;
            let key = (rn, d);
            if best.as_ref().is_none_or(|b| key < (b.0, b.1)) {
                best = Some((rn, d, q, r));
            }
        }
    }
    let (rn, _, q, r) = best.unwrap();
    debug_assert!(rn < b.norm());
    Ok((q, r))
}

/// `b` divides `a` on the left: `a = b·x`.
pub fn left_divides(b: &Quat, a: &Quat) -> bool {
    !b.is_zero() && div_rem_left(a, b).is_ok_and(|(_, r)| r.is_zero())
}

/// `b` divides `a` on the right: `a = x·b`.
pub fn right_divides(b: &Quat, a: &Quat) -> bool {
    !b.is_zero() && div_rem_right(a, b).is_ok_and(|(_, r)| r.is_zero())
}

/// The `x` with `a = b·x`, if it exists.
pub fn left_quotient(a: &Quat, b: &Quat) -> Option<Quat> {
    let (q, r) = div_rem_left(a, b).ok()?;
    r.is_zero().then_some(q)
}

/// The `x` with `a = x·b`, if it exists.
pub fn right_quotient(a: &Quat, b: &Quat) -> Option<Quat> {
    let (q, r) = div_rem_right(a, b).ok()?;
    r.is_zero().then_some(q)
}

fn lex_least(cands: impl Iterator<Item = Quat>) -> Quat {
    cands.min_by_key(|q| q.doubled()).unwrap()
}

/// Canonical right associate `d·u`: primary for odd norm, otherwise the
/// lexicographically least doubled-coefficient tuple.
pub fn normalize_right(d: &Quat) -> Quat {
    if d.norm() % 2 == 1 {
        primary_right_associate(d).unwrap().0
    } else {
        lex_least(units().iter().map(|u| *d * u.value()))
    }
}

/// Canonical left associate `u·d`, same rule as [`normalize_right`].
pub fn normalize_left(d: &Quat) -> Quat {
    if d.norm() % 2 == 1 {
        primary_left_associate(d).unwrap().1
    } else {
        lex_least(units().iter().map(|u| u.value() * *d))
    }
}

/// Greatest common left divisor, normalized up to right unit multiplication.
pub fn gcd_left(a: &Quat, b: &Quat) -> Result<Quat, QuatError> {
    if a.is_zero() && b.is_zero() {
        return Err(QuatError::BothZero);
    }
    let (mut x, mut y) = (*a, *b);
    while !y.is_zero() {
        let (_, r) = div_rem_left(&x, &y)?;
        (x, y) = (y, r);
    }
    Ok(normalize_right(&x))
}

/// Greatest common right divisor, normalized up to left unit multiplication.
pub fn gcd_right(a: &Quat, b: &Quat) -> Result<Quat, QuatError> {
    if a.is_zero() && b.is_zero() {
        return Err(QuatError::BothZero);
    }
    let (mut x, mut y) = (*a, *b);
    while !y.is_zero() {
        let (_, r) = div_rem_right(&x, &y)?;
        (x, y) = (y, r);
    }
    Ok(normalize_left(&x))
}

fn check_prime_divisor(a: &Quat, p: u64) -> Result<i64, QuatError> {
    if p < 3 || !super::is_prime(p) {
        return Err(QuatError::NotOddPrime(p));
    }
    if !a.norm().is_multiple_of(p) {
        return Err(QuatError::NotDivisor);
    }
    let pi = i64::try_from(p).map_err(|_| QuatError::Overflow)?;
    if a.div_int(pi).is_some() {
        return Err(QuatError::PDividesAlpha);
    }
    Ok(pi)
}

/// The primary `π` of norm `p` with `π | a` on the left.
pub fn extract_prime_left(a: &Quat, p: u64) -> Result<Quat, QuatError> {
    let pi = check_prime_divisor(a, p)?;
    let g = gcd_left(a, &Quat::new(pi, 0, 0, 0))?;
    assert_eq!(g.norm(), p, "gcd with p has norm p");
    Ok(g)
}

/// The primary `π` of norm `p` with `π | a` on the right.
pub fn extract_prime_right(a: &Quat, p: u64) -> Result<Quat, QuatError> {
    let pi = check_prime_divisor(a, p)?;
    let g = gcd_right(a, &Quat::new(pi, 0, 0, 0))?;
    assert_eq!(g.norm(), p, "gcd with p has norm p");
    Ok(g)
}
