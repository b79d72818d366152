use super::parity::{content, is_primary};
use super::{Quat, QuatError};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r.saturating_mul(r) > n {
        r -= 1;
    }
    while (r + 1).saturating_mul(r + 1) <= n {
        r += 1;
    }
    r
}

/// Every Hurwitz quaternion of norm `n`, sorted by doubled coefficients.
pub fn hurwitz_of_norm(n: u64) -> Vec<Quat> {
    let target = 4 * i64::try_from(n).expect("norm fits in i64");
    let r = isqrt(target as u64) as i64;
    let mut out = Vec::new();
    for a in -r..=r {
        let ra = target - a * a;
        for b in -r..=r {
            let rb = ra - b * b;
            if rb < 0 {
                continue;
            }
            for c in -r..=r {
                let rc = rb - c * c;
                if rc < 0 {
                    continue;
                }
                let d = isqrt(rc as u64) as i64;
                if d * d != rc {
                    continue;
                }
                let ds: &[i64] = if d == 0 { &[0] } else { &[-d, d] };
                for &dd in ds {
                    if let Ok(q) = Quat::from_doubled([a, b, c, dd]) {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

/// All Hurwitz quaternions whose norm is the prime `p`.
pub fn norm_p_elements(p: u64) -> Result<Vec<Quat>, QuatError> {
    if !is_prime(p) {
        return Err(QuatError::NotPrime(p));
    }
    Ok(hurwitz_of_norm(p))
}

/// `γ` with `γ·i·conj(γ) = theta`, for a primitive pure Lipschitz `theta`
/// of square norm.
///
/// The solutions form one orbit `γ·{±1, ±i}`; the primary member is returned
/// when the orbit has one, otherwise the lexicographically least.
pub fn pure_square_root(theta: &Quat) -> Result<Quat, QuatError> {
    let c = theta.coeffs().ok_or(QuatError::NotLipschitz)?;
    if !theta.is_pure() {
        return Err(QuatError::NotPure);
    }
    if content(&c) != 1 {
        return Err(QuatError::NotPrimitive);
    }
    let n = theta.norm();
    let m = isqrt(n);
    if m * m != n {
        return Err(QuatError::NotSquareNorm);
    }
    let sols: Vec<Quat> = hurwitz_of_norm(m)
        .into_iter()
        .filter(|g| *g * Quat::I * g.conj() == *theta)
        .collect();
    assert_eq!(sols.len(), 4, "square root orbit has four members");
    Ok(sols
        .iter()
        .copied()
        .find(is_primary)
        .unwrap_or_else(|| *sols.iter().min_by_key(|q| q.doubled()).unwrap()))
}
