//! Extension of icubes by one more vector.

use super::{compose, decompose, ICube, IVec, IcubeError};
use crate::quaternion::isqrt;

/// Extends an `m`-icube in `Z^4` (`m <= 3`) by one vector, keeping the
/// given vectors in place.
pub fn extend_z4(c: &ICube) -> Result<ICube, IcubeError> {
    c.require_z4()?;
    if c.m() == 4 {
        return Err(IcubeError::AlreadyFull);
    }
    let mut d = decompose(c)?;
    d.signs.push(1);
    let out = compose(&d)?;
    if out.vectors()[..c.m()] != *c.vectors() {
        return Err(IcubeError::Internal(
            "extension changed the given vectors".into(),
        ));
    }
    Ok(out)
}

/// Fraction-free (Bareiss) determinant.
fn det(mut a: Vec<Vec<i128>>) -> Result<i128, IcubeError> {
    let n = a.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(s) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return Ok(0);
            };
            a.swap(k, s);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[i][j]
                    .checked_mul(a[k][k])
                    .zip(a[i][k].checked_mul(a[k][j]))
                    .and_then(|(p, q)| p.checked_sub(q))
                    .ok_or(IcubeError::Overflow)?;
                a[i][j] = x / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Completes an `(n-1)`-icube in `Z^n` to an `n`-icube using the signed
/// maximal minors of the matrix whose columns are the given vectors.
///
/// The new vector is unique up to sign; it is returned with its first nonzero
/// entry positive.
pub fn extend_minor(c: &ICube) -> Result<ICube, IcubeError> {
    let n = c.n();
    if n < 2 || c.m() != n - 1 {
        return Err(IcubeError::WrongSize { m: c.m(), n });
    }
    let norm = c.edge_norm();
    let scale: i128 = if n.is_multiple_of(2) {
        i128::from(norm).checked_pow((n as u32 - 2) / 2)
    } else {
        let s = isqrt(norm);
        if s * s != norm {
            return Err(IcubeError::OddDimensionNonsquareNorm { n, norm });
        }
        i128::from(s).checked_pow(n as u32 - 2)
    }
    .ok_or(IcubeError::Overflow)?;

    let mut w = Vec::with_capacity(n);
    for i in 0..n {
        let minor: Vec<Vec<i128>> = (0..n)
            .filter(|&r| r != i)
            .map(|r| {
                c.vectors()
                    .iter()
                    .map(|v| i128::from(v.entries()[r]))
                    .collect()
            })
            .collect();
        let sign = if (n + i + 1).is_multiple_of(2) { 1 } else { -1 };
        let m_i = sign * det(minor)?;
        if m_i % scale != 0 {
            return Err(IcubeError::Internal(
                "minor not divisible by the edge norm power".into(),
            ));
        }
        w.push(i64::try_from(m_i / scale).map_err(|_| IcubeError::Overflow)?);
    }
    if w.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        w.iter_mut().for_each(|x| *x = -*x);
    }
    let mut vs = c.vectors().to_vec();
    vs.push(IVec::new(w));
    ICube::new(vs)
}

/// `(row sign pattern, source index)` of the Cayley-number multiplication
/// table; row `r`, column `s` holds `sign · v[index]`.
const CAYLEY: [[(i8, usize); 8]; 8] = [
    [
        (1, 0),
        (1, 1),
        (1, 2),
        (1, 3),
        (1, 4),
        (1, 5),
        (1, 6),
        (1, 7),
    ],
    [
        (1, 1),
        (-1, 0),
        (1, 3),
        (-1, 2),
        (1, 5),
        (-1, 4),
        (-1, 7),
        (1, 6),
    ],
    [
        (1, 2),
        (-1, 3),
        (-1, 0),
        (1, 1),
        (1, 6),
        (1, 7),
        (-1, 4),
        (-1, 5),
    ],
    [
        (1, 3),
        (1, 2),
        (-1, 1),
        (-1, 0),
        (1, 7),
        (-1, 6),
        (1, 5),
        (-1, 4),
    ],
    [
        (1, 4),
        (-1, 5),
        (-1, 6),
        (-1, 7),
        (-1, 0),
        (1, 1),
        (1, 2),
        (1, 3),
    ],
    [
        (1, 5),
        (1, 4),
        (-1, 7),
        (1, 6),
        (-1, 1),
        (-1, 0),
        (-1, 3),
        (1, 2),
    ],
    [
        (1, 6),
        (1, 7),
        (1, 4),
        (-1, 5),
        (-1, 2),
        (1, 3),
        (-1, 0),
        (-1, 1),
    ],
    [
        (1, 7),
        (-1, 6),
        (1, 5),
        (1, 4),
        (-1, 3),
        (-1, 2),
        (1, 1),
        (-1, 0),
    ],
];

/// The full `n`-icube (`n` = 2, 4 or 8) whose first row is `v`, read off the
/// Cayley-number multiplication table (its upper-left corner for `n < 8`).
pub fn cayley_extend(v: &IVec) -> Result<ICube, IcubeError> {
    let n = v.dim();
    if ![2, 4, 8].contains(&n) {
        return Err(IcubeError::UnsupportedDimension(n));
    }
    if v.is_zero() {
        return Err(IcubeError::ZeroVector(0));
    }
    let rows = CAYLEY[..n]
        .iter()
        .map(|row| {
            row[..n]
                .iter()
                .map(|&(s, idx)| {
                    v.entries()[idx]
                        .checked_mul(i64::from(s))
                        .ok_or(IcubeError::Overflow)
                })
                .collect::<Result<Vec<_>, _>>()
                .map(IVec::new)
        })
        .collect::<Result<Vec<_>, _>>()?;
    ICube::new(rows)
}
