//! Brute-force oracles: exhaustive vector generation, backtracking icube
//! enumeration and direct counts of quaternion families.
//!
//! Nothing here uses the quaternion decomposition; these searches are the
//! ground truth the closed formulas are checked against.

use std::ops::ControlFlow;

use rayon::prelude::*;
use thiserror::Error;

use crate::icube::{icube_type, ICube, IVec};
use crate::quaternion::{content, is_primary, isqrt, Quat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("norm {norm} exceeds the enumeration budget {max_norm}")]
    BudgetExceeded { norm: u64, max_norm: u64 },
    #[error("more than {0} results")]
    TooManyResults(usize),
    #[error("input {0} must be odd")]
    EvenInput(u64),
    #[error("m = {0} is out of range")]
    InvalidM(usize),
    #[error("norm must be positive")]
    ZeroNorm,
}

/// Limits enforced before a search starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_norm: u64,
    pub max_results: Option<usize>,
}

impl EnumBudget {
    pub const ICUBE_MAX_NORM: u64 = 50;
    pub const FAMILY_MAX_NORM: u64 = 45;

    pub fn new(max_norm: u64) -> EnumBudget {
        EnumBudget {
            max_norm,
            max_results: None,
        }
    }

    /// Default for icube enumeration and counting.
    pub fn icubes() -> EnumBudget {
        EnumBudget::new(Self::ICUBE_MAX_NORM)
    }

    /// Default for quaternion-family counts.
    pub fn families() -> EnumBudget {
        EnumBudget::new(Self::FAMILY_MAX_NORM)
    }

    pub fn check(&self, norm: u64) -> Result<(), EnumError> {
        if norm == 0 {
            return Err(EnumError::ZeroNorm);
        }
        if norm > self.max_norm {
            return Err(EnumError::BudgetExceeded {
                norm,
                max_norm: self.max_norm,
            });
        }
        Ok(())
    }
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget::icubes()
    }
}

fn descend(dim: usize, left: i64, bound: i64, prefix: &mut Vec<i64>, out: &mut Vec<IVec>) {
    if prefix.len() == dim - 1 {
        // the last coordinate is forced up to sign
        let r = isqrt(left as u64) as i64;
        if r * r == left {
            for x in if r == 0 { vec![0] } else { vec![-r, r] } {
                let mut v = prefix.clone();
                v.push(x);
                out.push(IVec::new(v));
            }
        }
        return;
    }
    for x in -bound..=bound {
        if x * x > left {
            continue;
        }
        prefix.push(x);
        descend(dim, left - x * x, bound, prefix, out);
        prefix.pop();
    }
}

/// All `v ∈ Z^dim` with `|v|^2 = n`, in lexicographic order.
pub fn vectors_of_norm(n: u64, dim: usize, budget: &EnumBudget) -> Result<Vec<IVec>, EnumError> {
    budget.check(n)?;
    if dim == 0 {
        return Ok(Vec::new());
    }
    let left = i64::try_from(n).map_err(|_| EnumError::BudgetExceeded {
        norm: n,
        max_norm: budget.max_norm,
    })?;
    let mut out = Vec::new();
    descend(
        dim,
        left,
        isqrt(n) as i64,
        &mut Vec::with_capacity(dim),
        &mut out,
    );
    Ok(out)
}

fn dot4(a: &[i64; 4], b: &[i64; 4]) -> i64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]
}

fn norm_vectors_z4(n: u64, budget: &EnumBudget) -> Result<Vec<[i64; 4]>, EnumError> {
    Ok(vectors_of_norm(n, 4, budget)?
        .iter()
        .map(|v| v.entries().try_into().unwrap())
        .collect())
}

fn count_from(chosen: &[i64; 4], pool: &[[i64; 4]], remaining: usize) -> u128 {
    let next: Vec<[i64; 4]> = pool
        .iter()
        .copied()
        .filter(|w| dot4(chosen, w) == 0)
        .collect();
    if remaining == 1 {
        return next.len() as u128;
    }
    next.iter()
        .map(|w| count_from(w, &next, remaining - 1))
        .sum()
}

fn check_m(m: usize) -> Result<(), EnumError> {
    if (1..=4).contains(&m) {
        Ok(())
    } else {
        Err(EnumError::InvalidM(m))
    }
}

/// Number of ordered `m`-tuples of pairwise orthogonal vectors of norm `n`
/// in `Z^4`, by backtracking; parallel over the first vector.
pub fn count_icubes_brute(m: usize, n: u64, budget: &EnumBudget) -> Result<u128, EnumError> {
    check_m(m)?;
    let vs = norm_vectors_z4(n, budget)?;
    if m == 1 {
        return Ok(vs.len() as u128);
    }
    Ok(vs.par_iter().map(|v| count_from(v, &vs, m - 1)).sum())
}

fn walk<B>(
    prefix: &mut Vec<[i64; 4]>,
    pool: &[[i64; 4]],
    m: usize,
    f: &mut impl FnMut(&[[i64; 4]]) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if prefix.len() == m {
        return f(prefix);
    }
    for w in pool {
        let next: Vec<[i64; 4]> = pool.iter().copied().filter(|x| dot4(w, x) == 0).collect();
        prefix.push(*w);
        let r = walk(prefix, &next, m, f);
        prefix.pop();
        r?;
    }
    ControlFlow::Continue(())
}

/// Visits every `m`-icube of edge norm `n` in `Z^4`, in lexicographic order
/// of the tuple of vectors, until `f` breaks.
pub fn for_each_icube<B>(
    m: usize,
    n: u64,
    budget: &EnumBudget,
    mut f: impl FnMut(ICube) -> ControlFlow<B>,
) -> Result<ControlFlow<B>, EnumError> {
    check_m(m)?;
    let vs = norm_vectors_z4(n, budget)?;
    let mut seen = 0usize;
    let mut capped = false;
    let flow = walk(
        &mut Vec::with_capacity(m),
        &vs,
        m,
        &mut |tuple: &[[i64; 4]]| {
            seen += 1;
            if budget.max_results.is_some_and(|cap| seen > cap) {
                capped = true;
                return ControlFlow::Break(None);
            }
            let cube = ICube::new(tuple.iter().map(|v| IVec::from(*v)).collect())
                .expect("backtracking yields valid icubes");
            f(cube).map_break(Some)
        },
    );
    if capped {
        return Err(EnumError::TooManyResults(budget.max_results.unwrap()));
    }
    Ok(match flow {
        ControlFlow::Break(Some(b)) => ControlFlow::Break(b),
        _ => ControlFlow::Continue(()),
    })
}

pub fn enumerate_icubes(m: usize, n: u64, budget: &EnumBudget) -> Result<Vec<ICube>, EnumError> {
    let mut out = Vec::new();
    let _ = for_each_icube::<()>(m, n, budget, |c| {
        out.push(c);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

fn odd_lipschitz_of_norm(n: u64, budget: &EnumBudget) -> Result<Vec<Quat>, EnumError> {
    if n.is_multiple_of(2) {
        return Err(EnumError::EvenInput(n));
    }
    Ok(vectors_of_norm(n, 4, budget)?
        .iter()
        .map(|v| v.to_quat().unwrap())
        .collect())
}

/// Primary quaternions of norm `n` with coprime coefficients.
pub fn count_primary_primitive(n: u64, budget: &EnumBudget) -> Result<u128, EnumError> {
    Ok(odd_lipschitz_of_norm(n, budget)?
        .iter()
        .filter(|q| is_primary(q) && content(&q.coeffs().unwrap()) == 1)
        .count() as u128)
}

/// Primary `γ` of norm `n` with `γ·i·conj(γ)` primitive.
pub fn count_primary_gamma(n: u64, budget: &EnumBudget) -> Result<u128, EnumError> {
    Ok(odd_lipschitz_of_norm(n, budget)?
        .iter()
        .filter(|g| is_primary(g) && content(&(**g * Quat::I * g.conj()).coeffs().unwrap()) == 1)
        .count() as u128)
}

/// Orderly primitive `m`-icubes of odd edge norm `n`.
pub fn count_orderly_primitive(m: usize, n: u64, budget: &EnumBudget) -> Result<u128, EnumError> {
    if n.is_multiple_of(2) {
        return Err(EnumError::EvenInput(n));
    }
    let mut count = 0u128;
    let _ = for_each_icube::<()>(m, n, budget, |c| {
        if c.is_primitive() && icube_type(&c).is_ok_and(|t| t.is_orderly()) {
            count += 1;
        }
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> EnumBudget {
        EnumBudget::icubes()
    }

    #[test]
    fn vector_counts() {
        assert_eq!(vectors_of_norm(1, 4, &b()).unwrap().len(), 8);
        assert_eq!(vectors_of_norm(2, 4, &b()).unwrap().len(), 24);
        assert_eq!(vectors_of_norm(3, 4, &b()).unwrap().len(), 32);
        assert_eq!(vectors_of_norm(25, 3, &b()).unwrap().len(), 30);
    }

    #[test]
    fn vectors_sorted_unique() {
        let vs = vectors_of_norm(30, 4, &b()).unwrap();
        assert!(vs.windows(2).all(|w| w[0] < w[1]));
        assert!(vs.iter().all(|v| v.norm() == 30));
    }

    #[test]
    fn budget_enforced() {
        assert_eq!(
            vectors_of_norm(51, 4, &b()).unwrap_err(),
            EnumError::BudgetExceeded {
                norm: 51,
                max_norm: 50
            }
        );
        assert_eq!(
            vectors_of_norm(0, 4, &b()).unwrap_err(),
            EnumError::ZeroNorm
        );
        let capped = EnumBudget {
            max_norm: 50,
            max_results: Some(10),
        };
        assert_eq!(
            enumerate_icubes(2, 1, &capped).unwrap_err(),
            EnumError::TooManyResults(10)
        );
    }

    #[test]
    fn icube_counts() {
        assert_eq!(count_icubes_brute(1, 1, &b()).unwrap(), 8);
        assert_eq!(count_icubes_brute(2, 1, &b()).unwrap(), 48);
        assert_eq!(count_icubes_brute(4, 1, &b()).unwrap(), 384);
        assert_eq!(count_icubes_brute(4, 3, &b()).unwrap(), 3072);
        assert_eq!(
            count_icubes_brute(5, 3, &b()).unwrap_err(),
            EnumError::InvalidM(5)
        );
    }

    #[test]
    fn enumeration_agrees_with_count_and_is_deterministic() {
        for m in 1..=4 {
            let a = enumerate_icubes(m, 6, &b()).unwrap();
            assert_eq!(a.len() as u128, count_icubes_brute(m, 6, &b()).unwrap());
            assert_eq!(a, enumerate_icubes(m, 6, &b()).unwrap());
        }
    }

    #[test]
    fn early_break() {
        let mut n = 0;
        let flow = for_each_icube(3, 9, &b(), |_| {
            n += 1;
            if n == 5 {
                ControlFlow::Break(n)
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!(flow, ControlFlow::Break(5));
    }

    #[test]
    fn family_counts() {
        assert_eq!(count_primary_primitive(3, &b()).unwrap(), 4);
        assert_eq!(count_primary_primitive(1, &b()).unwrap(), 1);
        assert_eq!(count_primary_gamma(5, &b()).unwrap(), 4);
        assert_eq!(count_orderly_primitive(4, 1, &b()).unwrap(), 16);
        assert_eq!(
            count_primary_gamma(4, &b()).unwrap_err(),
            EnumError::EvenInput(4)
        );
    }
}
