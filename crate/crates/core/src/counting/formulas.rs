//! Closed multiplicative forms of the icube counts and the divisor
//! convolutions they come from.

use super::{CountError, FactoredInteger};

type Count = u128;

fn ovf() -> CountError {
    CountError::Overflow
}

fn pow(p: u64, k: u32) -> Result<Count, CountError> {
    Count::from(p).checked_pow(k).ok_or_else(ovf)
}

fn check_m(m: u8, allowed: std::ops::RangeInclusive<u8>) -> Result<(), CountError> {
    if allowed.contains(&m) {
        Ok(())
    } else {
        Err(CountError::InvalidM(m))
    }
}

/// `c_m = 24 · 2^m / (4-m)!`.
pub fn c_m(m: u8) -> Result<Count, CountError> {
    check_m(m, 1..=4)?;
    Ok([8, 48, 192, 384][usize::from(m - 1)])
}

/// `((k+1) p^k (p^2-1) - 2(p^(k+1) - 1)) / (p-1)^2` for odd prime `p`, `k >= 1`.
pub fn g_pk(p: u64, k: u32) -> Result<Count, CountError> {
    if p.is_multiple_of(2) {
        return Err(CountError::EvenPrime(p));
    }
    if k == 0 {
        return Ok(1);
    }
    let pc = Count::from(p);
    let pk = pow(p, k)?;
    let a = Count::from(k + 1)
        .checked_mul(pk)
        .and_then(|x| x.checked_mul(pc * pc - 1))
        .ok_or_else(ovf)?;
    let b = pk
        .checked_mul(pc)
        .and_then(|x| (x - 1).checked_mul(2))
        .ok_or_else(ovf)?;
    let den = (pc - 1) * (pc - 1);
    let num = a - b;
    debug_assert_eq!(num % den, 0);
    Ok(num / den)
}

fn sigma_pk(p: u64, k: u32) -> Result<Count, CountError> {
    (0..=k).try_fold(0 as Count, |s, i| s.checked_add(pow(p, i)?).ok_or_else(ovf))
}

/// `g_m(N) = f_m(N) / c_m`, evaluated multiplicatively.
pub fn g_m(m: u8, n: &FactoredInteger) -> Result<Count, CountError> {
    check_m(m, 1..=4)?;
    n.factors().iter().try_fold(1 as Count, |acc, &(p, k)| {
        let local = if p == 2 {
            3
        } else {
            match m {
                1 => sigma_pk(p, k)?,
                2 if p % 4 == 1 => Count::from(k + 1).checked_mul(pow(p, k)?).ok_or_else(ovf)?,
                _ => g_pk(p, k)?,
            }
        };
        acc.checked_mul(local).ok_or_else(ovf)
    })
}

/// Number of `m`-icubes in `Z^4` with edge norm `n`, by the closed form.
pub fn f_m(m: u8, n: u64) -> Result<Count, CountError> {
    let f = FactoredInteger::new(n)?;
    c_m(m)?.checked_mul(g_m(m, &f)?).ok_or_else(ovf)
}

fn require_odd(n: &FactoredInteger) -> Result<(), CountError> {
    if n.is_odd() {
        Ok(())
    } else {
        Err(CountError::EvenInput(n.value()))
    }
}

/// `N ∏ (1 + 1/p)` over odd `N`; `h(1) = 1`.
pub fn h_factored(n: &FactoredInteger) -> Result<Count, CountError> {
    require_odd(n)?;
    n.factors().iter().try_fold(1 as Count, |acc, &(p, k)| {
        let local = pow(p, k - 1)?
            .checked_mul(Count::from(p) + 1)
            .ok_or_else(ovf)?;
        acc.checked_mul(local).ok_or_else(ovf)
    })
}

/// `N ∏ (1 - s_p/p)` over odd `N`, `s_p ≡ p (mod 4)`; `q(1) = 1`.
pub fn q_factored(n: &FactoredInteger) -> Result<Count, CountError> {
    require_odd(n)?;
    n.factors().iter().try_fold(1 as Count, |acc, &(p, k)| {
        let tail = if p % 4 == 1 {
            Count::from(p) - 1
        } else {
            Count::from(p) + 1
        };
        let local = pow(p, k - 1)?.checked_mul(tail).ok_or_else(ovf)?;
        acc.checked_mul(local).ok_or_else(ovf)
    })
}

pub fn h(n: u64) -> Result<Count, CountError> {
    h_factored(&FactoredInteger::new(n)?)
}

pub fn q(n: u64) -> Result<Count, CountError> {
    q_factored(&FactoredInteger::new(n)?)
}

/// `Σ_{d | N} left(d) · h(N/d)`.
fn kernel(
    n: &FactoredInteger,
    left: fn(&FactoredInteger) -> Result<Count, CountError>,
) -> Result<Count, CountError> {
    n.divisors().iter().try_fold(0 as Count, |acc, d| {
        let term = left(d)?
            .checked_mul(h_factored(&n.cofactor(d))?)
            .ok_or_else(ovf)?;
        acc.checked_add(term).ok_or_else(ovf)
    })
}

fn kernel_for(m: u8) -> fn(&FactoredInteger) -> Result<Count, CountError> {
    if m == 2 {
        q_factored
    } else {
        h_factored
    }
}

/// Number of orderly primitive `m`-icubes of odd edge norm `N`
/// (`2 <= m <= 4`): `2^m Σ h(d)h(N/d)` for `m >= 3`, `4 Σ q(d)h(N/d)` for `m = 2`.
pub fn k_m_factored(m: u8, n: &FactoredInteger) -> Result<Count, CountError> {
    check_m(m, 2..=4)?;
    require_odd(n)?;
    kernel(n, kernel_for(m))?
        .checked_mul(1 << m)
        .ok_or_else(ovf)
}

pub fn k_m(m: u8, n: u64) -> Result<Count, CountError> {
    k_m_factored(m, &FactoredInteger::new(n)?)
}

/// `f_m(N)` through the divisor convolutions: odd part by summing `k_m` over
/// square divisors, scaled by the number of types; a factor 3 when `N` is
/// even. For `m = 1` the classical divisor sum `8 Σ_{d | N, 4 ∤ d} d` is used.
pub fn f_m_convolution(m: u8, n: u64) -> Result<Count, CountError> {
    check_m(m, 1..=4)?;
    let f = FactoredInteger::new(n)?;
    if m == 1 {
        return f
            .divisors()
            .iter()
            .filter(|d| d.value() % 4 != 0)
            .try_fold(0 as Count, |s, d| {
                s.checked_add(8 * Count::from(d.value())).ok_or_else(ovf)
            });
    }
    let (twos, odd) = f.split_two();
    let orderly = odd
        .square_divisor_quotients()
        .iter()
        .try_fold(0 as Count, |s, (_, q)| {
            s.checked_add(k_m_factored(m, q)?).ok_or_else(ovf)
        })?;
    let types: Count = [4, 12, 24, 24][usize::from(m - 1)];
    let odd_count = orderly.checked_mul(types).ok_or_else(ovf)?;
    Ok(if twos > 0 {
        odd_count.checked_mul(3).ok_or_else(ovf)?
    } else {
        odd_count
    })
}
