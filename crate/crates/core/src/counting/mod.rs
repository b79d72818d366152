//! Counting icubes of a given edge norm in `Z^4`: closed forms, divisor
//! convolutions, and a cross-check against brute force.

mod factor;
mod formulas;

pub use factor::{FactoredInteger, DEFAULT_TRIAL_BOUND};
pub use formulas::{
    c_m, f_m, f_m_convolution, g_m, g_pk, h, h_factored, k_m, k_m_factored, q, q_factored,
};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::enumeration::{count_icubes_brute, EnumBudget, EnumError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error("N must be positive")]
    Zero,
    #[error("factoring {n} needs a trial divisor above {bound}")]
    FactorBound { n: u64, bound: u64 },
    #[error("count does not fit in 128 bits")]
    Overflow,
    #[error("m = {0} is out of range")]
    InvalidM(u8),
    #[error("{0} is not an odd prime")]
    EvenPrime(u64),
    #[error("N = {0} must be odd")]
    EvenInput(u64),
    #[error("methods disagree for m = {}, N = {}", .0.m, .0.n)]
    Mismatch(Box<CountReport>),
    #[error(transparent)]
    Enum(#[from] EnumError),
}

/// Counts of `m`-icubes of edge norm `N` by each method that was run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountReport {
    #[serde(rename = "N")]
    pub n: u64,
    pub m: u8,
    pub closed: u128,
    pub convolution: Option<u128>,
    pub brute: Option<u128>,
    pub ok: bool,
}

impl CountReport {
    fn agree(&self) -> bool {
        [self.convolution, self.brute]
            .iter()
            .flatten()
            .all(|&x| x == self.closed)
    }
}

/// Evaluates `f_m(N)` by the closed form, plus the convolution and brute
/// force when asked; brute force within `brute` budget only.
///
/// A disagreement is returned as `CountError::Mismatch` carrying the report.
pub fn count_report(
    m: u8,
    n: u64,
    convolution: bool,
    brute: Option<&EnumBudget>,
) -> Result<CountReport, CountError> {
    let closed = f_m(m, n)?;
    let convolution = if convolution {
        Some(f_m_convolution(m, n)?)
    } else {
        None
    };
    let brute = match brute {
        Some(b) => Some(count_icubes_brute(usize::from(m), n, b)?),
        None => None,
    };
    let mut report = CountReport {
        n,
        m,
        closed,
        convolution,
        brute,
        ok: true,
    };
    report.ok = report.agree();
    if report.ok {
        Ok(report)
    } else {
        Err(CountError::Mismatch(Box::new(report)))
    }
}

/// All methods: brute force is added when `with_brute` is set and `N` fits
/// `budget`, and silently skipped otherwise.
pub fn cross_check(
    m: u8,
    n: u64,
    with_brute: bool,
    budget: &EnumBudget,
) -> Result<CountReport, CountError> {
    let brute = (with_brute && budget.check(n).is_ok()).then_some(budget);
    count_report(m, n, true, brute)
}

/// `cross_check` over every `m` in `1..=4` and `N` in `1..=max_n`, in
/// parallel; results come back ordered by `(N, m)`.
pub fn sweep(
    max_n: u64,
    with_brute: bool,
    budget: &EnumBudget,
) -> Vec<Result<CountReport, CountError>> {
    let jobs: Vec<(u64, u8)> = (1..=max_n)
        .flat_map(|n| (1..=4).map(move |m| (n, m)))
        .collect();
    jobs.par_iter()
        .map(|&(n, m)| cross_check(m, n, with_brute, budget))
        .collect()
}
