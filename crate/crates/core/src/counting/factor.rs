use super::CountError;

/// Largest trial divisor used by default.
pub const DEFAULT_TRIAL_BOUND: u64 = 10_000_000;

/// A positive integer with its prime factorization, primes increasing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredInteger {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl FactoredInteger {
    pub fn new(n: u64) -> Result<FactoredInteger, CountError> {
        FactoredInteger::with_bound(n, DEFAULT_TRIAL_BOUND)
    }

    /// Factors `n` by trial division, refusing inputs whose complete
    /// factorization would need a trial divisor above `bound`.
    pub fn with_bound(n: u64, bound: u64) -> Result<FactoredInteger, CountError> {
        if n == 0 {
            return Err(CountError::Zero);
        }
        let mut rest = n;
        let mut factors = Vec::new();
        let mut d = 2u64;
        while d.saturating_mul(d) <= rest {
            if d > bound {
                return Err(CountError::FactorBound { n, bound });
            }
            if rest.is_multiple_of(d) {
                let mut e = 0;
                while rest.is_multiple_of(d) {
                    rest /= d;
                    e += 1;
                }
                factors.push((d, e));
            }
            d += if d == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        Ok(FactoredInteger { value: n, factors })
    }

    fn from_factors(factors: Vec<(u64, u32)>) -> FactoredInteger {
        let factors: Vec<_> = factors.into_iter().filter(|&(_, e)| e > 0).collect();
        let value = factors.iter().map(|&(p, e)| p.pow(e)).product();
        FactoredInteger { value, factors }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_odd(&self) -> bool {
        self.value % 2 == 1
    }

    /// `(k, D)` with `value = 2^k · D`, `D` odd.
    pub fn split_two(&self) -> (u32, FactoredInteger) {
        match self.factors.first() {
            Some(&(2, k)) => (k, FactoredInteger::from_factors(self.factors[1..].to_vec())),
            _ => (0, self.clone()),
        }
    }

    /// All positive divisors, each with its factorization.
    pub fn divisors(&self) -> Vec<FactoredInteger> {
        let mut out = vec![Vec::new()];
        for &(p, e) in &self.factors {
            out = out
                .into_iter()
                .flat_map(|f: Vec<(u64, u32)>| {
                    (0..=e).map(move |k| {
                        let mut g = f.clone();
                        g.push((p, k));
                        g
                    })
                })
                .collect();
        }
        let mut ds: Vec<_> = out.into_iter().map(FactoredInteger::from_factors).collect();
        ds.sort_by_key(|d| d.value);
        ds
    }

    /// `c` ranging over positive integers with `c^2 | value`, paired with
    /// the factorization of `value / c^2`.
    pub fn square_divisor_quotients(&self) -> Vec<(u64, FactoredInteger)> {
        let halves =
            FactoredInteger::from_factors(self.factors.iter().map(|&(p, e)| (p, e / 2)).collect());
        halves
            .divisors()
            .into_iter()
            .map(|c| {
                let q = self
                    .factors
                    .iter()
                    .map(|&(p, e)| {
                        let ce = c.factors.iter().find(|f| f.0 == p).map_or(0, |f| f.1);
                        (p, e - 2 * ce)
                    })
                    .collect();
                (c.value, FactoredInteger::from_factors(q))
            })
            .collect()
    }

    /// The cofactor `value / d` of a divisor.
    pub fn cofactor(&self, d: &FactoredInteger) -> FactoredInteger {
        FactoredInteger::from_factors(
            self.factors
                .iter()
                .map(|&(p, e)| {
                    (
                        p,
                        e - d.factors.iter().find(|f| f.0 == p).map_or(0, |f| f.1),
                    )
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorizations() {
        let f = FactoredInteger::new(360).unwrap();
        assert_eq!(f.factors(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(FactoredInteger::new(1).unwrap().factors(), &[]);
        assert_eq!(FactoredInteger::new(97).unwrap().factors(), &[(97, 1)]);
        assert_eq!(FactoredInteger::new(0), Err(CountError::Zero));
    }

    #[test]
    fn bound_is_enforced() {
        assert!(FactoredInteger::with_bound(101 * 103, 10).is_err());
        assert!(FactoredInteger::with_bound(101 * 103, 101).is_ok());
        assert!(FactoredInteger::with_bound(2u64.pow(40), 10).is_ok());
    }

    #[test]
    fn divisors_match_scan() {
        for n in 1..500u64 {
            let f = FactoredInteger::new(n).unwrap();
            let ds: Vec<u64> = f.divisors().iter().map(|d| d.value()).collect();
            let scan: Vec<u64> = (1..=n).filter(|d| n % d == 0).collect();
            assert_eq!(ds, scan);
            for d in f.divisors() {
                assert_eq!(f.cofactor(&d).value(), n / d.value());
            }
            let sq: Vec<u64> = f
                .square_divisor_quotients()
                .iter()
                .map(|(c, _)| *c)
                .collect();
            let sq_scan: Vec<u64> = (1..=n).filter(|c| n % (c * c) == 0).collect();
            assert_eq!(sq, sq_scan);
            for (c, q) in f.square_divisor_quotients() {
                assert_eq!(q.value(), n / (c * c));
            }
        }
    }
}
