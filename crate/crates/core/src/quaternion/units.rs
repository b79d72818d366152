use std::sync::OnceLock;

use super::Quat;

/// One of the 24 units of the Hurwitz ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Unit24(Quat);

impl Unit24 {
    pub fn new(q: Quat) -> Option<Unit24> {
        (q.norm() == 1).then_some(Unit24(q))
    }

    pub fn value(&self) -> Quat {
        self.0
    }

    /// `Q = {±1, ±i, ±j, ±k}`.
    pub fn is_lipschitz(&self) -> bool {
        self.0.is_lipschitz()
    }

    pub fn inverse(&self) -> Unit24 {
        Unit24(self.0.conj())
    }
}

impl From<Unit24> for Quat {
    fn from(u: Unit24) -> Quat {
        u.0
    }
}

/// All 24 units, sorted by doubled coefficients.
pub fn units() -> &'static [Unit24] {
    static UNITS: OnceLock<Vec<Unit24>> = OnceLock::new();
    UNITS.get_or_init(|| {
        let mut out = Vec::with_capacity(24);
        for pos in 0..4 {
            for s in [-2, 2] {
                let mut d = [0; 4];
                d[pos] = s;
                out.push(Unit24(Quat::from_doubled(d).unwrap()));
            }
        }
        for mask in 0..16u32 {
            let d: [i64; 4] = std::array::from_fn(|b| if mask >> b & 1 == 1 { -1 } else { 1 });
            out.push(Unit24(Quat::from_doubled(d).unwrap()));
        }
        out.sort();
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn twenty_four_distinct_units() {
        let us = units();
        assert_eq!(us.len(), 24);
        let set: HashSet<_> = us.iter().collect();
        assert_eq!(set.len(), 24);
        assert!(us.iter().all(|u| u.value().norm() == 1));
        assert_eq!(us.iter().filter(|u| u.is_lipschitz()).count(), 8);
    }

    #[test]
    fn closed_under_product_and_inverse() {
        let us = units();
        for a in us {
            assert!(us.contains(&a.inverse()));
            assert_eq!(a.value() * a.inverse().value(), Quat::ONE);
            for b in us {
                assert!(Unit24::new(a.value() * b.value()).is_some_and(|p| us.contains(&p)));
            }
        }
    }
}
