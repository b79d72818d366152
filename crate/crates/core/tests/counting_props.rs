use icube4_core::counting::{
    c_m, f_m, f_m_convolution, g_m, h, k_m, q, sweep, CountError, FactoredInteger,
};
use icube4_core::enumeration::{count_icubes_brute, vectors_of_norm};
use icube4_core::EnumBudget;
use proptest::prelude::*;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn g(m: u8, n: u64) -> u128 {
    g_m(m, &FactoredInteger::new(n).unwrap()).unwrap()
}

proptest! {
    #[test]
    fn g_is_multiplicative(a in 1u64..=1_000_000, b in 1u64..=1_000_000, m in 1u8..=4) {
        prop_assume!(gcd(a, b) == 1);
        prop_assert_eq!(g(m, a * b), g(m, a) * g(m, b));
    }

    #[test]
    fn factorization_invariants(n in 1u64..=10_000_000_000) {
        let f = FactoredInteger::new(n).unwrap();
        prop_assert_eq!(f.factors().iter().map(|&(p, e)| p.pow(e)).product::<u64>(), n);
        prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
    }

    #[test]
    fn counts_positive_and_twin_ratio(n in 1u64..=1_000_000_000) {
        for m in 1..=4 {
            prop_assert!(f_m(m, n).unwrap() > 0);
        }
        prop_assert_eq!(f_m(4, n).unwrap(), 2 * f_m(3, n).unwrap());
    }

    #[test]
    fn closed_equals_convolution(n in 1u64..=100_000_000, m in 1u8..=4) {
        prop_assert_eq!(f_m(m, n).unwrap(), f_m_convolution(m, n).unwrap());
    }

    #[test]
    fn odd_kernels_positive(n in (0u64..5_000_000).prop_map(|x| 2 * x + 1)) {
        prop_assert!(h(n).unwrap() >= 1 && q(n).unwrap() >= 1);
        for m in 2..=4 {
            prop_assert!(k_m(m, n).unwrap() > 0);
        }
    }
}

#[test]
fn powers_of_two() {
    for m in 1..=4 {
        for k in 1..=40 {
            assert_eq!(g(m, 1 << k), 3);
            assert_eq!(f_m(m, 1 << k).unwrap(), 3 * c_m(m).unwrap());
        }
    }
}

#[test]
fn jacobi_vector_count() {
    let b = EnumBudget::icubes();
    for n in 1..=50 {
        assert_eq!(
            vectors_of_norm(n, 4, &b).unwrap().len() as u128,
            f_m(1, n).unwrap(),
            "N={n}"
        );
    }
}

#[test]
fn brute_counts_on_a_few_norms() {
    let b = EnumBudget::icubes();
    for n in [1, 2, 3, 5, 8, 9, 15] {
        for m in 1..=4u8 {
            assert_eq!(
                count_icubes_brute(m.into(), n, &b).unwrap(),
                f_m(m, n).unwrap(),
                "m={m} N={n}"
            );
        }
    }
}

#[test]
fn sweep_reports_brute_inside_budget_only() {
    let b = EnumBudget::new(6);
    let rs = sweep(8, true, &b);
    for r in rs {
        let r = r.unwrap();
        assert_eq!(r.brute.is_some(), r.n <= 6);
    }
}

#[test]
fn error_paths() {
    assert_eq!(f_m(0, 3), Err(CountError::InvalidM(0)));
    assert_eq!(f_m(2, 0), Err(CountError::Zero));
    assert_eq!(k_m(1, 3), Err(CountError::InvalidM(1)));
    assert_eq!(
        FactoredInteger::with_bound(1_000_003 * 1_000_033, 1000),
        Err(CountError::FactorBound {
            n: 1_000_003 * 1_000_033,
            bound: 1000
        })
    );
    // u64::MAX = 3 * 5 * 17 * 257 * 641 * 65537 * 6700417
    assert!(f_m(4, u64::MAX).is_ok());
}
