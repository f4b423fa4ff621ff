//! Property tests for the structural invariants.

use num::{BigInt, BigRational, Zero};
use proptest::prelude::*;

use parabolic_avoid::gf::{gf_coefficients, sqrt_series, RationalGf};
use parabolic_avoid::output::{format_bfile, parse_bfile};
use parabolic_avoid::perm::{
    enumerate_avoiders, EnumerateOptions, PatternSet, Permutation,
};
use parabolic_avoid::poly::{rook_poly, ExactPoly};

fn perm_strategy(k: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=k).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|w| Permutation::new(w).unwrap())
}

fn pattern_set_strategy(k: usize) -> impl Strategy<Value = PatternSet> {
    prop::collection::vec(perm_strategy(k), 1..=4)
        .prop_map(|ps| PatternSet::new(ps).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn counts_invariant_under_reversal_and_complement(set in pattern_set_strategy(3), n in 0usize..=6) {
        let base = enumerate_avoiders(n, &set, EnumerateOptions::default());
        let rev = set.map(Permutation::reversal);
        let comp = set.map(Permutation::complement);
        prop_assert_eq!(&base, &enumerate_avoiders(n, &rev, EnumerateOptions::default()));
        prop_assert_eq!(&base, &enumerate_avoiders(n, &comp, EnumerateOptions::default()));
    }

    #[test]
    fn pruned_and_unpruned_enumeration_agree(set in pattern_set_strategy(4), n in 0usize..=6) {
        let pruned = enumerate_avoiders(n, &set, EnumerateOptions { prune: true });
        let plain = enumerate_avoiders(n, &set, EnumerateOptions { prune: false });
        prop_assert_eq!(pruned, plain);
    }

    #[test]
    fn short_hosts_avoid_everything(set in pattern_set_strategy(4), n in 0usize..=3) {
        // n < k: every permutation avoids any length-k set.
        let fact: u64 = (1..=n as u64).product();
        prop_assert_eq!(
            enumerate_avoiders(n, &set, EnumerateOptions::default()),
            BigInt::from(fact)
        );
    }

    #[test]
    fn rook_polynomial_is_symmetric(s in 0usize..=8, t in 0usize..=8) {
        prop_assert_eq!(rook_poly(s, t), rook_poly(t, s));
    }

    #[test]
    fn sqrt_series_squares_to_input(tail in prop::collection::vec(-5i64..=5, 1..=4)) {
        let mut coeffs = vec![1i64];
        coeffs.extend(tail);
        let p = ExactPoly::from_integers(&coeffs);
        let n_max = 10;
        let s = sqrt_series(&p, n_max).unwrap();
        // Square back through the series expansion of s·s.
        for n in 0..=n_max {
            let mut acc = BigRational::zero();
            for i in 0..=n {
                acc += s.coeff(i) * s.coeff(n - i);
            }
            prop_assert_eq!(acc, p.coeff(n));
        }
    }

    #[test]
    fn rational_series_satisfies_denominator_recurrence(
        num in prop::collection::vec(-6i64..=6, 1..=4),
        den_tail in prop::collection::vec(-6i64..=6, 1..=4),
    ) {
        let mut den = vec![1i64];
        den.extend(den_tail);
        let gf = RationalGf::new(
            ExactPoly::from_integers(&num),
            ExactPoly::from_integers(&den),
        ).unwrap();
        let n_max = 12;
        let s = gf_coefficients(&gf, n_max).unwrap();
        // Beyond the numerator degree, Σ_j d_j c_{n-j} = 0.
        for n in (num.len().max(den.len()))..=n_max {
            let mut acc = BigRational::zero();
            for (j, d) in den.iter().enumerate() {
                if j <= n {
                    acc += BigRational::from(BigInt::from(*d)) * s.coeff(n - j);
                }
            }
            prop_assert_eq!(acc, BigRational::zero());
        }
    }

    #[test]
    fn bfile_round_trips(values in prop::collection::vec(any::<i64>(), 0..=20), start in 0usize..=5) {
        let values: Vec<BigInt> = values.into_iter().map(BigInt::from).collect();
        let text = format_bfile(start, &values);
        let parsed = parse_bfile(&text).unwrap();
        prop_assert_eq!(parsed.len(), values.len());
        for (i, (n, v)) in parsed.iter().enumerate() {
            prop_assert_eq!(*n, start + i);
            prop_assert_eq!(v, &values[i]);
        }
    }
}
