//! Property tests for the exact ring and the combinatorics.

use std::cmp::Ordering;

use num_bigint::BigInt;
use proptest::prelude::*;
use schur_core::algebra::zigzag;
use schur_core::charac::{kostka, Lr};
use schur_core::partition::{multipartitions, partitions, transpose, trim, Multi};
use schur_core::ring::GradedSuperScalar;
use schur_core::schur::{canonicalize, Family};

fn scalar() -> impl Strategy<Value = GradedSuperScalar> {
    prop::collection::vec((-3i64..=3, -2i64..=2, 0u8..=1), 0..4).prop_map(|terms| {
        terms
            .into_iter()
            .fold(GradedSuperScalar::zero(), |acc, (c, m, e)| {
                acc.add(&GradedSuperScalar::monomial(BigInt::from(c), m, e))
            })
    })
}

fn partition(max: usize) -> impl Strategy<Value = Vec<usize>> {
    (0..=max).prop_flat_map(|k| {
        let all = partitions(k, k.max(1));
        (0..all.len()).prop_map(move |i| trim(&all[i]))
    })
}

/// Three multipartitions with two components and the same size.
fn multi_triple(n: usize) -> impl Strategy<Value = (Multi, Multi, Multi)> {
    (0..=4usize).prop_flat_map(move |d| {
        let all = multipartitions(2, n, d);
        let k = all.len();
        (0..k, 0..k, 0..k)
            .prop_map(move |(i, j, l)| (all[i].clone(), all[j].clone(), all[l].clone()))
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&GradedSuperScalar::one()), a.clone());
        prop_assert!(a.sub(&a).is_zero());
        prop_assert_eq!(GradedSuperScalar::qpi(0, 1).pow(2), GradedSuperScalar::one());
    }

    #[test]
    fn scalars_round_trip_through_text(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<GradedSuperScalar>().unwrap(), a);
    }

    #[test]
    fn canonical_form_is_idempotent(word in prop::collection::vec((0usize..5, 1usize..=2, 1usize..=2), 1..4)) {
        let f = Family::new(zigzag(1).unwrap(), 2).unwrap();
        let w: Vec<_> = word.iter().map(|&(b, r, s)| f.triple(b, r, s)).collect();
        match canonicalize(&w) {
            Ok((o, sign)) => {
                prop_assert_eq!(canonicalize(&o).unwrap(), (o.clone(), 1));
                let mut rev = w.clone();
                rev.reverse();
                let (o2, sign2) = canonicalize(&rev).unwrap();
                prop_assert_eq!(&o2, &o);
                let odd = w.iter().filter(|t| t.odd).count();
                let flip = if (odd * odd.saturating_sub(1) / 2) % 2 == 1 { -1 } else { 1 };
                prop_assert_eq!(sign2, sign * flip);
            }
            Err(_) => {
                let mut odd: Vec<_> = w.iter().filter(|t| t.odd).collect();
                let before = odd.len();
                odd.sort();
                odd.dedup();
                prop_assert!(odd.len() < before);
            }
        }
    }

    #[test]
    fn dominance_is_a_partial_order((a, b, c) in multi_triple(3)) {
        let cmp = |x: &Multi, y: &Multi| x.compare(y).unwrap();
        prop_assert_eq!(cmp(&a, &a), Some(Ordering::Equal));
        prop_assert_eq!(cmp(&a, &b).map(Ordering::reverse), cmp(&b, &a));
        let le = |x: &Multi, y: &Multi| matches!(cmp(x, y), Some(Ordering::Less | Ordering::Equal));
        if le(&a, &b) && le(&b, &c) {
            prop_assert!(le(&a, &c));
        }
        if a.gt(&b) {
            prop_assert!(a.linear_key() > b.linear_key());
        }
    }

    #[test]
    fn lr_symmetry(lam in partition(6), mu in partition(3), nu in partition(3)) {
        let lr = Lr::new();
        let c = lr.lr2(&lam, &mu, &nu);
        prop_assert_eq!(c, lr.lr2(&lam, &nu, &mu));
        prop_assert_eq!(c, lr.lr2(&transpose(&lam), &transpose(&mu), &transpose(&nu)));
        if lam.iter().sum::<usize>() == mu.iter().sum::<usize>() + nu.iter().sum::<usize>() {
            prop_assert_eq!(lr.lr_coeff(&lam, &[mu.clone(), nu.clone()], &[false, true]).unwrap(), lr.lr2(&lam, &mu, &transpose(&nu)));
        }
    }

    #[test]
    fn kostka_is_permutation_invariant(lam in partition(5), seed in any::<u64>()) {
        let k = lam.iter().sum::<usize>();
        let mut mu = vec![0usize; 4];
        let mut s = seed;
        for _ in 0..k {
            mu[(s % 4) as usize] += 1;
            s /= 4;
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1);
        }
        let base = kostka(&lam, &mu).unwrap();
        let mut sorted = mu.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        prop_assert_eq!(base, kostka(&lam, &sorted).unwrap());
        let mut rev = mu.clone();
        rev.reverse();
        prop_assert_eq!(base, kostka(&lam, &rev).unwrap());
        prop_assert_eq!(kostka(&lam, &lam).unwrap(), 1);
    }
}
