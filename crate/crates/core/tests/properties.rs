use std::collections::BTreeMap;

use permspec_core::{factorial, permutations, statistic, GroupAlgebraElement, Permutation, Polynomial, StatisticKind};
use proptest::prelude::*;

fn perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n).prop_flat_map(|n| (0..factorial(n)).prop_map(move |r| Permutation::unrank(n, r).unwrap()))
}

fn perm_pair(max_n: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1..=max_n).prop_flat_map(|n| {
        let one = (0..factorial(n)).prop_map(move |r| Permutation::unrank(n, r).unwrap());
        (one.clone(), one.clone(), one)
    })
}

fn scalar(kind: StatisticKind, s: &Permutation) -> i64 {
    statistic(kind, s).constant_value().map(|c| c.as_i64().unwrap()).unwrap_or(0)
}

proptest! {
    #[test]
    fn rank_round_trip(s in perm(8)) {
        prop_assert_eq!(Permutation::unrank(s.degree(), s.rank()).unwrap(), s);
    }

    #[test]
    fn inverse_law((s, t, u) in perm_pair(7)) {
        prop_assert!(s.compose(&s.inverse()).unwrap().is_identity());
        prop_assert!(s.inverse().compose(&s).unwrap().is_identity());
        let left = s.compose(&t).unwrap().compose(&u).unwrap();
        let right = s.compose(&t.compose(&u).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(s.compose(&t).unwrap().inverse(), t.inverse().compose(&s.inverse()).unwrap());
    }

    #[test]
    fn inversion_count_is_inverse_invariant(s in perm(8)) {
        prop_assert_eq!(scalar(StatisticKind::Inv, &s), scalar(StatisticKind::Inv, &s.inverse()));
    }

    #[test]
    fn scalar_kinds_specialize_multinomial_ones(s in perm(7)) {
        let des_x = statistic(StatisticKind::DesX, &s);
        let inv_x = statistic(StatisticKind::InvX, &s);
        prop_assert_eq!(des_x.len() as i64, scalar(StatisticKind::Des, &s));
        prop_assert_eq!(inv_x.len() as i64, scalar(StatisticKind::Inv, &s));
        let maj: usize = s.descent_set().positions().iter().sum();
        prop_assert_eq!(maj as i64, scalar(StatisticKind::Maj, &s));
    }
}

#[test]
fn mahonian_up_to_six() {
    for n in 1..=6 {
        let mut by_maj: BTreeMap<i64, usize> = BTreeMap::new();
        let mut by_inv: BTreeMap<i64, usize> = BTreeMap::new();
        for s in permutations(n).unwrap() {
            *by_maj.entry(scalar(StatisticKind::Maj, &s)).or_default() += 1;
            *by_inv.entry(scalar(StatisticKind::Inv, &s)).or_default() += 1;
        }
        assert_eq!(by_maj, by_inv, "n={n}");
    }
}

#[test]
fn each_descent_and_inversion_occurs_in_half_the_group() {
    for n in 2..=6 {
        let perms = permutations(n).unwrap();
        for k in 1..n {
            let c = perms.iter().filter(|s| s.descent_set().contains(k)).count();
            assert_eq!(c, factorial(n) / 2);
        }
        for i in 1..=n {
            for j in i + 1..=n {
                let c = perms.iter().filter(|s| s.inversion_set().contains(i, j)).count();
                assert_eq!(c, factorial(n) / 2);
            }
        }
    }
}

#[test]
fn convolution_is_associative_at_4() {
    for kind in [StatisticKind::DesX, StatisticKind::InvX] {
        let s = GroupAlgebraElement::from_statistic(kind, 4).unwrap();
        let t = s.add_scalar_identity(&Polynomial::constant(3)).unwrap();
        let left = s.convolve(&t).unwrap().convolve(&s).unwrap();
        let right = s.convolve(&t.convolve(&s).unwrap()).unwrap();
        assert_eq!(left, right);
    }
}
