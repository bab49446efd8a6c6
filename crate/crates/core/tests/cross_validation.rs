//! Brute-force oracles against the convolution kernel.

use permspec_core::oracle::{compute_f2_brute, compute_f3_brute, compute_pi_n};
use permspec_core::{permutations, GroupAlgebraElement, StatisticKind};

#[test]
fn f2_is_pointwise_square_at_4_and_5() {
    for n in [4, 5] {
        let s2 = GroupAlgebraElement::from_statistic(StatisticKind::InvX, n).unwrap().power(2).unwrap();
        for (rank, pi) in permutations(n).unwrap().iter().enumerate() {
            assert_eq!(&compute_f2_brute(pi).unwrap(), s2.coefficient(rank), "n={n} pi={pi}");
        }
    }
}

#[test]
fn f3_is_pointwise_cube_at_4() {
    let s3 = GroupAlgebraElement::from_statistic(StatisticKind::InvX, 4).unwrap().power(3).unwrap();
    for (rank, pi) in permutations(4).unwrap().iter().enumerate() {
        assert_eq!(&compute_f3_brute(pi).unwrap(), s3.coefficient(rank), "pi={pi}");
    }
}

#[test]
fn pi_n_is_pointwise_descent_square() {
    for n in [3, 4] {
        let s2 = GroupAlgebraElement::from_statistic(StatisticKind::DesX, n).unwrap().power(2).unwrap();
        for (rank, tau) in permutations(n).unwrap().iter().enumerate() {
            assert_eq!(&compute_pi_n(tau).unwrap(), s2.coefficient(rank), "n={n} tau={tau}");
        }
    }
}
