use num_bigint::BigInt;
use num_rational::BigRational;
use permspec_core::poly::{d_n, Assignment};
use permspec_core::spectral::{row_sum_eigen_check, spectrum_report, DEFAULT_SEED};
use permspec_core::{Family, Polynomial, StatisticKind, VariableId};

fn ints(v: &[i64]) -> Vec<Polynomial> {
    v.iter().map(|&c| Polynomial::constant(c)).collect()
}

#[test]
fn descent_counts_at_4() {
    let r = spectrum_report(StatisticKind::Des, 4, None, DEFAULT_SEED).unwrap();
    assert_eq!(r.eigenvalues, ints(&[0, 36, -6]));
    assert_eq!(r.verified_multiplicities(), Some(&[17, 1, 6][..]));
    assert_eq!(r.kernel_dimensions, Some(vec![17, 1, 6]));
    assert!(r.passed() && r.discrepancies.is_empty());
}

#[test]
fn major_index_at_3() {
    let r = spectrum_report(StatisticKind::Maj, 3, None, DEFAULT_SEED).unwrap();
    assert_eq!(r.eigenvalues, ints(&[0, 9, -3]));
    assert_eq!(r.verified_multiplicities(), Some(&[2, 1, 3][..]));
    assert!(r.passed());
}

#[test]
fn multinomial_descents_at_2_and_5() {
    let r = spectrum_report(StatisticKind::DesX, 2, None, DEFAULT_SEED).unwrap();
    let x = Polynomial::var(VariableId::Single(1));
    assert_eq!(r.eigenvalues, vec![x.clone(), x.neg()]);
    assert_eq!(r.verified_multiplicities(), Some(&[1, 1][..]));

    let r = spectrum_report(StatisticKind::DesX, 5, None, DEFAULT_SEED).unwrap();
    assert_eq!(r.verified_multiplicities(), Some(&[109, 1, 10][..]));
    assert!(r.passed() && r.discrepancies.is_empty());
}

#[test]
fn multinomial_inversions_at_3() {
    let r = spectrum_report(StatisticKind::InvX, 3, None, DEFAULT_SEED).unwrap();
    assert_eq!(r.eigenvalues[2].to_string(), "-X[1,2] - 2*X[1,3] - X[2,3]");
    assert_eq!(r.verified_multiplicities(), Some(&[2, 1, 2, 1][..]));
    assert!(r.passed() && r.discrepancies.is_empty());
}

#[test]
fn inversions_at_4_specialize_and_flag() {
    let ones = Assignment::all_ones(Family::Pair, 4);
    let r = spectrum_report(StatisticKind::InvX, 4, Some(&ones), DEFAULT_SEED).unwrap();
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    assert_eq!(r.specialized, Some(vec![q(0), q(72), q(-20), q(-4)]));
    assert_eq!(r.verified_multiplicities(), Some(&[17, 1, 3, 3][..]));
    assert!(r.discrepancies.iter().any(|d| d.location == "theorem2 V(0)" && d.paper_says == "14" && d.oracle_says == "17"));

    let scalar = spectrum_report(StatisticKind::Inv, 4, None, DEFAULT_SEED).unwrap();
    assert_eq!(scalar.eigenvalues, ints(&[0, 72, -20, -4]));
    assert_eq!(scalar.kernel_dimensions, Some(vec![17, 1, 3, 3]));
}

#[test]
fn row_sums() {
    let r = row_sum_eigen_check(StatisticKind::DesX, 3, DEFAULT_SEED).unwrap();
    assert_eq!(r.row_sum, d_n(3).unwrap().scale(&3.into()));
    assert!(r.passed());
    assert_eq!(r.rank.rank, 5);
    let r = row_sum_eigen_check(StatisticKind::InvX, 3, DEFAULT_SEED).unwrap();
    assert_eq!(r.row_sum.to_string(), "3*X[1,2] + 3*X[1,3] + 3*X[2,3]");
    for kind in StatisticKind::ALL {
        assert!(row_sum_eigen_check(kind, 2, DEFAULT_SEED).unwrap().passed(), "{kind}");
    }
}
