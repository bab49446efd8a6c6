//! Statistic sums over `S_n` and the descent products `Π_n`.

use super::{check_n, pairs, LemmaReport, ENUMERATION_MAX_N};
use crate::error::Result;
use crate::perm::{factorial, permutations, statistic, Permutation, StatisticKind};
use crate::poly::{d_n, omega, Accumulator, Int, Polynomial, VariableId};
use crate::spectral::binomial;

fn total(kind: StatisticKind, n: usize) -> Result<Polynomial> {
    let mut acc = Accumulator::new();
    for s in permutations(n)? {
        acc.add_scaled(&statistic(kind, &s), &Int::from(1))?;
    }
    Ok(acc.finish())
}

/// `Σ_σ des_X(σ) = (n!/2) 𝔡_n`, plus the scalar sums of `des` and `maj`.
pub fn check_lemma_2_3(n: usize) -> Result<LemmaReport> {
    check_n("lemma2.3", n, 3, ENUMERATION_MAX_N)?;
    let mut r = LemmaReport::new("lemma2.3", n);
    let half = factorial(n) as i64 / 2;
    let sum = total(StatisticKind::DesX, n)?;
    r.check(&d_n(n)?.scale(&Int::from(half)), &sum, || "sum of des_X".into());
    let des = total(StatisticKind::Des, n)?;
    r.check(&Polynomial::constant((n as i64 - 1) * half), &des, || "sum of des".into());
    let maj = total(StatisticKind::Maj, n)?;
    r.check(&Polynomial::constant(half * binomial(n, 2) as i64), &maj, || "sum of maj".into());
    r.notes.push(format!("sum des_X = {sum}"));
    r.notes.push(format!("sum des = {des}, sum maj = {maj}"));
    Ok(r)
}

/// `Σ_σ inv_X(σ) = (n!/2) Σ X_{i,j}`, plus the scalar sum of `inv`.
pub fn check_lemma_2_4(n: usize) -> Result<LemmaReport> {
    check_n("lemma2.4", n, 4, ENUMERATION_MAX_N)?;
    let mut r = LemmaReport::new("lemma2.4", n);
    let sum = total(StatisticKind::InvX, n)?;
    r.check(&omega(n)?, &sum, || "sum of inv_X".into());
    let inv = total(StatisticKind::Inv, n)?;
    let expected = factorial(n) as i64 / 2 * binomial(n, 2) as i64;
    r.check(&Polynomial::constant(expected), &inv, || "sum of inv".into());
    r.notes.push(format!("sum inv_X = {sum}"));
    r.notes.push(format!("sum inv = {inv}"));
    Ok(r)
}

/// `Π_n(τ) = Σ_σ des_X(τσ) des_X(σ⁻¹)` by a direct loop over `σ`.
pub fn compute_pi_n(tau: &Permutation) -> Result<Polynomial> {
    let mut acc = Accumulator::new();
    let one = Int::from(1);
    for s in permutations(tau.degree())? {
        let left = statistic(StatisticKind::DesX, &tau.compose(&s)?);
        let right = statistic(StatisticKind::DesX, &s.inverse());
        acc.add_product(&left, &right, &one)?;
    }
    Ok(acc.finish())
}

/// `Σ_{σ ∈ S_n^{i,j}} X_{σ⁻¹(i)} des_X(σ⁻¹)`
fn adjacent_sum(n: usize, i: usize, j: usize, perms: &[Permutation]) -> Result<Polynomial> {
    let mut acc = Accumulator::new();
    let one = Int::from(1);
    for s in perms {
        let (pi, pj) = (s.position_of(i), s.position_of(j));
        if pj == pi + 1 {
            debug_assert!(pi < n);
            let x = Polynomial::var(VariableId::Single(pi as u8));
            acc.add_product(&x, &statistic(StatisticKind::DesX, &s.inverse()), &one)?;
        }
    }
    Ok(acc.finish())
}

/// Both displayed identities, for every `i < j`: plain equality when
/// `j > i + 1`, and the `−X_i (n−2)! 𝔡_n` correction when `j = i + 1`.
pub fn check_lemma_3_1(n: usize) -> Result<LemmaReport> {
    check_n("lemma3.1", n, 3, ENUMERATION_MAX_N)?;
    let mut r = LemmaReport::new("lemma3.1", n);
    let perms = permutations(n)?;
    let correction = d_n(n)?.scale(&Int::from(factorial(n - 2) as i64));
    for (i, j) in pairs(n) {
        let lhs = adjacent_sum(n, i, j, &perms)?;
        let mut rhs = adjacent_sum(n, j, i, &perms)?;
        if j == i + 1 {
            rhs = rhs.sub(&Polynomial::var(VariableId::Single(i as u8)).mul(&correction)?)?;
        }
        r.check(&rhs, &lhs, || format!("(i,j) = ({i},{j})"));
    }
    Ok(r)
}

/// `Π_n(τ) = Π_n(ι) − des_X(τ)(n−2)! 𝔡_n` for every `τ`.
pub fn check_lemma_3_2(n: usize) -> Result<LemmaReport> {
    check_n("lemma3.2", n, 3, ENUMERATION_MAX_N)?;
    let mut r = LemmaReport::new("lemma3.2", n);
    let base = compute_pi_n(&Permutation::identity(n))?;
    let step = d_n(n)?.scale(&Int::from(factorial(n - 2) as i64));
    for tau in permutations(n)? {
        let expected = base.sub(&statistic(StatisticKind::DesX, &tau).mul(&step)?)?;
        r.check(&expected, &compute_pi_n(&tau)?, || format!("tau = {tau}"));
    }
    r.notes.push(format!("Pi_n(identity) = {base}"));
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_2_3_at_3() {
        let r = check_lemma_2_3(3).unwrap();
        assert!(r.passed(), "{}", r.summary());
        assert_eq!(r.notes[0], "sum des_X = 3*X[1] + 3*X[2]");
    }

    #[test]
    fn lemma_2_4_at_4() {
        assert!(check_lemma_2_4(4).unwrap().passed());
    }

    #[test]
    fn lemmas_3_at_3_and_4() {
        for n in 3..=4 {
            assert!(check_lemma_3_1(n).unwrap().passed());
            assert!(check_lemma_3_2(n).unwrap().passed());
        }
    }

    #[test]
    fn ranges() {
        assert!(check_lemma_2_3(2).is_err());
        assert!(check_lemma_2_4(3).is_err());
        assert!(check_lemma_3_2(7).is_err());
    }
}
