//! Brute-force checkers for the counting lemmas and coefficient formulas.
//!
//! Every check enumerates `S_n` directly and composes permutations one pair
//! at a time. Nothing here calls the convolution kernel in [`crate::algebra`],
//! so agreement between the two is independent evidence.

mod coefficients;
mod counting;
mod sums;

use std::fmt;

use num_rational::Ratio;

use crate::error::{domain, Result};
use crate::perm::{permutations, Permutation};

pub use coefficients::{
    check_lemma_4_3, check_lemma_4_5, check_lemma_4_5_with, check_lemma_4_6, check_lemma_4_7, check_lemma_4_7_with,
    compute_f2_brute, compute_f3_brute,
};
pub use counting::{check_lemma_4_1, check_lemma_4_2, check_lemma_4_4};
pub use sums::{check_lemma_2_3, check_lemma_2_4, check_lemma_3_1, check_lemma_3_2, compute_pi_n};

/// Largest `n` accepted by [`enumerate_subset`] and the lemma checkers.
pub const ENUMERATION_MAX_N: usize = 6;

/// Exact rationals for closed forms with `/2`, `/4`, `/8`.
pub(crate) type Q = Ratio<i128>;

/// `χ_{i,j} = j − i − 1` for `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Chi {
    pub i: usize,
    pub j: usize,
}

impl Chi {
    pub fn new(i: usize, j: usize) -> Result<Self> {
        if i >= j {
            return domain(format!("chi needs i < j, got ({i},{j})"));
        }
        Ok(Chi { i, j })
    }

    pub fn value(self) -> i64 {
        (self.j - self.i - 1) as i64
    }
}

/// `χ` of the unordered pair `{a, b}`, i.e. `|a − b| − 1`.
pub(crate) fn chi(a: usize, b: usize) -> i128 {
    a.abs_diff(b) as i128 - 1
}

/// One of the permutation subsets used in the counting lemmas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubsetSpec {
    /// `S_n^{i,j}`: `σ⁻¹(j) − σ⁻¹(i) = 1`.
    Adjacent(usize, usize),
    /// `S_n^{i−j}`: `σ⁻¹(j) − σ⁻¹(i) > 1`.
    Separated(usize, usize),
    /// `S_n^{i j}`: `σ(i) > σ(j)`.
    ValueOrder(usize, usize),
    /// `^{i j}S_n`: `σ⁻¹(i) > σ⁻¹(j)`.
    PositionOrder(usize, usize),
    /// `S_n^{i₁ j₁}|_{ī₂=a, j̄₂=b}`: `σ(i₁) > σ(j₁)`, `σ⁻¹(i₂) = a`, `σ⁻¹(j₂) = b`.
    Restricted { base: (usize, usize), i2: usize, a: usize, j2: usize, b: usize },
}

impl SubsetSpec {
    fn validate(&self, n: usize) -> Result<()> {
        let in_range = |k: usize| (1..=n).contains(&k);
        let pair = |i: usize, j: usize| in_range(i) && in_range(j) && i != j;
        let ok = match *self {
            SubsetSpec::Adjacent(i, j)
            | SubsetSpec::Separated(i, j)
            | SubsetSpec::ValueOrder(i, j)
            | SubsetSpec::PositionOrder(i, j) => pair(i, j),
            SubsetSpec::Restricted { base: (i1, j1), i2, a, j2, b } => {
                pair(i1, j1) && pair(i2, j2) && in_range(a) && in_range(b)
            }
        };
        if ok {
            Ok(())
        } else {
            domain(format!("{self:?} has indices outside [{n}]"))
        }
    }

    pub fn contains(&self, s: &Permutation) -> bool {
        let pos = |v: usize| s.position_of(v);
        match *self {
            SubsetSpec::Adjacent(i, j) => pos(j) == pos(i) + 1,
            SubsetSpec::Separated(i, j) => pos(j) > pos(i) + 1,
            SubsetSpec::ValueOrder(i, j) => s.apply(i) > s.apply(j),
            SubsetSpec::PositionOrder(i, j) => pos(i) > pos(j),
            SubsetSpec::Restricted { base: (i1, j1), i2, a, j2, b } => {
                s.apply(i1) > s.apply(j1) && pos(i2) == a && pos(j2) == b
            }
        }
    }
}

/// Members of a subset, in lexicographic order, by filtering all of `S_n`.
pub fn enumerate_subset(spec: SubsetSpec, n: usize) -> Result<Vec<Permutation>> {
    check_n("enumerate_subset", n, 1, ENUMERATION_MAX_N)?;
    spec.validate(n)?;
    Ok(permutations(n)?.into_iter().filter(|s| spec.contains(s)).collect())
}

pub(crate) fn check_n(what: &str, n: usize, min: usize, max: usize) -> Result<()> {
    if n < min || n > max {
        return domain(format!("{what} needs {min} <= n <= {max}, got n = {n}"));
    }
    Ok(())
}

/// The first disagreement found by a checker.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaFailure {
    pub location: String,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for LemmaFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, enumerated {}", self.location, self.expected, self.actual)
    }
}

/// Outcome of one lemma checker at one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaReport {
    /// `"lemma4.2"` style identifier.
    pub id: &'static str,
    pub n: usize,
    pub cases_checked: u64,
    pub failures: u64,
    pub first_failure: Option<LemmaFailure>,
    /// Values worth echoing, such as the statistic sums.
    pub notes: Vec<String>,
}

impl LemmaReport {
    pub(crate) fn new(id: &'static str, n: usize) -> Self {
        LemmaReport { id, n, cases_checked: 0, failures: 0, first_failure: None, notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases_checked > 0
    }

    pub(crate) fn check<T: PartialEq + fmt::Display>(
        &mut self,
        expected: &T,
        actual: &T,
        location: impl FnOnce() -> String,
    ) {
        self.cases_checked += 1;
        if expected != actual {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(LemmaFailure {
                    location: location(),
                    expected: expected.to_string(),
                    actual: actual.to_string(),
                });
            }
        }
    }

    /// One-line summary for reports.
    pub fn summary(&self) -> String {
        match &self.first_failure {
            None => format!("{} cases checked at n = {}", self.cases_checked, self.n),
            Some(f) => format!("{} of {} cases fail at n = {}; first: {f}", self.failures, self.cases_checked, self.n),
        }
    }
}

/// Ordered pairs `(i, j)` with `1 ≤ i < j ≤ n`.
pub(crate) fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

pub(crate) fn fact(n: usize) -> i128 {
    (1..=n as i128).product()
}

pub(crate) fn q(v: i128) -> Q {
    Q::from_integer(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adjacent_small() {
        let s = enumerate_subset(SubsetSpec::Adjacent(1, 2), 3).unwrap();
        assert_eq!(s.len(), 2);
        for p in &s {
            assert_eq!(p.position_of(2), p.position_of(1) + 1);
        }
    }

    #[test]
    fn value_order_is_half() {
        for n in 2..=5 {
            for (i, j) in pairs(n) {
                let a = enumerate_subset(SubsetSpec::ValueOrder(i, j), n).unwrap().len();
                let b = enumerate_subset(SubsetSpec::ValueOrder(j, i), n).unwrap().len();
                assert_eq!(a, fact(n) as usize / 2);
                assert_eq!(a + b, fact(n) as usize);
            }
        }
    }

    #[test]
    fn restricted_swap_case() {
        let n = 5;
        for (i1, j1) in pairs(n) {
            for (i2, j2) in pairs(n) {
                let spec = SubsetSpec::Restricted { base: (i1, j1), i2, a: j1, j2, b: i1 };
                assert_eq!(enumerate_subset(spec, n).unwrap().len(), 6);
            }
        }
    }

    #[test]
    fn separated_and_adjacent_partition_forward_pairs() {
        let n = 4;
        let total = enumerate_subset(SubsetSpec::PositionOrder(3, 1), n).unwrap().len();
        let adj = enumerate_subset(SubsetSpec::Adjacent(1, 3), n).unwrap().len();
        let sep = enumerate_subset(SubsetSpec::Separated(1, 3), n).unwrap().len();
        assert_eq!(adj + sep, total);
    }

    #[test]
    fn bad_specs() {
        assert!(enumerate_subset(SubsetSpec::ValueOrder(1, 5), 4).is_err());
        assert!(enumerate_subset(SubsetSpec::ValueOrder(2, 2), 4).is_err());
        assert!(enumerate_subset(SubsetSpec::Adjacent(1, 2), 7).is_err());
        assert!(Chi::new(3, 2).is_err());
        assert_eq!(Chi::new(1, 4).unwrap().value(), 2);
    }
}
