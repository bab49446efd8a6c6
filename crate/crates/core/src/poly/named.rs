//! The eigenvalue polynomials of the descent and inversion operators.

use std::fmt;
use std::str::FromStr;

use super::{Accumulator, Int, Monomial, Polynomial, VariableId};
use crate::error::{domain, Error, Result};
use crate::perm::factorial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedPolynomial {
    /// `Σ_k X_k`
    DN,
    /// `(n−2)! Σ (j−i) X_{i,j}`
    Lambda,
    /// `(n−3)! Σ (n − 2(j−i)) X_{i,j}`
    Delta,
    /// `(n!/2) Σ X_{i,j}`
    Omega,
}

impl NamedPolynomial {
    pub fn name(self) -> &'static str {
        match self {
            NamedPolynomial::DN => "d_n",
            NamedPolynomial::Lambda => "Lambda",
            NamedPolynomial::Delta => "Delta",
            NamedPolynomial::Omega => "Omega",
        }
    }

    pub fn min_n(self) -> usize {
        match self {
            NamedPolynomial::DN => 3,
            _ => 4,
        }
    }
}

impl fmt::Display for NamedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedPolynomial {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "d_n" | "dn" => Ok(NamedPolynomial::DN),
            "Lambda" | "lambda" => Ok(NamedPolynomial::Lambda),
            "Delta" | "delta" => Ok(NamedPolynomial::Delta),
            "Omega" | "omega" => Ok(NamedPolynomial::Omega),
            _ => domain(format!("unknown named polynomial {s:?}")),
        }
    }
}

fn pair_form(n: usize, weight: impl Fn(usize, usize) -> i64) -> Polynomial {
    let mut acc = Accumulator::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let v = VariableId::Pair(i as u8, j as u8);
            acc.add_term(Monomial::var(v), &Int::from(weight(i, j))).expect("one family");
        }
    }
    acc.finish()
}

pub fn named(kind: NamedPolynomial, n: usize) -> Result<Polynomial> {
    if n < kind.min_n() || n > crate::perm::MAX_N {
        return domain(format!("{kind} needs {} <= n <= {}, got {n}", kind.min_n(), crate::perm::MAX_N));
    }
    let f = |k: usize| factorial(k) as i64;
    Ok(match kind {
        NamedPolynomial::DN => Polynomial::sum_of_variables((1..n).map(|k| VariableId::Single(k as u8))),
        NamedPolynomial::Lambda => pair_form(n, |i, j| f(n - 2) * (j - i) as i64),
        NamedPolynomial::Delta => pair_form(n, |i, j| f(n - 3) * (n as i64 - 2 * (j - i) as i64)),
        NamedPolynomial::Omega => pair_form(n, |_, _| f(n) / 2),
    })
}

pub fn d_n(n: usize) -> Result<Polynomial> {
    named(NamedPolynomial::DN, n)
}

pub fn lambda(n: usize) -> Result<Polynomial> {
    named(NamedPolynomial::Lambda, n)
}

pub fn delta(n: usize) -> Result<Polynomial> {
    named(NamedPolynomial::Delta, n)
}

pub fn omega(n: usize) -> Result<Polynomial> {
    named(NamedPolynomial::Omega, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_instances() {
        assert_eq!(d_n(3).unwrap().to_string(), "X[1] + X[2]");
        assert_eq!(
            delta(4).unwrap().to_string(),
            "2*X[1,2] - 2*X[1,4] + 2*X[2,3] + 2*X[3,4]"
        );
        let om = omega(4).unwrap();
        assert_eq!(om.len(), 6);
        assert!(om.terms().iter().all(|(_, c)| *c == Int::from(12)));
    }

    #[test]
    fn thresholds() {
        assert!(d_n(2).is_err());
        assert!(lambda(3).is_err());
        assert!(omega(4).is_ok());
        assert_eq!("Lambda".parse::<NamedPolynomial>().unwrap(), NamedPolynomial::Lambda);
    }
}
