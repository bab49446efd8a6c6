//! Sparse multivariate polynomials with exact integer coefficients.
//!
//! Terms are kept sorted by the packed [`Monomial`] order (degree, then
//! lexicographic on the sorted variable list) with no zero coefficients, so
//! structural equality is polynomial equality and rendering is deterministic.

mod int;
mod monomial;
mod named;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{domain, Error, Result};

pub use int::Int;
pub use monomial::{Family, Monomial, VariableId, MAX_MONOMIAL_DEGREE};
pub use named::{d_n, delta, lambda, named, omega, NamedPolynomial};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Int)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::from_int(Int::from(c))
    }

    pub fn from_int(c: Int) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(Monomial::ONE, c)] }
        }
    }

    pub fn var(v: VariableId) -> Self {
        Self { terms: vec![(Monomial::var(v), Int::from(1))] }
    }

    /// `Σ v` over the given variables, repeated variables accumulating.
    ///
    /// Panics if the variables span both families.
    pub fn sum_of_variables(vars: impl IntoIterator<Item = VariableId>) -> Self {
        let mut acc = Accumulator::new();
        for v in vars {
            acc.add_term(Monomial::var(v), &Int::from(1)).expect("single family");
        }
        acc.finish()
    }

    /// Canonicalizes arbitrary `(monomial, coefficient)` pairs.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Int)>) -> Result<Self> {
        let mut acc = Accumulator::new();
        for (m, c) in terms {
            acc.add_term(m, &c)?;
        }
        Ok(acc.finish())
    }

    /// Trusted constructor for callers that already produce sorted, nonzero,
    /// single-family terms.
    pub(crate) fn from_sorted_terms(terms: Vec<(Monomial, Int)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Self { terms }
    }

    pub fn terms(&self) -> &[(Monomial, Int)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// The value of a constant polynomial.
    pub fn constant_value(&self) -> Option<Int> {
        match self.terms.as_slice() {
            [] => Some(Int::ZERO),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    /// Family of the non-constant terms; `None` for constants.
    pub fn family(&self) -> Option<Family> {
        self.terms.last().and_then(|(m, _)| m.family())
    }

    /// Total degree; the zero polynomial has degree 0.
    pub fn degree(&self) -> u32 {
        self.terms.last().map(|(m, _)| m.degree()).unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// `[m] self`
    pub fn coefficient_of(&self, m: &Monomial) -> Int {
        match self.terms.binary_search_by(|(k, _)| k.cmp(m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    fn check_families(&self, other: &Polynomial) -> Result<()> {
        match (self.family(), other.family()) {
            (Some(a), Some(b)) if a != b => Err(Error::MixedFamilies),
            _ => Ok(()),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_families(other)?;
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ma, ca)), Some((mb, cb))) => {
                    if ma < mb {
                        out.push((*ma, ca.clone()));
                        a.next();
                    } else if mb < ma {
                        out.push((*mb, cb.clone()));
                        b.next();
                    } else {
                        let s = ca + cb;
                        if !s.is_zero() {
                            out.push((*ma, s));
                        }
                        a.next();
                        b.next();
                    }
                }
                (Some((m, c)), None) => {
                    out.push((*m, c.clone()));
                    a.next();
                }
                (None, Some((m, c))) => {
                    out.push((*m, c.clone()));
                    b.next();
                }
                (None, None) => break,
            }
        }
        Ok(Self { terms: out })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Self { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }

    pub fn scale(&self, c: &Int) -> Polynomial {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, k)| (*m, k * c)).collect() }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_families(other)?;
        let mut acc = Accumulator::new();
        acc.add_product(self, other, &Int::from(1))?;
        Ok(acc.finish())
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        let mut out = Polynomial::constant(1);
        for _ in 0..k {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Exact evaluation at a rational point.
    pub fn specialize(&self, assignment: &Assignment) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from_integer(c.to_bigint());
            for v in m.variables() {
                match assignment.get(v) {
                    Some(x) => term *= x,
                    None => return domain(format!("assignment does not cover {v}")),
                }
            }
            total += term;
        }
        Ok(total)
    }

    /// Evaluation modulo a prime `p < 2^32`, variables given as residues.
    pub fn eval_mod(&self, p: u64, value: impl Fn(VariableId) -> Option<u64>) -> Result<u64> {
        let mut total = 0u64;
        for (m, c) in &self.terms {
            let mut term = c.rem_euclid_u64(p);
            for v in m.variables() {
                let x = value(v).ok_or_else(|| Error::Domain(format!("no residue for {v}")))?;
                term = term * (x % p) % p;
            }
            total = (total + term) % p;
        }
        Ok(total)
    }

    /// Sum of all coefficients.
    pub fn coefficient_sum(&self) -> Int {
        let mut s = Int::ZERO;
        for (_, c) in &self.terms {
            s += c;
        }
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl From<Int> for Polynomial {
    fn from(c: Int) -> Self {
        Polynomial::from_int(c)
    }
}

/// Mutable sum of terms, used where many products are added together.
#[derive(Default, Clone, Debug)]
pub struct Accumulator {
    terms: BTreeMap<Monomial, Int>,
    family: Option<Family>,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    fn note_family(&mut self, f: Option<Family>) -> Result<()> {
        match (self.family, f) {
            (Some(a), Some(b)) if a != b => Err(Error::MixedFamilies),
            (None, Some(b)) => {
                self.family = Some(b);
                Ok(())
            }
            _ => Ok(()),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: &Int) -> Result<()> {
        if c.is_zero() {
            return Ok(());
        }
        self.note_family(m.family())?;
        *self.terms.entry(m).or_default() += c;
        Ok(())
    }

    /// `self += scale · p`
    pub fn add_scaled(&mut self, p: &Polynomial, scale: &Int) -> Result<()> {
        for (m, c) in p.terms() {
            self.add_term(*m, &(c * scale))?;
        }
        Ok(())
    }

    /// `self += scale · a · b`
    pub fn add_product(&mut self, a: &Polynomial, b: &Polynomial, scale: &Int) -> Result<()> {
        for (ma, ca) in a.terms() {
            let cs = ca * scale;
            for (mb, cb) in b.terms() {
                let m = ma.mul(mb)?;
                self.add_term(m, &(&cs * cb))?;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> Polynomial {
        Polynomial { terms: self.terms.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }
}

/// The variables of one family over `S_n`, in canonical order.
pub fn variables(family: Family, n: usize) -> Vec<VariableId> {
    match family {
        Family::Single => (1..n).map(|k| VariableId::Single(k as u8)).collect(),
        Family::Pair => {
            let mut out = Vec::new();
            for i in 1..=n {
                for j in i + 1..=n {
                    out.push(VariableId::Pair(i as u8, j as u8));
                }
            }
            out
        }
    }
}

/// A rational value for each variable.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Assignment {
    values: BTreeMap<VariableId, BigRational>,
}

impl Assignment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn set(&mut self, v: VariableId, value: BigRational) -> &mut Self {
        self.values.insert(v, value);
        self
    }

    pub fn get(&self, v: VariableId) -> Option<&BigRational> {
        self.values.get(&v)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VariableId, &BigRational)> {
        self.values.iter()
    }

    /// Every variable of the family set to 1.
    pub fn all_ones(family: Family, n: usize) -> Self {
        let mut a = Self::new();
        for v in variables(family, n) {
            a.set(v, BigRational::one());
        }
        a
    }

    /// `X_k = k`, the weighting that turns `des_X` into `maj`.
    pub fn descent_positions(n: usize) -> Self {
        let mut a = Self::new();
        for v in variables(Family::Single, n) {
            if let VariableId::Single(k) = v {
                a.set(v, BigRational::from_integer(BigInt::from(k)));
            }
        }
        a
    }

    /// Strictly positive small rationals `p/q`, `1 ≤ p ≤ 29`, `1 ≤ q ≤ 7`.
    pub fn random_positive<R: Rng + ?Sized>(family: Family, n: usize, rng: &mut R) -> Self {
        let mut a = Self::new();
        for v in variables(family, n) {
            let num: i64 = rng.random_range(1..=29);
            let den: i64 = rng.random_range(1..=7);
            a.set(v, BigRational::new(BigInt::from(num), BigInt::from(den)));
        }
        a
    }

    /// Renders as `X[1]=1, X[2]=3/2`.
    pub fn describe(&self) -> String {
        self.values.iter().map(|(v, q)| format!("{v}={q}")).collect::<Vec<_>>().join(", ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(k: u8) -> Polynomial {
        Polynomial::var(VariableId::Single(k))
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }

    #[test]
    fn ring_examples() {
        assert!(x(1).mul(&Polynomial::zero()).unwrap().is_zero());
        let lhs = x(1).add(&x(2)).unwrap().mul(&x(1)).unwrap();
        assert_eq!(lhs.to_string(), "X[1]^2 + X[1]*X[2]");
        let d3 = d_n(3).unwrap();
        assert!(d3.add(&d3.scale(&Int::from(-1))).unwrap().is_zero());
        let mixed = x(1).add(&Polynomial::var(VariableId::Pair(1, 2)));
        assert_eq!(mixed, Err(Error::MixedFamilies));
        assert!(Polynomial::constant(3).add(&Polynomial::var(VariableId::Pair(1, 2))).is_ok());
    }

    #[test]
    fn coefficients() {
        let p = x(1).scale(&Int::from(3)).add(&x(2)).unwrap();
        assert_eq!(p.coefficient_of(&Monomial::var(VariableId::Single(1))), Int::from(3));
        assert_eq!(Polynomial::zero().coefficient_of(&Monomial::var(VariableId::Single(1))), Int::ZERO);
        let d3 = d_n(3).unwrap();
        let sq = d3.mul(&d3).unwrap();
        let m = Monomial::from_powers(&[(VariableId::Single(1), 1), (VariableId::Single(2), 1)]).unwrap();
        assert_eq!(sq.coefficient_of(&m), Int::from(2));
    }

    #[test]
    fn rendering() {
        let p = Polynomial::from_terms([
            (Monomial::from_powers(&[(VariableId::Pair(1, 3), 2)]).unwrap(), Int::from(2)),
            (Monomial::var(VariableId::Pair(1, 2)), Int::from(3)),
        ])
        .unwrap();
        assert_eq!(p.to_string(), "3*X[1,2] + 2*X[1,3]^2");
        assert_eq!(p.neg().to_string(), "-3*X[1,2] - 2*X[1,3]^2");
        assert_eq!(Polynomial::zero().to_string(), "0");
        assert_eq!(Polynomial::constant(-7).to_string(), "-7");
    }

    #[test]
    fn specialization_examples() {
        // n!/2 · d_n at all ones, n = 4: 12 · 3
        let p = d_n(4).unwrap().scale(&Int::from(12));
        assert_eq!(p.specialize(&Assignment::all_ones(Family::Single, 4)).unwrap(), q(36));
        // n = 3, X_k = k: 3 · (1 + 2)
        let p = d_n(3).unwrap().scale(&Int::from(3));
        assert_eq!(p.specialize(&Assignment::descent_positions(3)).unwrap(), q(9));
        // Λ at n = 4, all ones: 2 · Σ (j - i) = 20
        assert_eq!(lambda(4).unwrap().specialize(&Assignment::all_ones(Family::Pair, 4)).unwrap(), q(20));
        assert!(x(3).specialize(&Assignment::all_ones(Family::Single, 3)).is_err());
    }

    #[test]
    fn eval_mod_matches_specialization() {
        let p = lambda(5).unwrap().mul(&delta(5).unwrap()).unwrap();
        let prime = 1_000_000_007u64;
        let got = p.eval_mod(prime, |_| Some(1)).unwrap();
        let want = p.specialize(&Assignment::all_ones(Family::Pair, 5)).unwrap();
        let want = Int::from(want.to_integer()).rem_euclid_u64(prime);
        assert_eq!(got, want);
    }

    fn small_poly() -> impl Strategy<Value = Polynomial> {
        let term = (1u8..4, 0u8..4, -5i64..=5).prop_map(|(a, b, c)| {
            let mut powers = vec![(VariableId::Single(a), 1)];
            if b > 0 {
                powers.push((VariableId::Single(b), 1));
            }
            (Monomial::from_powers(&powers).unwrap(), Int::from(c))
        });
        proptest::collection::vec(term, 0..5).prop_map(|t| Polynomial::from_terms(t).unwrap())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
            prop_assert_eq!(a.add(&b).unwrap().add(&c).unwrap(), a.add(&b.add(&c).unwrap()).unwrap());
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap()).unwrap(),
                a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
            );
        }

        #[test]
        fn specialization_is_a_ring_homomorphism(a in small_poly(), b in small_poly(), seed in any::<u64>()) {
            use rand::SeedableRng;
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let pt = Assignment::random_positive(Family::Single, 4, &mut rng);
            let (sa, sb) = (a.specialize(&pt).unwrap(), b.specialize(&pt).unwrap());
            prop_assert_eq!(a.mul(&b).unwrap().specialize(&pt).unwrap(), &sa * &sb);
            prop_assert_eq!(a.add(&b).unwrap().specialize(&pt).unwrap(), sa + sb);
        }
    }
}
