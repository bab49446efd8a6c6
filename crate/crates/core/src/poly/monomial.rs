use std::fmt;

use crate::error::{domain, Error, Result};

/// The two variable families. A polynomial never mixes them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `X_1, …, X_{n-1}` (descent positions)
    Single,
    /// `X_{1,2}, …, X_{n-1,n}` (inversion pairs)
    Pair,
}

/// A single indeterminate, `X_k` or `X_{i,j}` (1-based, `i < j`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VariableId {
    Single(u8),
    Pair(u8, u8),
}

impl VariableId {
    pub fn family(self) -> Family {
        match self {
            VariableId::Single(_) => Family::Single,
            VariableId::Pair(..) => Family::Pair,
        }
    }

    /// Checks the index constraints for a polynomial ring over `S_n`.
    pub fn validate(self, n: usize) -> Result<Self> {
        match self {
            VariableId::Single(k) if k >= 1 && (k as usize) < n => Ok(self),
            VariableId::Pair(i, j) if i >= 1 && i < j && (j as usize) <= n => Ok(self),
            _ => domain(format!("{self} is not a variable for n = {n}")),
        }
    }

    /// Byte code stored in packed monomials. Codes respect the variable order
    /// within each family: `X_1 < X_2 < …` and `X_{i,j}` lexicographic in `(i, j)`.
    fn code(self) -> u8 {
        match self {
            VariableId::Single(k) => k,
            VariableId::Pair(i, j) => (i << 4) | j,
        }
    }

    fn from_code(code: u8, family: Family) -> Self {
        match family {
            Family::Single => VariableId::Single(code),
            Family::Pair => VariableId::Pair(code >> 4, code & 0xf),
        }
    }

    fn well_formed(self) -> bool {
        match self {
            VariableId::Single(k) => k >= 1,
            VariableId::Pair(i, j) => i >= 1 && i < j && j <= 15,
        }
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VariableId::Single(k) => write!(f, "X[{k}]"),
            VariableId::Pair(i, j) => write!(f, "X[{i},{j}]"),
        }
    }
}

/// Largest total degree a packed monomial can hold.
pub const MAX_MONOMIAL_DEGREE: u32 = 7;

const SLOTS: usize = 7;
const DEGREE_SHIFT: u32 = 61;
const PAIR_FLAG: u64 = 1 << 60;

/// A monomial packed into one word.
///
/// Layout: degree in the top three bits, a family flag, then up to seven
/// variable codes in nondecreasing order from the most significant slot down.
/// Comparing the raw words therefore orders monomials by degree first and
/// lexicographically on the sorted variable sequence second; this is the
/// canonical term order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(v: VariableId) -> Self {
        assert!(v.well_formed(), "malformed variable {v:?}");
        let flag = if v.family() == Family::Pair { PAIR_FLAG } else { 0 };
        Monomial((1u64 << DEGREE_SHIFT) | flag | ((v.code() as u64) << 48))
    }

    /// Builds `Π v^e` from a list of powers. Zero exponents are ignored.
    pub fn from_powers(powers: &[(VariableId, u32)]) -> Result<Self> {
        let mut m = Monomial::ONE;
        for &(v, e) in powers {
            if !v.well_formed() {
                return domain(format!("malformed variable {v:?}"));
            }
            for _ in 0..e {
                m = m.mul(&Monomial::var(v))?;
            }
        }
        Ok(m)
    }

    pub fn degree(&self) -> u32 {
        (self.0 >> DEGREE_SHIFT) as u32
    }

    pub fn is_one(&self) -> bool {
        self.0 == 0
    }

    /// `None` for the constant monomial.
    pub fn family(&self) -> Option<Family> {
        if self.is_one() {
            None
        } else if self.0 & PAIR_FLAG != 0 {
            Some(Family::Pair)
        } else {
            Some(Family::Single)
        }
    }

    fn codes(&self) -> ([u8; SLOTS], usize) {
        let d = self.degree() as usize;
        let mut out = [0u8; SLOTS];
        for (s, slot) in out.iter_mut().enumerate().take(d) {
            *slot = (self.0 >> (48 - 8 * s as u32)) as u8;
        }
        (out, d)
    }

    /// Variables with repetition, in canonical order.
    pub fn variables(&self) -> Vec<VariableId> {
        let Some(family) = self.family() else { return Vec::new() };
        let (codes, d) = self.codes();
        codes[..d].iter().map(|&c| VariableId::from_code(c, family)).collect()
    }

    /// `(variable, exponent)` pairs in canonical order.
    pub fn powers(&self) -> Vec<(VariableId, u32)> {
        let mut out: Vec<(VariableId, u32)> = Vec::new();
        for v in self.variables() {
            match out.last_mut() {
                Some((last, e)) if *last == v => *e += 1,
                _ => out.push((v, 1)),
            }
        }
        out
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        self.variables().iter().filter(|&&w| w == v).count() as u32
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        let family = match (self.family(), other.family()) {
            (None, _) => return Ok(*other),
            (_, None) => return Ok(*self),
            (Some(a), Some(b)) if a != b => return Err(Error::MixedFamilies),
            (Some(a), _) => a,
        };
        let degree = self.degree() + other.degree();
        if degree > MAX_MONOMIAL_DEGREE {
            return Err(Error::DegreeCap { found: degree, cap: MAX_MONOMIAL_DEGREE });
        }
        let (a, da) = self.codes();
        let (b, db) = other.codes();
        let (mut i, mut j) = (0, 0);
        let mut word = (degree as u64) << DEGREE_SHIFT;
        if family == Family::Pair {
            word |= PAIR_FLAG;
        }
        for s in 0..degree as usize {
            let take_a = j >= db || (i < da && a[i] <= b[j]);
            let c = if take_a {
                i += 1;
                a[i - 1]
            } else {
                j += 1;
                b[j - 1]
            };
            word |= (c as u64) << (48 - 8 * s as u32);
        }
        Ok(Monomial(word))
    }

    /// Raw packed word; exposes the canonical ordering key.
    pub fn key(&self) -> u64 {
        self.0
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.powers().into_iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order() {
        let x1 = Monomial::var(VariableId::Single(1));
        let x2 = Monomial::var(VariableId::Single(2));
        let x1x1 = x1.mul(&x1).unwrap();
        let x1x2 = x1.mul(&x2).unwrap();
        let x2x2 = x2.mul(&x2).unwrap();
        assert!(Monomial::ONE < x1 && x1 < x2 && x2 < x1x1 && x1x1 < x1x2 && x1x2 < x2x2);
        assert_eq!(x2.mul(&x1).unwrap(), x1x2);

        let p12 = Monomial::var(VariableId::Pair(1, 2));
        let p13 = Monomial::var(VariableId::Pair(1, 3));
        let p23 = Monomial::var(VariableId::Pair(2, 3));
        let p18 = Monomial::var(VariableId::Pair(1, 8));
        assert!(p12 < p13 && p13 < p18 && p18 < p23);
    }

    #[test]
    fn powers_and_rendering() {
        let m = Monomial::from_powers(&[(VariableId::Pair(1, 3), 2), (VariableId::Pair(1, 2), 1)]).unwrap();
        assert_eq!(m.degree(), 3);
        assert_eq!(m.to_string(), "X[1,2]*X[1,3]^2");
        assert_eq!(m.exponent(VariableId::Pair(1, 3)), 2);
        assert_eq!(m.family(), Some(Family::Pair));
        assert_eq!(Monomial::ONE.to_string(), "1");
    }

    #[test]
    fn families_do_not_mix_and_degree_is_capped() {
        let a = Monomial::var(VariableId::Single(1));
        let b = Monomial::var(VariableId::Pair(1, 2));
        assert_eq!(a.mul(&b), Err(Error::MixedFamilies));
        let big = Monomial::from_powers(&[(VariableId::Single(1), 7)]).unwrap();
        assert!(matches!(big.mul(&a), Err(Error::DegreeCap { .. })));
    }

    #[test]
    fn validate_against_n() {
        assert!(VariableId::Single(3).validate(4).is_ok());
        assert!(VariableId::Single(4).validate(4).is_err());
        assert!(VariableId::Pair(2, 4).validate(4).is_ok());
        assert!(VariableId::Pair(3, 2).validate(4).is_err());
        assert!(VariableId::Pair(1, 5).validate(4).is_err());
    }
}
