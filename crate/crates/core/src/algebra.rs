//! Elements of the group algebra `Z[X][S_n]` stored densely by rank.
//!
//! Multiplication is the convolution `(a·b)(g) = Σ_h a(h) b(h⁻¹g)`, which is
//! left multiplication by `a` written in the permutation basis. Its matrix
//! has entries `a(πτ⁻¹)`.

use std::sync::Arc;

use num_rational::BigRational;
use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::perm::{statistic, Permutation, StatisticKind, SymmetricGroup};
use crate::poly::{Accumulator, Assignment, Family, Int, Monomial, Polynomial};

/// Largest total degree allowed in any convolution result. Verification only
/// ever multiplies four linear forms, so anything larger is a logic error.
pub const DEGREE_CAP: u32 = 4;

/// Largest `n` for which a full `n! × n!` polynomial matrix is materialized.
pub const MATRIX_MAX_N: usize = 6;

#[derive(Clone)]
pub struct GroupAlgebraElement {
    group: Arc<SymmetricGroup>,
    coeffs: Vec<Polynomial>,
}

impl GroupAlgebraElement {
    pub fn new(group: Arc<SymmetricGroup>, coeffs: Vec<Polynomial>) -> Result<Self> {
        if coeffs.len() != group.order() {
            return domain(format!("expected {} coefficients, got {}", group.order(), coeffs.len()));
        }
        let mut family = None;
        for c in &coeffs {
            match (family, c.family()) {
                (Some(a), Some(b)) if a != b => return Err(Error::MixedFamilies),
                (None, f) => family = f,
                _ => {}
            }
        }
        Ok(Self { group, coeffs })
    }

    pub fn zero(n: usize) -> Result<Self> {
        let group = SymmetricGroup::get(n)?;
        let coeffs = vec![Polynomial::zero(); group.order()];
        Ok(Self { group, coeffs })
    }

    /// The unit `δ_ι`.
    pub fn delta_identity(n: usize) -> Result<Self> {
        let mut e = Self::zero(n)?;
        e.coeffs[0] = Polynomial::constant(1);
        Ok(e)
    }

    /// `Σ_σ s(σ) σ`
    pub fn from_statistic(kind: StatisticKind, n: usize) -> Result<Self> {
        let group = SymmetricGroup::get(n)?;
        let coeffs = group.elements().par_iter().map(|p| statistic(kind, p)).collect();
        Ok(Self { group, coeffs })
    }

    pub fn n(&self) -> usize {
        self.group.n()
    }

    pub fn group(&self) -> &Arc<SymmetricGroup> {
        &self.group
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coeffs
    }

    pub fn coefficient(&self, rank: usize) -> &Polynomial {
        &self.coeffs[rank]
    }

    pub fn coefficient_at(&self, p: &Permutation) -> &Polynomial {
        &self.coeffs[p.rank()]
    }

    /// Coefficient at the identity.
    pub fn identity_coefficient(&self) -> &Polynomial {
        &self.coeffs[self.group.identity_rank()]
    }

    pub fn family(&self) -> Option<Family> {
        self.coeffs.iter().find_map(Polynomial::family)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Polynomial::is_zero)
    }

    /// Rank of the first nonzero coefficient.
    pub fn first_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check_same_group(&self, other: &Self) -> Result<()> {
        if self.n() != other.n() {
            return Err(Error::DegreeMismatch { left: self.n(), right: other.n() });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect::<Result<_>>()?;
        Ok(Self { group: self.group.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.sub(b)).collect::<Result<_>>()?;
        Ok(Self { group: self.group.clone(), coeffs })
    }

    pub fn scale(&self, c: &Int) -> Self {
        Self { group: self.group.clone(), coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect() }
    }

    /// `self + c·ι`
    pub fn add_scalar_identity(&self, c: &Polynomial) -> Result<Self> {
        let mut out = self.clone();
        let id = self.group.identity_rank();
        out.coeffs[id] = out.coeffs[id].add(c)?;
        Ok(out)
    }

    /// Sum of all coefficients, i.e. the common row sum of the matrix.
    pub fn coefficient_sum(&self) -> Result<Polynomial> {
        let mut acc = Accumulator::new();
        for c in &self.coeffs {
            acc.add_scaled(c, &Int::from(1))?;
        }
        Ok(acc.finish())
    }

    /// Trace of `x ↦ self·x`: only the identity term has diagonal entries.
    pub fn trace_of_left_multiplication(&self) -> Polynomial {
        self.identity_coefficient().scale(&Int::from(self.group.order() as i64))
    }

    /// `self · other` in the group algebra.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check_same_group(other)?;
        let kernel = Kernel::new(self, other)?;
        let coeffs = (0..self.group.order())
            .into_par_iter()
            .map_init(|| vec![0i64; kernel.products.len()], |acc, g| kernel.slot(g, acc))
            .collect();
        Ok(Self { group: self.group.clone(), coeffs })
    }

    /// The single coefficient `(self · other)(g)`.
    pub fn convolve_at(&self, other: &Self, g: usize) -> Result<Polynomial> {
        self.check_same_group(other)?;
        let kernel = Kernel::new(self, other)?;
        let mut acc = vec![0i64; kernel.products.len()];
        Ok(kernel.slot(g, &mut acc))
    }

    /// `self^k` by repeated convolution; `k = 0` gives `δ_ι`.
    pub fn power(&self, k: u32) -> Result<Self> {
        let mut out = Self::delta_identity(self.n())?;
        for _ in 0..k {
            out = self.convolve(&out)?;
        }
        Ok(out)
    }

    /// Exact value of every coefficient at a rational point.
    pub fn specialize(&self, assignment: &Assignment) -> Result<Vec<BigRational>> {
        self.coeffs.iter().map(|c| c.specialize(assignment)).collect()
    }

    /// The `n! × n!` matrix `(self(πτ⁻¹))_{π,τ}` in rank order.
    pub fn matrix(&self) -> Result<Vec<Vec<Polynomial>>> {
        if self.n() > MATRIX_MAX_N {
            return Err(Error::Resource(format!(
                "matrix export limited to n <= {MATRIX_MAX_N}, got {}",
                self.n()
            )));
        }
        let g = &self.group;
        Ok((0..g.order())
            .map(|pi| (0..g.order()).map(|tau| self.coeffs[g.compose_rank(pi, g.inverse_rank(tau))].clone()).collect())
            .collect())
    }
}

impl PartialEq for GroupAlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.n() == other.n() && self.coeffs == other.coeffs
    }
}

impl std::fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroupAlgebraElement").field("n", &self.n()).field("coeffs", &self.coeffs).finish()
    }
}

/// Matrix of the left-multiplication operator of `Σ_σ s(σ)σ`.
pub fn build_matrix(kind: StatisticKind, n: usize) -> Result<Vec<Vec<Polynomial>>> {
    if n > MATRIX_MAX_N {
        return Err(Error::Resource(format!("matrix export limited to n <= {MATRIX_MAX_N}, got {n}")));
    }
    GroupAlgebraElement::from_statistic(kind, n)?.matrix()
}

/// Coefficients re-encoded against a shared monomial dictionary.
struct Encoded {
    monomials: Vec<Monomial>,
    /// Per rank: `(dictionary index, coefficient)`; `None` if some
    /// coefficient does not fit in a machine word.
    small: Vec<Option<Vec<(u32, i64)>>>,
}

impl Encoded {
    fn new(e: &GroupAlgebraElement) -> Self {
        let mut monomials: Vec<Monomial> = e.coeffs.iter().flat_map(|p| p.terms().iter().map(|(m, _)| *m)).collect();
        monomials.sort_unstable();
        monomials.dedup();
        let small = e
            .coeffs
            .iter()
            .map(|p| {
                p.terms()
                    .iter()
                    .map(|(m, c)| {
                        let idx = monomials.binary_search(m).expect("present") as u32;
                        c.as_i64().map(|v| (idx, v))
                    })
                    .collect::<Option<Vec<_>>>()
            })
            .collect();
        Self { monomials, small }
    }
}

/// Precomputed data for one convolution `a · b`.
struct Kernel<'a> {
    a: &'a GroupAlgebraElement,
    b: &'a GroupAlgebraElement,
    ea: Encoded,
    eb: Encoded,
    /// Sorted product monomials.
    products: Vec<Monomial>,
    /// `index[ia * |B| + ib]` locates `A[ia]·B[ib]` in `products`.
    index: Vec<u32>,
}

impl<'a> Kernel<'a> {
    fn new(a: &'a GroupAlgebraElement, b: &'a GroupAlgebraElement) -> Result<Self> {
        if let (Some(fa), Some(fb)) = (a.family(), b.family()) {
            if fa != fb {
                return Err(Error::MixedFamilies);
            }
        }
        let ea = Encoded::new(a);
        let eb = Encoded::new(b);
        let deg = |e: &Encoded| e.monomials.iter().map(Monomial::degree).max().unwrap_or(0);
        let total = deg(&ea) + deg(&eb);
        if total > DEGREE_CAP && !ea.monomials.is_empty() && !eb.monomials.is_empty() {
            return Err(Error::DegreeCap { found: total, cap: DEGREE_CAP });
        }
        let mut raw = Vec::with_capacity(ea.monomials.len() * eb.monomials.len());
        for ma in &ea.monomials {
            for mb in &eb.monomials {
                raw.push(ma.mul(mb)?);
            }
        }
        let mut products = raw.clone();
        products.sort_unstable();
        products.dedup();
        let index = raw.iter().map(|m| products.binary_search(m).expect("present") as u32).collect();
        Ok(Self { a, b, ea, eb, products, index })
    }

    fn slot(&self, g: usize, acc: &mut [i64]) -> Polynomial {
        match self.slot_fast(g, acc) {
            Some(p) => p,
            None => self.slot_slow(g),
        }
    }

    /// Machine-word accumulation; `None` on any overflow or big coefficient.
    fn slot_fast(&self, g: usize, acc: &mut [i64]) -> Option<Polynomial> {
        acc.iter_mut().for_each(|x| *x = 0);
        let group = &self.a.group;
        let nb = self.eb.monomials.len();
        for h in 0..group.order() {
            let ta = self.ea.small[h].as_deref()?;
            if ta.is_empty() {
                continue;
            }
            let k = group.compose_rank(group.inverse_rank(h), g);
            let tb = self.eb.small[k].as_deref()?;
            for &(ia, ca) in ta {
                let row = &self.index[ia as usize * nb..(ia as usize + 1) * nb];
                for &(ib, cb) in tb {
                    let slot = &mut acc[row[ib as usize] as usize];
                    *slot = slot.checked_add(ca.checked_mul(cb)?)?;
                }
            }
        }
        let terms = self
            .products
            .iter()
            .zip(acc.iter())
            .filter(|(_, c)| **c != 0)
            .map(|(m, c)| (*m, Int::from(*c)))
            .collect();
        Some(Polynomial::from_sorted_terms(terms))
    }

    fn slot_slow(&self, g: usize) -> Polynomial {
        let group = &self.a.group;
        let mut acc = Accumulator::new();
        for h in 0..group.order() {
            let k = group.compose_rank(group.inverse_rank(h), g);
            acc.add_product(&self.a.coeffs[h], &self.b.coeffs[k], &Int::from(1)).expect("families checked");
        }
        acc.finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{d_n, VariableId};

    #[test]
    fn identity_is_neutral() {
        let s = GroupAlgebraElement::from_statistic(StatisticKind::InvX, 4).unwrap();
        let id = GroupAlgebraElement::delta_identity(4).unwrap();
        assert_eq!(id.convolve(&s).unwrap(), s);
        assert_eq!(s.convolve(&id).unwrap(), s);
    }

    #[test]
    fn coefficient_sums() {
        let s = GroupAlgebraElement::from_statistic(StatisticKind::DesX, 3).unwrap();
        assert_eq!(s.coefficient_sum().unwrap(), d_n(3).unwrap().scale(&Int::from(3)));
        assert!(s.identity_coefficient().is_zero());
        assert!(s.trace_of_left_multiplication().is_zero());
        let id = GroupAlgebraElement::delta_identity(4).unwrap();
        assert_eq!(id.trace_of_left_multiplication(), Polynomial::constant(24));
    }

    #[test]
    fn scalar_identity_round_trip() {
        let s = GroupAlgebraElement::from_statistic(StatisticKind::InvX, 4).unwrap();
        let l = crate::poly::lambda(4).unwrap();
        let shifted = s.add_scalar_identity(&l).unwrap();
        assert_eq!(shifted.identity_coefficient(), &l);
        assert_eq!(shifted.add_scalar_identity(&l.neg()).unwrap(), s);
    }

    #[test]
    fn matrix_n2() {
        let m = build_matrix(StatisticKind::DesX, 2).unwrap();
        let x1 = Polynomial::var(VariableId::Single(1));
        assert_eq!(m, vec![vec![Polynomial::zero(), x1.clone()], vec![x1, Polynomial::zero()]]);
        assert!(matches!(build_matrix(StatisticKind::Des, 7), Err(Error::Resource(_))));
    }

    #[test]
    fn matrix_square_matches_convolution() {
        for kind in [StatisticKind::DesX, StatisticKind::Inv] {
            let s = GroupAlgebraElement::from_statistic(kind, 3).unwrap();
            let m = s.matrix().unwrap();
            let m2 = s.convolve(&s).unwrap().matrix().unwrap();
            for i in 0..6 {
                for j in 0..6 {
                    let mut acc = Accumulator::new();
                    for k in 0..6 {
                        acc.add_product(&m[i][k], &m[k][j], &Int::from(1)).unwrap();
                    }
                    assert_eq!(acc.finish(), m2[i][j]);
                }
            }
        }
    }

    #[test]
    fn overflowing_slots_fall_back_to_big_integers() {
        let group = SymmetricGroup::get(3).unwrap();
        let big = Polynomial::constant(i64::MAX / 2);
        let a = GroupAlgebraElement::new(group, vec![big.clone(); 6]).unwrap();
        let sq = a.convolve(&a).unwrap();
        let want = Int::from(num_bigint::BigInt::from(i64::MAX / 2).pow(2) * 6);
        assert_eq!(sq.coefficient(0).constant_value(), Some(want));
    }

    #[test]
    fn degree_cap_is_enforced() {
        let s = GroupAlgebraElement::from_statistic(StatisticKind::DesX, 3).unwrap();
        let s4 = s.power(4).unwrap();
        assert!(matches!(s4.convolve(&s), Err(Error::DegreeCap { found: 5, cap: 4 })));
    }

    #[test]
    fn mixed_families_rejected() {
        let a = GroupAlgebraElement::from_statistic(StatisticKind::DesX, 3).unwrap();
        let b = GroupAlgebraElement::from_statistic(StatisticKind::InvX, 3).unwrap();
        assert_eq!(a.convolve(&b), Err(Error::MixedFamilies));
        let c = GroupAlgebraElement::from_statistic(StatisticKind::DesX, 4).unwrap();
        assert!(matches!(a.convolve(&c), Err(Error::DegreeMismatch { .. })));
    }
}
