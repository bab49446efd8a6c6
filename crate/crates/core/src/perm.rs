//! Permutations of `[n]` in one-line notation, lexicographic ranking, and the
//! descent/inversion statistics.
//!
//! All external indices are 1-based: `images()[k - 1] == σ(k)`. Composition
//! follows `(s ∘ t)(k) = s(t(k))`, and every matrix entry `s(π τ⁻¹)` in the
//! crate is built with that convention.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::error::{domain, Error, Result};
use crate::poly::{Polynomial, VariableId};

/// Largest degree accepted by [`permutations`] and [`SymmetricGroup`].
pub const MAX_N: usize = 8;

/// Largest degree for which a full composition table is materialized.
pub const TABLE_MAX_N: usize = 7;

/// A bijection of `[n]`, stored by its images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u8]>,
}

impl Permutation {
    /// Builds a permutation from 1-based images, rejecting anything that is
    /// not a rearrangement of `1..=n`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n == 0 || n > MAX_N {
            return domain(format!("degree {n} outside 1..={MAX_N}"));
        }
        let mut seen = [false; MAX_N + 1];
        for &v in images {
            if v == 0 || v > n || seen[v] {
                return domain(format!("{images:?} is not a permutation of 1..={n}"));
            }
            seen[v] = true;
        }
        Ok(Self { images: images.iter().map(|&v| v as u8).collect() })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n as u8).collect() }
    }

    fn from_raw(images: Vec<u8>) -> Self {
        Self { images: images.into_boxed_slice() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// One-line form, `images()[k - 1] = σ(k)`.
    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `σ(k)` for 1-based `k`.
    #[inline]
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize
    }

    /// `σ⁻¹(v)`, the position holding value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.images.iter().position(|&x| x as usize == v).expect("value in range") + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut out = vec![0u8; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            out[v as usize - 1] = k as u8 + 1;
        }
        Self::from_raw(out)
    }

    /// `self ∘ t`, i.e. `k ↦ self(t(k))`.
    pub fn compose(&self, t: &Permutation) -> Result<Self> {
        if self.degree() != t.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: t.degree() });
        }
        Ok(self.compose_unchecked(t))
    }

    pub(crate) fn compose_unchecked(&self, t: &Permutation) -> Self {
        Self::from_raw(t.images.iter().map(|&k| self.images[k as usize - 1]).collect())
    }

    /// `DES(σ) = {k ∈ [n-1] : σ(k) > σ(k+1)}`.
    pub fn descent_set(&self) -> DescentSet {
        let positions = self
            .images
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(k, _)| k + 1)
            .collect();
        DescentSet { positions }
    }

    /// `INV(σ) = {(i, j) : i < j, σ(i) > σ(j)}`, listed lexicographically.
    pub fn inversion_set(&self) -> InversionSet {
        let n = self.degree();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    pairs.push((i + 1, j + 1));
                }
            }
        }
        InversionSet { pairs }
    }

    /// Lehmer code: entry `k` counts later positions holding smaller values.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let n = self.degree();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.images[j] < self.images[i]).count())
            .collect()
    }

    /// Position of `self` in the lexicographic enumeration of `S_n`.
    pub fn rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        for (i, c) in self.lehmer_code().into_iter().enumerate() {
            rank += c * factorial(n - 1 - i);
        }
        rank
    }

    /// Inverse of [`Permutation::rank`].
    pub fn unrank(n: usize, rank: usize) -> Result<Self> {
        if n == 0 || n > MAX_N {
            return domain(format!("degree {n} outside 1..={MAX_N}"));
        }
        if rank >= factorial(n) {
            return domain(format!("rank {rank} out of range for S_{n}"));
        }
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        let mut rest = rank;
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let f = factorial(n - 1 - i);
            out.push(pool.remove(rest / f));
            rest %= f;
        }
        Ok(Self::from_raw(out))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentSet {
    positions: Vec<usize>,
}

impl DescentSet {
    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn contains(&self, k: usize) -> bool {
        self.positions.contains(&k)
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InversionSet {
    pairs: Vec<(usize, usize)>,
}

impl InversionSet {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.pairs.contains(&(i, j))
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// All of `S_n` in lexicographic one-line order; index equals rank.
pub fn permutations(n: usize) -> Result<Vec<Permutation>> {
    if n == 0 || n > MAX_N {
        return domain(format!("degree {n} outside 1..={MAX_N}"));
    }
    let mut out = Vec::with_capacity(factorial(n));
    let mut cur: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Permutation::from_raw(cur.clone()));
        if !next_lexicographic(&mut cur) {
            break;
        }
    }
    Ok(out)
}

fn next_lexicographic(v: &mut [u8]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("successor exists");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Which weight a permutation contributes to the group-algebra element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StatisticKind {
    /// `Σ_{k ∈ DES} X_k`
    DesX,
    /// `Σ_{(i,j) ∈ INV} X_{i,j}`
    InvX,
    Des,
    Maj,
    Inv,
}

impl StatisticKind {
    pub const ALL: [StatisticKind; 5] =
        [StatisticKind::DesX, StatisticKind::InvX, StatisticKind::Des, StatisticKind::Maj, StatisticKind::Inv];

    pub fn name(self) -> &'static str {
        match self {
            StatisticKind::DesX => "desx",
            StatisticKind::InvX => "invx",
            StatisticKind::Des => "des",
            StatisticKind::Maj => "maj",
            StatisticKind::Inv => "inv",
        }
    }

    /// True for the polynomial-valued kinds.
    pub fn is_multinomial(self) -> bool {
        matches!(self, StatisticKind::DesX | StatisticKind::InvX)
    }

    /// True for the kinds built from descent sets.
    pub fn is_descent_based(self) -> bool {
        matches!(self, StatisticKind::DesX | StatisticKind::Des | StatisticKind::Maj)
    }
}

impl fmt::Display for StatisticKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StatisticKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "desx" | "des_x" => Ok(StatisticKind::DesX),
            "invx" | "inv_x" => Ok(StatisticKind::InvX),
            "des" => Ok(StatisticKind::Des),
            "maj" => Ok(StatisticKind::Maj),
            "inv" => Ok(StatisticKind::Inv),
            other => domain(format!("unknown statistic {other:?}")),
        }
    }
}

/// Value of a statistic on `s`.
///
/// The scalar kinds are the specializations of the multinomial ones:
/// `des` at `X_k = 1`, `maj` at `X_k = k`, `inv` at `X_{i,j} = 1`.
pub fn statistic(kind: StatisticKind, s: &Permutation) -> Polynomial {
    match kind {
        StatisticKind::DesX => Polynomial::sum_of_variables(
            s.descent_set().positions().iter().map(|&k| VariableId::Single(k as u8)),
        ),
        StatisticKind::InvX => Polynomial::sum_of_variables(
            s.inversion_set().pairs().iter().map(|&(i, j)| VariableId::Pair(i as u8, j as u8)),
        ),
        StatisticKind::Des => Polynomial::constant(s.descent_set().len() as i64),
        StatisticKind::Maj => Polynomial::constant(s.descent_set().positions().iter().sum::<usize>() as i64),
        StatisticKind::Inv => Polynomial::constant(s.inversion_set().len() as i64),
    }
}

/// `S_n` with its elements in rank order plus inverse and composition lookups.
pub struct SymmetricGroup {
    n: usize,
    elements: Vec<Permutation>,
    inverse: Vec<u32>,
    table: OnceLock<Vec<u16>>,
}

impl SymmetricGroup {
    /// Shared instance for `S_n`; tables are built once per process.
    pub fn get(n: usize) -> Result<Arc<SymmetricGroup>> {
        static CACHE: [OnceLock<Arc<SymmetricGroup>>; MAX_N + 1] = [const { OnceLock::new() }; MAX_N + 1];
        if n == 0 || n > MAX_N {
            return domain(format!("degree {n} outside 1..={MAX_N}"));
        }
        Ok(CACHE[n].get_or_init(|| Arc::new(Self::build(n))).clone())
    }

    fn build(n: usize) -> Self {
        let elements = permutations(n).expect("n checked by caller");
        let inverse = elements.iter().map(|p| p.inverse().rank() as u32).collect();
        Self { n, elements, inverse, table: OnceLock::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `n!`
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, rank: usize) -> &Permutation {
        &self.elements[rank]
    }

    /// Rank of the identity (always 0 in lexicographic order).
    pub fn identity_rank(&self) -> usize {
        0
    }

    #[inline]
    pub fn inverse_rank(&self, rank: usize) -> usize {
        self.inverse[rank] as usize
    }

    /// Rank of `element(a) ∘ element(b)`.
    #[inline]
    pub fn compose_rank(&self, a: usize, b: usize) -> usize {
        match self.table() {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.elements[a].compose_unchecked(&self.elements[b]).rank(),
        }
    }

    /// Full `n! × n!` composition table, available for `n ≤ TABLE_MAX_N`.
    pub fn table(&self) -> Option<&[u16]> {
        if self.n > TABLE_MAX_N {
            return None;
        }
        Some(self.table.get_or_init(|| {
            use rayon::prelude::*;
            let order = self.order();
            let mut table = vec![0u16; order * order];
            table.par_chunks_mut(order).enumerate().for_each(|(a, row)| {
                let pa = &self.elements[a];
                for (b, slot) in row.iter_mut().enumerate() {
                    *slot = pa.compose_unchecked(&self.elements[b]).rank() as u16;
                }
            });
            table
        }))
    }
}

impl fmt::Debug for SymmetricGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymmetricGroup(n={})", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::new(v).unwrap()
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(permutations(1).unwrap(), vec![p(&[1])]);
        assert_eq!(permutations(2).unwrap(), vec![p(&[1, 2]), p(&[2, 1])]);
        let s3 = permutations(3).unwrap();
        assert_eq!(s3.len(), 6);
        assert_eq!(s3[0], p(&[1, 2, 3]));
        assert_eq!(s3[5], p(&[3, 2, 1]));
        assert!(permutations(0).is_err());
        assert!(permutations(MAX_N + 1).is_err());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(&[1, 1, 2]).is_err());
        assert!(Permutation::new(&[0, 1]).is_err());
        assert!(Permutation::new(&[1, 3]).is_err());
        assert!(Permutation::new(&[]).is_err());
    }

    #[test]
    fn rank_round_trip_up_to_seven() {
        for n in 1..=7 {
            for (r, s) in permutations(n).unwrap().iter().enumerate() {
                assert_eq!(s.rank(), r);
                assert_eq!(&Permutation::unrank(n, r).unwrap(), s);
            }
        }
        assert!(Permutation::unrank(3, 6).is_err());
    }

    #[test]
    fn composition_convention() {
        let s = p(&[2, 1, 3]);
        let t = p(&[1, 3, 2]);
        assert_eq!(s.compose(&t).unwrap(), p(&[2, 3, 1]));
        let id = Permutation::identity(3);
        assert_eq!(id.compose(&t).unwrap(), t);
        for s in permutations(4).unwrap() {
            assert!(s.compose(&s.inverse()).unwrap().is_identity());
        }
        assert!(s.compose(&Permutation::identity(2)).is_err());
    }

    #[test]
    fn descent_and_inversion_sets() {
        assert!(Permutation::identity(4).descent_set().is_empty());
        assert_eq!(p(&[2, 1]).descent_set().positions(), &[1]);
        assert_eq!(p(&[3, 1, 2]).descent_set().positions(), &[1]);
        assert!(Permutation::identity(4).inversion_set().is_empty());
        assert_eq!(p(&[3, 1, 2]).inversion_set().pairs(), &[(1, 2), (1, 3)]);
        let rev = p(&[4, 3, 2, 1]);
        assert_eq!(rev.inversion_set().len(), 6);
    }

    #[test]
    fn statistics_on_examples() {
        assert!(statistic(StatisticKind::DesX, &Permutation::identity(3)).is_zero());
        let s = p(&[2, 1, 3]);
        assert_eq!(statistic(StatisticKind::Maj, &s), Polynomial::constant(1));
        assert_eq!(statistic(StatisticKind::Des, &s), Polynomial::constant(1));
        assert_eq!(statistic(StatisticKind::Inv, &s), Polynomial::constant(1));
        assert_eq!(statistic(StatisticKind::InvX, &p(&[3, 2, 1])).to_string(), "X[1,2] + X[1,3] + X[2,3]");
    }

    #[test]
    fn group_tables_agree_with_direct_composition() {
        let g = SymmetricGroup::get(4).unwrap();
        for a in 0..g.order() {
            assert_eq!(g.element(g.inverse_rank(a)), &g.element(a).inverse());
            for b in 0..g.order() {
                let direct = g.element(a).compose(g.element(b)).unwrap().rank();
                assert_eq!(g.compose_rank(a, b), direct);
            }
        }
    }

    #[test]
    fn statistic_kind_names_round_trip() {
        for k in StatisticKind::ALL {
            assert_eq!(k.name().parse::<StatisticKind>().unwrap(), k);
        }
        assert!("foo".parse::<StatisticKind>().is_err());
    }
}
