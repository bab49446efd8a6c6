//! Exact verification of minimal polynomials, spectra and multiplicities of
//! the left-multiplication operators.
//!
//! Everything is checked on the group algebra: a candidate minimal
//! polynomial `Π (X − c_i)` annihilates `S` iff the convolution product
//! `Π (S − c_i ι)` is the zero element. Multiplicities then follow from the
//! trace moments `Σ m_i λ_i^k = n!·(S^k)(ι)`, and integer matrices obtained by
//! specialization are cross-checked with ranks modulo random primes.

mod claims;
pub mod modular;
pub mod rational;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{GroupAlgebraElement, MATRIX_MAX_N};
use crate::error::{domain, Error, Result};
use crate::perm::{factorial, Permutation, StatisticKind};
use crate::poly::{Accumulator, Assignment, Int, Monomial, Polynomial, VariableId};

pub use claims::{
    binomial, inversion_values_at_one, minimal_polynomial_roots, scalar_point, specialize_integral, stated_spectrum,
    StatedSpectrum,
};
pub use modular::ModularRank;

/// Seed used when the caller does not supply one.
pub const DEFAULT_SEED: u64 = 20_110_923;

/// Number of independent primes per rank computation.
pub const RANK_PRIMES: usize = 3;

/// Largest `n` for which eigenspace dimensions are computed by modular rank.
pub const KERNEL_MAX_N: usize = 5;

const SPECIALIZATION_RETRIES: usize = 8;

/// A nonzero coefficient of a group-algebra element.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub rank: usize,
    pub permutation: Permutation,
    pub coefficient: Polynomial,
}

impl Witness {
    pub fn first_nonzero(e: &GroupAlgebraElement) -> Option<Witness> {
        e.first_nonzero().map(|rank| Witness {
            rank,
            permutation: e.group().element(rank).clone(),
            coefficient: e.coefficient(rank).clone(),
        })
    }

    /// `coefficient at (1,3,2): 4*X[1]^2 + … (12 terms)`
    pub fn summary(&self) -> String {
        let terms = self.coefficient.terms();
        let shown = match terms {
            [] => "0".to_string(),
            [_] => self.coefficient.to_string(),
            [(m, c), ..] => {
                let lead = Polynomial::from_terms([(*m, c.clone())]).expect("single term");
                format!("{lead} + … ({} terms)", terms.len())
            }
        };
        format!("coefficient at {}: {shown}", self.permutation)
    }
}

/// Product `Π_i (S − c_i ι)`, evaluated left to right.
pub fn factor_product(s: &GroupAlgebraElement, roots: &[Polynomial]) -> Result<GroupAlgebraElement> {
    let Some((first, rest)) = roots.split_first() else {
        return GroupAlgebraElement::delta_identity(s.n());
    };
    let mut acc = s.add_scalar_identity(&first.neg())?;
    for c in rest {
        acc = s.add_scalar_identity(&c.neg())?.convolve(&acc)?;
    }
    Ok(acc)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Annihilation {
    pub annihilates: bool,
    pub witness: Option<Witness>,
}

pub fn check_annihilation(s: &GroupAlgebraElement, roots: &[Polynomial]) -> Result<Annihilation> {
    let product = factor_product(s, roots)?;
    let witness = Witness::first_nonzero(&product);
    Ok(Annihilation { annihilates: witness.is_none(), witness })
}

/// Outcome for one maximal proper sub-product.
#[derive(Clone, Debug, PartialEq)]
pub struct DivisorCheck {
    /// The root whose factor was left out.
    pub omitted: Polynomial,
    pub nonzero: bool,
    pub witness: Option<Witness>,
    /// Coefficient of the sub-product at `ι`.
    pub identity_coefficient: Polynomial,
}

/// Drops each factor in turn and checks the remaining product is nonzero,
/// so that no proper divisor of the candidate annihilates `S`.
pub fn check_proper_divisors_fail(s: &GroupAlgebraElement, roots: &[Polynomial]) -> Result<Vec<DivisorCheck>> {
    let mut out = Vec::with_capacity(roots.len());
    for (k, omitted) in roots.iter().enumerate() {
        let rest: Vec<Polynomial> =
            roots.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, r)| r.clone()).collect();
        let product = factor_product(s, &rest)?;
        let witness = Witness::first_nonzero(&product);
        out.push(DivisorCheck {
            omitted: omitted.clone(),
            nonzero: witness.is_some(),
            witness,
            identity_coefficient: product.identity_coefficient().clone(),
        })
    }
    Ok(out)
}

/// A single coefficient of a sub-product at `ι`, compared with a closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessCoefficient {
    pub id: &'static str,
    /// The sub-product, e.g. `(S+Lambda)(S-Omega)S`.
    pub product: &'static str,
    pub monomial: Monomial,
    pub computed: Int,
    pub stated: BigRational,
    /// The closed form as written, in `n`.
    pub formula: &'static str,
}

impl WitnessCoefficient {
    pub fn matches(&self) -> bool {
        BigRational::from_integer(self.computed.to_bigint()) == self.stated
    }
}

fn q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// The three coefficients used to show that no proper divisor of
/// `X(X+Λ)(X+Δ)(X−Ω)` annihilates `S_invX`, read off the sub-products in
/// `divisors` (as returned for roots `0, Ω, −Λ, −Δ`).
pub fn inversion_witnesses(n: usize, divisors: &[DivisorCheck]) -> Result<Vec<WitnessCoefficient>> {
    if n < 4 {
        return domain(format!("inversion witnesses need n >= 4, got {n}"));
    }
    let roots = minimal_polynomial_roots(StatisticKind::InvX, n)?;
    let find = |root: &Polynomial| {
        divisors
            .iter()
            .find(|d| &d.omitted == root)
            .map(|d| &d.identity_coefficient)
            .ok_or_else(|| Error::Domain(format!("no sub-product omitting {root}")))
    };
    let cube = |i: u8, j: u8| Monomial::from_powers(&[(VariableId::Pair(i, j), 3)]).expect("degree 3");
    let f = |k: usize| q(factorial(k) as i64);
    let nn = q(n as i64);
    let two = q(2);

    let w1 = &f(n - 3) * &f(n - 3)
        * (&nn * &nn * &nn * &nn - q(8) * &nn * &nn * &nn + q(22) * &nn * &nn - q(36) * &nn + q(44))
        / &two;
    let w2 = -(q(4) * f(n - 3) * f(n - 2)) - f(n - 3) * f(n);
    let w3 = &f(n - 2) * &f(n - 2) / &two + &f(n - 2) * &f(n) / &two - &f(n - 2) * &f(n - 2) * &f(n) / &two;

    let m14 = cube(1, 4);
    let m13 = cube(1, 3);
    Ok(vec![
        WitnessCoefficient {
            id: "witness1",
            product: "(S+Lambda)(S-Omega)S",
            monomial: m14,
            computed: find(&roots[3])?.coefficient_of(&m14),
            stated: w1,
            formula: "(n-3)!^2 (n^4 - 8n^3 + 22n^2 - 36n + 44)/2",
        },
        WitnessCoefficient {
            id: "witness2",
            product: "(S+Delta)(S-Omega)S",
            monomial: m13,
            computed: find(&roots[2])?.coefficient_of(&m13),
            stated: w2,
            formula: "-4(n-3)!(n-2)! - (n-3)! n!",
        },
        WitnessCoefficient {
            id: "witness3",
            product: "(S+Lambda)(S+Delta)(S-Omega)",
            monomial: m13,
            computed: find(&roots[0])?.coefficient_of(&m13),
            stated: w3,
            formula: "(n-2)!^2/2 + (n-2)! n!/2 - (n-2)!^2 n!/2",
        },
    ])
}

/// `trace(S^k) = n!·(S^k)(ι)` for `k = 0, …, count−1`.
pub fn trace_moments(s: &GroupAlgebraElement, count: usize) -> Result<Vec<Polynomial>> {
    let order = Int::from(s.group().order() as i64);
    let id = s.group().identity_rank();
    let mut out = Vec::with_capacity(count);
    let mut power: Option<GroupAlgebraElement> = None; // S^(k-1)
    for k in 0..count {
        let at_identity = match k {
            0 => Polynomial::constant(1),
            1 => s.identity_coefficient().clone(),
            _ => {
                let prev = match power.take() {
                    None => s.clone(),
                    Some(p) => p.convolve(s)?,
                };
                let v = prev.convolve_at(s, id)?;
                power = Some(prev);
                v
            }
        };
        out.push(at_identity.scale(&order));
    }
    Ok(out)
}

/// A point where the given polynomials take pairwise distinct values.
pub fn separating_point(
    values: &[Polynomial],
    family: Option<crate::poly::Family>,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<(Assignment, Vec<BigRational>)> {
    for _ in 0..SPECIALIZATION_RETRIES {
        let point = match family {
            Some(f) => Assignment::random_positive(f, n, rng),
            None => Assignment::new(),
        };
        let vals = values.iter().map(|v| v.specialize(&point)).collect::<Result<Vec<_>>>()?;
        let distinct = (0..vals.len()).all(|i| (i + 1..vals.len()).all(|j| vals[i] != vals[j]));
        if distinct {
            return Ok((point, vals));
        }
        if family.is_none() {
            break;
        }
    }
    domain("eigenvalues coincide at every sampled specialization")
}

/// Multiplicities recovered from trace moments.
#[derive(Clone, Debug, PartialEq)]
pub struct Multiplicities {
    pub eigenvalues: Vec<Polynomial>,
    /// Solution of the Vandermonde system at `point`.
    pub solved: Vec<BigRational>,
    /// The solution, if it consists of nonnegative integers.
    pub multiplicities: Option<Vec<u64>>,
    /// `trace(S^k)` for `k < r`.
    pub traces: Vec<Polynomial>,
    pub point: Assignment,
    /// `Σ m_i λ_i^k = trace(S^k)` holds as a polynomial identity for all `k < r`.
    pub moments_verified: bool,
}

impl Multiplicities {
    pub fn verified(&self) -> Option<&[u64]> {
        if self.moments_verified {
            self.multiplicities.as_deref()
        } else {
            None
        }
    }
}

/// Solves for the multiplicities of `eigenvalues` (assumed to be the full,
/// pairwise distinct spectrum) and confirms them symbolically.
pub fn verify_multiplicities(s: &GroupAlgebraElement, eigenvalues: &[Polynomial], seed: u64) -> Result<Multiplicities> {
    let r = eigenvalues.len();
    let traces = trace_moments(s, r)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let family = eigenvalues.iter().find_map(Polynomial::family).or(s.family());
    let (point, lambdas) = separating_point(eigenvalues, family, s.n(), &mut rng)?;

    let mut a = vec![vec![BigRational::zero(); r]; r];
    for (i, l) in lambdas.iter().enumerate() {
        let mut p = BigRational::one();
        for row in a.iter_mut() {
            row[i] = p.clone();
            p *= l;
        }
    }
    let b = traces.iter().map(|t| t.specialize(&point)).collect::<Result<Vec<_>>>()?;
    let solved = rational::solve(a, b).ok_or_else(|| Error::Domain("singular Vandermonde system".into()))?;

    let multiplicities = solved
        .iter()
        .map(|m| {
            use num_traits::ToPrimitive;
            if m.is_integer() && *m >= BigRational::zero() {
                m.to_integer().to_u64()
            } else {
                None
            }
        })
        .collect::<Option<Vec<u64>>>();

    let moments_verified = match &multiplicities {
        None => false,
        Some(ms) => {
            let mut ok = true;
            for (k, trace) in traces.iter().enumerate() {
                let mut acc = Accumulator::new();
                for (lam, &m) in eigenvalues.iter().zip(ms) {
                    acc.add_scaled(&lam.pow(k as u32)?, &Int::from(m as i64))?;
                }
                if &acc.finish() != trace {
                    ok = false;
                    break;
                }
            }
            ok
        }
    };
    Ok(Multiplicities { eigenvalues: eigenvalues.to_vec(), solved, multiplicities, traces, point, moments_verified })
}

/// Reduction mod `p` of `M(point) − λ I`, where `M` is the matrix of `s`.
fn shifted_matrix_mod(
    s: &GroupAlgebraElement,
    values: &[BigRational],
    lambda: &BigRational,
    p: u64,
) -> Option<Vec<u64>> {
    let g = s.group();
    let order = g.order();
    let residues = values.iter().map(|v| modular::rational_mod(v, p)).collect::<Option<Vec<u64>>>()?;
    let lam = modular::rational_mod(lambda, p)?;
    let mut m = vec![0u64; order * order];
    for pi in 0..order {
        for tau in 0..order {
            let mut v = residues[g.compose_rank(pi, g.inverse_rank(tau))];
            if pi == tau {
                v = (v + p - lam) % p;
            }
            m[pi * order + tau] = v;
        }
    }
    Some(m)
}

/// Rank of `M(point) − λ I` over `Q`, by modular rank.
pub fn shifted_rank(
    s: &GroupAlgebraElement,
    point: &Assignment,
    lambda: &BigRational,
    rng: &mut ChaCha8Rng,
) -> Result<ModularRank> {
    let order = s.group().order();
    let values = s.specialize(point)?;
    modular::modular_rank(rng, RANK_PRIMES, order, order, |p| shifted_matrix_mod(s, &values, lambda, p))
}

/// `dim ker (M(point) − λ_i I)` for each eigenvalue.
pub fn kernel_dimensions(
    s: &GroupAlgebraElement,
    eigenvalues: &[Polynomial],
    point: &Assignment,
    seed: u64,
) -> Result<Vec<usize>> {
    if s.n() > KERNEL_MAX_N {
        return Err(Error::Resource(format!("kernel dimensions limited to n <= {KERNEL_MAX_N}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let order = s.group().order();
    eigenvalues
        .iter()
        .map(|e| {
            let lam = e.specialize(point)?;
            Ok(order - shifted_rank(s, point, &lam, &mut rng)?.rank)
        })
        .collect()
}

/// Row sums, the all-ones eigenvector and the dimension of its eigenspace.
#[derive(Clone, Debug, PartialEq)]
pub struct RowSumCheck {
    pub kind: StatisticKind,
    pub n: usize,
    /// `P_n = Σ_σ s(σ)`
    pub row_sum: Polynomial,
    pub equal_row_sums: bool,
    /// `M·(1,…,1) = P_n·(1,…,1)`
    pub all_ones_eigenvector: bool,
    pub point: Assignment,
    /// Rank of `M − P_n I` at `point`.
    pub rank: ModularRank,
    pub order: usize,
}

impl RowSumCheck {
    pub fn eigenspace_dimension(&self) -> usize {
        self.order - self.rank.rank
    }

    pub fn passed(&self) -> bool {
        self.equal_row_sums && self.all_ones_eigenvector && self.rank.unanimous() && self.eigenspace_dimension() == 1
    }
}

pub fn row_sum_eigen_check(kind: StatisticKind, n: usize, seed: u64) -> Result<RowSumCheck> {
    if n > MATRIX_MAX_N {
        return Err(Error::Resource(format!("row-sum check limited to n <= {MATRIX_MAX_N}")));
    }
    let s = GroupAlgebraElement::from_statistic(kind, n)?;
    let matrix = s.matrix()?;
    let row_sum = s.coefficient_sum()?;
    let mut sums = Vec::with_capacity(matrix.len());
    for row in &matrix {
        let mut acc = Accumulator::new();
        for entry in row {
            acc.add_scaled(entry, &Int::from(1))?;
        }
        sums.push(acc.finish());
    }
    let equal_row_sums = sums.windows(2).all(|w| w[0] == w[1]);
    let all_ones_eigenvector = sums.iter().all(|r| r == &row_sum);

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let point = match s.family() {
        Some(f) => Assignment::random_positive(f, n, &mut rng),
        None => Assignment::new(),
    };
    let lam = row_sum.specialize(&point)?;
    let rank = shifted_rank(&s, &point, &lam, &mut rng)?;
    Ok(RowSumCheck { kind, n, row_sum, equal_row_sums, all_ones_eigenvector, point, rank, order: s.group().order() })
}

/// A statement that exact computation contradicts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub location: String,
    pub paper_says: String,
    pub oracle_says: String,
}

/// Everything known about one operator's spectrum.
#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport {
    pub kind: StatisticKind,
    pub n: usize,
    pub eigenvalues: Vec<Polynomial>,
    pub stated: StatedSpectrum,
    pub annihilation: Annihilation,
    pub divisors: Vec<DivisorCheck>,
    pub multiplicities: Multiplicities,
    /// Eigenspace dimensions at a specialization, for `n ≤ KERNEL_MAX_N`.
    pub kernel_dimensions: Option<Vec<usize>>,
    pub kernel_point: Option<Assignment>,
    /// The eigenvalues at the caller's specialization, if one was given.
    pub specialized: Option<Vec<BigRational>>,
    pub discrepancies: Vec<Discrepancy>,
}

impl SpectrumReport {
    pub fn verified_multiplicities(&self) -> Option<&[u64]> {
        self.multiplicities.verified()
    }

    pub fn minimal_polynomial_verified(&self) -> bool {
        self.annihilation.annihilates && self.divisors.iter().all(|d| d.nonzero)
    }

    /// Kernel dimensions, when computed, agree with the multiplicities.
    pub fn kernels_agree(&self) -> bool {
        match (&self.kernel_dimensions, self.verified_multiplicities()) {
            (Some(k), Some(m)) => k.iter().zip(m).all(|(&a, &b)| a as u64 == b),
            (None, _) => true,
            _ => false,
        }
    }

    /// All exact checks succeeded (stated values may still disagree; see
    /// `discrepancies`).
    pub fn passed(&self) -> bool {
        self.minimal_polynomial_verified() && self.verified_multiplicities().is_some() && self.kernels_agree()
    }
}

/// Runs every spectral check for `kind` at degree `n`.
pub fn spectrum_report(
    kind: StatisticKind,
    n: usize,
    specialization: Option<&Assignment>,
    seed: u64,
) -> Result<SpectrumReport> {
    let s = GroupAlgebraElement::from_statistic(kind, n)?;
    let eigenvalues = minimal_polynomial_roots(kind, n)?;
    let stated = stated_spectrum(kind, n)?;
    let annihilation = check_annihilation(&s, &eigenvalues)?;
    let divisors = if eigenvalues.len() > 1 { check_proper_divisors_fail(&s, &eigenvalues)? } else { Vec::new() };
    let multiplicities = verify_multiplicities(&s, &eigenvalues, seed)?;

    let (kernel_dimensions, kernel_point) = if n <= KERNEL_MAX_N {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6b65_726e);
        let (point, _) = separating_point(&eigenvalues, s.family(), n, &mut rng)?;
        (Some(kernel_dimensions(&s, &eigenvalues, &point, seed)?), Some(point))
    } else {
        (None, None)
    };

    let specialized = specialization
        .map(|a| eigenvalues.iter().map(|e| e.specialize(a)).collect::<Result<Vec<_>>>())
        .transpose()?;

    let mut discrepancies = Vec::new();
    if stated.eigenvalues != eigenvalues {
        let show = |v: &[Polynomial]| v.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", ");
        discrepancies.push(Discrepancy {
            location: format!("{} Sp", stated.source),
            paper_says: show(&stated.eigenvalues),
            oracle_says: show(&eigenvalues),
        });
    }
    if let Some(ms) = multiplicities.verified() {
        for ((label, &said), &got) in stated.labels.iter().zip(&stated.multiplicities).zip(ms) {
            if said != got {
                discrepancies.push(Discrepancy {
                    location: format!("{} {label}", stated.source),
                    paper_says: said.to_string(),
                    oracle_says: got.to_string(),
                });
            }
        }
    }
    Ok(SpectrumReport {
        kind,
        n,
        eigenvalues,
        stated,
        annihilation,
        divisors,
        multiplicities,
        kernel_dimensions,
        kernel_point,
        specialized,
        discrepancies,
    })
}
