//! Spectra as written down for each statistic and degree, and the candidate
//! minimal-polynomial roots they imply.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{domain, Result};
use crate::perm::{factorial, StatisticKind, MAX_N};
use crate::poly::{d_n, delta, lambda, omega, Assignment, Family, Int, Polynomial, VariableId};

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

fn fact(n: usize) -> i64 {
    factorial(n) as i64
}

fn c(v: i64) -> Polynomial {
    Polynomial::constant(v)
}

fn pair_combination(coeffs: &[((u8, u8), i64)]) -> Polynomial {
    let mut p = Polynomial::zero();
    for &((i, j), k) in coeffs {
        p = p.add(&Polynomial::var(VariableId::Pair(i, j)).scale(&Int::from(k))).expect("one family");
    }
    p
}

/// The multinomial kind and the point at which a scalar kind is its
/// specialization: `des` at `X_k = 1`, `maj` at `X_k = k`, `inv` at `X_{i,j} = 1`.
pub fn scalar_point(kind: StatisticKind, n: usize) -> Option<(StatisticKind, Assignment)> {
    match kind {
        StatisticKind::Des => Some((StatisticKind::DesX, Assignment::all_ones(Family::Single, n))),
        StatisticKind::Maj => Some((StatisticKind::DesX, Assignment::descent_positions(n))),
        StatisticKind::Inv => Some((StatisticKind::InvX, Assignment::all_ones(Family::Pair, n))),
        _ => None,
    }
}

/// Specializes a polynomial at an integer point, keeping it as a constant
/// polynomial.
pub fn specialize_integral(p: &Polynomial, point: &Assignment) -> Result<Polynomial> {
    let q = p.specialize(point)?;
    if !q.is_integer() {
        return domain(format!("{p} is not integral at the given point"));
    }
    Ok(Polynomial::from_int(Int::from(q.to_integer())))
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        return domain(format!("n = {n} outside 1..={MAX_N}"));
    }
    Ok(())
}

/// Distinct roots `c_i` of the candidate minimal polynomial `Π (X − c_i)`.
///
/// Order: for `des_X` with `n ≥ 3` it is `0, (n!/2)d_n, −(n−2)! d_n`; for
/// `inv_X` with `n ≥ 4` it is `0, Ω, −Λ, −Δ`. Scalar kinds use the images of
/// these under their specialization, with duplicates removed.
pub fn minimal_polynomial_roots(kind: StatisticKind, n: usize) -> Result<Vec<Polynomial>> {
    check_n(n)?;
    if let Some((multi, point)) = scalar_point(kind, n) {
        let mut out: Vec<Polynomial> = Vec::new();
        for r in minimal_polynomial_roots(multi, n)? {
            let v = specialize_integral(&r, &point)?;
            if !out.contains(&v) {
                out.push(v);
            }
        }
        return Ok(out);
    }
    Ok(match (kind, n) {
        (_, 1) => vec![Polynomial::zero()],
        (StatisticKind::DesX, 2) => {
            let x = Polynomial::var(VariableId::Single(1));
            vec![x.clone(), x.neg()]
        }
        (StatisticKind::DesX, _) => {
            let d = d_n(n)?;
            vec![Polynomial::zero(), d.scale(&Int::from(fact(n) / 2)), d.scale(&Int::from(-fact(n - 2)))]
        }
        (StatisticKind::InvX, 2) => {
            let x = Polynomial::var(VariableId::Pair(1, 2));
            vec![x.clone(), x.neg()]
        }
        (StatisticKind::InvX, 3) => vec![
            Polynomial::zero(),
            pair_combination(&[((1, 2), 3), ((1, 3), 3), ((2, 3), 3)]),
            pair_combination(&[((1, 2), -1), ((1, 3), -2), ((2, 3), -1)]),
            pair_combination(&[((1, 2), -1), ((1, 3), 1), ((2, 3), -1)]),
        ],
        (StatisticKind::InvX, _) => vec![Polynomial::zero(), omega(n)?, lambda(n)?.neg(), delta(n)?.neg()],
        _ => unreachable!("scalar kinds handled above"),
    })
}

/// A spectrum exactly as written, aligned with [`minimal_polynomial_roots`].
///
/// Multiplicities are taken verbatim and need not sum to `n!`.
#[derive(Clone, Debug, PartialEq)]
pub struct StatedSpectrum {
    pub kind: StatisticKind,
    pub n: usize,
    /// Name of the statement the values come from.
    pub source: &'static str,
    pub eigenvalues: Vec<Polynomial>,
    pub multiplicities: Vec<u64>,
    /// How the statement labels each multiplicity.
    pub labels: Vec<String>,
}

pub fn stated_spectrum(kind: StatisticKind, n: usize) -> Result<StatedSpectrum> {
    check_n(n)?;
    let nf = fact(n) as u64;
    let c2 = binomial(n, 2);
    let roots = minimal_polynomial_roots(kind, n)?;
    let labels = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let (source, eigenvalues, multiplicities, labels) = match (kind, n) {
        (_, 1) => ("small-case list", vec![c(0)], vec![1], labels(&["V(0)"])),
        (StatisticKind::DesX | StatisticKind::InvX, 2) => {
            ("small-case list", roots.clone(), vec![1, 1], labels(&["V(X)", "V(-X)"]))
        }
        (StatisticKind::Des | StatisticKind::Maj | StatisticKind::Inv, 2) => {
            let src = match kind {
                StatisticKind::Des => "corollary1",
                StatisticKind::Maj => "corollary2",
                _ => "corollary3",
            };
            (src, vec![c(1), c(-1)], vec![1, 1], labels(&["V(1)", "V(-1)"]))
        }
        (StatisticKind::DesX, _) => (
            "theorem1",
            roots.clone(),
            vec![nf - c2 - 1, 1, c2],
            labels(&["V(0)", "V((n!/2) d_n)", "V(-(n-2)! d_n)"]),
        ),
        (StatisticKind::Des, _) => (
            "corollary1",
            vec![c(0), c(c2 as i64 * fact(n - 1)), c(-fact(n - 1))],
            vec![nf - c2 - 1, 1, c2],
            labels(&["V(0)", "V(C(n,2)(n-1)!)", "V(-(n-1)!)"]),
        ),
        (StatisticKind::Maj, _) => (
            "corollary2",
            vec![c(0), c(c2 as i64 * fact(n) / 2), c(-fact(n) / 2)],
            vec![nf - c2 - 1, 1, c2],
            labels(&["V(0)", "V(C(n,2) n!/2)", "V(-n!/2)"]),
        ),
        (StatisticKind::InvX, 3) => (
            "small-case list",
            roots.clone(),
            vec![2, 1, 2, 1],
            labels(&["V(0)", "V(3X[1,2]+3X[1,3]+3X[2,3])", "V(-X[1,2]-2X[1,3]-X[2,3])", "V(-X[1,2]+X[1,3]-X[2,3])"]),
        ),
        (StatisticKind::Inv, 3) => (
            "corollary3",
            vec![c(0), c(9), c(-4), c(-1)],
            vec![2, 1, 2, 1],
            labels(&["V(0)", "V(9)", "V(-4)", "V(-1)"]),
        ),
        (StatisticKind::InvX, _) => (
            "theorem2",
            roots.clone(),
            vec![nf - c2 - n as u64, 1, n as u64 - 1, binomial(n - 1, 2)],
            labels(&["V(0)", "V(Omega)", "V(-Lambda)", "V(-Delta)"]),
        ),
        (StatisticKind::Inv, _) => (
            "corollary3",
            vec![c(0), c(fact(n) / 2 * c2 as i64), c(-fact(n + 1) / 6), c(-fact(n) / 6)],
            vec![nf - c2 - n as u64, 1, n as u64 - 1, c2],
            labels(&["V(0)", "V((n!/2)C(n,2))", "V((n+1)!/6)", "V(n!/6)"]),
        ),
    };
    Ok(StatedSpectrum { kind, n, source, eigenvalues, multiplicities, labels })
}

/// `n!/2 · C(n,2)`, `(n+1)!/6` and `n!/6`: the values of `Ω`, `Λ` and `Δ`
/// at `X_{i,j} = 1`.
pub fn inversion_values_at_one(n: usize) -> [BigRational; 3] {
    let q = |v: i64| BigRational::from_integer(BigInt::from(v));
    [q(fact(n) / 2 * binomial(n, 2) as i64), q(fact(n + 1) / 6), q(fact(n) / 6)]
}
