//! Monomial coefficients of `f₂`, `f₃`, `ΛΔ`, `Λ+Δ` and `f`.

use rayon::prelude::*;

use super::{chi, check_n, fact, pairs, q, LemmaReport, Q, ENUMERATION_MAX_N};
use crate::error::{domain, Result};
use crate::perm::{permutations, statistic, Permutation, StatisticKind, MAX_N};
use crate::poly::{delta, lambda, Accumulator, Int, Monomial, Polynomial, VariableId};

type Pair = (usize, usize);

fn inv_x(s: &Permutation) -> Polynomial {
    statistic(StatisticKind::InvX, s)
}

/// `f₂(π) = Σ_σ inv_X(σ⁻¹) inv_X(σπ)`, one composition at a time.
pub fn compute_f2_brute(pi: &Permutation) -> Result<Polynomial> {
    let mut acc = Accumulator::new();
    let one = Int::from(1);
    for s in permutations(pi.degree())? {
        acc.add_product(&inv_x(&s.inverse()), &inv_x(&s.compose(pi)?), &one)?;
    }
    Ok(acc.finish())
}

/// `f₃(π) = Σ_{σ,τ} inv_X(σ⁻¹) inv_X(στ⁻¹) inv_X(τπ)`, one composition at a
/// time. Cost grows as `(n!)²` per `π`.
pub fn compute_f3_brute(pi: &Permutation) -> Result<Polynomial> {
    let perms = permutations(pi.degree())?;
    let inverses: Vec<Permutation> = perms.iter().map(Permutation::inverse).collect();
    let mut acc = Accumulator::new();
    let one = Int::from(1);
    for (s, s_inv) in perms.iter().zip(&inverses) {
        let first = inv_x(s_inv);
        if first.is_zero() {
            continue;
        }
        for (t, t_inv) in perms.iter().zip(&inverses) {
            let second = inv_x(&s.compose(t_inv)?);
            if second.is_zero() {
                continue;
            }
            acc.add_product(&first.mul(&second)?, &inv_x(&t.compose(pi)?), &one)?;
        }
    }
    Ok(acc.finish())
}

fn monomial(powers: &[(Pair, u32)]) -> Monomial {
    let powers: Vec<(VariableId, u32)> =
        powers.iter().map(|&((i, j), e)| (VariableId::Pair(i as u8, j as u8), e)).collect();
    Monomial::from_powers(&powers).expect("pair monomial of degree at most 3")
}

fn coefficient(p: &Polynomial, powers: &[(Pair, u32)]) -> Q {
    let c = p.coefficient_of(&monomial(powers));
    q(c.as_i64().expect("coefficient fits in i64") as i128)
}

/// `π(i) < π(j)`
fn ascends(pi: &Permutation, (i, j): Pair) -> bool {
    pi.apply(i) < pi.apply(j)
}

/// `χ` of the image pair, in whichever order is increasing.
fn chi_image(pi: &Permutation, (i, j): Pair) -> i128 {
    chi(pi.apply(i), pi.apply(j))
}

fn chi_pair((i, j): Pair) -> i128 {
    chi(i, j)
}

fn pair_label(ps: &[Pair]) -> String {
    ps.iter().map(|(i, j)| format!("({i},{j})")).collect::<Vec<_>>().join(" ")
}

/// Shared constants `n!`, `(n−2)!`, `(n−3)!`, `n²−n+2`, `n²−n−2`.
struct Consts {
    n: i128,
    nf: Q,
    f2: Q,
    f3: Q,
    up: Q,
    down: Q,
}

impl Consts {
    fn new(n: usize) -> Self {
        let m = n as i128;
        Consts { n: m, nf: q(fact(n)), f2: q(fact(n - 2)), f3: q(fact(n - 3)), up: q(m * m - m + 2), down: q(m * m - m - 2) }
    }
}

fn lemma_4_3_square(k: &Consts, pi: &Permutation, p: Pair) -> Q {
    let prod = q(chi_pair(p) * chi_image(pi, p));
    if ascends(pi, p) {
        k.f3 * prod + k.f2 * k.up / q(4)
    } else {
        k.f2 * k.down / q(4) - k.f3 * prod
    }
}

/// `[X_{p₁} X_{p₂}] f₂(π)` for `p₁ ≠ p₂`; a descending pair is moved second
/// when exactly one descends.
fn lemma_4_3_mixed(k: &Consts, pi: &Permutation, p1: Pair, p2: Pair) -> Q {
    let (p1, p2) = if !ascends(pi, p1) && ascends(pi, p2) { (p2, p1) } else { (p1, p2) };
    let (c1, c2, x1, x2) = (chi_pair(p1), chi_pair(p2), chi_image(pi, p1), chi_image(pi, p2));
    match (ascends(pi, p1), ascends(pi, p2)) {
        (true, true) => k.f3 * q(c1 * x2 + x1 * c2) + k.f2 * k.up / q(2),
        (true, false) => k.f3 * q(x1 * c2 - c1 * x2) + k.nf / q(2),
        _ => k.f2 * k.down / q(2) - k.f3 * q(c1 * x2 + x1 * c2),
    }
}

/// Every degree-2 coefficient of `f₂(π)` for every `π`, computed by brute
/// force.
pub fn check_lemma_4_3(n: usize) -> Result<LemmaReport> {
    check_n("lemma4.3", n, 4, 5)?;
    let k = Consts::new(n);
    let perms = permutations(n)?;
    let values: Vec<Polynomial> = perms.par_iter().map(compute_f2_brute).collect::<Result<_>>()?;
    let mut r = LemmaReport::new("lemma4.3", n);
    let ps = pairs(n);
    for (pi, f2) in perms.iter().zip(&values) {
        for (a, &p1) in ps.iter().enumerate() {
            r.check(&lemma_4_3_square(&k, pi, p1), &coefficient(f2, &[(p1, 2)]), || {
                format!("(a) pi={pi} pair {}", pair_label(&[p1]))
            });
            for &p2 in &ps[a + 1..] {
                r.check(&lemma_4_3_mixed(&k, pi, p1, p2), &coefficient(f2, &[(p1, 1), (p2, 1)]), || {
                    format!("(b) pi={pi} pairs {}", pair_label(&[p1, p2]))
                });
            }
        }
    }
    Ok(r)
}

fn lemma_4_5_cube(k: &Consts, pi: &Permutation, p: Pair) -> Q {
    let (c, x) = (q(chi_pair(p)), q(chi_image(pi, p)));
    let cubic = q(k.n - 4) * k.f3 * k.f3 * c * c * x;
    let quad = k.f3 * k.f2 * (c * c + q(2) * c * x);
    let base = k.nf * k.nf / q(8);
    let half = k.f2 * k.f2 / q(2);
    if ascends(pi, p) {
        base - half - cubic - quad
    } else {
        base + half + cubic + quad
    }
}

/// `[X_{p₁}² X_{p₃}] f₃(π)`, `p₁ ≠ p₃`.
fn lemma_4_5_square(k: &Consts, pi: &Permutation, p1: Pair, p3: Pair) -> Q {
    let (c1, c3, x1, x3) = (q(chi_pair(p1)), q(chi_pair(p3)), q(chi_image(pi, p1)), q(chi_image(pi, p3)));
    let two = q(2);
    let kk = q(k.n - 4) * k.f3 * k.f3;
    let m = k.f3 * k.f2;
    let base = q(3) * k.nf * k.nf / q(8);
    let sq = k.f2 * k.f2 / q(2);
    match (ascends(pi, p1), ascends(pi, p3)) {
        (true, true) => {
            base - q(3) * sq - kk * (c1 * c1 * x3 + two * c1 * c3 * x1)
                - m * (c1 * c1 + two * c1 * x3 + two * c1 * c3 + two * c1 * x1 + two * c3 * x1)
        }
        (true, false) => {
            base - sq + kk * (c1 * c1 * x3 - two * c1 * c3 * x1)
                + m * (c1 * c1 + two * c1 * x3 - two * c1 * c3 - two * c1 * x1 - two * c3 * x1)
        }
        (false, true) => {
            base + sq
                - kk * (c1 * c1 * x3 - two * c1 * c3 * x1)
                - m * (c1 * c1 + two * c1 * x3 - two * c1 * c3 - two * c1 * x1 - two * c3 * x1)
        }
        (false, false) => {
            base + q(3) * sq
                + kk * (c1 * c1 * x3 + two * c1 * c3 * x1)
                + m * (c1 * c1 + two * c1 * x3 + two * c1 * c3 + two * c1 * x1 + two * c3 * x1)
        }
    }
}

/// `[X_{p₁} X_{p₂} X_{p₃}] f₃(π)` for distinct pairs. The pairs are reordered
/// so that ascending pairs come first, matching the displayed sign patterns.
fn lemma_4_5_distinct(k: &Consts, pi: &Permutation, ps: [Pair; 3]) -> Q {
    let mut ps = ps;
    ps.sort_by_key(|&p| !ascends(pi, p));
    let asc = ps.iter().filter(|&&p| ascends(pi, p)).count();
    let [c1, c2, c3] = ps.map(|p| q(chi_pair(p)));
    let [x1, x2, x3] = ps.map(|p| q(chi_image(pi, p)));
    let two = q(2);
    let kk = two * q(k.n - 4) * k.f3 * k.f3;
    let m = two * k.f3 * k.f2;
    let base = q(3) * k.nf * k.nf / q(4);
    let sq = k.f2 * k.f2;
    // the nine products χ_a χ_b and χ_a χ_{π,b}, grouped as in the statement
    let g1 = c1 * c2 + c1 * x3 + c2 * x3;
    let g2 = c1 * c3 + c1 * x2 + c3 * x2;
    let g3 = c2 * c3 + c2 * x1 + c3 * x1;
    match asc {
        3 => base - q(3) * sq - kk * (c1 * c2 * x3 + c1 * x2 * c3 + x1 * c2 * c3) - m * (g1 + g2 + g3),
        2 => base - sq + kk * (c1 * c2 * x3 - c1 * x2 * c3 - x1 * c2 * c3) + m * (g1 - g2 - g3),
        1 => base + sq + kk * (c1 * c2 * x3 + c1 * x2 * c3 - x1 * c2 * c3) + m * (g1 + g2 - g3),
        _ => base + q(3) * sq + kk * (c1 * c2 * x3 + c1 * x2 * c3 + x1 * c2 * c3) + m * (g1 + g2 + g3),
    }
}

fn f3_all_brute(n: usize) -> Result<Vec<Polynomial>> {
    permutations(n)?.par_iter().map(compute_f3_brute).collect()
}

fn check_values_len(what: &str, n: usize, values: &[Polynomial]) -> Result<()> {
    if values.len() != fact(n) as usize {
        return domain(format!("{what}: expected {} values, got {}", fact(n), values.len()));
    }
    Ok(())
}

/// Every degree-3 coefficient of `f₃(π)` at `n = 4`, with `f₃` by brute force.
pub fn check_lemma_4_5(n: usize) -> Result<LemmaReport> {
    check_n("lemma4.5 (brute force)", n, 4, 4)?;
    check_lemma_4_5_with(n, &f3_all_brute(n)?)
}

/// As [`check_lemma_4_5`] with `f₃(π)` supplied by rank, for sizes where the
/// triple loop is too slow.
pub fn check_lemma_4_5_with(n: usize, f3: &[Polynomial]) -> Result<LemmaReport> {
    check_n("lemma4.5", n, 4, ENUMERATION_MAX_N)?;
    check_values_len("lemma4.5", n, f3)?;
    let k = Consts::new(n);
    let ps = pairs(n);
    let mut r = LemmaReport::new("lemma4.5", n);
    for (pi, f) in permutations(n)?.iter().zip(f3) {
        for (a, &p1) in ps.iter().enumerate() {
            r.check(&lemma_4_5_cube(&k, pi, p1), &coefficient(f, &[(p1, 3)]), || {
                format!("(a) pi={pi} pair {}", pair_label(&[p1]))
            });
            for &p3 in ps.iter().filter(|&&p| p != p1) {
                r.check(&lemma_4_5_square(&k, pi, p1, p3), &coefficient(f, &[(p1, 2), (p3, 1)]), || {
                    format!("(b) pi={pi} pairs {}", pair_label(&[p1, p1, p3]))
                });
            }
            for (b, &p2) in ps.iter().enumerate().skip(a + 1) {
                for &p3 in &ps[b + 1..] {
                    r.check(
                        &lemma_4_5_distinct(&k, pi, [p1, p2, p3]),
                        &coefficient(f, &[(p1, 1), (p2, 1), (p3, 1)]),
                        || format!("(c) pi={pi} pairs {}", pair_label(&[p1, p2, p3])),
                    );
                }
            }
        }
    }
    Ok(r)
}

/// `[X_{i,j}](Λ+Δ)` and `[X_{p₁} X_{p₂}](ΛΔ)`, read off the expanded
/// products.
pub fn check_lemma_4_6(n: usize) -> Result<LemmaReport> {
    check_n("lemma4.6", n, 4, MAX_N)?;
    let k = Consts::new(n);
    let (l, d) = (lambda(n)?, delta(n)?);
    let sum = l.add(&d)?;
    let prod = l.mul(&d)?;
    let ps = pairs(n);
    let mut r = LemmaReport::new("lemma4.6", n);
    for (a, &p1) in ps.iter().enumerate() {
        let c1 = q(chi_pair(p1));
        let expected = q(2) * k.f2 + q(k.n - 4) * k.f3 * c1;
        r.check(&expected, &coefficient(&sum, &[(p1, 1)]), || format!("(a) pair {}", pair_label(&[p1])));
        for &p2 in &ps[a..] {
            let c2 = q(chi_pair(p2));
            let numer = q(2 * (k.n - 2)) + q(k.n - 4) * (c1 + c2) - q(4) * c1 * c2;
            let halving = if p1 == p2 { q(2) } else { q(1) };
            let expected = k.f3 * k.f2 * numer / halving;
            let powers: Vec<(Pair, u32)> = if p1 == p2 { vec![(p1, 2)] } else { vec![(p1, 1), (p2, 1)] };
            r.check(&expected, &coefficient(&prod, &powers), || format!("(b) pairs {}", pair_label(&[p1, p2])));
        }
    }
    Ok(r)
}

/// `f(π) = ΛΔ inv_X(π) + (Λ+Δ) f₂(π) + f₃(π)` is the same for every `π`, and
/// the three coefficient formulas hold for `f(ι)`. Brute force at `n = 4`.
pub fn check_lemma_4_7(n: usize) -> Result<LemmaReport> {
    check_n("lemma4.7 (brute force)", n, 4, 4)?;
    let perms = permutations(n)?;
    let f2: Vec<Polynomial> = perms.par_iter().map(compute_f2_brute).collect::<Result<_>>()?;
    check_lemma_4_7_with(n, &f2, &f3_all_brute(n)?)
}

/// As [`check_lemma_4_7`] with `f₂` and `f₃` supplied by rank.
pub fn check_lemma_4_7_with(n: usize, f2: &[Polynomial], f3: &[Polynomial]) -> Result<LemmaReport> {
    check_n("lemma4.7", n, 4, ENUMERATION_MAX_N)?;
    check_values_len("lemma4.7 f2", n, f2)?;
    check_values_len("lemma4.7 f3", n, f3)?;
    let (l, d) = (lambda(n)?, delta(n)?);
    let (sum, prod) = (l.add(&d)?, l.mul(&d)?);
    let perms = permutations(n)?;
    let f = |i: usize| -> Result<Polynomial> { prod.mul(&inv_x(&perms[i]))?.add(&sum.mul(&f2[i])?)?.add(&f3[i]) };
    let mut r = LemmaReport::new("lemma4.7", n);
    let base = f(0)?;
    let base_alt = sum.mul(&f2[0])?.add(&f3[0])?;
    r.check(&base_alt, &base, || "f(identity) = (Lambda+Delta) f2(identity) + f3(identity)".into());
    for (i, pi) in perms.iter().enumerate().skip(1) {
        r.check(&base, &f(i)?, || format!("f(pi) = f(identity) at pi={pi}"));
    }
    let k = Consts::new(n);
    let m = k.f3 * k.f2;
    let lin = q(k.n - 4) * m;
    let ps = pairs(n);
    for (a, &p1) in ps.iter().enumerate() {
        let c1 = q(chi_pair(p1));
        let expected = k.nf * k.nf / q(8) + k.f2 * k.f2 * q(k.n * k.n - k.n + 1) / q(2) + lin * k.up / q(4) * c1
            - m * c1 * c1;
        r.check(&expected, &coefficient(&base, &[(p1, 3)]), || format!("[X^3] pair {}", pair_label(&[p1])));
        for &p3 in ps.iter().filter(|&&p| p != p1) {
            let c3 = q(chi_pair(p3));
            let expected = q(3) * k.nf * k.nf / q(8) + q(3) * k.f2 * k.nf / q(2) + q(3) * k.f2 * k.f2 / q(2)
                + lin * k.up / q(4) * (q(2) * c1 + c3)
                - m * (c1 * c1 + q(2) * c1 * c3);
            r.check(&expected, &coefficient(&base, &[(p1, 2), (p3, 1)]), || {
                format!("[X^2 X] pairs {}", pair_label(&[p1, p1, p3]))
            });
        }
        for (b, &p2) in ps.iter().enumerate().skip(a + 1) {
            for &p3 in &ps[b + 1..] {
                let (c2, c3) = (q(chi_pair(p2)), q(chi_pair(p3)));
                let expected = q(3) * k.nf * k.nf / q(4) + q(3) * k.f2 * k.nf + q(3) * k.f2 * k.f2
                    + lin * k.up / q(2) * (c1 + c2 + c3)
                    - q(2) * m * (c1 * c2 + c1 * c3 + c2 * c3);
                r.check(&expected, &coefficient(&base, &[(p1, 1), (p2, 1), (p3, 1)]), || {
                    format!("[X X X] pairs {}", pair_label(&[p1, p2, p3]))
                });
            }
        }
    }
    r.notes.push(format!("f(identity) has {} terms", base.len()));
    Ok(r)
}
