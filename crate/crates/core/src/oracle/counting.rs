//! Cardinalities of the value-order, position-order and restricted sets.

use super::{chi, check_n, fact, pairs, q, LemmaReport, Q, ENUMERATION_MAX_N};
use crate::error::Result;
use crate::perm::permutations;

/// `σ` and `σ⁻¹` of every permutation, 1-based with a dummy slot 0.
struct Table {
    images: Vec<Vec<usize>>,
    positions: Vec<Vec<usize>>,
}

impl Table {
    fn new(n: usize) -> Result<Self> {
        let perms = permutations(n)?;
        let images = perms.iter().map(|s| std::iter::once(0).chain((1..=n).map(|k| s.apply(k))).collect()).collect();
        let positions =
            perms.iter().map(|s| std::iter::once(0).chain((1..=n).map(|v| s.position_of(v))).collect()).collect();
        Ok(Table { images, positions })
    }

    fn count(&self, pred: impl Fn(&[usize], &[usize]) -> bool) -> i128 {
        self.images.iter().zip(&self.positions).filter(|(s, p)| pred(s, p)).count() as i128
    }

    /// `#S_n^{x y}|_{ī₂=a, j̄₂=b}`
    fn restricted(&self, x: usize, y: usize, i2: usize, a: usize, j2: usize, b: usize) -> i128 {
        self.count(|s, p| s[x] > s[y] && p[i2] == a && p[j2] == b)
    }

    /// `#^{i j}S_n ∩ S_n^{a b}`
    fn position_value(&self, i: usize, j: usize, a: usize, b: usize) -> i128 {
        self.count(|s, p| p[i] > p[j] && s[a] > s[b])
    }
}

/// Every case of the restricted-set cardinalities, for both `S_n^{i₁ j₁}` and
/// `S_n^{j₁ i₁}`.
pub fn check_lemma_4_1(n: usize) -> Result<LemmaReport> {
    check_n("lemma4.1", n, 4, ENUMERATION_MAX_N)?;
    let t = Table::new(n)?;
    let mut r = LemmaReport::new("lemma4.1", n);
    let (f2, f3) = (fact(n - 2), fact(n - 3));
    for (i1, j1) in pairs(n) {
        for (i2, j2) in pairs(n) {
            let here = |case: &str, a: usize, b: usize| {
                format!("{case}: (i1,j1)=({i1},{j1}) (i2,j2)=({i2},{j2}) a={a} b={b}")
            };
            r.check(&f2, &t.restricted(i1, j1, i2, j1, j2, i1), || here("{a,b}={i1,j1}, S^{i1 j1}", j1, i1));
            r.check(&f2, &t.restricted(j1, i1, i2, i1, j2, j1), || here("{a,b}={i1,j1}, S^{j1 i1}", i1, j1));
            let outside = |k: usize| k != i1 && k != j1;
            for a in (1..=n).filter(|&k| outside(k)) {
                for b in (1..=n).filter(|&k| outside(k) && k != a) {
                    r.check(&(f2 / 2), &t.restricted(i1, j1, i2, a, j2, b), || here("a,b outside, S^{i1 j1}", a, b));
                    r.check(&(f2 / 2), &t.restricted(j1, i1, i2, a, j2, b), || here("a,b outside, S^{j1 i1}", a, b));
                }
            }
            let (i2c, j2c, nc) = (i2 as i128, j2 as i128, n as i128);
            for c in (1..=n).filter(|&k| outside(k)) {
                let cases: [(&str, usize, usize, i128, i128); 4] = [
                    ("a=i1", i1, c, i2c - 1, nc - i2c - 1),
                    ("b=i1", c, i1, j2c - 2, nc - j2c),
                    ("a=j1", j1, c, nc - i2c - 1, i2c - 1),
                    ("b=j1", c, j1, nc - j2c, j2c - 2),
                ];
                for (case, a, b, forward, backward) in cases {
                    r.check(&(forward * f3), &t.restricted(i1, j1, i2, a, j2, b), || {
                        here(&format!("{case}, S^{{i1 j1}}"), a, b)
                    });
                    r.check(&(backward * f3), &t.restricted(j1, i1, i2, a, j2, b), || {
                        here(&format!("{case}, S^{{j1 i1}}"), a, b)
                    });
                }
            }
        }
    }
    Ok(r)
}

fn lemma_4_2_forms(n: usize, c1: i128, c2: i128) -> (Q, Q) {
    let (f2, f3, n2) = (q(fact(n - 2)), q(fact(n - 3)), (n * n) as i128);
    let a = f3 * q(c1 * c2) + f2 * q(n2 - n as i128 + 2) / q(4);
    let b = f2 * q(n2 - n as i128 - 2) / q(4) - f3 * q(c1 * c2);
    (a, b)
}

/// `#^{i₁ j₁}S_n ∩ S_n^{i₂ j₂}` and `#^{i₁ j₁}S_n ∩ S_n^{j₂ i₂}`.
pub fn check_lemma_4_2(n: usize) -> Result<LemmaReport> {
    check_n("lemma4.2", n, 4, ENUMERATION_MAX_N)?;
    let t = Table::new(n)?;
    let mut r = LemmaReport::new("lemma4.2", n);
    for (i1, j1) in pairs(n) {
        for (i2, j2) in pairs(n) {
            let (a, b) = lemma_4_2_forms(n, chi(i1, j1), chi(i2, j2));
            let here = |part: &str| format!("({part}) (i1,j1)=({i1},{j1}) (i2,j2)=({i2},{j2})");
            r.check(&a, &q(t.position_value(i1, j1, i2, j2)), || here("a"));
            r.check(&b, &q(t.position_value(i1, j1, j2, i2)), || here("b"));
        }
    }
    Ok(r)
}

/// The double sums `Σ_{a,b} #(^{i₁ j₁}S_n ∩ S_n^{a b}) · #(S_n^{i₃ j₃}|_{ī₂=a, j̄₂=b})`
/// and the same with `S_n^{j₃ i₃}`. The `×` in the statement is read as a
/// product of the two counts.
pub fn check_lemma_4_4(n: usize) -> Result<LemmaReport> {
    check_n("lemma4.4", n, 4, 5)?;
    let t = Table::new(n)?;
    let mut r = LemmaReport::new("lemma4.4", n);
    let ps = pairs(n);
    // #(^{i₁ j₁}S_n ∩ S_n^{a b}) for every ordered (a, b), indexed [pair][a][b]
    let pv: Vec<Vec<Vec<i128>>> = ps
        .iter()
        .map(|&(i, j)| {
            (0..=n).map(|a| (0..=n).map(|b| if a == 0 || b == 0 { 0 } else { t.position_value(i, j, a, b) }).collect()).collect()
        })
        .collect();
    let (f2, f3) = (q(fact(n - 2)), q(fact(n - 3)));
    let nf2 = q(fact(n) * fact(n));
    for (k1, &(i1, j1)) in ps.iter().enumerate() {
        for &(i2, j2) in &ps {
            for &(i3, j3) in &ps {
                let (mut sa, mut sb) = (0i128, 0i128);
                for a in 1..=n {
                    for b in (1..=n).filter(|&b| b != a) {
                        let left = pv[k1][a][b];
                        if left == 0 {
                            continue;
                        }
                        sa += left * t.restricted(i3, j3, i2, a, j2, b);
                        sb += left * t.restricted(j3, i3, i2, a, j2, b);
                    }
                }
                let (c1, c2, c3) = (chi(i1, j1), chi(i2, j2), chi(i3, j3));
                let cubic = q(n as i128 - 4) * f3 * f3 * q(c1 * c2 * c3);
                let quad = f3 * f2 * q(c1 * c2 + c1 * c3 + c2 * c3);
                let half = f2 * f2 / q(2);
                let ea = nf2 / q(8) - half - cubic - quad;
                let eb = nf2 / q(8) + half + cubic + quad;
                let here = |part: &str| format!("({part}) (i1,j1)=({i1},{j1}) (i2,j2)=({i2},{j2}) (i3,j3)=({i3},{j3})");
                r.check(&ea, &q(sa), || here("a"));
                r.check(&eb, &q(sb), || here("b"));
            }
        }
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lemma_4_2_example() {
        let t = Table::new(4).unwrap();
        assert_eq!(t.position_value(1, 2, 1, 2), 7);
        let (a, b) = lemma_4_2_forms(4, 0, 0);
        assert_eq!(a, q(7));
        assert_eq!(a + b, q(12));
    }

    #[test]
    fn restricted_swap_is_n_minus_2_factorial() {
        let t = Table::new(5).unwrap();
        assert_eq!(t.restricted(1, 3, 2, 3, 4, 1), 6);
    }

    #[test]
    fn lemmas_at_4() {
        for r in [check_lemma_4_1(4).unwrap(), check_lemma_4_2(4).unwrap(), check_lemma_4_4(4).unwrap()] {
            assert!(r.passed(), "{} {}", r.id, r.summary());
        }
    }
}
