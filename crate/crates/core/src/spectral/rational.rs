use num_rational::BigRational;
use num_traits::Zero;

/// Solves the square system `a · x = b` exactly; `None` if singular.
pub fn solve(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    assert!(a.len() == n && a.iter().all(|row| row.len() == n), "square system expected");
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &a[col][col];
            for c in col..n {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
            let t = &f * &b[col];
            b[r] -= t;
        }
    }
    Some((0..n).map(|i| &b[i] / &a[i][i]).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn vandermonde() {
        // nodes 0, 1/2, −3 with weights 2, 5, 1
        let nodes = [q(0, 1), q(1, 2), q(-3, 1)];
        let weights = [q(2, 1), q(5, 1), q(1, 1)];
        let mut a = vec![vec![q(0, 1); 3]; 3];
        let mut b = vec![q(0, 1); 3];
        for k in 0..3 {
            for i in 0..3 {
                let mut p = q(1, 1);
                for _ in 0..k {
                    p *= &nodes[i];
                }
                b[k] += &weights[i] * &p;
                a[k][i] = p;
            }
        }
        assert_eq!(solve(a, b).unwrap(), weights);
    }

    #[test]
    fn singular() {
        assert!(solve(vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]], vec![q(1, 1), q(2, 1)]).is_none());
    }
}
