//! Matrix rank modulo random word-sized primes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::Rng;

use crate::error::{Error, Result};

/// Primes are drawn uniformly from `(2^30, 2^31)`, so products of two
/// residues fit in a `u64`.
const PRIME_LOW: u64 = 1 << 30;
const PRIME_HIGH: u64 = 1 << 31;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// `count` distinct random primes in `(2^30, 2^31)`.
pub fn random_primes<R: Rng + ?Sized>(rng: &mut R, count: usize) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::with_capacity(count);
    while out.len() < count {
        let c = rng.random_range(PRIME_LOW + 1..PRIME_HIGH) | 1;
        if is_prime(c) && !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

pub fn inverse_mod(a: u64, p: u64) -> Option<u64> {
    if a.is_multiple_of(p) {
        None
    } else {
        Some(pow_mod(a, p - 2, p))
    }
}

/// Image of `q` in `Z/p`; `None` when `p` divides the denominator.
pub fn rational_mod(q: &BigRational, p: u64) -> Option<u64> {
    let m = BigInt::from(p);
    let num = q.numer().mod_floor(&m).to_u64()?;
    let den = q.denom().abs().mod_floor(&m).to_u64()?;
    let den = if q.denom().is_negative() { (p - den) % p } else { den };
    Some(mul_mod(num, inverse_mod(den, p)?, p))
}

/// Rank of a row-major `rows × cols` matrix of residues mod `p`.
pub fn rank_mod_p(mut m: Vec<u64>, rows: usize, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| m[r * cols + col] != 0) else { continue };
        if pivot != rank {
            for c in 0..cols {
                m.swap(pivot * cols + c, rank * cols + c);
            }
        }
        let inv = inverse_mod(m[rank * cols + col], p).expect("nonzero pivot");
        for c in col..cols {
            m[rank * cols + c] = mul_mod(m[rank * cols + c], inv, p);
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let f = m[r * cols + col];
            if f == 0 {
                continue;
            }
            for c in col..cols {
                let sub = mul_mod(f, m[rank * cols + c], p);
                m[r * cols + c] = (m[r * cols + c] + p - sub) % p;
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Ranks agreed on by independent primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModularRank {
    pub rank: usize,
    pub primes: Vec<u64>,
    pub ranks: Vec<usize>,
}

impl ModularRank {
    pub fn unanimous(&self) -> bool {
        self.ranks.iter().all(|&r| r == self.rank)
    }
}

/// Rank over `Q` of a matrix given by its reduction mod `p`, estimated with
/// `primes` random primes. A rank mod `p` never exceeds the rational rank,
/// so agreement across independent primes pins it with overwhelming
/// probability. On disagreement the primes are redrawn a bounded number of
/// times before settling for a strict majority.
pub fn modular_rank<R, F>(rng: &mut R, primes: usize, rows: usize, cols: usize, reduce: F) -> Result<ModularRank>
where
    R: Rng + ?Sized,
    F: Fn(u64) -> Option<Vec<u64>>,
{
    let primes = primes.max(3);
    let mut last = None;
    for _ in 0..4 {
        let ps = random_primes(rng, primes);
        let mut ranks = Vec::with_capacity(primes);
        for &p in &ps {
            // a prime dividing a denominator is replaced on the next round
            let Some(m) = reduce(p) else { break };
            ranks.push(rank_mod_p(m, rows, cols, p));
        }
        if ranks.len() < primes {
            continue;
        }
        let best = *ranks.iter().max().expect("nonempty");
        let result = ModularRank { rank: best, primes: ps, ranks };
        if result.unanimous() {
            return Ok(result);
        }
        last = Some(result);
    }
    match last {
        Some(r) if r.ranks.iter().filter(|&&x| x == r.rank).count() * 2 > r.ranks.len() => Ok(r),
        _ => Err(Error::Resource("modular ranks disagree across repeated prime draws".into())),
    }
}
