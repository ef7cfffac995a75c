//! Rank and kernel over `Q` by elimination modulo many word-sized primes,
//! Chinese remaindering and rational reconstruction.
//!
//! The answer is always checked exactly: the reconstructed kernel vectors are
//! multiplied back into the integer matrix, and a non-zero pivot minor modulo
//! one prime is a non-zero integer. An unlucky prime can only delay the
//! result, never change it.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::modp::{back_substitute_mod, echelon_mod, inv_mod, mul_mod, pow_mod};
use super::Rat;

/// Deterministic Miller-Rabin for 64-bit integers.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

const PRIME_COUNT: usize = 1024;

/// Descending primes below `2^62`.
fn primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut v = Vec::with_capacity(PRIME_COUNT);
        let mut c = (1u64 << 62) - 1;
        while v.len() < PRIME_COUNT {
            if is_prime(c) {
                v.push(c);
            }
            c -= 2;
        }
        v
    })
}

/// Smallest `n/d` congruent to `a` modulo `m` with `|n|, d <= sqrt(m/2)`.
fn reconstruct(a: &BigInt, m: &BigInt, bound: &BigInt) -> Option<Rat> {
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while &r1 > bound {
        let (q, r) = r0.div_rem(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s);
    }
    if s1.is_zero() || &s1.abs() > bound || !r1.gcd(&s1).is_one() {
        return None;
    }
    Some(Rat::new(r1, s1))
}

struct Accumulator {
    pivots: Vec<usize>,
    /// Residues of the reduced echelon entries in the free columns.
    values: Vec<BigInt>,
    modulus: BigInt,
    primes: usize,
}

/// `true` when pivot set `a` is a better candidate for the rational one than
/// `b`: larger rank, then lexicographically earlier columns.
fn better(a: &[usize], b: &[usize]) -> bool {
    a.len() > b.len() || (a.len() == b.len() && a < b)
}

fn reduce_rows(rows: &[Vec<BigInt>], p: u64) -> Vec<Vec<u64>> {
    let bp = BigInt::from(p);
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| {
                    if x.is_zero() {
                        0
                    } else {
                        x.mod_floor(&bp).to_u64().expect("residue fits")
                    }
                })
                .collect()
        })
        .collect()
}

/// Rank and kernel of an integer matrix, kernel vectors in free-column form
/// (1 in their own free column, 0 in the others). `None` if the prime supply
/// runs out first.
pub(super) fn rank_kernel_int(rows: &[Vec<BigInt>], cols: usize) -> Option<(usize, Vec<Vec<Rat>>)> {
    let mut acc: Option<Accumulator> = None;
    let mut next_try = 1;
    for &p in primes() {
        let mut a = reduce_rows(rows, p);
        let pivots = echelon_mod(&mut a, p);
        back_substitute_mod(&mut a, &pivots, p);
        let free: Vec<usize> = free_columns(&pivots, cols);
        let res: Vec<u64> = (0..pivots.len())
            .flat_map(|k| free.iter().map(move |&f| (k, f)))
            .map(|(k, f)| a[k][f])
            .collect();
        let replace = acc.as_ref().map_or(true, |s| better(&pivots, &s.pivots));
        if replace {
            acc = Some(Accumulator {
                pivots,
                values: res.into_iter().map(BigInt::from).collect(),
                modulus: BigInt::from(p),
                primes: 1,
            });
            next_try = 1;
        } else {
            let s = acc.as_mut().expect("set above");
            if s.pivots != pivots {
                continue;
            }
            // x + m * ((r - x) * m^-1 mod p)
            let m_inv = inv_mod(s.modulus.mod_floor(&BigInt::from(p)).to_u64().expect("fits"), p);
            let bp = BigInt::from(p);
            for (x, r) in s.values.iter_mut().zip(res) {
                let xm = x.mod_floor(&bp).to_u64().expect("fits");
                let t = mul_mod((r + p - xm) % p, m_inv, p);
                if t != 0 {
                    *x += &s.modulus * t;
                }
            }
            s.modulus *= p;
            s.primes += 1;
        }
        let s = acc.as_ref().expect("set above");
        if s.primes < next_try {
            continue;
        }
        next_try = s.primes + s.primes / 2 + 1;
        if let Some(k) = try_kernel(rows, cols, s) {
            return Some((s.pivots.len(), k));
        }
    }
    None
}

fn free_columns(pivots: &[usize], cols: usize) -> Vec<usize> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols).filter(|&c| !is_pivot[c]).collect()
}

fn try_kernel(rows: &[Vec<BigInt>], cols: usize, s: &Accumulator) -> Option<Vec<Vec<Rat>>> {
    let free = free_columns(&s.pivots, cols);
    let bound = (&s.modulus / 2u32).sqrt();
    let entries: Vec<Rat> = s
        .values
        .iter()
        .map(|v| reconstruct(v, &s.modulus, &bound))
        .collect::<Option<_>>()?;
    let kernel: Vec<Vec<Rat>> = free
        .iter()
        .enumerate()
        .map(|(fi, &f)| {
            let mut v = vec![Rat::zero(); cols];
            v[f] = Rat::one();
            for (k, &pc) in s.pivots.iter().enumerate() {
                let e = &entries[k * free.len() + fi];
                if !e.is_zero() {
                    v[pc] = -e.clone();
                }
            }
            v
        })
        .collect();
    for v in &kernel {
        let l = super::denom_lcm(v);
        let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        for r in rows {
            let mut acc = BigInt::zero();
            for (a, b) in r.iter().zip(&ints) {
                if !a.is_zero() && !b.is_zero() {
                    acc += a * b;
                }
            }
            if !acc.is_zero() {
                return None;
            }
        }
    }
    Some(kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::ratio;

    #[test]
    fn primes_are_prime() {
        assert!(is_prime((1 << 61) - 1));
        assert!(!is_prime(561));
        assert!(!is_prime((1 << 62) - 1));
        let ps = primes();
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(ps[..8].iter().all(|&p| is_prime(p)));
    }

    #[test]
    fn reconstruction_recovers_small_fractions() {
        let m = BigInt::from(1_000_003u64) * BigInt::from(998_244_353u64);
        let bound = (&m / 2u32).sqrt();
        for (n, d) in [(3i64, 7i64), (-5, 11), (0, 1), (12345, 1)] {
            let x = Rat::new(n.into(), d.into());
            let e = x.denom().extended_gcd(&m);
            let a = (x.numer() * e.x).mod_floor(&m);
            assert_eq!(reconstruct(&a, &m, &bound), Some(x));
        }
    }

    #[test]
    fn kernel_of_integer_matrix() {
        let rows: Vec<Vec<BigInt>> = [[2i64, 4, 1], [1, 2, 3]]
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        let (r, k) = rank_kernel_int(&rows, 3).unwrap();
        assert_eq!(r, 2);
        assert_eq!(k, vec![vec![ratio(-2, 1), ratio(1, 1), ratio(0, 1)]]);
    }
}
