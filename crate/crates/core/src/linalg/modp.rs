//! Linear algebra over `F_p` with `p = 2^61 - 1`.
//!
//! Reduction mod `p` can only lose rank: a minor that is non-zero mod `p` is a
//! non-zero rational. The modular rank is therefore an exact lower bound for
//! the rational rank, and a non-zero modular determinant certifies a
//! non-singular rational matrix.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::{Matrix, Rat};

pub const PRIME: u64 = (1 << 61) - 1;

#[inline]
pub(super) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub(super) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(super) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    r
}

/// Inverse of a non-zero residue modulo a prime.
pub(super) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

#[inline]
fn mul(a: u64, b: u64) -> u64 {
    mul_mod(a, b, PRIME)
}

#[inline]
fn sub(a: u64, b: u64) -> u64 {
    sub_mod(a, b, PRIME)
}

fn inv(a: u64) -> u64 {
    inv_mod(a, PRIME)
}

fn reduce_int(x: &BigInt) -> u64 {
    let p = BigInt::from(PRIME);
    x.mod_floor(&p).to_u64().expect("residue fits in u64")
}

/// Image of a rational in `F_p`, or `None` if `p` divides the denominator.
pub fn reduce(x: &Rat) -> Option<u64> {
    let d = reduce_int(x.denom());
    if d == 0 {
        return None;
    }
    Some(mul(reduce_int(x.numer()), inv(d)))
}

/// Reduces a rational matrix entrywise.
pub fn reduce_matrix(m: &Matrix) -> Option<Vec<Vec<u64>>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(reduce).collect())
        .collect()
}

/// Row echelon form modulo `p` in place, pivots scaled to 1; returns the
/// pivot columns.
pub(super) fn echelon_mod(a: &mut [Vec<u64>], p: u64) -> Vec<usize> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(pr) = (r..m).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let iv = inv_mod(a[r][c], p);
        for x in a[r][c..].iter_mut() {
            *x = mul_mod(*x, iv, p);
        }
        let (head, tail) = a.split_at_mut(r + 1);
        let prow = &head[r];
        for row in tail.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..n {
                if prow[j] != 0 {
                    row[j] = sub_mod(row[j], mul_mod(f, prow[j], p), p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Clears the entries above each pivot of an echelon form.
pub(super) fn back_substitute_mod(a: &mut [Vec<u64>], pivots: &[usize], p: u64) {
    let n = a.first().map_or(0, Vec::len);
    for (k, &c) in pivots.iter().enumerate().rev() {
        let (head, tail) = a.split_at_mut(k);
        let prow = &tail[0];
        for row in head.iter_mut() {
            let f = row[c];
            if f == 0 {
                continue;
            }
            for j in c..n {
                if prow[j] != 0 {
                    row[j] = sub_mod(row[j], mul_mod(f, prow[j], p), p);
                }
            }
        }
    }
}

fn echelon(a: &mut [Vec<u64>]) -> Vec<usize> {
    echelon_mod(a, PRIME)
}

/// Rank of the reduction mod `p`; a lower bound on the rational rank.
pub fn rank(m: &Matrix) -> Option<usize> {
    let mut a = reduce_matrix(m)?;
    Some(echelon(&mut a).len())
}

/// Kernel basis of the reduction mod `p` (one vector per free column).
pub fn kernel(m: &Matrix) -> Option<Vec<Vec<u64>>> {
    let mut a = reduce_matrix(m)?;
    let n = m.cols();
    let pivots = echelon(&mut a);
    back_substitute_mod(&mut a, &pivots, PRIME);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    Some(
        (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![0u64; n];
                v[f] = 1;
                for (k, &p) in pivots.iter().enumerate() {
                    if a[k][f] != 0 {
                        v[p] = sub(0, a[k][f]);
                    }
                }
                v
            })
            .collect(),
    )
}

/// Inner product of a rational vector with an `F_p` vector.
pub fn dot(a: &[Rat], b: &[u64]) -> Option<u64> {
    let mut acc = 0u64;
    for (x, &y) in a.iter().zip(b) {
        if x.is_zero() || y == 0 {
            continue;
        }
        acc = (acc + mul(reduce(x)?, y)) % PRIME;
    }
    Some(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank as exact_rank, rat, ratio};

    #[test]
    fn inverse_roundtrip() {
        for a in [1u64, 2, 12345, PRIME - 1] {
            assert_eq!(mul(a, inv(a)), 1);
        }
    }

    #[test]
    fn reduce_rational() {
        let h = reduce(&ratio(1, 2)).unwrap();
        assert_eq!(mul(h, 2), 1);
        assert_eq!(reduce(&rat(-1)).unwrap(), PRIME - 1);
    }

    #[test]
    fn modular_rank_matches_small_exact() {
        let m = Matrix::from_i64(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 5]]);
        assert_eq!(rank(&m), Some(exact_rank(&m)));
        let k = kernel(&m).unwrap();
        assert_eq!(k.len(), 1);
    }
}
