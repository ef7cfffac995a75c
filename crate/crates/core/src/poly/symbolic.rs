//! Pfaffians and ranks of matrices with polynomial entries.

use std::collections::HashMap;

use crate::error::{Error, Result};

use super::MPoly;

/// Largest matrix handed to [`symbolic_pfaffian`] by default.
pub const DEFAULT_SYMBOLIC_PFAFFIAN_LIMIT: usize = 16;

fn check_skew(m: &[Vec<MPoly>]) -> Result<()> {
    let n = m.len();
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: row.len(),
            });
        }
        if !row[i].is_zero() {
            return Err(Error::Other(format!("non-zero diagonal at {i}")));
        }
        for j in i + 1..n {
            if row[j] != m[j][i].neg() {
                return Err(Error::Other(format!("not skew at ({i},{j})")));
            }
        }
    }
    Ok(())
}

/// Pfaffians of principal submatrices of one skew polynomial matrix,
/// memoized on the index subset. Expansion is along the first remaining row.
pub struct PfaffianMemo<'a> {
    m: &'a [Vec<MPoly>],
    nvars: usize,
    memo: HashMap<u32, MPoly>,
}

impl<'a> PfaffianMemo<'a> {
    /// `m` must be skew with at most 32 rows.
    pub fn new(m: &'a [Vec<MPoly>], nvars: usize) -> Result<Self> {
        check_skew(m)?;
        if m.len() > 32 {
            return Err(Error::SymbolicLimit(format!("{} rows", m.len())));
        }
        Ok(Self {
            m,
            nvars,
            memo: HashMap::new(),
        })
    }

    /// Pfaffian of the principal submatrix on the rows in `mask`.
    pub fn pfaffian(&mut self, mask: u32) -> MPoly {
        if mask == 0 {
            return MPoly::one(self.nvars);
        }
        if mask.count_ones() % 2 == 1 {
            return MPoly::zero(self.nvars);
        }
        if let Some(p) = self.memo.get(&mask) {
            return p.clone();
        }
        let i = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << i);
        let mut acc = MPoly::zero(self.nvars);
        let mut sign_positive = true;
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let a = &self.m[i][j];
            if !a.is_zero() {
                let sub = self.pfaffian(rest & !(1 << j));
                if !sub.is_zero() {
                    let t = a.mul(&sub);
                    acc = if sign_positive { acc.add(&t) } else { acc.sub(&t) };
                }
            }
            sign_positive = !sign_positive;
        }
        self.memo.insert(mask, acc.clone());
        acc
    }
}

/// Pfaffian of a skew matrix of polynomials, with the same sign convention as
/// the numeric Pfaffian.
pub fn symbolic_pfaffian(m: &[Vec<MPoly>], nvars: usize, limit: usize) -> Result<MPoly> {
    let n = m.len();
    if n > limit {
        return Err(Error::SymbolicLimit(format!(
            "Pfaffian of size {n} exceeds {limit}"
        )));
    }
    if n % 2 == 1 {
        return Err(Error::OddPfaffian(n));
    }
    let mut memo = PfaffianMemo::new(m, nvars)?;
    Ok(memo.pfaffian(((1u64 << n) - 1) as u32))
}

/// Rank over the rational function field, by fraction-free elimination with
/// full pivoting on the sparsest entry. Fails once any intermediate entry
/// exceeds `term_budget` terms. Elimination stops early at `cap` when given.
pub fn symbolic_rank(
    m: &[Vec<MPoly>],
    nvars: usize,
    term_budget: usize,
    cap: Option<usize>,
) -> Result<usize> {
    let rows = m.len();
    if rows == 0 {
        return Ok(0);
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<MPoly>> = m.to_vec();
    let mut prev = MPoly::one(nvars);
    let mut k = 0;
    while k < rows.min(cols) {
        if cap.is_some_and(|c| k >= c) {
            break;
        }
        let mut best: Option<(usize, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(k) {
            for (j, e) in row.iter().enumerate().skip(k) {
                if !e.is_zero() && best.is_none_or(|(_, _, t)| e.num_terms() < t) {
                    best = Some((i, j, e.num_terms()));
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        a.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }
        let piv = a[k][k].clone();
        let pivot_row = a[k].clone();
        for row in a.iter_mut().skip(k + 1) {
            let lead = row[k].clone();
            for j in k + 1..cols {
                let mut t = piv.mul(&row[j]);
                if !lead.is_zero() && !pivot_row[j].is_zero() {
                    t = t.sub(&lead.mul(&pivot_row[j]));
                }
                let q = t
                    .div_exact(&prev)
                    .ok_or_else(|| Error::Other("inexact fraction-free division".into()))?;
                if q.num_terms() > term_budget {
                    return Err(Error::SymbolicLimit(format!(
                        "entry with {} terms during elimination",
                        q.num_terms()
                    )));
                }
                row[j] = q;
            }
            row[k] = MPoly::zero(nvars);
        }
        prev = piv;
        k += 1;
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{pfaffian, rat, Rat, SkewMat};

    fn skew_linear(n: usize, nvars: usize, seed: u64) -> Vec<Vec<MPoly>> {
        let mut m = vec![vec![MPoly::zero(nvars); n]; n];
        let mut s = seed;
        for i in 0..n {
            for j in i + 1..n {
                let coeffs: Vec<Rat> = (0..nvars)
                    .map(|_| {
                        s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                        rat(((s >> 33) % 5) as i64 - 2)
                    })
                    .collect();
                let p = MPoly::linear(&coeffs);
                m[j][i] = p.neg();
                m[i][j] = p;
            }
        }
        m
    }

    #[test]
    fn two_by_two() {
        let x = MPoly::var(1, 0);
        let m = vec![vec![MPoly::zero(1), x.clone()], vec![x.neg(), MPoly::zero(1)]];
        assert_eq!(symbolic_pfaffian(&m, 1, 16).unwrap(), x);
    }

    #[test]
    fn heisenberg_augmented_is_square_of_centre() {
        // basis x, y, z with [x, y] = z; last row/column is the coordinate vector
        let v = |i| MPoly::var(3, i);
        let z = MPoly::zero(3);
        let m = vec![
            vec![z.clone(), v(2), z.clone(), v(0)],
            vec![v(2).neg(), z.clone(), z.clone(), v(1)],
            vec![z.clone(), z.clone(), z.clone(), v(2)],
            vec![v(0).neg(), v(1).neg(), v(2).neg(), z.clone()],
        ];
        let pf = symbolic_pfaffian(&m, 3, 16).unwrap();
        // expansion: a12 a34 - a13 a24 + a14 a23 = z*z - 0 + 0
        assert_eq!(pf, v(2).pow(2));
    }

    #[test]
    fn evaluation_commutes_with_numeric() {
        let m = skew_linear(6, 3, 7);
        let pf = symbolic_pfaffian(&m, 3, 16).unwrap();
        for t in 0..10i64 {
            let pt = vec![rat(t - 3), rat(2 * t + 1), rat(5 - t * t)];
            let num = SkewMat::from_upper(6, |i, j| m[i][j].eval(&pt));
            assert_eq!(pf.eval(&pt), pfaffian(&num).unwrap());
        }
    }

    #[test]
    fn size_limit_and_parity() {
        let m = skew_linear(4, 2, 1);
        assert!(matches!(
            symbolic_pfaffian(&m, 2, 2),
            Err(Error::SymbolicLimit(_))
        ));
        let m = skew_linear(3, 2, 1);
        assert_eq!(symbolic_pfaffian(&m, 2, 16), Err(Error::OddPfaffian(3)));
    }

    #[test]
    fn rank_matches_generic_numeric_rank() {
        // three variables limit a 7x7 linear skew pencil
        let m = skew_linear(7, 3, 11);
        let r = symbolic_rank(&m, 3, 100_000, None).unwrap();
        let pt = vec![rat(3), rat(-7), rat(11)];
        let num = SkewMat::from_upper(7, |i, j| m[i][j].eval(&pt));
        assert_eq!(r, num.rank());
        assert_eq!(r % 2, 0);
    }
}
