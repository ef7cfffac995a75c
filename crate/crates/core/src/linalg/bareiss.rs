use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{denom_lcm, multimod, rref, Matrix, Rat};

/// Integer rows obtained by clearing the denominators of each row. Row scaling
/// preserves rank and kernel; the product of the scale factors is returned for
/// determinant bookkeeping.
fn integer_rows(m: &Matrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = (0..m.rows())
        .map(|i| {
            let row = m.row(i);
            let l = denom_lcm(row);
            let lr = Rat::from_integer(l.clone());
            scale *= &l;
            row.iter().map(|x| (x * &lr).to_integer()).collect()
        })
        .collect();
    (rows, scale)
}

struct Echelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
    swaps: usize,
}

/// Fraction-free forward elimination. On return the first `pivots.len()` rows
/// form a row echelon form whose entries are minors of the input.
fn forward(mut a: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut swaps = 0;
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        // smallest non-zero candidate keeps intermediate sizes down
        let Some(p) = (r..m)
            .filter(|&i| !a[i][c].is_zero())
            .min_by_key(|&i| a[i][c].bits())
        else {
            continue;
        };
        if p != r {
            a.swap(p, r);
            swaps += 1;
        }
        let (head, tail) = a.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let pv = &pivot_row[c];
        for row in tail.iter_mut() {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let x = &mut row[j];
                let pj = &pivot_row[j];
                if x.is_zero() && (f.is_zero() || pj.is_zero()) {
                    continue;
                }
                let mut t = pv * &*x;
                if !f.is_zero() && !pj.is_zero() {
                    t -= &f * pj;
                }
                *x = if prev.is_one() { t } else { t / &prev };
            }
        }
        prev = pv.clone();
        pivots.push(c);
        r += 1;
    }
    Echelon {
        rows: a,
        pivots,
        swaps,
    }
}

/// Exact rank of a rational matrix.
pub fn rank(m: &Matrix) -> usize {
    if let Some(r) = super::modp::rank(m) {
        if r == m.rows().min(m.cols()) {
            return r;
        }
    }
    let (rows, _) = integer_rows(m);
    if let Some((r, _)) = multimod::rank_kernel_int(&rows, m.cols()) {
        return r;
    }
    forward(rows, m.cols()).pivots.len()
}

/// Exact determinant of a square rational matrix via Bareiss elimination.
pub fn determinant(m: &Matrix) -> Rat {
    assert_eq!(m.rows(), m.cols(), "determinant of non-square matrix");
    let n = m.rows();
    if n == 0 {
        return Rat::one();
    }
    let (rows, scale) = integer_rows(m);
    let e = forward(rows, n);
    if e.pivots.len() < n {
        return Rat::zero();
    }
    let mut d = e.rows[n - 1][n - 1].clone();
    if e.swaps % 2 == 1 {
        d = -d;
    }
    Rat::new(d, scale)
}

/// Rank and a kernel basis of `m`. The kernel basis is returned in reduced
/// row echelon form, so equal kernels give identical output.
pub fn rank_kernel(m: &Matrix) -> (usize, Vec<Vec<Rat>>) {
    let n = m.cols();
    let (rows, _) = integer_rows(m);
    if let Some((r, mut kernel)) = multimod::rank_kernel_int(&rows, n) {
        let (kernel, _) = rref(&mut kernel);
        return (r, kernel);
    }
    let e = forward(rows, n);
    let rank = e.pivots.len();
    let mut ech: Vec<Vec<Rat>> = e.rows[..rank]
        .iter()
        .map(|r| r.iter().map(|x| Rat::from_integer(x.clone())).collect())
        .collect();
    let (red, pivots) = rref(&mut ech);
    debug_assert_eq!(pivots, e.pivots);
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut kernel: Vec<Vec<Rat>> = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rat::zero(); n];
            v[f] = Rat::one();
            for (row, &p) in red.iter().zip(&pivots) {
                if !row[f].is_zero() {
                    v[p] = -row[f].clone();
                }
            }
            v
        })
        .collect();
    let (kernel, _) = rref(&mut kernel);
    (rank, kernel)
}
