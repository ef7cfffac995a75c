use num_traits::{One, Zero};

use super::{Matrix, Rat};
use crate::error::{Error, Result};

/// Square skew-symmetric matrix over `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewMat(Matrix);

impl SkewMat {
    /// Checks `m[i][j] = -m[j][i]` and a zero diagonal.
    pub fn new(m: Matrix) -> Result<Self> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch {
                expected: m.rows(),
                got: m.cols(),
            });
        }
        for i in 0..m.rows() {
            if !m[(i, i)].is_zero() {
                return Err(Error::Other(format!("non-zero diagonal at {i}")));
            }
            for j in i + 1..m.cols() {
                if m[(i, j)] != -m[(j, i)].clone() {
                    return Err(Error::Other(format!("not skew at ({i},{j})")));
                }
            }
        }
        Ok(Self(m))
    }

    /// Builds the matrix from its strict upper triangle.
    pub fn from_upper(n: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let v = f(i, j);
                m[(j, i)] = -v.clone();
                m[(i, j)] = v;
            }
        }
        Self(m)
    }

    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Appends the column `v` and the row `-v^T`, giving a skew matrix of size
    /// `n + 1`.
    pub fn augmented(&self, v: &[Rat]) -> SkewMat {
        let n = self.size();
        assert_eq!(v.len(), n);
        SkewMat::from_upper(n + 1, |i, j| {
            if j == n {
                v[i].clone()
            } else {
                self.0[(i, j)].clone()
            }
        })
    }

    /// Rank, asserted even.
    pub fn rank(&self) -> usize {
        let r = self.0.rank();
        assert!(r % 2 == 0, "odd rank {r} for a skew matrix");
        r
    }
}

/// Pfaffian of an even-size skew matrix by repeated 2x2 Schur complements.
///
/// Sign convention: `Pf([[0, 1], [-1, 0]]) = 1`, consistent with expansion
/// along the first row.
pub fn pfaffian(m: &SkewMat) -> Result<Rat> {
    let n = m.size();
    if n % 2 == 1 {
        return Err(Error::OddPfaffian(n));
    }
    let mut a: Vec<Vec<Rat>> = m.0.row_vecs();
    let mut pf = Rat::one();
    let mut k = 0;
    while k < n {
        let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) else {
            return Ok(Rat::zero());
        };
        if j != k + 1 {
            // simultaneous row/column transposition flips the sign
            a.swap(k + 1, j);
            for row in a.iter_mut() {
                row.swap(k + 1, j);
            }
            pf = -pf;
        }
        let p = a[k][k + 1].clone();
        pf *= &p;
        let inv = p.recip();
        let rk = a[k].clone();
        let rk1 = a[k + 1].clone();
        for i in k + 2..n {
            if rk[i].is_zero() && rk1[i].is_zero() {
                continue;
            }
            for jj in k + 2..n {
                if i == jj {
                    continue;
                }
                // A'_{ij} = A_{ij} + (A_{k+1,i} A_{k,j} - A_{k,i} A_{k+1,j}) / p
                let mut t = Rat::zero();
                if !rk1[i].is_zero() && !rk[jj].is_zero() {
                    t += &rk1[i] * &rk[jj];
                }
                if !rk[i].is_zero() && !rk1[jj].is_zero() {
                    t -= &rk[i] * &rk1[jj];
                }
                if !t.is_zero() {
                    a[i][jj] += t * &inv;
                }
            }
        }
        k += 2;
    }
    Ok(pf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{determinant, rat};

    fn skew(upper: &[(usize, usize, i64)], n: usize) -> SkewMat {
        SkewMat::from_upper(n, |i, j| {
            upper
                .iter()
                .find(|&&(a, b, _)| a == i && b == j)
                .map_or(rat(0), |&(_, _, v)| rat(v))
        })
    }

    #[test]
    fn two_by_two() {
        assert_eq!(pfaffian(&skew(&[(0, 1, 7)], 2)).unwrap(), rat(7));
        assert_eq!(pfaffian(&skew(&[(0, 1, 1)], 2)).unwrap(), rat(1));
    }

    #[test]
    fn four_by_four_classical_expansion() {
        let (a12, a13, a14, a23, a24, a34) = (2, 3, 5, 7, 11, 13);
        let m = skew(
            &[
                (0, 1, a12),
                (0, 2, a13),
                (0, 3, a14),
                (1, 2, a23),
                (1, 3, a24),
                (2, 3, a34),
            ],
            4,
        );
        let expected = a12 * a34 - a13 * a24 + a14 * a23;
        assert_eq!(pfaffian(&m).unwrap(), rat(expected));
        // pivot swap path: a12 = 0
        let m = skew(&[(0, 2, a13), (0, 3, a14), (1, 2, a23), (1, 3, a24)], 4);
        assert_eq!(pfaffian(&m).unwrap(), rat(-a13 * a24 + a14 * a23));
    }

    #[test]
    fn odd_size_is_an_error() {
        let m = skew(&[(0, 1, 1)], 3);
        assert_eq!(pfaffian(&m), Err(Error::OddPfaffian(3)));
    }

    #[test]
    fn square_is_determinant_on_six_by_six() {
        let m = SkewMat::from_upper(6, |i, j| rat(((i * 7 + j * 3) % 11) as i64 - 5));
        let pf = pfaffian(&m).unwrap();
        assert_eq!(&pf * &pf, determinant(m.matrix()));
    }

    #[test]
    fn rejects_non_skew() {
        let m = Matrix::from_i64(&[vec![0, 1], vec![1, 0]]);
        assert!(SkewMat::new(m).is_err());
    }
}
