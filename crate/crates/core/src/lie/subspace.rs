use num_traits::{One, Zero};

use super::{LieAlgebra, Sparse};
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, rank_kernel, rref, unit_vec, Matrix, Rat};

/// Linear subspace of `k^n`, stored as a reduced echelon basis so equal
/// subspaces compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(ambient: usize, mut vecs: Vec<Vec<Rat>>) -> Self {
        vecs.retain(|v| {
            assert_eq!(v.len(), ambient);
            !is_zero_vec(v)
        });
        let (basis, pivots) = rref(&mut vecs);
        Self {
            ambient,
            basis,
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Self::span(ambient, Vec::new())
    }

    pub fn full(ambient: usize) -> Self {
        Self::coordinate(ambient, &(0..ambient).collect::<Vec<_>>())
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(ambient: usize, idx: &[usize]) -> Self {
        Self::span(ambient, idx.iter().map(|&i| unit_vec(ambient, i)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is outside.
    pub fn coords(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        let c: Vec<Rat> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in r.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x -= ci * y;
                }
            }
        }
        is_zero_vec(&r).then_some(c)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_space(&self, o: &Subspace) -> bool {
        o.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, o: &Subspace) -> Subspace {
        let mut v = self.basis.clone();
        v.extend(o.basis.iter().cloned());
        Subspace::span(self.ambient, v)
    }

    pub fn intersect(&self, o: &Subspace) -> Subspace {
        if self.dim() == 0 || o.dim() == 0 {
            return Subspace::zero(self.ambient);
        }
        // sum a_i u_i - sum b_j w_j = 0, solved for (a, b)
        let k1 = self.dim();
        let cols = k1 + o.dim();
        let m = Matrix::from_fn(self.ambient, cols, |r, c| {
            if c < k1 {
                self.basis[c][r].clone()
            } else {
                -o.basis[c - k1][r].clone()
            }
        });
        let (_, ker) = rank_kernel(&m);
        let vecs = ker.iter().map(|a| self.combine(&a[..k1])).collect();
        Subspace::span(self.ambient, vecs)
    }

    /// `sum_i c_i b_i` over the echelon basis.
    pub fn combine(&self, c: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.ambient];
        for (ci, b) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(b) {
                if !y.is_zero() {
                    *x += ci * y;
                }
            }
        }
        out
    }

    /// Standard basis vectors at the non-pivot columns; they span a
    /// complement.
    pub fn complement_coords(&self) -> Vec<usize> {
        (0..self.ambient).filter(|i| !self.pivots.contains(i)).collect()
    }

    /// Vectors `v` with `<v, u> = 0` for every `u` in the subspace; in dual
    /// coordinates this is the annihilator.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.ambient);
        }
        let (_, ker) = rank_kernel(&Matrix::from_rows(self.basis.clone()));
        Subspace::span(self.ambient, ker)
    }

    pub fn is_subalgebra(&self, q: &LieAlgebra) -> bool {
        self.bracket_closed_with(q, self)
    }

    pub fn is_ideal(&self, q: &LieAlgebra) -> bool {
        self.bracket_closed_with(q, &Subspace::full(self.ambient))
    }

    fn bracket_closed_with(&self, q: &LieAlgebra, o: &Subspace) -> bool {
        self.basis.iter().all(|u| {
            o.basis
                .iter()
                .all(|w| self.contains(&q.bracket(u, w).expect("dimensions match")))
        })
    }

    /// The subalgebra as a Lie algebra in the echelon basis. A basis vector
    /// equal to a standard vector keeps its label; others are named `b1, b2,
    /// ...`.
    pub fn to_algebra(&self, q: &LieAlgebra) -> Result<LieAlgebra> {
        let labels = self
            .basis
            .iter()
            .enumerate()
            .map(|(a, v)| {
                let unit = self.pivots[a];
                if v.iter().enumerate().all(|(i, x)| if i == unit { x.is_one() } else { x.is_zero() }) {
                    q.label(unit).to_string()
                } else {
                    format!("b{}", a + 1)
                }
            })
            .collect::<Vec<_>>();
        let mut labels = labels;
        // generated names may clash with kept ones
        for a in 0..labels.len() {
            if labels[..a].contains(&labels[a]) || labels[a + 1..].contains(&labels[a]) {
                labels[a] = format!("{}_{}", labels[a], a + 1);
            }
        }
        let mut entries = Vec::new();
        for a in 0..self.dim() {
            for b in a + 1..self.dim() {
                let br = q.bracket(&self.basis[a], &self.basis[b])?;
                let c = self.coords(&br).ok_or_else(|| {
                    Error::InvalidAlgebra("subspace is not closed under the bracket".into())
                })?;
                let sparse: Sparse = c
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect();
                entries.push((a, b, sparse));
            }
        }
        LieAlgebra::new(labels, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn echelon_equality() {
        let a = Subspace::span(3, vec![v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, vec![v(&[1, 2, 1]), v(&[1, 0, -1]), v(&[2, 2, 0])]);
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::coordinate(3, &[0, 1]);
        let b = Subspace::span(3, vec![v(&[1, 0, 1]), v(&[0, 1, 0])]);
        assert_eq!(a.intersect(&b), Subspace::coordinate(3, &[1]));
        assert_eq!(a.sum(&b), Subspace::full(3));
        assert_eq!(a.coords(&v(&[3, -2, 0])), Some(v(&[3, -2])));
        assert!(a.coords(&v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn annihilator_of_line() {
        let a = Subspace::span(3, vec![v(&[1, 1, 0])]);
        let ann = a.annihilator();
        assert_eq!(ann.dim(), 2);
        assert!(ann.contains(&v(&[1, -1, 0])));
        assert!(ann.contains(&v(&[0, 0, 1])));
    }

    #[test]
    fn subalgebra_extraction() {
        // Borel of sl2 inside sl2
        let q = LieAlgebra::from_i64(
            &["h", "e", "f"],
            &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
        )
        .unwrap();
        let b = Subspace::coordinate(3, &[0, 1]);
        assert!(b.is_subalgebra(&q));
        assert!(!b.is_ideal(&q));
        let alg = b.to_algebra(&q).unwrap();
        assert_eq!(alg.labels(), &["h".to_string(), "e".to_string()]);
        assert_eq!(alg.bracket_basis(0, 1), &[(1, rat(2))]);
        let not_sub = Subspace::coordinate(3, &[1, 2]);
        assert!(not_sub.to_algebra(&q).is_err());
    }
}
