//! Lie algebras given by structure constants in a fixed basis.

mod json;
mod subspace;

pub use json::{algebra_from_json, algebra_to_json, Splitting};
pub use subspace::Subspace;

use std::collections::{BTreeMap, HashSet};

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::linalg::{format_rat, Matrix, Rat, SkewMat};
use crate::poly::MPoly;

/// Sparse linear combination of basis vectors, sorted by index.
pub type Sparse = Vec<(usize, Rat)>;

/// A Lie algebra with validated structure constants. The only way to obtain
/// one is through [`LieAlgebra::new`], which checks the Jacobi identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    // [x_i, x_j] for i < j
    upper: BTreeMap<(usize, usize), Sparse>,
    // [x_i, x_j] for all i, j
    full: Vec<Vec<Sparse>>,
}

impl LieAlgebra {
    /// Builds and validates an algebra. Each entry `(i, j, c)` sets
    /// `[x_i, x_j] = sum_k c_k x_k`; entries with `i > j` are stored negated.
    pub fn new(labels: Vec<String>, entries: Vec<(usize, usize, Sparse)>) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::new();
        for l in &labels {
            if l.is_empty() {
                return Err(Error::InvalidAlgebra("empty basis label".into()));
            }
            if !seen.insert(l.as_str()) {
                return Err(Error::InvalidAlgebra(format!("duplicate label {l}")));
            }
        }
        let mut upper: BTreeMap<(usize, usize), Sparse> = BTreeMap::new();
        for (i, j, c) in entries {
            if i >= n || j >= n {
                return Err(Error::InvalidAlgebra(format!(
                    "bracket index ({i},{j}) out of range for dim {n}"
                )));
            }
            if i == j {
                if c.iter().all(|(_, x)| x.is_zero()) {
                    continue;
                }
                return Err(Error::InvalidAlgebra(format!("non-zero [x_{i}, x_{i}]")));
            }
            let (a, b, neg) = if i < j { (i, j, false) } else { (j, i, true) };
            if upper.contains_key(&(a, b)) {
                return Err(Error::InvalidAlgebra(format!("duplicate bracket ({a},{b})")));
            }
            let mut acc: BTreeMap<usize, Rat> = BTreeMap::new();
            for (k, x) in c {
                if k >= n {
                    return Err(Error::InvalidAlgebra(format!(
                        "coefficient index {k} out of range for dim {n}"
                    )));
                }
                *acc.entry(k).or_insert_with(Rat::zero) += x;
            }
            let v: Sparse = acc
                .into_iter()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, if neg { -x } else { x }))
                .collect();
            if !v.is_empty() {
                upper.insert((a, b), v);
            }
        }
        let mut full = vec![vec![Sparse::new(); n]; n];
        for (&(i, j), v) in &upper {
            full[i][j] = v.clone();
            full[j][i] = v.iter().map(|(k, x)| (*k, -x)).collect();
        }
        let q = Self { labels, upper, full };
        q.check_jacobi()?;
        Ok(q)
    }

    /// Convenience constructor from integer structure constants.
    pub fn from_i64(labels: &[&str], entries: &[(usize, usize, &[(usize, i64)])]) -> Result<Self> {
        Self::new(
            labels.iter().map(|s| s.to_string()).collect(),
            entries
                .iter()
                .map(|(i, j, c)| (*i, *j, c.iter().map(|&(k, x)| (k, crate::linalg::rat(x))).collect()))
                .collect(),
        )
    }

    /// Abelian algebra on the given labels.
    pub fn abelian(labels: Vec<String>) -> Self {
        Self::new(labels, Vec::new()).expect("abelian algebra is valid")
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// `[x_i, x_j]` as a sparse combination.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, Rat)] {
        &self.full[i][j]
    }

    /// Non-zero brackets `[x_i, x_j]` with `i < j`, in index order.
    pub fn brackets(&self) -> impl Iterator<Item = (usize, usize, &Sparse)> {
        self.upper.iter().map(|(&(i, j), v)| (i, j, v))
    }

    pub fn is_abelian(&self) -> bool {
        self.upper.is_empty()
    }

    fn check_len(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                got: v.len(),
            });
        }
        Ok(())
    }

    pub fn bracket(&self, a: &[Rat], b: &[Rat]) -> Result<Vec<Rat>> {
        self.check_len(a)?;
        self.check_len(b)?;
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() || self.full[i][j].is_empty() {
                    continue;
                }
                let xy = x * y;
                for (k, c) in &self.full[i][j] {
                    out[k.to_owned()] += &xy * c;
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(a)`: column `j` holds `[a, x_j]`.
    pub fn ad(&self, a: &[Rat]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in &self.full[i][j] {
                    m[(*k, j)] += x * c;
                }
            }
        }
        m
    }

    /// `B(alpha)_{ij} = alpha([x_i, x_j])`.
    pub fn structure_matrix(&self, alpha: &[Rat]) -> SkewMat {
        assert_eq!(alpha.len(), self.dim());
        SkewMat::from_upper(self.dim(), |i, j| self.pair(alpha, i, j))
    }

    fn pair(&self, alpha: &[Rat], i: usize, j: usize) -> Rat {
        self.full[i][j]
            .iter()
            .filter(|(k, _)| !alpha[*k].is_zero())
            .fold(Rat::zero(), |acc, (k, c)| acc + c * &alpha[*k])
    }

    /// Skew matrix of linear forms `sum_k c_{ij}^k x_k`, one variable per
    /// basis vector.
    pub fn symbolic_structure_matrix(&self) -> Vec<Vec<MPoly>> {
        let n = self.dim();
        let mut m = vec![vec![MPoly::zero(n); n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, e) in row.iter_mut().enumerate() {
                let mut coeffs = vec![Rat::zero(); n];
                for (k, c) in &self.full[i][j] {
                    coeffs[*k] = c.clone();
                }
                *e = MPoly::linear(&coeffs);
            }
        }
        m
    }

    /// Coadjoint action: `(a . alpha)(v) = -alpha([a, v])`.
    pub fn coadjoint(&self, a: &[Rat], alpha: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let p = self.pair(alpha, i, j);
                if !p.is_zero() {
                    *o -= x * p;
                }
            }
        }
        out
    }

    /// Derived algebra `[q, q]` and centre.
    pub fn derived_and_center(&self) -> (Subspace, Subspace) {
        let n = self.dim();
        let derived = Subspace::span(
            n,
            self.upper
                .values()
                .map(|v| {
                    let mut d = vec![Rat::zero(); n];
                    for (k, c) in v {
                        d[*k] = c.clone();
                    }
                    d
                })
                .collect(),
        );
        // centre: kernel of the stacked ad(x_i)
        let mut rows = Vec::new();
        for i in 0..n {
            // row (i, k): coefficient of x_k in [x_j, x_i] as a function of j
            let mut block = vec![vec![Rat::zero(); n]; n];
            for (j, row) in self.full.iter().enumerate() {
                for (k, c) in &row[i] {
                    block[*k][j] = c.clone();
                }
            }
            rows.extend(block.into_iter().filter(|r| !crate::linalg::is_zero_vec(r)));
        }
        let center = if rows.is_empty() {
            Subspace::full(n)
        } else {
            let (_, ker) = crate::linalg::rank_kernel(&Matrix::from_rows(rows));
            Subspace::span(n, ker)
        };
        (derived, center)
    }

    /// `[[a, b], c] + [[b, c], a] + [[c, a], b]`.
    pub fn jacobi_residual(&self, a: &[Rat], b: &[Rat], c: &[Rat]) -> Result<Vec<Rat>> {
        let t1 = self.bracket(&self.bracket(a, b)?, c)?;
        let t2 = self.bracket(&self.bracket(b, c)?, a)?;
        let t3 = self.bracket(&self.bracket(c, a)?, b)?;
        Ok(t1
            .into_iter()
            .zip(t2)
            .zip(t3)
            .map(|((x, y), z)| x + y + z)
            .collect())
    }

    fn check_jacobi(&self) -> Result<()> {
        if let Some(ints) = self.integer_table() {
            return self.check_jacobi_int(&ints);
        }
        let n = self.dim();
        let mut acc = vec![Rat::zero(); n];
        let mut touched = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, x) in &self.full[a][b] {
                            for (l, y) in &self.full[*m][c] {
                                acc[*l] += x * y;
                                touched.push(*l);
                            }
                        }
                    }
                    if touched.iter().any(|&l| !acc[l].is_zero()) {
                        return Err(self.jacobi_error(i, j, k, &acc));
                    }
                    touched.clear();
                }
            }
        }
        Ok(())
    }

    fn integer_table(&self) -> Option<Vec<Vec<Vec<(usize, i64)>>>> {
        self.full
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| {
                        v.iter()
                            .map(|(k, c)| {
                                if c.is_integer() {
                                    c.to_integer().to_i64().filter(|x| x.abs() < 1 << 30).map(|x| (*k, x))
                                } else {
                                    None
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    fn check_jacobi_int(&self, t: &[Vec<Vec<(usize, i64)>>]) -> Result<()> {
        let n = self.dim();
        let mut acc = vec![0i128; n];
        let mut touched = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, x) in &t[a][b] {
                            for (l, y) in &t[*m][c] {
                                acc[*l] += (*x as i128) * (*y as i128);
                                touched.push(*l);
                            }
                        }
                    }
                    if touched.iter().any(|&l| acc[l] != 0) {
                        let r: Vec<Rat> = acc
                            .iter()
                            .map(|&x| Rat::from_integer(x.into()))
                            .collect();
                        return Err(self.jacobi_error(i, j, k, &r));
                    }
                    touched.clear();
                }
            }
        }
        Ok(())
    }

    fn jacobi_error(&self, i: usize, j: usize, k: usize, residual: &[Rat]) -> Error {
        let parts: Vec<String> = residual
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(l, x)| format!("{}:{}", self.labels[l], format_rat(x)))
            .collect();
        Error::Jacobi {
            i,
            j,
            k,
            residual: format!("{{{}}}", parts.join(", ")),
        }
    }

    /// Direct sum with `other`; labels of `other` get `suffix` appended when
    /// they clash.
    pub fn direct_sum(&self, other: &LieAlgebra, suffix: &str) -> Result<LieAlgebra> {
        let n = self.dim();
        let mut labels = self.labels.clone();
        for l in &other.labels {
            if labels.contains(l) {
                labels.push(format!("{l}{suffix}"));
            } else {
                labels.push(l.clone());
            }
        }
        let mut entries: Vec<(usize, usize, Sparse)> =
            self.brackets().map(|(i, j, v)| (i, j, v.clone())).collect();
        for (i, j, v) in other.brackets() {
            entries.push((i + n, j + n, v.iter().map(|(k, c)| (k + n, c.clone())).collect()));
        }
        LieAlgebra::new(labels, entries)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rank_kernel, rat, unit_vec};

    pub(crate) fn heisenberg1() -> LieAlgebra {
        LieAlgebra::from_i64(&["x", "y", "z"], &[(0, 1, &[(2, 1)])]).unwrap()
    }

    pub(crate) fn sl2() -> LieAlgebra {
        LieAlgebra::from_i64(
            &["h", "e", "f"],
            &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(0, 1)])],
        )
        .unwrap()
    }

    #[test]
    fn validation() {
        heisenberg1();
        sl2();
        // [e, f] = e breaks Jacobi on (h, e, f):
        // [[h,e],f] + [[e,f],h] + [[f,h],e] = 2e + [e,h] + 2[f,e] = 2e - 2e - 2e
        let bad = LieAlgebra::from_i64(
            &["h", "e", "f"],
            &[(0, 1, &[(1, 2)]), (0, 2, &[(2, -2)]), (1, 2, &[(1, 1)])],
        );
        match bad {
            Err(Error::Jacobi { i, j, k, residual }) => {
                assert_eq!((i, j, k), (0, 1, 2));
                assert_eq!(residual, "{e:-2}");
            }
            other => panic!("expected Jacobi failure, got {other:?}"),
        }
        assert!(LieAlgebra::from_i64(&["a", "a"], &[]).is_err());
    }

    #[test]
    fn rational_constants_use_exact_check() {
        let q = LieAlgebra::new(
            vec!["a".into(), "b".into()],
            vec![(0, 1, vec![(1, crate::linalg::ratio(1, 2))])],
        )
        .unwrap();
        assert_eq!(q.bracket_basis(1, 0), &[(1, crate::linalg::ratio(-1, 2))]);
    }

    #[test]
    fn brackets() {
        let q = sl2();
        let e = unit_vec(3, 1);
        let f = unit_vec(3, 2);
        assert_eq!(q.bracket(&e, &f).unwrap(), unit_vec(3, 0));
        let v = vec![rat(1), rat(-2), rat(5)];
        assert!(crate::linalg::is_zero_vec(&q.bracket(&v, &v).unwrap()));
        let h = heisenberg1();
        assert_eq!(h.bracket(&unit_vec(3, 0), &unit_vec(3, 1)).unwrap(), unit_vec(3, 2));
        assert!(h.bracket(&[rat(1)], &unit_vec(3, 1)).is_err());
    }

    #[test]
    fn structure_matrices() {
        let h = heisenberg1();
        let b = h.structure_matrix(&unit_vec(3, 2));
        assert_eq!(
            b.matrix(),
            &Matrix::from_i64(&[vec![0, 1, 0], vec![-1, 0, 0], vec![0, 0, 0]])
        );
        assert!(h.structure_matrix(&[rat(0), rat(0), rat(0)]).matrix().is_zero());
        let s = sl2();
        let (r, ker) = rank_kernel(s.structure_matrix(&unit_vec(3, 0)).matrix());
        assert_eq!(r, 2);
        assert_eq!(ker, vec![unit_vec(3, 0)]);
        let sym = h.symbolic_structure_matrix();
        assert_eq!(sym[0][1], MPoly::var(3, 2));
        let sym = s.symbolic_structure_matrix();
        assert_eq!(sym[0][1], MPoly::var(3, 1).scale(&rat(2)));
    }

    #[test]
    fn derived_and_centre() {
        let (d, c) = heisenberg1().derived_and_center();
        assert_eq!(d, Subspace::span(3, vec![unit_vec(3, 2)]));
        assert_eq!(c, d);
        let (d, c) = sl2().derived_and_center();
        assert_eq!(d.dim(), 3);
        assert_eq!(c.dim(), 0);
    }

    #[test]
    fn coadjoint_action_matches_structure_matrix() {
        let s = sl2();
        let alpha = vec![rat(1), rat(2), rat(3)];
        let a = vec![rat(0), rat(1), rat(-1)];
        let act = s.coadjoint(&a, &alpha);
        let b = s.structure_matrix(&alpha);
        // (a . alpha)_j = -sum_i a_i B_ij
        let expect: Vec<Rat> = (0..3)
            .map(|j| -(0..3).fold(rat(0), |acc, i| acc + &a[i] * &b.matrix()[(i, j)]))
            .collect();
        assert_eq!(act, expect);
    }
}
