//! Structure constants from a matrix realization inside `gl_N[t]/(t^k)`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Sparse};
use crate::linalg::{rat, Rat};

/// Sparse element of `gl_N[t]/(t^k)` as `(t-degree, row, col) -> coeff`.
#[derive(Clone, Debug, Default)]
pub(crate) struct TMat(BTreeMap<(usize, usize, usize), Rat>);

impl TMat {
    pub fn unit(i: usize, j: usize) -> Self {
        Self::unit_t(0, i, j)
    }

    pub fn unit_t(deg: usize, i: usize, j: usize) -> Self {
        let mut m = BTreeMap::new();
        m.insert((deg, i, j), Rat::one());
        Self(m)
    }

    pub fn add_entry(mut self, deg: usize, i: usize, j: usize, c: Rat) -> Self {
        let e = self.0.entry((deg, i, j)).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&(deg, i, j));
        }
        self
    }

    /// `E_ii - E_jj` in degree zero.
    pub fn diag_diff(i: usize, j: usize) -> Self {
        Self::unit(i, i).add_entry(0, j, j, rat(-1))
    }

    pub fn get(&self, deg: usize, i: usize, j: usize) -> Rat {
        self.0.get(&(deg, i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self(self.0.iter().map(|(k, x)| (*k, x * c)).collect())
    }
}

/// Builds a validated algebra from matrix basis elements of
/// `gl_n[t]/(t^k)`. The elements must be linearly independent and span a
/// subalgebra.
pub(crate) fn from_matrices(labels: Vec<String>, basis: Vec<TMat>, n: usize, k: usize) -> Result<LieAlgebra> {
    assert_eq!(labels.len(), basis.len());
    let d = basis.len();
    let flat = |(deg, i, j): (usize, usize, usize)| (deg * n + i) * n + j;
    let width = k * n * n;
    // sparse Gauss-Jordan on [basis | identity]
    let mut rows: Vec<BTreeMap<usize, Rat>> = Vec::with_capacity(d);
    let mut pivots: Vec<usize> = Vec::with_capacity(d);
    for (a, b) in basis.iter().enumerate() {
        let mut r: BTreeMap<usize, Rat> = b.0.iter().map(|(&key, c)| (flat(key), c.clone())).collect();
        r.insert(width + a, Rat::one());
        for (p, prow) in pivots.iter().zip(&rows) {
            if let Some(f) = r.get(p).cloned() {
                axpy(&mut r, &(-f), prow);
            }
        }
        let Some((&p, pv)) = r.iter().next().filter(|(&c, _)| c < width) else {
            return Err(Error::InvalidAlgebra(format!(
                "matrix basis element {} is dependent",
                labels[a]
            )));
        };
        let inv = pv.recip();
        for v in r.values_mut() {
            *v *= &inv;
        }
        for prow in rows.iter_mut() {
            if let Some(f) = prow.get(&p).cloned() {
                axpy(prow, &(-f), &r);
            }
        }
        rows.push(r);
        pivots.push(p);
    }
    let pivot_row: HashMap<usize, usize> = pivots.iter().enumerate().map(|(a, &p)| (p, a)).collect();
    let basis_flat: Vec<Vec<(usize, Rat)>> = basis
        .iter()
        .map(|b| b.0.iter().map(|(&key, c)| (flat(key), c.clone())).collect())
        .collect();

    let mut entries: Vec<(usize, usize, Sparse)> = Vec::new();
    for a in 0..d {
        for b in a + 1..d {
            let br = commutator(&basis[a], &basis[b], k);
            if br.is_empty() {
                continue;
            }
            let v: HashMap<usize, Rat> = br.into_iter().map(|(key, c)| (flat(key), c)).collect();
            let mut coords: BTreeMap<usize, Rat> = BTreeMap::new();
            for (f, val) in &v {
                if let Some(&ra) = pivot_row.get(f) {
                    for (&col, t) in rows[ra].range(width..) {
                        *coords.entry(col - width).or_insert_with(Rat::zero) += val * t;
                    }
                }
            }
            coords.retain(|_, c| !c.is_zero());
            // the combination must reproduce the bracket exactly
            let mut check: HashMap<usize, Rat> = HashMap::new();
            for (&bi, c) in &coords {
                for (f, x) in &basis_flat[bi] {
                    *check.entry(*f).or_insert_with(Rat::zero) += c * x;
                }
            }
            check.retain(|_, c| !c.is_zero());
            if check != v {
                return Err(Error::InvalidAlgebra(format!(
                    "[{}, {}] leaves the span of the basis",
                    labels[a], labels[b]
                )));
            }
            entries.push((a, b, coords.into_iter().collect()));
        }
    }
    LieAlgebra::new(labels, entries)
}

fn axpy(r: &mut BTreeMap<usize, Rat>, f: &Rat, o: &BTreeMap<usize, Rat>) {
    for (&c, x) in o {
        let e = r.entry(c).or_insert_with(Rat::zero);
        *e += f * x;
        if e.is_zero() {
            r.remove(&c);
        }
    }
}

/// `AB - BA` truncated at `t^k`.
fn commutator(a: &TMat, b: &TMat, k: usize) -> Vec<((usize, usize, usize), Rat)> {
    let mut acc: HashMap<(usize, usize, usize), Rat> = HashMap::new();
    for (&(d1, i1, j1), c1) in &a.0 {
        for (&(d2, i2, j2), c2) in &b.0 {
            let d = d1 + d2;
            if d >= k {
                continue;
            }
            if j1 == i2 {
                *acc.entry((d, i1, j2)).or_insert_with(Rat::zero) += c1 * c2;
            }
            if j2 == i1 {
                *acc.entry((d, i2, j1)).or_insert_with(Rat::zero) -= c1 * c2;
            }
        }
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_from_matrices() {
        let q = from_matrices(
            vec!["h".into(), "e".into(), "f".into()],
            vec![TMat::diag_diff(0, 1), TMat::unit(0, 1), TMat::unit(1, 0)],
            2,
            1,
        )
        .unwrap();
        assert_eq!(q.bracket_basis(0, 1), &[(1, rat(2))]);
        assert_eq!(q.bracket_basis(0, 2), &[(2, rat(-2))]);
        assert_eq!(q.bracket_basis(1, 2), &[(0, rat(1))]);
    }

    #[test]
    fn rejects_non_closed_and_dependent() {
        let r = from_matrices(
            vec!["e".into(), "f".into()],
            vec![TMat::unit(0, 1), TMat::unit(1, 0)],
            2,
            1,
        );
        assert!(r.is_err());
        let r = from_matrices(
            vec!["a".into(), "b".into()],
            vec![TMat::unit(0, 1), TMat::unit(0, 1)],
            2,
            1,
        );
        assert!(r.is_err());
    }

    #[test]
    fn truncation_kills_high_degree() {
        // [E12, t E21] = t (E11 - E22) survives for k = 2 and vanishes for k = 1
        let basis = || {
            vec![
                TMat::unit(0, 1),
                TMat::unit_t(1, 1, 0),
                TMat::unit_t(1, 0, 0).add_entry(1, 1, 1, rat(-1)),
                TMat::unit_t(1, 0, 1),
            ]
        };
        let labels: Vec<String> = ["e", "tf", "th", "te"].iter().map(|s| s.to_string()).collect();
        let q = from_matrices(labels, basis(), 2, 2).unwrap();
        assert_eq!(q.bracket_basis(0, 1), &[(2, rat(1))]);
    }
}
