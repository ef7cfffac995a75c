//! Dense univariate polynomials over `Q`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{Matrix, Rat};

/// Coefficients from the constant term upwards; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPoly(Vec<Rat>);

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self(coeffs)
    }

    pub fn zero() -> Self {
        Self(Vec::new())
    }

    pub fn one() -> Self {
        Self(vec![Rat::one()])
    }

    /// The polynomial `T`.
    pub fn t() -> Self {
        Self(vec![Rat::zero(), Rat::one()])
    }

    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rat {
        self.0.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().recip();
        Self(self.0.iter().map(|c| c * &l).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new(
            (0..n)
                .map(|i| {
                    let a = self.0.get(i).cloned().unwrap_or_else(Rat::zero);
                    let b = o.0.get(i).cloned().unwrap_or_else(Rat::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        Self(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![Rat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.0
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division `self = q * d + r` with `deg r < deg d`.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dd = d.0.len() - 1;
        let inv = d.lead().recip();
        let mut r = self.0.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, di) in d.0.iter().enumerate() {
                if !di.is_zero() {
                    r[k + i] -= &c * di;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn lcm(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(o);
        self.mul(o).div_rem(&g).0.monic()
    }

    /// True when the polynomial has no repeated factor over the algebraic
    /// closure.
    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == Some(0)
    }

    pub fn squarefree_part(&self) -> Self {
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// True when the polynomial equals `c * T^k` for some `k >= 1`.
    pub fn is_power_of_t(&self) -> bool {
        match self.degree() {
            Some(d) if d >= 1 => self.0[..d].iter().all(Zero::is_zero),
            _ => false,
        }
    }

    /// Evaluates the polynomial at a square matrix (Horner).
    pub fn eval_matrix(&self, a: &Matrix) -> Matrix {
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.0.iter().rev() {
            acc = acc.mul(a);
            if !c.is_zero() {
                acc = acc.add(&Matrix::identity(n).scale(c));
            }
        }
        acc
    }

    /// Distinct rational roots in increasing order, together with a flag that
    /// is true when every complex root is rational.
    pub fn rational_roots(&self) -> (Vec<Rat>, bool) {
        if self.degree().unwrap_or(0) == 0 {
            return (Vec::new(), true);
        }
        let sf = self.squarefree_part();
        let deg = sf.degree().unwrap();
        // primitive integer coefficients
        let l = sf
            .0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = sf
            .0
            .iter()
            .map(|c| (c * Rat::from_integer(l.clone())).to_integer())
            .collect();
        let lead = ints[deg].clone();
        // h(y) = lead^(deg-1) g(y / lead) is monic with integer coefficients;
        // its integer roots are lead * (rational roots of g).
        let mut h = vec![BigInt::zero(); deg + 1];
        let mut p = BigInt::one();
        for i in (0..deg).rev() {
            h[i] = &ints[i] * &p;
            p *= &lead;
        }
        h[deg] = BigInt::one();
        let hp = UPoly::new(h.iter().map(|c| Rat::from_integer(c.clone())).collect());
        let roots: Vec<Rat> = integer_roots(&hp)
            .into_iter()
            .map(|y| Rat::new(y, lead.clone()))
            .collect();
        let mut roots = roots;
        roots.sort();
        let complete = roots.len() == deg;
        (roots, complete)
    }

    pub fn to_string_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                k => format!("{var}^{k}"),
            };
            parts.push((c.clone(), mono));
        }
        crate::poly::join_terms(parts)
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_var("T"))
    }
}

/// Sturm sequence of a squarefree polynomial.
fn sturm_sequence(p: &UPoly) -> Vec<UPoly> {
    let mut seq = vec![p.clone(), p.derivative()];
    loop {
        let n = seq.len();
        if seq[n - 1].is_zero() {
            seq.pop();
            break;
        }
        let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
        if r.is_zero() {
            break;
        }
        seq.push(r.neg());
    }
    seq
}

fn sign_changes(seq: &[UPoly], x: &Rat) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in seq {
        let v = p.eval(x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            0
        };
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Integer roots of a monic squarefree polynomial with integer coefficients,
/// located by Sturm bisection on integer endpoints.
fn integer_roots(p: &UPoly) -> Vec<BigInt> {
    let bound = p
        .0
        .iter()
        .take(p.0.len() - 1)
        .map(|c| c.abs().to_integer())
        .max()
        .unwrap_or_else(BigInt::zero)
        + BigInt::one();
    let seq = sturm_sequence(p);
    let count = |a: &BigInt, b: &BigInt| {
        sign_changes(&seq, &Rat::from_integer(a.clone()))
            - sign_changes(&seq, &Rat::from_integer(b.clone()))
    };
    let mut roots = Vec::new();
    // intervals (lo, hi] containing at least one real root
    let mut stack = vec![(-&bound - BigInt::one(), bound.clone())];
    while let Some((lo, hi)) = stack.pop() {
        if count(&lo, &hi) == 0 {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if p.eval(&Rat::from_integer(hi.clone())).is_zero() {
                roots.push(hi);
            }
            continue;
        }
        let mid: BigInt = (&lo + &hi).div_floor(&BigInt::from(2));
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots
}

/// Characteristic polynomial `det(T I - A)` by the Faddeev-LeVerrier
/// recurrence.
pub fn char_poly(a: &Matrix) -> UPoly {
    let n = a.rows();
    assert_eq!(n, a.cols());
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = Rat::one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        m = a.mul(&m).add(&Matrix::identity(n).scale(&coeffs[n - k + 1]));
        let am = a.mul(&m);
        coeffs[n - k] = -am.trace() / Rat::from_integer(BigInt::from(k));
    }
    UPoly::new(coeffs)
}

/// Minimal polynomial of a square matrix: least common multiple of the
/// minimal polynomials of the standard basis vectors.
pub fn minimal_polynomial(a: &Matrix) -> UPoly {
    let n = a.rows();
    let mut acc = UPoly::one();
    for i in 0..n {
        let e = crate::linalg::unit_vec(n, i);
        // skip vectors already killed by the current lcm
        if crate::linalg::is_zero_vec(&acc.eval_matrix_vec(a, &e)) {
            continue;
        }
        acc = acc.lcm(&vector_minimal_polynomial(a, &e));
    }
    acc
}

impl UPoly {
    /// `p(A) v` without forming `p(A)`.
    pub fn eval_matrix_vec(&self, a: &Matrix, v: &[Rat]) -> Vec<Rat> {
        let mut acc = vec![Rat::zero(); v.len()];
        for c in self.0.iter().rev() {
            acc = a.mul_vec(&acc);
            if !c.is_zero() {
                for (x, y) in acc.iter_mut().zip(v) {
                    *x += c * y;
                }
            }
        }
        acc
    }
}

/// Smallest monic `p` with `p(A) v = 0`.
fn vector_minimal_polynomial(a: &Matrix, v: &[Rat]) -> UPoly {
    let n = v.len();
    // echelon rows (vector | coefficient record), pivot column per row
    let mut basis: Vec<(Vec<Rat>, Vec<Rat>, usize)> = Vec::new();
    let mut cur = v.to_vec();
    for k in 0..=n {
        let mut vec_part = cur.clone();
        let mut rec = vec![Rat::zero(); k + 1];
        rec[k] = Rat::one();
        for (bv, brec, piv) in &basis {
            let f = vec_part[*piv].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in vec_part.iter_mut().zip(bv) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (i, y) in brec.iter().enumerate() {
                if !y.is_zero() {
                    rec[i] -= &f * y;
                }
            }
        }
        match vec_part.iter().position(|x| !x.is_zero()) {
            None => return UPoly::new(rec).monic(),
            Some(piv) => {
                let inv = vec_part[piv].recip();
                for x in vec_part.iter_mut() {
                    *x *= &inv;
                }
                for x in rec.iter_mut() {
                    *x *= &inv;
                }
                basis.push((vec_part, rec, piv));
            }
        }
        cur = a.mul_vec(&cur);
    }
    unreachable!("Krylov sequence longer than the dimension")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    fn p(c: &[i64]) -> UPoly {
        UPoly::new(c.iter().map(|&x| rat(x)).collect())
    }

    #[test]
    fn division_and_gcd() {
        // (T-1)(T+2) and (T-1)(T-3)
        let a = p(&[-2, 1, 1]);
        let b = p(&[3, -4, 1]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        let (q, r) = a.mul(&b).div_rem(&b);
        assert_eq!(q, a);
        assert!(r.is_zero());
    }

    #[test]
    fn squarefree_and_power_of_t() {
        assert!(p(&[0, 1]).is_squarefree());
        assert!(!p(&[0, 0, 1]).is_squarefree());
        assert!(p(&[0, 0, 3]).is_power_of_t());
        assert!(!p(&[1, 1]).is_power_of_t());
        assert!(!p(&[5]).is_power_of_t());
    }

    #[test]
    fn rational_roots_found() {
        // 6T^3 - 7T^2 + 1 = (T-1)(2T-1)(3T+1)
        let (roots, complete) = p(&[1, 0, -7, 6]).rational_roots();
        assert!(complete);
        assert_eq!(roots, vec![ratio(-1, 3), ratio(1, 2), rat(1)]);
        // T^2 - 2 has no rational roots
        let (roots, complete) = p(&[-2, 0, 1]).rational_roots();
        assert!(roots.is_empty());
        assert!(!complete);
        // (T^2 + 1)(T - 4)^2
        let (roots, complete) = p(&[1, 0, 1]).mul(&p(&[-4, 1])).mul(&p(&[-4, 1])).rational_roots();
        assert_eq!(roots, vec![rat(4)]);
        assert!(!complete);
        let (roots, complete) = p(&[0, 0, 1]).rational_roots();
        assert_eq!(roots, vec![rat(0)]);
        assert!(complete);
    }

    #[test]
    fn characteristic_and_minimal() {
        let a = Matrix::from_i64(&[vec![2, 1, 0], vec![0, 2, 0], vec![0, 0, 3]]);
        // (T-2)^2 (T-3)
        assert_eq!(char_poly(&a), p(&[-2, 1]).mul(&p(&[-2, 1])).mul(&p(&[-3, 1])));
        assert_eq!(
            minimal_polynomial(&a),
            p(&[-2, 1]).mul(&p(&[-2, 1])).mul(&p(&[-3, 1]))
        );
        let d = Matrix::from_i64(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(minimal_polynomial(&d), p(&[-2, 1]));
        let z = Matrix::zeros(3, 3);
        assert_eq!(minimal_polynomial(&z), p(&[0, 1]));
        let n = Matrix::from_i64(&[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]);
        assert_eq!(minimal_polynomial(&n), p(&[0, 0, 0, 1]));
        assert!(char_poly(&n).is_power_of_t());
    }
}
