//! Multivariate gcd over `Q` by recursion on the main variable: split off the
//! content (gcd of coefficients, one variable fewer) and run a primitive
//! pseudo-remainder sequence on the primitive parts.

use crate::error::{Error, Result};

use super::MPoly;

/// Canonical gcd of a list of polynomials.
pub fn poly_gcd(ps: &[MPoly]) -> Result<MPoly> {
    let mut it = ps.iter().filter(|p| !p.is_zero());
    let Some(first) = it.next() else {
        return Err(Error::ZeroGcd);
    };
    let mut g = first.canonical();
    for p in it {
        if g.is_constant() {
            break;
        }
        g = poly_gcd2(&g, p);
    }
    Ok(g)
}

/// Canonical gcd of two polynomials; `gcd(0, 0) = 0`.
pub fn poly_gcd2(a: &MPoly, b: &MPoly) -> MPoly {
    let n = a.nvars();
    if a.is_zero() {
        return b.canonical();
    }
    if b.is_zero() {
        return a.canonical();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(n);
    }
    // cheap exits on divisibility
    if a.num_terms() <= b.num_terms() && a.divides(b) {
        return a.canonical();
    }
    if b.divides(a) {
        return b.canonical();
    }
    let va = a.support_vars();
    let vb = b.support_vars();
    // a variable occurring in only one side drops out through the content
    if let Some(&v) = va.iter().find(|v| !vb.contains(v)) {
        return gcd_with_coeffs(b, a, v);
    }
    if let Some(&v) = vb.iter().find(|v| !va.contains(v)) {
        return gcd_with_coeffs(a, b, v);
    }
    let v = *va.iter().max_by_key(|&&v| a.degree_in(v).min(b.degree_in(v))).unwrap();
    let ca = content(a, v);
    let cb = content(b, v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = poly_gcd2(&ca, &cb);
    let g = primitive_prs(pa, pb, v);
    c.mul(&g).canonical()
}

/// `gcd(a, b)` when `v` does not occur in `a`.
fn gcd_with_coeffs(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let mut g = a.canonical();
    for c in b.to_univariate(v) {
        if g.is_constant() {
            break;
        }
        if !c.is_zero() {
            g = poly_gcd2(&g, &c);
        }
    }
    g
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `v`.
fn content(p: &MPoly, v: usize) -> MPoly {
    let n = p.nvars();
    let mut g = MPoly::zero(n);
    for c in p.to_univariate(v) {
        if c.is_zero() {
            continue;
        }
        g = poly_gcd2(&g, &c);
        if g.is_constant() {
            return MPoly::one(n);
        }
    }
    g
}

fn primitive_part(p: &MPoly, v: usize) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    p.div_exact(&content(p, v)).expect("content divides").canonical()
}

/// Pseudo-remainder of `a` by `b` in the variable `v`.
fn prem(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let n = a.nvars();
    let db = b.degree_in(v);
    let bu = b.to_univariate(v);
    let lb = bu[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.to_univariate(v)[dr as usize].clone();
        let mut shift = vec![0u16; n];
        shift[v] = dr - db;
        let xs = MPoly::from_terms(
            n,
            [(super::Monomial::from_exponents(shift), crate::linalg::rat(1))],
        );
        r = r.mul(&lb).sub(&lr.mul(&xs).mul(b));
    }
    r
}

fn primitive_prs(a: MPoly, b: MPoly, v: usize) -> MPoly {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) {
        (a, b)
    } else {
        (b, a)
    };
    loop {
        if b.is_zero() {
            return primitive_part(&a, v);
        }
        if b.degree_in(v) == 0 {
            return MPoly::one(a.nvars());
        }
        let r = prem(&a, &b, v);
        a = b;
        b = primitive_part(&r, v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn x(i: usize) -> MPoly {
        MPoly::var(4, i)
    }

    #[test]
    fn common_variable() {
        let g = poly_gcd(&[x(0).mul(&x(2)), x(1).mul(&x(2))]).unwrap();
        assert_eq!(g, x(2));
    }

    #[test]
    fn powers() {
        let g = poly_gcd(&[x(2).pow(2), x(2).pow(3)]).unwrap();
        assert_eq!(g, x(2).pow(2));
    }

    #[test]
    fn zero_inputs() {
        assert_eq!(poly_gcd(&[MPoly::zero(2)]), Err(Error::ZeroGcd));
        assert_eq!(poly_gcd(&[MPoly::zero(4), x(1).scale(&rat(-3))]).unwrap(), x(1));
    }

    #[test]
    fn hidden_common_factor() {
        let f = x(0).add(&x(1).mul(&x(3))).sub(&x(2).pow(2));
        let a = f.mul(&x(0).sub(&x(3)).pow(2));
        let b = f.mul(&x(1).add(&MPoly::constant(4, rat(2))).mul(&x(0)));
        let c = f.pow(2).mul(&x(3));
        let g = poly_gcd(&[a, b, c]).unwrap();
        assert_eq!(g, f.canonical());
    }

    #[test]
    fn coprime_gives_one() {
        let a = x(0).pow(2).add(&x(1).pow(2));
        let b = x(0).mul(&x(1)).add(&MPoly::one(4));
        assert_eq!(poly_gcd2(&a, &b), MPoly::one(4));
    }
}
