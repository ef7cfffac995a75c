//! Exact rational linear algebra.
//!
//! Everything here works over `Q` with arbitrary-precision integers. Rank and
//! kernel computations clear denominators row by row and run fraction-free
//! (Bareiss) elimination over `Z`; a word-sized modular rank is available as a
//! fast lower-bound certificate.

mod bareiss;
mod matrix;
pub mod modp;
mod multimod;
mod pfaffian;

pub use bareiss::{determinant, rank, rank_kernel};
pub use matrix::{rref, Matrix};
pub use pfaffian::{pfaffian, SkewMat};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number. Always reduced with a positive denominator.
pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rat::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rat::from_integer),
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn unit_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec![Rat::zero(); n];
    v[i] = Rat::one();
    v
}

/// Least common multiple of the denominators of `v`.
pub fn denom_lcm(v: &[Rat]) -> BigInt {
    v.iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Scales `v` to a primitive integer vector whose first non-zero entry is
/// positive. Zero vectors map to zero vectors.
pub fn primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    let l = denom_lcm(v);
    let mut ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rat::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in ints.iter_mut() {
            *x /= &g;
        }
        if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
            if first.is_negative() {
                for x in ints.iter_mut() {
                    *x = -&*x;
                }
            }
        }
    }
    ints
}

/// Scientific-notation rendering of a non-negative rational, computed with
/// integer arithmetic only (three significant digits).
pub fn sci_string(r: &Rat) -> String {
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let r = r.abs();
    let num = r.numer().clone();
    let den = r.denom().clone();
    // exponent e with 10^e <= r < 10^(e+1)
    let digits = |x: &BigInt| x.to_string().len() as i64;
    let mut e = digits(&num) - digits(&den);
    let ten = BigInt::from(10);
    let pow10 = |k: i64| -> Rat {
        if k >= 0 {
            Rat::from_integer(num_traits::pow(ten.clone(), k as usize))
        } else {
            Rat::new(BigInt::one(), num_traits::pow(ten.clone(), (-k) as usize))
        }
    };
    if r < pow10(e) {
        e -= 1;
    }
    let mantissa = &r / pow10(e) * Rat::from_integer(BigInt::from(100));
    let mut m = mantissa.round().to_integer();
    if m >= BigInt::from(1000) {
        m /= 10;
        e += 1;
    }
    let ms = m.to_string();
    format!(
        "{}{}.{}e{}",
        if neg { "-" } else { "" },
        &ms[..1],
        &ms[1..],
        e
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_text_roundtrip() {
        for s in ["0", "3", "-7", "1/2", "-5/3"] {
            assert_eq!(format_rat(&parse_rat(s).unwrap()), s);
        }
        assert_eq!(format_rat(&parse_rat("4/2").unwrap()), "2");
        assert!(parse_rat("1/0").is_none());
        assert!(parse_rat("x").is_none());
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![ratio(-1, 2), ratio(1, 3), rat(0)];
        assert_eq!(
            primitive_integer(&v),
            vec![BigInt::from(3), BigInt::from(-2), BigInt::from(0)]
        );
    }

    #[test]
    fn scientific() {
        assert_eq!(sci_string(&rat(1)), "1.00e0");
        assert_eq!(sci_string(&ratio(1, 3)), "3.33e-1");
        assert_eq!(sci_string(&rat(12345)), "1.23e4");
        assert_eq!(sci_string(&ratio(999_9, 10)), "1.00e3");
    }
}
