//! Univariate and multivariate polynomials over `Q`, multivariate gcd and
//! symbolic Pfaffians.

mod gcd;
mod mpoly;
mod symbolic;
mod upoly;

pub use gcd::{poly_gcd, poly_gcd2};
pub use mpoly::{MPoly, Monomial};
pub use symbolic::{symbolic_pfaffian, symbolic_rank, PfaffianMemo, DEFAULT_SYMBOLIC_PFAFFIAN_LIMIT};
pub use upoly::{char_poly, minimal_polynomial, UPoly};

use num_traits::{One, Signed};

use crate::linalg::{format_rat, Rat};

/// Joins `(coefficient, monomial)` pairs into `a*m + b*n - ...`. An empty
/// monomial string marks the constant term.
pub(crate) fn join_terms(parts: Vec<(Rat, String)>) -> String {
    if parts.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (c, mono)) in parts.into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        match (k, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        if mono.is_empty() {
            out.push_str(&format_rat(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format_rat(&a));
            out.push('*');
            out.push_str(&mono);
        }
    }
    out
}
