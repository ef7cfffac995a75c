//! Analysis settings and the seeded sampler.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Probabilistic,
    Symbolic,
    Auto,
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "probabilistic" => Ok(Self::Probabilistic),
            "symbolic" => Ok(Self::Symbolic),
            "auto" => Ok(Self::Auto),
            _ => Err(Error::InvalidParams(format!("unknown mode {s:?}"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Probabilistic => "probabilistic",
            Self::Symbolic => "symbolic",
            Self::Auto => "auto",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalyzeConfig {
    pub seed: u64,
    /// Independent random points per generic claim.
    pub trials: usize,
    /// Coordinates are drawn uniformly from `[-bound, bound]`.
    pub bound: u64,
    pub mode: Mode,
    /// Degree bound for the semi-invariant search.
    pub degree: usize,
    pub symbolic_index_max_dim: usize,
    /// `Auto` switches to the symbolic index up to this dimension.
    pub auto_symbolic_max_dim: usize,
    pub contact_poly_max_dim: usize,
    pub fundamental_max_dim: usize,
    pub fundamental_max_minors: usize,
    pub pfaffian_size_limit: usize,
    /// Largest intermediate polynomial (in terms) in symbolic elimination.
    pub term_budget: usize,
    /// Minimal polynomials of `ad(u)` are skipped above this dimension.
    pub classify_max_dim: usize,
    /// Largest `dim S^d(q)` the semi-invariant search will handle.
    pub semiinv_budget: usize,
}

impl Default for AnalyzeConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 4,
            bound: 1 << 20,
            mode: Mode::Auto,
            degree: 4,
            symbolic_index_max_dim: 20,
            auto_symbolic_max_dim: 12,
            contact_poly_max_dim: 11,
            fundamental_max_dim: 11,
            fundamental_max_minors: 500,
            pfaffian_size_limit: crate::poly::DEFAULT_SYMBOLIC_PFAFFIAN_LIMIT,
            term_budget: 50_000,
            classify_max_dim: 40,
            semiinv_budget: 1000,
        }
    }
}

impl AnalyzeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::InvalidParams("trials must be at least 1".into()));
        }
        if self.bound < 2 {
            return Err(Error::InvalidParams("coordinate bound must be at least 2".into()));
        }
        if self.degree < 1 {
            return Err(Error::InvalidParams("degree bound must be at least 1".into()));
        }
        Ok(())
    }

    pub fn sampler(&self, tag: &str) -> Sampler {
        Sampler::new(derive_seed(self.seed, tag), self.bound)
    }

    /// Schwartz-Zippel bound `(deg / (2M + 1))^trials` for a non-zero
    /// polynomial of degree `deg` vanishing at every sampled point.
    pub fn failure_bound(&self, deg: usize) -> Rat {
        let single = Rat::new(BigInt::from(deg), BigInt::from(2 * self.bound + 1));
        num_traits::pow(single, self.trials)
    }
}

/// Mixes a base seed with a tag (FNV-1a followed by a SplitMix64 finalizer)
/// so that parallel cells draw independent deterministic streams.
pub fn derive_seed(seed: u64, tag: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325 ^ seed;
    for b in tag.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x0100_0000_01b3);
    }
    h = h.wrapping_add(0x9e37_79b9_7f4a_7c15);
    h = (h ^ (h >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    h = (h ^ (h >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    h ^ (h >> 31)
}

/// Uniform integer points in a box.
pub struct Sampler {
    rng: ChaCha8Rng,
    bound: i64,
}

impl Sampler {
    pub fn new(seed: u64, bound: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
            bound: bound.min(i64::MAX as u64 / 2) as i64,
        }
    }

    pub fn point(&mut self, n: usize) -> Vec<Rat> {
        (0..n)
            .map(|_| Rat::from_integer(BigInt::from(self.rng.gen_range(-self.bound..=self.bound))))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    #[test]
    fn deterministic_streams() {
        let c = AnalyzeConfig::default();
        assert_eq!(c.sampler("a").point(5), c.sampler("a").point(5));
        assert_ne!(c.sampler("a").point(5), c.sampler("b").point(5));
        let p = Sampler::new(1, 3).point(200);
        assert!(p.iter().all(|x| x.abs() <= Rat::from_integer(3.into())));
    }

    #[test]
    fn bounds() {
        let c = AnalyzeConfig {
            bound: 2,
            trials: 2,
            ..Default::default()
        };
        assert_eq!(c.failure_bound(3), crate::linalg::ratio(9, 25));
        assert!(AnalyzeConfig { trials: 0, ..Default::default() }.validate().is_err());
        assert!(AnalyzeConfig { bound: 1, ..Default::default() }.validate().is_err());
        assert!(AnalyzeConfig { degree: 0, ..Default::default() }.validate().is_err());
    }
}
