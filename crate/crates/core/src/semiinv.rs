//! Symmetric semi-invariants of bounded degree, their weights, the minimal
//! weight relation, the canonical truncation and a Jacobian test for
//! algebraic independence.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::config::{AnalyzeConfig, Sampler};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Subspace};
use crate::linalg::{format_rat, primitive_integer, rank_kernel, Matrix, Rat};
use crate::poly::{char_poly, MPoly, Monomial};

/// Homogeneous `F` with `xi . F = weight(xi) F` for every basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemiInvariant {
    pub poly: MPoly,
    /// Values of the character on the basis; zero on `[q, q]`.
    pub weight: Vec<Rat>,
    pub degree: usize,
}

impl SemiInvariant {
    pub fn is_invariant(&self) -> bool {
        self.weight.iter().all(Zero::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSpace {
    pub degree: usize,
    pub weight: Vec<Rat>,
    pub dim: usize,
}

/// Outcome of the search up to `degree_bound`.
#[derive(Clone, Debug)]
pub struct SemiInvariantSearch {
    pub degree_bound: usize,
    /// New generators, i.e. not in the span of products of earlier ones.
    pub generators: Vec<SemiInvariant>,
    /// Every non-zero joint eigenspace found, including products.
    pub spaces: Vec<WeightSpace>,
}

impl SemiInvariantSearch {
    /// A non-constant invariant exists in degree at most the bound.
    pub fn has_regular_invariant(&self) -> bool {
        self.spaces.iter().any(|s| s.weight.iter().all(Zero::is_zero))
    }
}

fn monomials(n: usize, d: usize) -> Vec<Monomial> {
    fn rec(n: usize, d: usize, pos: usize, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
        if pos + 1 == n {
            cur[pos] = d as u16;
            out.push(Monomial::from_exponents(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for k in (0..=d).rev() {
            cur[pos] = k as u16;
            rec(n, d - k, pos + 1, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, 0, &mut vec![0; n], &mut out);
    }
    out
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// Action of `x_k` on polynomials: the derivation extending `ad(x_k)`.
pub fn act_basis(q: &LieAlgebra, k: usize, f: &MPoly) -> MPoly {
    let n = q.dim();
    let mut out = MPoly::zero(n);
    for j in 0..n {
        let br = q.bracket_basis(k, j);
        if br.is_empty() || f.degree_in(j) == 0 {
            continue;
        }
        let mut coeffs = vec![Rat::zero(); n];
        for (m, c) in br {
            coeffs[*m] = c.clone();
        }
        out = out.add(&f.derivative(j).mul(&MPoly::linear(&coeffs)));
    }
    out
}

/// `xi . F` for a general element `xi`.
pub fn act(q: &LieAlgebra, xi: &[Rat], f: &MPoly) -> MPoly {
    let mut out = MPoly::zero(q.dim());
    for (k, c) in xi.iter().enumerate() {
        if !c.is_zero() {
            out = out.add(&act_basis(q, k, f).scale(c));
        }
    }
    out
}

/// Character of `f` if it is a semi-invariant, checked exactly on every
/// basis vector.
pub fn weight_of(q: &LieAlgebra, f: &MPoly) -> Option<Vec<Rat>> {
    let (lead, lc) = f.leading()?;
    (0..q.dim())
        .map(|k| {
            let g = act_basis(q, k, f);
            let lambda = g.coeff(lead) / lc;
            (g == f.scale(&lambda)).then_some(lambda)
        })
        .collect()
}

struct Degree {
    monos: Vec<Monomial>,
    index: BTreeMap<Monomial, usize>,
}

impl Degree {
    fn new(n: usize, d: usize) -> Self {
        let monos = monomials(n, d);
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Self { monos, index }
    }

    fn to_vec(&self, f: &MPoly) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.monos.len()];
        for (m, c) in f.terms() {
            v[self.index[m]] = c.clone();
        }
        v
    }

    fn to_poly(&self, n: usize, v: &[Rat]) -> MPoly {
        MPoly::from_terms(
            n,
            self.monos.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Matrix of the action of `xi` on `S^d`.
    fn action(&self, q: &LieAlgebra, xi: &[Rat]) -> Matrix {
        let n = q.dim();
        let size = self.monos.len();
        let mut m = Matrix::zeros(size, size);
        for (c, mono) in self.monos.iter().enumerate() {
            let img = act(q, xi, &MPoly::from_terms(n, [(mono.clone(), Rat::from_integer(1.into()))]));
            for (mm, x) in img.terms() {
                m[(self.index[mm], c)] = x.clone();
            }
        }
        m
    }
}

/// Joint eigenspaces of commuting operators restricted to the span of
/// `basis`; each space is returned with its eigenvalues.
fn joint_eigenspaces(ops: &[Matrix], basis: Vec<Vec<Rat>>) -> Result<Vec<(Vec<Rat>, Vec<Vec<Rat>>)>> {
    let mut spaces: Vec<(Vec<Rat>, Vec<Vec<Rat>>)> = vec![(Vec::new(), basis)];
    for a in ops {
        let mut next = Vec::new();
        for (vals, w) in spaces {
            if w.is_empty() {
                continue;
            }
            let wsp = Subspace::span(a.rows(), w.clone());
            // matrix of a on w in the echelon coordinates of wsp
            let cols: Vec<Vec<Rat>> = wsp
                .basis()
                .iter()
                .map(|v| wsp.coords(&a.mul_vec(v)).expect("commuting operators preserve the space"))
                .collect();
            let k = cols.len();
            let r = Matrix::from_fn(k, k, |i, j| cols[j][i].clone());
            let cp = char_poly(&r);
            let (roots, complete) = cp.rational_roots();
            if !complete {
                return Err(Error::IrrationalWeight(cp.to_string_var("T")));
            }
            for lambda in roots {
                let shifted = Matrix::from_fn(k, k, |i, j| {
                    if i == j {
                        &r[(i, j)] - &lambda
                    } else {
                        r[(i, j)].clone()
                    }
                });
                let (_, ker) = rank_kernel(&shifted);
                let vecs: Vec<Vec<Rat>> = ker.iter().map(|c| wsp.combine(c)).collect();
                let mut v2 = vals.clone();
                v2.push(lambda);
                next.push((v2, vecs));
            }
        }
        spaces = next;
    }
    Ok(spaces.into_iter().filter(|(_, w)| !w.is_empty()).collect())
}

/// All products of generators with total degree `d`.
fn products(gens: &[SemiInvariant], d: usize, n: usize) -> Vec<(MPoly, Vec<Rat>)> {
    fn rec(gens: &[SemiInvariant], start: usize, d: usize, cur: (MPoly, Vec<Rat>), out: &mut Vec<(MPoly, Vec<Rat>)>) {
        if d == 0 {
            out.push(cur);
            return;
        }
        for (i, g) in gens.iter().enumerate().skip(start) {
            if g.degree <= d {
                let w: Vec<Rat> = cur.1.iter().zip(&g.weight).map(|(a, b)| a + b).collect();
                rec(gens, i, d - g.degree, (cur.0.mul(&g.poly), w), out);
            }
        }
    }
    let mut out = Vec::new();
    let w0 = vec![Rat::zero(); gens.first().map_or(0, |g| g.weight.len())];
    rec(gens, 0, d, (MPoly::one(n), w0), &mut out);
    out
}

/// Semi-invariants of degree `1..=max_degree`: polynomials killed by
/// `[q, q]`, split into joint eigenspaces of a complement.
pub fn semi_invariants_up_to_degree(q: &LieAlgebra, max_degree: usize, cfg: &AnalyzeConfig) -> Result<SemiInvariantSearch> {
    if max_degree < 1 {
        return Err(Error::InvalidParams("degree bound must be at least 1".into()));
    }
    let n = q.dim();
    let size = binomial(n + max_degree - 1, max_degree);
    if size > cfg.semiinv_budget as u128 {
        return Err(Error::Budget(format!(
            "S^{max_degree} of a {n}-dimensional algebra has dimension {size}"
        )));
    }
    let (derived, _) = q.derived_and_center();
    let complement: Vec<Vec<Rat>> = derived
        .complement_coords()
        .into_iter()
        .map(|i| crate::linalg::unit_vec(n, i))
        .collect();
    let mut gens: Vec<SemiInvariant> = Vec::new();
    let mut spaces = Vec::new();
    for d in 1..=max_degree {
        let deg = Degree::new(n, d);
        let size = deg.monos.len();
        let mut stacked: Vec<Vec<Rat>> = Vec::new();
        for xi in derived.basis() {
            stacked.extend(deg.action(q, xi).row_vecs());
        }
        let kd = if stacked.is_empty() {
            (0..size).map(|i| crate::linalg::unit_vec(size, i)).collect()
        } else {
            rank_kernel(&Matrix::from_rows(stacked)).1
        };
        if kd.is_empty() {
            continue;
        }
        let ops: Vec<Matrix> = complement.iter().map(|c| deg.action(q, c)).collect();
        let found = joint_eigenspaces(&ops, kd)?;
        let prods = products(&gens, d, n);
        let mut new_gens = Vec::new();
        for (_, vecs) in found {
            let weight = weight_of(q, &deg.to_poly(n, &vecs[0]))
                .ok_or_else(|| Error::Other("eigenvector is not a semi-invariant".into()))?;
            spaces.push(WeightSpace {
                degree: d,
                weight: weight.clone(),
                dim: vecs.len(),
            });
            let mut span: Vec<Vec<Rat>> = prods
                .iter()
                .filter(|(_, w)| *w == weight)
                .map(|(p, _)| deg.to_vec(p))
                .collect();
            let mut rank = Subspace::span(size, span.clone()).dim();
            for v in vecs {
                span.push(v.clone());
                let r = Subspace::span(size, span.clone()).dim();
                if r > rank {
                    rank = r;
                    let poly = deg.to_poly(n, &v).canonical();
                    new_gens.push(SemiInvariant {
                        poly,
                        weight: weight.clone(),
                        degree: d,
                    });
                } else {
                    span.pop();
                }
            }
        }
        gens.extend(new_gens);
    }
    for g in &gens {
        debug_assert_eq!(weight_of(q, &g.poly).as_ref(), Some(&g.weight));
        debug_assert!(derived.basis().iter().all(|x| crate::linalg::dot(x, &g.weight).is_zero()));
    }
    Ok(SemiInvariantSearch {
        degree_bound: max_degree,
        generators: gens,
        spaces,
    })
}

/// Minimal integer relation `sum c_i chi_i = sum c_j chi_j` between the
/// weights, with the generator it produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightRelation {
    /// One coefficient per input semi-invariant; positive entries form the
    /// left side, negative ones the right side.
    pub coefficients: Vec<BigInt>,
    pub generator: Generator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    /// All coefficients of one sign: a polynomial invariant.
    Regular(MPoly),
    /// `numerator / denominator`, a rational invariant.
    Rational { numerator: MPoly, denominator: MPoly },
}

fn product_power(sis: &[SemiInvariant], c: &[BigInt], positive: bool, n: usize) -> MPoly {
    let mut p = MPoly::one(n);
    for (s, k) in sis.iter().zip(c) {
        if k.is_positive() == positive && !k.is_zero() {
            let e: u32 = k.abs().try_into().expect("small exponent");
            p = p.mul(&s.poly.pow(e));
        }
    }
    p
}

/// Integer kernel of the weight matrix, content one. The orientation puts
/// the factor of larger degree in the numerator; on a tie the first
/// non-zero coefficient is positive.
pub fn weight_relation_and_generator(sis: &[SemiInvariant]) -> Result<WeightRelation> {
    let m = sis.len();
    if m == 0 {
        return Err(Error::NoRelation("no semi-invariants".into()));
    }
    let n = sis[0].poly.nvars();
    let cols = sis[0].weight.len();
    let w = Matrix::from_fn(cols, m, |r, c| sis[c].weight[r].clone());
    let (_, ker) = rank_kernel(&w);
    let Some(first) = ker.first() else {
        return Err(Error::NoRelation(format!("{m} weights are linearly independent")));
    };
    let mut c = primitive_integer(first);
    let deg = |c: &[BigInt], positive: bool| -> BigInt {
        sis.iter()
            .zip(c)
            .filter(|(_, k)| k.is_positive() == positive && !k.is_zero())
            .map(|(s, k)| k.abs() * BigInt::from(s.degree))
            .sum()
    };
    if deg(&c, false) > deg(&c, true) {
        for k in c.iter_mut() {
            *k = -&*k;
        }
    }
    let generator = if c.iter().all(|k| !k.is_negative()) {
        Generator::Regular(product_power(sis, &c, true, n))
    } else {
        Generator::Rational {
            numerator: product_power(sis, &c, true, n),
            denominator: product_power(sis, &c, false, n),
        }
    };
    Ok(WeightRelation {
        coefficients: c,
        generator,
    })
}

/// `q_tr`: common kernel of the weights found up to the degree bound.
#[derive(Clone, Debug)]
pub struct TruncationResult {
    pub subalgebra: Subspace,
    /// Number of generators found.
    pub m: usize,
    pub degree_bound: usize,
}

pub fn canonical_truncation(q: &LieAlgebra, max_degree: usize, cfg: &AnalyzeConfig) -> Result<TruncationResult> {
    let search = semi_invariants_up_to_degree(q, max_degree, cfg)?;
    let weights = Subspace::span(q.dim(), search.generators.iter().map(|g| g.weight.clone()).collect());
    let sub = weights.annihilator();
    let (derived, _) = q.derived_and_center();
    if !sub.is_ideal(q) || !sub.contains_space(&derived) {
        return Err(Error::Other("truncation is not an ideal with abelian quotient".into()));
    }
    Ok(TruncationResult {
        subalgebra: sub,
        m: search.generators.len(),
        degree_bound: max_degree,
    })
}

/// Full rank of the Jacobian at one of the sampled points.
pub fn algebraic_independence(polys: &[MPoly], cfg: &AnalyzeConfig, rng: &mut Sampler) -> bool {
    let Some(n) = polys.first().map(MPoly::nvars) else {
        return true;
    };
    if polys.len() > n {
        return false;
    }
    let jac: Vec<Vec<MPoly>> = polys.iter().map(|p| (0..n).map(|v| p.derivative(v)).collect()).collect();
    (0..cfg.trials).any(|_| {
        let pt = rng.point(n);
        let m = Matrix::from_fn(polys.len(), n, |i, j| jac[i][j].eval(&pt));
        m.rank() == polys.len()
    })
}

/// Exponents `a_i` with `f = c * prod g_i^{a_i}`, found by exact division.
pub fn monomial_in(f: &MPoly, gens: &[MPoly]) -> Option<Vec<u32>> {
    if f.is_zero() {
        return None;
    }
    let mut rest = f.clone();
    let mut exps = vec![0u32; gens.len()];
    for (g, e) in gens.iter().zip(exps.iter_mut()) {
        if g.is_constant() {
            continue;
        }
        while let Some(r) = rest.div_exact(g) {
            rest = r;
            *e += 1;
        }
    }
    rest.is_constant().then_some(exps)
}

#[derive(Clone, Debug, Serialize)]
pub struct SemiInvariantEntry {
    pub poly: String,
    pub degree: usize,
    pub weight: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemiInvariantReport {
    pub degree_bound: usize,
    pub generators: Vec<SemiInvariantEntry>,
    pub relation: Option<Vec<String>>,
    /// "regular" or "rational".
    pub generator_kind: Option<String>,
    pub generator: Option<String>,
    pub regular_invariant_found: bool,
    pub truncation_dim: usize,
    pub algebraically_independent: bool,
    /// `f` as a product of generators, when it is one.
    pub f_exponents: Option<Vec<u32>>,
}

pub fn report(q: &LieAlgebra, f: Option<&MPoly>, cfg: &AnalyzeConfig) -> Result<SemiInvariantReport> {
    let search = semi_invariants_up_to_degree(q, cfg.degree, cfg)?;
    let labels = q.labels();
    let rel = weight_relation_and_generator(&search.generators).ok();
    let (kind, gen) = match rel.as_ref().map(|r| &r.generator) {
        Some(Generator::Regular(p)) => (Some("regular".to_string()), Some(p.to_string_with(labels))),
        Some(Generator::Rational { numerator, denominator }) => (
            Some("rational".to_string()),
            Some(format!("({}) / ({})", numerator.to_string_with(labels), denominator.to_string_with(labels))),
        ),
        None => (None, None),
    };
    let weights = Subspace::span(q.dim(), search.generators.iter().map(|g| g.weight.clone()).collect());
    let polys: Vec<MPoly> = search.generators.iter().map(|g| g.poly.clone()).collect();
    let mut rng = cfg.sampler("semiinv");
    Ok(SemiInvariantReport {
        degree_bound: search.degree_bound,
        generators: search
            .generators
            .iter()
            .map(|g| SemiInvariantEntry {
                poly: g.poly.to_string_with(labels),
                degree: g.degree,
                weight: g.weight.iter().map(format_rat).collect(),
            })
            .collect(),
        relation: rel.map(|r| r.coefficients.iter().map(|c| c.to_string()).collect()),
        generator_kind: kind,
        generator: gen,
        regular_invariant_found: search.has_regular_invariant(),
        truncation_dim: weights.annihilator().dim(),
        algebraically_independent: algebraic_independence(&polys, cfg, &mut rng),
        f_exponents: f.and_then(|f| monomial_in(f, &polys)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coadjoint::{contact_semi_invariant, index};
    use crate::families::{self, sl};
    use crate::linalg::rat;

    fn cfg() -> AnalyzeConfig {
        AnalyzeConfig::default()
    }

    fn borel() -> LieAlgebra {
        families::borel_sl3().unwrap().0
    }

    fn poly(q: &LieAlgebra, terms: &[(i64, &[(&str, u16)])]) -> MPoly {
        let n = q.dim();
        MPoly::from_terms(
            n,
            terms.iter().map(|(c, vs)| {
                let mut e = vec![0u16; n];
                for (l, k) in vs.iter() {
                    e[q.index_of(l).unwrap()] = *k;
                }
                (Monomial::from_exponents(e), rat(*c))
            }),
        )
    }

    #[test]
    fn monomial_count() {
        assert_eq!(monomials(3, 2).len(), 6);
        assert_eq!(monomials(5, 4).len(), 70);
    }

    #[test]
    fn heisenberg_degree_one() {
        let h = families::heisenberg(1).unwrap().0;
        let s = semi_invariants_up_to_degree(&h, 1, &cfg()).unwrap();
        assert_eq!(s.generators.len(), 1);
        assert_eq!(s.generators[0].poly, MPoly::var(3, 2));
        assert!(s.generators[0].is_invariant());
        let r = weight_relation_and_generator(&s.generators).unwrap();
        assert_eq!(r.generator, Generator::Regular(MPoly::var(3, 2)));
        let t = canonical_truncation(&h, 1, &cfg()).unwrap();
        assert_eq!(t.subalgebra.dim(), 3);
    }

    #[test]
    fn borel_generators() {
        let b = borel();
        let s = semi_invariants_up_to_degree(&b, 2, &cfg()).unwrap();
        let z = poly(&b, &[(1, &[("z", 1)])]);
        let h2 = poly(&b, &[(1, &[("h", 1), ("z", 1)]), (3, &[("x", 1), ("y", 1)])]);
        let gens: Vec<MPoly> = s.generators.iter().map(|g| g.poly.clone()).collect();
        assert_eq!(gens, vec![z.clone(), h2.clone()]);
        // chi(h) = 0, chi(h1) = 2, zero on the nilradical
        let chi = vec![rat(0), rat(2), rat(0), rat(0), rat(0)];
        assert!(s.generators.iter().all(|g| g.weight == chi));
        let r = weight_relation_and_generator(&s.generators).unwrap();
        assert_eq!(r.coefficients, vec![BigInt::from(-1), BigInt::from(1)]);
        assert_eq!(
            r.generator,
            Generator::Rational {
                numerator: h2.clone(),
                denominator: z.clone()
            }
        );
        let f = contact_semi_invariant(&b, &cfg()).unwrap();
        assert_eq!(monomial_in(&f, &gens), Some(vec![1, 1]));
        let mut rng = cfg().sampler("i");
        assert!(algebraic_independence(&gens, &cfg(), &mut rng));
        let t = canonical_truncation(&b, 2, &cfg()).unwrap();
        let expect = Subspace::coordinate(5, &[0, 2, 3, 4]);
        assert_eq!(t.subalgebra, expect);
        let qtr = t.subalgebra.to_algebra(&b).unwrap();
        assert_eq!(index(&qtr, &cfg(), &mut rng).unwrap().index, 2);
    }

    #[test]
    fn borel_no_invariant_up_to_four() {
        let s = semi_invariants_up_to_degree(&borel(), 4, &cfg()).unwrap();
        assert!(!s.has_regular_invariant());
        assert_eq!(s.generators.len(), 2);
    }

    #[test]
    fn sl2_casimir() {
        let q = sl(2).unwrap();
        let s = semi_invariants_up_to_degree(&q, 4, &cfg()).unwrap();
        assert_eq!(s.generators.len(), 1);
        let c = &s.generators[0];
        assert_eq!(c.degree, 2);
        assert!(c.is_invariant());
        assert_eq!(c.poly.to_string_with(q.labels()), "h^2 + 4*e*f");
        // weight-zero spaces are powers of the Casimir
        for sp in &s.spaces {
            assert_eq!(sp.dim, 1);
            assert_eq!(sp.degree % 2, 0);
        }
        let r = weight_relation_and_generator(&s.generators).unwrap();
        assert!(matches!(r.generator, Generator::Regular(_)));
    }

    #[test]
    fn independence_checks() {
        let mut rng = cfg().sampler("j");
        let z = MPoly::var(3, 2);
        assert!(!algebraic_independence(&[z.clone(), z.pow(2)], &cfg(), &mut rng));
        let (x1, x2) = (MPoly::var(2, 0), MPoly::var(2, 1));
        assert!(!algebraic_independence(&[x1.clone(), x2.clone(), x1.add(&x2)], &cfg(), &mut rng));
        assert!(algebraic_independence(&[x1, x2], &cfg(), &mut rng));
    }

    #[test]
    fn budget_and_errors() {
        let q = families::gl(4).unwrap();
        let small = AnalyzeConfig {
            semiinv_budget: 10,
            ..cfg()
        };
        assert!(matches!(semi_invariants_up_to_degree(&q, 2, &small), Err(Error::Budget(_))));
        assert!(weight_relation_and_generator(&[]).is_err());
        // x with weight 1 alone has no relation
        let q = LieAlgebra::from_i64(&["a", "x"], &[(0, 1, &[(1, 1)])]).unwrap();
        let s = semi_invariants_up_to_degree(&q, 1, &cfg()).unwrap();
        assert_eq!(s.generators.len(), 1);
        assert!(matches!(weight_relation_and_generator(&s.generators), Err(Error::NoRelation(_))));
    }

    #[test]
    fn irrational_weights_rejected() {
        // t acts on span{x, y} by [[0, 2], [1, 0]], eigenvalues +-sqrt 2
        let q = LieAlgebra::from_i64(&["t", "x", "y"], &[(0, 1, &[(2, 1)]), (0, 2, &[(1, 2)])]).unwrap();
        assert!(matches!(semi_invariants_up_to_degree(&q, 1, &cfg()), Err(Error::IrrationalWeight(_))));
    }
}
