//! Coadjoint predicates: index, stabilisers, conical orbits, contact forms,
//! stable points, and the semi-invariants `p` (fundamental) and `f`
//! (contact).

use std::fmt;

use num_traits::Zero;
use serde::Serialize;

use crate::config::{AnalyzeConfig, Mode, Sampler};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Subspace};
use crate::linalg::{self, dot, format_rat, modp, rank_kernel, sci_string, Matrix, Rat, SkewMat};
use crate::poly::{minimal_polynomial, poly_gcd2, symbolic_pfaffian, symbolic_rank, MPoly, PfaffianMemo};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Probabilistic,
    Symbolic,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Probabilistic => "probabilistic",
            Self::Symbolic => "symbolic",
        })
    }
}

/// Index together with a regular point attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexResult {
    pub index: usize,
    pub witness: Vec<Rat>,
    pub method: Method,
    /// `None` when the value is exact: symbolic rank, or the sampled rank
    /// reached the largest even number not above the dimension.
    pub failure_bound: Option<Rat>,
}

/// Exact rank of `B(alpha)`, using the modular rank when it already reaches
/// `ceiling` (the rank cannot exceed it).
pub fn structure_rank(q: &LieAlgebra, alpha: &[Rat], ceiling: usize) -> usize {
    let b = q.structure_matrix(alpha);
    if let Some(r) = modp::rank(b.matrix()) {
        if r >= ceiling {
            return r;
        }
    }
    b.rank()
}

fn trivial_index() -> IndexResult {
    IndexResult {
        index: 0,
        witness: Vec::new(),
        method: Method::Probabilistic,
        failure_bound: None,
    }
}

fn even_ceiling(n: usize) -> usize {
    n - n % 2
}

/// `dim - max rank B(alpha)` over `cfg.trials` random points.
pub fn index_probabilistic(q: &LieAlgebra, cfg: &AnalyzeConfig, rng: &mut Sampler) -> IndexResult {
    let n = q.dim();
    if n == 0 {
        return trivial_index();
    }
    let ceiling = even_ceiling(n);
    let mut best: Option<(usize, Vec<Rat>)> = None;
    for _ in 0..cfg.trials {
        let alpha = rng.point(n);
        let r = structure_rank(q, &alpha, ceiling);
        if best.as_ref().is_none_or(|(b, _)| r > *b) {
            best = Some((r, alpha));
        }
        if r == ceiling {
            break;
        }
    }
    let (r, witness) = best.expect("at least one trial");
    let failure_bound = (r < ceiling).then(|| cfg.failure_bound(r / 2 + 1));
    IndexResult {
        index: n - r,
        witness,
        method: Method::Probabilistic,
        failure_bound,
    }
}

/// Index from the rank of `B(x)` over the rational function field; the
/// witness is a sampled point of that rank.
pub fn index_symbolic(q: &LieAlgebra, cfg: &AnalyzeConfig, rng: &mut Sampler) -> Result<IndexResult> {
    let n = q.dim();
    if n > cfg.symbolic_index_max_dim {
        return Err(Error::SymbolicLimit(format!(
            "symbolic index above dimension {}",
            cfg.symbolic_index_max_dim
        )));
    }
    if n == 0 {
        return Ok(IndexResult { method: Method::Symbolic, ..trivial_index() });
    }
    let r = symbolic_rank(
        &q.symbolic_structure_matrix(),
        n,
        cfg.term_budget,
        Some(even_ceiling(n)),
    )?;
    // a non-zero principal sub-Pfaffian of degree r/2 is avoided with high
    // probability; keep sampling until one point attains the rank
    for _ in 0..cfg.trials.max(1) * 16 {
        let alpha = rng.point(n);
        if structure_rank(q, &alpha, r) == r {
            return Ok(IndexResult {
                index: n - r,
                witness: alpha,
                method: Method::Symbolic,
                failure_bound: None,
            });
        }
    }
    Err(Error::Other("no regular point found by sampling".into()))
}

/// Index in the configured mode. `Auto` uses the symbolic rank up to
/// `auto_symbolic_max_dim` and falls back to sampling when the symbolic
/// computation exceeds its budget.
pub fn index(q: &LieAlgebra, cfg: &AnalyzeConfig, rng: &mut Sampler) -> Result<IndexResult> {
    match cfg.mode {
        Mode::Probabilistic => Ok(index_probabilistic(q, cfg, rng)),
        Mode::Symbolic => index_symbolic(q, cfg, rng),
        Mode::Auto => {
            if q.dim() <= cfg.auto_symbolic_max_dim.min(cfg.symbolic_index_max_dim) {
                match index_symbolic(q, cfg, rng) {
                    Err(Error::SymbolicLimit(_)) => {}
                    other => return other,
                }
            }
            Ok(index_probabilistic(q, cfg, rng))
        }
    }
}

/// `q_alpha = ker B(alpha)`.
pub fn stabiliser(q: &LieAlgebra, alpha: &[Rat]) -> Subspace {
    let b = q.structure_matrix(alpha);
    let (r, ker) = rank_kernel(b.matrix());
    assert!(r % 2 == 0, "odd rank {r} for a skew matrix");
    Subspace::span(q.dim(), ker)
}

/// `alpha` lies in its own orbit's tangent space, i.e. vanishes on `q_alpha`.
pub fn is_conical_orbit(q: &LieAlgebra, alpha: &[Rat]) -> bool {
    stabiliser(q, alpha).basis().iter().all(|u| dot(alpha, u).is_zero())
}

/// `(d alpha)^n ∧ alpha != 0`, tested as non-singularity of `B(alpha)`
/// bordered by `alpha`.
pub fn is_contact_form(q: &LieAlgebra, alpha: &[Rat]) -> Result<bool> {
    let n = q.dim();
    if n % 2 == 0 {
        return Err(Error::EvenDimension(n));
    }
    let b = q.structure_matrix(alpha);
    let m = b.augmented(alpha);
    let contact = match modp::rank(m.matrix()) {
        Some(r) if r == n + 1 => true,
        _ => m.rank() == n + 1,
    };
    if cfg!(debug_assertions) && n <= 41 {
        let (r, ker) = rank_kernel(b.matrix());
        if r == n - 1 {
            let nonconical = ker.iter().any(|u| !dot(alpha, u).is_zero());
            debug_assert_eq!(contact, nonconical, "contact form test disagrees with alpha(q_alpha)");
        }
    }
    Ok(contact)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContactCertificate {
    /// An explicit contact form.
    Form(Vec<Rat>),
    /// `f` vanishes identically.
    SymbolicZero,
    /// Every sampled point failed; the value bounds the error probability.
    Sampled(Rat),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContactResult {
    pub contact: bool,
    pub certificate: ContactCertificate,
}

/// Searches for a contact form among `hint` and `cfg.trials` random points.
/// A negative answer is confirmed symbolically when `f` is within reach.
pub fn is_contact_algebra(
    q: &LieAlgebra,
    cfg: &AnalyzeConfig,
    rng: &mut Sampler,
    hint: Option<&[Rat]>,
) -> Result<ContactResult> {
    let n = q.dim();
    if n % 2 == 0 {
        return Err(Error::EvenDimension(n));
    }
    if let Some(h) = hint {
        if is_contact_form(q, h)? {
            return Ok(ContactResult {
                contact: true,
                certificate: ContactCertificate::Form(h.to_vec()),
            });
        }
    }
    for _ in 0..cfg.trials {
        let alpha = rng.point(n);
        if is_contact_form(q, &alpha)? {
            return Ok(ContactResult {
                contact: true,
                certificate: ContactCertificate::Form(alpha),
            });
        }
    }
    if n <= cfg.contact_poly_max_dim {
        if let Ok(f) = contact_semi_invariant(q, cfg) {
            if f.is_zero() {
                return Ok(ContactResult {
                    contact: false,
                    certificate: ContactCertificate::SymbolicZero,
                });
            }
            // f != 0: a contact form exists; look for one off the zero set
            for _ in 0..cfg.trials * 16 {
                let alpha = rng.point(n);
                if !f.eval(&alpha).is_zero() {
                    debug_assert!(is_contact_form(q, &alpha)?);
                    return Ok(ContactResult {
                        contact: true,
                        certificate: ContactCertificate::Form(alpha),
                    });
                }
            }
        }
    }
    Ok(ContactResult {
        contact: false,
        certificate: ContactCertificate::Sampled(cfg.failure_bound((n + 1) / 2)),
    })
}

/// Tauvel-Yu test: `q_alpha ∩ [q, q_alpha] = 0`.
///
/// `[q, q_alpha]` lies in `ker alpha`, so a line `q_alpha` on which `alpha`
/// is non-zero passes at once; everything else goes through
/// [`is_stable_by_elimination`].
pub fn is_stable_point(q: &LieAlgebra, alpha: &[Rat]) -> bool {
    let stab = stabiliser(q, alpha);
    if let [u] = stab.basis() {
        if !dot(alpha, u).is_zero() {
            return true;
        }
    }
    stable_with(q, &stab)
}

/// The same test computed from the annihilator of `[q, q_alpha]`, which must
/// separate the points of `q_alpha`.
pub fn is_stable_by_elimination(q: &LieAlgebra, alpha: &[Rat]) -> bool {
    stable_with(q, &stabiliser(q, alpha))
}

fn stable_with(q: &LieAlgebra, stab: &Subspace) -> bool {
    if stab.dim() == 0 {
        return true;
    }
    let n = q.dim();
    let mut rows = Vec::with_capacity(n * stab.dim());
    for u in stab.basis() {
        let ad = q.ad(u);
        for i in 0..n {
            rows.push(ad.column(i));
        }
    }
    let (_, ann) = rank_kernel(&Matrix::from_rows(rows));
    let pairing = Matrix::from_fn(ann.len(), stab.dim(), |i, j| dot(&ann[i], &stab.basis()[j]));
    pairing.rank() == stab.dim()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StabiliserClass {
    Nilpotent,
    /// `central` marks `ad(u) = 0`, which is both nilpotent and semisimple.
    Semisimple { central: bool },
    Mixed,
    NotApplicable,
}

impl StabiliserClass {
    pub fn name(&self) -> &'static str {
        match self {
            Self::Nilpotent => "nilpotent",
            Self::Semisimple { .. } => "semisimple",
            Self::Mixed => "mixed",
            Self::NotApplicable => "n/a",
        }
    }

    pub fn is_central(&self) -> bool {
        matches!(self, Self::Semisimple { central: true })
    }

    /// `ad(u)` nilpotent, including the central case.
    pub fn is_ad_nilpotent(&self) -> bool {
        matches!(self, Self::Nilpotent | Self::Semisimple { central: true })
    }
}

/// Classifies `ad(u)` for the generic stabiliser `k u` of an index-one
/// algebra, using a regular point `alpha`.
pub fn classify_stabiliser_at(q: &LieAlgebra, alpha: &[Rat]) -> Result<StabiliserClass> {
    let stab = stabiliser(q, alpha);
    if stab.dim() != 1 {
        return Err(Error::IndexNotOne(stab.dim()));
    }
    Ok(classify_element(q, &stab.basis()[0]))
}

/// Minimal-polynomial type of `ad(u)`.
pub fn classify_element(q: &LieAlgebra, u: &[Rat]) -> StabiliserClass {
    let mp = minimal_polynomial(&q.ad(u));
    if mp.degree() == Some(1) && mp.coeffs()[0].is_zero() {
        StabiliserClass::Semisimple { central: true }
    } else if mp.is_power_of_t() {
        StabiliserClass::Nilpotent
    } else if mp.is_squarefree() {
        StabiliserClass::Semisimple { central: false }
    } else {
        StabiliserClass::Mixed
    }
}

/// Classification at a freshly computed regular point; errors unless the
/// index is one, and reports `n/a` above the configured dimension.
pub fn classify_generic_stabiliser(q: &LieAlgebra, cfg: &AnalyzeConfig, rng: &mut Sampler) -> Result<StabiliserClass> {
    let ind = index(q, cfg, rng)?;
    if ind.index != 1 {
        return Err(Error::IndexNotOne(ind.index));
    }
    if q.dim() > cfg.classify_max_dim {
        return Ok(StabiliserClass::NotApplicable);
    }
    classify_stabiliser_at(q, &ind.witness)
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

/// `p`: gcd of the Pfaffians of all principal `2d x 2d` submatrices of
/// `B(x)`, `d = (dim - index) / 2`, with the index taken symbolically.
pub fn fundamental_semi_invariant(q: &LieAlgebra, cfg: &AnalyzeConfig) -> Result<MPoly> {
    let n = q.dim();
    if n > cfg.fundamental_max_dim {
        return Err(Error::SymbolicLimit(format!(
            "fundamental semi-invariant above dimension {}",
            cfg.fundamental_max_dim
        )));
    }
    let sym = q.symbolic_structure_matrix();
    let r = symbolic_rank(&sym, n, cfg.term_budget, Some(even_ceiling(n)))?;
    if r == 0 {
        return Ok(MPoly::one(n));
    }
    let count = binomial(n, r);
    if count > cfg.fundamental_max_minors as u128 {
        return Err(Error::SymbolicLimit(format!("{count} sub-Pfaffians")));
    }
    if r > cfg.pfaffian_size_limit {
        return Err(Error::SymbolicLimit(format!("sub-Pfaffians of size {r}")));
    }
    let mut memo = PfaffianMemo::new(&sym, n)?;
    let mut g = MPoly::zero(n);
    for mask in 0u32..(1u32 << n) {
        if mask.count_ones() as usize != r {
            continue;
        }
        let pf = memo.pfaffian(mask);
        if pf.is_zero() {
            continue;
        }
        g = poly_gcd2(&g, &pf);
        if g.is_constant() {
            break;
        }
    }
    if g.is_zero() {
        return Err(Error::ZeroGcd);
    }
    Ok(g)
}

/// `f`: Pfaffian of `B(x)` bordered by the coordinate vector, in canonical
/// normalisation; zero exactly when `q` is not contact.
pub fn contact_semi_invariant(q: &LieAlgebra, cfg: &AnalyzeConfig) -> Result<MPoly> {
    let n = q.dim();
    if n % 2 == 0 {
        return Err(Error::EvenDimension(n));
    }
    if n > cfg.contact_poly_max_dim {
        return Err(Error::SymbolicLimit(format!(
            "contact semi-invariant above dimension {}",
            cfg.contact_poly_max_dim
        )));
    }
    let mut m = q.symbolic_structure_matrix();
    for (i, row) in m.iter_mut().enumerate() {
        row.push(MPoly::var(n, i));
    }
    m.push((0..=n).map(|i| if i < n { MPoly::var(n, i).neg() } else { MPoly::zero(n) }).collect());
    Ok(symbolic_pfaffian(&m, n, cfg.pfaffian_size_limit)?.canonical())
}

fn strs(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

/// Everything the coadjoint analysis reports about one algebra.
#[derive(Clone, Debug, Serialize)]
pub struct CoadjointReport {
    pub dim: usize,
    pub index: usize,
    pub method: Method,
    /// Probability bound that the index is too large, when not exact.
    pub index_failure_bound: Option<String>,
    pub witness_alpha: Vec<String>,
    /// `None` in even dimension.
    pub contact: Option<bool>,
    /// "contact form", "symbolic f = 0" or "sampled".
    pub contact_certificate: Option<String>,
    pub contact_form: Option<Vec<String>>,
    pub contact_failure_bound: Option<String>,
    pub stable: bool,
    pub generic_conical: bool,
    pub stabiliser_class: String,
    pub stabiliser_central: bool,
    pub p: Option<String>,
    pub f: Option<String>,
    pub codim2: Option<bool>,
    #[serde(skip)]
    pub p_poly: Option<MPoly>,
    #[serde(skip)]
    pub f_poly: Option<MPoly>,
    #[serde(skip)]
    pub witness: Vec<Rat>,
}

/// Full coadjoint analysis.
pub fn analyze(q: &LieAlgebra, cfg: &AnalyzeConfig) -> Result<CoadjointReport> {
    cfg.validate()?;
    let mut rng = cfg.sampler("coadjoint");
    let n = q.dim();
    let ind = index(q, cfg, &mut rng)?;
    let alpha = ind.witness.clone();
    let p_poly = match fundamental_semi_invariant(q, cfg) {
        Ok(p) => Some(p),
        Err(Error::SymbolicLimit(_)) => None,
        Err(e) => return Err(e),
    };
    let f_poly = if n % 2 == 1 {
        match contact_semi_invariant(q, cfg) {
            Ok(f) => Some(f),
            Err(Error::SymbolicLimit(_)) => None,
            Err(e) => return Err(e),
        }
    } else {
        None
    };
    let contact = if n % 2 == 1 {
        Some(is_contact_algebra(q, cfg, &mut rng, Some(&alpha))?)
    } else {
        None
    };
    let class = if ind.index == 1 && n <= cfg.classify_max_dim {
        classify_stabiliser_at(q, &alpha)?
    } else {
        StabiliserClass::NotApplicable
    };
    let labels = q.labels();
    let (certificate, form, cbound) = match contact.as_ref().map(|c| &c.certificate) {
        Some(ContactCertificate::Form(a)) => (Some("contact form".to_string()), Some(strs(a)), None),
        Some(ContactCertificate::SymbolicZero) => (Some("symbolic f = 0".to_string()), None, None),
        Some(ContactCertificate::Sampled(b)) => (Some("sampled".to_string()), None, Some(sci_string(b))),
        None => (None, None, None),
    };
    Ok(CoadjointReport {
        dim: n,
        index: ind.index,
        method: ind.method,
        index_failure_bound: ind.failure_bound.as_ref().map(sci_string),
        witness_alpha: strs(&alpha),
        contact: contact.as_ref().map(|c| c.contact),
        contact_certificate: certificate,
        contact_form: form,
        contact_failure_bound: cbound,
        stable: is_stable_point(q, &alpha),
        generic_conical: is_conical_orbit(q, &alpha),
        stabiliser_class: class.name().to_string(),
        stabiliser_central: class.is_central(),
        p: p_poly.as_ref().map(|p| p.to_string_with(labels)),
        f: f_poly.as_ref().map(|f| f.to_string_with(labels)),
        codim2: p_poly.as_ref().map(|p| p.is_constant()),
        p_poly,
        f_poly,
        witness: alpha,
    })
}

/// Rank of a skew matrix, exposed for property checks.
pub fn skew_rank(m: &SkewMat) -> usize {
    let r = linalg::rank(m.matrix());
    assert!(r % 2 == 0, "odd rank {r} for a skew matrix");
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};
    use crate::linalg::{rat, unit_vec};

    fn alg(s: FamilySpec) -> LieAlgebra {
        construct(&s).unwrap().algebra
    }

    fn cfg() -> AnalyzeConfig {
        AnalyzeConfig::default()
    }

    #[test]
    fn index_examples() {
        let c = cfg();
        let mut rng = c.sampler("t");
        let h = alg(FamilySpec::Heisenberg(2));
        assert_eq!(index_probabilistic(&h, &c, &mut rng).index, 1);
        assert_eq!(index_symbolic(&h, &c, &mut rng).unwrap().index, 1);
        let ab = LieAlgebra::abelian(vec!["a".into(), "b".into(), "c".into()]);
        let r = index_probabilistic(&ab, &c, &mut rng);
        assert_eq!(r.index, 3);
        assert!(r.failure_bound.is_some());
        assert_eq!(index_symbolic(&ab, &c, &mut rng).unwrap().index, 3);
        let q24 = alg(FamilySpec::Q(2, 4));
        assert_eq!(index_probabilistic(&q24, &c, &mut rng).index, 2);
        let s = alg(FamilySpec::Sl2MCopies(4));
        assert_eq!(index(&s, &c, &mut rng).unwrap().index, 5);
    }

    #[test]
    fn stabilisers_and_conical_orbits() {
        let s = alg(FamilySpec::Sl(2));
        // basis h, e, f; h* is dual to h
        let hstar = unit_vec(3, 0);
        assert_eq!(stabiliser(&s, &hstar), Subspace::coordinate(3, &[0]));
        assert!(!is_conical_orbit(&s, &hstar));
        assert!(is_contact_form(&s, &hstar).unwrap());
        // the Killing dual of e is proportional to f*, a nilpotent functional
        let nil = unit_vec(3, 2);
        assert!(is_conical_orbit(&s, &nil));
        assert!(!is_contact_form(&s, &nil).unwrap());
        assert_eq!(stabiliser(&s, &[rat(0), rat(0), rat(0)]).dim(), 3);
        let h = alg(FamilySpec::Heisenberg(1));
        assert!(is_contact_form(&h, &[rat(1), rat(0), rat(1)]).unwrap());
        let g = alg(FamilySpec::Gl(2));
        assert_eq!(is_contact_form(&g, &unit_vec(4, 0)), Err(Error::EvenDimension(4)));
    }

    #[test]
    fn sl2_plane_stable_point() {
        let (q, _) = crate::families::sl2_copies(1).unwrap();
        let idx = |l: &str| q.index_of(l).unwrap();
        let mut alpha = vec![rat(0); 5];
        alpha[idx("y")] = rat(1);
        alpha[idx("e")] = rat(1);
        let stab = stabiliser(&q, &alpha);
        let mut u = vec![rat(0); 5];
        u[idx("e")] = rat(1);
        u[idx("y")] = rat(2);
        assert_eq!(stab, Subspace::span(5, vec![u.clone()]));
        assert_eq!(dot(&alpha, &u), rat(3));
        assert!(!is_conical_orbit(&q, &alpha));
        assert!(is_stable_point(&q, &alpha));
        // ad(u): f -> h -> -2e + 2y -> 2x -> 0
        assert_eq!(classify_element(&q, &u), StabiliserClass::Nilpotent);
    }

    #[test]
    fn stability_and_classes() {
        let c = cfg();
        let mut rng = c.sampler("s");
        let q11 = alg(FamilySpec::QBar(1, 1));
        let ind = index(&q11, &c, &mut rng).unwrap();
        assert_eq!(ind.index, 1);
        assert!(!is_stable_point(&q11, &ind.witness));
        assert_eq!(classify_stabiliser_at(&q11, &ind.witness).unwrap(), StabiliserClass::Nilpotent);
        let h = alg(FamilySpec::Heisenberg(1));
        let ind = index(&h, &c, &mut rng).unwrap();
        assert!(is_stable_point(&h, &ind.witness));
        let cl = classify_stabiliser_at(&h, &ind.witness).unwrap();
        assert_eq!(cl, StabiliserClass::Semisimple { central: true });
        assert!(cl.is_ad_nilpotent());
        assert!(classify_generic_stabiliser(&alg(FamilySpec::Q(2, 4)), &c, &mut rng).is_err());
    }

    #[test]
    fn contact_algebras() {
        let c = cfg();
        let mut rng = c.sampler("c");
        for n in 1..=3 {
            let r = is_contact_algebra(&alg(FamilySpec::Heisenberg(n)), &c, &mut rng, None).unwrap();
            assert!(r.contact);
            assert!(matches!(r.certificate, ContactCertificate::Form(_)));
        }
        let r = is_contact_algebra(&alg(FamilySpec::QBar(1, 1)), &c, &mut rng, None).unwrap();
        assert!(!r.contact);
        assert_eq!(r.certificate, ContactCertificate::SymbolicZero);
    }

    #[test]
    fn semi_invariants_p_and_f() {
        let c = cfg();
        let h = alg(FamilySpec::Heisenberg(1));
        let z = MPoly::var(3, 2);
        assert_eq!(fundamental_semi_invariant(&h, &c).unwrap(), z);
        assert_eq!(contact_semi_invariant(&h, &c).unwrap(), z.pow(2));
        // sl2 with basis h, e, f: f = h^2 + 4 e f up to scalar
        let s = alg(FamilySpec::Sl(2));
        let f = contact_semi_invariant(&s, &c).unwrap();
        assert_eq!(f.to_string_with(s.labels()), "h^2 + 4*e*f");
        assert!(fundamental_semi_invariant(&s, &c).unwrap().is_constant());
        let ab = LieAlgebra::abelian(vec!["a".into(), "b".into()]);
        assert!(fundamental_semi_invariant(&ab, &c).unwrap().is_constant());
    }

    #[test]
    fn full_report() {
        let h = alg(FamilySpec::Heisenberg(1));
        let r = analyze(&h, &cfg()).unwrap();
        assert_eq!(r.index, 1);
        assert_eq!(r.contact, Some(true));
        assert_eq!(r.p.as_deref(), Some("z"));
        assert_eq!(r.f.as_deref(), Some("z^2"));
        assert_eq!(r.codim2, Some(false));
        let s = analyze(&alg(FamilySpec::Sl(2)), &cfg()).unwrap();
        assert_eq!(s.codim2, Some(true));
        assert_eq!(s.contact, Some(true));
    }
}
