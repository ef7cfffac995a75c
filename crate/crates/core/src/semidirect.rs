//! Semi-direct products `l ⋉ V` with `V` an abelian ideal: the index
//! formula through a generic `gamma in V*`, line normalisers, principal
//! elements and the contact decision in index one.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::coadjoint::{index, is_contact_algebra, is_contact_form};
use crate::config::{AnalyzeConfig, Sampler};
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Sparse, Splitting, Subspace};
use crate::linalg::{format_rat, is_zero_vec, modp, sci_string, Matrix, Rat};

/// `q = levi ⊕ ideal` with `levi` a subalgebra and `ideal` an abelian
/// ideal.
#[derive(Clone, Debug)]
pub struct SemidirectDecomposition {
    q: LieAlgebra,
    levi: Subspace,
    ideal: Subspace,
    levi_algebra: LieAlgebra,
    /// `action[i]` is the matrix of the `i`-th levi basis vector on the
    /// ideal basis; column `k` is the image of the `k`-th ideal vector.
    action: Vec<Matrix>,
}

impl SemidirectDecomposition {
    pub fn new(q: LieAlgebra, levi: Subspace, ideal: Subspace) -> Result<Self> {
        let n = q.dim();
        let bad = |m: &str| Err(Error::InvalidDecomposition(m.into()));
        if levi.ambient_dim() != n || ideal.ambient_dim() != n {
            return bad("subspaces live in the wrong ambient space");
        }
        if levi.dim() + ideal.dim() != n || levi.sum(&ideal).dim() != n {
            return bad("levi and ideal do not span the algebra as a direct sum");
        }
        if !ideal.is_ideal(&q) {
            return bad("ideal part is not an ideal");
        }
        for (a, u) in ideal.basis().iter().enumerate() {
            for w in &ideal.basis()[a + 1..] {
                if !is_zero_vec(&q.bracket(u, w)?) {
                    return bad("ideal part is not abelian");
                }
            }
        }
        if !levi.is_subalgebra(&q) {
            return bad("levi part is not a subalgebra");
        }
        let levi_algebra = levi.to_algebra(&q)?;
        let dv = ideal.dim();
        let mut action = Vec::with_capacity(levi.dim());
        for x in levi.basis() {
            let mut m = Matrix::zeros(dv, dv);
            for (k, v) in ideal.basis().iter().enumerate() {
                let c = ideal.coords(&q.bracket(x, v)?).expect("ideal is closed");
                for (row, val) in c.into_iter().enumerate() {
                    m[(row, k)] = val;
                }
            }
            action.push(m);
        }
        Ok(Self {
            q,
            levi,
            ideal,
            levi_algebra,
            action,
        })
    }

    pub fn from_splitting(q: LieAlgebra, s: &Splitting) -> Result<Self> {
        let n = q.dim();
        if s.levi.iter().chain(&s.ideal).any(|&i| i >= n) {
            return Err(Error::InvalidDecomposition("splitting index out of range".into()));
        }
        let levi = Subspace::coordinate(n, &s.levi);
        let ideal = Subspace::coordinate(n, &s.ideal);
        Self::new(q, levi, ideal)
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.q
    }

    pub fn levi(&self) -> &Subspace {
        &self.levi
    }

    pub fn ideal(&self) -> &Subspace {
        &self.ideal
    }

    pub fn levi_algebra(&self) -> &LieAlgebra {
        &self.levi_algebra
    }

    pub fn action(&self) -> &[Matrix] {
        &self.action
    }

    /// Matrix whose column `i` is `x_i . gamma`, where
    /// `(x . gamma)(v) = -gamma([x, v])`.
    pub fn orbit_map(&self, gamma: &[Rat]) -> Matrix {
        let dv = self.ideal.dim();
        assert_eq!(gamma.len(), dv);
        let mut m = Matrix::zeros(dv, self.action.len());
        for (i, rho) in self.action.iter().enumerate() {
            for k in 0..dv {
                let mut acc = Rat::zero();
                for (row, g) in gamma.iter().enumerate() {
                    if !g.is_zero() {
                        acc -= g * &rho[(row, k)];
                    }
                }
                m[(k, i)] = acc;
            }
        }
        m
    }

    /// `x . gamma` for `x` in levi coordinates.
    pub fn act(&self, x: &[Rat], gamma: &[Rat]) -> Vec<Rat> {
        self.orbit_map(gamma).mul_vec(x)
    }
}

/// `l ⋉ V` from matrices of a representation of `l` on `V = k^m`. The
/// ideal vectors are labelled `v_labels`, or `v1, v2, ...`.
pub fn build_semidirect(
    l: &LieAlgebra,
    action: &[Matrix],
    v_labels: Option<Vec<String>>,
) -> Result<SemidirectDecomposition> {
    let dl = l.dim();
    if action.len() != dl {
        return Err(Error::DimensionMismatch {
            expected: dl,
            got: action.len(),
        });
    }
    let dv = action.first().map_or_else(|| v_labels.as_ref().map_or(0, Vec::len), Matrix::rows);
    for m in action {
        if m.rows() != dv || m.cols() != dv {
            return Err(Error::DimensionMismatch {
                expected: dv,
                got: m.rows().max(m.cols()),
            });
        }
    }
    for i in 0..dl {
        for j in i + 1..dl {
            let mut lhs = Matrix::zeros(dv, dv);
            for (k, c) in l.bracket_basis(i, j) {
                lhs = lhs.add(&action[*k].scale(c));
            }
            let rhs = action[i].mul(&action[j]).sub(&action[j].mul(&action[i]));
            if lhs != rhs {
                return Err(Error::NotRepresentation(i, j));
            }
        }
    }
    let v_labels = v_labels.unwrap_or_else(|| (1..=dv).map(|k| format!("v{k}")).collect());
    if v_labels.len() != dv {
        return Err(Error::DimensionMismatch {
            expected: dv,
            got: v_labels.len(),
        });
    }
    let mut labels = l.labels().to_vec();
    labels.extend(v_labels);
    let mut entries: Vec<(usize, usize, Sparse)> = l.brackets().map(|(i, j, v)| (i, j, v.clone())).collect();
    for (i, rho) in action.iter().enumerate() {
        for k in 0..dv {
            let col: Sparse = (0..dv)
                .filter(|&m| !rho[(m, k)].is_zero())
                .map(|m| (dl + m, rho[(m, k)].clone()))
                .collect();
            if !col.is_empty() {
                entries.push((i, dl + k, col));
            }
        }
    }
    let q = LieAlgebra::new(labels, entries)?;
    let n = q.dim();
    let levi = Subspace::coordinate(n, &(0..dl).collect::<Vec<_>>());
    let ideal = Subspace::coordinate(n, &(dl..n).collect::<Vec<_>>());
    SemidirectDecomposition::new(q, levi, ideal)
}

fn matrix_rank(m: &Matrix) -> usize {
    let full = m.rows().min(m.cols());
    if full == 0 {
        return 0;
    }
    match modp::rank(m) {
        Some(r) if r == full => r,
        _ => m.rank(),
    }
}

/// A point of `V*` with an orbit of maximal dimension over the samples;
/// returns it with the orbit dimension.
pub fn generic_gamma(d: &SemidirectDecomposition, cfg: &AnalyzeConfig, rng: &mut Sampler) -> (Vec<Rat>, usize) {
    let dv = d.ideal.dim();
    let cap = dv.min(d.levi.dim());
    let mut best: Option<(Vec<Rat>, usize)> = None;
    for _ in 0..cfg.trials {
        let mut g = rng.point(dv);
        if dv > 0 && is_zero_vec(&g) {
            g[0] = Rat::one();
        }
        let r = matrix_rank(&d.orbit_map(&g));
        if best.as_ref().is_none_or(|(_, b)| r > *b) {
            best = Some((g, r));
        }
        if r == cap {
            break;
        }
    }
    best.expect("at least one trial")
}

/// `l_gamma`, in levi coordinates.
pub fn stabiliser_in_levi(d: &SemidirectDecomposition, gamma: &[Rat]) -> Subspace {
    let dl = d.levi.dim();
    if dl == 0 {
        return Subspace::zero(0);
    }
    let (_, ker) = crate::linalg::rank_kernel(&d.orbit_map(gamma));
    Subspace::span(dl, ker)
}

/// `{x in l : x . gamma in k gamma}`, in levi coordinates.
pub fn line_normaliser(d: &SemidirectDecomposition, gamma: &[Rat]) -> Result<Subspace> {
    if is_zero_vec(gamma) {
        return Err(Error::InvalidParams("line normaliser of the zero functional".into()));
    }
    let dl = d.levi.dim();
    let m = d.orbit_map(gamma);
    let bordered = Matrix::from_fn(m.rows(), dl + 1, |r, c| if c < dl { m[(r, c)].clone() } else { -&gamma[r] });
    let (_, ker) = crate::linalg::rank_kernel(&bordered);
    Ok(Subspace::span(dl, ker.into_iter().map(|mut v| {
        v.truncate(dl);
        v
    }).collect()))
}

/// The unique `s` with `ad*(s) beta = beta`, i.e. `B(beta) s = beta`.
pub fn principal_element(h: &LieAlgebra, beta: &[Rat]) -> Result<Vec<Rat>> {
    let b = h.structure_matrix(beta);
    let n = h.dim();
    let nonsingular = match modp::rank(b.matrix()) {
        Some(r) if r == n => true,
        _ => b.rank() == n,
    };
    if !nonsingular {
        return Err(Error::NotFrobenius);
    }
    let s = b.matrix().solve(beta).ok_or(Error::NotFrobenius)?;
    if h.coadjoint(&s, beta) != beta {
        return Err(Error::Other("principal element fails ad*(s) beta = beta".into()));
    }
    Ok(s)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RaisCheck {
    pub lhs: usize,
    pub rhs: usize,
    pub ok: bool,
    pub dim_v: usize,
    pub orbit_dim: usize,
    pub stabiliser_index: usize,
}

/// Compares `ind q` with `ind l_gamma + dim V - dim L gamma`.
pub fn rais_check(d: &SemidirectDecomposition, cfg: &AnalyzeConfig, rng: &mut Sampler) -> Result<RaisCheck> {
    let lhs = index(&d.q, cfg, rng)?.index;
    let (gamma, orbit_dim) = generic_gamma(d, cfg, rng);
    let lg = stabiliser_in_levi(d, &gamma).to_algebra(&d.levi_algebra)?;
    let stabiliser_index = index(&lg, cfg, rng)?.index;
    let dim_v = d.ideal.dim();
    let rhs = stabiliser_index + dim_v - orbit_dim;
    Ok(RaisCheck {
        lhs,
        rhs,
        ok: lhs == rhs,
        dim_v,
        orbit_dim,
        stabiliser_index,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Case {
    /// Orbit of codimension one in `V*`, Frobenius stabiliser.
    A,
    /// Open orbit in `V*`, stabiliser of index one.
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Contact,
    NotContact,
    Undecided,
}

impl Verdict {
    fn from_bool(b: bool) -> Self {
        if b {
            Self::Contact
        } else {
            Self::NotContact
        }
    }
}

/// Which criterion produced the verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Case A: contact iff the generic orbit in `V*` is not conical.
    ConicalOrbitInV,
    /// Case B, `l_gamma` not contact: contact iff the line normaliser is
    /// Frobenius.
    LineNormaliserIndex,
    /// Case B, `l_gamma` contact and the line normaliser not Frobenius.
    StabiliserContact,
    /// Case B, both conditions: contact iff `s . gamma != gamma`.
    PrincipalElement,
}

#[derive(Clone, Debug, Serialize)]
pub struct SemidirectAnalysis {
    pub gamma: Vec<String>,
    pub case: Case,
    pub dim_v: usize,
    pub orbit_dim: usize,
    pub stabiliser_dim: usize,
    pub stabiliser_index: usize,
    pub line_normaliser_dim: Option<usize>,
    pub line_normaliser_index: Option<usize>,
    pub stabiliser_contact: Option<bool>,
    pub principal_element: Option<Vec<String>>,
    /// `s . gamma = gamma`.
    pub principal_fixes_gamma: Option<bool>,
    pub rule: Rule,
    pub verdict: Verdict,
    /// Set when the verdict rests on every sample hitting a closed set.
    pub failure_bound: Option<String>,
    /// `l_gamma` analysed through its own decomposition.
    pub sub_analysis: Option<Box<SemidirectAnalysis>>,
    pub chain: Vec<String>,
    /// Answer of the direct contact-form search on `q`.
    pub direct_contact: bool,
    pub agrees: bool,
}

/// Decides whether an index-one `q = l ⋉ V` is contact through the
/// reduction to `l_gamma`; `name` labels the first step of the chain.
pub fn analyze_semidirect(d: &SemidirectDecomposition, cfg: &AnalyzeConfig, name: &str) -> Result<SemidirectAnalysis> {
    let mut rng = cfg.sampler(&format!("semidirect/{name}"));
    analyze_inner(d, cfg, &mut rng, name, 0)
}

fn analyze_inner(
    d: &SemidirectDecomposition,
    cfg: &AnalyzeConfig,
    rng: &mut Sampler,
    name: &str,
    depth: usize,
) -> Result<SemidirectAnalysis> {
    let q = &d.q;
    let ind = index(q, cfg, rng)?;
    if ind.index != 1 {
        return Err(Error::IndexNotOne(ind.index));
    }
    let dim_v = d.ideal.dim();
    let (gamma, orbit_dim) = generic_gamma(d, cfg, rng);
    let lg_space = stabiliser_in_levi(d, &gamma);
    let lg = lg_space.to_algebra(&d.levi_algebra)?;
    let stabiliser_index = index(&lg, cfg, rng)?.index;
    let case = if orbit_dim + 1 == dim_v && stabiliser_index == 0 {
        Case::A
    } else if orbit_dim == dim_v && stabiliser_index == 1 {
        Case::B
    } else {
        return Err(Error::InvalidDecomposition(format!(
            "orbit dimension {orbit_dim} in V of dimension {dim_v} with stabiliser index {stabiliser_index}"
        )));
    };
    let direct = is_contact_algebra(q, cfg, rng, Some(&ind.witness))?.contact;
    let mut out = SemidirectAnalysis {
        gamma: gamma.iter().map(format_rat).collect(),
        case,
        dim_v,
        orbit_dim,
        stabiliser_dim: lg.dim(),
        stabiliser_index,
        line_normaliser_dim: None,
        line_normaliser_index: None,
        stabiliser_contact: None,
        principal_element: None,
        principal_fixes_gamma: None,
        rule: Rule::ConicalOrbitInV,
        verdict: Verdict::Undecided,
        failure_bound: None,
        sub_analysis: None,
        chain: vec![format!("{name} [dim {}, case {:?}]", q.dim(), case)],
        direct_contact: direct,
        agrees: false,
    };
    match case {
        Case::A => {
            // conical at a generic point is a closed condition; one
            // non-conical sample of full orbit dimension settles it
            let mut g = gamma;
            let mut conical = true;
            for t in 0..cfg.trials {
                if t > 0 {
                    g = rng.point(dim_v);
                }
                let m = d.orbit_map(&g);
                if matrix_rank(&m) != orbit_dim {
                    continue;
                }
                let tangent = Subspace::span(dim_v, (0..m.cols()).map(|c| m.column(c)).collect());
                if !tangent.contains(&g) {
                    conical = false;
                    break;
                }
            }
            out.verdict = Verdict::from_bool(!conical);
            if conical {
                out.failure_bound = Some(sci_string(&cfg.failure_bound(orbit_dim + 1)));
            }
        }
        Case::B => {
            let line = line_normaliser(d, &gamma)?;
            let line_alg = line.to_algebra(&d.levi_algebra)?;
            let line_index = index(&line_alg, cfg, rng)?.index;
            out.line_normaliser_dim = Some(line.dim());
            out.line_normaliser_index = Some(line_index);
            let sub = if depth < 16 {
                auto_decomposition(&lg, cfg, rng)
            } else {
                None
            };
            let lg_contact = match sub {
                Some(sd) => {
                    let s = analyze_inner(&sd, cfg, rng, "stabiliser", depth + 1)?;
                    let c = s.verdict == Verdict::Contact;
                    out.chain.extend(s.chain.iter().cloned());
                    out.sub_analysis = Some(Box::new(s));
                    c
                }
                None => {
                    out.chain.push(format!("stabiliser [dim {}]", lg.dim()));
                    is_contact_algebra(&lg, cfg, rng, None)?.contact
                }
            };
            out.stabiliser_contact = Some(lg_contact);
            if !lg_contact {
                out.rule = Rule::LineNormaliserIndex;
                out.verdict = Verdict::from_bool(line_index == 0);
            } else if line_index != 0 {
                out.rule = Rule::StabiliserContact;
                out.verdict = Verdict::Contact;
            } else {
                out.rule = Rule::PrincipalElement;
                if let Some(s) = principal_in_line(d, &gamma, &lg_space, &lg, &line, &line_alg, cfg, rng)? {
                    let fixes = d.act(&s, &gamma) == gamma;
                    out.principal_element = Some(d.levi.combine(&s).iter().map(format_rat).collect());
                    out.principal_fixes_gamma = Some(fixes);
                    out.verdict = Verdict::from_bool(!fixes);
                }
            }
        }
    }
    out.agrees = match out.verdict {
        Verdict::Contact => direct,
        Verdict::NotContact => !direct,
        Verdict::Undecided => false,
    };
    Ok(out)
}

/// Principal element of the line normaliser at a Frobenius point whose
/// restriction to `l_gamma` is a contact form; returned in levi
/// coordinates.
#[allow(clippy::too_many_arguments)]
fn principal_in_line(
    d: &SemidirectDecomposition,
    gamma: &[Rat],
    lg_space: &Subspace,
    lg: &LieAlgebra,
    line: &Subspace,
    line_alg: &LieAlgebra,
    cfg: &AnalyzeConfig,
    rng: &mut Sampler,
) -> Result<Option<Vec<Rat>>> {
    let restrict: Vec<Vec<Rat>> = lg_space
        .basis()
        .iter()
        .map(|y| line.coords(y).expect("stabiliser lies in the line normaliser"))
        .collect();
    for _ in 0..cfg.trials * 16 {
        let bt = rng.point(line.dim());
        let beta: Vec<Rat> = restrict.iter().map(|c| crate::linalg::dot(c, &bt)).collect();
        if !is_contact_form(lg, &beta)? {
            continue;
        }
        match principal_element(line_alg, &bt) {
            Ok(s) => {
                let s_levi = line.combine(&s);
                debug_assert_eq!(d.act(&s_levi, gamma).len(), gamma.len());
                return Ok(Some(s_levi));
            }
            Err(Error::NotFrobenius) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

fn bracket_space(q: &LieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut v = Vec::new();
    for x in a.basis() {
        for y in b.basis() {
            v.push(q.bracket(x, y).expect("dimensions match"));
        }
    }
    Subspace::span(q.dim(), v)
}

/// Finds some `h = levi ⋉ ideal` with the ideal taken from the derived and
/// lower central series or the centre, and a coordinate complement as
/// levi. Only index-one algebras qualify.
pub fn auto_decomposition(h: &LieAlgebra, cfg: &AnalyzeConfig, rng: &mut Sampler) -> Option<SemidirectDecomposition> {
    let n = h.dim();
    if n < 2 || index(h, cfg, rng).ok()?.index != 1 {
        return None;
    }
    let full = Subspace::full(n);
    let (derived, center) = h.derived_and_center();
    let mut cands = vec![center];
    let mut cur = derived.clone();
    while cur.dim() > 0 && !cands.contains(&cur) {
        cands.push(cur.clone());
        cur = bracket_space(h, &cur, &cur);
    }
    let mut cur = bracket_space(h, &full, &derived);
    while cur.dim() > 0 && !cands.contains(&cur) {
        cands.push(cur.clone());
        cur = bracket_space(h, &full, &cur);
    }
    cands.retain(|c| c.dim() > 0 && c.dim() < n);
    cands.sort_by_key(|c| std::cmp::Reverse(c.dim()));
    for ideal in cands {
        if bracket_space(h, &ideal, &ideal).dim() != 0 {
            continue;
        }
        let levi = Subspace::coordinate(n, &ideal.complement_coords());
        if let Ok(d) = SemidirectDecomposition::new(h.clone(), levi, ideal) {
            return Some(d);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{self, construct, FamilySpec};
    use crate::linalg::{rat, ratio, unit_vec};

    fn cfg() -> AnalyzeConfig {
        AnalyzeConfig::default()
    }

    fn natural_sl2() -> (LieAlgebra, Vec<Matrix>) {
        let sl2 = families::sl(2).unwrap();
        let rho = vec![
            Matrix::from_i64(&[vec![1, 0], vec![0, -1]]),
            Matrix::from_i64(&[vec![0, 1], vec![0, 0]]),
            Matrix::from_i64(&[vec![0, 0], vec![1, 0]]),
        ];
        (sl2, rho)
    }

    #[test]
    fn build_sl2_plane_and_index_formula() {
        let (sl2, rho) = natural_sl2();
        let d = build_semidirect(&sl2, &rho, Some(vec!["x".into(), "y".into()])).unwrap();
        let q = d.algebra();
        assert_eq!(q.dim(), 5);
        let (e, x, y) = (1, 3, 4);
        assert_eq!(q.bracket_basis(e, y), &[(x, rat(1))]);
        assert!(q.bracket_basis(e, x).is_empty());
        let mut rng = cfg().sampler("r");
        let r = rais_check(&d, &cfg(), &mut rng).unwrap();
        assert_eq!((r.lhs, r.rhs, r.orbit_dim, r.stabiliser_index), (1, 1, 2, 1));
        // gamma = y*: l_gamma = span{e}, and h rescales the line
        let gamma = vec![rat(0), rat(1)];
        assert_eq!(stabiliser_in_levi(&d, &gamma), Subspace::coordinate(3, &[1]));
        assert_eq!(line_normaliser(&d, &gamma).unwrap(), Subspace::coordinate(3, &[0, 1]));
        let (g, _) = generic_gamma(&d, &cfg(), &mut rng);
        assert_eq!(line_normaliser(&d, &g).unwrap().dim(), stabiliser_in_levi(&d, &g).dim() + 1);
        assert!(line_normaliser(&d, &[rat(0), rat(0)]).is_err());
    }

    #[test]
    fn rejects_non_representation() {
        let (sl2, mut rho) = natural_sl2();
        rho[0] = Matrix::from_i64(&[vec![2, 0], vec![0, -1]]);
        assert!(matches!(build_semidirect(&sl2, &rho, None), Err(Error::NotRepresentation(_, _))));
        let ab = LieAlgebra::abelian(vec!["a".into()]);
        let d = build_semidirect(&ab, &[Matrix::zeros(2, 2)], None).unwrap();
        assert!(d.algebra().is_abelian());
    }

    #[test]
    fn principal_elements() {
        let q = LieAlgebra::from_i64(&["a", "x"], &[(0, 1, &[(1, 1)])]).unwrap();
        let s = principal_element(&q, &unit_vec(2, 1)).unwrap();
        assert_eq!(s, vec![rat(-1), rat(0)]);
        assert_eq!(q.bracket(&s, &unit_vec(2, 1)).unwrap(), vec![rat(0), rat(-1)]);
        // Borel of sl2 with [h, e] = 2e, beta = e*
        let b = LieAlgebra::from_i64(&["h", "e"], &[(0, 1, &[(1, 2)])]).unwrap();
        assert_eq!(principal_element(&b, &unit_vec(2, 1)).unwrap(), vec![ratio(-1, 2), rat(0)]);
        let h = families::heisenberg(1).unwrap().0;
        assert_eq!(principal_element(&h, &unit_vec(3, 2)), Err(Error::NotFrobenius));
    }

    #[test]
    fn heisenberg_as_semidirect() {
        let (h, _) = families::heisenberg(1).unwrap();
        let d = SemidirectDecomposition::from_splitting(h, &Splitting { levi: vec![0], ideal: vec![1, 2] }).unwrap();
        let mut rng = cfg().sampler("h");
        let r = rais_check(&d, &cfg(), &mut rng).unwrap();
        assert_eq!((r.lhs, r.stabiliser_index, r.dim_v, r.orbit_dim), (1, 0, 2, 1));
        assert!(r.ok);
    }

    #[test]
    fn two_characters() {
        for (l, m) in [(1, 1), (1, 2), (2, 3), (3, 3)] {
            let fam = construct(&FamilySpec::KTwoCharacters(rat(l), rat(m))).unwrap();
            for sp in &fam.splittings {
                let d = SemidirectDecomposition::from_splitting(fam.algebra.clone(), sp).unwrap();
                let a = analyze_semidirect(&d, &cfg(), &fam.name).unwrap();
                assert_eq!(a.verdict == Verdict::Contact, l != m, "{} {:?}", fam.name, sp);
                assert!(a.agrees);
                if a.case == Case::B {
                    assert_eq!(a.rule, Rule::PrincipalElement);
                    assert_eq!(a.principal_fixes_gamma, Some(l == m));
                }
            }
        }
    }

    #[test]
    fn seaweed_verdicts() {
        for (spec, contact) in [
            (FamilySpec::QBar(1, 1), false),
            (FamilySpec::RBar(1, 2), true),
            (FamilySpec::QBar(1, 3), false),
        ] {
            let fam = construct(&spec).unwrap();
            for sp in &fam.splittings {
                let d = SemidirectDecomposition::from_splitting(fam.algebra.clone(), sp).unwrap();
                let a = analyze_semidirect(&d, &cfg(), &fam.name).unwrap();
                assert_eq!(a.verdict == Verdict::Contact, contact, "{}", fam.name);
                assert!(a.agrees);
            }
        }
    }

    #[test]
    fn rejects_bad_decompositions() {
        let (h, _) = families::heisenberg(1).unwrap();
        let bad = Splitting { levi: vec![2], ideal: vec![0, 1] };
        assert!(SemidirectDecomposition::from_splitting(h.clone(), &bad).is_err());
        let g = families::gl(2).unwrap();
        let d = SemidirectDecomposition::from_splitting(
            g,
            &Splitting { levi: vec![0, 1, 2], ideal: vec![3] },
        );
        assert!(d.is_err());
    }
}
