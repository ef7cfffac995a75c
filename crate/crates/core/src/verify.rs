//! Regression suites: each case compares an expected value (a closed
//! formula or a known result) with the computed one.

use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::coadjoint::{
    self, contact_semi_invariant, fundamental_semi_invariant, index_probabilistic, index_symbolic, is_conical_orbit,
    is_contact_algebra, is_stable_point, stabiliser, ContactCertificate,
};
use crate::config::{derive_seed, AnalyzeConfig, Mode};
use crate::error::{Error, Result};
use crate::families::{self, construct, FamilySpec};
use crate::lie::{LieAlgebra, Subspace};
use crate::linalg::{dot, rat, sci_string, Matrix, Rat};
use crate::poly::MPoly;
use crate::semidirect::{
    analyze_semidirect, build_semidirect, principal_element, rais_check, SemidirectDecomposition, Verdict,
};
use crate::semiinv::{
    canonical_truncation, monomial_in, semi_invariants_up_to_degree, weight_of, weight_relation_and_generator,
    Generator,
};

pub const SUITES: &[&str] = &[
    "t-ind",
    "bar",
    "sw1",
    "notc",
    "borel",
    "heisenberg",
    "sp4",
    "dirpr",
    "ex-k",
    "equivalence",
    "rais",
    "takiff",
    "not-free",
    "modes",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseResult {
    pub instance: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
    pub failure_bound: Option<String>,
    #[serde(skip)]
    pub bound: Option<Rat>,
}

impl CaseResult {
    fn new(instance: impl Into<String>, expected: impl ToString, computed: impl ToString, bound: Option<Rat>) -> Self {
        let expected = expected.to_string();
        let computed = computed.to_string();
        let status = if expected == computed { Status::Pass } else { Status::Fail };
        Self {
            instance: instance.into(),
            expected,
            computed,
            status,
            failure_bound: bound.as_ref().map(sci_string),
            bound,
        }
    }

    fn error(instance: impl Into<String>, expected: impl ToString, e: &Error) -> Self {
        Self::new(instance, expected, format!("error: {e}"), None)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyResult {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    pub passed: bool,
    /// Largest failure-probability bound over the probabilistic cases.
    pub max_failure_bound: Option<String>,
}

impl VerifyResult {
    fn new(suite: &str, cases: Vec<CaseResult>) -> Self {
        let passed = cases.iter().all(|c| c.status == Status::Pass);
        let max_failure_bound = cases.iter().filter_map(|c| c.bound.as_ref()).max().map(sci_string);
        Self {
            suite: suite.to_string(),
            cases,
            passed,
            max_failure_bound,
        }
    }
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Grid bound for the index sweeps.
    pub max: usize,
    /// Instance filter for the equivalence suite: "all" or a comma list of
    /// names.
    pub families: String,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            max: 5,
            families: "all".into(),
        }
    }
}

/// Configuration for one cell, with its own seed.
fn cell(cfg: &AnalyzeConfig, tag: &str) -> AnalyzeConfig {
    AnalyzeConfig {
        seed: derive_seed(cfg.seed, tag),
        ..cfg.clone()
    }
}

fn build(spec: &FamilySpec) -> Result<(String, LieAlgebra)> {
    let f = construct(spec)?;
    Ok((f.name, f.algebra))
}

pub fn run_suite(name: &str, opts: &VerifyOptions, cfg: &AnalyzeConfig) -> Result<VerifyResult> {
    cfg.validate()?;
    let cases = match name {
        "t-ind" => index_sweep(opts.max, false, cfg),
        "bar" => index_sweep(opts.max, true, cfg),
        "sw1" => contact_seaweeds(cfg),
        "notc" => non_contact_quotients(cfg),
        "borel" => borel(cfg),
        "heisenberg" => heisenberg_ladder(cfg),
        "sp4" => sp4(cfg),
        "dirpr" => sl2_plane_point(),
        "ex-k" => two_characters(cfg),
        "equivalence" => equivalence(&opts.families, cfg)?,
        "rais" => splitting_index_formula(cfg),
        "takiff" => takiff(cfg),
        "not-free" => torus_extension(cfg),
        "modes" => modes(cfg),
        _ => return Err(Error::InvalidParams(format!("unknown suite {name:?}; known: {}", SUITES.join(", ")))),
    };
    Ok(VerifyResult::new(name, cases))
}

fn gcd(a: usize, b: usize) -> usize {
    a.gcd(&b)
}

fn index_case(spec: FamilySpec, expected: usize, cfg: &AnalyzeConfig) -> CaseResult {
    let tag = spec.to_string();
    let c = cell(cfg, &tag);
    match build(&spec) {
        Ok((name, q)) => {
            let mut rng = c.sampler("index");
            let r = index_probabilistic(&q, &c, &mut rng);
            CaseResult::new(name, expected, r.index, r.failure_bound)
        }
        Err(e) => CaseResult::error(tag, expected, &e),
    }
}

/// `ind q(a,b) = gcd(2a, a+b)` and `ind r(a,b) = gcd(2a, b)`, or the bar
/// variants one lower.
fn index_sweep(max: usize, bar: bool, cfg: &AnalyzeConfig) -> Vec<CaseResult> {
    let mut jobs = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            if a == 0 && b == 0 {
                continue;
            }
            let gq = gcd(2 * a, a + b);
            let gr = gcd(2 * a, b);
            if bar {
                jobs.push((FamilySpec::QBar(a, b), gq - 1));
                if b >= 1 {
                    jobs.push((FamilySpec::RBar(a, b), gr - 1));
                }
            } else {
                jobs.push((FamilySpec::Q(a, b), gq));
                jobs.push((FamilySpec::R(a, b), gr));
            }
        }
    }
    jobs.into_par_iter().map(|(s, e)| index_case(s, e, cfg)).collect()
}

fn contact_case(spec: FamilySpec, cfg: &AnalyzeConfig) -> CaseResult {
    let tag = spec.to_string();
    let c = cell(cfg, &tag);
    let run = || -> Result<CaseResult> {
        let (name, q) = build(&spec)?;
        let mut rng = c.sampler("contact");
        let ind = coadjoint::index(&q, &AnalyzeConfig { mode: Mode::Probabilistic, ..c.clone() }, &mut rng)?;
        let r = is_contact_algebra(&q, &c, &mut rng, Some(&ind.witness))?;
        let computed = match r.certificate {
            ContactCertificate::Form(_) => format!("index {}, contact form found", ind.index),
            _ => format!("index {}, no contact form", ind.index),
        };
        Ok(CaseResult::new(name, "index 1, contact form found", computed, ind.failure_bound))
    };
    run().unwrap_or_else(|e| CaseResult::error(tag, "index 1, contact form found", &e))
}

fn contact_seaweeds(cfg: &AnalyzeConfig) -> Vec<CaseResult> {
    let mut specs: Vec<FamilySpec> = [(2, 4), (4, 2), (2, 8), (8, 2), (4, 6), (6, 4)]
        .into_iter()
        .map(|(a, b)| FamilySpec::QBar(a, b))
        .collect();
    specs.extend([(2, 2), (4, 2), (2, 6)].into_iter().map(|(a, b)| FamilySpec::RBar(a, b)));
    specs.into_par_iter().map(|s| contact_case(s, cfg)).collect()
}

const TINY: (i64, i64) = (1, 10_000_000_000_000_000);

fn non_contact_quotients(cfg: &AnalyzeConfig) -> Vec<CaseResult> {
    let tiny = Rat::new(TINY.0.into(), TINY.1.into());
    let mut out: Vec<CaseResult> = [1, 3, 5]
        .into_par_iter()
        .map(|b| {
            let spec = FamilySpec::QBar(1, b);
            let tag = spec.to_string();
            let c = cell(cfg, &tag);
            let expected = if b == 1 {
                "index 1, not contact, f = 0"
            } else {
                "index 1, not contact, bound < 1e-16"
            };
            let run = || -> Result<CaseResult> {
                let (name, q) = build(&spec)?;
                let mut rng = c.sampler("contact");
                let ind = index_probabilistic(&q, &c, &mut rng);
                let r = is_contact_algebra(&q, &c, &mut rng, Some(&ind.witness))?;
                let (verdict, bound) = match &r.certificate {
                    ContactCertificate::Form(_) => ("contact".to_string(), None),
                    ContactCertificate::SymbolicZero => ("not contact, f = 0".to_string(), None),
                    ContactCertificate::Sampled(bd) => (
                        if *bd < tiny {
                            "not contact, bound < 1e-16".to_string()
                        } else {
                            format!("not contact, bound {}", sci_string(bd))
                        },
                        Some(bd.clone()),
                    ),
                };
                Ok(CaseResult::new(name, expected, format!("index {}, {verdict}", ind.index), bound))
            };
            run().unwrap_or_else(|e| CaseResult::error(tag, expected, &e))
        })
        .collect();
    out.push(contact_case(FamilySpec::RBar(1, 2), cfg));
    out
}

fn labelled(q: &LieAlgebra, p: &MPoly) -> String {
    p.to_string_with(q.labels())
}

fn borel(cfg: &AnalyzeConfig) -> Vec<CaseResult> {
    let name = "borel_sl3";
    let q = match families::borel_sl3() {
        Ok((q, _)) => q,
        Err(e) => return vec![CaseResult::error(name, "algebra", &e)],
    };
    let mut out = Vec::new();
    match semi_invariants_up_to_degree(&q, 2, cfg) {
        Ok(s) => {
            let gens: Vec<MPoly> = s.generators.iter().map(|g| g.poly.clone()).collect();
            let shown: Vec<String> = gens.iter().map(|g| labelled(&q, g)).collect();
            out.push(CaseResult::new(format!("{name} generators, degree <= 2"), "z; h*z + 3*x*y", shown.join("; "), None));
            let rel = weight_relation_and_generator(&s.generators);
            let computed = match rel {
                Ok(r) => match r.generator {
                    Generator::Rational { numerator, denominator } => {
                        format!("({}) / ({})", labelled(&q, &numerator), labelled(&q, &denominator))
                    }
                    Generator::Regular(p) => format!("regular {}", labelled(&q, &p)),
                },
                Err(e) => format!("error: {e}"),
            };
            out.push(CaseResult::new(format!("{name} rational generator"), "(h*z + 3*x*y) / (z)", computed, None));
            let f = contact_semi_invariant(&q, cfg);
            let computed = match f {
                Ok(f) => match monomial_in(&f, &gens) {
                    Some(e) => format!("z^{} * H2^{}", e[0], e.get(1).copied().unwrap_or(0)),
                    None => format!("not a product: {}", labelled(&q, &f)),
                },
                Err(e) => format!("error: {e}"),
            };
            out.push(CaseResult::new(format!("{name} f up to scalar"), "z^1 * H2^1", computed, None));
        }
        Err(e) => out.push(CaseResult::error(name, "z; h*z + 3*x*y", &e)),
    }
    let p = fundamental_semi_invariant(&q, cfg).map(|p| labelled(&q, &p)).unwrap_or_else(|e| format!("error: {e}"));
    out.push(CaseResult::new(format!("{name} p"), "1", p, None));
    let reg = semi_invariants_up_to_degree(&q, 4, cfg)
        .map(|s| if s.has_regular_invariant() { "found" } else { "none" }.to_string())
        .unwrap_or_else(|e| format!("error: {e}"));
    out.push(CaseResult::new(format!("{name} regular invariant, degree <= 4"), "none", reg, None));
    out
}

fn heisenberg_ladder(cfg: &AnalyzeConfig) -> Vec<CaseResult> {
    (1..=4usize)
        .into_par_iter()
        .flat_map_iter(|n| {
            let name = format!("heisenberg({n})");
            let q = match families::heisenberg(n) {
                Ok((q, _)) => q,
                Err(e) => return vec![CaseResult::error(name, "algebra", &e)],
            };
            let z = MPoly::var(q.dim(), q.dim() - 1);
            let check = |r: Result<MPoly>, k: u32| match r {
                Ok(p) if p.proportional_to(&z.pow(k)) => format!("z^{k}"),
                Ok(p) => labelled(&q, &p),
                Err(e) => format!("error: {e}"),
            };
            vec![
                CaseResult::new(format!("{name} p"), format!("z^{n}"), check(fundamental_semi_invariant(&q, cfg), n as u32), None),
                CaseResult::new(
                    format!("{name} f"),
                    format!("z^{}", n + 1),
                    check(contact_semi_invariant(&q, cfg), n as u32 + 1),
                    None,
                ),
            ]
        })
        .collect()
}

fn sp4(cfg: &AnalyzeConfig) -> Vec<CaseResult> {
    let name = "sp4_parabolic";
    let q = match families::sp4_parabolic() {
        Ok(q) => q,
        Err(e) => return vec![CaseResult::error(name, "algebra", &e)],
    };
    let mut out = vec![contact_case(FamilySpec::Sp4Parabolic, cfg)];
    let p = fundamental_semi_invariant(&q, cfg).map(|p| labelled(&q, &p)).unwrap_or_else(|e| format!("error: {e}"));
    out.push(CaseResult::new(format!("{name} p"), "1", p, None));
    let computed = (|| -> Result<String> {
        let f = contact_semi_invariant(&q, cfg)?;
        let s = semi_invariants_up_to_degree(&q, 1, cfg)?;
        let [z] = s.generators.as_slice() else {
            return Ok(format!("{} degree-one semi-invariants", s.generators.len()));
        };
        let Some(h2) = f.div_exact(&z.poly) else {
            return Ok(format!("{} does not divide f", labelled(&q, &z.poly)));
        };
        let semi = weight_of(&q, &h2).is_some();
        Ok(format!(
            "f = {} * H2, deg H2 = {}, H2 semi-invariant: {semi}",
            labelled(&q, &z.poly),
            h2.total_degree().unwrap_or(0)
        ))
    })()
    .unwrap_or_else(|e| format!("error: {e}"));
    out.push(CaseResult::new(format!("{name} f factors"), "f = z * H2, deg H2 = 3, H2 semi-invariant: true", computed, None));
    out
}

/// The point `alpha(y) = alpha(e) = 1`, zero elsewhere, in `sl2 ⋉ k^2`.
fn sl2_plane_point() -> Vec<CaseResult> {
    let name = "sl2 ⋉ k^2";
    let q = match families::sl2_copies(1) {
        Ok((q, _)) => q,
        Err(e) => return vec![CaseResult::error(name, "algebra", &e)],
    };
    let idx = |l: &str| q.index_of(l).expect("label");
    let n = q.dim();
    let mut alpha = vec![Rat::zero(); n];
    alpha[idx("y")] = rat(1);
    alpha[idx("e")] = rat(1);
    let mut u = vec![Rat::zero(); n];
    u[idx("e")] = rat(1);
    u[idx("y")] = rat(2);
    let st = stabiliser(&q, &alpha);
    vec![
        CaseResult::new(
            format!("{name} stabiliser"),
            "span{e + 2*y}",
            if st == Subspace::span(n, vec![u.clone()]) { "span{e + 2*y}".to_string() } else { format!("{:?}", st.basis()) },
            None,
        ),
        CaseResult::new(format!("{name} alpha(u)"), "3", crate::linalg::format_rat(&dot(&alpha, &u)), None),
        CaseResult::new(format!("{name} conical"), false, is_conical_orbit(&q, &alpha), None),
        CaseResult::new(format!("{name} stable"), true, is_stable_point(&q, &alpha), None),
    ]
}

fn two_characters(cfg: &AnalyzeConfig) -> Vec<CaseResult> {
    [(1, 1), (1, 2), (2, 3), (3, 3)]
        .into_par_iter()
        .flat_map_iter(|(l, m)| {
            let spec = FamilySpec::KTwoCharacters(rat(l), rat(m));
            let c = cell(cfg, &spec.to_string());
            let expected = l != m;
            let mut out = Vec::new();
            let fam = match construct(&spec) {
                Ok(f) => f,
                Err(e) => return vec![CaseResult::error(spec.to_string(), expected, &e)],
            };
            let mut rng = c.sampler("direct");
            match is_contact_algebra(&fam.algebra, &c, &mut rng, None) {
                Ok(r) => out.push(CaseResult::new(format!("{} direct", fam.name), expected, r.contact, None)),
                Err(e) => out.push(CaseResult::error(format!("{} direct", fam.name), expected, &e)),
            }
            for sp in &fam.splittings {
                let inst = format!("{} split {:?}|{:?}", fam.name, sp.levi, sp.ideal);
                let res = SemidirectDecomposition::from_splitting(fam.algebra.clone(), sp)
                    .and_then(|d| analyze_semidirect(&d, &c, &inst));
                match res {
                    Ok(a) => out.push(CaseResult::new(
                        format!("{inst} reduction"),
                        format!("{expected}, agrees"),
                        format!("{}, {}", a.verdict == Verdict::Contact, if a.agrees { "agrees" } else { "disagrees" }),
                        None,
                    )),
                    Err(e) => out.push(CaseResult::error(inst, expected, &e)),
                }
            }
            // l = span{t, x} is Frobenius; its principal element satisfies [s, x] = -x
            let l = match Subspace::coordinate(3, &[0, 1]).to_algebra(&fam.algebra) {
                Ok(l) => l,
                Err(e) => {
                    out.push(CaseResult::error(fam.name.clone(), "[s, x] = -x", &e));
                    return out;
                }
            };
            let computed = (|| -> Result<String> {
                for _ in 0..c.trials * 4 {
                    let beta = rng.point(2);
                    match principal_element(&l, &beta) {
                        Ok(s) => {
                            let sx = l.bracket(&s, &[rat(0), rat(1)])?;
                            return Ok(if sx == vec![rat(0), rat(-1)] { "[s, x] = -x".into() } else { format!("[s, x] = {sx:?}") });
                        }
                        Err(Error::NotFrobenius) => continue,
                        Err(e) => return Err(e),
                    }
                }
                Ok("no Frobenius point found".into())
            })()
            .unwrap_or_else(|e| format!("error: {e}"));
            out.push(CaseResult::new(format!("{} principal element", fam.name), "[s, x] = -x", computed, None));
            out
        })
        .collect()
}

/// Index-one instances for the equivalence suite.
pub fn equivalence_instances() -> Result<Vec<(String, LieAlgebra)>> {
    let mut specs: Vec<FamilySpec> = [(2, 4), (4, 2), (2, 8), (8, 2), (4, 6), (6, 4), (1, 1), (1, 3), (1, 5)]
        .into_iter()
        .map(|(a, b)| FamilySpec::QBar(a, b))
        .collect();
    specs.extend([(2, 2), (4, 2), (2, 6), (1, 2)].into_iter().map(|(a, b)| FamilySpec::RBar(a, b)));
    specs.extend((1..=4).map(FamilySpec::Heisenberg));
    specs.extend([FamilySpec::Sp4Parabolic, FamilySpec::BorelSl3, FamilySpec::Sl(2), FamilySpec::Sl2MCopies(1)]);
    specs.extend([(1, 1), (1, 2), (2, 3), (3, 3)].into_iter().map(|(l, m)| FamilySpec::KTwoCharacters(rat(l), rat(m))));
    specs.iter().map(build).collect()
}

/// Splits a comma list whose entries may contain commas inside brackets.
fn split_names(list: &str) -> Vec<&str> {
    let (mut out, mut depth, mut start) = (Vec::new(), 0i32, 0);
    for (i, ch) in list.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(list[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(list[start..].trim());
    out
}

fn equivalence(filter: &str, cfg: &AnalyzeConfig) -> Result<Vec<CaseResult>> {
    let mut inst = equivalence_instances()?;
    if filter != "all" {
        let names = split_names(filter);
        inst.retain(|(n, _)| names.contains(&n.as_str()));
        if inst.is_empty() {
            return Err(Error::InvalidParams(format!("no instances match {filter:?}")));
        }
    }
    Ok(inst
        .into_par_iter()
        .map(|(name, q)| {
            let c = cell(cfg, &name);
            let run = || -> Result<CaseResult> {
                let mut rng = c.sampler("equivalence");
                let ind = index_probabilistic(&q, &c, &mut rng);
                if ind.index != 1 {
                    return Ok(CaseResult::new(name.clone(), "index 1", format!("index {}", ind.index), ind.failure_bound));
                }
                let a = &ind.witness;
                let contact = is_contact_algebra(&q, &c, &mut rng, Some(a))?;
                let nonconical = !is_conical_orbit(&q, a);
                let stable = is_stable_point(&q, a);
                // independent elimination where it is cheap enough
                let stable = match (q.dim() <= 40).then(|| coadjoint::is_stable_by_elimination(&q, a)) {
                    Some(e) if e != stable => format!("{stable} (elimination {e})"),
                    _ => stable.to_string(),
                };
                let class = if contact.contact {
                    String::new()
                } else {
                    let cl = coadjoint::classify_stabiliser_at(&q, a)?;
                    format!(", ad-nilpotent {}", cl.is_ad_nilpotent())
                };
                let cc = contact.contact;
                let expected = format!(
                    "contact {cc}, non-conical {cc}, stable {cc}{}",
                    if cc { "" } else { ", ad-nilpotent true" }
                );
                let computed = format!("contact {cc}, non-conical {nonconical}, stable {stable}{class}");
                let bound = match contact.certificate {
                    ContactCertificate::Sampled(b) => Some(b),
                    _ => ind.failure_bound,
                };
                Ok(CaseResult::new(name.clone(), expected, computed, bound))
            };
            run().unwrap_or_else(|e| CaseResult::error(name.clone(), "agreement", &e))
        })
        .collect())
}

/// Every decomposition the suites know about.
pub fn decompositions() -> Result<Vec<(String, SemidirectDecomposition)>> {
    let specs = vec![
        FamilySpec::Heisenberg(1),
        FamilySpec::Heisenberg(2),
        FamilySpec::Heisenberg(3),
        FamilySpec::BorelSl3,
        FamilySpec::Q(1, 1),
        FamilySpec::Q(1, 2),
        FamilySpec::Q(2, 2),
        FamilySpec::Q(2, 3),
        FamilySpec::QBar(1, 1),
        FamilySpec::QBar(1, 3),
        FamilySpec::QBar(2, 4),
        FamilySpec::R(1, 2),
        FamilySpec::R(2, 1),
        FamilySpec::R(2, 3),
        FamilySpec::RBar(1, 2),
        FamilySpec::RBar(2, 2),
        FamilySpec::Sl2MCopies(1),
        FamilySpec::Sl2MCopies(4),
        FamilySpec::KTwoCharacters(rat(1), rat(2)),
        FamilySpec::KTwoCharacters(rat(3), rat(3)),
        FamilySpec::Takiff {
            base: Box::new(FamilySpec::Sl(2)),
            k: 2,
        },
        FamilySpec::SlPlusTorus4Copies(0),
    ];
    let mut out = Vec::new();
    for s in specs {
        let f = construct(&s)?;
        for sp in &f.splittings {
            let name = format!("{} split {:?}|{:?}", f.name, sp.levi, sp.ideal);
            out.push((name, SemidirectDecomposition::from_splitting(f.algebra.clone(), sp)?));
        }
    }
    let sl2 = families::sl(2)?;
    let natural = vec![
        Matrix::from_i64(&[vec![1, 0], vec![0, -1]]),
        Matrix::from_i64(&[vec![0, 1], vec![0, 0]]),
        Matrix::from_i64(&[vec![0, 0], vec![1, 0]]),
    ];
    out.push(("sl2 ⋉ k^2 (built)".into(), build_semidirect(&sl2, &natural, None)?));
    let k = LieAlgebra::abelian(vec!["t".into()]);
    out.push((
        "k ⋉ k^2 diag(2, 5) (built)".into(),
        build_semidirect(&k, &[Matrix::from_i64(&[vec![2, 0], vec![0, 5]])], None)?,
    ));
    Ok(out)
}

fn splitting_index_formula(cfg: &AnalyzeConfig) -> Vec<CaseResult> {
    match decompositions() {
        Ok(ds) => ds
            .into_par_iter()
            .map(|(name, d)| {
                let c = cell(cfg, &name);
                let mut rng = c.sampler("rais");
                match rais_check(&d, &c, &mut rng) {
                    Ok(r) => CaseResult::new(
                        format!("{name}: ind l_gamma + dim V - orbit dim = {} + {} - {}", r.stabiliser_index, r.dim_v, r.orbit_dim),
                        r.lhs,
                        r.rhs,
                        None,
                    ),
                    Err(e) => CaseResult::error(name, "rais", &e),
                }
            })
            .collect(),
        Err(e) => vec![CaseResult::error("decompositions", "built", &e)],
    }
}

fn takiff(cfg: &AnalyzeConfig) -> Vec<CaseResult> {
    let run = || -> Result<Vec<CaseResult>> {
        let (b, _) = families::borel_sl3()?;
        let t = canonical_truncation(&b, 2, cfg)?;
        let qtr = t.subalgebra.to_algebra(&b)?;
        let mut out = vec![CaseResult::new("borel_sl3 q_tr dim, m", "4, 2", format!("{}, {}", qtr.dim(), t.m), None)];
        let mut cases = vec![("borel_sl3 q_tr".to_string(), qtr.clone(), 2usize)];
        for k in 1..=3 {
            cases.push((format!("takiff(q_tr, {k})"), families::takiff(&qtr, k)?, 2 * k));
        }
        cases.push(("takiff(sl(2), 2)".into(), families::takiff(&families::sl(2)?, 2)?, 2));
        let results: Vec<CaseResult> = cases.into_par_iter().map(|(name, q, e)| {
            let c = cell(cfg, &name);
            let mut rng = c.sampler("index");
            match coadjoint::index(&q, &c, &mut rng) {
                Ok(r) => CaseResult::new(name, e, r.index, r.failure_bound),
                Err(err) => CaseResult::error(name, e, &err),
            }
        }).collect();
        out.extend(results);
        Ok(out)
    };
    run().unwrap_or_else(|e| vec![CaseResult::error("takiff", "suite", &e)])
}

fn torus_extension(cfg: &AnalyzeConfig) -> Vec<CaseResult> {
    vec![
        index_case(FamilySpec::Sl2MCopies(4), 5, cfg),
        index_case(FamilySpec::SlPlusTorus4Copies(0), 1, cfg),
    ]
}

/// Algebras of dimension at most 12 used by the suites and tests.
pub fn small_corpus() -> Result<Vec<(String, LieAlgebra)>> {
    let mut specs: Vec<FamilySpec> = (1..=5).map(FamilySpec::Heisenberg).collect();
    specs.extend([FamilySpec::Gl(2), FamilySpec::Gl(3), FamilySpec::Sl(2), FamilySpec::Sl(3)]);
    specs.extend([FamilySpec::BorelSl3, FamilySpec::Sp4Parabolic]);
    for (top, bottom) in [(vec![1, 2], vec![3]), (vec![1, 1, 1], vec![3]), (vec![2, 2], vec![1, 3]), (vec![1, 3], vec![3, 1])] {
        let n = top.iter().sum();
        specs.push(FamilySpec::SeaweedSl { n, top, bottom });
    }
    for (a, b) in [(1, 1), (1, 2), (2, 1), (0, 2), (0, 3)] {
        specs.push(FamilySpec::Q(a, b));
        specs.push(FamilySpec::QBar(a, b));
    }
    for (a, b) in [(1, 1), (1, 2), (0, 3), (2, 0)] {
        specs.push(FamilySpec::R(a, b));
        specs.push(FamilySpec::RBar(a, b));
    }
    specs.extend((1..=4).map(FamilySpec::Sl2MCopies));
    specs.extend([(1, 1), (1, 2), (2, 3)].into_iter().map(|(l, m)| FamilySpec::KTwoCharacters(rat(l), rat(m))));
    for k in 2..=4 {
        specs.push(FamilySpec::Takiff {
            base: Box::new(FamilySpec::Sl(2)),
            k,
        });
    }
    specs.push(FamilySpec::Takiff {
        base: Box::new(FamilySpec::Heisenberg(1)),
        k: 3,
    });
    let mut out: Vec<(String, LieAlgebra)> = specs.iter().map(build).collect::<Result<_>>()?;
    out.retain(|(_, q)| q.dim() <= 12);
    Ok(out)
}

fn modes(cfg: &AnalyzeConfig) -> Vec<CaseResult> {
    match small_corpus() {
        Ok(c) => c
            .into_par_iter()
            .map(|(name, q)| {
                let c = cell(cfg, &name);
                let mut rng = c.sampler("modes");
                let p = index_probabilistic(&q, &c, &mut rng);
                match index_symbolic(&q, &c, &mut rng) {
                    Ok(s) => CaseResult::new(name, s.index, p.index, p.failure_bound),
                    Err(e) => CaseResult::error(name, p.index, &e),
                }
            })
            .collect(),
        Err(e) => vec![CaseResult::error("corpus", "built", &e)],
    }
}

/// Runs suites on a pool of `jobs` threads (all cores when `None`).
pub fn run_suites(names: &[String], opts: &VerifyOptions, cfg: &AnalyzeConfig, jobs: Option<usize>) -> Result<Vec<VerifyResult>> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j.max(1));
    }
    let pool = b.build().map_err(|e| Error::Other(e.to_string()))?;
    pool.install(|| names.iter().map(|n| run_suite(n, opts, cfg)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_split_outside_brackets() {
        assert_eq!(split_names("qbar(2,4), sl(2),heisenberg(1)"), vec!["qbar(2,4)", "sl(2)", "heisenberg(1)"]);
        assert_eq!(split_names("sl(2)"), vec!["sl(2)"]);
    }

    #[test]
    fn filtered_equivalence_and_unknown_suite() {
        let opts = VerifyOptions {
            max: 1,
            families: "qbar(1,1),sl(2)".into(),
        };
        let r = run_suite("equivalence", &opts, &AnalyzeConfig::default()).unwrap();
        assert_eq!(r.cases.len(), 2);
        assert!(r.passed);
        assert!(run_suite("nope", &opts, &AnalyzeConfig::default()).is_err());
    }

    #[test]
    fn small_sweep_passes_with_bounds() {
        let opts = VerifyOptions { max: 2, ..Default::default() };
        let r = run_suite("t-ind", &opts, &AnalyzeConfig::default()).unwrap();
        assert_eq!(r.cases.len(), 16);
        assert!(r.passed, "{:?}", r.cases);
    }
}
