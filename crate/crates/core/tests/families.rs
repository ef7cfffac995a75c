use contact_core::coadjoint::index_probabilistic;
use contact_core::config::AnalyzeConfig;
use contact_core::families::{construct, FamilySpec};
use contact_core::lie::{LieAlgebra, Subspace};
use contact_core::semidirect::{generic_gamma, stabiliser_in_levi, SemidirectDecomposition};

/// Dimensions of the derived series, the lower central series and the centre;
/// equal for isomorphic algebras.
fn fingerprint(q: &LieAlgebra) -> (Vec<usize>, Vec<usize>, usize) {
    let n = q.dim();
    let bracket_span = |a: &Subspace, b: &Subspace| {
        let mut v = Vec::new();
        for x in a.basis() {
            for y in b.basis() {
                v.push(q.bracket(x, y).unwrap());
            }
        }
        Subspace::span(n, v)
    };
    let full = Subspace::full(n);
    let (mut derived, mut lower) = (vec![n], vec![n]);
    let (mut d, mut l) = (full.clone(), full.clone());
    for _ in 0..n {
        d = bracket_span(&d, &d);
        l = bracket_span(&full, &l);
        derived.push(d.dim());
        lower.push(l.dim());
    }
    (derived, lower, q.derived_and_center().1.dim())
}

#[test]
fn generic_stabiliser_in_q_is_r() {
    // for a <= b the levi H + V_1 of q(a,b) fixes a generic point of V_2^*
    // in a copy of r(a, b - a)
    for (a, b) in [(1, 1), (1, 2), (1, 3), (2, 2), (2, 3)] {
        let f = construct(&FamilySpec::Q(a, b)).unwrap();
        let sp = f.splittings.last().unwrap();
        let d = SemidirectDecomposition::from_splitting(f.algebra.clone(), sp).unwrap();
        let cfg = AnalyzeConfig::default();
        let mut rng = cfg.sampler("families");
        let (gamma, _) = generic_gamma(&d, &cfg, &mut rng);
        let lg = stabiliser_in_levi(&d, &gamma).to_algebra(d.levi_algebra()).unwrap();
        let r = construct(&FamilySpec::R(a, b - a)).unwrap().algebra;
        assert_eq!(lg.dim(), r.dim(), "q({a},{b})");
        assert_eq!(fingerprint(&lg), fingerprint(&r), "q({a},{b})");
        let il = index_probabilistic(&lg, &cfg, &mut rng).index;
        let ir = index_probabilistic(&r, &cfg, &mut rng).index;
        assert_eq!(il, ir, "q({a},{b})");
    }
}

#[test]
fn dimensions_of_the_families() {
    let dim = |s: FamilySpec| construct(&s).unwrap().algebra.dim();
    // a^2 + b^2 + 2ab, one less for the bar variant
    assert_eq!(dim(FamilySpec::Q(2, 3)), 25);
    assert_eq!(dim(FamilySpec::QBar(2, 4)), 35);
    // a^2 + b^2 + a^2 + 2ab
    assert_eq!(dim(FamilySpec::R(2, 3)), 29);
    assert_eq!(dim(FamilySpec::Heisenberg(3)), 7);
    assert_eq!(dim(FamilySpec::Takiff { base: Box::new(FamilySpec::Sl(2)), k: 3 }), 9);
}
