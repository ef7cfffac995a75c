//! The combined report for one algebra file.

use serde::Serialize;

use crate::coadjoint::{analyze, CoadjointReport};
use crate::config::AnalyzeConfig;
use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Splitting};
use crate::semidirect::{analyze_semidirect, rais_check, RaisCheck, SemidirectAnalysis, SemidirectDecomposition};
use crate::semiinv::{self, SemiInvariantReport};

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    #[serde(flatten)]
    pub coadjoint: CoadjointReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rais: Option<RaisCheck>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semidirect: Option<SemidirectAnalysis>,
    /// Why the declared splitting could not be analysed, if it could not.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semidirect_note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semiinv: Option<SemiInvariantReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub semiinv_note: Option<String>,
    pub seed: u64,
    pub trials: usize,
    pub bound: u64,
    pub mode: String,
}

/// Coadjoint analysis, plus the semi-direct reduction when a splitting is
/// given and the semi-invariant search when asked for.
pub fn analyze_algebra(
    q: &LieAlgebra,
    splitting: Option<&Splitting>,
    cfg: &AnalyzeConfig,
    with_semiinv: bool,
    name: &str,
) -> Result<AnalysisReport> {
    let coadjoint = analyze(q, cfg)?;
    let (mut rais, mut semidirect, mut note) = (None, None, None);
    if let Some(sp) = splitting {
        let d = SemidirectDecomposition::from_splitting(q.clone(), sp)?;
        let mut rng = cfg.sampler("rais");
        rais = Some(rais_check(&d, cfg, &mut rng)?);
        if coadjoint.index == 1 {
            match analyze_semidirect(&d, cfg, name) {
                Ok(a) => semidirect = Some(a),
                Err(e @ (Error::InvalidDecomposition(_) | Error::IndexNotOne(_))) => note = Some(e.to_string()),
                Err(e) => return Err(e),
            }
        } else {
            note = Some(format!("contact reduction needs index 1, found {}", coadjoint.index));
        }
    }
    let (mut semiinv, mut semiinv_note) = (None, None);
    if with_semiinv {
        match semiinv::report(q, coadjoint.f_poly.as_ref(), cfg) {
            Ok(s) => semiinv = Some(s),
            Err(e @ (Error::Budget(_) | Error::IrrationalWeight(_))) => semiinv_note = Some(e.to_string()),
            Err(e) => return Err(e),
        }
    }
    Ok(AnalysisReport {
        coadjoint,
        rais,
        semidirect,
        semidirect_note: note,
        semiinv,
        semiinv_note,
        seed: cfg.seed,
        trials: cfg.trials,
        bound: cfg.bound,
        mode: cfg.mode.to_string(),
    })
}

/// Two-column text rendering.
pub fn render_pretty(r: &AnalysisReport) -> String {
    let c = &r.coadjoint;
    let mut rows: Vec<(String, String)> = vec![
        ("dimension".into(), c.dim.to_string()),
        ("index".into(), format!("{} ({})", c.index, c.method)),
    ];
    if let Some(b) = &c.index_failure_bound {
        rows.push(("index failure bound".into(), b.clone()));
    }
    if let Some(ct) = c.contact {
        rows.push(("contact".into(), format!("{ct} ({})", c.contact_certificate.as_deref().unwrap_or(""))));
    }
    if let Some(b) = &c.contact_failure_bound {
        rows.push(("contact failure bound".into(), b.clone()));
    }
    rows.push(("generic orbit conical".into(), c.generic_conical.to_string()));
    rows.push(("stable point".into(), c.stable.to_string()));
    rows.push(("stabiliser class".into(), c.stabiliser_class.clone()));
    rows.push(("p".into(), c.p.clone().unwrap_or_else(|| "n/a".into())));
    rows.push(("f".into(), c.f.clone().unwrap_or_else(|| "n/a".into())));
    if let Some(k) = c.codim2 {
        rows.push(("codim-2 property".into(), k.to_string()));
    }
    if let Some(rc) = &r.rais {
        rows.push((
            "index via splitting".into(),
            format!(
                "{} = {} + {} - {} ({})",
                rc.lhs,
                rc.stabiliser_index,
                rc.dim_v,
                rc.orbit_dim,
                if rc.ok { "ok" } else { "MISMATCH" }
            ),
        ));
    }
    if let Some(s) = &r.semidirect {
        rows.push(("reduction".into(), format!("case {:?}, {:?}, verdict {:?}", s.case, s.rule, s.verdict)));
        rows.push(("reduction chain".into(), s.chain.join(" ⇝ ")));
        rows.push(("agrees with direct test".into(), s.agrees.to_string()));
    }
    if let Some(n) = &r.semidirect_note {
        rows.push(("reduction".into(), n.clone()));
    }
    if let Some(si) = &r.semiinv {
        let gens: Vec<String> = si.generators.iter().map(|g| g.poly.clone()).collect();
        rows.push((format!("semi-invariants (deg <= {})", si.degree_bound), gens.join("; ")));
        if let Some(g) = &si.generator {
            rows.push((format!("{} generator", si.generator_kind.as_deref().unwrap_or("")), g.clone()));
        }
        rows.push(("truncation dimension".into(), si.truncation_dim.to_string()));
    }
    let w = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:<w$}  {v}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{construct, FamilySpec};

    #[test]
    fn report_with_splitting() {
        let f = construct(&FamilySpec::QBar(1, 1)).unwrap();
        let r = analyze_algebra(&f.algebra, f.splittings.first(), &AnalyzeConfig::default(), true, &f.name).unwrap();
        assert_eq!(r.coadjoint.contact, Some(false));
        assert_eq!(r.coadjoint.stabiliser_class, "nilpotent");
        assert!(r.rais.as_ref().unwrap().ok);
        assert!(r.semidirect.as_ref().unwrap().agrees);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["index"], 1);
        assert_eq!(json["contact"], false);
        assert!(render_pretty(&r).contains("stabiliser class"));
    }
}
