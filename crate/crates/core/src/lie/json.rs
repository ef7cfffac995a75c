//! Text format for algebras:
//! `{"dim": n, "basis": [..], "brackets": [{"i": 0, "j": 1, "c": {"2": "1"}}]}`
//! with an optional `"splitting": {"levi": [..], "ideal": [..]}` of
//! coordinate indices.

use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;

use super::{LieAlgebra, Sparse};
use crate::error::{Error, Result};
use crate::linalg::{format_rat, parse_rat};

/// Coordinate splitting `q = levi + ideal` declared in an algebra file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Splitting {
    pub levi: Vec<usize>,
    pub ideal: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    basis: Vec<String>,
    brackets: Vec<BracketEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    splitting: Option<Splitting>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BracketEntry {
    i: usize,
    j: usize,
    #[serde(serialize_with = "ser_coeffs", deserialize_with = "de_coeffs")]
    c: Vec<(usize, String)>,
}

fn ser_coeffs<S: Serializer>(c: &[(usize, String)], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut m = s.serialize_map(Some(c.len()))?;
    for (k, v) in c {
        m.serialize_entry(&k.to_string(), v)?;
    }
    m.end()
}

fn de_coeffs<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<(usize, String)>, D::Error> {
    let raw: BTreeMap<String, String> = BTreeMap::deserialize(d)?;
    let mut out = Vec::with_capacity(raw.len());
    for (k, v) in raw {
        let idx = k
            .parse::<usize>()
            .map_err(|_| serde::de::Error::custom(format!("bad coefficient index {k:?}")))?;
        out.push((idx, v));
    }
    out.sort_by_key(|(k, _)| *k);
    Ok(out)
}

/// Pretty-printed JSON; coefficient keys appear in numeric order.
pub fn algebra_to_json(q: &LieAlgebra, splitting: Option<&Splitting>) -> String {
    let file = AlgebraFile {
        dim: q.dim(),
        basis: q.labels().to_vec(),
        brackets: q
            .brackets()
            .map(|(i, j, v)| BracketEntry {
                i,
                j,
                c: v.iter().map(|(k, x)| (*k, format_rat(x))).collect(),
            })
            .collect(),
        splitting: splitting.cloned(),
    };
    let mut s = serde_json::to_string_pretty(&file).expect("serializable");
    s.push('\n');
    s
}

/// Parses and validates an algebra file.
pub fn algebra_from_json(text: &str) -> Result<(LieAlgebra, Option<Splitting>)> {
    let file: AlgebraFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if file.dim != file.basis.len() {
        return Err(Error::Parse(format!(
            "dim {} but {} basis labels",
            file.dim,
            file.basis.len()
        )));
    }
    let mut entries = Vec::new();
    for b in file.brackets {
        if b.i >= b.j {
            return Err(Error::Parse(format!("bracket entry needs i < j, got ({}, {})", b.i, b.j)));
        }
        let mut v: Sparse = Vec::new();
        for (k, s) in b.c {
            let x = parse_rat(&s).ok_or_else(|| Error::Parse(format!("bad rational {s:?}")))?;
            v.push((k, x));
        }
        entries.push((b.i, b.j, v));
    }
    let q = LieAlgebra::new(file.basis, entries)?;
    if let Some(sp) = &file.splitting {
        let mut all: Vec<usize> = sp.levi.iter().chain(&sp.ideal).copied().collect();
        all.sort_unstable();
        if all != (0..q.dim()).collect::<Vec<_>>() {
            return Err(Error::Parse(
                "splitting must partition the basis indices".into(),
            ));
        }
    }
    Ok((q, file.splitting))
}
