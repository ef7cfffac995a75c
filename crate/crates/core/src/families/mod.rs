//! Named families of Lie algebras.

mod model;

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lie::{LieAlgebra, Splitting};
use crate::linalg::{format_rat, parse_rat, rat, Rat};
use model::{from_matrices, TMat};

/// A family name with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Heisenberg(usize),
    Gl(usize),
    Sl(usize),
    BorelSl3,
    Sp4Parabolic,
    SeaweedSl { n: usize, top: Vec<usize>, bottom: Vec<usize> },
    Q(usize, usize),
    QBar(usize, usize),
    R(usize, usize),
    RBar(usize, usize),
    Sl2MCopies(usize),
    KTwoCharacters(Rat, Rat),
    Takiff { base: Box<FamilySpec>, k: usize },
    SlPlusTorus4Copies(usize),
}

/// A constructed algebra with the coordinate splittings `l + V` (V an abelian
/// ideal) that come with the family.
#[derive(Clone, Debug)]
pub struct Family {
    pub name: String,
    pub algebra: LieAlgebra,
    pub splittings: Vec<Splitting>,
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        let comp = |c: &[usize]| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            Heisenberg(n) => write!(f, "heisenberg({n})"),
            Gl(n) => write!(f, "gl({n})"),
            Sl(n) => write!(f, "sl({n})"),
            BorelSl3 => write!(f, "borel_sl3"),
            Sp4Parabolic => write!(f, "sp4_parabolic"),
            SeaweedSl { n, top, bottom } => {
                write!(f, "seaweed_sl({n};{}|{})", comp(top), comp(bottom))
            }
            Q(a, b) => write!(f, "q({a},{b})"),
            QBar(a, b) => write!(f, "qbar({a},{b})"),
            R(a, b) => write!(f, "r({a},{b})"),
            RBar(a, b) => write!(f, "rbar({a},{b})"),
            Sl2MCopies(m) => write!(f, "sl2_copies({m})"),
            KTwoCharacters(l, m) => write!(f, "k_two_characters({},{})", format_rat(l), format_rat(m)),
            Takiff { base, k } => write!(f, "takiff({base},{k})"),
            SlPlusTorus4Copies(n) => write!(f, "sl_torus_4copies({n})"),
        }
    }
}

fn params(tokens: &[String], count: usize, name: &str) -> Result<Vec<usize>> {
    if tokens.len() != count {
        return Err(Error::InvalidParams(format!(
            "{name} takes {count} parameter(s), got {}",
            tokens.len()
        )));
    }
    tokens
        .iter()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidParams(format!("{name}: expected a non-negative integer, got {t:?}")))
        })
        .collect()
}

fn composition(t: &str) -> Result<Vec<usize>> {
    t.split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .ok()
                .filter(|&x| x > 0)
                .ok_or_else(|| Error::InvalidParams(format!("bad composition part {p:?}")))
        })
        .collect()
}

impl FamilySpec {
    /// Parses `name param...` as used on the command line, e.g.
    /// `["qbar", "2", "4"]` or `["takiff", "2", "sl", "2"]`.
    pub fn parse(tokens: &[String]) -> Result<Self> {
        let Some((name, rest)) = tokens.split_first() else {
            return Err(Error::InvalidParams("missing family name".into()));
        };
        let key = name.to_ascii_lowercase().replace('-', "_");
        let spec = match key.as_str() {
            "heisenberg" => Self::Heisenberg(params(rest, 1, name)?[0]),
            "gl" => Self::Gl(params(rest, 1, name)?[0]),
            "sl" => Self::Sl(params(rest, 1, name)?[0]),
            "borel_sl3" => {
                params(rest, 0, name)?;
                Self::BorelSl3
            }
            "sp4_parabolic" => {
                params(rest, 0, name)?;
                Self::Sp4Parabolic
            }
            "seaweed_sl" => {
                if rest.len() != 3 {
                    return Err(Error::InvalidParams(
                        "seaweed-sl takes n, top composition, bottom composition".into(),
                    ));
                }
                let n = params(&rest[..1], 1, name)?[0];
                Self::SeaweedSl {
                    n,
                    top: composition(&rest[1])?,
                    bottom: composition(&rest[2])?,
                }
            }
            "q" | "q_ab" => {
                let p = params(rest, 2, name)?;
                Self::Q(p[0], p[1])
            }
            "qbar" | "qbar_ab" => {
                let p = params(rest, 2, name)?;
                Self::QBar(p[0], p[1])
            }
            "r" | "r_ab" => {
                let p = params(rest, 2, name)?;
                Self::R(p[0], p[1])
            }
            "rbar" | "rbar_ab" => {
                let p = params(rest, 2, name)?;
                Self::RBar(p[0], p[1])
            }
            "sl2_copies" | "sl2_m_copies" => Self::Sl2MCopies(params(rest, 1, name)?[0]),
            "k_two_characters" => {
                if rest.len() != 2 {
                    return Err(Error::InvalidParams("k-two-characters takes two rationals".into()));
                }
                let p: Vec<Rat> = rest
                    .iter()
                    .map(|t| parse_rat(t).ok_or_else(|| Error::InvalidParams(format!("bad rational {t:?}"))))
                    .collect::<Result<_>>()?;
                Self::KTwoCharacters(p[0].clone(), p[1].clone())
            }
            "takiff" => {
                let Some((k, base)) = rest.split_first() else {
                    return Err(Error::InvalidParams("takiff takes k and a base family".into()));
                };
                let k = params(std::slice::from_ref(k), 1, name)?[0];
                Self::Takiff {
                    base: Box::new(Self::parse(base)?),
                    k,
                }
            }
            "sl_torus" | "sl_torus_4copies" | "sl_plus_torus_4copies" => {
                Self::SlPlusTorus4Copies(params(rest, 1, name)?[0])
            }
            _ => return Err(Error::InvalidParams(format!("unknown family {name:?}"))),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        use FamilySpec::*;
        let bad = |m: String| Err(Error::InvalidParams(m));
        match self {
            Heisenberg(0) => bad("heisenberg needs n >= 1".into()),
            Gl(0) => bad("gl needs n >= 1".into()),
            Sl(n) if *n < 2 => bad("sl needs n >= 2".into()),
            SeaweedSl { n, top, bottom } => {
                if *n < 2 || top.iter().sum::<usize>() != *n || bottom.iter().sum::<usize>() != *n {
                    bad(format!("compositions must both sum to n = {n} >= 2"))
                } else {
                    Ok(())
                }
            }
            Q(0, 0) | QBar(0, 0) | R(0, 0) | RBar(0, 0) => bad("a and b cannot both be 0".into()),
            KTwoCharacters(l, m) if l.is_zero() || m.is_zero() => bad("characters must be non-zero".into()),
            Takiff { k: 0, .. } => bad("takiff needs k >= 1".into()),
            Takiff { base, .. } => base.validate(),
            _ => Ok(()),
        }
    }
}

/// Builds the algebra of a family.
pub fn construct(spec: &FamilySpec) -> Result<Family> {
    use FamilySpec::*;
    spec.validate()?;
    let (algebra, splittings) = match spec {
        Heisenberg(n) => heisenberg(*n)?,
        Gl(n) => (gl(*n)?, vec![]),
        Sl(n) => (sl(*n)?, vec![]),
        BorelSl3 => borel_sl3()?,
        Sp4Parabolic => (sp4_parabolic()?, vec![]),
        SeaweedSl { n, top, bottom } => (seaweed_sl(*n, top, bottom)?, vec![]),
        Q(a, b) => q_family(*a, *b, false)?,
        QBar(a, b) => q_family(*a, *b, true)?,
        R(a, b) => r_family(*a, *b, false)?,
        RBar(a, b) => r_family(*a, *b, true)?,
        Sl2MCopies(m) => sl2_copies(*m)?,
        KTwoCharacters(l, m) => k_two_characters(l, m)?,
        Takiff { base, k } => {
            let b = construct(base)?;
            let t = takiff(&b.algebra, *k)?;
            let sp = if *k == 2 {
                let d = b.algebra.dim();
                vec![Splitting {
                    levi: (0..d).collect(),
                    ideal: (d..2 * d).collect(),
                }]
            } else {
                vec![]
            };
            (t, sp)
        }
        SlPlusTorus4Copies(n) => sl_plus_torus(*n)?,
    };
    Ok(Family {
        name: spec.to_string(),
        algebra,
        splittings,
    })
}

fn strings<I: IntoIterator<Item = S>, S: Into<String>>(it: I) -> Vec<String> {
    it.into_iter().map(Into::into).collect()
}

/// `{p}{i}{j}` with 1-based indices, or `{p}{i}_{j}` once indices reach 10.
fn pair_label(p: &str, i: usize, j: usize, bound: usize) -> String {
    if bound < 10 {
        format!("{p}{}{}", i + 1, j + 1)
    } else {
        format!("{p}{}_{}", i + 1, j + 1)
    }
}

/// `x_1..x_n, y_1..y_n, z` with `[x_i, y_i] = z`; for `n = 1` the labels are
/// `x, y, z`.
pub fn heisenberg(n: usize) -> Result<(LieAlgebra, Vec<Splitting>)> {
    let labels = if n == 1 {
        strings(["x", "y", "z"])
    } else {
        let mut l: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        l.extend((1..=n).map(|i| format!("y{i}")));
        l.push("z".into());
        l
    };
    let entries = (0..n).map(|i| (i, n + i, vec![(2 * n, rat(1))])).collect();
    let q = LieAlgebra::new(labels, entries)?;
    let sp = Splitting {
        levi: (0..n).collect(),
        ideal: (n..2 * n + 1).collect(),
    };
    Ok((q, vec![sp]))
}

/// Matrix units `E_ij`.
pub fn gl(n: usize) -> Result<LieAlgebra> {
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n {
        for j in 0..n {
            labels.push(pair_label("e", i, j, n));
            basis.push(TMat::unit(i, j));
        }
    }
    from_matrices(labels, basis, n, 1)
}

/// `h_i = E_ii - E_{i+1,i+1}` followed by the off-diagonal `E_ij`; for
/// `n = 2` the basis is `h, e, f`.
pub fn sl(n: usize) -> Result<LieAlgebra> {
    let (labels, basis) = sl_basis(n, 0);
    from_matrices(labels, basis, n, 1)
}

fn sl_basis(n: usize, offset: usize) -> (Vec<String>, Vec<TMat>) {
    if n == 2 {
        return (
            strings(["h", "e", "f"]),
            vec![
                TMat::diag_diff(offset, offset + 1),
                TMat::unit(offset, offset + 1),
                TMat::unit(offset + 1, offset),
            ],
        );
    }
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n - 1 {
        labels.push(format!("h{}", i + 1));
        basis.push(TMat::diag_diff(offset + i, offset + i + 1));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                labels.push(pair_label("e", i, j, n));
                basis.push(TMat::unit(offset + i, offset + j));
            }
        }
    }
    (labels, basis)
}

/// Borel subalgebra of `sl_3` with basis `h = diag(1,-2,1)`,
/// `h1 = diag(1,0,-1)`, `x = E12`, `y = E23`, `z = E13`.
pub fn borel_sl3() -> Result<(LieAlgebra, Vec<Splitting>)> {
    let h = TMat::unit(0, 0).add_entry(0, 1, 1, rat(-2)).add_entry(0, 2, 2, rat(1));
    let h1 = TMat::diag_diff(0, 2);
    let q = from_matrices(
        strings(["h", "h1", "x", "y", "z"]),
        vec![h, h1, TMat::unit(0, 1), TMat::unit(1, 2), TMat::unit(0, 2)],
        3,
        1,
    )?;
    let sp = Splitting {
        levi: vec![0, 1, 2],
        ideal: vec![3, 4],
    };
    Ok((q, vec![sp]))
}

/// Maximal parabolic of `sp_4 = {X : X^T J + J X = 0}` (`J` antidiagonal
/// with entries `1, 1, -1, -1`) stabilising the line through `e1`. Its
/// nilradical is the Heisenberg algebra on `x, y, z` and its Levi part is
/// `gl_2` spanned by `t, h, e, f`.
pub fn sp4_parabolic() -> Result<LieAlgebra> {
    let j = |r: usize, c: usize| -> Rat {
        match (r, c) {
            (0, 3) | (1, 2) => rat(1),
            (2, 1) | (3, 0) => rat(-1),
            _ => Rat::zero(),
        }
    };
    // X + J X^T J lies in sp_4 for any X, since J^2 = -I; halved when X
    // already lies in sp_4
    let symplectic = |r0: usize, c0: usize| -> TMat {
        let mut m = TMat::unit(r0, c0);
        for r in 0..4 {
            for c in 0..4 {
                // (J E^T J)_{rc} = J_{r c0} J_{r0 c}
                let v = j(r, c0) * j(r0, c);
                if !v.is_zero() {
                    m = m.add_entry(0, r, c, v);
                }
            }
        }
        if m.get(0, r0, c0) == rat(2) {
            m = m.scale(&crate::linalg::ratio(1, 2));
        }
        m
    };
    let basis = vec![
        symplectic(0, 0),
        symplectic(1, 1),
        symplectic(1, 2),
        symplectic(2, 1),
        symplectic(0, 1),
        symplectic(0, 2),
        symplectic(0, 3),
    ];
    // every element maps e1 into the line k e1
    if basis.iter().any(|m| (1..4).any(|r| !m.get(0, r, 0).is_zero())) {
        return Err(Error::InvalidAlgebra("parabolic does not fix the line".into()));
    }
    from_matrices(strings(["t", "h", "e", "f", "x", "y", "z"]), basis, 4, 1)
}

/// Seaweed subalgebra of `sl_n`: `E_ij` with `top(i) <= top(j)` and
/// `bottom(i) >= bottom(j)`, where `top` and `bottom` give the block index
/// of a row in each composition, together with the diagonal trace-zero part.
pub fn seaweed_sl(n: usize, top: &[usize], bottom: &[usize]) -> Result<LieAlgebra> {
    let block = |c: &[usize]| -> Vec<usize> {
        c.iter().enumerate().flat_map(|(b, &len)| std::iter::repeat_n(b, len)).collect()
    };
    let (t, b) = (block(top), block(bottom));
    if t.len() != n || b.len() != n {
        return Err(Error::InvalidParams("composition mismatch".into()));
    }
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    for i in 0..n - 1 {
        labels.push(format!("h{}", i + 1));
        basis.push(TMat::diag_diff(i, i + 1));
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && t[i] <= t[j] && b[i] >= b[j] {
                labels.push(pair_label("e", i, j, n));
                basis.push(TMat::unit(i, j));
            }
        }
    }
    from_matrices(labels, basis, n, 1)
}

/// Reductive part `gl_a + gl_b` (rows `0..a` and `a..a+b`), or its
/// total-trace-zero part when `bar` is set.
fn levi_basis(a: usize, b: usize, bar: bool) -> (Vec<String>, Vec<TMat>) {
    let n = a + b;
    let mut labels = Vec::new();
    let mut basis = Vec::new();
    let blocks = [("a", 0, a), ("b", a, b)];
    if bar {
        for k in 0..n.saturating_sub(1) {
            labels.push(format!("h{}", k + 1));
            basis.push(TMat::diag_diff(k, k + 1));
        }
    }
    for (p, off, size) in blocks {
        for i in 0..size {
            for j in 0..size {
                if bar && i == j {
                    continue;
                }
                labels.push(pair_label(p, i, j, size));
                basis.push(TMat::unit(off + i, off + j));
            }
        }
    }
    (labels, basis)
}

/// `q(a,b) = (gl_a + gl_b) ⋉ 2 (k^a ⊗ k^b)` realized inside
/// `gl_{a+b}[t]/(t^2)`: copy `u` in degree 0 and copy `v` in degree 1 of the
/// upper-right block, so `[(X,Y), w] = X w - w Y` on both. The bar variant
/// keeps only the total-trace-zero reductive part.
pub fn q_family(a: usize, b: usize, bar: bool) -> Result<(LieAlgebra, Vec<Splitting>)> {
    let (mut labels, mut basis) = levi_basis(a, b, bar);
    let nl = basis.len();
    let bound = a.max(b);
    for (p, deg) in [("u", 0), ("v", 1)] {
        for i in 0..a {
            for j in 0..b {
                labels.push(pair_label(p, i, j, bound));
                basis.push(TMat::unit_t(deg, i, a + j));
            }
        }
    }
    let q = from_matrices(labels, basis, a + b, 2)?;
    let ab = a * b;
    let mut sp = vec![Splitting {
        levi: (0..nl).collect(),
        ideal: (nl..nl + 2 * ab).collect(),
    }];
    if ab > 0 {
        sp.push(Splitting {
            levi: (0..nl + ab).collect(),
            ideal: (nl + ab..nl + 2 * ab).collect(),
        });
    }
    Ok((q, sp))
}

/// `r(a,b) = (gl_a + gl_b) ⋉ ((gl_a^ab + W) + V)` realized inside
/// `gl_{a+b}[t]/(t^2)`: `m = t E_ij` in the top-left block, `w` in degree 0
/// and `v` in degree 1 of the upper-right block, so `[m, w] = m w`.
pub fn r_family(a: usize, b: usize, bar: bool) -> Result<(LieAlgebra, Vec<Splitting>)> {
    let (mut labels, mut basis) = levi_basis(a, b, bar);
    let nl = basis.len();
    for i in 0..a {
        for j in 0..a {
            labels.push(pair_label("m", i, j, a));
            basis.push(TMat::unit_t(1, i, j));
        }
    }
    let bound = a.max(b);
    for (p, deg) in [("w", 0), ("v", 1)] {
        for i in 0..a {
            for j in 0..b {
                labels.push(pair_label(p, i, j, bound));
                basis.push(TMat::unit_t(deg, i, a + j));
            }
        }
    }
    let q = from_matrices(labels, basis, a + b, 2)?;
    let (m0, w0, v0, end) = (nl, nl + a * a, nl + a * a + a * b, nl + a * a + 2 * a * b);
    let with_w = Splitting {
        levi: (0..nl).chain(w0..v0).collect(),
        ideal: (m0..w0).chain(v0..end).collect(),
    };
    let with_m = Splitting {
        levi: (0..w0).collect(),
        ideal: (w0..end).collect(),
    };
    let sp = if a == 0 {
        vec![]
    } else if b == 0 {
        vec![with_m]
    } else if a <= b {
        vec![with_w, with_m]
    } else {
        vec![with_m, with_w]
    };
    Ok((q, sp))
}

/// `sl_2 ⋉ m k^2` with `h, e, f` and copies `x_c, y_c` where
/// `[e, y_c] = x_c`; for `m = 1` the copy is `x, y`.
pub fn sl2_copies(m: usize) -> Result<(LieAlgebra, Vec<Splitting>)> {
    let (mut labels, mut basis) = sl_basis(2, 0);
    for c in 0..m {
        let (x, y) = if m == 1 {
            ("x".to_string(), "y".to_string())
        } else {
            (format!("x{}", c + 1), format!("y{}", c + 1))
        };
        labels.push(x);
        basis.push(TMat::unit(0, 2 + c));
        labels.push(y);
        basis.push(TMat::unit(1, 2 + c));
    }
    let q = from_matrices(labels, basis, 2 + m, 1)?;
    let sp = Splitting {
        levi: vec![0, 1, 2],
        ideal: (3..3 + 2 * m).collect(),
    };
    Ok((q, vec![sp]))
}

/// `k t ⋉ (k x + k y)` with `[t, x] = λ x`, `[t, y] = μ y`.
pub fn k_two_characters(l: &Rat, m: &Rat) -> Result<(LieAlgebra, Vec<Splitting>)> {
    let q = LieAlgebra::new(
        strings(["t", "x", "y"]),
        vec![(0, 1, vec![(1, l.clone())]), (0, 2, vec![(2, m.clone())])],
    )?;
    let sp = vec![
        Splitting {
            levi: vec![0],
            ideal: vec![1, 2],
        },
        Splitting {
            levi: vec![0, 1],
            ideal: vec![2],
        },
    ];
    Ok((q, sp))
}

/// Truncated current algebra `q[t]/(t^k)` with basis `x t^p`, labelled
/// `x` for `p = 0` and `x_t{p}` otherwise.
pub fn takiff(q: &LieAlgebra, k: usize) -> Result<LieAlgebra> {
    let n = q.dim();
    let mut labels = Vec::with_capacity(n * k);
    for p in 0..k {
        for l in q.labels() {
            labels.push(if p == 0 { l.clone() } else { format!("{l}_t{p}") });
        }
    }
    let mut entries = Vec::new();
    for p in 0..k {
        for r in 0..k - p {
            for (i, j, v) in q.brackets() {
                let s = p + r;
                entries.push((
                    p * n + i,
                    r * n + j,
                    v.iter().map(|(c, x)| (s * n + c, x.clone())).collect(),
                ));
            }
        }
    }
    // entries (p,i,r,j) and (r,j,p,i) describe the same bracket; keep one
    let mut seen = std::collections::HashSet::new();
    entries.retain(|(a, b, _)| seen.insert((*a.min(b), *a.max(b))));
    LieAlgebra::new(labels, entries)
}

/// `(sl_N + k^4) ⋉ 4 k^N` with `N = 2n + 2`, the torus element `t_c`
/// scaling the `c`-th copy of `k^N`.
pub fn sl_plus_torus(n: usize) -> Result<(LieAlgebra, Vec<Splitting>)> {
    let big = 2 * n + 2;
    let (mut labels, mut basis) = sl_basis(big, 0);
    let ns = basis.len();
    for c in 0..4 {
        labels.push(format!("t{}", c + 1));
        basis.push(TMat::unit(big + c, big + c));
    }
    for c in 0..4 {
        for i in 0..big {
            labels.push(if big == 2 {
                format!("{}{}", ["x", "y"][i], c + 1)
            } else {
                format!("v{}_{}", c + 1, i + 1)
            });
            basis.push(TMat::unit(i, big + c));
        }
    }
    let q = from_matrices(labels, basis, big + 4, 1)?;
    let sp = Splitting {
        levi: (0..ns + 4).collect(),
        ideal: (ns + 4..ns + 4 + 4 * big).collect(),
    };
    Ok((q, vec![sp]))
}
