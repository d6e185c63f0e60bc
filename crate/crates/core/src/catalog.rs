//! Hard-coded geometry data: quivers with potential, framed examples, Koszul
//! resolutions with their generator maps, monad templates, and divisor shifts.

use crate::framing::FramedQuiverWithPotential;
use crate::monad::{MonadTemplate, Slot};
use crate::ncalg::{Potential, Quiver};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("`{0}` is not in the catalog")]
    NotInCatalog(String),
    #[error("negative shift {value} at position {index}")]
    NegativeShift { index: usize, value: i64 },
    #[error("invalid partition data: {0}")]
    BadPartition(String),
    #[error("upper shifts s(i,i+1) must vanish")]
    UpperShift,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeometryId {
    C3,
    Conifold,
    Y20,
    Ym0(u32),
    Ymn(u32, u32),
}

impl GeometryId {
    /// Collapses aliases: `Ym0(2)` is `Y20`, `Ymn(1,1)` is the conifold, `Ymn(m,0)` is `Ym0(m)`.
    pub fn normalize(self) -> Result<GeometryId, CatalogError> {
        use GeometryId::*;
        Ok(match self {
            Ym0(0) | Ymn(0, _) => return Err(CatalogError::NotInCatalog(self.to_string())),
            Ym0(2) | Ymn(2, 0) => Y20,
            Ymn(1, 1) => Conifold,
            Ymn(m, 0) => Ym0(m),
            Ymn(..) => return Err(CatalogError::NotInCatalog(self.to_string())),
            g => g,
        })
    }
}

impl fmt::Display for GeometryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeometryId::C3 => write!(f, "c3"),
            GeometryId::Conifold => write!(f, "conifold"),
            GeometryId::Y20 => write!(f, "y20"),
            GeometryId::Ym0(m) => write!(f, "ym0:{m}"),
            GeometryId::Ymn(m, n) => write!(f, "ymn:{m},{n}"),
        }
    }
}

impl FromStr for GeometryId {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let l = s.to_ascii_lowercase();
        let bad = || CatalogError::NotInCatalog(s.to_string());
        Ok(match l.as_str() {
            "c3" => GeometryId::C3,
            "conifold" | "y11" => GeometryId::Conifold,
            "y20" => GeometryId::Y20,
            _ => {
                if let Some(m) = l.strip_prefix("ym0:") {
                    GeometryId::Ym0(m.parse().map_err(|_| bad())?)
                } else if let Some(r) = l.strip_prefix("ymn:") {
                    let (a, b) = r.split_once(',').ok_or_else(bad)?;
                    GeometryId::Ymn(a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FramedExampleId {
    PervSystem(GeometryId, usize),
    ADHM3d,
    Spiked(usize, usize, usize),
    KN,
    BeilinsonQ,
    PreChainsaw,
    Chainsaw2,
    NY3d,
}

impl fmt::Display for FramedExampleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FramedExampleId::PervSystem(g, r) => write!(f, "perv:{g}:{r}"),
            FramedExampleId::ADHM3d => write!(f, "adhm3d"),
            FramedExampleId::Spiked(a, b, c) => write!(f, "spiked:{a},{b},{c}"),
            FramedExampleId::KN => write!(f, "kn"),
            FramedExampleId::BeilinsonQ => write!(f, "beilinson"),
            FramedExampleId::PreChainsaw => write!(f, "prechainsaw"),
            FramedExampleId::Chainsaw2 => write!(f, "chainsaw"),
            FramedExampleId::NY3d => write!(f, "ny3d"),
        }
    }
}

impl FromStr for FramedExampleId {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let l = s.to_ascii_lowercase();
        let bad = || CatalogError::NotInCatalog(s.to_string());
        Ok(match l.as_str() {
            "adhm3d" => FramedExampleId::ADHM3d,
            "kn" => FramedExampleId::KN,
            "beilinson" => FramedExampleId::BeilinsonQ,
            "prechainsaw" => FramedExampleId::PreChainsaw,
            "chainsaw" => FramedExampleId::Chainsaw2,
            "ny3d" => FramedExampleId::NY3d,
            _ => {
                if let Some(r) = l.strip_prefix("perv:") {
                    let (g, rank) = match r.rsplit_once(':') {
                        Some((g, k)) if k.chars().all(|c| c.is_ascii_digit()) => (g, k.parse().map_err(|_| bad())?),
                        _ => (r, 1),
                    };
                    FramedExampleId::PervSystem(g.parse()?, rank)
                } else if let Some(r) = l.strip_prefix("spiked:") {
                    let v: Vec<usize> = r.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect::<Result<_, _>>()?;
                    match v[..] {
                        [a, b, c] => FramedExampleId::Spiked(a, b, c),
                        _ => return Err(bad()),
                    }
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

fn quiver_from(vertices: &[(&str, bool)], arrows: &[(&str, &str, &str, bool)]) -> Quiver {
    Quiver::new(vertices, arrows).expect("catalog quiver is well formed")
}

fn potential(q: &Quiver, w: &str) -> Potential {
    Potential::parse(q, w).expect("catalog potential parses")
}

const CONIFOLD_ARROWS: [(&str, &str, &str, bool); 4] = [("A", "0", "1", false), ("B", "1", "0", false), ("C", "0", "1", false), ("D", "1", "0", false)];
const Y20_W: &str = "E(BC-DA) + F(AD-CB)";

fn y20_arrows() -> Vec<(&'static str, &'static str, &'static str, bool)> {
    let mut v = CONIFOLD_ARROWS.to_vec();
    v.push(("E", "0", "0", false));
    v.push(("F", "1", "1", false));
    v
}

/// Tripled affine quiver with `m` vertices: `x_i: i → i+1`, `y_i: i+1 → i`, loops `e_i`,
/// and `W = Σ e_i (y_i x_i − x_{i−1} y_{i−1})`, indices mod `m`.
fn ym0(m: u32) -> (Quiver, Potential) {
    let m = m as usize;
    let names: Vec<String> = (0..m).map(|i| i.to_string()).collect();
    let mut q = Quiver::new(&names.iter().map(|n| (n.as_str(), false)).collect::<Vec<_>>(), &[]).unwrap();
    for i in 0..m {
        q.add_arrow(&format!("x{i}"), &names[i], &names[(i + 1) % m], false).unwrap();
        q.add_arrow(&format!("y{i}"), &names[(i + 1) % m], &names[i], false).unwrap();
    }
    for (i, n) in names.iter().enumerate() {
        q.add_arrow(&format!("e{i}"), n, n, false).unwrap();
    }
    let w: Vec<String> = (0..m).map(|i| format!("e{i}(y{i}x{i} - x{j}y{j})", j = (i + m - 1) % m)).collect();
    let pot = potential(&q, &w.join(" + "));
    (q, pot)
}

pub fn get_quiver_with_potential(g: GeometryId) -> Result<(Quiver, Potential), CatalogError> {
    Ok(match g.normalize()? {
        GeometryId::C3 => {
            let q = quiver_from(&[("0", false)], &[("B1", "0", "0", false), ("B2", "0", "0", false), ("B3", "0", "0", false)]);
            let w = potential(&q, "B1B2B3 - B1B3B2");
            (q, w)
        }
        GeometryId::Conifold => {
            let q = quiver_from(&[("0", false), ("1", false)], &CONIFOLD_ARROWS);
            let w = potential(&q, "ABCD - ADCB");
            (q, w)
        }
        GeometryId::Y20 => {
            let q = quiver_from(&[("0", false), ("1", false)], &y20_arrows());
            let w = potential(&q, Y20_W);
            (q, w)
        }
        GeometryId::Ym0(m) => ym0(m),
        GeometryId::Ymn(..) => unreachable!("normalized away"),
    })
}

/// Polynomial matrices of one Koszul-type resolution, outermost map first.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub simple: String,
    pub vertex: String,
    pub maps: Vec<Vec<Vec<&'static str>>>,
}

/// Chain map for one extension generator: component `k` sends term `k`
/// of the source resolution to term `k+1` of the target.
#[derive(Debug, Clone)]
pub struct GeneratorMap {
    pub name: String,
    pub arrow: String,
    pub from: usize,
    pub to: usize,
    pub maps: Vec<Vec<Vec<&'static str>>>,
    /// The monad's `d_{k+1}` contains `sign · (−1)^k · g_k ⊗ arrow`.
    pub sign: i64,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: GeometryId,
    pub quiver: Quiver,
    pub potential: Potential,
    pub simples: Vec<String>,
    pub resolutions: Vec<Resolution>,
    pub generators: Vec<GeneratorMap>,
    pub curves: Vec<String>,
}

fn m(rows: &[&[&'static str]]) -> Vec<Vec<&'static str>> {
    rows.iter().map(|r| r.to_vec()).collect()
}

fn col(v: &[&'static str]) -> Vec<Vec<&'static str>> {
    v.iter().map(|x| vec![*x]).collect()
}

fn gen(name: &str, arrow: &str, from: usize, to: usize, sign: i64, maps: Vec<Vec<Vec<&'static str>>>) -> GeneratorMap {
    GeneratorMap { name: name.into(), arrow: arrow.into(), from, to, maps, sign }
}

pub fn get_entry(g: GeometryId) -> Result<CatalogEntry, CatalogError> {
    let id = g.normalize()?;
    let (quiver, potential) = get_quiver_with_potential(id)?;
    let entry = |simples: &[&str], resolutions, generators, curves: &[&str]| CatalogEntry {
        id,
        quiver: quiver.clone(),
        potential: potential.clone(),
        simples: simples.iter().map(|s| s.to_string()).collect(),
        resolutions,
        generators,
        curves: curves.iter().map(|s| s.to_string()).collect(),
    };
    Ok(match id {
        GeometryId::C3 => {
            let k = Resolution {
                simple: "F0".into(),
                vertex: "0".into(),
                maps: vec![col(&["-x", "y", "-z"]), m(&[&["0", "-z", "-y"], &["-z", "0", "x"], &["y", "x", "0"]]), m(&[&["x", "y", "z"]])],
            };
            let gens = vec![
                gen("b1", "B1", 0, 0, -1, vec![col(&["-1", "0", "0"]), m(&[&["0", "0", "0"], &["0", "0", "-1"], &["0", "-1", "0"]]), m(&[&["1", "0", "0"]])]),
                gen("b2", "B2", 0, 0, -1, vec![col(&["0", "1", "0"]), m(&[&["0", "0", "1"], &["0", "0", "0"], &["-1", "0", "0"]]), m(&[&["0", "1", "0"]])]),
                gen("b3", "B3", 0, 0, -1, vec![col(&["0", "0", "-1"]), m(&[&["0", "1", "0"], &["1", "0", "0"], &["0", "0", "0"]]), m(&[&["0", "0", "1"]])]),
            ];
            entry(&["F0"], vec![k], gens, &[])
        }
        GeometryId::Conifold => {
            let k0 = Resolution { simple: "F0".into(), vertex: "0".into(), maps: vec![col(&["1", "z"]), m(&[&["zy", "-y"], &["-zx", "x"]]), m(&[&["x", "y"]])] };
            let k1 = Resolution { simple: "F1".into(), vertex: "1".into(), maps: vec![col(&["x", "y"]), m(&[&["yz", "-xz"], &["-y", "x"]]), m(&[&["1", "z"]])] };
            let gens = vec![
                gen("a", "A", 0, 1, 1, vec![col(&["-1", "0"]), m(&[&["0", "-y"], &["y", "0"]]), m(&[&["1", "0"]])]),
                gen("b", "B", 1, 0, 1, vec![col(&["-1", "0"]), m(&[&["0", "-z"], &["z", "0"]]), m(&[&["1", "0"]])]),
                gen("c", "C", 0, 1, 1, vec![col(&["0", "-1"]), m(&[&["0", "x"], &["-x", "0"]]), m(&[&["0", "1"]])]),
                gen("d", "D", 1, 0, 1, vec![col(&["0", "-1"]), m(&[&["0", "1"], &["-1", "0"]]), m(&[&["0", "1"]])]),
            ];
            entry(&["F0", "F1"], vec![k0, k1], gens, &["C1"])
        }
        GeometryId::Y20 => {
            let k0 = Resolution {
                simple: "F0".into(),
                vertex: "0".into(),
                maps: vec![col(&["y", "1", "z"]), m(&[&["0", "xz", "-x"], &["-z", "0", "y"], &["1", "-y", "0"]]), m(&[&["y", "x", "xz"]])],
            };
            let k1 = Resolution {
                simple: "F1".into(),
                vertex: "1".into(),
                maps: vec![col(&["y", "x", "xz"]), m(&[&["0", "z", "-1"], &["-xz", "0", "y"], &["x", "-y", "0"]]), m(&[&["y", "1", "z"]])],
            };
            let e = || vec![col(&["1", "0", "0"]), m(&[&["0", "0", "0"], &["0", "0", "-1"], &["0", "1", "0"]]), m(&[&["1", "0", "0"]])];
            let ab = || vec![col(&["0", "1", "0"]), m(&[&["0", "0", "1"], &["0", "0", "0"], &["-1", "0", "0"]]), m(&[&["0", "1", "0"]])];
            let cd = || vec![col(&["0", "0", "1"]), m(&[&["0", "-1", "0"], &["1", "0", "0"], &["0", "0", "0"]]), m(&[&["0", "0", "1"]])];
            let gens = vec![gen("e", "E", 0, 0, -1, e()), gen("f", "F", 1, 1, -1, e()), gen("a", "A", 0, 1, 1, ab()), gen("b", "B", 1, 0, 1, ab()), gen("c", "C", 0, 1, 1, cd()), gen("d", "D", 1, 0, 1, cd())];
            entry(&["F0", "F1"], vec![k0, k1], gens, &["C1"])
        }
        GeometryId::Ym0(mm) => {
            let simples: Vec<String> = (0..mm).map(|i| format!("F{i}")).collect();
            let curves: Vec<String> = (1..mm).map(|i| format!("C{i}")).collect();
            CatalogEntry { id, quiver, potential, simples, resolutions: vec![], generators: vec![], curves }
        }
        GeometryId::Ymn(..) => unreachable!(),
    })
}

fn framed(name: &str, quiver: Quiver, w: &str, nilpotent: &[&str], ranks: &[(&str, usize)]) -> FramedQuiverWithPotential {
    let potential = potential(&quiver, w);
    FramedQuiverWithPotential::new(name, quiver, potential, nilpotent, ranks)
}

pub fn get_framed_example(id: FramedExampleId) -> Result<FramedQuiverWithPotential, CatalogError> {
    let name = id.to_string();
    Ok(match id {
        FramedExampleId::PervSystem(g, r) => {
            let (q0, w0) = get_quiver_with_potential(g)?;
            let mut q = q0.clone();
            q.add_vertex("inf", true).unwrap();
            q.add_arrow("I", "inf", "0", false).unwrap();
            let w = w0.transport(&q0, &q).unwrap();
            FramedQuiverWithPotential::new(&name, q, w, &[], &[("inf", r)])
        }
        FramedExampleId::ADHM3d => framed(
            &name,
            quiver_from(
                &[("0", false), ("inf", true)],
                &[("B1", "0", "0", false), ("B2", "0", "0", false), ("B3", "0", "0", false), ("I", "inf", "0", false), ("J", "0", "inf", false), ("A_f", "inf", "inf", true)],
            ),
            "B1B2B3 - B1B3B2 + B3IJ - IA_fJ",
            &["A_f"],
            &[("inf", 1)],
        ),
        FramedExampleId::Spiked(r1, r2, r3) => framed(
            &name,
            quiver_from(
                &[("0", false), ("inf1", true), ("inf2", true), ("inf3", true)],
                &[
                    ("B1", "0", "0", false),
                    ("B2", "0", "0", false),
                    ("B3", "0", "0", false),
                    ("I1", "inf1", "0", false),
                    ("J1", "0", "inf1", false),
                    ("I2", "inf2", "0", false),
                    ("J2", "0", "inf2", false),
                    ("I3", "inf3", "0", false),
                    ("J3", "0", "inf3", false),
                ],
            ),
            "B1B2B3 - B1B3B2 + B1I1J1 + B2I2J2 + B3I3J3",
            &[],
            &[("inf1", r1), ("inf2", r2), ("inf3", r3)],
        ),
        FramedExampleId::KN => {
            let mut a = y20_arrows();
            a.extend([("I", "inf", "0", false), ("J", "0", "inf", false), ("G_f", "inf", "inf", true)]);
            framed(&name, quiver_from(&[("0", false), ("1", false), ("inf", true)], &a), &format!("{Y20_W} + EIJ - IG_fJ"), &["G_f"], &[("inf", 1)])
        }
        FramedExampleId::BeilinsonQ => {
            let mut a = y20_arrows();
            a.extend([("I", "inf", "0", false), ("J1", "1", "inf", false), ("J2", "1", "inf", false)]);
            framed(&name, quiver_from(&[("0", false), ("1", false), ("inf", true)], &a), &format!("{Y20_W} + IJ1A + IJ2C"), &[], &[("inf", 1)])
        }
        FramedExampleId::PreChainsaw => {
            let mut a = y20_arrows();
            a.extend([("J", "0", "inf", false), ("I", "inf", "1", false)]);
            framed(&name, quiver_from(&[("0", false), ("1", false), ("inf", true)], &a), &format!("{Y20_W} + IJD"), &[], &[("inf", 1)])
        }
        FramedExampleId::Chainsaw2 => {
            let mut a = y20_arrows();
            a.extend([
                ("I", "inf1", "0", false),
                ("J1", "1", "inf1", false),
                ("J2", "1", "inf1", false),
                ("J0", "0", "inf0", false),
                ("I0", "inf0", "1", false),
                ("K", "inf1", "inf0", true),
            ]);
            framed(
                &name,
                quiver_from(&[("0", false), ("1", false), ("inf0", true), ("inf1", true)], &a),
                &format!("{Y20_W} + IJ1A + IJ2C + I0J0D + I0KJ1"),
                &[],
                &[("inf0", 1), ("inf1", 1)],
            )
        }
        FramedExampleId::NY3d => {
            let mut a = CONIFOLD_ARROWS.to_vec();
            a.extend([("I", "inf", "0", false), ("J", "1", "inf", false)]);
            framed(&name, quiver_from(&[("0", false), ("1", false), ("inf", true)], &a), "ABCD - ADCB + IJC", &[], &[("inf", 1)])
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonadId {
    C3,
    Conifold,
    Y20,
    ADHM3d,
    PervC3,
    PervConifold,
    NY3d,
    KN,
}

impl MonadId {
    pub const ALL: [MonadId; 8] = [MonadId::C3, MonadId::Conifold, MonadId::Y20, MonadId::ADHM3d, MonadId::PervC3, MonadId::PervConifold, MonadId::NY3d, MonadId::KN];
}

impl fmt::Display for MonadId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonadId::C3 => "c3",
            MonadId::Conifold => "conifold",
            MonadId::Y20 => "y20",
            MonadId::ADHM3d => "adhm3d",
            MonadId::PervC3 => "perv:c3",
            MonadId::PervConifold => "perv:conifold",
            MonadId::NY3d => "ny3d",
            MonadId::KN => "kn",
        })
    }
}

impl FromStr for MonadId {
    type Err = CatalogError;
    fn from_str(s: &str) -> Result<Self, CatalogError> {
        let l = s.to_ascii_lowercase();
        let l = l.strip_suffix(":1").unwrap_or(&l);
        MonadId::ALL.iter().copied().find(|m| m.to_string() == l).ok_or_else(|| CatalogError::NotInCatalog(s.to_string()))
    }
}

fn slots(layout: &[(i64, &str, usize)]) -> Vec<Slot> {
    layout.iter().flat_map(|&(twist, v, k)| std::iter::repeat_n(Slot { twist, vertex: v.to_string() }, k)).collect()
}

fn mats(ms: &[&[&[&str]]]) -> Vec<Vec<Vec<String>>> {
    ms.iter().map(|m| m.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect()).collect()
}

const CONIFOLD_D1: &[&[&str]] = &[&["1", "-B"], &["z", "-D"], &["-A", "x"], &["-C", "y"]];
const CONIFOLD_D2: &[&[&str]] = &[&["zy-DC", "BC-y", "0", "zB-D"], &["DA-zx", "x-BA", "D-zB", "0"], &["0", "yA-xC", "yz-CD", "AD-xz"], &["xC-yA", "0", "CB-y", "x-AB"]];
const CONIFOLD_D3: &[&[&str]] = &[&["x", "y", "B", "D"], &["A", "C", "1", "z"]];
const Y20_D1: &[&[&str]] = &[&["y-E", "0"], &["1", "B"], &["z", "D"], &["0", "y-F"], &["A", "x"], &["C", "xz"]];
const Y20_D2: &[&[&str]] = &[
    &["0", "xz", "-x", "0", "D", "-B"],
    &["-z", "0", "y-E", "-D", "0", "0"],
    &["1", "E-y", "0", "B", "0", "0"],
    &["0", "C", "-A", "0", "z", "-1"],
    &["-C", "0", "0", "-xz", "0", "y-F"],
    &["A", "0", "0", "x", "F-y", "0"],
];
const Y20_D3: &[&[&str]] = &[&["y-E", "x", "xz", "0", "B", "D"], &["0", "A", "C", "y-F", "1", "z"]];
const C3_D1: &[&[&str]] = &[&["B1-x"], &["y-B2"], &["B3-z"]];
const C3_D2: &[&[&str]] = &[&["0", "B3-z", "B2-y"], &["B3-z", "0", "x-B1"], &["y-B2", "x-B1", "0"]];

fn with_extra(base: &[&[&str]], extra_cols: &[&str], extra_row: Option<&[&str]>) -> Vec<Vec<String>> {
    let mut out: Vec<Vec<String>> = base.iter().map(|r| r.iter().map(|e| e.to_string()).collect()).collect();
    if !extra_cols.is_empty() {
        for (r, e) in out.iter_mut().zip(extra_cols) {
            r.push(e.to_string());
        }
    }
    if let Some(row) = extra_row {
        out.push(row.iter().map(|e| e.to_string()).collect());
    }
    out
}

/// Templates over the single affine chart with coordinates `x, y, z`.
pub fn get_monad_template(id: MonadId) -> Result<MonadTemplate, CatalogError> {
    let geometry = |g| get_quiver_with_potential(g).unwrap();
    let framed_qp = |f| {
        let t = get_framed_example(f).unwrap();
        (t.quiver, t.potential)
    };
    let c3_terms = |extra2: bool, extra1: bool| {
        let mut t = vec![slots(&[(0, "0", 1)]), slots(&[(0, "0", 3)]), slots(&[(0, "0", 3)]), slots(&[(0, "0", 1)])];
        if extra1 {
            t[1].push(Slot { twist: 0, vertex: "inf".into() });
        }
        if extra2 {
            t[2].push(Slot { twist: 0, vertex: "inf".into() });
        }
        t
    };
    let coni_terms = || vec![slots(&[(0, "0", 1), (1, "1", 1)]), slots(&[(1, "0", 2), (0, "1", 2)]), slots(&[(1, "0", 2), (0, "1", 2)]), slots(&[(0, "0", 1), (1, "1", 1)])];
    let y20_terms = || {
        let mid = slots(&[(0, "0", 1), (1, "0", 2), (1, "1", 1), (0, "1", 2)]);
        vec![slots(&[(0, "0", 1), (1, "1", 1)]), mid.clone(), mid, slots(&[(0, "0", 1), (1, "1", 1)])]
    };
    Ok(match id {
        MonadId::C3 => {
            let (q, w) = geometry(GeometryId::C3);
            MonadTemplate::new("c3", q, w, c3_terms(false, false), mats(&[C3_D1, C3_D2, &[&["x-B1", "y-B2", "z-B3"]]]), None)
        }
        MonadId::ADHM3d => {
            let (q, w) = framed_qp(FramedExampleId::ADHM3d);
            let d1 = with_extra(C3_D1, &[], Some(&["J"]));
            let d2 = with_extra(C3_D2, &["0", "0", "I"], Some(&["0", "0", "-J", "A_f-z"]));
            let d3 = with_extra(&[&["x-B1", "y-B2", "z-B3"]], &["I"], None);
            MonadTemplate::new("adhm3d", q, w, c3_terms(true, true), vec![d1, d2, d3], None)
        }
        MonadId::PervC3 => {
            let (q, w) = framed_qp(FramedExampleId::PervSystem(GeometryId::C3, 1));
            let d2 = with_extra(C3_D2, &[], Some(&["0", "0", "0"]));
            let d3 = with_extra(&[&["x-B1", "y-B2", "z-B3"]], &["I"], None);
            MonadTemplate::new("perv:c3", q, w, c3_terms(true, false), vec![with_extra(C3_D1, &[], None), d2, d3], None)
        }
        MonadId::Conifold => {
            let (q, w) = geometry(GeometryId::Conifold);
            MonadTemplate::new("conifold", q, w, coni_terms(), mats(&[CONIFOLD_D1, CONIFOLD_D2, CONIFOLD_D3]), Some([1, 1]))
        }
        MonadId::PervConifold => {
            let (q, w) = framed_qp(FramedExampleId::PervSystem(GeometryId::Conifold, 1));
            let mut t = coni_terms();
            t[2].push(Slot { twist: 0, vertex: "inf".into() });
            let d2 = with_extra(CONIFOLD_D2, &[], Some(&["0", "0", "0", "0"]));
            let d3 = with_extra(CONIFOLD_D3, &["I", "0"], None);
            MonadTemplate::new("perv:conifold", q, w, t, vec![with_extra(CONIFOLD_D1, &[], None), d2, d3], Some([1, 1]))
        }
        MonadId::NY3d => {
            let (q, w) = framed_qp(FramedExampleId::NY3d);
            let mut t = coni_terms();
            t[1].push(Slot { twist: 1, vertex: "inf".into() });
            t[2].push(Slot { twist: 0, vertex: "inf".into() });
            let d1 = with_extra(CONIFOLD_D1, &[], Some(&["0", "-J"]));
            let d2 = with_extra(CONIFOLD_D2, &["0", "I", "0", "0"], Some(&["0", "0", "0", "-J", "-y"]));
            let d3 = with_extra(CONIFOLD_D3, &["I", "0"], None);
            MonadTemplate::new("ny3d", q, w, t, vec![d1, d2, d3], Some([1, 1]))
        }
        MonadId::Y20 => {
            let (q, w) = geometry(GeometryId::Y20);
            MonadTemplate::new("y20", q, w, y20_terms(), mats(&[Y20_D1, Y20_D2, Y20_D3]), Some([2, 0]))
        }
        MonadId::KN => {
            let (q, w) = framed_qp(FramedExampleId::KN);
            let mut t = y20_terms();
            t[1].push(Slot { twist: 0, vertex: "inf".into() });
            t[2].push(Slot { twist: 0, vertex: "inf".into() });
            let d1 = with_extra(Y20_D1, &[], Some(&["-J", "0"]));
            let d2 = with_extra(Y20_D2, &["I", "0", "0", "0", "0", "0"], Some(&["-J", "0", "0", "0", "0", "0", "G_f-y"]));
            let d3 = with_extra(Y20_D3, &["I", "0"], None);
            MonadTemplate::new("kn", q, w, t, vec![d1, d2, d3], Some([2, 0]))
        }
    })
}

/// Lower-triangular shift matrix of `gl(m|n)`, stored by its subdiagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShiftMatrix {
    pub m: usize,
    pub n: usize,
    pub sub: Vec<u64>,
}

impl ShiftMatrix {
    pub fn new(m: usize, n: usize, sub: Vec<u64>) -> Result<ShiftMatrix, CatalogError> {
        if sub.len() != (m + n).saturating_sub(1) {
            return Err(CatalogError::BadPartition(format!("expected {} subdiagonal entries, got {}", (m + n).saturating_sub(1), sub.len())));
        }
        Ok(ShiftMatrix { m, n, sub })
    }

    pub fn zero(m: usize, n: usize) -> ShiftMatrix {
        ShiftMatrix { m, n, sub: vec![0; (m + n).saturating_sub(1)] }
    }

    pub fn size(&self) -> usize {
        self.m + self.n
    }

    /// 1-indexed `s_{i,j}`; strictly lower entries telescope the subdiagonal.
    pub fn entry(&self, i: usize, j: usize) -> u64 {
        if i <= j {
            0
        } else {
            self.sub[j - 1..i - 1].iter().sum()
        }
    }

    pub fn full(&self) -> Vec<Vec<u64>> {
        (1..=self.size()).map(|i| (1..=self.size()).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Accepts `L` or `U;L`, each a comma-separated list; `U` must vanish.
    pub fn parse(m: usize, n: usize, s: &str) -> Result<ShiftMatrix, CatalogError> {
        let list = |t: &str| -> Result<Vec<u64>, CatalogError> {
            t.split(',').filter(|x| !x.trim().is_empty()).map(|x| x.trim().parse::<u64>().map_err(|_| CatalogError::BadPartition(format!("bad shift entry `{x}`")))).collect()
        };
        let lower = match s.split_once(';') {
            Some((u, l)) => {
                if list(u)?.iter().any(|&x| x != 0) {
                    return Err(CatalogError::UpperShift);
                }
                list(l)?
            }
            None => list(s)?,
        };
        ShiftMatrix::new(m, n, lower)
    }
}

fn check_partition(name: &str, p: &[i64], len: usize) -> Result<(), CatalogError> {
    if p.len() != len {
        return Err(CatalogError::BadPartition(format!("{name} must have {len} parts")));
    }
    if p.iter().any(|&x| x < 0) || p.windows(2).any(|w| w[0] < w[1]) {
        return Err(CatalogError::BadPartition(format!("{name} must be weakly decreasing and non-negative")));
    }
    Ok(())
}

/// Intersection numbers of the curve classes with the divisor `S_{μ,ν}`.
pub fn divisor_to_shift_matrix(m: usize, n: usize, mu: &[i64], nu: &[i64]) -> Result<ShiftMatrix, CatalogError> {
    check_partition("mu", mu, m)?;
    check_partition("nu", nu, n)?;
    let values: Vec<i64> = mu.iter().chain(nu).copied().collect();
    let mut sub = Vec::new();
    for (i, w) in values.windows(2).enumerate() {
        let s = w[0] - w[1];
        if s < 0 {
            return Err(CatalogError::NegativeShift { index: i + 1, value: s });
        }
        sub.push(s as u64);
    }
    ShiftMatrix::new(m, n, sub)
}

/// One line per catalog entry: id and parameter ranges.
pub fn list() -> Vec<String> {
    let mut v = vec![
        "geometry c3              B1,B2,B3 loops; W = B1[B2,B3]".to_string(),
        "geometry conifold        A,C: 0->1, B,D: 1->0; W = ABCD - ADCB".into(),
        "geometry y20             conifold arrows plus loops E,F; W = E(BC-DA) + F(AD-CB)".into(),
        "geometry ym0:<m>         m >= 1, tripled affine cycle with loops".into(),
        "geometry ymn:<m>,<n>     only (m,0) and (1,1)".into(),
        "framed   perv:<geom>[:r] geom in c3, conifold, y20; r >= 0".into(),
        "framed   adhm3d          marked A_f at inf".into(),
        "framed   spiked:r1,r2,r3".into(),
        "framed   kn              marked G_f at inf".into(),
        "framed   beilinson".into(),
        "framed   prechainsaw".into(),
        "framed   chainsaw        marked K: inf1 -> inf0".into(),
        "framed   ny3d".into(),
    ];
    for id in MonadId::ALL {
        v.push(format!("monad    {id}"));
    }
    v
}

/// Default framing ranks paired with the framed template.
pub fn framing_ranks(f: &FramedQuiverWithPotential) -> BTreeMap<String, usize> {
    f.default_ranks.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monad::{assemble, coord_matrix, coord_mul, coord_scale, CoordMatrix, CoordPoly};
    use crate::ncalg::{relations_from_potential, NCPoly, Path};
    use crate::q_int;

    fn cm(m: &[Vec<&str>]) -> CoordMatrix {
        coord_matrix(m).unwrap()
    }

    fn is_zero(m: &CoordMatrix) -> bool {
        m.iter().all(|r| r.iter().all(|e| e.is_zero()))
    }

    #[test]
    fn koszul_resolutions_are_complexes() {
        for g in [GeometryId::C3, GeometryId::Conifold, GeometryId::Y20] {
            let e = get_entry(g).unwrap();
            for r in &e.resolutions {
                for k in 0..r.maps.len() - 1 {
                    assert!(is_zero(&coord_mul(&cm(&r.maps[k + 1]), &cm(&r.maps[k]))), "{g} {} d{k}", r.simple);
                }
            }
        }
    }

    #[test]
    fn generators_are_chain_maps() {
        for g in [GeometryId::C3, GeometryId::Conifold, GeometryId::Y20] {
            let e = get_entry(g).unwrap();
            for gm in &e.generators {
                let (src, tgt) = (&e.resolutions[gm.from], &e.resolutions[gm.to]);
                for k in 0..gm.maps.len() - 1 {
                    let lhs = coord_mul(&cm(&tgt.maps[k + 1]), &cm(&gm.maps[k]));
                    let rhs = coord_mul(&cm(&gm.maps[k + 1]), &cm(&src.maps[k]));
                    assert_eq!(lhs, rhs, "{g} {} component {k}", gm.name);
                }
                let a = e.quiver.arrow(&gm.arrow).unwrap();
                let ar = &e.quiver.arrows()[a];
                assert_eq!((ar.src, ar.tgt), (e.quiver.vertex(&src.vertex).unwrap(), e.quiver.vertex(&tgt.vertex).unwrap()));
            }
        }
    }

    /// Rows/cols of a monad term belonging to a vertex, in order.
    fn slots_at(t: &MonadTemplate, k: usize, v: &str) -> Vec<usize> {
        t.modules[k].iter().enumerate().filter(|(_, s)| s.vertex == v).map(|(i, _)| i).collect()
    }

    fn block(m: &CoordMatrix, rows: &[usize], cols: &[usize]) -> CoordMatrix {
        rows.iter().map(|&r| cols.iter().map(|&c| m[r][c].clone()).collect()).collect()
    }

    #[test]
    fn monad_linear_part_is_koszul_plus_generators() {
        for (g, id) in [(GeometryId::C3, MonadId::C3), (GeometryId::Conifold, MonadId::Conifold), (GeometryId::Y20, MonadId::Y20)] {
            let e = get_entry(g).unwrap();
            let t = get_monad_template(id).unwrap();
            let c = assemble(&t, &BTreeMap::new()).unwrap();
            let q = &c.quiver;
            for k in 0..3 {
                let blocks = c.blocks(k);
                for r in &e.resolutions {
                    let v = q.vertex(&r.vertex).unwrap();
                    let (rows, cols) = (slots_at(&t, k + 1, &r.vertex), slots_at(&t, k, &r.vertex));
                    let got = block(&blocks[&Path::vertex(v)], &rows, &cols);
                    assert_eq!(got, cm(&r.maps[k]), "{g} d{} at {}", k + 1, r.vertex);
                }
                for gm in &e.generators {
                    let (sv, tv) = (&e.resolutions[gm.from].vertex, &e.resolutions[gm.to].vertex);
                    let p = Path::from_arrows(q, &[q.arrow(&gm.arrow).unwrap()]).unwrap();
                    let got = block(&blocks[&p], &slots_at(&t, k + 1, tv), &slots_at(&t, k, sv));
                    let s = if k % 2 == 0 { gm.sign } else { -gm.sign };
                    assert_eq!(got, coord_scale(&cm(&gm.maps[k]), &q_int(s)), "{g} d{} arrow {}", k + 1, gm.arrow);
                }
            }
        }
    }

    #[test]
    fn quadratic_part_of_conifold_monad() {
        let t = get_monad_template(MonadId::Conifold).unwrap();
        let c = assemble(&t, &BTreeMap::new()).unwrap();
        let q = &c.quiver;
        let dc = NCPoly::parse(q, "DC").unwrap();
        let p = dc.terms().next().unwrap().0.clone();
        let b = &c.blocks(1)[&p];
        assert_eq!(b[0][0], CoordPoly::constant(q_int(-1)));
        assert_eq!(b.iter().flatten().filter(|e| !e.is_zero()).count(), 1);
    }

    #[test]
    fn geometry_invariants() {
        let (q, w) = get_quiver_with_potential(GeometryId::C3).unwrap();
        assert_eq!(relations_from_potential(&q, &w).len(), 3);
        let (q, w) = get_quiver_with_potential(GeometryId::Conifold).unwrap();
        let r = relations_from_potential(&q, &w);
        assert_eq!(r.get(&q, "A").unwrap().poly, NCPoly::parse(&q, "BCD - DCB").unwrap());
        let (q, w) = get_quiver_with_potential(GeometryId::Y20).unwrap();
        let r = relations_from_potential(&q, &w);
        assert_eq!(r.get(&q, "E").unwrap().poly, NCPoly::parse(&q, "BC - DA").unwrap());
        let (q2, w2) = get_quiver_with_potential(GeometryId::Ym0(2)).unwrap();
        assert_eq!(q2.arrows().len(), q.arrows().len());
        assert_eq!(w2.render(&q2).matches('+').count() + w2.render(&q2).matches('-').count(), w.render(&q).matches('+').count() + w.render(&q).matches('-').count());
        for m in 1..6 {
            let (q, w) = get_quiver_with_potential(GeometryId::Ym0(m)).unwrap();
            assert_eq!(q.vertices().len(), m as usize);
            // every arrow appears in the potential, every vertex has a loop
            let r = relations_from_potential(&q, &w);
            assert!(r.relations.iter().all(|r| !r.poly.is_zero()), "Y{m},0");
        }
    }

    #[test]
    fn ym0_matches_named_y20_up_to_renaming() {
        let (q, w) = get_quiver_with_potential(GeometryId::Ym0(3)).unwrap();
        assert_eq!(w.terms().count(), 6);
        assert_eq!(q.arrows().len(), 9);
        let (q2, w2) = ym0(2);
        let ren = |s: String| {
            [("e0", "E"), ("e1", "F"), ("y0", "B"), ("x0", "C"), ("x1", "D"), ("y1", "A")].iter().fold(s, |acc, (a, b)| acc.replace(a, b))
        };
        let (qy, wy) = get_quiver_with_potential(GeometryId::Y20).unwrap();
        let min_rot = |w: Vec<String>| (0..w.len()).map(|i| [&w[i..], &w[..i]].concat().join(" ")).min().unwrap();
        let mut lhs: Vec<String> = w2.terms().map(|(t, c)| format!("{c}:{}", min_rot(t.iter().map(|&a| ren(q2.arrows()[a].name.clone())).collect()))).collect();
        let mut rhs: Vec<String> = wy.terms().map(|(t, c)| format!("{c}:{}", min_rot(t.iter().map(|&a| qy.arrows()[a].name.clone()).collect()))).collect();
        lhs.sort();
        rhs.sort();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn ids_parse_and_normalize() {
        assert_eq!("ymn:1,1".parse::<GeometryId>().unwrap().normalize().unwrap(), GeometryId::Conifold);
        assert_eq!("ym0:2".parse::<GeometryId>().unwrap().normalize().unwrap(), GeometryId::Y20);
        assert!(matches!(get_quiver_with_potential(GeometryId::Ymn(2, 1)), Err(CatalogError::NotInCatalog(_))));
        assert_eq!("perv:conifold:2".parse::<FramedExampleId>().unwrap(), FramedExampleId::PervSystem(GeometryId::Conifold, 2));
        assert_eq!("perv:c3".parse::<FramedExampleId>().unwrap(), FramedExampleId::PervSystem(GeometryId::C3, 1));
        assert_eq!("spiked:1,0,2".parse::<FramedExampleId>().unwrap(), FramedExampleId::Spiked(1, 0, 2));
        for id in MonadId::ALL {
            assert_eq!(id.to_string().parse::<MonadId>().unwrap(), id);
        }
        assert!("nope".parse::<FramedExampleId>().is_err());
    }

    #[test]
    fn shift_matrix_from_divisor() {
        let s = divisor_to_shift_matrix(3, 2, &[5, 3, 3], &[2, 0]).unwrap();
        assert_eq!(s.sub, vec![2, 0, 1, 2]);
        let f = s.full();
        let (mu, nu) = ([5i64, 3, 3], [2i64, 0]);
        let vals: Vec<i64> = mu.iter().chain(&nu).copied().collect();
        for i in 0..5 {
            for j in 0..5 {
                let want = if i > j { vals[j] - vals[i] } else { 0 };
                assert_eq!(f[i][j] as i64, want);
            }
        }
        assert!(matches!(divisor_to_shift_matrix(2, 1, &[1, 0], &[1]), Err(CatalogError::NegativeShift { index: 2, value: -1 })));
        assert!(matches!(divisor_to_shift_matrix(2, 0, &[0, 1], &[]), Err(CatalogError::BadPartition(_))));
    }

    #[test]
    fn shift_parsing() {
        assert_eq!(ShiftMatrix::parse(2, 0, "1").unwrap().sub, vec![1]);
        assert_eq!(ShiftMatrix::parse(2, 0, "0;1").unwrap().sub, vec![1]);
        assert_eq!(ShiftMatrix::parse(2, 0, "1;1").unwrap_err(), CatalogError::UpperShift);
        assert!(ShiftMatrix::parse(3, 0, "1").is_err());
        assert_eq!(ShiftMatrix::parse(1, 0, "").unwrap().sub, Vec::<u64>::new());
    }
}
