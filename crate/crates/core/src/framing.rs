//! Framed quivers with potential, framing specializations and the framed relation set.

use crate::catalog::{FramedExampleId, GeometryId};
use crate::linalg::QMatrix;
use crate::ncalg::{relations_from_potential, NCPoly, Potential, Quiver, RelationSet, Rep};
use crate::Q;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FramingError {
    #[error("`{0}` is not a framing vertex")]
    NotFraming(String),
    #[error("`{0}` is not a marked arrow")]
    NotMarked(String),
    #[error("unknown name `{0}`")]
    Unknown(String),
    #[error("marked arrow `{arrow}` has shape {got:?}, expected {want:?}")]
    ShapeMismatch { arrow: String, got: (usize, usize), want: (usize, usize) },
    #[error("`{0}` is declared nilpotent but its matrix is not")]
    NilpotencyViolated(String),
    #[error("marked arrow `{0}` has no bound value")]
    UnboundFraming(String),
    #[error("no rank given for framing vertex `{0}`")]
    MissingRank(String),
    #[error("potential term `{0}` passes through the framing more than once or through unmarked framing arrows")]
    Incompatible(String),
    #[error("points must be pairwise distinct")]
    DuplicatePoints,
    #[error("no numeric solution builder for `{0}`")]
    Unsupported(String),
    #[error("bad framing file: {0}")]
    Json(String),
}

/// Ranks at framing vertices and values of marked arrows.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FramingStructure {
    pub ranks: BTreeMap<String, usize>,
    pub matrices: BTreeMap<String, QMatrix>,
}

#[derive(Serialize, Deserialize)]
struct FramingJson {
    #[serde(default)]
    ranks: BTreeMap<String, usize>,
    #[serde(default, alias = "matrices")]
    arrows: BTreeMap<String, Vec<Vec<String>>>,
}

impl FramingStructure {
    /// `{"ranks": {"inf": 1}, "arrows": {"A_f": [["0"]]}}`; entries are rationals as strings
    /// or integers, and absent ranks are left for the caller to default.
    pub fn from_json(s: &str) -> Result<FramingStructure, FramingError> {
        let j: FramingJson = serde_json::from_str(s).map_err(|e| FramingError::Json(e.to_string()))?;
        let mut matrices = BTreeMap::new();
        for (k, rows) in j.arrows {
            let rows = rows
                .iter()
                .map(|r| r.iter().map(|e| e.parse::<Q>().map_err(|_| FramingError::Json(format!("bad entry `{e}` in {k}")))).collect())
                .collect::<Result<Vec<Vec<Q>>, _>>()?;
            if rows.iter().any(|r| r.len() != rows[0].len()) {
                return Err(FramingError::Json(format!("ragged matrix {k}")));
            }
            matrices.insert(k, QMatrix::from_rows(rows));
        }
        Ok(FramingStructure { ranks: j.ranks, matrices })
    }

    /// Fills ranks missing from a parsed file.
    pub fn with_default_ranks(mut self, defaults: &BTreeMap<String, usize>) -> FramingStructure {
        for (k, v) in defaults {
            self.ranks.entry(k.clone()).or_insert(*v);
        }
        self
    }

    pub fn to_json(&self) -> String {
        let j = FramingJson {
            ranks: self.ranks.clone(),
            arrows: self
                .matrices
                .iter()
                .map(|(k, m)| (k.clone(), (0..m.rows()).map(|r| (0..m.cols()).map(|c| m[(r, c)].to_string()).collect()).collect()))
                .collect(),
        };
        serde_json::to_string_pretty(&j).unwrap()
    }
}

#[derive(Debug, Clone)]
pub struct FramedQuiverWithPotential {
    pub name: String,
    pub quiver: Quiver,
    pub potential: Potential,
    /// Marked arrows whose value must be nilpotent.
    pub nilpotent: Vec<String>,
    pub default_ranks: BTreeMap<String, usize>,
    pub framing: Option<FramingStructure>,
}

impl FramedQuiverWithPotential {
    pub fn new(name: &str, quiver: Quiver, potential: Potential, nilpotent: &[&str], ranks: &[(&str, usize)]) -> Self {
        FramedQuiverWithPotential {
            name: name.into(),
            quiver,
            potential,
            nilpotent: nilpotent.iter().map(|s| s.to_string()).collect(),
            default_ranks: ranks.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            framing: None,
        }
    }

    fn marked(&self) -> Vec<usize> {
        (0..self.quiver.arrows().len()).filter(|&a| self.quiver.arrows()[a].marked).collect()
    }

    /// Internal subquiver and the potential with every framing term removed.
    pub fn unframed(&self) -> (Quiver, Potential) {
        let q = &self.quiver;
        let sub = q.unframed();
        let touches = |a: usize| q.is_framing(q.arrows()[a].src) || q.is_framing(q.arrows()[a].tgt);
        let w = self.potential.drop_arrows(touches).transport(q, &sub).expect("internal arrows survive");
        (sub, w)
    }

    /// Each potential cycle may enter the framing at most once, and arrows inside it must be marked.
    pub fn check_compatible(&self) -> Result<(), FramingError> {
        let q = &self.quiver;
        for (w, _) in self.potential.terms() {
            let fr = |v: usize| q.is_framing(v);
            let entries = w.iter().filter(|&&a| !fr(q.arrows()[a].src) && fr(q.arrows()[a].tgt)).count();
            let inside_unmarked = w.iter().any(|&a| fr(q.arrows()[a].src) && fr(q.arrows()[a].tgt) && !q.arrows()[a].marked);
            let all_inside = w.iter().all(|&a| fr(q.arrows()[a].src) && fr(q.arrows()[a].tgt));
            let ok = if all_inside { !inside_unmarked } else { entries <= 1 && !inside_unmarked };
            if !ok {
                let name: Vec<&str> = w.iter().map(|&a| q.arrows()[a].name.as_str()).collect();
                return Err(FramingError::Incompatible(name.join("")));
            }
        }
        Ok(())
    }

    /// Marked arrows bound to zero at the default ranks.
    pub fn default_framing(&self) -> FramingStructure {
        let ranks = self.default_ranks.clone();
        let mut matrices = BTreeMap::new();
        for a in self.marked() {
            let ar = &self.quiver.arrows()[a];
            let r = |v: usize| ranks.get(&self.quiver.vertices()[v].name).copied().unwrap_or(0);
            matrices.insert(ar.name.clone(), QMatrix::zeros(r(ar.tgt), r(ar.src)));
        }
        FramingStructure { ranks, matrices }
    }

    /// Attaches framing data after checking names, shapes and nilpotency.
    pub fn specialize(&self, f: &FramingStructure) -> Result<FramedQuiverWithPotential, FramingError> {
        let q = &self.quiver;
        for v in f.ranks.keys() {
            let i = q.vertex(v).map_err(|_| FramingError::Unknown(v.clone()))?;
            if !q.is_framing(i) {
                return Err(FramingError::NotFraming(v.clone()));
            }
        }
        for (i, v) in q.vertices().iter().enumerate() {
            if q.is_framing(i) && !f.ranks.contains_key(&v.name) {
                return Err(FramingError::MissingRank(v.name.clone()));
            }
        }
        for (name, m) in &f.matrices {
            let a = q.arrow(name).map_err(|_| FramingError::Unknown(name.clone()))?;
            let ar = &q.arrows()[a];
            if !ar.marked {
                return Err(FramingError::NotMarked(name.clone()));
            }
            let want = (f.ranks[&q.vertices()[ar.tgt].name], f.ranks[&q.vertices()[ar.src].name]);
            if m.shape() != want {
                return Err(FramingError::ShapeMismatch { arrow: name.clone(), got: m.shape(), want });
            }
            if self.nilpotent.contains(name) {
                let mut p = QMatrix::identity(m.rows());
                for _ in 0..m.rows() {
                    p = p.mul(m);
                }
                if !p.is_zero() {
                    return Err(FramingError::NilpotencyViolated(name.clone()));
                }
            }
        }
        let mut out = self.clone();
        out.framing = Some(f.clone());
        Ok(out)
    }
}

/// Relations of a framed potential with marked arrows kept as symbols.
#[derive(Debug, Clone)]
pub struct FramedRelationSet {
    pub quiver: Quiver,
    pub relations: RelationSet,
    pub bindings: BTreeMap<String, QMatrix>,
}

impl FramedRelationSet {
    /// Marked arrows bound to the zero matrix.
    pub fn zero_bound(&self) -> BTreeSet<usize> {
        self.bindings.iter().filter(|(_, m)| m.is_zero()).filter_map(|(k, _)| self.quiver.arrow(k).ok()).collect()
    }

    /// Relations with the words through zero-bound marked arrows removed.
    pub fn effective(&self) -> RelationSet {
        let z = self.zero_bound();
        let mut rels = self.relations.clone();
        for r in &mut rels.relations {
            r.poly = r.poly.drop_arrows(|a| z.contains(&a));
        }
        rels
    }

    pub fn drop_zero_bound(&self, p: &NCPoly) -> NCPoly {
        let z = self.zero_bound();
        p.drop_arrows(|a| z.contains(&a))
    }

    pub fn render(&self) -> Vec<String> {
        self.relations.render(&self.quiver)
    }
}

/// Relations of a framed quiver; an attached framing must bind every marked arrow.
pub fn framed_relations(f: &FramedQuiverWithPotential) -> Result<FramedRelationSet, FramingError> {
    let mut bindings = BTreeMap::new();
    if let Some(fs) = &f.framing {
        for a in f.marked() {
            let name = &f.quiver.arrows()[a].name;
            let m = fs.matrices.get(name).ok_or_else(|| FramingError::UnboundFraming(name.clone()))?;
            bindings.insert(name.clone(), m.clone());
        }
    }
    Ok(FramedRelationSet { quiver: f.quiver.clone(), relations: relations_from_potential(&f.quiver, &f.potential), bindings })
}

#[derive(Debug, Clone)]
pub struct NumericSolution {
    pub rep: Rep,
    /// Whether the framing image generates the internal space under the loops.
    pub cyclic: bool,
}

/// Diagonal fixed-point-style representation from distinct points `(x_i, y_i)`:
/// `B1 = diag(x)`, `B2 = diag(y)`, `B3 = 0`, `I` all ones, everything else zero.
pub fn numeric_solution_builder(id: FramedExampleId, points: &[(Q, Q)]) -> Result<NumericSolution, FramingError> {
    match id {
        FramedExampleId::ADHM3d | FramedExampleId::PervSystem(GeometryId::C3, 1) => {}
        other => return Err(FramingError::Unsupported(other.to_string())),
    }
    let set: BTreeSet<&(Q, Q)> = points.iter().collect();
    if set.len() != points.len() {
        return Err(FramingError::DuplicatePoints);
    }
    let t = crate::catalog::get_framed_example(id).map_err(|e| FramingError::Unsupported(e.to_string()))?;
    let q = &t.quiver;
    let n = points.len();
    let mut mats = BTreeMap::new();
    mats.insert("B1".to_string(), QMatrix::diag(&points.iter().map(|p| p.0.clone()).collect::<Vec<_>>()));
    mats.insert("B2".to_string(), QMatrix::diag(&points.iter().map(|p| p.1.clone()).collect::<Vec<_>>()));
    mats.insert("I".to_string(), QMatrix::from_rows(vec![vec![Q::one()]; n]));
    let mut dims = vec![0; q.vertices().len()];
    dims[q.vertex("0").unwrap()] = n;
    dims[q.vertex("inf").unwrap()] = 1;
    let rep = Rep::new(q, dims, &mats).expect("builder shapes are consistent");
    let cyclic = krylov_rank(&rep, q, n) == n;
    Ok(NumericSolution { rep, cyclic })
}

/// Rank of the span of `B1^a B2^b I` over `a + b < n`.
fn krylov_rank(rep: &Rep, q: &Quiver, n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let b1 = rep.matrix(q.arrow("B1").unwrap());
    let b2 = rep.matrix(q.arrow("B2").unwrap());
    let i = rep.matrix(q.arrow("I").unwrap());
    let mut cols: Vec<QMatrix> = Vec::new();
    let mut row = i.clone();
    for _a in 0..n {
        let mut v = row.clone();
        for _b in 0..n {
            cols.push(v.clone());
            v = b2.mul(&v);
        }
        row = b1.mul(&row);
    }
    let mut m = QMatrix::zeros(n, cols.len());
    for (k, c) in cols.iter().enumerate() {
        m.set_block(0, k, c);
    }
    m.rank()
}
