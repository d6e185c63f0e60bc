//! Monad templates on a single affine chart, the assembled complex, symbolic
//! certification of `d² ≡ 0` modulo the relations, and numeric fibre checks.

use crate::framing::FramedRelationSet;
use crate::linalg::QMatrix;
use crate::ncalg::parse::{parse_expr, ParseError};
use crate::ncalg::{numeric_relation_residual, ideal_membership, MembershipError, NCPoly, Path, Potential, Quiver, Rep, RepError};
use crate::{q_int, Q};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use std::collections::BTreeMap;
use std::fmt;

/// Exponents of `x, y, z`.
pub type Mono = [u32; 3];

const COORDS: [&str; 3] = ["x", "y", "z"];

/// Commutative polynomial in the chart coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoordPoly(pub BTreeMap<Mono, Q>);

impl CoordPoly {
    pub fn zero() -> Self {
        CoordPoly::default()
    }

    pub fn constant(c: Q) -> Self {
        let mut p = CoordPoly::zero();
        p.add_term([0; 3], c);
        p
    }

    pub fn parse(s: &str) -> Result<CoordPoly, ParseError> {
        let mut p = CoordPoly::zero();
        for (c, syms) in parse_expr(s, &COORDS)? {
            let mut m = [0u32; 3];
            for s in syms {
                m[COORDS.iter().position(|c| *c == s).unwrap()] += 1;
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    pub fn add_term(&mut self, m: Mono, c: Q) {
        let e = self.0.entry(m).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&self, o: &CoordPoly) -> CoordPoly {
        let mut s = self.clone();
        for (m, c) in &o.0 {
            s.add_term(*m, c.clone());
        }
        s
    }

    pub fn scale(&self, c: &Q) -> CoordPoly {
        let mut s = CoordPoly::zero();
        for (m, a) in &self.0 {
            s.add_term(*m, a * c);
        }
        s
    }

    pub fn mul(&self, o: &CoordPoly) -> CoordPoly {
        let mut s = CoordPoly::zero();
        for (m, a) in &self.0 {
            for (n, b) in &o.0 {
                s.add_term(mono_mul(m, n), a * b);
            }
        }
        s
    }

    pub fn eval(&self, pt: &[Q; 3]) -> Q {
        self.0.iter().map(|(m, c)| c * mono_eval(m, pt)).fold(Q::zero(), |a, b| a + b)
    }
}

impl fmt::Display for CoordPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.0.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else if i > 0 { "+" } else { "" };
            let a = c.abs();
            let mono = render_mono(m);
            let coeff = if a.is_one() && !mono.is_empty() { String::new() } else { a.to_string() };
            write!(f, "{}{sign}{coeff}{mono}", if i > 0 { " " } else { "" })?;
        }
        Ok(())
    }
}

fn mono_mul(a: &Mono, b: &Mono) -> Mono {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

fn mono_eval(m: &Mono, pt: &[Q; 3]) -> Q {
    let mut v = Q::one();
    for k in 0..3 {
        for _ in 0..m[k] {
            v *= &pt[k];
        }
    }
    v
}

pub fn render_mono(m: &Mono) -> String {
    let mut s = String::new();
    for k in 0..3 {
        match m[k] {
            0 => {}
            1 => s.push_str(COORDS[k]),
            e => s.push_str(&format!("{}^{e}", COORDS[k])),
        }
    }
    s
}

pub type CoordMatrix = Vec<Vec<CoordPoly>>;

pub fn coord_matrix<S: AsRef<str>>(rows: &[Vec<S>]) -> Result<CoordMatrix, ParseError> {
    rows.iter().map(|r| r.iter().map(|e| CoordPoly::parse(e.as_ref())).collect()).collect()
}

pub fn coord_mul(a: &CoordMatrix, b: &CoordMatrix) -> CoordMatrix {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            assert_eq!(row.len(), inner, "shape mismatch");
            (0..cols).map(|j| (0..inner).fold(CoordPoly::zero(), |acc, k| acc.add(&row[k].mul(&b[k][j])))).collect()
        })
        .collect()
}

pub fn coord_scale(a: &CoordMatrix, c: &Q) -> CoordMatrix {
    a.iter().map(|r| r.iter().map(|e| e.scale(c)).collect()).collect()
}

/// Summand `O(twist) ⊗ V_vertex`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slot {
    pub twist: i64,
    pub vertex: String,
}

impl fmt::Display for Slot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twist == 0 {
            write!(f, "O V{}", self.vertex)
        } else {
            write!(f, "O({}) V{}", self.twist, self.vertex)
        }
    }
}

/// `maps[k]` has `modules[k+1].len()` rows and `modules[k].len()` columns.
#[derive(Debug, Clone)]
pub struct MonadTemplate {
    pub id: String,
    pub quiver: Quiver,
    pub potential: Potential,
    pub modules: Vec<Vec<Slot>>,
    pub maps: Vec<Vec<Vec<String>>>,
    /// Weights of `x, y` bounding the `z`-degree of line bundle maps; `None` skips the check.
    pub fibre_weights: Option<[i64; 2]>,
}

impl MonadTemplate {
    pub fn new(id: &str, quiver: Quiver, potential: Potential, modules: Vec<Vec<Slot>>, maps: Vec<Vec<Vec<String>>>, fibre_weights: Option<[i64; 2]>) -> Self {
        MonadTemplate { id: id.into(), quiver, potential, modules, maps, fibre_weights }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MonadError {
    #[error("map d{map} has shape {got:?}, expected {want:?}")]
    Shape { map: usize, got: (usize, usize), want: (usize, usize) },
    #[error("d{map}[{row},{col}]: {msg}")]
    Parse { map: usize, row: usize, col: usize, msg: String },
    #[error("d{map}[{row},{col}]: {detail}")]
    RoleMismatch { map: usize, row: usize, col: usize, detail: String },
    #[error("d{map}[{row},{col}]: {mono} is not a section of the line bundle map")]
    DegreeMismatch { map: usize, row: usize, col: usize, mono: String },
    #[error("d{next}·d{map} entry [{row},{col}] coefficient of `{mono}` is not in the ideal: residual {residual}")]
    NotInIdeal { map: usize, next: usize, row: usize, col: usize, mono: String, residual: String },
    #[error("relation set is for a different quiver")]
    QuiverMismatch,
    #[error("representation violates relations: {0:?}")]
    RelationsViolated(Vec<String>),
    #[error(transparent)]
    Rep(#[from] RepError),
}

/// Entry of an assembled map: coefficients of `coord · path`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MonadEntry(pub BTreeMap<(Mono, Path), Q>);

impl MonadEntry {
    fn add_term(&mut self, m: Mono, p: Path, c: Q) {
        let k = (m, p);
        let e = self.0.entry(k.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn mul(&self, o: &MonadEntry) -> MonadEntry {
        let mut out = MonadEntry::default();
        for ((m, p), a) in &self.0 {
            for ((n, r), b) in &o.0 {
                if let Some(pr) = p.compose(r) {
                    out.add_term(mono_mul(m, n), pr, a * b);
                }
            }
        }
        out
    }

    fn add(&mut self, o: &MonadEntry) {
        for ((m, p), c) in &o.0 {
            self.add_term(*m, p.clone(), c.clone());
        }
    }

    /// Path-algebra coefficient of each coordinate monomial.
    pub fn by_mono(&self) -> BTreeMap<Mono, NCPoly> {
        let mut out: BTreeMap<Mono, NCPoly> = BTreeMap::new();
        for ((m, p), c) in &self.0 {
            out.entry(*m).or_default().add_term(p.clone(), c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.0.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .by_mono()
            .iter()
            .map(|(m, p)| {
                let mono = render_mono(m);
                match (mono.is_empty(), p.len()) {
                    (true, _) => p.render(q),
                    (false, 1) if p.terms().next().unwrap().0.is_empty() => {
                        let c = p.terms().next().unwrap().1;
                        if c.is_one() { mono } else { format!("{c}{mono}") }
                    }
                    _ => format!("{mono}({})", p.render(q)),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

#[derive(Debug, Clone)]
pub struct MonadComplex {
    pub id: String,
    pub quiver: Quiver,
    pub modules: Vec<Vec<Slot>>,
    pub maps: Vec<Vec<Vec<MonadEntry>>>,
}

impl MonadComplex {
    /// Coordinate matrix multiplying each path in map `k`.
    pub fn blocks(&self, k: usize) -> BTreeMap<Path, CoordMatrix> {
        let d = &self.maps[k];
        let (rows, cols) = (d.len(), self.modules[k].len());
        let mut out: BTreeMap<Path, CoordMatrix> = BTreeMap::new();
        for (i, row) in d.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                for ((m, p), c) in &e.0 {
                    let b = out.entry(p.clone()).or_insert_with(|| vec![vec![CoordPoly::zero(); cols]; rows]);
                    b[i][j].add_term(*m, c.clone());
                }
            }
        }
        out
    }

    /// Entries of `d_{k+1} · d_k`.
    pub fn composite(&self, k: usize) -> Vec<Vec<MonadEntry>> {
        let (a, b) = (&self.maps[k + 1], &self.maps[k]);
        let cols = self.modules[k].len();
        a.iter()
            .map(|row| {
                (0..cols)
                    .map(|j| {
                        let mut e = MonadEntry::default();
                        for (l, x) in row.iter().enumerate() {
                            e.add(&x.mul(&b[l][j]));
                        }
                        e
                    })
                    .collect()
            })
            .collect()
    }

    /// Dimension of each term on a representation.
    pub fn term_dims(&self, rep: &Rep) -> Vec<usize> {
        self.modules.iter().map(|m| m.iter().map(|s| rep.dims[self.quiver.vertex(&s.vertex).unwrap()]).sum()).collect()
    }

    /// Numeric matrix of `d_k` on `rep` at a chart point.
    pub fn eval_map(&self, k: usize, rep: &Rep, pt: &[Q; 3]) -> QMatrix {
        let q = &self.quiver;
        let dim = |s: &Slot| rep.dims[q.vertex(&s.vertex).unwrap()];
        let offsets = |m: &[Slot]| {
            let mut o = vec![0];
            for s in m {
                o.push(o.last().unwrap() + dim(s));
            }
            o
        };
        let (ro, co) = (offsets(&self.modules[k + 1]), offsets(&self.modules[k]));
        let mut out = QMatrix::zeros(*ro.last().unwrap(), *co.last().unwrap());
        for (i, row) in self.maps[k].iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                for ((m, p), c) in &e.0 {
                    let f = c * mono_eval(m, pt);
                    if !f.is_zero() {
                        out.add_block(ro[i], co[j], &rep.eval_path(p), &f);
                    }
                }
            }
        }
        out
    }
}

/// Parses every entry against the quiver, checking path endpoints and line bundle degrees.
/// `symbols` renames template symbols to arrow names; missing keys map to themselves.
pub fn assemble(t: &MonadTemplate, symbols: &BTreeMap<String, String>) -> Result<MonadComplex, MonadError> {
    let q = &t.quiver;
    let mut vocab: Vec<String> = q.arrow_names().iter().map(|s| s.to_string()).collect();
    vocab.extend(symbols.keys().cloned());
    vocab.extend(COORDS.iter().map(|s| s.to_string()));
    let vocab_ref: Vec<&str> = vocab.iter().map(|s| s.as_str()).collect();
    let mut maps = Vec::new();
    for (k, d) in t.maps.iter().enumerate() {
        let want = (t.modules[k + 1].len(), t.modules[k].len());
        let got = (d.len(), d.first().map_or(0, |r| r.len()));
        if got != want || d.iter().any(|r| r.len() != want.1) {
            return Err(MonadError::Shape { map: k + 1, got, want });
        }
        let mut rows = Vec::new();
        for (i, row) in d.iter().enumerate() {
            let mut out_row = Vec::new();
            for (j, src) in row.iter().enumerate() {
                let (cs, rs) = (&t.modules[k][j], &t.modules[k + 1][i]);
                let role = |detail: String| MonadError::RoleMismatch { map: k + 1, row: i, col: j, detail };
                let terms = parse_expr(src, &vocab_ref).map_err(|e| MonadError::Parse { map: k + 1, row: i, col: j, msg: e.to_string() })?;
                let (sv, tv) = (q.vertex(&cs.vertex).map_err(|e| role(e.to_string()))?, q.vertex(&rs.vertex).map_err(|e| role(e.to_string()))?);
                let mut entry = MonadEntry::default();
                for (c, syms) in terms {
                    let mut mono = [0u32; 3];
                    let mut path: Option<Path> = None;
                    for s in &syms {
                        if let Some(pos) = COORDS.iter().position(|c| c == s) {
                            mono[pos] += 1;
                            continue;
                        }
                        let name = symbols.get(s).unwrap_or(s);
                        let a = q.arrow(name).map_err(|_| role(format!("`{s}` is not an arrow")))?;
                        let p = Path::from_arrows(q, &[a]).unwrap();
                        path = Some(match path {
                            None => p,
                            Some(acc) => acc.compose(&p).ok_or_else(|| role(format!("`{}` is not composable", syms.join(""))))?,
                        });
                    }
                    let path = path.unwrap_or_else(|| Path::vertex(sv));
                    if path.src() != sv || path.tgt() != tv {
                        return Err(role(format!("`{}` does not run from V{} to V{}", syms.join(""), cs.vertex, rs.vertex)));
                    }
                    if let Some([wx, wy]) = t.fibre_weights {
                        let cap = rs.twist - cs.twist + mono[0] as i64 * wx + mono[1] as i64 * wy;
                        if mono[2] as i64 > cap {
                            return Err(MonadError::DegreeMismatch { map: k + 1, row: i, col: j, mono: render_mono(&mono) });
                        }
                    }
                    entry.add_term(mono, path, c);
                }
                out_row.push(entry);
            }
            rows.push(out_row);
        }
        maps.push(rows);
    }
    Ok(MonadComplex { id: t.id.clone(), quiver: q.clone(), modules: t.modules.clone(), maps })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntryCertificate {
    /// `d_{map+1} · d_map`.
    pub map: usize,
    pub row: usize,
    pub col: usize,
    pub mono: String,
    pub certificate: String,
    pub terms: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSquaredReport {
    /// Entries of all composites, zero or not.
    pub entries: usize,
    /// One per nonzero coordinate coefficient.
    pub records: Vec<EntryCertificate>,
}

/// Certifies each coordinate coefficient of `d_{k+1}d_k` lies in the two-sided ideal of
/// the effective relations, after dropping words through zero-bound marked arrows.
pub fn certify_d_squared(c: &MonadComplex, rels: &FramedRelationSet) -> Result<DSquaredReport, MonadError> {
    if c.quiver.arrow_names() != rels.quiver.arrow_names() {
        return Err(MonadError::QuiverMismatch);
    }
    let eff = rels.effective();
    let mut report = DSquaredReport { entries: 0, records: vec![] };
    for k in 0..c.maps.len().saturating_sub(1) {
        for (i, row) in c.composite(k).iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                report.entries += 1;
                for (m, p) in e.by_mono() {
                    let p = rels.drop_zero_bound(&p);
                    if p.is_zero() {
                        continue;
                    }
                    match ideal_membership(&c.quiver, &p, &eff, 1) {
                        Ok(cert) => report.records.push(EntryCertificate {
                            map: k + 1,
                            row: i,
                            col: j,
                            mono: render_mono(&m),
                            certificate: cert.render(&c.quiver, &eff),
                            terms: cert.terms.len(),
                        }),
                        Err(MembershipError::NotInIdeal { residual } | MembershipError::BoundTooSmall { residual }) => {
                            return Err(MonadError::NotInIdeal {
                                map: k + 1,
                                next: k + 2,
                                row: i,
                                col: j,
                                mono: render_mono(&m),
                                residual: residual.render(&c.quiver),
                            })
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FibreReport {
    pub term_dims: Vec<usize>,
    /// Homology of the complex of fibres at the given point.
    pub fibre_homology: Vec<usize>,
    /// Homology at a seeded random point, i.e. generic ranks of the cohomology sheaves.
    pub generic_homology: Vec<usize>,
    pub d_squared_zero: bool,
    pub fibre_exact: bool,
}

fn homology(dims: &[usize], mats: &[QMatrix]) -> Vec<usize> {
    let ranks: Vec<usize> = mats.iter().map(|m| m.rank()).collect();
    (0..dims.len())
        .map(|k| {
            let out = if k < ranks.len() { ranks[k] } else { 0 };
            let inc = if k > 0 { ranks[k - 1] } else { 0 };
            dims[k] - out - inc
        })
        .collect()
}

/// Point used for generic ranks; fixed seed so reports are reproducible.
pub fn generic_point(seed: u64) -> [Q; 3] {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    [0, 1, 2].map(|_| q_int(rng.gen_range(-97..=97)))
}

/// Evaluates the complex on a representation satisfying the relations.
pub fn evaluate(c: &MonadComplex, rels: &FramedRelationSet, rep: &Rep, pt: &[Q; 3]) -> Result<FibreReport, MonadError> {
    let bad: Vec<String> = numeric_relation_residual(&c.quiver, &rels.relations, rep)?.into_iter().filter(|(_, v)| !v.is_zero()).map(|(a, _)| a).collect();
    if !bad.is_empty() {
        return Err(MonadError::RelationsViolated(bad));
    }
    let dims = c.term_dims(rep);
    let at = |p: &[Q; 3]| (0..c.maps.len()).map(|k| c.eval_map(k, rep, p)).collect::<Vec<_>>();
    let mats = at(pt);
    let d_squared_zero = mats.windows(2).all(|w| w[1].mul(&w[0]).is_zero());
    let fibre_homology = homology(&dims, &mats);
    let generic_homology = homology(&dims, &at(&generic_point(0x5eed)));
    let fibre_exact = fibre_homology.iter().all(|&h| h == 0);
    Ok(FibreReport { term_dims: dims, fibre_homology, generic_homology, d_squared_zero, fibre_exact })
}
