use super::parse::{parse_expr, ParseError};
use super::quiver::Quiver;
use crate::Q;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write;

/// A path in matrix-product order: `[w1, ..., wk]` stands for the composite
/// `w1 ∘ ... ∘ wk`, so `src(w_i) = tgt(w_{i+1})`. The empty path is the
/// idempotent at `src == tgt`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    arrows: Vec<usize>,
    src: usize,
    tgt: usize,
}

impl Ord for Path {
    fn cmp(&self, o: &Self) -> Ordering {
        self.arrows
            .len()
            .cmp(&o.arrows.len())
            .then_with(|| self.arrows.cmp(&o.arrows))
            .then_with(|| self.src.cmp(&o.src))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Path {
    pub fn vertex(v: usize) -> Path {
        Path { arrows: vec![], src: v, tgt: v }
    }

    /// Builds a path from arrow indices, `None` if the word is not composable.
    pub fn from_arrows(q: &Quiver, arrows: &[usize]) -> Option<Path> {
        let first = *arrows.first()?;
        for w in arrows.windows(2) {
            if q.arrows()[w[0]].src != q.arrows()[w[1]].tgt {
                return None;
            }
        }
        let last = *arrows.last()?;
        Some(Path { arrows: arrows.to_vec(), src: q.arrows()[last].src, tgt: q.arrows()[first].tgt })
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn src(&self) -> usize {
        self.src
    }

    pub fn tgt(&self) -> usize {
        self.tgt
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self ∘ other`, defined when `other` ends where `self` starts.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if self.src != other.tgt {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { arrows, src: other.src, tgt: self.tgt })
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertices()[self.src].name);
        }
        self.arrows.iter().map(|&a| q.arrows()[a].name.as_str()).collect::<Vec<_>>().join("·")
    }

    /// All paths of length at most `max_len`, idempotents included.
    pub fn enumerate(q: &Quiver, max_len: usize) -> Vec<Path> {
        let mut out: Vec<Path> = (0..q.vertices().len()).map(Path::vertex).collect();
        let mut layer: Vec<Path> = out.clone();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for p in &layer {
                for (ai, a) in q.arrows().iter().enumerate() {
                    // append on the right: p ∘ a
                    if a.tgt == p.src {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path { arrows, src: a.src, tgt: if p.arrows.is_empty() { a.tgt } else { p.tgt } });
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Element of the path algebra: finite rational combination of paths.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NCPoly {
    terms: BTreeMap<Path, Q>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn from_path(p: Path) -> Self {
        Self::from_term(p, Q::one())
    }

    pub fn from_term(p: Path, c: Q) -> Self {
        let mut s = NCPoly::zero();
        s.add_term(p, c);
        s
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Path, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Path) -> Q {
        self.terms.get(p).cloned().unwrap_or_else(Q::zero)
    }

    pub fn leading(&self) -> Option<(&Path, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, p: Path, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &Q) {
        for (p, x) in &other.terms {
            self.add_term(p.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Q) -> NCPoly {
        let mut s = NCPoly::zero();
        s.add_scaled(self, c);
        s
    }

    pub fn add(&self, o: &NCPoly) -> NCPoly {
        let mut s = self.clone();
        s.add_scaled(o, &Q::one());
        s
    }

    pub fn sub(&self, o: &NCPoly) -> NCPoly {
        let mut s = self.clone();
        s.add_scaled(o, &-Q::one());
        s
    }

    /// Path-algebra product; non-composable pairs vanish.
    pub fn mul(&self, o: &NCPoly) -> NCPoly {
        let mut s = NCPoly::zero();
        for (p, a) in &self.terms {
            for (r, b) in &o.terms {
                if let Some(pr) = p.compose(r) {
                    s.add_term(pr, a * b);
                }
            }
        }
        s
    }

    /// Endpoints shared by every term, if any.
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        let mut it = self.terms.keys();
        let f = it.next()?;
        let e = (f.src, f.tgt);
        it.all(|p| (p.src, p.tgt) == e).then_some(e)
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|p| p.len()).max().unwrap_or(0)
    }

    /// Drops every term whose path uses an arrow for which `kill` holds.
    pub fn drop_arrows(&self, kill: impl Fn(usize) -> bool) -> NCPoly {
        NCPoly { terms: self.terms.iter().filter(|(p, _)| !p.arrows.iter().any(|&a| kill(a))).map(|(p, c)| (p.clone(), c.clone())).collect() }
    }

    /// Parses e.g. `B1*B2 - 1/2 B2 B1` or `[B1,B2] + IJ`; idempotents are written `e_<vertex>`.
    pub fn parse(q: &Quiver, s: &str) -> Result<NCPoly, PolyError> {
        let idem: Vec<String> = q.vertices().iter().map(|v| format!("e_{}", v.name)).collect();
        let mut vocab: Vec<&str> = q.arrow_names();
        vocab.extend(idem.iter().map(|s| s.as_str()));
        let terms = parse_expr(s, &vocab)?;
        let mut out = NCPoly::zero();
        for (c, w) in terms {
            let mut path: Option<Path> = None;
            for sym in &w {
                let p = if let Some(v) = sym.strip_prefix("e_").and_then(|n| q.vertex(n).ok()) {
                    Path::vertex(v)
                } else {
                    let a = q.arrow(sym).map_err(|_| PolyError::Parse(ParseError::UnknownSymbol(sym.clone())))?;
                    Path::from_arrows(q, &[a]).unwrap()
                };
                path = Some(match path {
                    None => p,
                    Some(acc) => acc.compose(&p).ok_or_else(|| PolyError::NotComposable(w.join(" ")))?,
                });
            }
            let path = path.ok_or(PolyError::Parse(ParseError::Eof))?;
            out.add_term(path, c);
        }
        Ok(out)
    }

    pub fn render(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (p, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                let _ = write!(s, "{}·", a);
            }
            s.push_str(&p.render(q));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("word `{0}` is not a composable path")]
    NotComposable(String),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn conifold() -> Quiver {
        Quiver::new(
            &[("0", false), ("1", false)],
            &[("A", "0", "1", false), ("B", "1", "0", false), ("C", "0", "1", false), ("D", "1", "0", false)],
        )
        .unwrap()
    }

    #[test]
    fn composability_is_matrix_order() {
        let q = conifold();
        // A: 0→1, B: 1→0; A·B composes B first, then A.
        let ab = NCPoly::parse(&q, "AB").unwrap();
        let (p, _) = ab.leading().unwrap();
        assert_eq!((p.src(), p.tgt()), (1, 1));
        assert!(matches!(NCPoly::parse(&q, "AC"), Err(PolyError::NotComposable(_))));
        let a = NCPoly::parse(&q, "A").unwrap();
        let c = NCPoly::parse(&q, "C").unwrap();
        assert!(a.mul(&c).is_zero());
    }

    #[test]
    fn idempotents_act_as_units() {
        let q = conifold();
        let a = NCPoly::parse(&q, "A").unwrap();
        let e0 = NCPoly::parse(&q, "e_0").unwrap();
        let e1 = NCPoly::parse(&q, "e_1").unwrap();
        assert_eq!(a.mul(&e0), a);
        assert_eq!(e1.mul(&a), a);
        assert!(e0.mul(&a).is_zero());
    }

    #[test]
    fn enumerate_counts() {
        let q = conifold();
        // 2 idempotents, 4 arrows, 8 length-two paths
        assert_eq!(Path::enumerate(&q, 2).len(), 14);
        for p in Path::enumerate(&q, 3) {
            if !p.is_empty() {
                assert_eq!(Path::from_arrows(&q, p.arrows()).unwrap(), p);
            }
        }
    }

    #[test]
    fn render_round_trip() {
        let q = conifold();
        let p = NCPoly::parse(&q, "ABCD - 2 ADCB + 1/3 e_1").unwrap();
        let s = p.render(&q).replace('·', "");
        assert_eq!(NCPoly::parse(&q, &s).unwrap(), p);
    }
}
