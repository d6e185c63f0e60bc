use super::poly::{NCPoly, Path, PolyError};
use super::quiver::{Quiver, QuiverError};
use crate::Q;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// Formal sum of cyclic words, keyed by the lexicographically least rotation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Potential {
    terms: BTreeMap<Vec<usize>, Q>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PotentialError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("word `{0}` is not a closed path")]
    NotClosed(String),
    #[error("bad coefficient `{0}`")]
    BadCoeff(String),
}

pub fn canonical_rotation(w: &[usize]) -> Vec<usize> {
    (0..w.len())
        .map(|i| {
            let mut r = w[i..].to_vec();
            r.extend_from_slice(&w[..i]);
            r
        })
        .min()
        .unwrap_or_default()
}

fn is_closed(q: &Quiver, w: &[usize]) -> bool {
    match Path::from_arrows(q, w) {
        Some(p) => p.src() == p.tgt(),
        None => false,
    }
}

impl Potential {
    pub fn zero() -> Self {
        Potential::default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Q)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_word(&mut self, q: &Quiver, w: &[usize], c: Q) -> Result<(), PotentialError> {
        if w.is_empty() || !is_closed(q, w) {
            let names: Vec<&str> = w.iter().map(|&a| q.arrows()[a].name.as_str()).collect();
            return Err(PotentialError::NotClosed(names.join("")));
        }
        let key = canonical_rotation(w);
        let e = self.terms.entry(key.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
        Ok(())
    }

    pub fn from_poly(q: &Quiver, p: &NCPoly) -> Result<Self, PotentialError> {
        let mut w = Potential::zero();
        for (path, c) in p.terms() {
            w.add_word(q, path.arrows(), c.clone())?;
        }
        Ok(w)
    }

    pub fn parse(q: &Quiver, s: &str) -> Result<Self, PotentialError> {
        Self::from_poly(q, &NCPoly::parse(q, s)?)
    }

    pub fn add(&self, o: &Potential) -> Potential {
        let mut s = self.clone();
        for (w, c) in &o.terms {
            let e = s.terms.entry(w.clone()).or_insert_with(Q::zero);
            *e += c;
            if e.is_zero() {
                s.terms.remove(w);
            }
        }
        s
    }

    pub fn scale(&self, c: &Q) -> Potential {
        if c.is_zero() {
            return Potential::zero();
        }
        Potential { terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect() }
    }

    /// Terms avoiding every arrow for which `kill` holds.
    pub fn drop_arrows(&self, kill: impl Fn(usize) -> bool) -> Potential {
        Potential { terms: self.terms.iter().filter(|(w, _)| !w.iter().any(|&a| kill(a))).map(|(w, c)| (w.clone(), c.clone())).collect() }
    }

    /// Re-indexes onto another quiver sharing arrow names (e.g. a subquiver).
    pub fn transport(&self, from: &Quiver, to: &Quiver) -> Result<Potential, PotentialError> {
        let mut out = Potential::zero();
        for (w, c) in &self.terms {
            let mut nw = Vec::with_capacity(w.len());
            for &a in w {
                nw.push(to.arrow(&from.arrows()[a].name)?);
            }
            out.add_word(to, &nw, c.clone())?;
        }
        Ok(out)
    }

    pub fn render(&self, q: &Quiver) -> String {
        let mut p = NCPoly::zero();
        for (w, c) in &self.terms {
            p.add_term(Path::from_arrows(q, w).unwrap(), c.clone());
        }
        p.render(q)
    }

    pub fn to_json(&self, q: &Quiver) -> PotentialJson {
        PotentialJson {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| TermJson { word: w.iter().map(|&a| q.arrows()[a].name.clone()).collect(), coeff: c.to_string() })
                .collect(),
        }
    }

    pub fn from_json(q: &Quiver, j: &PotentialJson) -> Result<Self, PotentialError> {
        let mut w = Potential::zero();
        for t in &j.terms {
            let word = t.word.iter().map(|n| q.arrow(n)).collect::<Result<Vec<_>, _>>()?;
            let c: Q = t.coeff.parse().map_err(|_| PotentialError::BadCoeff(t.coeff.clone()))?;
            w.add_word(q, &word, c)?;
        }
        Ok(w)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub word: Vec<String>,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PotentialJson {
    pub terms: Vec<TermJson>,
}

/// ∂_a W: for each occurrence of `a`, the rest of the cyclic word read from
/// just after that occurrence. The result runs from `tgt(a)` to `src(a)`.
pub fn cyclic_derivative(q: &Quiver, w: &Potential, a: &str) -> Result<NCPoly, QuiverError> {
    let ai = q.arrow(a)?;
    let arrow = &q.arrows()[ai];
    let mut out = NCPoly::zero();
    for (word, c) in &w.terms {
        for (i, &x) in word.iter().enumerate() {
            if x != ai {
                continue;
            }
            let mut rest: Vec<usize> = word[i + 1..].to_vec();
            rest.extend_from_slice(&word[..i]);
            let p = if rest.is_empty() {
                Path::vertex(arrow.src)
            } else {
                Path::from_arrows(q, &rest).expect("rotation of a closed word is composable")
            };
            out.add_term(p, c.clone());
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    /// The arrow whose cyclic derivative this is.
    pub arrow: usize,
    pub src: usize,
    pub tgt: usize,
    pub poly: NCPoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelationSet {
    pub relations: Vec<Relation>,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn get(&self, q: &Quiver, arrow: &str) -> Option<&Relation> {
        let a = q.arrow(arrow).ok()?;
        self.relations.iter().find(|r| r.arrow == a)
    }

    /// Nonzero relations with duplicates up to sign removed, original
    /// positions kept for certificates.
    pub fn generators(&self) -> Vec<(usize, NCPoly)> {
        let mut out: Vec<(usize, NCPoly)> = Vec::new();
        for (i, r) in self.relations.iter().enumerate() {
            if r.poly.is_zero() {
                continue;
            }
            let n = normalize(&r.poly);
            if out.iter().any(|(_, p)| normalize(p) == n) {
                continue;
            }
            out.push((i, r.poly.clone()));
        }
        out
    }

    pub fn render(&self, q: &Quiver) -> Vec<String> {
        self.relations
            .iter()
            .map(|r| format!("∂{}: {}", q.arrows()[r.arrow].name, r.poly.render(q)))
            .collect()
    }
}

fn normalize(p: &NCPoly) -> NCPoly {
    match p.leading() {
        Some((_, c)) => p.scale(&(Q::one() / c)),
        None => p.clone(),
    }
}

/// One relation ∂_a W per unmarked arrow, in arrow order.
pub fn relations_from_potential(q: &Quiver, w: &Potential) -> RelationSet {
    let relations = q
        .arrows()
        .iter()
        .enumerate()
        .filter(|(_, a)| !a.marked)
        .map(|(i, a)| Relation {
            arrow: i,
            src: a.tgt,
            tgt: a.src,
            poly: cyclic_derivative(q, w, &a.name).unwrap(),
        })
        .collect();
    RelationSet { relations }
}
