use super::poly::{NCPoly, Path};
use super::potential::RelationSet;
use super::quiver::Quiver;
use crate::linalg::QMatrix;
use crate::Q;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("arrow `{arrow}` has shape {got:?}, expected {want:?}")]
    ShapeMismatch { arrow: String, got: (usize, usize), want: (usize, usize) },
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("dimension vector has {got} entries for {want} vertices")]
    DimLength { got: usize, want: usize },
    #[error("polynomial has mixed endpoints")]
    MixedEndpoints,
}

/// Numeric representation: a matrix `d_tgt × d_src` per arrow; missing arrows are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rep {
    pub dims: Vec<usize>,
    mats: Vec<QMatrix>,
}

impl Rep {
    pub fn new(q: &Quiver, dims: Vec<usize>, given: &BTreeMap<String, QMatrix>) -> Result<Rep, RepError> {
        if dims.len() != q.vertices().len() {
            return Err(RepError::DimLength { got: dims.len(), want: q.vertices().len() });
        }
        for name in given.keys() {
            q.arrow(name).map_err(|_| RepError::UnknownArrow(name.clone()))?;
        }
        let mut mats = Vec::new();
        for a in q.arrows() {
            let want = (dims[a.tgt], dims[a.src]);
            let m = match given.get(&a.name) {
                Some(m) if m.shape() != want => {
                    return Err(RepError::ShapeMismatch { arrow: a.name.clone(), got: m.shape(), want })
                }
                Some(m) => m.clone(),
                None => QMatrix::zeros(want.0, want.1),
            };
            mats.push(m);
        }
        Ok(Rep { dims, mats })
    }

    pub fn matrix(&self, arrow: usize) -> &QMatrix {
        &self.mats[arrow]
    }

    pub fn eval_path(&self, p: &Path) -> QMatrix {
        let mut m = QMatrix::identity(self.dims[p.src()]);
        for &a in p.arrows().iter().rev() {
            m = self.mats[a].mul(&m);
        }
        m
    }

    pub fn eval(&self, p: &NCPoly) -> Result<Option<QMatrix>, RepError> {
        let Some((s, t)) = p.endpoints() else {
            return if p.is_zero() { Ok(None) } else { Err(RepError::MixedEndpoints) };
        };
        let mut m = QMatrix::zeros(self.dims[t], self.dims[s]);
        for (w, c) in p.terms() {
            m = m.add(&self.eval_path(w).scale(c));
        }
        Ok(Some(m))
    }
}

/// Largest absolute entry of each relation evaluated on `rep`, keyed by arrow name.
pub fn numeric_relation_residual(q: &Quiver, rels: &RelationSet, rep: &Rep) -> Result<Vec<(String, Q)>, RepError> {
    let mut out = Vec::new();
    for r in &rels.relations {
        let v = match rep.eval(&r.poly)? {
            Some(m) => m.max_abs(),
            None => num_traits::Zero::zero(),
        };
        out.push((q.arrows()[r.arrow].name.clone(), v));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::potential::{relations_from_potential, Potential};
    use super::*;
    use num_traits::{One, Zero};

    fn setup() -> (Quiver, RelationSet) {
        let q = Quiver::new(&[("0", false)], &[("B1", "0", "0", false), ("B2", "0", "0", false), ("B3", "0", "0", false)]).unwrap();
        let r = relations_from_potential(&q, &Potential::parse(&q, "B1[B2,B3]").unwrap());
        (q, r)
    }

    #[test]
    fn commuting_diagonals() {
        let (q, r) = setup();
        let mut m = BTreeMap::new();
        m.insert("B1".to_string(), QMatrix::from_i64(&[&[1, 0], &[0, 2]]));
        m.insert("B2".to_string(), QMatrix::from_i64(&[&[1, 0], &[0, 2]]));
        let rep = Rep::new(&q, vec![2], &m).unwrap();
        assert!(numeric_relation_residual(&q, &r, &rep).unwrap().iter().all(|(_, v)| v.is_zero()));
    }

    #[test]
    fn nilpotent_commutator() {
        let (q, r) = setup();
        let mut m = BTreeMap::new();
        m.insert("B1".to_string(), QMatrix::from_i64(&[&[0, 1], &[0, 0]]));
        m.insert("B2".to_string(), QMatrix::from_i64(&[&[0, 0], &[1, 0]]));
        let rep = Rep::new(&q, vec![2], &m).unwrap();
        let res = numeric_relation_residual(&q, &r, &rep).unwrap();
        // ∂B3 = [B1,B2]
        assert_eq!(res[2], ("B3".to_string(), Q::one()));
        assert!(res[0].1.is_zero() && res[1].1.is_zero());
        assert!(numeric_relation_residual(&q, &RelationSet::default(), &rep).unwrap().is_empty());
    }

    #[test]
    fn shape_checked() {
        let (q, _) = setup();
        let mut m = BTreeMap::new();
        m.insert("B1".to_string(), QMatrix::zeros(2, 3));
        assert!(matches!(Rep::new(&q, vec![2], &m), Err(RepError::ShapeMismatch { .. })));
    }
}
