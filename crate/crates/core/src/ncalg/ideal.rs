//! Bounded two-sided ideal membership by linear algebra over the rationals.

use super::poly::{NCPoly, Path};
use super::potential::RelationSet;
use super::quiver::Quiver;
use crate::Q;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertTerm {
    pub coeff: Q,
    pub left: Path,
    /// Index into the relation set.
    pub relation: usize,
    pub right: Path,
}

/// `p = Σ coeff · left · r_relation · right`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Certificate {
    pub terms: Vec<CertTerm>,
}

impl Certificate {
    pub fn expand(&self, rels: &RelationSet) -> NCPoly {
        let mut out = NCPoly::zero();
        for t in &self.terms {
            let l = NCPoly::from_path(t.left.clone());
            let r = NCPoly::from_path(t.right.clone());
            out.add_scaled(&l.mul(&rels.relations[t.relation].poly).mul(&r), &t.coeff);
        }
        out
    }

    pub fn render(&self, q: &Quiver, rels: &RelationSet) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|t| {
                format!(
                    "({})·{}·∂{}·{}",
                    t.coeff,
                    t.left.render(q),
                    q.arrows()[rels.relations[t.relation].arrow].name,
                    t.right.render(q)
                )
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MembershipError {
    /// The bounded search space could not cover `p`; a larger bound may succeed.
    #[error("word-length bound too small; residual has {} terms", residual.len())]
    BoundTooSmall { residual: NCPoly },
    #[error("not in the ideal; residual has {} terms", residual.len())]
    NotInIdeal { residual: NCPoly },
}

impl MembershipError {
    pub fn residual(&self) -> &NCPoly {
        match self {
            MembershipError::BoundTooSmall { residual } | MembershipError::NotInIdeal { residual } => residual,
        }
    }
}

struct Row {
    vec: NCPoly,
    combo: BTreeMap<usize, Q>,
}

/// Echelon basis of the span of `u·r·v` with `|u|, |v| ≤ bound`, reusable across many queries.
pub struct IdealReducer<'a> {
    rels: &'a RelationSet,
    bound: usize,
    instances: Vec<(Path, usize, Path)>,
    pivots: BTreeMap<Path, Row>,
    homogeneous: bool,
    gen_lens: Vec<usize>,
}

impl<'a> IdealReducer<'a> {
    pub fn new(q: &Quiver, rels: &'a RelationSet, bound: usize) -> Self {
        Self::filtered(q, rels, bound, |_, _| true)
    }

    /// Only keeps products whose endpoints and (max) length pass `keep`.
    pub fn filtered(q: &Quiver, rels: &'a RelationSet, bound: usize, keep: impl Fn((usize, usize), usize) -> bool) -> Self {
        let gens = rels.generators();
        let homogeneous = gens.iter().all(|(_, p)| p.terms().map(|(w, _)| w.len()).collect::<BTreeSet<_>>().len() == 1);
        let gen_lens: Vec<usize> = gens.iter().map(|(_, p)| p.terms().map(|(w, _)| w.len()).min().unwrap()).collect();
        let paths = Path::enumerate(q, bound);
        let mut me = IdealReducer { rels, bound, instances: vec![], pivots: BTreeMap::new(), homogeneous, gen_lens };
        for (gi, g) in &gens {
            let r = &rels.relations[*gi];
            let glen = g.max_len();
            for u in paths.iter().filter(|u| u.src() == r.tgt) {
                for v in paths.iter().filter(|v| v.tgt() == r.src) {
                    if !keep((v.src(), u.tgt()), u.len() + glen + v.len()) {
                        continue;
                    }
                    let vec = NCPoly::from_path(u.clone()).mul(g).mul(&NCPoly::from_path(v.clone()));
                    if vec.is_zero() {
                        continue;
                    }
                    let idx = me.instances.len();
                    me.instances.push((u.clone(), *gi, v.clone()));
                    me.insert(vec, idx);
                }
            }
        }
        me
    }

    fn insert(&mut self, mut vec: NCPoly, idx: usize) {
        let mut combo = BTreeMap::new();
        combo.insert(idx, Q::one());
        while let Some((lead, c)) = vec.leading().map(|(p, c)| (p.clone(), c.clone())) {
            match self.pivots.get(&lead) {
                Some(row) => {
                    let f = -(c / row.vec.coeff(&lead));
                    vec.add_scaled(&row.vec, &f);
                    add_combo(&mut combo, &row.combo, &f);
                }
                None => {
                    self.pivots.insert(lead, Row { vec, combo });
                    return;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Fully reduced normal form of `p` and the combination that was subtracted.
    pub fn reduce(&self, p: &NCPoly) -> (NCPoly, BTreeMap<usize, Q>) {
        let mut res = p.clone();
        let mut combo: BTreeMap<usize, Q> = BTreeMap::new();
        let mut cursor: Option<Path> = None;
        loop {
            let next = res
                .terms()
                .rev()
                .find(|(w, _)| cursor.as_ref().is_none_or(|c| *w < c))
                .map(|(w, c)| (w.clone(), c.clone()));
            let Some((w, c)) = next else { break };
            match self.pivots.get(&w) {
                Some(row) => {
                    let f = -(c / row.vec.coeff(&w));
                    res.add_scaled(&row.vec, &f);
                    add_combo(&mut combo, &row.combo, &f);
                }
                None => cursor = Some(w),
            }
        }
        (res, combo)
    }

    /// Whether a failed reduction of `p` proves non-membership.
    fn complete_for(&self, p: &NCPoly) -> bool {
        if self.gen_lens.is_empty() {
            return true;
        }
        self.homogeneous
            && p.terms().all(|(w, _)| self.gen_lens.iter().all(|&g| g > w.len() || w.len() - g <= self.bound))
    }

    pub fn certify(&self, p: &NCPoly) -> Result<Certificate, MembershipError> {
        let (res, combo) = self.reduce(p);
        if !res.is_zero() {
            return Err(if self.complete_for(p) {
                MembershipError::NotInIdeal { residual: res }
            } else {
                MembershipError::BoundTooSmall { residual: res }
            });
        }
        // p - Σ f_i inst_i = 0 with the recorded (subtracted) combination being -f
        let mut terms = Vec::new();
        for (i, f) in combo {
            let (u, r, v) = &self.instances[i];
            terms.push(CertTerm { coeff: -f, left: u.clone(), relation: *r, right: v.clone() });
        }
        let cert = Certificate { terms };
        debug_assert_eq!(cert.expand(self.rels), *p);
        Ok(cert)
    }
}

fn add_combo(acc: &mut BTreeMap<usize, Q>, other: &BTreeMap<usize, Q>, f: &Q) {
    for (k, v) in other {
        let e = acc.entry(*k).or_insert_with(Q::zero);
        *e += v * f;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

/// Decides whether `p` lies in the two-sided ideal generated by `rels`,
/// searching over products `u·r·v` with `|u|, |v| ≤ bound`.
pub fn ideal_membership(q: &Quiver, p: &NCPoly, rels: &RelationSet, bound: usize) -> Result<Certificate, MembershipError> {
    let ends: BTreeSet<(usize, usize)> = p.terms().map(|(w, _)| (w.src(), w.tgt())).collect();
    let lens: BTreeSet<usize> = p.terms().map(|(w, _)| w.len()).collect();
    let gens = rels.generators();
    let homogeneous = gens.iter().all(|(_, g)| g.terms().map(|(w, _)| w.len()).collect::<BTreeSet<_>>().len() == 1);
    let red = IdealReducer::filtered(q, rels, bound, |e, l| ends.contains(&e) && (!homogeneous || lens.contains(&l)));
    red.certify(p)
}

#[cfg(test)]
mod tests {
    use super::super::potential::{relations_from_potential, Potential};
    use super::*;

    fn c3() -> (Quiver, RelationSet) {
        let q = Quiver::new(&[("0", false)], &[("B1", "0", "0", false), ("B2", "0", "0", false), ("B3", "0", "0", false)]).unwrap();
        let w = Potential::parse(&q, "B1[B2,B3]").unwrap();
        let r = relations_from_potential(&q, &w);
        (q, r)
    }

    #[test]
    fn relation_itself_at_bound_zero() {
        let (q, r) = c3();
        let p = NCPoly::parse(&q, "B2B3 - B3B2").unwrap();
        let c = ideal_membership(&q, &p, &r, 0).unwrap();
        assert_eq!(c.terms.len(), 1);
        assert!(c.terms[0].left.is_empty() && c.terms[0].right.is_empty());
        assert_eq!(c.expand(&r), p);
    }

    #[test]
    fn cubic_needs_bound_one() {
        let (q, r) = c3();
        let p = NCPoly::parse(&q, "B1B2B3 - B1B3B2").unwrap();
        assert!(matches!(ideal_membership(&q, &p, &r, 0), Err(MembershipError::BoundTooSmall { .. })));
        let c = ideal_membership(&q, &p, &r, 1).unwrap();
        assert_eq!(c.expand(&r), p);
        assert_eq!(c.terms.len(), 1);
        assert_eq!(c.terms[0].left.render(&q), "B1");
    }

    #[test]
    fn linear_word_is_not_in_ideal() {
        let (q, r) = c3();
        let p = NCPoly::parse(&q, "B1").unwrap();
        match ideal_membership(&q, &p, &r, 3) {
            Err(MembershipError::NotInIdeal { residual }) => assert_eq!(residual, p),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn empty_relations_prove_nonmembership() {
        let (q, _) = c3();
        let p = NCPoly::parse(&q, "B2B3 - B3B2").unwrap();
        assert!(matches!(ideal_membership(&q, &p, &RelationSet::default(), 1), Err(MembershipError::NotInIdeal { .. })));
    }

    #[test]
    fn residual_is_normal_form() {
        let (q, r) = c3();
        // B2B1 reduces to B1B2 modulo [B1,B2]; the normal form keeps the smaller word.
        let red = IdealReducer::new(&q, &r, 0);
        let (res, _) = red.reduce(&NCPoly::parse(&q, "B2B1").unwrap());
        assert_eq!(res, NCPoly::parse(&q, "B1B2").unwrap());
    }
}
