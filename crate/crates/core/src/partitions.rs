//! Torus-fixed-point enumerators. Every series here is an honest count of
//! combinatorial objects; closed-form products live in `qseries`.

use crate::qseries::{QSeries, Ring};
use num_bigint::BigInt;
use num_traits::One;
use std::collections::{BTreeMap, BTreeSet, HashSet};


pub const MAX_PLANE_ORDER: i64 = 14;
pub const MAX_PYRAMID_ORDER: i64 = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: i64, max: i64 },
    #[error("invalid pit ({0}, {1})")]
    BadPit(u32, u32),
    #[error("colors must be at least 1")]
    BadColors,
}

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(pub Vec<u32>);

impl Partition {
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_valid(&self) -> bool {
        self.0.iter().all(|&p| p > 0) && self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Young-diagram containment.
    pub fn contains(&self, other: &Partition) -> bool {
        other.0.len() <= self.0.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }
}

/// All partitions of `n`, each listed once.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

fn series_from_counts(counts: &[u64]) -> QSeries {
    let r = Ring::q();
    let order = counts.len() as i64 - 1;
    let mut s = QSeries::zero(&r, order);
    for (n, &c) in counts.iter().enumerate() {
        s.add_term(vec![n as i64], BigInt::from(c)).unwrap();
    }
    s
}

pub fn partition_series(order: u32) -> QSeries {
    let counts: Vec<u64> = (0..=order).map(|n| partitions_of(n).len() as u64).collect();
    series_from_counts(&counts)
}

/// r-tuples of partitions graded by total size.
pub fn tuple_series(r: u32, order: u32) -> QSeries {
    let p: Vec<u64> = (0..=order).map(|n| partitions_of(n).len() as u64).collect();
    let mut acc = vec![0u64; order as usize + 1];
    acc[0] = 1;
    for _ in 0..r {
        let mut next = vec![0u64; acc.len()];
        for (i, a) in acc.iter().enumerate() {
            for (j, b) in p.iter().enumerate().take(acc.len() - i) {
                next[i + j] += a * b;
            }
        }
        acc = next;
    }
    series_from_counts(&acc)
}

/// Chains λ¹ ⊇ λ² ⊇ … ⊇ λʳ graded by total size.
pub fn nested_series(r: u32, order: u32) -> QSeries {
    let all: Vec<Partition> = (0..=order).flat_map(partitions_of).collect();
    let mut counts = vec![0u64; order as usize + 1];
    fn go(all: &[Partition], outer: &Partition, depth: u32, r: u32, used: u32, order: u32, counts: &mut [u64]) {
        if depth == r {
            counts[used as usize] += 1;
            return;
        }
        for p in all {
            let s = p.size();
            if used + s > order || !outer.contains(p) {
                continue;
            }
            go(all, p, depth + 1, r, used + s, order, counts);
        }
    }
    if r == 0 {
        counts[0] = 1;
    } else {
        for first in &all {
            go(&all, first, 1, r, first.size(), order, &mut counts);
        }
    }
    series_from_counts(&counts)
}

/// Pit constraint: `π_{i,j} = 0` whenever `i > m` and `j > n` (1-indexed).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PitConstraint {
    pub m: u32,
    pub n: u32,
}

impl PitConstraint {
    pub fn new(m: u32, n: u32) -> Result<PitConstraint, PartitionError> {
        if m == 0 && n == 0 {
            return Err(PartitionError::BadPit(m, n));
        }
        Ok(PitConstraint { m, n })
    }

    /// Longest row allowed at 1-indexed row `i`.
    fn row_cap(&self, i: u32) -> Option<u32> {
        if i > self.m { Some(self.n) } else { None }
    }
}

/// Rows of a plane partition; entries are column heights.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct PlanePartition(pub Vec<Vec<u32>>);

impl PlanePartition {
    pub fn size(&self) -> u32 {
        self.0.iter().flatten().sum()
    }

    pub fn is_valid(&self) -> bool {
        let rows_ok = self.0.iter().all(|r| r.windows(2).all(|w| w[0] >= w[1]));
        let cols_ok = self.0.windows(2).all(|w| w[1].len() <= w[0].len() && w[1].iter().zip(&w[0]).all(|(a, b)| a <= b));
        rows_ok && cols_ok
    }

    /// Box counts by color `(i − j) mod m` of the box column.
    pub fn color_weight(&self, m: u32) -> Vec<u32> {
        let mut w = vec![0; m as usize];
        for (i, row) in self.0.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                w[color(i as i64 + 1, j as i64 + 1, m)] += h;
            }
        }
        w
    }
}

fn color(i: i64, j: i64, m: u32) -> usize {
    (i - j).rem_euclid(m as i64) as usize
}

/// Depth-first walk over plane partitions of size ≤ `order`, row by row.
/// Each row is a partition dominated entrywise by the previous row.
pub fn for_each_plane_partition(order: u32, pit: Option<PitConstraint>, mut f: impl FnMut(&PlanePartition)) {
    fn rows_under(bound: &[u32], budget: u32, cap: usize, f: &mut dyn FnMut(&[u32])) {
        fn go(bound: &[u32], j: usize, budget: u32, prev: u32, cap: usize, cur: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
            f(cur);
            if j >= cap || j >= bound.len() {
                return;
            }
            let hi = bound[j].min(prev).min(budget);
            for h in 1..=hi {
                cur.push(h);
                go(bound, j + 1, budget - h, h, cap, cur, f);
                cur.pop();
            }
        }
        go(bound, 0, budget, u32::MAX, cap, &mut Vec::new(), f);
    }
    fn go(pp: &mut PlanePartition, budget: u32, pit: Option<PitConstraint>, f: &mut dyn FnMut(&PlanePartition)) {
        f(pp);
        let i = pp.0.len() as u32 + 1;
        let bound: Vec<u32> = match pp.0.last() {
            Some(r) => r.clone(),
            None => vec![budget; budget as usize],
        };
        let cap = pit.and_then(|p| p.row_cap(i)).map(|c| c as usize).unwrap_or(usize::MAX);
        let mut rows = Vec::new();
        rows_under(&bound, budget, cap, &mut |r| {
            if !r.is_empty() {
                rows.push(r.to_vec());
            }
        });
        for r in rows {
            let s: u32 = r.iter().sum();
            pp.0.push(r);
            go(pp, budget - s, pit, f);
            pp.0.pop();
        }
    }
    go(&mut PlanePartition::default(), order, pit, &mut f);
}

/// Plane partitions of size ≤ `order`. With `colors = Some(m)` the result lives in
/// `q0 .. q{m-1}`, otherwise in `q`.
pub fn plane_partition_series(order: i64, colors: Option<u32>, pit: Option<PitConstraint>) -> Result<QSeries, PartitionError> {
    if order > MAX_PLANE_ORDER {
        return Err(PartitionError::OrderTooLarge { order, max: MAX_PLANE_ORDER });
    }
    if colors == Some(0) {
        return Err(PartitionError::BadColors);
    }
    let order = order.max(0);
    let m = colors.unwrap_or(1);
    let ring = if colors.is_some() { Ring::colored(m as usize) } else { Ring::q() };
    let mut counts: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    for_each_plane_partition(order as u32, pit, |pp| {
        let e = pp.color_weight(m).into_iter().map(i64::from).collect();
        *counts.entry(e).or_default() += 1;
    });
    let mut s = QSeries::zero(&ring, order);
    for (e, c) in counts {
        s.add_term(e, BigInt::from(c)).unwrap();
    }
    Ok(s)
}

/// A stone of the conifold pyramid, named by the Jacobi-algebra normal form of the
/// path reaching it: `layer` letters, `a` of them `A` and `b` of them `B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Stone {
    pub layer: u32,
    pub a: u32,
    pub b: u32,
}

impl Stone {
    pub fn color(&self) -> usize {
        (self.layer % 2) as usize
    }

    /// Stones of one layer. Even layer `2n`: `a, b ∈ [0, n]`; odd `2n+1`: `a ∈ [0, n+1], b ∈ [0, n]`.
    pub fn layer_stones(layer: u32) -> Vec<Stone> {
        let n = layer / 2;
        let amax = if layer % 2 == 1 { n + 1 } else { n };
        let mut v = Vec::new();
        for a in 0..=amax {
            for b in 0..=n {
                v.push(Stone { layer, a, b });
            }
        }
        v
    }

    /// Stones directly above this one; all must be present before it can be removed.
    pub fn supports(&self) -> Vec<Stone> {
        if self.layer == 0 {
            return vec![];
        }
        let n = self.layer / 2;
        let l = self.layer - 1;
        let mut v = Vec::new();
        if self.layer % 2 == 1 {
            if self.a >= 1 {
                v.push(Stone { layer: l, a: self.a - 1, b: self.b });
            }
            if self.a <= n {
                v.push(Stone { layer: l, a: self.a, b: self.b });
            }
        } else {
            if self.b >= 1 {
                v.push(Stone { layer: l, a: self.a, b: self.b - 1 });
            }
            if self.b < n {
                v.push(Stone { layer: l, a: self.a, b: self.b });
            }
        }
        v
    }
}

/// A finite order ideal of stones.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PyramidConfig {
    pub stones: BTreeSet<Stone>,
}

impl PyramidConfig {
    pub fn weight(&self) -> [u32; 2] {
        let mut w = [0, 0];
        for s in &self.stones {
            w[s.color()] += 1;
        }
        w
    }

    pub fn is_ideal(&self) -> bool {
        self.stones.iter().all(|s| s.supports().iter().all(|t| self.stones.contains(t)))
    }
}

/// Visits every pyramid configuration with at most `order` stones. Layers are
/// chosen one at a time: any subset of the stones whose supports lie in the
/// previous layer's choice.
pub fn for_each_pyramid(order: u32, mut f: impl FnMut(&PyramidConfig)) {
    fn go(cfg: &mut PyramidConfig, prev: &BTreeSet<Stone>, layer: u32, budget: u32, f: &mut dyn FnMut(&PyramidConfig)) {
        let cands: Vec<Stone> = Stone::layer_stones(layer).into_iter().filter(|s| s.supports().iter().all(|t| prev.contains(t))).collect();
        // every nonempty subset of cands within budget opens the next layer
        fn subsets(c: &[Stone], i: usize, budget: u32, cur: &mut Vec<Stone>, out: &mut Vec<Vec<Stone>>) {
            if i == c.len() {
                if !cur.is_empty() {
                    out.push(cur.clone());
                }
                return;
            }
            subsets(c, i + 1, budget, cur, out);
            if budget > 0 {
                cur.push(c[i]);
                subsets(c, i + 1, budget - 1, cur, out);
                cur.pop();
            }
        }
        let mut choices = Vec::new();
        subsets(&cands, 0, budget, &mut Vec::new(), &mut choices);
        for ch in choices {
            let set: BTreeSet<Stone> = ch.iter().copied().collect();
            cfg.stones.extend(ch.iter().copied());
            f(cfg);
            go(cfg, &set, layer + 1, budget - ch.len() as u32, f);
            for s in &ch {
                cfg.stones.remove(s);
            }
        }
    }
    let mut cfg = PyramidConfig::default();
    f(&cfg);
    if order > 0 {
        let top: BTreeSet<Stone> = BTreeSet::new();
        go(&mut cfg, &top, 0, order, &mut f);
    }
}

/// Pyramid partitions weighted by `q0^{#color 0} q1^{#color 1}`, total degree ≤ `order`.
pub fn pyramid_series(order: i64) -> Result<QSeries, PartitionError> {
    if order > MAX_PYRAMID_ORDER {
        return Err(PartitionError::OrderTooLarge { order, max: MAX_PYRAMID_ORDER });
    }
    let order = order.max(0);
    let mut counts: BTreeMap<[u32; 2], u64> = BTreeMap::new();
    for_each_pyramid(order as u32, |c| *counts.entry(c.weight()).or_default() += 1);
    let mut s = QSeries::zero(&Ring::colored(2), order);
    for (w, c) in counts {
        s.add_term(vec![w[0] as i64, w[1] as i64], BigInt::from(c)).unwrap();
    }
    Ok(s)
}

/// `Σ_k q^{k²/2} Σ_{λ₀,λ₁} q^{|λ₀|+|λ₁|}` in the doubled variable `q½`.
/// `order` is in whole powers of `q`; `k_range` optionally caps `|k|`.
pub fn blowup_series(order: u32, k_range: Option<u32>) -> QSeries {
    let ring = Ring::half_q();
    let half_order = 2 * order as i64;
    let pairs = tuple_series(2, order).univariate();
    let mut s = QSeries::zero(&ring, half_order);
    let kmax = (half_order as f64).sqrt() as i64 + 1;
    for k in -kmax..=kmax {
        if k_range.is_some_and(|r| k.unsigned_abs() > r as u64) || k * k > half_order {
            continue;
        }
        for (n, c) in pairs.iter().enumerate() {
            s.add_term(vec![k * k + 2 * n as i64], c.clone()).unwrap();
        }
    }
    s
}

/// Independent reference enumerators over explicit box sets, used to cross-check
/// the fast walkers above.
pub mod naive {
    use super::*;

    type Box3 = (u32, u32, u32);

    /// Plane partitions as order ideals in ℕ³, grown one box at a time with dedupe.
    pub fn plane_partitions(order: u32, colors: u32, pit: Option<PitConstraint>) -> BTreeMap<Vec<i64>, u64> {
        let allowed = |b: &Box3| match pit {
            Some(p) => !(b.0 + 1 > p.m && b.1 + 1 > p.n),
            None => true,
        };
        let mut out = BTreeMap::new();
        let mut layer: HashSet<BTreeSet<Box3>> = HashSet::new();
        layer.insert(BTreeSet::new());
        for _ in 0..=order {
            let mut next = HashSet::new();
            for s in &layer {
                let mut w = vec![0i64; colors as usize];
                for b in s {
                    w[color(b.0 as i64 + 1, b.1 as i64 + 1, colors)] += 1;
                }
                *out.entry(w).or_insert(0) += 1;
                let mut cands: BTreeSet<Box3> = BTreeSet::new();
                cands.insert((0, 0, 0));
                for b in s {
                    cands.insert((b.0 + 1, b.1, b.2));
                    cands.insert((b.0, b.1 + 1, b.2));
                    cands.insert((b.0, b.1, b.2 + 1));
                }
                for c in cands {
                    if s.contains(&c) || !allowed(&c) {
                        continue;
                    }
                    let ok = (c.0 == 0 || s.contains(&(c.0 - 1, c.1, c.2)))
                        && (c.1 == 0 || s.contains(&(c.0, c.1 - 1, c.2)))
                        && (c.2 == 0 || s.contains(&(c.0, c.1, c.2 - 1)));
                    if ok {
                        let mut t = s.clone();
                        t.insert(c);
                        next.insert(t);
                    }
                }
            }
            layer = next;
        }
        out
    }

    /// Pyramid ideals grown stone by stone. Stones are explicit alternating words,
    /// odd positions over `{A,C}` and even positions over `{B,D}`, identified when
    /// they use the same letters. Supports come from deleting the last letter of
    /// every rearrangement of the word.
    pub fn pyramids(order: u32) -> BTreeMap<[u32; 2], u64> {
        type Key = (usize, usize, usize);
        fn key(w: &[u8]) -> Key {
            (w.len(), w.iter().filter(|&&c| c == b'A').count(), w.iter().filter(|&&c| c == b'B').count())
        }
        fn perms(letters: &[u8]) -> BTreeSet<Vec<u8>> {
            if letters.is_empty() {
                return BTreeSet::from([vec![]]);
            }
            let mut out = BTreeSet::new();
            for i in 0..letters.len() {
                let mut rest = letters.to_vec();
                let c = rest.remove(i);
                for mut p in perms(&rest) {
                    p.insert(0, c);
                    out.insert(p);
                }
            }
            out
        }
        fn predecessors(w: &[u8]) -> BTreeSet<Key> {
            let odd: Vec<u8> = w.iter().step_by(2).copied().collect();
            let even: Vec<u8> = w.iter().skip(1).step_by(2).copied().collect();
            let mut out = BTreeSet::new();
            for o in perms(&odd) {
                for e in perms(&even) {
                    let mut v: Vec<u8> = Vec::new();
                    for i in 0..w.len() {
                        v.push(if i % 2 == 0 { o[i / 2] } else { e[i / 2] });
                    }
                    v.pop();
                    out.insert(key(&v));
                }
            }
            out
        }
        let mut out = BTreeMap::new();
        let mut layer: BTreeMap<Vec<Key>, BTreeMap<Key, Vec<u8>>> = BTreeMap::new();
        layer.insert(vec![], BTreeMap::new());
        for _ in 0..=order {
            let mut next: BTreeMap<Vec<Key>, BTreeMap<Key, Vec<u8>>> = BTreeMap::new();
            for cfg in layer.values() {
                let mut w = [0u32; 2];
                for k in cfg.keys() {
                    w[k.0 % 2] += 1;
                }
                *out.entry(w).or_insert(0) += 1;
                let mut cands: Vec<Vec<u8>> = vec![vec![]];
                for word in cfg.values() {
                    let letters: [u8; 2] = if word.len() % 2 == 0 { *b"AC" } else { *b"BD" };
                    for l in letters {
                        let mut v = word.clone();
                        v.push(l);
                        cands.push(v);
                    }
                }
                for c in cands {
                    let k = key(&c);
                    if cfg.contains_key(&k) || (!c.is_empty() && !predecessors(&c).iter().all(|p| cfg.contains_key(p))) {
                        continue;
                    }
                    let mut t = cfg.clone();
                    t.insert(k, c);
                    next.entry(t.keys().copied().collect()).or_insert(t);
                }
            }
            layer = next;
        }
        out
    }
}

pub fn naive_series(counts: &BTreeMap<Vec<i64>, u64>, ring: &Ring, order: i64) -> QSeries {
    let mut s = QSeries::zero(ring, order);
    for (e, c) in counts {
        s.add_term(e.clone(), BigInt::from(*c) * BigInt::one()).unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qseries::compare;
    use crate::qseries::Comparison;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn partition_counts() {
        assert_eq!(partition_series(6).univariate(), ints(&[1, 1, 2, 3, 5, 7, 11]));
        assert!(partitions_of(7).iter().all(|p| p.is_valid() && p.size() == 7));
    }

    #[test]
    fn tuples_and_nested() {
        assert_eq!(tuple_series(2, 3).univariate(), ints(&[1, 2, 5, 10]));
        assert_eq!(nested_series(2, 2).coeff(&[2]), BigInt::from(3));
        assert_eq!(nested_series(1, 6), partition_series(6));
    }

    #[test]
    fn plane_partition_counts() {
        let s = plane_partition_series(6, None, None).unwrap();
        assert_eq!(s.univariate(), ints(&[1, 1, 3, 6, 13, 24, 48]));
        assert!(matches!(plane_partition_series(15, None, None), Err(PartitionError::OrderTooLarge { .. })));
    }

    #[test]
    fn walker_yields_valid_plane_partitions() {
        let mut seen = HashSet::new();
        for_each_plane_partition(6, None, |pp| {
            assert!(pp.is_valid());
            assert!(seen.insert(pp.clone()));
        });
        assert_eq!(seen.len(), 1 + 1 + 3 + 6 + 13 + 24 + 48);
    }

    #[test]
    fn pit_rows_equal_nested() {
        for r in 1..=3 {
            let pit = plane_partition_series(8, None, Some(PitConstraint::new(r, 0).unwrap())).unwrap();
            assert_eq!(pit, nested_series(r, 8), "r = {r}");
        }
    }

    #[test]
    fn large_pit_is_unconstrained() {
        let a = plane_partition_series(7, None, Some(PitConstraint::new(8, 8).unwrap())).unwrap();
        assert_eq!(a, plane_partition_series(7, None, None).unwrap());
    }

    #[test]
    fn naive_plane_partitions_agree() {
        for (colors, pit) in [(1, None), (2, None), (3, None), (1, Some(PitConstraint { m: 1, n: 1 })), (2, Some(PitConstraint { m: 2, n: 0 }))] {
            let fast = plane_partition_series(7, if colors > 1 { Some(colors) } else { None }, pit).unwrap();
            let ring = fast.ring().clone();
            let slow = naive_series(&naive::plane_partitions(7, colors, pit), &ring, 7);
            assert_eq!(compare(&fast, &slow, 7).unwrap(), Comparison::Equal, "colors {colors} pit {pit:?}");
        }
    }

    #[test]
    fn colored_collapses_to_uncolored() {
        let c = plane_partition_series(8, Some(2), None).unwrap();
        let mut total = vec![BigInt::from(0); 9];
        for (e, v) in c.terms() {
            total[(e[0] + e[1]) as usize] += v;
        }
        assert_eq!(total, plane_partition_series(8, None, None).unwrap().univariate());
    }

    #[test]
    fn pyramid_low_order() {
        let p = pyramid_series(3).unwrap();
        assert_eq!(p.coeff(&[0, 0]), BigInt::one());
        assert_eq!(p.coeff(&[1, 0]), BigInt::one());
        assert_eq!(p.coeff(&[1, 1]), BigInt::from(2));
        assert_eq!(p.coeff(&[1, 2]), BigInt::one());
        assert_eq!(p.coeff(&[2, 1]), BigInt::from(4));
        assert_eq!(p.coeff(&[0, 1]), BigInt::from(0));
        let mut singles = 0;
        for_each_pyramid(1, |c| {
            assert!(c.is_ideal());
            if c.stones.len() == 1 {
                singles += 1;
                assert_eq!(c.weight(), [1, 0]);
            }
        });
        assert_eq!(singles, 1);
    }

    #[test]
    fn pyramid_layer_sizes() {
        let sizes: Vec<usize> = (0..6).map(|l| Stone::layer_stones(l).len()).collect();
        assert_eq!(sizes, vec![1, 2, 4, 6, 9, 12]);
    }

    #[test]
    fn naive_pyramids_agree() {
        let fast = pyramid_series(8).unwrap();
        let slow: BTreeMap<Vec<i64>, u64> = naive::pyramids(8).into_iter().map(|(w, c)| (vec![w[0] as i64, w[1] as i64], c)).collect();
        assert_eq!(compare(&fast, &naive_series(&slow, &Ring::colored(2), 8), 8).unwrap(), Comparison::Equal);
    }

    #[test]
    fn pyramid_q1_zero_is_top_chain() {
        // with no color-1 stones only the top stone can be removed
        let p = pyramid_series(6).unwrap();
        let col0: Vec<i64> = (0..=6).map(|a| i64::try_from(p.coeff(&[a, 0])).unwrap()).collect();
        assert_eq!(col0, vec![1, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn blowup_low_order() {
        let b = blowup_series(4, None);
        assert_eq!(b.coeff(&[0]), BigInt::one());
        assert_eq!(b.coeff(&[1]), BigInt::from(2));
        assert_eq!(blowup_series(0, None).univariate(), ints(&[1, 2, 0]).into_iter().take(1).collect::<Vec<_>>());
        assert_eq!(blowup_series(4, Some(0)).coeff(&[1]), BigInt::from(0));
    }
}
