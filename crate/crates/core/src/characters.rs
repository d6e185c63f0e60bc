//! Vacuum characters of W-algebras from shift matrices, via right-aligned pyramids
//! and the row-pair rule for generator weights.

use crate::catalog::ShiftMatrix;
use crate::qseries::{binomial_factor, compare, Comparison, QSeries, Ring};
use crate::BigInt;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn xor(self, o: Parity) -> Parity {
        if self == o {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub parity: Parity,
    pub left: i64,
    pub len: u32,
}

impl Row {
    pub fn right(&self) -> i64 {
        self.left + self.len as i64 - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pyramid {
    pub rows: Vec<Row>,
}

impl Pyramid {
    /// Mirror image under column negation.
    pub fn reflect(&self) -> Pyramid {
        Pyramid { rows: self.rows.iter().map(|r| Row { parity: r.parity, left: -r.right(), len: r.len }).collect() }
    }
}

impl fmt::Display for Pyramid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let min = self.rows.iter().map(|r| r.left).min().unwrap_or(0);
        for r in self.rows.iter().rev() {
            let pad = "   ".repeat((r.left - min) as usize);
            let mark = if r.parity == Parity::Even { "[ ]" } else { "[*]" };
            writeln!(f, "{pad}{}", mark.repeat(r.len as usize))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CharacterError {
    #[error("row pair ({i},{j}) yields non-positive weight {w}")]
    NonPositiveWeight { i: usize, j: usize, w: i64 },
    #[error("t must be at least 1")]
    BadT,
    #[error("pyramid row {0} has length 0")]
    EmptyRow(usize),
}

/// Conformal weight and parity of strong generators, with multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightMultiset(pub BTreeMap<(u32, Parity), u32>);

impl WeightMultiset {
    pub fn add(&mut self, w: u32, p: Parity, k: u32) {
        if k > 0 {
            *self.0.entry((w, p)).or_insert(0) += k;
        }
    }

    pub fn union(&self, o: &WeightMultiset) -> WeightMultiset {
        let mut s = self.clone();
        for (&(w, p), &k) in &o.0 {
            s.add(w, p, k);
        }
        s
    }

    pub fn count(&self) -> u32 {
        self.0.values().sum()
    }
}

impl fmt::Display for WeightMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(&(w, p), &k)| format!("{w}{}:x{k}", if p == Parity::Odd { "'" } else { "" })).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `m` even rows then `n` odd rows with lengths `t + Σ_{k≥i} s_{k+1,k}`, right-aligned.
pub fn pyramid_from_shift(s: &ShiftMatrix, t: u32) -> Result<Pyramid, CharacterError> {
    if t == 0 {
        return Err(CharacterError::BadT);
    }
    let size = s.size();
    let lens: Vec<u32> = (0..size).map(|i| t + s.sub[i..].iter().sum::<u64>() as u32).collect();
    let right = *lens.iter().max().unwrap_or(&0) as i64;
    let rows = lens
        .iter()
        .enumerate()
        .map(|(i, &len)| Row { parity: if i < s.m { Parity::Even } else { Parity::Odd }, left: right - len as i64 + 1, len })
        .collect();
    Ok(Pyramid { rows })
}

/// Row-pair rule: each ordered pair `(i, j)` contributes `r_j − l_i − t + 2` for `t = 1..min(ℓ_i, ℓ_j)`.
pub fn generator_weights(p: &Pyramid) -> Result<WeightMultiset, CharacterError> {
    let mut ws = WeightMultiset::default();
    for (i, a) in p.rows.iter().enumerate() {
        if a.len == 0 {
            return Err(CharacterError::EmptyRow(i));
        }
    }
    for (i, a) in p.rows.iter().enumerate() {
        for (j, b) in p.rows.iter().enumerate() {
            for t in 1..=a.len.min(b.len) as i64 {
                let w = b.right() - a.left - t + 2;
                if w <= 0 {
                    return Err(CharacterError::NonPositiveWeight { i, j, w });
                }
                ws.add(w as u32, a.parity.xor(b.parity), 1);
            }
        }
    }
    Ok(ws)
}

/// `∏ (1 − q^n)^{−a_n} (1 + q^n)^{b_n}` from per-degree exponents.
fn product_from_exponents(even: &BTreeMap<i64, i64>, odd: &BTreeMap<i64, i64>, order: i64) -> QSeries {
    let ring = Ring::q();
    let mut s = QSeries::one(&ring, order);
    for (&n, &a) in even {
        if n <= order && a != 0 {
            s = s.mul(&binomial_factor(&ring, -1, &[n], -a, order).unwrap()).unwrap();
        }
    }
    for (&n, &b) in odd {
        if n <= order && b != 0 {
            s = s.mul(&binomial_factor(&ring, 1, &[n], b, order).unwrap()).unwrap();
        }
    }
    s
}

/// Each even generator of weight `w` contributes `∏_{k≥0} (1 − q^{w+k})^{−1}`, each odd one `∏_{k≥0} (1 + q^{w+k})`.
pub fn character(ws: &WeightMultiset, order: i64) -> QSeries {
    let (mut even, mut odd) = (BTreeMap::new(), BTreeMap::new());
    for (&(w, p), &k) in &ws.0 {
        let tgt = if p == Parity::Even { &mut even } else { &mut odd };
        for n in w as i64..=order {
            *tgt.entry(n).or_insert(0) += k as i64;
        }
    }
    product_from_exponents(&even, &odd, order)
}

pub fn character_of_shift(s: &ShiftMatrix, t: u32, order: i64) -> Result<QSeries, CharacterError> {
    Ok(character(&generator_weights(&pyramid_from_shift(s, t)?)?, order))
}

/// Large-`t` limit: a row pair whose cumulative shifts differ by `d ≥ 0` contributes
/// `∏_{n>d} (1 ∓ q^n)^{∓(n−d)}`; pairs with the shorter row first contribute a full MacMahon factor.
pub fn limit_series(s: &ShiftMatrix, order: i64) -> QSeries {
    let size = s.size();
    let c: Vec<i64> = (0..size).map(|i| s.sub[i..].iter().sum::<u64>() as i64).collect();
    let (mut even, mut odd) = (BTreeMap::new(), BTreeMap::new());
    for i in 0..size {
        for j in 0..size {
            let d = (c[i] - c[j]).max(0);
            let odd_pair = (i < s.m) != (j < s.m);
            let tgt = if odd_pair { &mut odd } else { &mut even };
            for n in d + 1..=order {
                *tgt.entry(n).or_insert(0) += n - d;
            }
        }
    }
    product_from_exponents(&even, &odd, order)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitReport {
    pub order: i64,
    pub t_max: u32,
    /// First differing power and the two coefficients.
    pub first_mismatch: Option<(i64, BigInt, BigInt)>,
}

pub fn limit_check(s: &ShiftMatrix, order: i64, t_max: u32) -> Result<LimitReport, CharacterError> {
    let at = character_of_shift(s, t_max, order)?;
    let lim = limit_series(s, order);
    let first_mismatch = match compare(&at, &lim, order).unwrap() {
        Comparison::Equal => None,
        Comparison::Mismatch { exp, left, right } => Some((exp[0], left, right)),
    };
    Ok(LimitReport { order, t_max, first_mismatch })
}

/// Mixed super shifts rely on an unverified ordering of even and odd rows.
pub fn warnings(s: &ShiftMatrix) -> Vec<String> {
    if s.m > 0 && s.n > 0 && s.sub.iter().any(|&x| x != 0) {
        vec![format!("gl({}|{}) with nonzero shift: even/odd row ordering is unverified for non-rectangular pyramids", s.m, s.n)]
    } else {
        vec![]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::divisor_to_shift_matrix;
    use crate::partitions::nested_series;
    use crate::qseries::eta_like;

    fn shift(m: usize, n: usize, sub: &[u64]) -> ShiftMatrix {
        ShiftMatrix::new(m, n, sub.to_vec()).unwrap()
    }

    fn ws(items: &[(u32, Parity, u32)]) -> WeightMultiset {
        let mut w = WeightMultiset::default();
        for &(a, p, k) in items {
            w.add(a, p, k);
        }
        w
    }

    fn coeffs(s: &QSeries) -> Vec<i64> {
        s.univariate().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    /// Independent expansion by counting multisets of generator modes.
    fn brute_character(w: &WeightMultiset, order: usize) -> Vec<i64> {
        let mut c = vec![0i64; order + 1];
        c[0] = 1;
        for (&(wt, p), &k) in &w.0 {
            for _ in 0..k {
                for mode in wt as usize..=order {
                    match p {
                        Parity::Even => {
                            for n in mode..=order {
                                c[n] += c[n - mode];
                            }
                        }
                        Parity::Odd => {
                            for n in (mode..=order).rev() {
                                c[n] += c[n - mode];
                            }
                        }
                    }
                }
            }
        }
        c
    }

    #[test]
    fn pyramid_shapes_by_family() {
        let r = 4;
        let p = pyramid_from_shift(&shift(2, 0, &[0]), r).unwrap();
        assert_eq!(p.rows.iter().map(|x| (x.len, x.left)).collect::<Vec<_>>(), vec![(4, 1), (4, 1)]);
        let p = pyramid_from_shift(&shift(2, 0, &[1]), r - 1).unwrap();
        assert_eq!(p.rows.iter().map(|x| (x.len, x.left)).collect::<Vec<_>>(), vec![(4, 1), (3, 2)]);
        let p = pyramid_from_shift(&shift(2, 0, &[2]), r - 1).unwrap();
        assert_eq!(p.rows.iter().map(|x| (x.len, x.left)).collect::<Vec<_>>(), vec![(5, 1), (3, 3)]);
        assert!(p.rows.iter().all(|x| x.right() == 5));
        assert_eq!(pyramid_from_shift(&shift(1, 0, &[]), 0), Err(CharacterError::BadT));
    }

    #[test]
    fn row_pair_rule_examples() {
        let single = generator_weights(&pyramid_from_shift(&shift(1, 0, &[]), 5).unwrap()).unwrap();
        assert_eq!(single, ws(&[(1, Parity::Even, 1), (2, Parity::Even, 1), (3, Parity::Even, 1), (4, Parity::Even, 1), (5, Parity::Even, 1)]));
        let bp = generator_weights(&pyramid_from_shift(&shift(2, 0, &[1]), 1).unwrap()).unwrap();
        assert_eq!(bp, ws(&[(1, Parity::Even, 3), (2, Parity::Even, 2)]));
        let sup = generator_weights(&pyramid_from_shift(&shift(1, 1, &[0]), 3).unwrap()).unwrap();
        let mut want = WeightMultiset::default();
        for w in 1..=3 {
            want.add(w, Parity::Even, 2);
            want.add(w, Parity::Odd, 2);
        }
        assert_eq!(sup, want);
        for m in 1..5 {
            let g = generator_weights(&pyramid_from_shift(&ShiftMatrix::zero(m, 0), 1).unwrap()).unwrap();
            assert_eq!(g, ws(&[(1, Parity::Even, (m * m) as u32)]));
        }
    }

    #[test]
    fn non_positive_weight_is_reported() {
        let p = Pyramid { rows: vec![Row { parity: Parity::Even, left: 5, len: 2 }, Row { parity: Parity::Even, left: 0, len: 2 }] };
        assert!(matches!(generator_weights(&p), Err(CharacterError::NonPositiveWeight { .. })));
    }

    #[test]
    fn character_examples() {
        let c = character(&ws(&[(1, Parity::Even, 1)]), 6);
        assert_eq!(coeffs(&c), vec![1, 1, 2, 3, 5, 7, 11]);
        let c = character(&ws(&[(1, Parity::Even, 4)]), 8);
        let want = eta_like(&Ring::q(), &[1], 1, -1, -4, 8).unwrap();
        assert_eq!(c, want);
        let c = character(&ws(&[(1, Parity::Even, 2), (1, Parity::Odd, 2)]), 8);
        let want = eta_like(&Ring::q(), &[1], 1, 1, 2, 8).unwrap().mul(&eta_like(&Ring::q(), &[1], 1, -1, -2, 8).unwrap()).unwrap();
        assert_eq!(c, want);
    }

    #[test]
    fn character_matches_mode_counting() {
        let cases = [
            ws(&[(1, Parity::Even, 3), (2, Parity::Even, 2)]),
            ws(&[(1, Parity::Odd, 2), (2, Parity::Even, 1), (3, Parity::Odd, 1)]),
            generator_weights(&pyramid_from_shift(&shift(3, 1, &[1, 0, 2]), 2).unwrap()).unwrap(),
        ];
        for w in cases {
            assert_eq!(coeffs(&character(&w, 15)), brute_character(&w, 15), "{w}");
        }
    }

    #[test]
    fn bershadsky_polyakov_coefficients() {
        let c = character_of_shift(&shift(2, 0, &[1]), 1, 4).unwrap();
        assert_eq!(coeffs(&c), brute_character(&ws(&[(1, Parity::Even, 3), (2, Parity::Even, 2)]), 4));
        assert_eq!(coeffs(&c), vec![1, 3, 11, 30, 80]);
    }

    #[test]
    fn reflection_invariance() {
        for sub in [vec![0u64, 0], vec![1, 0], vec![0, 2], vec![3, 1]] {
            for (m, n) in [(3, 0), (2, 1), (1, 2)] {
                let p = pyramid_from_shift(&shift(m, n, &sub), 2).unwrap();
                assert_eq!(generator_weights(&p).unwrap(), generator_weights(&p.reflect()).unwrap());
            }
        }
    }

    #[test]
    fn union_is_product() {
        let a = ws(&[(1, Parity::Even, 2), (3, Parity::Odd, 1)]);
        let b = ws(&[(2, Parity::Even, 1), (1, Parity::Odd, 1)]);
        assert_eq!(character(&a.union(&b), 12), character(&a, 12).mul(&character(&b, 12)).unwrap());
    }

    #[test]
    fn principal_character_is_nested_partitions() {
        for r in 1..=4 {
            let c = character_of_shift(&shift(1, 0, &[]), r, 10).unwrap();
            assert_eq!(c, nested_series(r, 10));
        }
    }

    #[test]
    fn limits_stabilize() {
        for s in [shift(2, 0, &[0]), shift(2, 0, &[1]), shift(2, 0, &[2]), shift(1, 1, &[0]), shift(3, 0, &[1, 2])] {
            let r = limit_check(&s, 10, 20).unwrap();
            assert_eq!(r.first_mismatch, None, "{s:?}");
        }
        let r = limit_check(&shift(2, 0, &[0]), 10, 3).unwrap();
        assert!(r.first_mismatch.is_some());
    }

    #[test]
    fn divisor_route_and_warnings() {
        let s = divisor_to_shift_matrix(2, 1, &[3, 1], &[1]).unwrap();
        assert_eq!(s.sub, vec![2, 0]);
        assert_eq!(warnings(&s).len(), 1);
        assert!(warnings(&shift(1, 1, &[0])).is_empty());
    }
}
