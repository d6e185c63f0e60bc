//! Truncated multivariate power series with big-integer coefficients.
//!
//! Truncation is by a grading vector: a term is kept when `grading · exp ≤ order`.
//! Exponents may be negative in directions of grading zero, which is how
//! Laurent variables such as `x⁻¹` live next to `q`.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ring {
    pub vars: Vec<String>,
    pub grading: Vec<i64>,
    /// Variables whose stored exponents count half powers (`q½`).
    pub half: Vec<bool>,
}

impl Ring {
    pub fn new(vars: &[&str], grading: &[i64]) -> Ring {
        assert_eq!(vars.len(), grading.len());
        Ring { vars: vars.iter().map(|s| s.to_string()).collect(), grading: grading.to_vec(), half: vec![false; vars.len()] }
    }

    pub fn q() -> Ring {
        Ring::new(&["q"], &[1])
    }

    /// One variable `q` stored in half-integer steps.
    pub fn half_q() -> Ring {
        Ring { vars: vec!["q".into()], grading: vec![1], half: vec![true] }
    }

    /// `q0 .. q{m-1}`, all of degree one.
    pub fn colored(m: usize) -> Ring {
        let names: Vec<String> = (0..m).map(|i| format!("q{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        Ring::new(&refs, &vec![1; m])
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn degree(&self, e: &[i64]) -> i64 {
        e.iter().zip(&self.grading).map(|(a, g)| a * g).sum()
    }

    pub fn var(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("series live in different rings")]
    RingMismatch,
    #[error("constant part is not ±1")]
    NonUnitConstantTerm,
    #[error("term {0:?} leaves the truncation cone")]
    ConeViolation(Vec<i64>),
    #[error("bad series json: {0}")]
    Json(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    ring: Ring,
    order: i64,
    coeffs: BTreeMap<Vec<i64>, BigInt>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    Mismatch { exp: Vec<i64>, left: BigInt, right: BigInt },
}

impl QSeries {
    pub fn zero(ring: &Ring, order: i64) -> QSeries {
        QSeries { ring: ring.clone(), order, coeffs: BTreeMap::new() }
    }

    pub fn one(ring: &Ring, order: i64) -> QSeries {
        Self::monomial(ring, &vec![0; ring.nvars()], BigInt::one(), order).unwrap()
    }

    pub fn monomial(ring: &Ring, exp: &[i64], c: BigInt, order: i64) -> Result<QSeries, SeriesError> {
        let mut s = Self::zero(ring, order);
        s.add_term(exp.to_vec(), c)?;
        Ok(s)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    pub fn coeff(&self, exp: &[i64]) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Adds `c·x^exp`; terms above the truncation are dropped silently.
    pub fn add_term(&mut self, exp: Vec<i64>, c: BigInt) -> Result<(), SeriesError> {
        let d = self.ring.degree(&exp);
        if d < 0 {
            return Err(SeriesError::ConeViolation(exp));
        }
        if d > self.order || c.is_zero() {
            return Ok(());
        }
        let e = self.coeffs.entry(exp.clone()).or_default();
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&exp);
        }
        Ok(())
    }

    /// Dense coefficients of a one-variable series, `[c_0, .., c_order]` in stored units.
    pub fn univariate(&self) -> Vec<BigInt> {
        assert_eq!(self.ring.nvars(), 1);
        let n = (self.order.max(-1) + 1) as usize;
        let mut v = vec![BigInt::zero(); n];
        for (e, c) in &self.coeffs {
            if e[0] >= 0 && (e[0] as usize) < n {
                v[e[0] as usize] = c.clone();
            }
        }
        v
    }

    pub fn with_order(&self, order: i64) -> QSeries {
        let order = order.min(self.order);
        QSeries {
            ring: self.ring.clone(),
            order,
            coeffs: self.coeffs.iter().filter(|(e, _)| self.ring.degree(e) <= order).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    fn check(&self, o: &QSeries) -> Result<(), SeriesError> {
        if self.ring != o.ring {
            return Err(SeriesError::RingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, o: &QSeries) -> Result<QSeries, SeriesError> {
        self.check(o)?;
        let mut s = self.with_order(o.order);
        for (e, c) in &o.coeffs {
            s.add_term(e.clone(), c.clone())?;
        }
        Ok(s)
    }

    pub fn neg(&self) -> QSeries {
        QSeries { ring: self.ring.clone(), order: self.order, coeffs: self.coeffs.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn sub(&self, o: &QSeries) -> Result<QSeries, SeriesError> {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &QSeries) -> Result<QSeries, SeriesError> {
        self.check(o)?;
        let order = self.order.min(o.order);
        let mut out = Self::zero(&self.ring, order);
        let a: Vec<(&Vec<i64>, &BigInt, i64)> = self.coeffs.iter().map(|(e, c)| (e, c, self.ring.degree(e))).collect();
        let b: Vec<(&Vec<i64>, &BigInt, i64)> = o.coeffs.iter().map(|(e, c)| (e, c, self.ring.degree(e))).collect();
        for (ea, ca, da) in &a {
            for (eb, cb, db) in &b {
                if da + db > order {
                    continue;
                }
                let e: Vec<i64> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                let t = out.coeffs.entry(e).or_default();
                *t += *ca * *cb;
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    fn unit_constant(&self) -> Result<BigInt, SeriesError> {
        let zero = vec![0; self.ring.nvars()];
        for (e, c) in &self.coeffs {
            if self.ring.degree(e) == 0 && *e != zero {
                return Err(SeriesError::NonUnitConstantTerm);
            }
            let _ = c;
        }
        let c0 = self.coeff(&zero);
        if c0.abs() != BigInt::one() {
            return Err(SeriesError::NonUnitConstantTerm);
        }
        Ok(c0)
    }

    /// Reciprocal by Newton iteration `b ← b(2 − ab)`, doubling precision each step.
    pub fn inverse(&self) -> Result<QSeries, SeriesError> {
        let c0 = self.unit_constant()?;
        let two = Self::monomial(&self.ring, &vec![0; self.ring.nvars()], BigInt::from(2), self.order)?;
        let mut b = Self::monomial(&self.ring, &vec![0; self.ring.nvars()], c0, 0)?;
        let mut prec = 0;
        while prec < self.order {
            prec = (2 * prec + 1).min(self.order);
            let a = self.with_order(prec);
            let b_hi = QSeries { order: prec, ..b.clone() };
            let ab = a.mul(&b_hi)?;
            b = b_hi.mul(&two.with_order(prec).sub(&ab)?)?;
        }
        Ok(QSeries { order: self.order, ..b })
    }

    pub fn pow(&self, k: i64) -> Result<QSeries, SeriesError> {
        if k < 0 {
            return self.inverse()?.pow(-k);
        }
        let mut result = Self::one(&self.ring, self.order);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(result)
    }

    /// Applies the ring homomorphism `var_i ↦ sign_i · y^{image_i}`.
    /// Requires that no term drops in degree, so the truncation order carries over.
    pub fn substitute(&self, s: &Substitution) -> Result<QSeries, SeriesError> {
        assert_eq!(s.images.len(), self.ring.nvars(), "substitution arity");
        let mut out = Self::zero(&s.target, self.order);
        for (e, c) in &self.coeffs {
            let mut te = vec![0i64; s.target.nvars()];
            let mut neg = false;
            for (i, &k) in e.iter().enumerate() {
                let (sign, img) = &s.images[i];
                if *sign < 0 && k.rem_euclid(2) == 1 {
                    neg = !neg;
                }
                for (t, x) in te.iter_mut().zip(img) {
                    *t += k * x;
                }
            }
            if s.target.degree(&te) < self.ring.degree(e) {
                return Err(SeriesError::ConeViolation(e.clone()));
            }
            out.add_term(te, if neg { -c } else { c.clone() })?;
        }
        Ok(out)
    }

    /// Multiplies each coefficient by −1 where `odd(exp)` holds.
    pub fn twist(&self, odd: impl Fn(&[i64]) -> bool) -> QSeries {
        QSeries {
            ring: self.ring.clone(),
            order: self.order,
            coeffs: self.coeffs.iter().map(|(e, c)| (e.clone(), if odd(e) { -c } else { c.clone() })).collect(),
        }
    }

    /// Terms sorted by (degree, exponent).
    pub fn sorted_terms(&self) -> Vec<(&Vec<i64>, &BigInt)> {
        let mut v: Vec<_> = self.coeffs.iter().collect();
        v.sort_by_key(|(e, _)| (self.ring.degree(e), (*e).clone()));
        v
    }

    pub fn to_json(&self) -> SeriesJson {
        SeriesJson {
            vars: self.ring.vars.iter().zip(&self.ring.half).map(|(v, h)| if *h { format!("{v}^(1/2)") } else { v.clone() }).collect(),
            order: self.order,
            grading: self.ring.grading.clone(),
            coeffs: self.sorted_terms().into_iter().map(|(e, c)| CoeffJson { exp: e.clone(), c: c.to_string() }).collect(),
        }
    }

    pub fn from_json(j: &SeriesJson) -> Result<QSeries, SeriesError> {
        let mut ring = Ring { vars: vec![], grading: j.grading.clone(), half: vec![] };
        for v in &j.vars {
            match v.strip_suffix("^(1/2)") {
                Some(b) => {
                    ring.vars.push(b.to_string());
                    ring.half.push(true);
                }
                None => {
                    ring.vars.push(v.clone());
                    ring.half.push(false);
                }
            }
        }
        if ring.vars.len() != ring.grading.len() {
            return Err(SeriesError::Json("vars and grading differ in length".into()));
        }
        let mut s = QSeries::zero(&ring, j.order);
        for t in &j.coeffs {
            if t.exp.len() != ring.nvars() {
                return Err(SeriesError::Json(format!("exponent {:?} has wrong arity", t.exp)));
            }
            let c: BigInt = t.c.parse().map_err(|_| SeriesError::Json(format!("bad coefficient {}", t.c)))?;
            s.add_term(t.exp.clone(), c)?;
        }
        Ok(s)
    }

    fn render_mono(&self, e: &[i64]) -> String {
        let mut parts = Vec::new();
        for (i, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let v = &self.ring.vars[i];
            let p = if self.ring.half[i] {
                if k % 2 == 0 { format!("{}", k / 2) } else { format!("{k}/2") }
            } else {
                k.to_string()
            };
            parts.push(if p == "1" { v.clone() } else { format!("{v}^{p}") });
        }
        if parts.is_empty() { "1".into() } else { parts.join(" ") }
    }

    /// Aligned two-column text table, one term per line.
    pub fn table(&self) -> String {
        let rows: Vec<(String, String)> = self.sorted_terms().into_iter().map(|(e, c)| (self.render_mono(e), c.to_string())).collect();
        let w = rows.iter().map(|r| r.0.len()).max().unwrap_or(0).max(8);
        let mut s = String::new();
        let _ = writeln!(s, "{:<w$}  coefficient", "monomial");
        for (m, c) in rows {
            let _ = writeln!(s, "{m:<w$}  {c}");
        }
        s
    }
}

impl std::fmt::Display for QSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (e, c) in self.sorted_terms() {
            let m = self.render_mono(e);
            let (neg, a) = (c.is_negative(), c.abs());
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            match (a.is_one(), m == "1") {
                (true, false) => write!(f, "{m}")?,
                (_, true) => write!(f, "{a}")?,
                _ => write!(f, "{a} {m}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(deg {})", self.order + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub exp: Vec<i64>,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    #[serde(alias = "variables")]
    pub vars: Vec<String>,
    pub order: i64,
    pub grading: Vec<i64>,
    #[serde(alias = "coefficients")]
    pub coeffs: Vec<CoeffJson>,
}

/// `var_i ↦ sign_i · y^{image_i}` into the target ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Substitution {
    pub target: Ring,
    pub images: Vec<(i8, Vec<i64>)>,
}

/// Coefficientwise comparison of all terms of degree ≤ `order`; the first
/// mismatch in (degree, exponent) order is reported.
pub fn compare(a: &QSeries, b: &QSeries, order: i64) -> Result<Comparison, SeriesError> {
    a.check(b)?;
    let order = order.min(a.order).min(b.order);
    let mut keys: Vec<&Vec<i64>> = a.coeffs.keys().chain(b.coeffs.keys()).filter(|e| a.ring.degree(e) <= order).collect();
    keys.sort_by_key(|e| (a.ring.degree(e), (*e).clone()));
    keys.dedup();
    for e in keys {
        let (x, y) = (a.coeff(e), b.coeff(e));
        if x != y {
            return Ok(Comparison::Mismatch { exp: e.clone(), left: x, right: y });
        }
    }
    Ok(Comparison::Equal)
}

/// `(1 + c·m)^e` truncated, for a monomial `m` of positive degree.
pub fn binomial_factor(ring: &Ring, c: i64, m: &[i64], e: i64, order: i64) -> Result<QSeries, SeriesError> {
    let d = ring.degree(m);
    if d <= 0 {
        return Err(SeriesError::ConeViolation(m.to_vec()));
    }
    let mut s = QSeries::zero(ring, order);
    let nmax = order / d;
    let cb = BigInt::from(c);
    for n in 0..=nmax {
        // coefficient of u^n in (1+u)^e is binom(e, n), generalized for e < 0
        let b = if e >= 0 {
            if n > e {
                break;
            }
            binomial(BigInt::from(e), BigInt::from(n))
        } else {
            let k = -e;
            let v = binomial(BigInt::from(n + k - 1), BigInt::from(n));
            if n % 2 == 1 { -v } else { v }
        };
        let exp: Vec<i64> = m.iter().map(|x| x * n).collect();
        s.add_term(exp, b * num_traits::pow::pow(cb.clone(), n as usize))?;
    }
    Ok(s)
}

/// ∏_{k≥1} (1 + c·x·q^k)^{e·k} truncated. With `c = −1, e = −1` this is `M(x, q)`.
fn macmahon_like(ring: &Ring, x: &[i64], q: &[i64], c: i64, e: i64, order: i64) -> Result<QSeries, SeriesError> {
    let xq: Vec<i64> = x.iter().zip(q).map(|(a, b)| a + b).collect();
    if ring.degree(&xq) <= 0 || ring.degree(q) <= 0 {
        return Err(SeriesError::ConeViolation(xq));
    }
    let mut s = QSeries::one(ring, order);
    let mut k = 1;
    loop {
        let m: Vec<i64> = x.iter().zip(q).map(|(a, b)| a + k * b).collect();
        if ring.degree(&m) > order {
            break;
        }
        s = s.mul(&binomial_factor(ring, c, &m, e * k, order)?)?;
        k += 1;
    }
    Ok(s)
}

/// MacMahon function `M(x,q) = ∏_{k≥1} (1 − x q^k)^{−k}`.
pub fn macmahon(ring: &Ring, x: &[i64], q: &[i64], order: i64) -> Result<QSeries, SeriesError> {
    macmahon_like(ring, x, q, -1, -1, order)
}

/// `∏_{k≥1} (1 + c·x q^k)^{e·k}` for general sign and exponent multiplier.
pub fn macmahon_power(ring: &Ring, x: &[i64], q: &[i64], c: i64, e: i64, order: i64) -> Result<QSeries, SeriesError> {
    macmahon_like(ring, x, q, c, e, order)
}

/// `∏_{k≥start} (1 + c·q^k)^e`, the building block of η-type products.
pub fn eta_like(ring: &Ring, q: &[i64], start: i64, c: i64, e: i64, order: i64) -> Result<QSeries, SeriesError> {
    let mut s = QSeries::one(ring, order);
    let mut k = start.max(1);
    loop {
        let m: Vec<i64> = q.iter().map(|b| k * b).collect();
        if ring.degree(&m) > order {
            break;
        }
        s = s.mul(&binomial_factor(ring, c, &m, e, order)?)?;
        k += 1;
    }
    Ok(s)
}

/// `∏_{k≥1} (1 − q^k)` in one variable.
pub fn eta_product(order: i64) -> QSeries {
    eta_like(&Ring::q(), &[1], 1, -1, 1, order).unwrap()
}

/// `M(1,q)² M(x⁻¹,q)⁻¹ M(x,q)⁻¹` under `q ↦ −q0 q1`, `x ↦ q1`, in `q0, q1`.
pub fn conifold_ncdt_product(order: i64) -> QSeries {
    let pre = Ring::new(&["q", "x"], &[1, 0]);
    let m1 = macmahon(&pre, &[0, 0], &[1, 0], order).unwrap();
    let mx = macmahon_power(&pre, &[0, 1], &[1, 0], -1, 1, order).unwrap();
    let mxi = macmahon_power(&pre, &[0, -1], &[1, 0], -1, 1, order).unwrap();
    let prod = m1.pow(2).unwrap().mul(&mx).unwrap().mul(&mxi).unwrap();
    let sub = Substitution { target: Ring::colored(2), images: vec![(-1, vec![1, 1]), (1, vec![0, 1])] };
    prod.substitute(&sub).unwrap()
}

/// `M(1,q)^m ∏_{1≤a≤b<m} M(x_{[a,b]},q) M(x_{[a,b]}⁻¹,q)` with `x_{[a,b]} = x_a⋯x_b`,
/// under `q ↦ −q0⋯q_{m−1}`, `x_i ↦ q_i`, in `q0 .. q_{m−1}`.
pub fn orbifold_ncdt_product(m: usize, order: i64) -> QSeries {
    assert!(m >= 1);
    let names: Vec<String> = std::iter::once("q".to_string()).chain((1..m).map(|i| format!("x{i}"))).collect();
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    let mut grading = vec![0; m];
    grading[0] = 1;
    let pre = Ring::new(&refs, &grading);
    let mut qv = vec![0; m];
    qv[0] = 1;
    let mut prod = macmahon(&pre, &vec![0; m], &qv, order).unwrap().pow(m as i64).unwrap();
    for a in 1..m {
        for b in a..m {
            let mut x = vec![0; m];
            for e in &mut x[a..=b] {
                *e = 1;
            }
            let xi: Vec<i64> = x.iter().map(|e| -e).collect();
            prod = prod.mul(&macmahon(&pre, &x, &qv, order).unwrap()).unwrap();
            prod = prod.mul(&macmahon(&pre, &xi, &qv, order).unwrap()).unwrap();
        }
    }
    let mut images = vec![(-1i8, vec![1; m])];
    for i in 1..m {
        let mut e = vec![0; m];
        e[i] = 1;
        images.push((1, e));
    }
    prod.substitute(&Substitution { target: Ring::colored(m), images }).unwrap()
}
