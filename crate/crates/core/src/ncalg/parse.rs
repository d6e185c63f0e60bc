//! Tiny recursive-descent parser for noncommutative expressions.
//!
//! Grammar: `expr := term (('+'|'-') term)*`, `term := factor+`,
//! `factor := number | symbol | '(' expr ')' | '[' expr ',' expr ']'`.
//! Juxtaposed symbols are split greedily against a vocabulary, so `IJ1A`
//! reads as `I J1 A` when those are the known names.

use crate::{q_int, Q};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// A product of symbols with a rational coefficient, in written order.
pub type Term = (Q, Vec<String>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("unknown symbol at `{0}`")]
    UnknownSymbol(String),
    #[error("unexpected character `{0}`")]
    Unexpected(char),
    #[error("unexpected end of input")]
    Eof,
    #[error("division by zero in coefficient")]
    ZeroDenominator,
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    vocab: Vec<&'a str>,
}

pub fn parse_expr(src: &str, vocab: &[&str]) -> Result<Vec<Term>, ParseError> {
    let mut v: Vec<&str> = vocab.to_vec();
    v.sort_by_key(|s| std::cmp::Reverse(s.len()));
    let mut p = Parser { chars: src.chars().collect(), pos: 0, vocab: v };
    let out = p.expr()?;
    p.ws();
    if p.pos < p.chars.len() {
        return Err(ParseError::Unexpected(p.chars[p.pos]));
    }
    Ok(collect(out))
}

fn collect(terms: Vec<Term>) -> Vec<Term> {
    let mut acc: BTreeMap<Vec<String>, Q> = BTreeMap::new();
    let mut order: Vec<Vec<String>> = Vec::new();
    for (c, w) in terms {
        if !acc.contains_key(&w) {
            order.push(w.clone());
        }
        *acc.entry(w).or_insert_with(Q::zero) += c;
    }
    order
        .into_iter()
        .filter_map(|w| {
            let c = acc[&w].clone();
            (!c.is_zero()).then_some((c, w))
        })
        .collect()
}

fn mul(a: &[Term], b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for (ca, wa) in a {
        for (cb, wb) in b {
            let mut w = wa.clone();
            w.extend(wb.iter().cloned());
            out.push((ca * cb, w));
        }
    }
    out
}

impl<'a> Parser<'a> {
    fn ws(&mut self) {
        while self.pos < self.chars.len() && (self.chars[self.pos].is_whitespace() || self.chars[self.pos] == '*') {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.ws();
        self.chars.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut out = Vec::new();
        let mut sign = Q::one();
        match self.peek() {
            Some('-') | Some('\u{2212}') => {
                self.pos += 1;
                sign = -Q::one();
            }
            Some('+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            out.extend(t.into_iter().map(|(c, w)| (c * &sign, w)));
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    sign = Q::one();
                }
                Some('-') | Some('\u{2212}') => {
                    self.pos += 1;
                    sign = -Q::one();
                }
                _ => break,
            }
        }
        Ok(out)
    }

    fn term(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut acc: Vec<Term> = vec![(Q::one(), vec![])];
        let mut any = false;
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => {
                    let q = self.number()?;
                    acc = acc.into_iter().map(|(c, w)| (c * &q, w)).collect();
                }
                Some('(') => {
                    self.pos += 1;
                    let inner = self.expr()?;
                    self.expect(')')?;
                    acc = mul(&acc, &inner);
                }
                Some('[') => {
                    self.pos += 1;
                    let a = self.expr()?;
                    self.expect(',')?;
                    let b = self.expr()?;
                    self.expect(']')?;
                    let mut comm = mul(&a, &b);
                    comm.extend(mul(&b, &a).into_iter().map(|(c, w)| (-c, w)));
                    acc = mul(&acc, &comm);
                }
                Some(c) if c.is_alphabetic() || c == '_' => {
                    let s = self.symbol()?;
                    acc = acc.into_iter().map(|(c, mut w)| {
                        w.push(s.clone());
                        (c, w)
                    }).collect();
                }
                Some(c) if !any => return Err(ParseError::Unexpected(c)),
                None if !any => return Err(ParseError::Eof),
                _ => break,
            }
            any = true;
        }
        Ok(acc)
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => Err(ParseError::Unexpected(x)),
            None => Err(ParseError::Eof),
        }
    }

    fn number(&mut self) -> Result<Q, ParseError> {
        let int = |p: &mut Self| {
            let mut n: i64 = 0;
            while let Some(d) = p.chars.get(p.pos).and_then(|c| c.to_digit(10)) {
                n = n * 10 + d as i64;
                p.pos += 1;
            }
            n
        };
        let num = int(self);
        if self.chars.get(self.pos) == Some(&'/') {
            self.pos += 1;
            let den = int(self);
            if den == 0 {
                return Err(ParseError::ZeroDenominator);
            }
            return Ok(Q::new(num.into(), den.into()));
        }
        Ok(q_int(num))
    }

    fn symbol(&mut self) -> Result<String, ParseError> {
        let rest: String = self.chars[self.pos..].iter().collect();
        for v in &self.vocab {
            if rest.starts_with(v) {
                self.pos += v.chars().count();
                return Ok(v.to_string());
            }
        }
        let snippet: String = rest.chars().take(8).collect();
        Err(ParseError::UnknownSymbol(snippet))
    }
}
