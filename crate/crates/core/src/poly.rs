//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` under graded-lex order, so iteration from
//! the back yields the canonical display order (leading term first).
//!
//! Text grammar: terms separated by `+`/`-`; a term is an optional rational
//! coefficient `p` or `p/q` followed by `*`-separated powers `v^e`, e.g.
//! `y^4*w + y^2*z^3` or `a^2*x + a*b*y + 1/2*b^2*z`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect())
    }

    pub fn format(&self, vars: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(vars)
            .filter(|(e, _)| **e > 0)
            .map(|(e, v)| {
                if *e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All exponent vectors of total degree `d` in `nvars` variables, in
/// descending lex order (`y^2, yz, yw, z^2, …`).
pub fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let n = cur.len();
        if i + 1 == n {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            cur[i] = 0;
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    if nvars == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(0, d, &mut vec![0; nvars], &mut out);
    out
}

pub fn var_list<S: AsRef<str>>(names: &[S]) -> Arc<[String]> {
    names.iter().map(|s| s.as_ref().to_string()).collect()
}

#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, Q>,
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self})")
    }
}

impl SparsePoly {
    pub fn zero(vars: Arc<[String]>) -> Self {
        SparsePoly {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: Arc<[String]>, c: Q) -> Self {
        let n = vars.len();
        Self::monomial(vars, Monomial::one(n), c)
    }

    pub fn one(vars: Arc<[String]>) -> Self {
        Self::constant(vars, Q::one())
    }

    pub fn var(vars: Arc<[String]>, i: usize) -> Self {
        let n = vars.len();
        Self::monomial(vars, Monomial::var(n, i), Q::one())
    }

    pub fn monomial(vars: Arc<[String]>, m: Monomial, c: Q) -> Self {
        assert_eq!(m.0.len(), vars.len());
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePoly { vars, terms }
    }

    pub fn from_terms(vars: Arc<[String]>, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = SparsePoly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order, leading term first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Q) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.vars.clone());
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Q) -> SparsePoly {
        if c.is_zero() {
            return SparsePoly::zero(self.vars.clone());
        }
        SparsePoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut acc = SparsePoly::one(self.vars.clone());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, point: &[Q]) -> Q {
        assert_eq!(point.len(), self.nvars());
        let mut total = Q::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        total
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &SparsePoly) -> Option<SparsePoly> {
        check_vars(self, divisor);
        let (lm, lc) = divisor.leading_term()?;
        if divisor.terms.len() == 1 {
            let mut out = SparsePoly::zero(self.vars.clone());
            for (m, c) in &self.terms {
                if !lm.divides(m) {
                    return None;
                }
                out.terms.insert(lm.quotient_of(m), c / lc);
            }
            return Some(out);
        }
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(self.vars.clone());
        while let Some((rm, rc)) = rem.leading_term() {
            if !lm.divides(rm) {
                return None;
            }
            let qm = lm.quotient_of(rm);
            let qc = rc / lc;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Same polynomial over a different variable list with the same arity.
    pub fn rename_vars(&self, vars: Arc<[String]>) -> SparsePoly {
        assert_eq!(vars.len(), self.vars.len());
        SparsePoly {
            vars,
            terms: self.terms.clone(),
        }
    }

    /// Parses with variables sorted alphabetically.
    pub fn parse(text: &str) -> Result<SparsePoly> {
        let raw = parse_terms(text)?;
        let mut names: Vec<String> = raw
            .iter()
            .flat_map(|(_, f)| f.iter().map(|(v, _)| v.clone()))
            .collect();
        names.sort();
        names.dedup();
        build_parsed(raw, var_list(&names))
    }

    /// Parses over a fixed variable list; unknown identifiers are an error.
    pub fn parse_with_vars(text: &str, vars: Arc<[String]>) -> Result<SparsePoly> {
        build_parsed(parse_terms(text)?, vars)
    }
}

fn check_vars(a: &SparsePoly, b: &SparsePoly) {
    assert!(
        Arc::ptr_eq(&a.vars, &b.vars) || a.vars == b.vars,
        "polynomials over different variables: {:?} vs {:?}",
        a.vars,
        b.vars
    );
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if m.degree() == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", m.format(&self.vars))?;
            } else {
                write!(f, "{a}*{}", m.format(&self.vars))?;
            }
        }
        Ok(())
    }
}

/// Serialized as its canonical text.
impl serde::Serialize for SparsePoly {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        check_vars(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        check_vars(self, rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        check_vars(self, rhs);
        let mut out = SparsePoly::zero(self.vars.clone());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

type RawTerm = (Q, Vec<(String, u32)>);

fn build_parsed(raw: Vec<RawTerm>, vars: Arc<[String]>) -> Result<SparsePoly> {
    let mut p = SparsePoly::zero(vars.clone());
    for (c, factors) in raw {
        let mut exps = vec![0u32; vars.len()];
        for (name, e) in factors {
            let i = vars
                .iter()
                .position(|v| *v == name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            exps[i] += e;
        }
        p.add_term(Monomial(exps), c);
    }
    Ok(p)
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected a number at offset {start}")));
        }
        let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        Ok(digits.parse().unwrap())
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            if self.pos == start && self.s[self.pos].is_ascii_digit() {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!(
                "expected a variable at offset {start}"
            )));
        }
        Ok(String::from_utf8(self.s[start..self.pos].to_vec()).unwrap())
    }
}

fn parse_terms(text: &str) -> Result<Vec<RawTerm>> {
    let mut lx = Lexer {
        s: text.as_bytes(),
        pos: 0,
    };
    let mut out = Vec::new();
    if lx.peek().is_none() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    let mut negative = lx.eat(b'-');
    if !negative {
        lx.eat(b'+');
    }
    loop {
        let mut coef = Q::one();
        let mut factors = Vec::new();
        let mut need_factor = true;
        if matches!(lx.peek(), Some(c) if c.is_ascii_digit()) {
            let num = lx.number()?;
            let den = if lx.eat(b'/') {
                lx.number()?
            } else {
                BigInt::one()
            };
            if den.is_zero() {
                return Err(Error::Parse("zero denominator".into()));
            }
            coef = Q::new(num, den);
            need_factor = lx.eat(b'*');
        }
        if need_factor {
            loop {
                let name = lx.ident()?;
                let e = if lx.eat(b'^') {
                    let n = lx.number()?;
                    u32::try_from(n).map_err(|_| Error::Parse("exponent too large".into()))?
                } else {
                    1
                };
                factors.push((name, e));
                if !lx.eat(b'*') {
                    break;
                }
            }
        }
        if negative {
            coef = -coef;
        }
        out.push((coef, factors));
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.pos += 1;
                negative = false;
            }
            Some(b'-') => {
                lx.pos += 1;
                negative = true;
            }
            Some(c) => {
                return Err(Error::Parse(format!(
                    "unexpected `{}` at offset {}",
                    c as char, lx.pos
                )));
            }
        }
    }
    Ok(out)
}
