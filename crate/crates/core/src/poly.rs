//! Sparse multivariate polynomials over the rationals with a weighted grading.
//!
//! Monomials are exponent vectors against a fixed list of ambient variables.
//! The one supported monomial order is graded reverse lexicographic with the
//! declared variable order as priority; it is total, multiplicative, and a
//! well-order on the monomials of each fixed weighted degree, which is all
//! that division by a single polynomial needs.

use crate::error::{Error, Result};
use crate::rational::Rat;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Positive weights deg x_i = e_i. All weights 1 is the standard grading.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Grading {
    weights: Arc<Vec<i64>>,
}

impl Grading {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidRing("no variables declared".into()));
        }
        if weights.iter().any(|&w| w < 1) {
            return Err(Error::InvalidRing("grading weights must be >= 1".into()));
        }
        Ok(Grading {
            weights: Arc::new(weights),
        })
    }

    pub fn standard(nvars: usize) -> Self {
        Grading {
            weights: Arc::new(vec![1; nvars]),
        }
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn is_standard(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn max_weight(&self) -> i64 {
        *self.weights.iter().max().expect("nonempty")
    }

    pub fn degree(&self, m: &Monomial) -> i64 {
        m.exps
            .iter()
            .zip(self.weights.iter())
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }
}

/// Exponent vector; the ambient variable count is fixed by context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    pub fn var(nvars: usize, idx: usize) -> Self {
        let mut exps = vec![0; nvars];
        exps[idx] = 1;
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.checked_add(b).expect("monomial exponent overflow"))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// other / self, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other.exps.iter().zip(&self.exps).map(|(&b, &a)| b - a).collect(),
        }
    }
}

/// Graded reverse lexicographic order with the declared variable priority.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonomialOrder;

impl MonomialOrder {
    /// Compares monomials: first by weighted degree, ties broken reverse
    /// lexicographically (the last variable where the exponents differ
    /// decides, smaller exponent wins).
    pub fn cmp(grading: &Grading, a: &Monomial, b: &Monomial) -> Ordering {
        let da = grading.degree(a);
        let db = grading.degree(b);
        match da.cmp(&db) {
            Ordering::Equal => {}
            o => return o,
        }
        for i in (0..a.exps.len()).rev() {
            match a.exps[i].cmp(&b.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }
}

/// Sparse polynomial: terms kept sorted descending in the monomial order,
/// no zero coefficients stored, so printing and iteration are deterministic.
#[derive(Clone, Debug)]
pub struct Polynomial {
    grading: Grading,
    terms: Vec<(Monomial, Rat)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.grading == other.grading && self.terms == other.terms
    }
}
impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(grading: Grading) -> Self {
        Polynomial {
            grading,
            terms: Vec::new(),
        }
    }

    pub fn constant(grading: Grading, c: Rat) -> Self {
        let nvars = grading.nvars();
        let mut p = Polynomial::zero(grading);
        if !c.is_zero() {
            p.terms.push((Monomial::one(nvars), c));
        }
        p
    }

    pub fn variable(grading: Grading, idx: usize) -> Self {
        let nvars = grading.nvars();
        let mut p = Polynomial::zero(grading);
        p.terms.push((Monomial::var(nvars, idx), Rat::one()));
        p
    }

    pub fn monomial(grading: Grading, m: Monomial, c: Rat) -> Self {
        let mut p = Polynomial::zero(grading);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds from arbitrary (monomial, coefficient) pairs, combining
    /// duplicates and dropping zeros.
    pub fn from_terms(grading: Grading, terms: Vec<(Monomial, Rat)>) -> Self {
        let mut map: HashMap<Monomial, Rat> = HashMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), grading.nvars());
            let entry = map.entry(m).or_insert_with(Rat::zero);
            *entry += c;
        }
        let mut terms: Vec<(Monomial, Rat)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|(a, _), (b, _)| MonomialOrder::cmp(&grading, b, a));
        Polynomial { grading, terms }
    }

    pub fn grading(&self) -> &Grading {
        &self.grading
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(Monomial, Rat)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading (monomial, coefficient) in the fixed order.
    pub fn leading(&self) -> Option<(&Monomial, &Rat)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.grading != other.grading {
            return Err(Error::GradingMismatch);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let g = &self.grading;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match MonomialOrder::cmp(g, &self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial {
            grading: self.grading.clone(),
            terms: out,
        })
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            grading: self.grading.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.grading.clone());
        }
        Polynomial {
            grading: self.grading.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Multiplies by a single term c * m.
    pub fn mul_term(&self, m: &Monomial, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.grading.clone());
        }
        // Multiplication by a fixed monomial preserves the order.
        Polynomial {
            grading: self.grading.clone(),
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut map: HashMap<Monomial, Rat> = HashMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let entry = map.entry(m).or_insert_with(Rat::zero);
                *entry += ca * cb;
            }
        }
        let g = self.grading.clone();
        let mut terms: Vec<(Monomial, Rat)> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|(a, _), (b, _)| MonomialOrder::cmp(&g, b, a));
        Ok(Polynomial { grading: g, terms })
    }

    pub fn pow(&self, k: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::constant(self.grading.clone(), Rat::one());
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Weighted degree of a nonzero homogeneous polynomial; reports a pair
    /// of offending terms otherwise. Callers treat 0 as homogeneous of
    /// every degree.
    pub fn weighted_degree(&self) -> Result<i64> {
        let Some((m0, _)) = self.terms.first() else {
            return Err(Error::ZeroPolynomial);
        };
        let d0 = self.grading.degree(m0);
        for (m, _) in &self.terms[1..] {
            let d = self.grading.degree(m);
            if d != d0 {
                return Err(Error::NotHomogeneous {
                    d1: d0,
                    d2: d,
                    t1: format_monomial_positional(m0),
                    t2: format_monomial_positional(m),
                });
            }
        }
        Ok(d0)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.weighted_degree().is_ok()
    }

    /// Remainder of division by a single nonzero polynomial `f`: the result
    /// has no monomial divisible by the leading monomial of `f`, and is the
    /// unique such representative of `self` modulo (f).
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(f)?;
        let (lead, lc) = f
            .leading()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)?;
        let mut rem = self.clone();
        loop {
            let hit = rem
                .terms
                .iter()
                .position(|(m, _)| lead.divides(m))
                .map(|i| (rem.terms[i].0.clone(), rem.terms[i].1.clone()));
            let Some((m, c)) = hit else {
                return Ok(rem);
            };
            let q = lead.quotient_into(&m);
            let scale = -(&c / &lc);
            rem = rem.add(&f.mul_term(&q, &scale))?;
        }
    }

    /// Exact division by `f`; errors if `f` does not divide `self`.
    pub fn divide_exact(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(f)?;
        let (lead, lc) = f
            .leading()
            .map(|(m, c)| (m.clone(), c.clone()))
            .ok_or(Error::ZeroPolynomial)?;
        let mut rem = self.clone();
        let mut quo = Polynomial::zero(self.grading.clone());
        while let Some((m, c)) = rem.leading().map(|(m, c)| (m.clone(), c.clone())) {
            if !lead.divides(&m) {
                return Err(Error::NonInteger(format!(
                    "polynomial division left remainder term {}",
                    format_monomial_positional(&m)
                )));
            }
            let q = lead.quotient_into(&m);
            let coef = &c / &lc;
            quo = quo.add(&Polynomial::monomial(
                self.grading.clone(),
                q.clone(),
                coef.clone(),
            ))?;
            rem = rem.add(&f.mul_term(&q, &-coef))?;
        }
        Ok(quo)
    }

    /// Substitutes variable i by the given polynomials (used by the
    /// weighted cover's y_i -> x_i^{e_i} map). All images must share one
    /// grading.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.grading.nvars() {
            return Err(Error::GradingMismatch);
        }
        let target = images
            .first()
            .map(|p| p.grading.clone())
            .ok_or(Error::GradingMismatch)?;
        let mut acc = Polynomial::zero(target.clone());
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target.clone(), c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[i].pow(e)?)?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Canonical text form using the given variable names; inverse of
    /// [`parse_polynomial`] on canonical forms.
    pub fn to_string_with(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mono = format_monomial(m, names);
            if mono.is_empty() {
                out.push_str(&format_rat(&abs));
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format_rat(&abs));
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

fn format_rat(c: &Rat) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

fn format_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exps().iter().enumerate() {
        if e == 1 {
            parts.push(names[i].clone());
        } else if e > 1 {
            parts.push(format!("{}^{}", names[i], e));
        }
    }
    parts.join("*")
}

fn format_monomial_positional(m: &Monomial) -> String {
    let names: Vec<String> = (0..m.nvars()).map(|i| format!("x{i}")).collect();
    let s = format_monomial(m, &names);
    if s.is_empty() {
        "1".to_string()
    } else {
        s
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.grading.nvars()).map(|i| format!("x{i}")).collect();
        write!(f, "{}", self.to_string_with(&names))
    }
}

// ---------------------------------------------------------------------------
// Parser
//
// expr   := term (('+'|'-') term)*
// term   := coeff ('*' factor)* | factor ('*' factor)*
// factor := var ('^' uint)?
// coeff  := int | int '/' uint
//
// Whitespace insignificant; no parentheses.
// ---------------------------------------------------------------------------

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    End,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Returns the token together with its starting byte offset.
    fn next(&mut self) -> Result<(Tok, usize)> {
        self.skip_ws();
        let start = self.pos;
        if self.pos >= self.bytes.len() {
            return Ok((Tok::End, start));
        }
        let b = self.bytes[self.pos];
        let tok = match b {
            b'+' => {
                self.pos += 1;
                Tok::Plus
            }
            b'-' => {
                self.pos += 1;
                Tok::Minus
            }
            b'*' => {
                self.pos += 1;
                Tok::Star
            }
            b'^' => {
                self.pos += 1;
                Tok::Caret
            }
            b'/' => {
                self.pos += 1;
                Tok::Slash
            }
            b'0'..=b'9' => {
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                Tok::Int(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
            }
            b if b.is_ascii_alphabetic() || b == b'_' => {
                while self.pos < self.bytes.len()
                    && (self.bytes[self.pos].is_ascii_alphanumeric() || self.bytes[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                Tok::Ident(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
            }
            other => {
                return Err(Error::Syntax {
                    offset: start,
                    msg: format!("unexpected character `{}`", other as char),
                })
            }
        };
        Ok((tok, start))
    }

    fn peek(&mut self) -> Result<(Tok, usize)> {
        let save = self.pos;
        let t = self.next();
        self.pos = save;
        t
    }
}

/// Parses the additive-normal-form grammar above into an exact polynomial.
pub fn parse_polynomial(text: &str, grading: &Grading, variables: &[String]) -> Result<Polynomial> {
    if variables.len() != grading.nvars() {
        return Err(Error::GradingMismatch);
    }
    let mut lx = Lexer::new(text);
    let mut acc = Polynomial::zero(grading.clone());
    let mut first = true;
    loop {
        let (tok, off) = lx.peek()?;
        let sign = match tok {
            Tok::End => {
                if first {
                    return Err(Error::Syntax {
                        offset: off,
                        msg: "empty polynomial expression".into(),
                    });
                }
                return Ok(acc);
            }
            Tok::Plus => {
                lx.next()?;
                Rat::one()
            }
            Tok::Minus => {
                lx.next()?;
                -Rat::one()
            }
            _ if first => Rat::one(),
            _ => {
                return Err(Error::Syntax {
                    offset: off,
                    msg: "expected `+` or `-` between terms".into(),
                });
            }
        };
        let term = parse_term(&mut lx, grading, variables)?;
        acc = acc.add(&term.scale(&sign))?;
        first = false;
    }
}

fn parse_term(lx: &mut Lexer, grading: &Grading, variables: &[String]) -> Result<Polynomial> {
    let mut coeff = Rat::one();
    let mut mono = Monomial::one(grading.nvars());
    let (tok, off) = lx.peek()?;
    match tok {
        Tok::Int(_) => {
            coeff = parse_coeff(lx)?;
        }
        Tok::Ident(_) => {
            let (v, e) = parse_factor(lx, variables)?;
            mono = mono.mul(&power_monomial(grading.nvars(), v, e));
        }
        _ => {
            return Err(Error::Syntax {
                offset: off,
                msg: "expected a coefficient or a variable".into(),
            })
        }
    }
    loop {
        let (tok, _) = lx.peek()?;
        if tok != Tok::Star {
            break;
        }
        lx.next()?;
        let (tok2, off2) = lx.peek()?;
        match tok2 {
            Tok::Ident(_) => {
                let (v, e) = parse_factor(lx, variables)?;
                mono = mono.mul(&power_monomial(grading.nvars(), v, e));
            }
            _ => {
                return Err(Error::Syntax {
                    offset: off2,
                    msg: "expected a variable after `*`".into(),
                })
            }
        }
    }
    Ok(Polynomial::monomial(grading.clone(), mono, coeff))
}

fn parse_coeff(lx: &mut Lexer) -> Result<Rat> {
    let (tok, off) = lx.next()?;
    let Tok::Int(n) = tok else {
        return Err(Error::BadRational {
            offset: off,
            msg: "expected an integer".into(),
        });
    };
    let numer: num_bigint::BigInt = n.parse().map_err(|e| Error::BadRational {
        offset: off,
        msg: format!("{e}"),
    })?;
    let (tok, _) = lx.peek()?;
    if tok == Tok::Slash {
        lx.next()?;
        let (tok2, off2) = lx.next()?;
        let Tok::Int(d) = tok2 else {
            return Err(Error::BadRational {
                offset: off2,
                msg: "expected a denominator after `/`".into(),
            });
        };
        let denom: num_bigint::BigInt = d.parse().map_err(|e| Error::BadRational {
            offset: off2,
            msg: format!("{e}"),
        })?;
        if denom.is_zero() {
            return Err(Error::BadRational {
                offset: off2,
                msg: "zero denominator".into(),
            });
        }
        return Ok(Rat::new(numer, denom));
    }
    Ok(Rat::from_integer(numer))
}

fn parse_factor(lx: &mut Lexer, variables: &[String]) -> Result<(usize, u32)> {
    let (tok, off) = lx.next()?;
    let Tok::Ident(name) = tok else {
        return Err(Error::Syntax {
            offset: off,
            msg: "expected a variable".into(),
        });
    };
    let idx = variables
        .iter()
        .position(|v| *v == name)
        .ok_or(Error::UnknownVariable { name, offset: off })?;
    let (tok, _) = lx.peek()?;
    if tok == Tok::Caret {
        lx.next()?;
        let (tok2, off2) = lx.next()?;
        let Tok::Int(e) = tok2 else {
            return Err(Error::Syntax {
                offset: off2,
                msg: "expected an exponent after `^`".into(),
            });
        };
        let e: u32 = e.parse().map_err(|e| Error::Syntax {
            offset: off2,
            msg: format!("bad exponent: {e}"),
        })?;
        return Ok((idx, e));
    }
    Ok((idx, 1))
}

fn power_monomial(nvars: usize, var: usize, e: u32) -> Monomial {
    let mut exps = vec![0; nvars];
    exps[var] = e;
    Monomial::new(exps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_frac};

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    fn std4() -> (Grading, Vec<String>) {
        (Grading::standard(4), names(&["x", "y", "u", "v"]))
    }

    #[test]
    fn parses_the_quadric_equation() {
        let (g, vs) = std4();
        let f = parse_polynomial("x*u + y*v", &g, &vs).unwrap();
        assert_eq!(f.num_terms(), 2);
        assert_eq!(f.weighted_degree().unwrap(), 2);
        assert_eq!(f.to_string_with(&vs), "x*u + y*v");
    }

    #[test]
    fn parses_zero() {
        let (g, vs) = std4();
        let f = parse_polynomial("0", &g, &vs).unwrap();
        assert!(f.is_zero());
        assert_eq!(f.to_string_with(&vs), "0");
    }

    #[test]
    fn weighted_degree_of_weighted_equation() {
        let g = Grading::new(vec![2, 3]).unwrap();
        let vs = names(&["y0", "y1"]);
        let f = parse_polynomial("y0^3 + y1^2", &g, &vs).unwrap();
        assert_eq!(f.weighted_degree().unwrap(), 6);
    }

    #[test]
    fn detects_inhomogeneity() {
        let g = Grading::standard(2);
        let vs = names(&["x", "y"]);
        let f = parse_polynomial("x^2 + y", &g, &vs).unwrap();
        match f.weighted_degree() {
            Err(Error::NotHomogeneous { d1, d2, .. }) => {
                assert_eq!((d1, d2), (2, 1));
            }
            other => panic!("expected NotHomogeneous, got {other:?}"),
        }
    }

    #[test]
    fn rational_coefficients_and_errors() {
        let g = Grading::standard(2);
        let vs = names(&["x", "y"]);
        let f = parse_polynomial("1/2*x + 3*y", &g, &vs).unwrap();
        assert_eq!(f.to_string_with(&vs), "1/2*x + 3*y");
        assert!(matches!(
            parse_polynomial("x + w", &g, &vs),
            Err(Error::UnknownVariable { .. })
        ));
        assert!(matches!(
            parse_polynomial("1/0*x", &g, &vs),
            Err(Error::BadRational { .. })
        ));
        assert!(matches!(
            parse_polynomial("x + + y", &g, &vs),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn syntax_error_carries_offset() {
        let g = Grading::standard(2);
        let vs = names(&["x", "y"]);
        match parse_polynomial("x * ?", &g, &vs) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn arithmetic_matches_hand_expansion() {
        let g = Grading::standard(2);
        let vs = names(&["x", "y"]);
        let x = parse_polynomial("x", &g, &vs).unwrap();
        let y = parse_polynomial("y", &g, &vs).unwrap();
        let sum = x.add(&y).unwrap();
        let diff = x.sub(&y).unwrap();
        let prod = sum.mul(&diff).unwrap();
        assert_eq!(prod.to_string_with(&vs), "x^2 - y^2");

        let p = parse_polynomial("x^2 - 2*x*y + y^2", &g, &vs).unwrap();
        assert!(p.add(&p.neg()).unwrap().is_zero());
    }

    #[test]
    fn quadric_square_expansion() {
        let (g, vs) = std4();
        let f = parse_polynomial("x*u + y*v", &g, &vs).unwrap();
        let sq = f.mul(&f).unwrap();
        let expect = parse_polynomial("x^2*u^2 + 2*x*y*u*v + y^2*v^2", &g, &vs).unwrap();
        assert_eq!(sq, expect);
    }

    #[test]
    fn normal_form_examples() {
        let (g, vs) = std4();
        let f = parse_polynomial("x*u + y*v", &g, &vs).unwrap();
        // leading monomial of f is x*u under grevlex with x>y>u>v
        let p = parse_polynomial("x*u", &g, &vs).unwrap();
        assert_eq!(p.normal_form(&f).unwrap().to_string_with(&vs), "-y*v");
        let p = parse_polynomial("y*v", &g, &vs).unwrap();
        assert_eq!(p.normal_form(&f).unwrap().to_string_with(&vs), "y*v");
        let p = parse_polynomial("x^2*u^2", &g, &vs).unwrap();
        assert_eq!(p.normal_form(&f).unwrap().to_string_with(&vs), "y^2*v^2");
    }

    #[test]
    fn grevlex_order_tiebreak() {
        // with x > y > z, degree ties are broken by the last differing
        // exponent: x*y^2 > x^2*z
        let g = Grading::standard(3);
        let a = Monomial::new(vec![1, 2, 0]);
        let b = Monomial::new(vec![2, 0, 1]);
        assert_eq!(MonomialOrder::cmp(&g, &a, &b), Ordering::Greater);
    }

    #[test]
    fn exact_division() {
        let (g, vs) = std4();
        let f = parse_polynomial("x*u + y*v", &g, &vs).unwrap();
        let sq = f.mul(&f).unwrap();
        assert_eq!(sq.divide_exact(&f).unwrap(), f);
        let bad = parse_polynomial("x^2*u^2", &g, &vs).unwrap();
        assert!(bad.divide_exact(&f).is_err());
    }

    #[test]
    fn substitution_powers() {
        let gw = Grading::new(vec![2, 3]).unwrap();
        let vw = names(&["y0", "y1"]);
        let gs = Grading::standard(2);
        let vs = names(&["x0", "x1"]);
        let galois = parse_polynomial("y0^3 + y1^2", &gw, &vw).unwrap();
        let images = vec![
            parse_polynomial("x0^2", &gs, &vs).unwrap(),
            parse_polynomial("x1^3", &gs, &vs).unwrap(),
        ];
        let f = galois.substitute(&images).unwrap();
        assert_eq!(f.to_string_with(&vs), "x0^6 + x1^6");
        assert_eq!(f.weighted_degree().unwrap(), 6);
    }

    #[test]
    fn coefficient_scaling() {
        let g = Grading::standard(2);
        let vs = names(&["x", "y"]);
        let p = parse_polynomial("2*x + 4*y", &g, &vs).unwrap();
        let half = p.scale(&rat_frac(1, 2));
        assert_eq!(half.to_string_with(&vs), "x + 2*y");
        assert_eq!(p.scale(&rat(0)), Polynomial::zero(g));
    }
}
