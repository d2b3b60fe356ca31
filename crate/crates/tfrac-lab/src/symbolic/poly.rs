//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! Invariants:
//! - A `Monomial` stores (symbol, exponent) pairs sorted by symbol, with no
//!   zero exponents; the empty list is the unit monomial.
//! - A `Poly` maps monomials to nonzero coefficients; the empty map is 0.
//! - Equality is structural, so canonical form is maintained on every
//!   operation.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::symbol::IndexedSymbol;

/// A power product of indexed symbols.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial {
    exponents: Vec<(IndexedSymbol, u32)>,
}

impl Monomial {
    pub fn unit() -> Self {
        Monomial::default()
    }

    pub fn var(s: IndexedSymbol) -> Self {
        Monomial {
            exponents: vec![(s, 1)],
        }
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.exponents.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent_of(&self, s: IndexedSymbol) -> u32 {
        self.exponents
            .iter()
            .find(|&&(t, _)| t == s)
            .map_or(0, |&(_, e)| e)
    }

    pub fn iter(&self) -> impl Iterator<Item = (IndexedSymbol, u32)> + '_ {
        self.exponents.iter().copied()
    }

    /// Merge two sorted exponent lists, adding exponents.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.exponents.len() + other.exponents.len());
        let (mut i, mut j) = (0, 0);
        while i < self.exponents.len() && j < other.exponents.len() {
            let (sa, ea) = self.exponents[i];
            let (sb, eb) = other.exponents[j];
            match sa.cmp(&sb) {
                std::cmp::Ordering::Less => {
                    out.push((sa, ea));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((sb, eb));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((sa, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.exponents[i..]);
        out.extend_from_slice(&other.exponents[j..]);
        Monomial { exponents: out }
    }

    fn from_pairs(mut pairs: Vec<(IndexedSymbol, u32)>) -> Monomial {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort();
        Monomial { exponents: pairs }
    }
}

/// A sparse multivariate polynomial with `BigInt` coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Monomial::unit(), c);
        }
        p
    }

    pub fn var(s: IndexedSymbol) -> Self {
        let mut p = Poly::zero();
        p.terms.insert(Monomial::var(s), BigInt::one());
        p
    }

    /// Convenience: a plain (index-free) variable by name.
    pub fn v(name: &str) -> Self {
        Poly::var(IndexedSymbol::plain(name))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// The coefficient of the unit monomial.
    pub fn constant_term(&self) -> BigInt {
        self.terms
            .get(&Monomial::unit())
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Returns the value as a constant if the polynomial has no symbols.
    pub fn as_constant(&self) -> Option<BigInt> {
        if self.terms.keys().all(|m| m.is_unit()) {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// All symbols occurring with nonzero exponent, in order.
    pub fn symbols(&self) -> Vec<IndexedSymbol> {
        let mut set = std::collections::BTreeSet::new();
        for m in self.terms.keys() {
            for (s, _) in m.iter() {
                set.insert(s);
            }
        }
        set.into_iter().collect()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute polynomials for symbols; unassigned symbols persist.
    ///
    /// The substitution is a ring homomorphism: it maps each monomial to the
    /// product of the images of its symbol powers.
    pub fn specialize(&self, assignment: &BTreeMap<IndexedSymbol, Poly>) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(c.clone());
            let mut kept: Vec<(IndexedSymbol, u32)> = Vec::new();
            for (s, e) in m.iter() {
                match assignment.get(&s) {
                    Some(image) => term = &term * &image.pow(e),
                    None => kept.push((s, e)),
                }
            }
            if !kept.is_empty() {
                let residual = Monomial::from_pairs(kept);
                let mut shifted = Poly::zero();
                for (tm, tc) in term.terms {
                    shifted.add_term(tm.mul(&residual), tc);
                }
                term = shifted;
            }
            out = &out + &term;
        }
        out
    }

    /// Substitute integer values for every symbol; fails if any symbol is
    /// missing from the assignment.
    pub fn eval(&self, assignment: &BTreeMap<IndexedSymbol, BigInt>) -> Option<BigInt> {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (s, e) in m.iter() {
                let x = assignment.get(&s)?;
                for _ in 0..e {
                    v *= x;
                }
            }
            total += v;
        }
        Some(total)
    }

    /// Canonical text form: terms in monomial order, explicit exponents.
    ///
    /// Examples: `0`, `3`, `-x1`, `2*a(0,1)^2*y1 + 5`.
    pub fn to_canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_unit() {
                factors.push(abs.to_string());
            }
            for (s, e) in m.iter() {
                if e == 1 {
                    factors.push(s.to_string());
                } else {
                    factors.push(format!("{}^{}", s, e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }

    /// Parse the canonical text form produced by `to_canonical_string`.
    ///
    /// Accepts any sum of terms `\[sign\] \[int\] ['*' symbol ['^' exp]]...`
    /// where a symbol is `name`, `name(i)` or `name(i,j)`.
    pub fn parse(input: &str) -> Result<Poly, PolyParseError> {
        Parser::new(input).parse_poly()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid polynomial text at byte {at}: {msg}")]
pub struct PolyParseError {
    pub at: usize,
    pub msg: String,
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: &str) -> Result<T, PolyParseError> {
        Err(PolyParseError {
            at: self.pos,
            msg: msg.to_owned(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn parse_uint(&mut self) -> Result<BigInt, PolyParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected integer");
        }
        let s = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        Ok(s.parse().unwrap())
    }

    fn parse_name(&mut self) -> Result<String, PolyParseError> {
        let start = self.pos;
        while self
            .peek()
            .is_some_and(|b| b.is_ascii_alphanumeric() || b == b'_')
        {
            self.pos += 1;
        }
        if start == self.pos || self.bytes[start].is_ascii_digit() {
            return self.err("expected symbol name");
        }
        Ok(std::str::from_utf8(&self.bytes[start..self.pos])
            .unwrap()
            .to_owned())
    }

    fn parse_symbol(&mut self) -> Result<IndexedSymbol, PolyParseError> {
        let name = self.parse_name()?;
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let i = self.parse_uint()?;
            let sym = if self.peek() == Some(b',') {
                self.pos += 1;
                let j = self.parse_uint()?;
                IndexedSymbol::two(&name, to_usize(&i), to_usize(&j))
            } else {
                IndexedSymbol::one(&name, to_usize(&i))
            };
            if self.peek() != Some(b')') {
                return self.err("expected ')'");
            }
            self.pos += 1;
            Ok(sym)
        } else {
            Ok(IndexedSymbol::plain(&name))
        }
    }

    fn parse_term(&mut self) -> Result<(Monomial, BigInt), PolyParseError> {
        let mut coeff = BigInt::one();
        let mut pairs: Vec<(IndexedSymbol, u32)> = Vec::new();
        let mut first = true;
        loop {
            self.skip_ws();
            match self.peek() {
                Some(b) if b.is_ascii_digit() => {
                    coeff *= self.parse_uint()?;
                }
                Some(b) if b.is_ascii_alphabetic() || b == b'_' => {
                    let sym = self.parse_symbol()?;
                    let exp = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        let e = self.parse_uint()?;
                        to_usize(&e) as u32
                    } else {
                        1
                    };
                    pairs.push((sym, exp));
                }
                _ if first => return self.err("expected term"),
                _ => return self.err("expected factor"),
            }
            first = false;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                break;
            }
        }
        let mut merged: BTreeMap<IndexedSymbol, u32> = BTreeMap::new();
        for (s, e) in pairs {
            *merged.entry(s).or_insert(0) += e;
        }
        Ok((Monomial::from_pairs(merged.into_iter().collect()), coeff))
    }

    fn parse_poly(&mut self) -> Result<Poly, PolyParseError> {
        let mut out = Poly::zero();
        self.skip_ws();
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let (m, c) = self.parse_term()?;
            out.add_term(m, c * sign);
            self.skip_ws();
            sign = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                None => break,
                _ => return self.err("expected '+', '-' or end"),
            };
        }
        Ok(out)
    }
}

fn to_usize(b: &BigInt) -> usize {
    use num_traits::ToPrimitive;
    b.to_usize().unwrap_or(usize::MAX)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_canonical_string())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($trait:ident, $fn:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $fn(self, rhs: Poly) -> Poly {
                $trait::$fn(&self, &rhs)
            }
        }
        impl $trait<&Poly> for Poly {
            type Output = Poly;
            fn $fn(self, rhs: &Poly) -> Poly {
                $trait::$fn(&self, rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
