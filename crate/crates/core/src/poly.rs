//! Sparse exact polynomials in at most four variables.
//!
//! The same [`Polynomial`] type represents elements of the polynomial ring
//! `R = k[x1..xr]` and dual forms in the divided-power algebra
//! `S = k_DP[X1..Xr]`; which side a value lives on is decided by how it is
//! used. [`Polynomial::contract`] implements the action of `R` on `S`:
//! `x^b o X^a = X^(a-b)` when `a >= b` componentwise and `0` otherwise, with
//! no numeric factor.
//!
//! Monomials are ordered graded-lexicographically with `x1 > x2 > ... > xr`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

pub const MAX_VARS: usize = 4;
const VAR_NAMES: [char; MAX_VARS] = ['x', 'y', 'z', 'w'];

pub fn check_varcount(r: usize) -> Result<()> {
    if (1..=MAX_VARS).contains(&r) {
        Ok(())
    } else {
        Err(Error::VariableCount(r))
    }
}

/// Name of variable `i` on the ring side (`x`, `y`, ...).
pub fn variable_name(i: usize) -> char {
    VAR_NAMES[i]
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u32,
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        Monomial { degree, exponents }
    }

    pub fn one(varcount: usize) -> Self {
        Self::new(vec![0; varcount])
    }

    pub fn variable(varcount: usize, i: usize) -> Self {
        let mut e = vec![0; varcount];
        e[i] = 1;
        Self::new(e)
    }

    pub fn pure_power(varcount: usize, i: usize, e: u32) -> Self {
        let mut v = vec![0; varcount];
        v[i] = e;
        Self::new(v)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn varcount(&self) -> usize {
        self.exponents.len()
    }

    pub fn multiply(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree + other.degree,
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    /// `self o other` for monomials: `other / self` when `self` divides it.
    pub fn contract(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            degree: other.degree - self.degree,
            exponents: other
                .exponents
                .iter()
                .zip(&self.exponents)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// The single variable index when this is a pure power `x_i^e`, `e > 0`.
    pub fn pure_power_index(&self) -> Option<usize> {
        let mut nz = self.exponents.iter().enumerate().filter(|(_, &e)| e > 0);
        let (i, _) = nz.next()?;
        nz.next().is_none().then_some(i)
    }

    fn write_factors(&self, f: &mut fmt::Formatter<'_>, upper: bool) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            let name = if upper {
                VAR_NAMES[i].to_ascii_uppercase()
            } else {
                VAR_NAMES[i]
            };
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write_factors(f, false)
    }
}

/// All monomials of the given degree, largest first in grlex
/// (`x^2, xy, xz, y^2, yz, z^2` for degree 2 in three variables).
pub fn monomial_basis(degree: u32, varcount: usize) -> Vec<Monomial> {
    fn fill(rest: u32, pos: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos + 1 == cur.len() {
            cur[pos] = rest;
            out.push(Monomial::new(cur.clone()));
            return;
        }
        for e in (0..=rest).rev() {
            cur[pos] = e;
            fill(rest - e, pos + 1, cur, out);
        }
    }
    let mut out = Vec::new();
    if varcount == 0 {
        if degree == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return out;
    }
    fill(degree, 0, &mut vec![0; varcount], &mut out);
    out
}

/// `C(degree + r - 1, r - 1)`, the number of monomials of a degree.
pub fn monomial_count(degree: u32, varcount: usize) -> usize {
    let n = degree as usize + varcount - 1;
    let k = varcount - 1;
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: FieldSpec,
    varcount: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(field: FieldSpec, varcount: usize) -> Self {
        Polynomial {
            field,
            varcount,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(field: FieldSpec, varcount: usize, c: Scalar) -> Self {
        Self::from_term(field, Monomial::one(varcount), c)
    }

    pub fn one(field: FieldSpec, varcount: usize) -> Self {
        Self::constant(field, varcount, field.one())
    }

    pub fn variable(field: FieldSpec, varcount: usize, i: usize) -> Self {
        Self::from_term(field, Monomial::variable(varcount, i), field.one())
    }

    pub fn from_monomial(field: FieldSpec, m: Monomial) -> Self {
        Self::from_term(field, m, field.one())
    }

    fn from_term(field: FieldSpec, m: Monomial, c: Scalar) -> Self {
        let mut p = Self::zero(field, m.varcount());
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, combining
    /// repeated monomials and dropping zero coefficients.
    pub fn from_terms(
        field: FieldSpec,
        varcount: usize,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Result<Self> {
        let mut p = Self::zero(field, varcount);
        for (m, c) in terms {
            if m.varcount() != varcount || c.field() != field {
                return Err(Error::DomainMismatch);
            }
            p.add_term(m, c);
        }
        Ok(p)
    }

    /// Coordinates against a monomial basis, as a polynomial.
    pub fn from_coordinates(
        field: FieldSpec,
        varcount: usize,
        basis: &[Monomial],
        coords: &[Scalar],
    ) -> Self {
        let mut p = Self::zero(field, varcount);
        for (m, c) in basis.iter().zip(coords) {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn varcount(&self) -> usize {
        self.varcount
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

    /// Terms in increasing grlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            field: self.field,
            varcount: self.varcount,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coordinates against a monomial basis of one degree. Terms outside
    /// the basis are ignored.
    pub fn coordinates(&self, basis: &[Monomial]) -> Vec<Scalar> {
        basis.iter().map(|m| self.coefficient(m)).collect()
    }

    fn check_compatible(&self, other: &Polynomial) -> Result<()> {
        if self.field != other.field || self.varcount != other.varcount {
            Err(Error::DomainMismatch)
        } else {
            Ok(())
        }
    }

    pub fn plus(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn minus(&self, other: &Polynomial) -> Result<Polynomial> {
        self.plus(&other.negate())
    }

    pub fn negate(&self) -> Polynomial {
        self.scale(&-self.field.one())
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        let mut out = Self::zero(self.field, self.varcount);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    pub fn multiply(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.field, self.varcount);
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.multiply(n), a * b);
            }
        }
        Ok(out)
    }

    /// `self^k` by repeated squaring in the field, so multinomial
    /// coefficients are reduced as they arise.
    pub fn power(&self, k: u32) -> Polynomial {
        let mut acc = Self::one(self.field, self.varcount);
        let mut base = self.clone();
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.multiply(&base).expect("same domain");
            }
            e >>= 1;
            if e > 0 {
                base = base.multiply(&base).expect("same domain");
            }
        }
        acc
    }

    /// Contraction `self o f`, with `self` in `R` and `f` in `S`.
    pub fn contract(&self, f: &Polynomial) -> Result<Polynomial> {
        self.check_compatible(f)?;
        let mut out = Self::zero(self.field, self.varcount);
        for (b, rb) in &self.terms {
            for (a, fa) in &f.terms {
                if let Some(m) = b.contract(a) {
                    out.add_term(m, rb * fa);
                }
            }
        }
        Ok(out)
    }

    /// Ordinary evaluation at a point.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar> {
        if point.len() != self.varcount {
            return Err(Error::Shape(format!(
                "point of length {} for {} variables",
                point.len(),
                self.varcount
            )));
        }
        if point.iter().any(|a| a.field() != self.field) {
            return Err(Error::DomainMismatch);
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (a, &e) in point.iter().zip(m.exponents()) {
                t = t * a.pow(e);
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Parses the ASCII grammar
    /// `poly ::= term (('+'|'-') term)*`, `term ::= [coeff '*'] factor ('*' factor)*`,
    /// `factor ::= var ['^' nat]`. A term may also be a bare coefficient and
    /// the first term may carry a sign. Variables are case-insensitive;
    /// `a/b` coefficients are accepted over `Q` only.
    pub fn parse(text: &str, varcount: usize, field: FieldSpec) -> Result<Polynomial> {
        check_varcount(varcount)?;
        Parser::new(text, varcount, field).parse()
    }

    /// Printed form that [`Polynomial::parse`] reads back; `upper` selects
    /// the dual-side spelling `X, Y, Z`.
    pub fn to_string_with(&self, upper: bool) -> String {
        struct Show<'a>(&'a Polynomial, bool);
        impl fmt::Display for Show<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.write(f, self.1)
            }
        }
        Show(self, upper).to_string()
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, upper: bool) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (idx, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.degree() == 0 {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                m.write_factors(f, upper)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, false)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    varcount: usize,
    field: FieldSpec,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, varcount: usize, field: FieldSpec) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
            varcount,
            field,
        }
    }

    fn syntax<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.pos,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn parse(mut self) -> Result<Polynomial> {
        let mut poly = Polynomial::zero(self.field, self.varcount);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            None => return self.syntax("empty polynomial"),
            _ => 1,
        };
        loop {
            let (m, c) = self.term()?;
            let c = if sign < 0 { -c } else { c };
            poly.add_term(m, c);
            match self.peek() {
                None => break,
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(ch) => return self.syntax(format!("unexpected `{}`", ch as char)),
            }
            self.pos += 1;
        }
        Ok(poly)
    }

    fn term(&mut self) -> Result<(Monomial, Scalar)> {
        let mut exps = vec![0u32; self.varcount];
        let mut coeff = self.field.one();
        let mut need_factor = true;
        if matches!(self.peek(), Some(b'0'..=b'9')) {
            coeff = self.coefficient()?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
            } else {
                need_factor = false;
            }
        }
        if need_factor {
            loop {
                self.factor(&mut exps)?;
                if self.peek() == Some(b'*') {
                    self.pos += 1;
                } else {
                    break;
                }
            }
        }
        Ok((Monomial::new(exps), coeff))
    }

    fn natural(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.syntax("expected a number");
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        Ok(digits.parse().expect("digits parse as an integer"))
    }

    fn coefficient(&mut self) -> Result<Scalar> {
        let numer = self.natural()?;
        if self.peek() == Some(b'/') {
            let slash = self.pos;
            self.pos += 1;
            if !self.field.is_rational() {
                self.pos = slash;
                return self.syntax("fractional coefficients are only allowed over Q");
            }
            let denom = self.natural()?;
            if denom == BigInt::from(0) {
                return self.syntax("zero denominator");
            }
            return self.field.ratio(&numer, &denom);
        }
        Ok(self.field.from_bigint(&numer))
    }

    fn factor(&mut self, exps: &mut [u32]) -> Result<()> {
        self.skip_ws();
        let start = self.pos;
        let Some(&ch) = self.bytes.get(self.pos) else {
            return self.syntax("expected a variable");
        };
        if !ch.is_ascii_alphabetic() {
            return self.syntax(format!("expected a variable, found `{}`", ch as char));
        }
        self.pos += 1;
        let lower = ch.to_ascii_lowercase() as char;
        let idx = VAR_NAMES[..self.varcount]
            .iter()
            .position(|&v| v == lower)
            .ok_or_else(|| Error::UnknownVariable {
                position: start,
                name: (ch as char).to_string(),
            })?;
        let mut e = 1u64;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let n = self.natural()?;
            e = match u64::try_from(&n) {
                Ok(v) if v <= 1 << 31 => v,
                _ => return Err(Error::ExponentOverflow { position: at }),
            };
        }
        let total = exps[idx] as u64 + e;
        if total > 1 << 31 {
            return Err(Error::ExponentOverflow { position: start });
        }
        exps[idx] = total as u32;
        Ok(())
    }
}

/// A linear form `a1 x1 + ... + ar xr`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coefficients: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(coefficients: Vec<Scalar>) -> Result<Self> {
        check_varcount(coefficients.len())?;
        let f = coefficients[0].field();
        if coefficients.iter().any(|c| c.field() != f) {
            return Err(Error::DomainMismatch);
        }
        Ok(LinearForm { coefficients })
    }

    pub fn from_i64(field: FieldSpec, coefficients: &[i64]) -> Result<Self> {
        Self::new(coefficients.iter().map(|&c| field.from_i64(c)).collect())
    }

    /// `x1 + ... + xr`.
    pub fn all_ones(field: FieldSpec, varcount: usize) -> Self {
        LinearForm {
            coefficients: vec![field.one(); varcount],
        }
    }

    pub fn from_polynomial(p: &Polynomial) -> Result<Self> {
        if p.terms().any(|(m, _)| m.degree() != 1) {
            return Err(Error::Precondition(format!(
                "`{p}` is not a linear form"
            )));
        }
        let r = p.varcount();
        Self::new(
            (0..r)
                .map(|i| p.coefficient(&Monomial::variable(r, i)))
                .collect(),
        )
    }

    pub fn parse(text: &str, varcount: usize, field: FieldSpec) -> Result<Self> {
        Self::from_polynomial(&Polynomial::parse(text, varcount, field)?)
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coefficients
    }

    pub fn field(&self) -> FieldSpec {
        self.coefficients[0].field()
    }

    pub fn varcount(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.iter().all(Scalar::is_zero)
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let r = self.varcount();
        let mut p = Polynomial::zero(self.field(), r);
        for (i, c) in self.coefficients.iter().enumerate() {
            p.add_term(Monomial::variable(r, i), c.clone());
        }
        p
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

impl serde::Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl serde::Serialize for LinearForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
