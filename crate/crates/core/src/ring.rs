//! Sparse polynomials in `x1, x2, ...` with coefficients in `Z[b]`.
//!
//! `b` is the formal deformation parameter. It is kept symbolic throughout and
//! only fixed to an integer by an explicit [`BetaPolynomial::specialize_beta`].
//! Integer coefficients are arbitrary precision.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is the
//! canonical display order: ascending total degree, then the exponent vector
//! `(e1, e2, ...)` lexicographically. Inside one monomial the `b`-powers are
//! printed in ascending order, so the printed form of a polynomial is unique.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element of `Z[b]`, stored sparsely by `b`-exponent.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BetaCoeff {
    terms: BTreeMap<u32, BigInt>,
}

impl BetaCoeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::monomial(0, c)
    }

    /// `c * b^k`
    pub fn monomial(k: u32, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        Self { terms }
    }

    pub fn beta_pow(k: u32) -> Self {
        Self::monomial(k, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_integer().is_some_and(|c| c.is_one())
    }

    /// `(b-exponent, integer)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coefficient(&self, k: u32) -> BigInt {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// The integer value if no positive power of `b` occurs.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `Some((k, c))` when the coefficient is exactly `c * b^k` with `c != 0`.
    pub fn as_monomial(&self) -> Option<(u32, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(k, c)| (*k, c))
        } else {
            None
        }
    }

    pub fn specialize(&self, value: &BigInt) -> BigInt {
        // Horner from the top exponent down.
        let mut acc = BigInt::zero();
        let mut last = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (&k, c) in self.terms.iter().rev() {
            for _ in k..last {
                acc *= value;
            }
            acc += c;
            last = k;
        }
        for _ in 0..last {
            acc *= value;
        }
        acc
    }

    fn add_term(&mut self, k: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(k).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&k);
        }
    }

    fn add_scaled(&mut self, other: &BetaCoeff, shift: u32, scale: &BigInt) {
        for (&k, c) in &other.terms {
            self.add_term(k + shift, &(c * scale));
        }
    }
}

impl From<i64> for BetaCoeff {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl From<BigInt> for BetaCoeff {
    fn from(c: BigInt) -> Self {
        Self::from_int(c)
    }
}

impl AddAssign<&BetaCoeff> for BetaCoeff {
    fn add_assign(&mut self, rhs: &BetaCoeff) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, c);
        }
    }
}

impl SubAssign<&BetaCoeff> for BetaCoeff {
    fn sub_assign(&mut self, rhs: &BetaCoeff) {
        for (&k, c) in &rhs.terms {
            self.add_term(k, &-c);
        }
    }
}

impl Add for &BetaCoeff {
    type Output = BetaCoeff;
    fn add(self, rhs: &BetaCoeff) -> BetaCoeff {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &BetaCoeff {
    type Output = BetaCoeff;
    fn sub(self, rhs: &BetaCoeff) -> BetaCoeff {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &BetaCoeff {
    type Output = BetaCoeff;
    fn mul(self, rhs: &BetaCoeff) -> BetaCoeff {
        let mut out = BetaCoeff::zero();
        for (&k, c) in &self.terms {
            out.add_scaled(rhs, k, c);
        }
        out
    }
}

impl Neg for &BetaCoeff {
    type Output = BetaCoeff;
    fn neg(self) -> BetaCoeff {
        BetaCoeff {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Neg for BetaCoeff {
    type Output = BetaCoeff;
    fn neg(self) -> BetaCoeff {
        -&self
    }
}

impl fmt::Display for BetaCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .map(|(&k, c)| Term {
                coeff: c.clone(),
                beta: k,
                exps: &[],
            })
            .collect();
        write_terms(f, &terms)
    }
}

impl FromStr for BetaCoeff {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let p: BetaPolynomial = s.parse()?;
        if p.max_variable().is_some() {
            return Err(Error::Parse(format!("coefficient `{s}` contains x-variables")));
        }
        Ok(p.constant_term())
    }
}

/// A monomial `x1^e1 x2^e2 ...`; the exponent vector is stored densely with
/// trailing zeros removed (`exps[0]` is the exponent of `x1`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// `x_i` (variables are numbered from 1).
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "variables are numbered from 1");
        let mut exps = vec![0; i];
        exps[i - 1] = 1;
        Self { exps }
    }

    /// Builds a monomial from the dense exponent vector `(e1, e2, ...)`.
    pub fn from_exponents(exps: impl Into<Vec<u32>>) -> Self {
        let mut m = Self { exps: exps.into() };
        m.trim();
        m
    }

    fn trim(&mut self) {
        while self.exps.last() == Some(&0) {
            self.exps.pop();
        }
    }

    /// Exponent of `x_i`.
    pub fn exponent(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.exps.get(i - 1).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    /// Nonzero `(variable, exponent)` pairs.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, e)| (i + 1, *e))
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Largest variable index present.
    pub fn max_variable(&self) -> Option<usize> {
        if self.exps.is_empty() {
            None
        } else {
            Some(self.exps.len())
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.exps.len() >= other.exps.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut exps = long.exps.clone();
        for (e, s) in exps.iter_mut().zip(&short.exps) {
            *e += s;
        }
        Monomial { exps }
    }

    fn with_exponent(&self, i: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        if exps.len() < i {
            exps.resize(i, 0);
        }
        exps[i - 1] = e;
        let mut m = Monomial { exps };
        m.trim();
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = Term {
            coeff: BigInt::one(),
            beta: 0,
            exps: &self.exps,
        };
        write_terms(f, &[t])
    }
}

/// A polynomial in `Z[b][x1, x2, ...]`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BetaPolynomial {
    terms: BTreeMap<Monomial, BetaCoeff>,
}

impl BetaPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BetaCoeff::one())
    }

    pub fn constant(c: impl Into<BetaCoeff>) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: impl Into<BetaCoeff>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    /// `x_i`
    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i), 1)
    }

    /// The parameter `b` as a polynomial.
    pub fn beta() -> Self {
        Self::constant(BetaCoeff::beta_pow(1))
    }

    /// `1 + b*x_i`
    pub fn one_plus_beta_x(i: usize) -> Self {
        let mut p = Self::one();
        p.add_term(Monomial::var(i), &BetaCoeff::beta_pow(1));
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BetaCoeff)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, &c);
        }
        p
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

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BetaCoeff)> + '_ {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BetaCoeff {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: &BetaCoeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Highest total x-degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total x-degree, `None` for the zero polynomial.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    /// Set of variable indices that occur.
    pub fn support(&self) -> BTreeSet<usize> {
        self.terms
            .keys()
            .flat_map(|m| m.factors().map(|(i, _)| i))
            .collect()
    }

    pub fn max_variable(&self) -> Option<usize> {
        self.terms.keys().filter_map(Monomial::max_variable).max()
    }

    pub fn is_beta_free(&self) -> bool {
        self.terms.values().all(|c| c.as_integer().is_some())
    }

    pub fn constant_term(&self) -> BetaCoeff {
        self.coefficient(&Monomial::one())
    }

    pub fn scale(&self, c: &BetaCoeff) -> BetaPolynomial {
        if c.is_zero() {
            return Self::zero();
        }
        let mut out = Self::zero();
        for (m, d) in &self.terms {
            out.add_term(m.clone(), &(d * c));
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> BetaPolynomial {
        Self {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> BetaPolynomial {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Replaces `b` by the integer `c`.
    pub fn specialize_beta(&self, c: impl Into<BigInt>) -> BetaPolynomial {
        let c = c.into();
        let mut out = Self::zero();
        for (m, d) in &self.terms {
            out.add_term(m.clone(), &BetaCoeff::from_int(d.specialize(&c)));
        }
        out
    }

    /// `f(x1, ..., x_{i-1}, 0, x_i, x_{i+1}, ...)`: the variable `x_i` is set
    /// to zero and every later variable moves down one slot.
    pub fn substitute_zero_and_shift(&self, i: usize) -> BetaPolynomial {
        assert!(i >= 1, "variables are numbered from 1");
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if m.exponent(i) > 0 {
                continue;
            }
            let mut exps = m.exps.clone();
            if exps.len() >= i {
                exps.remove(i - 1);
            }
            out.add_term(Monomial::from_exponents(exps), c);
        }
        out
    }

    /// Exchanges `x_i` and `x_{i+1}`.
    pub fn swap_variables(&self, i: usize) -> BetaPolynomial {
        assert!(i >= 1, "variables are numbered from 1");
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let (a, b) = (m.exponent(i), m.exponent(i + 1));
                    let m = m.with_exponent(i, b).with_exponent(i + 1, a);
                    (m, c.clone())
                })
                .collect(),
        }
    }

    /// `f / x_i`; every monomial must contain `x_i`.
    pub fn exact_divide_by_var(&self, i: usize) -> Result<BetaPolynomial> {
        if i == 0 {
            return Err(Error::ZeroIndex);
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                return Err(Error::NonDivisible(format!("x{i}")));
            }
            terms.insert(m.with_exponent(i, e - 1), c.clone());
        }
        Ok(Self { terms })
    }

    /// `f / (x_i - x_{i+1})`, by long division in `x_i`.
    pub fn exact_divide_by_difference(&self, i: usize) -> Result<BetaPolynomial> {
        if i == 0 {
            return Err(Error::ZeroIndex);
        }
        let mut rem = self.clone();
        let mut quot = Self::zero();
        loop {
            let top = match rem.terms.keys().map(|m| m.exponent(i)).max() {
                Some(e) if e > 0 => e,
                _ => break,
            };
            let lead: Vec<(Monomial, BetaCoeff)> = rem
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(i) == top)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect();
            for (m, c) in lead {
                // c * m = c * (m / x_i) * (x_i - x_{i+1}) + c * (m / x_i) * x_{i+1}
                let q = m.with_exponent(i, top - 1);
                let carry = q.mul(&Monomial::var(i + 1));
                rem.add_term(m, &-&c);
                rem.add_term(carry, &c);
                quot.add_term(q, &c);
            }
        }
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::NonDivisible(format!("x{} - x{}", i, i + 1)))
        }
    }

    /// The homogeneous component of total degree `d`.
    pub fn homogeneous_component(&self, d: u32) -> BetaPolynomial {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Terms of minimal total x-degree.
    pub fn lowest_component(&self) -> Result<BetaPolynomial> {
        let d = self.min_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_component(d))
    }

    /// Applies `g` to every `b`-coefficient.
    pub fn map_coefficients(&self, mut g: impl FnMut(&BetaCoeff) -> BetaCoeff) -> BetaPolynomial {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &g(c));
        }
        out
    }
}

impl AddAssign<&BetaPolynomial> for BetaPolynomial {
    fn add_assign(&mut self, rhs: &BetaPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c);
        }
    }
}

impl SubAssign<&BetaPolynomial> for BetaPolynomial {
    fn sub_assign(&mut self, rhs: &BetaPolynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), &-c);
        }
    }
}

impl Add for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn add(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BetaPolynomial {
    type Output = BetaPolynomial;
    fn add(mut self, rhs: BetaPolynomial) -> BetaPolynomial {
        self += &rhs;
        self
    }
}

impl Sub for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn sub(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BetaPolynomial {
    type Output = BetaPolynomial;
    fn sub(mut self, rhs: BetaPolynomial) -> BetaPolynomial {
        self -= &rhs;
        self
    }
}

impl Mul for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn mul(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        let mut out = BetaPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Mul for BetaPolynomial {
    type Output = BetaPolynomial;
    fn mul(self, rhs: BetaPolynomial) -> BetaPolynomial {
        &self * &rhs
    }
}

impl Neg for &BetaPolynomial {
    type Output = BetaPolynomial;
    fn neg(self) -> BetaPolynomial {
        BetaPolynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for BetaPolynomial {
    type Output = BetaPolynomial;
    fn neg(self) -> BetaPolynomial {
        -&self
    }
}

impl From<i64> for BetaPolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BetaCoeff> for BetaPolynomial {
    fn from(c: BetaCoeff) -> Self {
        Self::constant(c)
    }
}

struct Term<'a> {
    coeff: BigInt,
    beta: u32,
    exps: &'a [u32],
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[Term<'_>]) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (n, t) in terms.iter().enumerate() {
        let negative = t.coeff.is_negative();
        match (n, negative) {
            (0, true) => f.write_str("-")?,
            (0, false) => {}
            (_, true) => f.write_str(" - ")?,
            (_, false) => f.write_str(" + ")?,
        }
        let mut factors: Vec<String> = Vec::new();
        let abs = t.coeff.abs();
        let has_vars = t.beta > 0 || t.exps.iter().any(|e| *e > 0);
        if !abs.is_one() || !has_vars {
            factors.push(abs.to_string());
        }
        match t.beta {
            0 => {}
            1 => factors.push("b".into()),
            k => factors.push(format!("b^{k}")),
        }
        for (i, &e) in t.exps.iter().enumerate() {
            match e {
                0 => {}
                1 => factors.push(format!("x{}", i + 1)),
                e => factors.push(format!("x{}^{}", i + 1, e)),
            }
        }
        f.write_str(&factors.join("*"))?;
    }
    Ok(())
}

impl fmt::Display for BetaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .flat_map(|(m, c)| {
                c.terms().map(move |(k, v)| Term {
                    coeff: v.clone(),
                    beta: k,
                    exps: &m.exps,
                })
            })
            .collect();
        write_terms(f, &terms)
    }
}

impl FromStr for BetaPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Parser::new(s).parse()
    }
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Self {
            chars: src.char_indices().peekable(),
            src,
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|(_, c)| c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().map(|(_, c)| *c)
    }

    fn err(&mut self, what: &str) -> Error {
        let pos = self.chars.peek().map(|(i, _)| *i).unwrap_or(self.src.len());
        Error::Parse(format!("{what} at offset {pos} in `{}`", self.src))
    }

    fn number(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(&(_, c)) = self.chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                self.chars.next();
            } else {
                break;
            }
        }
        if digits.is_empty() {
            return Err(self.err("expected a number"));
        }
        digits.parse().map_err(|_| self.err("bad number"))
    }

    fn small_number(&mut self) -> Result<u32> {
        let n = self.number()?;
        u32::try_from(n).map_err(|_| self.err("number out of range"))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some('^') {
            self.chars.next();
            self.small_number()
        } else {
            Ok(1)
        }
    }

    fn term(&mut self) -> Result<(BigInt, u32, Vec<u32>)> {
        let mut coeff = BigInt::one();
        let mut beta = 0;
        let mut exps: Vec<u32> = Vec::new();
        loop {
            match self.peek() {
                Some(c) if c.is_ascii_digit() => coeff *= self.number()?,
                Some('b') => {
                    self.chars.next();
                    beta += self.exponent()?;
                }
                Some('x') => {
                    self.chars.next();
                    let i = self.small_number()? as usize;
                    if i == 0 {
                        return Err(self.err("variables are numbered from 1"));
                    }
                    let e = self.exponent()?;
                    if exps.len() < i {
                        exps.resize(i, 0);
                    }
                    exps[i - 1] += e;
                }
                _ => return Err(self.err("expected a factor")),
            }
            if self.peek() == Some('*') {
                self.chars.next();
            } else {
                return Ok((coeff, beta, exps));
            }
        }
    }

    fn parse(mut self) -> Result<BetaPolynomial> {
        let mut out = BetaPolynomial::zero();
        let mut negative = match self.peek() {
            Some('-') => {
                self.chars.next();
                true
            }
            Some('+') => {
                self.chars.next();
                false
            }
            None => return Err(self.err("empty polynomial")),
            _ => false,
        };
        loop {
            let (c, beta, exps) = self.term()?;
            let c = if negative { -c } else { c };
            out.add_term(Monomial::from_exponents(exps), &BetaCoeff::monomial(beta, c));
            match self.peek() {
                None => return Ok(out),
                Some('+') => negative = false,
                Some('-') => negative = true,
                Some(_) => return Err(self.err("expected `+` or `-`")),
            }
            self.chars.next();
        }
    }
}
