//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Variables are structured identifiers ([`Var`]): a short static name plus
//! an index such as a matrix position or a subset bitmask. The derived
//! ordering on [`Var`] is the declared variable order; monomials are compared
//! lexicographically on exponent vectors under that order, which fixes the
//! term order used for printing and serialization.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{SerializeSeq, SerializeTuple};
use serde::{Serialize, Serializer};

use super::rational::Rational;
use crate::error::{Error, Result};

/// Index part of a variable name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarIndex {
    Scalar,
    One(u32),
    Pair(u32, u32),
    /// A subset of `{1, 2, ...}` stored as a bitmask (bit `i-1` for element `i`).
    Set(u32),
    /// A pair of subsets, e.g. row and column index sets of a minor.
    SetPair(u32, u32),
}

/// A polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub name: &'static str,
    pub index: VarIndex,
}

impl Var {
    pub const fn scalar(name: &'static str) -> Self {
        Var { name, index: VarIndex::Scalar }
    }

    pub const fn one(name: &'static str, i: u32) -> Self {
        Var { name, index: VarIndex::One(i) }
    }

    pub const fn pair(name: &'static str, i: u32, j: u32) -> Self {
        Var { name, index: VarIndex::Pair(i, j) }
    }

    pub const fn set(name: &'static str, mask: u32) -> Self {
        Var { name, index: VarIndex::Set(mask) }
    }

    pub const fn set_pair(name: &'static str, a: u32, b: u32) -> Self {
        Var { name, index: VarIndex::SetPair(a, b) }
    }

    /// Same index, different name.
    pub const fn renamed(self, name: &'static str) -> Self {
        Var { name, index: self.index }
    }
}

fn write_mask(f: &mut fmt::Formatter<'_>, mask: u32) -> fmt::Result {
    let mut first = true;
    for i in 0..32 {
        if mask & (1 << i) != 0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
            first = false;
        }
    }
    Ok(())
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name)?;
        match self.index {
            VarIndex::Scalar => Ok(()),
            VarIndex::One(i) => write!(f, "{i}"),
            VarIndex::Pair(i, j) => write!(f, "[{i},{j}]"),
            VarIndex::Set(m) => {
                f.write_str("{")?;
                write_mask(f, m)?;
                f.write_str("}")
            }
            VarIndex::SetPair(a, b) => {
                f.write_str("{")?;
                write_mask(f, a)?;
                f.write_str("|")?;
                write_mask(f, b)?;
                f.write_str("}")
            }
        }
    }
}

impl Serialize for Var {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Exponent vector: sorted `(variable, exponent)` pairs with no zero exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary pairs; repeated variables are merged
    /// and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (Var, u32)>>(pairs: I) -> Self {
        let mut map: BTreeMap<Var, u32> = BTreeMap::new();
        for (v, e) in pairs {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|&(_, e)| e > 0).collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        match self.0.binary_search_by(|(w, _)| w.cmp(&v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (Var, u32)> + '_ {
        self.0.iter().copied()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.0.iter().map(|&(v, _)| v)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                if f > e {
                    return None;
                }
                if e > f {
                    out.push((v, e - f));
                }
                j += 1;
            } else if j < other.0.len() && other.0[j].0 < v {
                return None;
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Removes `v` from the monomial, returning the remaining part and the
    /// exponent that `v` had.
    pub fn split_off(&self, v: Var) -> (Monomial, u32) {
        let e = self.exponent(v);
        let rest = self.0.iter().copied().filter(|&(w, _)| w != v).collect();
        (Monomial(rest), e)
    }
}

impl Ord for Monomial {
    /// Lexicographic order on exponent vectors: at the first variable (in
    /// declared order) where the exponents differ, the larger exponent wins.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let n = a.len().min(b.len());
        for i in 0..n {
            match a[i].0.cmp(&b[i].0) {
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match a[i].1.cmp(&b[i].1) {
                    Ordering::Equal => {}
                    o => return o,
                },
            }
        }
        a.len().cmp(&b.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, &(v, e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

struct VarPower(Var, u32);

impl Serialize for VarPower {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut t = serializer.serialize_tuple(2)?;
        t.serialize_element(&self.0)?;
        t.serialize_element(&self.1)?;
        t.end()
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.0.len()))?;
        for &(v, e) in &self.0 {
            seq.serialize_element(&VarPower(v, e))?;
        }
        seq.end()
    }
}

/// Multivariate polynomial over the rationals.
///
/// Zero coefficients are never stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparsePolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

pub type Bindings = BTreeMap<Var, SparsePolynomial>;

impl SparsePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Rational::from(c))
    }

    pub fn var(v: Var) -> Self {
        Self::term(Rational::one(), Monomial::var(v))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SparsePolynomial { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
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

    /// Terms from the lexicographically largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn coefficient_of(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The constant term.
    pub fn constant_term(&self) -> Rational {
        self.coefficient_of(&Monomial::one())
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePolynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePolynomial {
            terms: self.terms.iter().map(|(m, a)| (m.mul(mono), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Coefficient of `v^e`, as a polynomial in the remaining variables.
    pub fn coefficient_in(&self, v: Var, e: u32) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (rest, f) = m.split_off(v);
            if f == e {
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Composition: every bound variable is replaced by its image, unbound
    /// variables are kept.
    pub fn substitute(&self, bindings: &Bindings) -> Self {
        let mut powers: HashMap<(Var, u32), SparsePolynomial> = HashMap::new();
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut free = Vec::new();
            let mut acc = SparsePolynomial::one();
            for (v, e) in m.iter() {
                match bindings.get(&v) {
                    Some(img) => {
                        let p = powers.entry((v, e)).or_insert_with(|| img.pow(e));
                        acc = &acc * &*p;
                    }
                    None => free.push((v, e)),
                }
            }
            let free = Monomial(free);
            for (m2, c2) in acc.terms {
                out.add_term(m2.mul(&free), c2 * c);
            }
        }
        out
    }

    /// Exact evaluation at a point that binds every variable.
    pub fn eval(&self, point: &BTreeMap<Var, Rational>) -> Result<Rational> {
        self.eval_with(|v| point.get(&v).cloned())
    }

    pub fn eval_with<F: Fn(Var) -> Option<Rational>>(&self, lookup: F) -> Result<Rational> {
        let mut cache: HashMap<Var, Rational> = HashMap::new();
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut val = c.clone();
            for (v, e) in m.iter() {
                let x = match cache.get(&v) {
                    Some(x) => x.clone(),
                    None => {
                        let x = lookup(v).ok_or_else(|| Error::UnboundVariable(v.to_string()))?;
                        cache.insert(v, x.clone());
                        x
                    }
                };
                val *= &x.pow(e);
            }
            total += val;
        }
        Ok(total)
    }

    /// Keeps only the terms satisfying `keep`.
    pub fn filter_terms<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Self {
        SparsePolynomial {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a linear map on monomials: each monomial is sent to a signed
    /// monomial or to zero.
    pub fn map_monomials<F: Fn(&Monomial) -> Option<(Monomial, Rational)>>(&self, f: F) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            if let Some((m2, s)) = f(m) {
                out.add_term(m2, s * c);
            }
        }
        out
    }

    /// Canonical text form: terms in descending lexicographic order with
    /// explicit rational coefficients.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// JSON term list in canonical order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("polynomial serializes")
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Serialize)]
struct TermRef<'a> {
    coefficient: &'a Rational,
    monomial: &'a Monomial,
}

impl Serialize for SparsePolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&TermRef { coefficient: c, monomial: m })?;
        }
        seq.end()
    }
}

impl From<Rational> for SparsePolynomial {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<Var> for SparsePolynomial {
    fn from(v: Var) -> Self {
        Self::var(v)
    }
}

impl<'a> Add<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        let (big, small) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(mut self, rhs: SparsePolynomial) -> SparsePolynomial {
        if self.len() < rhs.len() {
            return rhs + self;
        }
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<'a> Sub<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(mut self, rhs: SparsePolynomial) -> SparsePolynomial {
        for (m, c) in rhs.terms {
            self.add_term(m, -c);
        }
        self
    }
}

impl<'a> Mul<&'a SparsePolynomial> for &'a SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &'a SparsePolynomial) -> SparsePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return SparsePolynomial::zero();
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.len().saturating_mul(rhs.len()).min(1 << 16));
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m = m1.mul(m2);
                let c = c1 * c2;
                match acc.get_mut(&m) {
                    Some(x) => *x += c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        SparsePolynomial {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: SparsePolynomial) -> SparsePolynomial {
        &self * &rhs
    }
}

impl Neg for SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        SparsePolynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        -self.clone()
    }
}

impl std::iter::Sum for SparsePolynomial {
    fn sum<I: Iterator<Item = SparsePolynomial>>(iter: I) -> Self {
        iter.fold(SparsePolynomial::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for SparsePolynomial {
    fn product<I: Iterator<Item = SparsePolynomial>>(iter: I) -> Self {
        iter.fold(SparsePolynomial::one(), |a, b| &a * &b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> SparsePolynomial {
        SparsePolynomial::var(Var::scalar("x"))
    }
    fn y() -> SparsePolynomial {
        SparsePolynomial::var(Var::scalar("y"))
    }
    fn c(n: i64, d: i64) -> SparsePolynomial {
        SparsePolynomial::constant(Rational::new(n, d))
    }

    #[test]
    fn add_cancels_and_prunes() {
        let p = &x() + &SparsePolynomial::one();
        assert_eq!(&p + &(-x()), SparsePolynomial::one());
        assert_eq!(&p + &SparsePolynomial::zero(), p);
        let q = &c(2, 3) * &x().pow(2);
        let r = &c(1, 3) * &x().pow(2);
        assert_eq!(&q + &r, x().pow(2));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&(&x() - &y()) * &(&x() + &y()), &x().pow(2) - &y().pow(2));
        let p = &x() + &c(3, 4);
        assert_eq!(&p * &SparsePolynomial::one(), p);
    }

    #[test]
    fn discriminant_expansion_matches_hand_expansion() {
        let v = |i| SparsePolynomial::var(Var::one("x", i));
        let d = &(&(&v(1) - &v(2)) * &(&v(1) - &v(3))) * &(&v(2) - &v(3));
        assert_eq!(d.len(), 6);
        // Leibniz expansion of det [[x1^2, x1, 1], [x2^2, x2, 1], [x3^2, x3, 1]].
        let mono = |a: u32, b: u32, c: u32| {
            Monomial::from_pairs([(Var::one("x", 1), a), (Var::one("x", 2), b), (Var::one("x", 3), c)])
        };
        let expected = SparsePolynomial::from_terms([
            (mono(2, 1, 0), Rational::from(1)),
            (mono(2, 0, 1), Rational::from(-1)),
            (mono(1, 2, 0), Rational::from(-1)),
            (mono(0, 2, 1), Rational::from(1)),
            (mono(1, 0, 2), Rational::from(1)),
            (mono(0, 1, 2), Rational::from(-1)),
        ]);
        assert_eq!(d, expected);
    }

    #[test]
    fn substitute_examples() {
        let a = SparsePolynomial::var(Var::scalar("a"));
        let b = SparsePolynomial::var(Var::scalar("b"));
        let mut bind = Bindings::new();
        bind.insert(Var::scalar("x"), &a + &b);
        let got = x().pow(2).substitute(&bind);
        let two_ab = &(&a * &b) * &SparsePolynomial::int(2);
        assert_eq!(got, &(&a.pow(2) + &two_ab) + &b.pow(2));

        let p = &(&x() * &y()) + &c(-5, 2);
        let mut ident = Bindings::new();
        ident.insert(Var::scalar("x"), x());
        ident.insert(Var::scalar("y"), y());
        assert_eq!(p.substitute(&ident), p);
    }

    #[test]
    fn eval_examples() {
        let p = &x().pow(2) + &SparsePolynomial::one();
        let mut pt = BTreeMap::new();
        pt.insert(Var::scalar("x"), Rational::from(2));
        assert_eq!(p.eval(&pt).unwrap(), Rational::from(5));
        assert_eq!(SparsePolynomial::zero().eval(&pt).unwrap(), Rational::zero());
        assert!(matches!(y().eval(&pt), Err(Error::UnboundVariable(_))));
    }

    #[test]
    fn coefficient_examples() {
        let p = &x() + &y();
        assert_eq!(p.coefficient_of(&Monomial::var(Var::scalar("x"))), Rational::one());
        let q = (&x() + &SparsePolynomial::one()).pow(2);
        let x3 = Monomial::from_pairs([(Var::scalar("x"), 3)]);
        assert_eq!(q.coefficient_of(&x3), Rational::zero());
    }

    #[test]
    fn text_form_is_sorted() {
        let p = &(&c(-3, 2) * &y()) + &(&x().pow(2) + &SparsePolynomial::one());
        assert_eq!(p.to_text(), "x^2 - 3/2*y + 1");
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"coefficient":"1","monomial":[["x",2]]},{"coefficient":"-3/2","monomial":[["y",1]]},{"coefficient":"1","monomial":[]}]"#
        );
    }

    #[test]
    fn monomial_division() {
        let m = Monomial::from_pairs([(Var::scalar("x"), 2), (Var::scalar("y"), 1)]);
        let d = Monomial::from_pairs([(Var::scalar("x"), 1)]);
        assert_eq!(m.div(&d), Some(Monomial::from_pairs([(Var::scalar("x"), 1), (Var::scalar("y"), 1)])));
        assert_eq!(d.div(&m), None);
    }

    #[test]
    fn var_display() {
        assert_eq!(Var::set_pair("x", 0b11, 0b101).to_string(), "x{1,2|1,3}");
        assert_eq!(Var::pair("a", 1, 2).to_string(), "a[1,2]");
        assert_eq!(Var::set("p", 0b1010).to_string(), "p{2,4}");
    }
}
