//! Exact multivariate polynomials with big-integer coefficients over named,
//! commuting letters.
//!
//! Both [`Monomial`] and [`Polynomial`] are kept in canonical form: no stored
//! exponent is zero and no stored coefficient is zero. Terms iterate in the
//! order used for printing: lexicographic on exponent vectors, with letters
//! taken in ascending name order (so `x < xy < xy^2 < x^2 < x^2y`).

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A named indeterminate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(String);

impl Letter {
    /// Panics on an empty name; use [`Letter::try_new`] for untrusted input.
    pub fn new(name: impl Into<String>) -> Self {
        Self::try_new(name).expect("letter names must be nonempty")
    }

    pub fn try_new(name: impl Into<String>) -> Option<Self> {
        let name = name.into();
        if name.is_empty() {
            None
        } else {
            Some(Letter(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Letter {
    fn from(s: &str) -> Self {
        Letter::new(s)
    }
}

/// A product of letters raised to positive powers. The empty monomial is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(BTreeMap<Letter, u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(BTreeMap::new())
    }

    pub fn letter(letter: Letter) -> Self {
        Monomial(BTreeMap::from([(letter, 1)]))
    }

    /// Builds a monomial from `(letter, exponent)` pairs; zero exponents are
    /// dropped and repeated letters accumulate.
    pub fn from_exponents<I, L>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (L, u32)>,
        L: Into<Letter>,
    {
        let mut map = BTreeMap::new();
        for (l, e) in pairs {
            if e > 0 {
                *map.entry(l.into()).or_insert(0) += e;
            }
        }
        Monomial(map)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, letter: &Letter) -> u32 {
        self.0.get(letter).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&Letter, u32)> {
        self.0.iter().map(|(l, &e)| (l, e))
    }

    pub fn total_degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn letters(&self) -> impl Iterator<Item = &Letter> {
        self.0.keys()
    }

    /// The monomial with one factor of `letter` removed, or `None` if the
    /// letter does not occur.
    pub fn without_one(&self, letter: &Letter) -> Option<Monomial> {
        let e = *self.0.get(letter)?;
        let mut map = self.0.clone();
        if e == 1 {
            map.remove(letter);
        } else {
            map.insert(letter.clone(), e - 1);
        }
        Some(Monomial(map))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut map = self.0.clone();
        for (l, e) in &other.0 {
            *map.entry(l.clone()).or_insert(0) += e;
        }
        Monomial(map)
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, style: Style) -> fmt::Result {
        let sep = match style {
            Style::Juxtaposed => "",
            Style::Explicit => "*",
        };
        for (idx, (l, e)) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(sep)?;
            }
            if *e == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{l}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let mut a = self.0.iter().peekable();
        let mut b = other.0.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((la, ea)), Some((lb, eb))) => match la.cmp(lb) {
                    // `la` is absent from `other`, i.e. exponent 0 there.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(eb) {
                        Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// How products are rendered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// `3xy^2`: letters juxtaposed, as in typeset mathematics. Only
    /// unambiguous for single-character letter names.
    Juxtaposed,
    /// `3*x*y^2`: the rule-DSL syntax, re-parseable.
    Explicit,
}

/// A polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn letter(name: impl Into<Letter>) -> Self {
        Polynomial::term(1, Monomial::letter(name.into()))
    }

    pub fn term(c: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(m, c.into());
        p
    }

    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c·m`, removing the entry if the coefficient cancels to zero.
    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
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

    /// Terms in printing order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn letters(&self) -> BTreeSet<Letter> {
        self.terms
            .keys()
            .flat_map(|m| m.letters().cloned())
            .collect()
    }

    /// Sum of all coefficients, i.e. the value at every letter equal to 1.
    pub fn coeff_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &BigInt) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn to_text(&self, style: Style) -> String {
        Rendered { poly: self, style }.to_string()
    }
}

struct Rendered<'a> {
    poly: &'a Polynomial,
    style: Style,
}

impl fmt::Display for Rendered<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}")?;
                    if self.style == Style::Explicit {
                        f.write_str("*")?;
                    }
                }
                m.write(f, self.style)?;
            }
        }
        Ok(())
    }
}

/// Renders in the explicit (re-parseable) style.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Rendered {
            poly: self,
            style: Style::Explicit,
        }
        .fmt(f)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(mut self, rhs: Polynomial) -> Polynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    exponents: BTreeMap<String, u32>,
    coeff: String,
}

/// Serialized as an array of `{exponents: {letter: int}, coeff: "decimal"}`
/// records in printing order. Coefficients are strings so that no precision
/// is lost in transit.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let records: Vec<TermRecord> = self
            .terms
            .iter()
            .map(|(m, c)| TermRecord {
                exponents: m.exponents().map(|(l, e)| (l.to_string(), e)).collect(),
                coeff: c.to_string(),
            })
            .collect();
        records.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let records = Vec::<TermRecord>::deserialize(d)?;
        let mut p = Polynomial::zero();
        for r in records {
            let c: BigInt = r
                .coeff
                .parse()
                .map_err(|_| D::Error::custom(format!("invalid coefficient {:?}", r.coeff)))?;
            let mut pairs = Vec::with_capacity(r.exponents.len());
            for (name, e) in r.exponents {
                let l =
                    Letter::try_new(name).ok_or_else(|| D::Error::custom("empty letter name"))?;
                pairs.push((l, e));
            }
            p.add_term(Monomial::from_exponents(pairs), c);
        }
        Ok(p)
    }
}
