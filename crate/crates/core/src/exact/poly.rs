use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::Rational;
use crate::error::Error;

/// Polynomial in two variables with exact rational coefficients.
///
/// The first variable is written `q` and the second `t`; the Tutte-polynomial
/// conversion reuses the same slots for `x` and `y`. Zero coefficients are
/// never stored, so derived equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn monomial(deg_q: u32, deg_t: u32, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(deg_q, deg_t, c);
        p
    }

    pub fn q() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn t() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    /// `(1 + t)^exp`, expanded with binomial coefficients.
    pub fn one_plus_t_pow(exp: u32) -> Self {
        let mut p = Self::zero();
        let mut c = num_bigint::BigInt::from(1u32);
        for k in 0..=exp {
            p.add_term(0, k, Rational::from_integer(c.clone()));
            c = c * (exp - k) / (k + 1);
        }
        p
    }

    /// Adds `c * q^dq * t^dt` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, deg_q: u32, deg_t: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((deg_q, deg_t)) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, deg_q: u32, deg_t: u32) -> Rational {
        self.terms
            .get(&(deg_q, deg_t))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in lexicographic `(deg_q, deg_t)` order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, &Rational)> {
        self.terms.iter().map(|(&(a, b), c)| (a, b, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree_q(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    pub fn degree_t(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.1).max()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(a, b), v) in &self.terms {
            out.add_term(a, b, v * c);
        }
        out
    }

    /// Multiplies by `q^dq t^dt`.
    pub fn shift(&self, dq: u32, dt: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + dq, b + dt), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
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

    /// Exact evaluation at `(q, t)`.
    pub fn eval(&self, q: &Rational, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * &q.pow(a) * t.pow(b);
        }
        acc
    }

    /// Substitutes a value for `q`, leaving a polynomial in `t`.
    pub fn eval_q(&self, q: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(0, b, c * &q.pow(a));
        }
        out
    }

    /// Substitutes a value for `t`, leaving a polynomial in `q`.
    pub fn eval_t(&self, t: &Rational) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term(a, 0, c * &t.pow(b));
        }
        out
    }

    /// The part of the polynomial free of `q`.
    pub fn q_free_part(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.0 == 0)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    /// `p(q + dq, t + dt)`.
    pub fn translate(&self, dq: &Rational, dt: &Rational) -> Self {
        let lin_q = &Self::q() + &Self::constant(dq.clone());
        let lin_t = &Self::t() + &Self::constant(dt.clone());
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            let term = &lin_q.pow(a) * &lin_t.pow(b);
            out = &out + &term.scale(c);
        }
        out
    }

    /// Encoding as `[deg_q, deg_t, "num/den"]` triples in lexicographic order.
    pub fn to_json(&self) -> serde_json::Value {
        let triples: Vec<JsonTerm> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| JsonTerm(a, b, c.clone()))
            .collect();
        serde_json::to_value(triples).expect("polynomial terms serialize")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, Error> {
        let triples: Vec<JsonTerm> = serde_json::from_value(value.clone())
            .map_err(|e| Error::Format(format!("polynomial JSON: {e}")))?;
        let mut p = Self::zero();
        for JsonTerm(a, b, c) in triples {
            if p.terms.contains_key(&(a, b)) {
                return Err(Error::Format(format!("duplicate monomial ({a}, {b})")));
            }
            p.add_term(a, b, c);
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm(u32, u32, Rational);

impl Serialize for BivariatePolynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (&(a, b), c) in &self.terms {
            seq.serialize_element(&JsonTerm(a, b, c.clone()))?;
        }
        seq.end()
    }
}

impl<'a> Add<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }
}

impl Add for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self + &rhs
    }
}

impl<'a> Sub<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (&(a, b), c) in &rhs.terms {
            out.add_term(a, b, -c);
        }
        out
    }
}

impl Sub for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self - &rhs
    }
}

impl<'a> Mul<&'a BivariatePolynomial> for &'a BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
        &self * &rhs
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        self.scale(&Rational::from(-1))
    }
}

impl std::iter::Sum for BivariatePolynomial {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, p| &acc + &p)
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, deg: u32) -> fmt::Result {
    match deg {
        0 => Ok(()),
        1 => write!(f, "{name}"),
        d => write!(f, "{name}^{d}"),
    }
}

/// Display adapter that names the two variables.
pub struct Named<'a> {
    poly: &'a BivariatePolynomial,
    first: &'a str,
    second: &'a str,
}

impl BivariatePolynomial {
    /// Displays with other variable names, e.g. `x` and `y` for a Tutte
    /// polynomial.
    pub fn named<'a>(&'a self, first: &'a str, second: &'a str) -> Named<'a> {
        Named {
            poly: self,
            first,
            second,
        }
    }
}

impl fmt::Display for BivariatePolynomial {
    /// Human-readable form such as `q^2 + 3*q*t - t^3`, lowest degrees first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.named("q", "t"), f)
    }
}

impl fmt::Display for Named<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let this = self.poly;
        if this.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<_> = this.terms.keys().copied().collect();
        keys.sort_by_key(|&(a, b)| (a + b, std::cmp::Reverse(a)));
        for (idx, key) in keys.iter().enumerate() {
            let c = &this.terms[key];
            let (a, b) = *key;
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            let mag = c.abs();
            let is_const = a == 0 && b == 0;
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            write_var(f, self.first, a)?;
            if a > 0 && b > 0 {
                write!(f, "*")?;
            }
            write_var(f, self.second, b)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
