//! Laurent polynomials in `x` (and in `x1, x2`) with [`Scalar`] coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::qtfield::Scalar;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Scalar::one())
    }

    /// `c * x^k`.
    pub fn monomial(k: i64, c: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(k, c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(1, Scalar::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Scalar)>>(it: I) -> Self {
        let mut p = Self::zero();
        for (k, c) in it {
            p.add_term(k, c);
        }
        p
    }

    pub fn add_term(&mut self, k: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&k) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.coeffs.insert(k, s);
                }
            }
            None => {
                self.coeffs.insert(k, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: i64) -> Scalar {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Terms by decreasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().rev().map(|(k, c)| (*k, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms(self.coeffs.iter().map(|(k, x)| (*k, x * c)))
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// `x -> x^{-1}`.
    pub fn bar(&self) -> Self {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn map_coeffs<F: FnMut(&Scalar) -> Result<Scalar>>(&self, mut f: F) -> Result<Self> {
        let mut out = Self::zero();
        for (k, c) in &self.coeffs {
            out.add_term(*k, f(c)?);
        }
        Ok(out)
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(k, c)| {
                let xs = match k {
                    0 => String::new(),
                    1 => "x".into(),
                    _ => format!("x^{{{k}}}"),
                };
                let cs = c.to_latex();
                match (cs.as_str(), xs.is_empty()) {
                    ("1", false) => xs,
                    (_, true) => format!("\\left({cs}\\right)"),
                    _ => format!("\\left({cs}\\right){xs}"),
                }
            })
            .collect();
        parts.join(" + ")
    }
}

pub fn laurent_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut acc: BTreeMap<i64, Vec<Scalar>> = BTreeMap::new();
    for (ka, ca) in &a.coeffs {
        for (kb, cb) in &b.coeffs {
            acc.entry(ka + kb).or_default().push(ca * cb);
        }
    }
    LaurentPoly::from_terms(acc.into_iter().map(|(k, v)| (k, v.into_iter().sum())))
}

pub fn bar_involution(a: &LaurentPoly) -> LaurentPoly {
    a.bar()
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &o.coeffs {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (k, c) in &o.coeffs {
            out.add_term(*k, -c);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&Scalar::from_int(-1))
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        laurent_mul(self, o)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms().map(|(k, c)| format!("({c})*x^{k}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Laurent polynomial in `x1, x2`; exponents are stored doubled.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LaurentPoly2 {
    coeffs: BTreeMap<(i64, i64), Scalar>,
}

impl LaurentPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Adds `c * x1^(a2/2) * x2^(b2/2)` given doubled exponents.
    pub fn add_term_doubled(&mut self, a2: i64, b2: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.remove(&(a2, b2)) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.coeffs.insert((a2, b2), s);
                }
            }
            None => {
                self.coeffs.insert((a2, b2), c);
            }
        }
    }

    pub fn add_term(&mut self, a: i64, b: i64, c: Scalar) {
        self.add_term_doubled(2 * a, 2 * b, c);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x1^a x2^b` (integer exponents).
    pub fn coeff(&self, a: i64, b: i64) -> Scalar {
        self.coeffs.get(&(2 * a, 2 * b)).cloned().unwrap_or_default()
    }

    /// Terms with integer exponents, in decreasing order.
    pub fn terms(&self) -> Result<Vec<((i64, i64), Scalar)>> {
        self.coeffs
            .iter()
            .rev()
            .map(|(&(a, b), c)| {
                if a % 2 != 0 || b % 2 != 0 {
                    Err(Error::InvalidIndex(format!("half-integer exponent x1^{a}/2 x2^{b}/2")))
                } else {
                    Ok(((a / 2, b / 2), c.clone()))
                }
            })
            .collect()
    }

    pub fn has_integer_exponents(&self) -> bool {
        self.coeffs.keys().all(|(a, b)| a % 2 == 0 && b % 2 == 0)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero();
        for (k, x) in &self.coeffs {
            out.add_term_doubled(k.0, k.1, x * c);
        }
        out
    }

    /// `x1 = x, x2 = x^{-1}`.
    pub fn to_sl2(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for ((a, b), c) in &self.coeffs {
            out.add_term((a - b) / 2, c.clone());
        }
        out
    }

    /// Total degree in `x1, x2` if homogeneous.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut it = self.coeffs.keys().map(|(a, b)| a + b);
        let d = it.next()?;
        if it.all(|x| x == d) && d % 2 == 0 {
            Some(d / 2)
        } else {
            None
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<(i64, i64), Vec<Scalar>> = BTreeMap::new();
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &o.coeffs {
                acc.entry((ka.0 + kb.0, ka.1 + kb.1)).or_default().push(ca * cb);
            }
        }
        let mut out = Self::zero();
        for (k, v) in acc {
            out.add_term_doubled(k.0, k.1, v.into_iter().sum());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.coeffs {
            out.add_term_doubled(k.0, k.1, -c);
        }
        out
    }
}

impl fmt::Display for LaurentPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let half = |e: i64| {
            if e % 2 == 0 {
                (e / 2).to_string()
            } else {
                format!("{e}/2")
            }
        };
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|((a, b), c)| format!("({c})*x1^{}*x2^{}", half(*a), half(*b)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
