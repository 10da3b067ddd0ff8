use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, Var};

/// Integer Laurent polynomial in `u, v, s, z`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

/// Monomial substitution: each bound variable maps to `sign * monomial`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Substitution {
    images: [Option<(i8, Monomial)>; 4],
}

impl Substitution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, v: Var, sign: i8, m: Monomial) -> Self {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        self.images[v.index()] = Some((sign, m));
        self
    }

    pub fn image(&self, v: Var) -> Option<(i8, Monomial)> {
        self.images[v.index()]
    }

    /// Image of a monomial as `(sign, monomial)`.
    pub fn apply_monomial(&self, m: &Monomial) -> (i8, Monomial) {
        let mut sign = 1i8;
        let mut out = Monomial::ONE;
        for v in Var::ALL {
            let e = m.exp(v);
            if e == 0 {
                continue;
            }
            match self.images[v.index()] {
                Some((sg, img)) => {
                    if sg < 0 && e.rem_euclid(2) == 1 {
                        sign = -sign;
                    }
                    out = out * img.pow(e);
                }
                None => out = out * Monomial::var(v).pow(e),
            }
        }
        (sign, out)
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: BigInt) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, c);
        p
    }

    pub fn monomial(m: Monomial) -> Self {
        Poly::term(m, BigInt::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(it: I) -> Self {
        let mut p = Poly::zero();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, c)| (*k * m, c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn min_exponents(&self) -> Option<Monomial> {
        self.terms.keys().copied().reduce(Monomial::min)
    }

    pub fn max_exponents(&self) -> Option<Monomial> {
        self.terms.keys().copied().reduce(Monomial::max)
    }

    pub fn involves(&self, v: Var) -> bool {
        self.terms.keys().any(|m| m.involves(v))
    }

    pub fn div_exact_int(&self, c: &BigInt) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, x)| (*m, x / c)).collect(),
        }
    }

    /// Splits `self = sign * content * monomial * rest` where `rest` has
    /// content one, componentwise minimal exponents zero and a positive
    /// leading coefficient.
    pub fn primitive_part(&self) -> (BigInt, Monomial, Poly) {
        if self.is_zero() {
            return (BigInt::zero(), Monomial::ONE, Poly::zero());
        }
        let mut g = self.content();
        if self.leading().is_some_and(|(_, c)| c.is_negative()) {
            g = -g;
        }
        let shift = self.min_exponents().unwrap_or(Monomial::ONE);
        let rest = Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m / shift, c / &g))
                .collect(),
        };
        (g, shift, rest)
    }

    pub fn substitute(&self, sub: &Substitution) -> Poly {
        let mut out: HashMap<Monomial, BigInt> = HashMap::new();
        for (m, c) in &self.terms {
            let (sg, img) = sub.apply_monomial(m);
            let e = out.entry(img).or_default();
            if sg < 0 {
                *e -= c;
            } else {
                *e += c;
            }
        }
        Poly::from_terms(out)
    }

    /// Exact quotient `self / d` in the Laurent ring, if it exists.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        if let Some((m, c)) = d.as_monomial() {
            if !self.terms.values().all(|x| (x % c).is_zero()) {
                return None;
            }
            return Some(self.div_exact_int(c).mul_monomial(m.inv()));
        }
        let lo = self.min_exponents()? / d.min_exponents()?;
        let hi = self.max_exponents()? / d.max_exponents()?;
        if (0..4).any(|i| lo.0[i] > hi.0[i]) {
            return None;
        }
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (*dm, dc.clone());
        let mut rem = self.clone();
        let mut quo = Poly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let t = *rm / dm;
            if !t.within(&lo, &hi) {
                return None;
            }
            let (c, r) = rc.div_rem(&dc);
            if !r.is_zero() {
                return None;
            }
            for (m, x) in &d.terms {
                rem.add_term(*m * t, -(x * &c));
            }
            quo.add_term(t, c);
        }
        Some(quo)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let (big, small) = if self.len() >= o.len() { (self, o) } else { (o, self) };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if let Some((m, c)) = o.as_monomial() {
            return self.scale(c).mul_monomial(*m);
        }
        if let Some((m, c)) = self.as_monomial() {
            return o.scale(c).mul_monomial(*m);
        }
        let mut acc: HashMap<Monomial, BigInt> =
            HashMap::with_capacity(self.len() * o.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &o.terms {
                *acc.entry(*ma * *mb).or_default() += ca * cb;
            }
        }
        Poly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if m.is_one() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{a} {m}")?;
            }
        }
        Ok(())
    }
}
