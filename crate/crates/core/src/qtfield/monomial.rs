use std::fmt;
use std::ops::{Div, Mul};

use num_integer::Integer;

/// The four generators, in their fixed order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    U,
    V,
    S,
    Z,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::U, Var::V, Var::S, Var::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::U => "u",
            Var::V => "v",
            Var::S => "s",
            Var::Z => "z",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "u" => Some(Var::U),
            "v" => Some(Var::V),
            "s" => Some(Var::S),
            "z" => Some(Var::Z),
            _ => None,
        }
    }
}

/// Exponent vector `(e_u, e_v, e_s, e_z)`. The derived order is lexicographic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub [i64; 4]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 4]);

    pub fn new(u: i64, v: i64, s: i64, z: i64) -> Self {
        Monomial([u, v, s, z])
    }

    /// `t^a q^b z^c`, with `t = u^2` and `q = v^2`.
    pub fn tqz(t: i64, q: i64, z: i64) -> Self {
        Monomial([2 * t, 2 * q, 0, z])
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; 4];
        e[v.index()] = 1;
        Monomial(e)
    }

    pub fn exp(&self, v: Var) -> i64 {
        self.0[v.index()]
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn inv(self) -> Self {
        Monomial(self.0.map(|e| -e))
    }

    pub fn pow(self, k: i64) -> Self {
        Monomial(self.0.map(|e| e * k))
    }

    pub fn min(self, o: Self) -> Self {
        Monomial(std::array::from_fn(|i| self.0[i].min(o.0[i])))
    }

    pub fn max(self, o: Self) -> Self {
        Monomial(std::array::from_fn(|i| self.0[i].max(o.0[i])))
    }

    /// First nonzero exponent is positive.
    pub fn is_lex_positive(&self) -> bool {
        self.0.iter().find(|&&e| e != 0).is_some_and(|&e| e > 0)
    }

    /// gcd of the absolute exponents (0 for the identity).
    pub fn content(&self) -> i64 {
        self.0.iter().fold(0i64, |g, &e| g.gcd(&e))
    }

    pub fn involves(&self, v: Var) -> bool {
        self.0[v.index()] != 0
    }

    /// True if every exponent lies in `[lo, hi]` componentwise.
    pub fn within(&self, lo: &Monomial, hi: &Monomial) -> bool {
        (0..4).all(|i| lo.0[i] <= self.0[i] && self.0[i] <= hi.0[i])
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, o: Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] + o.0[i]))
    }
}

impl Div for Monomial {
    type Output = Monomial;
    fn div(self, o: Monomial) -> Monomial {
        Monomial(std::array::from_fn(|i| self.0[i] - o.0[i]))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order() {
        assert!(Monomial::new(1, 0, 0, 0) > Monomial::new(0, 5, 5, 5));
        assert!(Monomial::new(0, 0, 0, 1) > Monomial::ONE);
        assert!(!Monomial::new(0, -1, 0, 0).is_lex_positive());
    }

    #[test]
    fn display() {
        assert_eq!(Monomial::new(2, 1, 0, -3).to_string(), "u^2 v z^-3");
        assert_eq!(Monomial::ONE.to_string(), "1");
    }

    #[test]
    fn content() {
        assert_eq!(Monomial::new(2, 4, 0, -6).content(), 2);
        assert_eq!(Monomial::ONE.content(), 0);
    }
}
