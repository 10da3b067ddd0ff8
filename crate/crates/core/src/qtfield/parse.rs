use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use super::monomial::{Monomial, Var};
use super::poly::Poly;
use super::scalar::Scalar;
use crate::error::{Error, Result};

fn parse_factor(tok: &str) -> Result<Monomial> {
    let (name, exp) = match tok.split_once('^') {
        Some((n, e)) => (
            n,
            e.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?,
        ),
        None => (tok, 1),
    };
    let v = Var::from_name(name).ok_or_else(|| Error::Parse(format!("unknown variable {name:?}")))?;
    Ok(Monomial::var(v).pow(exp))
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Poly> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut out = Poly::zero();
        let mut sign = BigInt::one();
        let mut coef: Option<BigInt> = None;
        let mut mono = Monomial::ONE;
        let mut open = false;
        let mut flush = |sign: &BigInt, coef: &mut Option<BigInt>, mono: &mut Monomial, open: &mut bool| {
            if *open {
                let c = coef.take().unwrap_or_else(BigInt::one);
                out.add_term(*mono, sign * c);
            }
            *mono = Monomial::ONE;
            *open = false;
        };
        for tok in s.split_whitespace() {
            match tok {
                "+" | "-" => {
                    if !open {
                        return Err(Error::Parse(format!("dangling sign in {s:?}")));
                    }
                    flush(&sign, &mut coef, &mut mono, &mut open);
                    sign = if tok == "-" { -BigInt::one() } else { BigInt::one() };
                }
                _ => {
                    let mut t = tok;
                    if !open {
                        if let Some(rest) = t.strip_prefix('-') {
                            sign = -sign;
                            t = rest;
                        }
                    }
                    if t.chars().next().is_some_and(|c| c.is_ascii_digit()) {
                        if open {
                            return Err(Error::Parse(format!("misplaced coefficient {tok:?}")));
                        }
                        coef = Some(t.parse().map_err(|_| Error::Parse(format!("bad integer {t:?}")))?);
                    } else {
                        mono = mono * parse_factor(t)?;
                    }
                    open = true;
                }
            }
        }
        if !open {
            return Err(Error::Parse(format!("trailing sign in {s:?}")));
        }
        flush(&sign, &mut coef, &mut mono, &mut open);
        Ok(out)
    }
}

fn strip_parens(s: &str) -> &str {
    let s = s.trim();
    s.strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .unwrap_or(s)
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Scalar> {
        match s.split_once(" / ") {
            Some((n, d)) => {
                let n: Poly = strip_parens(n).parse()?;
                let d: Poly = strip_parens(d).parse()?;
                Scalar::from_fraction(n, d)
            }
            None => Ok(Scalar::from_poly(strip_parens(s).parse()?)),
        }
    }
}
