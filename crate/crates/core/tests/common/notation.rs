//! Reads rational expressions written in the usual hand notation, e.g.
//! `t^{-3/2} q (1-t)(1-q^2)/(1-q)(1-tq^2) * (1-tY^2)/(1-Y^2q^{-1})`.
//!
//! Juxtaposition binds tightest, then `/`, then `*`, then `+`/`-`, so
//! `a b / c d * e` reads as `((a b)/(c d)) e`. `Y^{2k}` becomes `z^{-k}`,
//! `t^{a/2}` becomes `u^a` and `q^{m+k}` becomes `s q^k`.

use macdaha::{Monomial, Scalar};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(i64),
    Var(char),
    Op(char),
    Exp(i64, i64, i64), // numerator, denominator, coefficient of m
}

fn parse_exponent(s: &str) -> (i64, i64, i64) {
    // forms: "3", "-3/2", "m", "m-1", "-(j-1)" is not allowed; "m+2"
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut mcoef = 0;
    let mut rest = String::new();
    let mut sign_buf = String::new();
    for c in s.chars() {
        if c == 'm' {
            mcoef += if sign_buf.ends_with('-') { -1 } else { 1 };
            sign_buf.clear();
        } else if c == '+' || c == '-' {
            sign_buf.push(c);
        } else {
            rest.push_str(&sign_buf);
            sign_buf.clear();
            rest.push(c);
        }
    }
    if rest.is_empty() {
        return (0, 1, mcoef);
    }
    let rest = rest.trim_start_matches('+');
    match rest.split_once('/') {
        Some((a, b)) => (a.parse().unwrap(), b.parse().unwrap(), mcoef),
        None => (rest.parse().unwrap(), 1, mcoef),
    }
}

fn lex(s: &str) -> Vec<Tok> {
    let cs: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < cs.len() {
        let c = cs[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let mut n = 0i64;
            while i < cs.len() && cs[i].is_ascii_digit() {
                n = n * 10 + cs[i].to_digit(10).unwrap() as i64;
                i += 1;
            }
            out.push(Tok::Num(n));
        } else if "tqYzsu".contains(c) {
            out.push(Tok::Var(c));
            i += 1;
        } else if c == '^' {
            i += 1;
            let e = if cs[i] == '{' {
                let start = i + 1;
                while cs[i] != '}' {
                    i += 1;
                }
                let e: String = cs[start..i].iter().collect();
                i += 1;
                e
            } else {
                let start = i;
                if cs[i] == '-' {
                    i += 1;
                }
                while i < cs.len() && (cs[i].is_ascii_digit() || cs[i] == 'm') {
                    i += 1;
                }
                cs[start..i].iter().collect()
            };
            let (a, b, m) = parse_exponent(&e);
            out.push(Tok::Exp(a, b, m));
        } else if "+-*/()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            panic!("unexpected character {c:?} in {s:?}");
        }
    }
    out
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Scalar {
        let mut neg = false;
        if self.peek() == Some(&Tok::Op('-')) {
            self.next();
            neg = true;
        }
        let mut acc = self.term();
        if neg {
            acc = -acc;
        }
        while let Some(Tok::Op(c @ ('+' | '-'))) = self.peek().cloned() {
            self.next();
            let t = self.term();
            acc = if c == '+' { acc + t } else { acc - t };
        }
        acc
    }

    fn term(&mut self) -> Scalar {
        let mut acc = self.frac();
        while self.peek() == Some(&Tok::Op('*')) {
            self.next();
            acc = acc * self.frac();
        }
        acc
    }

    fn frac(&mut self) -> Scalar {
        let mut acc = self.product();
        while self.peek() == Some(&Tok::Op('/')) {
            self.next();
            acc = acc / self.product();
        }
        acc
    }

    fn product(&mut self) -> Scalar {
        let mut acc = self.factor();
        while matches!(self.peek(), Some(Tok::Num(_) | Tok::Var(_) | Tok::Op('('))) {
            acc = acc * self.factor();
        }
        acc
    }

    fn factor(&mut self) -> Scalar {
        let base = self.next().expect("unexpected end of expression");
        let exp = if let Some(Tok::Exp(a, b, m)) = self.peek().cloned() {
            self.next();
            Some((a, b, m))
        } else {
            None
        };
        match base {
            Tok::Num(n) => {
                let (a, b, m) = exp.unwrap_or((1, 1, 0));
                assert!(b == 1 && m == 0 && a >= 0);
                Scalar::from_int(n.pow(a as u32))
            }
            Tok::Op('(') => {
                let inner = self.expr();
                assert_eq!(self.next(), Some(Tok::Op(')')));
                let inner = match exp {
                    None => inner,
                    Some((a, 1, 0)) => inner.pow(a as i32).unwrap(),
                    Some(e) => panic!("bad exponent {e:?} on parenthesized group"),
                };
                // allow an exponent right after ')'
                if let Some(Tok::Exp(a, 1, 0)) = self.peek().cloned() {
                    self.next();
                    return inner.pow(a as i32).unwrap();
                }
                inner
            }
            Tok::Var(v) => {
                let (a, b, m) = exp.unwrap_or((1, 1, 0));
                let half = |a: i64, b: i64| -> i64 {
                    assert!((2 * a) % b == 0, "exponent {a}/{b} is not a half-integer");
                    2 * a / b
                };
                let mono = match v {
                    't' => {
                        assert_eq!(m, 0);
                        Monomial::new(half(a, b), 0, 0, 0)
                    }
                    'q' => Monomial::new(0, half(a, b), m, 0),
                    'u' => Monomial::new(a / b, 0, 0, 0),
                    's' => Monomial::new(0, 0, a / b, 0),
                    'z' => Monomial::new(0, 0, 0, a / b),
                    'Y' => {
                        assert!(b == 1 && a % 2 == 0 && m == 0, "odd power of Y");
                        Monomial::new(0, 0, 0, -a / 2)
                    }
                    _ => unreachable!(),
                };
                Scalar::monomial(mono)
            }
            t => panic!("unexpected token {t:?}"),
        }
    }
}

/// Parses a rational expression in hand notation.
pub fn val(s: &str) -> Scalar {
    let mut p = Parser { toks: lex(s), pos: 0 };
    let v = p.expr();
    assert!(p.pos == p.toks.len(), "trailing input in {s:?}");
    v
}
