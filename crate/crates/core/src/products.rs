//! Product expansions `P_l P_m`, `E_l P_m`, `E_{-l} P_m`, the brute-force
//! oracle, type GL_2 conversions and products, and the two-row Pieri factor.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::{a_coeff, b_coeff, c_coeff, c_in_qm, ev, k_coeff, EvPoint, YFunction};
use crate::error::{Error, Result};
use crate::etacalc::{apply_to_E, build_e_one0, eta_norm, Sign};
use crate::laurent::{laurent_mul, LaurentPoly, LaurentPoly2};
use crate::macdonald::{e_poly, p_poly, poch};
use crate::polyrep::to_e_basis;
use crate::qtfield::{Monomial, Scalar, Substitution, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    E,
    P,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::E => "E",
            Basis::P => "P",
        })
    }
}

/// Index `m_coeff * m + offset`; `m_coeff` is 0 for numeric indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Index {
    pub m_coeff: i64,
    pub offset: i64,
}

impl Index {
    pub fn numeric(n: i64) -> Self {
        Index { m_coeff: 0, offset: n }
    }

    pub fn symbolic(m_coeff: i64, offset: i64) -> Self {
        Index { m_coeff, offset }
    }

    pub fn at(&self, m: i64) -> i64 {
        self.m_coeff * m + self.offset
    }

    pub fn as_numeric(&self) -> Option<i64> {
        (self.m_coeff == 0).then_some(self.offset)
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let head = match self.m_coeff {
            0 => return write!(f, "{}", self.offset),
            1 => "m".to_string(),
            -1 => "-m".to_string(),
            c => format!("{c}m"),
        };
        match self.offset.signum() {
            0 => write!(f, "{head}"),
            1 => write!(f, "{head}+{}", self.offset),
            _ => write!(f, "{head}{}", self.offset),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Sl2(Basis, Index),
    Gl2(Basis, i64, i64),
}

impl Label {
    pub fn e(n: i64) -> Self {
        Label::Sl2(Basis::E, Index::numeric(n))
    }

    pub fn p(n: i64) -> Self {
        Label::Sl2(Basis::P, Index::numeric(n))
    }

    pub fn basis(&self) -> Basis {
        match self {
            Label::Sl2(b, _) | Label::Gl2(b, _, _) => *b,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Sl2(b, i) => write!(f, "{b}_{{{i}}}"),
            Label::Gl2(b, x, y) => write!(f, "{b}_{{({x},{y})}}"),
        }
    }
}

/// `m` as a number or as the symbol `s = q^m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MParam {
    Numeric(i64),
    Symbolic,
}

impl MParam {
    fn ev_point(self) -> EvPoint {
        match self {
            MParam::Numeric(m) => EvPoint::Numeric(m),
            MParam::Symbolic => EvPoint::Symbolic,
        }
    }

    fn index(self, m_coeff: i64, offset: i64) -> Index {
        match self {
            MParam::Numeric(m) => Index::numeric(m_coeff * m + offset),
            MParam::Symbolic => Index::symbolic(m_coeff, offset),
        }
    }
}

/// Linear combination of basis elements; labels are distinct, coefficients
/// nonzero, and insertion order is kept for display.
#[derive(Clone, Debug, Default)]
pub struct Expansion {
    terms: Vec<(Label, Scalar)>,
}

impl Expansion {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Label, Scalar)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (l, c) in it {
            e.add_term(l, c);
        }
        e
    }

    pub fn add_term(&mut self, label: Label, c: Scalar) {
        if c.is_zero() {
            return;
        }
        if let Some(pos) = self.terms.iter().position(|(l, _)| *l == label) {
            let s = &self.terms[pos].1 + &c;
            if s.is_zero() {
                self.terms.remove(pos);
            } else {
                self.terms[pos].1 = s;
            }
        } else {
            self.terms.push((label, c));
        }
    }

    pub fn terms(&self) -> &[(Label, Scalar)] {
        &self.terms
    }

    pub fn get(&self, label: &Label) -> Scalar {
        self.terms
            .iter()
            .find(|(l, _)| l == label)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Scalar::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn as_map(&self) -> BTreeMap<Label, &Scalar> {
        self.terms.iter().map(|(l, c)| (*l, c)).collect()
    }

    /// Specializes a symbolic expansion at `m`, merging labels that coincide.
    pub fn specialize(&self, m: i64) -> Result<Expansion> {
        let sub = Substitution::new().bind(Var::S, 1, Monomial::new(0, 2 * m, 0, 0));
        let mut out = Expansion::zero();
        for (l, c) in &self.terms {
            let l = match l {
                Label::Sl2(b, i) => Label::Sl2(*b, Index::numeric(i.at(m))),
                other => *other,
            };
            out.add_term(l, c.substitute(&sub)?);
        }
        Ok(out)
    }

    pub fn to_latex(&self) -> String {
        if self.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| {
                let l = l.to_string();
                if c.is_one() {
                    l
                } else {
                    format!("\\left({}\\right){l}", c.to_latex())
                }
            })
            .collect();
        parts.join(" + ")
    }
}

impl PartialEq for Expansion {
    fn eq(&self, o: &Self) -> bool {
        self.as_map() == o.as_map()
    }
}

impl Eq for Expansion {}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| if c.is_one() { l.to_string() } else { format!("({c})*{l}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn check_m(m: MParam) -> Result<()> {
    match m {
        MParam::Numeric(k) if k < 1 => Err(Error::InvalidIndex(format!("m must be >= 1, got {k}"))),
        _ => Ok(()),
    }
}

fn push_checked(out: &mut Expansion, basis: Basis, idx: Index, c: Scalar) -> Result<()> {
    if c.is_zero() {
        return Ok(());
    }
    if basis == Basis::P {
        if let Some(n) = idx.as_numeric() {
            if n < 0 {
                return Err(Error::InvalidIndex(format!("nonzero coefficient on P_{n}")));
            }
        }
    }
    out.add_term(Label::Sl2(basis, idx), c);
    Ok(())
}

/// `P_l P_m = sum_j ev_m(C_j^{(l)}) P_{m+l-2j}`.
pub fn expand_p_p(l: i64, m: MParam) -> Result<Expansion> {
    if l < 1 {
        return Err(Error::InvalidIndex(format!("l must be >= 1, got {l}")));
    }
    check_m(m)?;
    let at = m.ev_point();
    let mut out = Expansion::zero();
    for j in 0..=l {
        push_checked(&mut out, Basis::P, m.index(1, l - 2 * j), ev(&c_coeff(l, j)?, at)?)?;
    }
    Ok(out)
}

/// `E_l P_m = sum_j ev_m(A_j) E_{m+l-2j} + sum_j ev_m(B_j) E_{-m+l-2j}`.
pub fn expand_e_p(l: i64, m: MParam) -> Result<Expansion> {
    if l < 1 {
        return Err(Error::InvalidIndex(format!("l must be >= 1, got {l}")));
    }
    check_m(m)?;
    let at = m.ev_point();
    let mut out = Expansion::zero();
    for j in 0..l {
        push_checked(&mut out, Basis::E, m.index(1, l - 2 * j), ev(&a_coeff(l, j)?, at)?)?;
    }
    for j in 0..l {
        push_checked(&mut out, Basis::E, m.index(-1, l - 2 * j), ev(&b_coeff(l, j)?, at)?)?;
    }
    Ok(out)
}

/// `E_{-l} P_m = sum_j ev_m(t B_j^{(l+1)}) E_{m-(l-2j)} + sum_j ev_m(A_j^{(l+1)}) E_{-m-(l-2j)}`.
pub fn expand_eneg_p(l: i64, m: MParam) -> Result<Expansion> {
    if l < 0 {
        return Err(Error::InvalidIndex(format!("l must be >= 0, got {l}")));
    }
    check_m(m)?;
    let at = m.ev_point();
    let mut out = Expansion::zero();
    for j in 0..=l {
        let c = ev(&(Scalar::t() * b_coeff(l + 1, j)?), at)?;
        push_checked(&mut out, Basis::E, m.index(1, -(l - 2 * j)), c)?;
    }
    for j in 0..=l {
        push_checked(&mut out, Basis::E, m.index(-1, -(l - 2 * j)), ev(&a_coeff(l + 1, j)?, at)?)?;
    }
    Ok(out)
}

/// `E_n P_m` for any integer `n` (`n = 0` gives `P_m` in the E basis).
pub fn expand_en_p(n: i64, m: MParam) -> Result<Expansion> {
    if n > 0 {
        expand_e_p(n, m)
    } else {
        expand_eneg_p(-n, m)
    }
}

fn p_m_coefficient(m: i64) -> Scalar {
    Scalar::t() * Scalar::one_minus(Monomial::tqz(0, m, 0)) / Scalar::one_minus(Monomial::tqz(1, m, 0))
}

/// `E_n P_m` through the eta-expansion of `E_n(X) 1_0` applied to
/// `P_m = E_{-m} + t(1 - q^m)/(1 - t q^m) E_m`, bypassing A and B.
pub fn expand_en_p_via_eta(n: i64, m: i64) -> Result<Expansion> {
    if m < 1 {
        return Err(Error::InvalidIndex(format!("m must be >= 1, got {m}")));
    }
    let e = build_e_one0(n);
    let minus = apply_to_E(&e, m, Sign::Minus)?;
    let plus = apply_to_E(&e, m, Sign::Plus)?.scale(&p_m_coefficient(m));
    let mut out = Expansion::zero();
    for (k, c) in minus.add(&plus).iter() {
        out.add_term(Label::e(k), c.clone());
    }
    Ok(out)
}

/// `P_l P_m` through `t^{1/2} ev_m(K_j^{(l)} * normalization)`, bypassing C.
pub fn expand_p_p_via_k(l: i64, m: i64) -> Result<Expansion> {
    let mut out = Expansion::zero();
    for j in 0..=l {
        let k = l - 2 * j;
        let g: YFunction = Scalar::u() * k_coeff(l, j)? * eta_norm(k, Sign::Plus);
        out.add_term(Label::p(m + k), ev(&g, EvPoint::Numeric(m))?);
    }
    Ok(out)
}

/// Oracle: multiply as Laurent polynomials and re-expand triangularly.
pub fn brute_force_product(a: &LaurentPoly, b: &LaurentPoly, basis: Basis) -> Result<Expansion> {
    let prod = laurent_mul(a, b);
    match basis {
        Basis::E => {
            let v = to_e_basis(&prod)?;
            Ok(Expansion::from_terms(v.iter().map(|(n, c)| (Label::e(n), c.clone()))))
        }
        Basis::P => {
            if prod.bar() != prod {
                return Err(Error::NotSymmetric);
            }
            let mut rest = prod;
            let mut out = Expansion::zero();
            while let Some(n) = rest.max_exponent() {
                let c = rest.coeff(n);
                rest = &rest - &p_poly(n)?.scale(&c);
                out.add_term(Label::p(n), c);
            }
            Ok(out)
        }
    }
}

/// `E_{(mu1, mu2)}(x1, x2) = (x1 x2)^{(mu1+mu2)/2} E_{mu1-mu2}(x1^{1/2} x2^{-1/2})`.
pub fn gl2_e(mu1: i64, mu2: i64) -> LaurentPoly2 {
    twist(&e_poly(mu1 - mu2), mu1 + mu2)
}

/// `P_{(l1, l2)}` for `l1 >= l2`.
pub fn gl2_p(l1: i64, l2: i64) -> Result<LaurentPoly2> {
    if l1 < l2 {
        return Err(Error::InvalidPartition(l1, l2));
    }
    Ok(twist(&p_poly(l1 - l2)?, l1 + l2))
}

fn twist(f: &LaurentPoly, d: i64) -> LaurentPoly2 {
    let mut out = LaurentPoly2::zero();
    for (k, c) in f.terms() {
        out.add_term_doubled(d + k, d - k, c.clone());
    }
    out
}

/// Kind of GL_2 product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Gl2Kind {
    /// `E_nu P_mu`.
    Ep,
    /// `P_nu P_mu`.
    Pp,
}

/// GL_2 product rules by index bookkeeping on the SL_2 expansions.
pub fn gl2_expand_products(nu: (i64, i64), mu: (i64, i64), kind: Gl2Kind) -> Result<Expansion> {
    let (n1, n2) = nu;
    let (m1, m2) = mu;
    if m1 < m2 {
        return Err(Error::InvalidPartition(m1, m2));
    }
    if n1 < n2 {
        return Err(Error::InvalidPartition(n1, n2));
    }
    let l = n1 - n2;
    let m = m1 - m2;
    let basis = match kind {
        Gl2Kind::Ep => Basis::E,
        Gl2Kind::Pp => Basis::P,
    };
    let at = EvPoint::Numeric(m);
    if l == 0 {
        // multiplication by (x1 x2)^{n1}; in the E basis P_mu itself has two terms
        return Ok(match kind {
            Gl2Kind::Pp => Expansion::from_terms([(Label::Gl2(basis, m1 + n1, m2 + n2), Scalar::one())]),
            Gl2Kind::Ep => Expansion::from_terms([
                (Label::Gl2(basis, m2 + n1, m1 + n2), Scalar::one()),
                (Label::Gl2(basis, m1 + n1, m2 + n2), Scalar::t() * ev(&b_coeff(1, 0)?, at)?),
            ]),
        });
    }
    let mut out = Expansion::zero();
    match kind {
        Gl2Kind::Pp => {
            for j in 0..=l {
                let c = ev(&c_coeff(l, j)?, at)?;
                out.add_term(Label::Gl2(Basis::P, m1 + n1 - j, m2 + n2 + j), c);
            }
        }
        Gl2Kind::Ep => {
            for j in 0..l {
                let c = ev(&a_coeff(l, j)?, at)?;
                out.add_term(Label::Gl2(Basis::E, m1 + n1 - j, m2 + n2 + j), c);
            }
            for j in 0..l {
                let c = ev(&b_coeff(l, j)?, at)?;
                out.add_term(Label::Gl2(Basis::E, m2 + n1 - j, m1 + n2 + j), c);
            }
        }
    }
    Ok(out)
}

fn rank(n: i64) -> i64 {
    if n > 0 {
        2 * n - 1
    } else {
        -2 * n
    }
}

/// Oracle: bivariate product, then elimination against `gl2_e` / `gl2_p`.
pub fn gl2_brute_force(nu: (i64, i64), mu: (i64, i64), kind: Gl2Kind) -> Result<Expansion> {
    let (left, basis) = match kind {
        Gl2Kind::Ep => (gl2_e(nu.0, nu.1), Basis::E),
        Gl2Kind::Pp => (gl2_p(nu.0, nu.1)?, Basis::P),
    };
    let mut rest = left.mul(&gl2_p(mu.0, mu.1)?);
    let mut out = Expansion::zero();
    while !rest.is_zero() {
        let terms = rest.terms()?;
        let ((a, b), c) = match basis {
            Basis::E => terms.into_iter().max_by_key(|((a, b), _)| rank(a - b)),
            Basis::P => terms.into_iter().max_by_key(|((a, b), _)| a - b),
        }
        .expect("nonzero");
        let elt = match basis {
            Basis::E => gl2_e(a, b),
            Basis::P => {
                if a < b {
                    return Err(Error::NotSymmetric);
                }
                gl2_p(a, b)?
            }
        };
        rest = rest.sub(&elt.scale(&c));
        if !rest.coeff(a, b).is_zero() {
            return Err(Error::Internal(format!("GL2 elimination stalled at ({a},{b})")));
        }
        out.add_term(Label::Gl2(basis, a, b), c);
    }
    Ok(out)
}

/// A two-row partition `(l1, l2)` with `l1 >= l2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Partition2 {
    pub l1: i64,
    pub l2: i64,
}

impl Partition2 {
    pub fn new(l1: i64, l2: i64) -> Result<Self> {
        if l1 < l2 {
            return Err(Error::InvalidPartition(l1, l2));
        }
        Ok(Partition2 { l1, l2 })
    }
}

fn strip(lambda: Partition2, mu: Partition2) -> Result<(i64, i64)> {
    if !(mu.l2 <= lambda.l2 && lambda.l2 <= mu.l1 && mu.l1 <= lambda.l1) {
        return Err(Error::NotHorizontalStrip(format!(
            "({},{})/({},{})",
            lambda.l1, lambda.l2, mu.l1, mu.l2
        )));
    }
    Ok((lambda.l1 - mu.l1, lambda.l2 - mu.l2))
}

/// `phi_{lambda/mu}` in its finite-Pochhammer form.
pub fn pieri_phi(lambda: Partition2, mu: Partition2) -> Result<Scalar> {
    let (a1, a2) = strip(lambda, mu)?;
    let m = mu.l1 - mu.l2;
    let tq = |t: i64, q: i64| Monomial::tqz(t, q, 0);
    let t_over_q = |n: i64| poch(tq(1, 0), n) / poch(tq(0, 1), n);
    Ok(t_over_q(a1) * t_over_q(a2) * poch(tq(2, a1 - a2 + m), a2) / poch(tq(1, a1 - a2 + 1 + m), a2)
        * poch(tq(0, -a2 + 1 + m), a2)
        / poch(tq(1, -a2 + m), a2))
}

/// The two candidate normalizers of the Pieri comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriNormalizer {
    /// `(q;q)_l / (t;q)_l`.
    QOverT,
    /// `(q;q)_l / (tq;q)_l`.
    QOverTq,
}

impl PieriNormalizer {
    pub const ALL: [PieriNormalizer; 2] = [PieriNormalizer::QOverT, PieriNormalizer::QOverTq];

    pub fn value(self, l: i64) -> Scalar {
        let den = match self {
            PieriNormalizer::QOverT => Monomial::tqz(1, 0, 0),
            PieriNormalizer::QOverTq => Monomial::tqz(1, 1, 0),
        };
        poch(Monomial::tqz(0, 1, 0), l) / poch(den, l)
    }

    pub fn name(self) -> &'static str {
        match self {
            PieriNormalizer::QOverT => "(q;q)_l/(t;q)_l",
            PieriNormalizer::QOverTq => "(q;q)_l/(tq;q)_l",
        }
    }
}

/// Whether `normalizer * phi_{lambda/mu} = c_j^{(l)}(q^m)` with
/// `j = lambda2 - mu2`, `m = mu1 - mu2`.
pub fn pieri_holds(lambda: Partition2, mu: Partition2, n: PieriNormalizer) -> Result<bool> {
    let (a1, a2) = strip(lambda, mu)?;
    let l = a1 + a2;
    let m = mu.l1 - mu.l2;
    let c = c_in_qm(l, a2)?.substitute(&Substitution::new().bind(Var::S, 1, Monomial::new(0, 2 * m, 0, 0)))?;
    Ok(n.value(l) * pieri_phi(lambda, mu)? == c)
}
