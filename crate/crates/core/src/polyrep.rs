//! The polynomial representation: `T_1`, `T_pi`, `X`, `Y` acting on Laurent
//! polynomials, the `E`-basis, and the intertwiner ladder on `E`-vectors.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::macdonald::{e_poly, om};
use crate::qtfield::{Monomial, Scalar, Substitution, Var};

/// Finite combination `sum c_n E_n`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EVector {
    entries: BTreeMap<i64, Scalar>,
}

impl EVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(n: i64) -> Self {
        let mut e = Self::zero();
        e.add_term(n, Scalar::one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Scalar)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (n, c) in it {
            e.add_term(n, c);
        }
        e
    }

    pub fn add_term(&mut self, n: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.entries.remove(&n) {
            Some(old) => {
                let s = &old + &c;
                if !s.is_zero() {
                    self.entries.insert(n, s);
                }
            }
            None => {
                self.entries.insert(n, c);
            }
        }
    }

    pub fn get(&self, n: i64) -> Scalar {
        self.entries.get(&n).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries by decreasing index.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.entries.iter().rev().map(|(n, c)| (*n, c))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms(self.entries.iter().map(|(n, x)| (*n, x * c)))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (n, c) in &o.entries {
            out.add_term(*n, c.clone());
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }
}

impl fmt::Display for EVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(n, c)| format!("({c})*E_{n}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `(x^r - x^{-r}) / (1 - x^2)` as a finite geometric sum.
fn telescoped(r: i64) -> Vec<(i64, i64)> {
    if r > 0 {
        (1..=r).map(|i| (r - 2 * i, -1)).collect()
    } else if r < 0 {
        let n = -r;
        (1..=n).map(|i| (n - 2 * i, 1)).collect()
    } else {
        Vec::new()
    }
}

/// `T_1 x^r = t^{1/2} x^{-r} + (t^{1/2} - t^{-1/2})(x^r - x^{-r})/(1 - x^2)`.
pub fn apply_t1(f: &LaurentPoly) -> LaurentPoly {
    let u = Scalar::u();
    let diff = &u - &(Scalar::one() / &u);
    let mut out = LaurentPoly::zero();
    for (r, c) in f.terms() {
        out.add_term(-r, c * &u);
        let cd = c * &diff;
        for (k, sign) in telescoped(r) {
            out.add_term(k, if sign > 0 { cd.clone() } else { -&cd });
        }
    }
    out
}

/// `T_1^{-1} = T_1 - (t^{1/2} - t^{-1/2})`.
pub fn apply_t1_inv(f: &LaurentPoly) -> LaurentPoly {
    let u = Scalar::u();
    let diff = &u - &(Scalar::one() / &u);
    &apply_t1(f) - &f.scale(&diff)
}

/// `T_pi x^r = q^{r/2} x^{-r}`.
pub fn apply_tpi(f: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::from_terms(
        f.terms()
            .map(|(r, c)| (-r, c * &Scalar::monomial(Monomial::new(0, r, 0, 0)))),
    )
}

/// `T_pi` is an involution on the polynomial representation.
pub fn apply_tpi_inv(f: &LaurentPoly) -> LaurentPoly {
    apply_tpi(f)
}

pub fn apply_x(f: &LaurentPoly) -> LaurentPoly {
    f.shift(1)
}

pub fn apply_x_inv(f: &LaurentPoly) -> LaurentPoly {
    f.shift(-1)
}

/// `Y = T_pi T_1`.
pub fn apply_y(f: &LaurentPoly) -> LaurentPoly {
    apply_tpi(&apply_t1(f))
}

/// Eigenvalue of `z = Y^{-2}` on `E_n`: `t q^n` for `n > 0`, `t^{-1} q^n`
/// for `n <= 0`.
pub fn eigen_z(n: i64) -> Monomial {
    if n > 0 {
        Monomial::new(2, 2 * n, 0, 0)
    } else {
        Monomial::new(-2, 2 * n, 0, 0)
    }
}

/// Eigenvalue of `Y` on `E_n`: `t^{-1/2} q^{-n/2}` for `n > 0` and
/// `t^{1/2} q^{-n/2}` for `n <= 0`.
pub fn eigen_y(n: i64) -> Monomial {
    if n > 0 {
        Monomial::new(-1, -n, 0, 0)
    } else {
        Monomial::new(1, -n, 0, 0)
    }
}

pub(crate) fn z_at(m: &Monomial) -> Scalar {
    Scalar::monomial(*m)
}

fn eval_at_index(g: &Scalar, n: i64) -> Result<Scalar> {
    g.substitute(&Substitution::new().bind(Var::Z, 1, eigen_z(n)))
}

fn rank(n: i64) -> i64 {
    if n > 0 {
        2 * n - 1
    } else {
        -2 * n
    }
}

/// Triangular re-expansion in the `E` basis.
pub fn to_e_basis(f: &LaurentPoly) -> Result<EVector> {
    let mut rest = f.clone();
    let mut out = EVector::zero();
    while !rest.is_zero() {
        let n = rest
            .terms()
            .map(|(k, _)| k)
            .max_by_key(|k| rank(*k))
            .expect("nonzero polynomial has a term");
        let c = rest.coeff(n);
        let e = e_poly(n);
        if !e.coeff(n).is_one() {
            return Err(Error::Internal(format!("pivot of E_{n} is not 1")));
        }
        rest = &rest - &e.scale(&c);
        if !rest.coeff(n).is_zero() {
            return Err(Error::Internal(format!("elimination stalled at x^{n}")));
        }
        out.add_term(n, c);
    }
    Ok(out)
}

pub fn from_e_basis(e: &EVector) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (n, c) in e.iter() {
        out = &out + &e_poly(n).scale(c);
    }
    out
}

/// Diagonal action of a rational function of `z = Y^{-2}`.
pub fn apply_y_function(g: &Scalar, e: &EVector) -> Result<EVector> {
    let mut out = EVector::zero();
    for (n, c) in e.iter() {
        out.add_term(n, c * &eval_at_index(g, n)?);
    }
    Ok(out)
}

fn tau1_neg_factor() -> Scalar {
    // (1 - t Y^2)(1 - t Y^{-2}) / ((1 - Y^2)(1 - Y^{-2})) in z = Y^{-2}
    let z = Scalar::z();
    let t = Scalar::t();
    let one = Scalar::one();
    (&one - &(&t / &z)) * (&one - &(&t * &z)) / ((&one - &(&one / &z)) * (&one - &z))
}

/// `tau_1` on the `E` basis.
pub fn apply_tau1(e: &EVector) -> Result<EVector> {
    let uinv = Scalar::one() / Scalar::u();
    let h = tau1_neg_factor();
    let mut out = EVector::zero();
    for (n, c) in e.iter() {
        if n > 0 {
            out.add_term(-n, c * &uinv);
        } else if n < 0 {
            out.add_term(-n, c * &uinv * eval_at_index(&h, -n)?);
        }
    }
    Ok(out)
}

/// `tau_pi` on the `E` basis.
pub fn apply_taupi(e: &EVector) -> EVector {
    let u = Scalar::u();
    let uinv = Scalar::one() / &u;
    let mut out = EVector::zero();
    for (n, c) in e.iter() {
        if n > 0 {
            out.add_term(-(n - 1), c * &uinv);
        } else {
            out.add_term(-n + 1, c * &u);
        }
    }
    out
}

/// `eta_{s_1} = t^{1/2} (1 - Y^{-2})/(1 - t Y^{-2}) tau_1`.
pub fn apply_eta_s1(e: &EVector) -> Result<EVector> {
    let z = Scalar::z();
    let f = Scalar::u() * (Scalar::one() - &z) / (Scalar::one() - Scalar::t() * &z);
    apply_y_function(&f, &apply_tau1(e)?)
}

/// `eta_pi = tau_pi`.
pub fn apply_eta_pi(e: &EVector) -> EVector {
    apply_taupi(e)
}

/// Raising operator `eta` from its ladder table.
pub fn apply_eta(e: &EVector) -> EVector {
    let u = Scalar::u();
    let uinv = Scalar::one() / &u;
    let mut out = EVector::zero();
    for (n, c) in e.iter() {
        if n > 0 {
            out.add_term(n + 1, c * &uinv * om(1, n) / om(0, n));
        } else if n < 0 {
            let m = -n;
            out.add_term(n + 1, c * &u * om(0, m) / om(1, m));
        }
    }
    out
}

/// Lowering operator `eta^{-1}` from its ladder table.
pub fn apply_eta_inv(e: &EVector) -> EVector {
    let u = Scalar::u();
    let uinv = Scalar::one() / &u;
    let mut out = EVector::zero();
    for (n, c) in e.iter() {
        if n > 1 {
            out.add_term(n - 1, c * &u * om(0, n - 1) / om(1, n - 1));
        } else if n <= 0 {
            let m = -n;
            out.add_term(n - 1, c * &uinv * om(1, m + 1) / om(0, m + 1));
        }
    }
    out
}

/// Applies `eta^k` (`k < 0` means `eta^{-1}` repeated).
pub fn apply_eta_power(e: &EVector, k: i64) -> EVector {
    let mut out = e.clone();
    for _ in 0..k.abs() {
        out = if k > 0 { apply_eta(&out) } else { apply_eta_inv(&out) };
    }
    out
}

/// `tau_1 = T_1 + t^{-1/2}(1 - t)/(1 - Y^{-2})` evaluated through the
/// polynomial action of `T_1`.
pub fn apply_tau1_via_t1(e: &EVector) -> Result<EVector> {
    let uinv = Scalar::one() / Scalar::u();
    let f = &uinv * om(1, 0) / (Scalar::one() - Scalar::z());
    let shifted = apply_y_function(&f, e)?;
    let poly = &apply_t1(&from_e_basis(e)) + &from_e_basis(&shifted);
    to_e_basis(&poly)
}

/// `tau_pi = X T_1` evaluated through the polynomial action.
pub fn apply_taupi_via_xt1(e: &EVector) -> Result<EVector> {
    to_e_basis(&apply_x(&apply_t1(&from_e_basis(e))))
}
