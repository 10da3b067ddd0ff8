//! Elements `sum_k eta^k g_k(Y) 1_0` of the projected module and the left
//! actions used to build `E_l(X) 1_0` and `1_0 E_l(X) 1_0` by recursion.

use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::{c_of_y, ev, f_of_y, norm_n, norm_p, EvPoint, YFunction};
use crate::error::Result;
use crate::polyrep::{apply_eta_power, apply_y_function, EVector};
use crate::qtfield::{Monomial, Scalar};

/// `sum_k eta^k g_k(Y) 1_0`, with the Y-functions to the right of the
/// eta-powers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EtaElement {
    entries: BTreeMap<i64, YFunction>,
}

/// Sign of the index of the eigenvector acted on by [`apply_to_E`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl EtaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `1_0`.
    pub fn one0() -> Self {
        Self::single(0, Scalar::one())
    }

    pub fn single(k: i64, g: YFunction) -> Self {
        let mut e = Self::zero();
        e.add_term(k, g);
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, YFunction)>>(it: I) -> Self {
        let mut e = Self::zero();
        for (k, g) in it {
            e.add_term(k, g);
        }
        e
    }

    pub fn add_term(&mut self, k: i64, g: YFunction) {
        if g.is_zero() {
            return;
        }
        let slot = self.entries.entry(k).or_insert_with(Scalar::zero);
        *slot = &*slot + &g;
        if slot.is_zero() {
            self.entries.remove(&k);
        }
    }

    pub fn get(&self, k: i64) -> YFunction {
        self.entries.get(&k).cloned().unwrap_or_else(Scalar::zero)
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

    /// Entries by decreasing eta-power.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &YFunction)> {
        self.entries.iter().rev().map(|(k, g)| (*k, g))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_terms(self.iter().map(|(k, g)| (k, g * c)))
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, g) in o.iter() {
            out.add_term(k, g.clone());
        }
        out
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(k, g)| {
                let eta = match k {
                    0 => String::new(),
                    1 => "\\eta".into(),
                    _ => format!("\\eta^{{{k}}}"),
                };
                format!("{eta}\\left({}\\right)\\mathbf{{1}}_0", g.to_latex())
            })
            .collect();
        parts.join(" + ")
    }
}

impl fmt::Display for EtaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(k, g)| format!("eta^{k}*({g})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn inv_z(g: &YFunction) -> YFunction {
    g.invert_z().expect("Y-functions do not involve s")
}

/// Left multiplication by `g(Y)`: passing `eta^k` sends `z` to `q^k z`.
pub fn act_y_function(g: &YFunction, e: &EtaElement) -> EtaElement {
    EtaElement::from_terms(e.iter().map(|(k, h)| (k, g.shift_z(k) * h)))
}

/// Left multiplication by `eta`.
pub fn act_eta(e: &EtaElement) -> EtaElement {
    EtaElement::from_terms(e.iter().map(|(k, h)| (k + 1, h.clone())))
}

/// `eta_{s_1} eta^k g(z) 1_0 = eta^{-k} g(z^{-1}) 1_0`.
pub fn act_eta_s1(e: &EtaElement) -> EtaElement {
    EtaElement::from_terms(e.iter().map(|(k, h)| (-k, inv_z(h))))
}

/// `eta_pi eta^k g(z) 1_0 = eta^{1-k} g(z^{-1}) 1_0`.
pub fn act_eta_pi(e: &EtaElement) -> EtaElement {
    EtaElement::from_terms(e.iter().map(|(k, h)| (1 - k, inv_z(h))))
}

fn t_half(k: i64) -> Scalar {
    Scalar::monomial(Monomial::new(k, 0, 0, 0))
}

/// `E_l(X) 1_0` for any integer `l`.
pub fn build_e_one0(l: i64) -> EtaElement {
    if l == 0 {
        return EtaElement::one0();
    }
    let target = l;
    let mut cur = EtaElement::single(1, t_half(-1));
    let mut r = 1;
    loop {
        if r == target {
            return cur;
        }
        // E_{-r} 1_0 = (eta_{s_1} c(Y) + F_r(Y)) E_r 1_0
        let neg = act_eta_s1(&act_y_function(&c_of_y(), &cur)).add(&act_y_function(&f_of_y(r), &cur));
        if -r == target {
            return neg;
        }
        // E_{r+1} 1_0 = t^{-1/2} eta_pi E_{-r} 1_0
        cur = act_eta_pi(&neg).scale(&t_half(-1));
        r += 1;
    }
}

/// `1_0 E_l(X) 1_0 = sum_k 1_0 eta^k K(Y)`: the trailing `1_0` of
/// `E_l(X) 1_0` is expanded as `(1 + eta_{s_1}) t^{-1/2} c(Y)` and the leading
/// `1_0` absorbs `eta_{s_1}` through `1_0 eta_{s_1} = 1_0 t^{-1}(1 - t z)/(1 - t^{-1} z)`.
pub fn build_one0_e_one0(l: i64) -> EtaElement {
    let c = c_of_y();
    let z = Scalar::z();
    let r = (Scalar::one() - Scalar::t() * &z) / (Scalar::one() - &z / Scalar::t());
    let mut out = EtaElement::zero();
    for (k, g) in build_e_one0(l).iter() {
        out.add_term(k, t_half(-1) * g * &c);
        out.add_term(-k, t_half(-3) * r.shift_z(-k) * inv_z(g) * &c);
    }
    out
}

/// Normalization of `eta^k` on `E_{m}` (`Plus`) or `E_{-m}` (`Minus`) as a
/// function of `z` at the `E_m` point. The ratios in `norm_p`, `norm_n` only
/// depend on `l - 2j`.
pub fn eta_norm(k: i64, sign: Sign) -> YFunction {
    let (l, j) = if k >= 0 { (k, 0) } else { (-k, -k) };
    match sign {
        Sign::Plus => norm_p(l, j),
        Sign::Minus => norm_n(l, j),
    }
}

/// Applies `sum_k eta^k g_k(Y)` to `E_m` (`Plus`) or `E_{-m}` (`Minus`),
/// composing each `g_k` with the eta normalization before evaluating.
#[allow(non_snake_case)]
pub fn apply_to_E(e: &EtaElement, m: i64, sign: Sign) -> Result<EVector> {
    let mut out = EVector::zero();
    for (k, g) in e.iter() {
        let (g, base) = match sign {
            Sign::Plus => (g.clone(), m),
            Sign::Minus => (inv_z(g), -m),
        };
        let c = ev(&(g * eta_norm(k, sign)), EvPoint::Numeric(m))?;
        out.add_term(base + k, c);
    }
    Ok(out)
}

/// Same as [`apply_to_E`] but symbolic in `s = q^m`; the result is keyed by
/// the offset `k` of `E_{m+k}` resp. `E_{-m+k}`.
#[allow(non_snake_case)]
pub fn apply_to_E_symbolic(e: &EtaElement, sign: Sign) -> Result<BTreeMap<i64, Scalar>> {
    let mut out = BTreeMap::new();
    for (k, g) in e.iter() {
        let g = match sign {
            Sign::Plus => g.clone(),
            Sign::Minus => inv_z(g),
        };
        let c = ev(&(g * eta_norm(k, sign)), EvPoint::Symbolic)?;
        if !c.is_zero() {
            out.insert(k, c);
        }
    }
    Ok(out)
}

/// Ladder route: evaluate `g_k` on the eigenvector first, then apply the
/// one-step operators `eta`, `eta^{-1}` of the polynomial representation.
/// Fails with `PoleAtEvaluation` where `g_k` has a pole at the eigenvalue.
#[allow(non_snake_case)]
pub fn apply_to_E_ladder(e: &EtaElement, m: i64, sign: Sign) -> Result<EVector> {
    let base = match sign {
        Sign::Plus => m,
        Sign::Minus => -m,
    };
    let mut out = EVector::zero();
    for (k, g) in e.iter() {
        let v = apply_y_function(g, &EVector::unit(base))?;
        out = out.add(&apply_eta_power(&v, k));
    }
    Ok(out)
}
