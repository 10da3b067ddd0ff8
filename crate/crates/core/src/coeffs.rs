//! Y-binomials, the `D` and `K` coefficients with their recursions, the
//! universal coefficients `A`, `B`, `C`, and evaluation at `Y = t^{-1/2}q^{-m/2}`.

use crate::error::{Error, Result};
use crate::macdonald::{om, poch, qt_binom, shifted_qt_binom};
use crate::qtfield::{Monomial, Scalar, Substitution, Var};

/// Rational function of `z = Y^{-2}` (variables `u, v, z` only).
pub type YFunction = Scalar;

/// Evaluation point for `ev_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvPoint {
    /// `z -> t q^m`.
    Numeric(i64),
    /// `z -> t s` with `s = q^m`.
    Symbolic,
}

fn zm(t: i64, q: i64) -> Monomial {
    Monomial::tqz(t, q, 1)
}

/// `1 - t^a q^b z`.
fn omz(t: i64, q: i64) -> Scalar {
    Scalar::one_minus(zm(t, q))
}

fn thalf(k: i64) -> Scalar {
    Scalar::monomial(Monomial::new(k, 0, 0, 0))
}

fn check(l: i64, j: i64, jmax: i64) -> Result<()> {
    if l < 0 || j < 0 || j > jmax {
        Err(Error::IndexOutOfRange(format!("l={l}, j={j}")))
    } else {
        Ok(())
    }
}

/// `(l j)_Y`.
pub fn y_binom(l: i64, j: i64) -> Result<YFunction> {
    check(l, j, l)?;
    Ok(poch(zm(-1, -(j - 1)), l - j) * poch(zm(1, l - 2 * j), j)
        / (poch(zm(0, 1), l - j) * poch(zm(0, -j), j)))
}

/// `D_j^{(l)}` closed form, `l >= 0`.
pub fn d_coeff(l: i64, j: i64) -> Result<YFunction> {
    check(l, j, l)?;
    Ok(thalf(-(l + 1))
        * thalf(2 * (l - j))
        * qt_binom(l, j)?
        * y_binom(l, j)?
        * om(1, l - j)
        / om(1, l)
        * omz(1, l - j)
        / omz(1, l - 2 * j))
}

/// `D_j^{(-l)}` closed form, `l >= 1`.
pub fn d_neg_coeff(l: i64, j: i64) -> Result<YFunction> {
    if l < 1 {
        return Err(Error::IndexOutOfRange(format!("D^(-l) needs l >= 1, got {l}")));
    }
    check(l, j, l)?;
    Ok(thalf(-l)
        * Scalar::monomial(Monomial::tqz(j, j, 0))
        * qt_binom(l, j)?
        * y_binom(l, l - j)?
        * om(1, l - j)
        / om(1, l)
        * omz(-1, -(l - j))
        / omz(-1, -(l - 2 * j)))
}

/// `K_j^{(l)}` closed form; `K_0^{(0)} = t^{1/2} + t^{-1/2}`.
pub fn k_coeff(l: i64, j: i64) -> Result<YFunction> {
    check(l, j, l)?;
    if l == 0 {
        return Ok(thalf(1) + thalf(-1));
    }
    Ok(thalf(-(l - 1))
        * thalf(2 * (l - 1 - j))
        * qt_binom(l, j)?
        * y_binom(l, j)?
        * omz(0, l - 2 * j)
        / omz(-1, l - 2 * j)
        * omz(-1, 0)
        / omz(0, 0))
}

fn inv_z(f: &Scalar) -> Scalar {
    f.invert_z().expect("Y-functions do not involve s")
}

/// Row `l` of the `D` triangle from `D_0^{(0)} = t^{-1/2}` by the Pascal-type
/// recursion.
pub fn d_row_recursive(l: i64) -> Result<Vec<YFunction>> {
    if l < 0 {
        return Err(Error::IndexOutOfRange(format!("l={l}")));
    }
    let mut row = vec![thalf(-1)];
    for n in 1..=l {
        let mut next = Vec::with_capacity(n as usize + 1);
        next.push(thalf(1) * omz(-1, n) / omz(0, n) * &row[0]);
        for j in 1..n {
            let a = thalf(1) * omz(-1, n - 2 * j) / omz(0, n - 2 * j) * &row[j as usize];
            let b = thalf(-1) * om(1, 0) * omz(1, 2 * n - 2 * j)
                / (om(1, n) * omz(0, n - 2 * j))
                * inv_z(&row[(n - j) as usize]);
            next.push(a + b);
        }
        next.push(thalf(-1) * om(1, 0) * omz(1, 0) / (om(1, n) * omz(0, -n)) * inv_z(&row[0]));
        row = next;
    }
    Ok(row)
}

pub fn d_coeff_recursive(l: i64, j: i64) -> Result<YFunction> {
    check(l, j, l)?;
    Ok(d_row_recursive(l)?.swap_remove(j as usize))
}

/// `D_j^{(-l)} = t^{1/2} D_j^{(l)}(Y^{-1})` from the recursion.
pub fn d_neg_coeff_recursive(l: i64, j: i64) -> Result<YFunction> {
    Ok(thalf(1) * inv_z(&d_coeff_recursive(l, j)?))
}

fn k_from_row(l: i64, j: i64, row: &[YFunction], y_squared: bool) -> YFunction {
    let tail = omz(-1, 0) / omz(0, 0);
    // variant middle-term factor: (1 - t^{-1} Y^2)/(1 - Y^{-2}) = (1 - t^{-1} z^{-1})/(1 - z)
    let tail_y_squared = (Scalar::one() - Scalar::monomial(Monomial::new(-2, 0, 0, -1))) / omz(0, 0);
    if j == 0 {
        return thalf(1) * &row[0] * tail;
    }
    if j == l {
        return thalf(-1) * inv_z(&row[0]) * omz(1, -l) / omz(-1, -l) * tail;
    }
    let first = thalf(1) * &row[j as usize] * &tail;
    let second_tail = if y_squared { tail_y_squared } else { tail };
    let second = thalf(-1) * inv_z(&row[(l - j) as usize]) * omz(1, l - 2 * j) / omz(-1, l - 2 * j)
        * second_tail;
    first + second
}

/// `K_j^{(l)}` assembled from row `l - 1` of the recursive `D` triangle.
pub fn k_from_d(l: i64, j: i64) -> Result<YFunction> {
    check(l, j, l)?;
    if l == 0 {
        return Ok(thalf(1) + thalf(-1));
    }
    Ok(k_from_row(l, j, &d_row_recursive(l - 1)?, false))
}

/// The same assembly with the middle-term factor `(1 - t^{-1}Y^2)/(1 - Y^{-2})`
/// taken literally; kept to show that it does not reproduce `K`.
pub fn k_from_d_y_squared_variant(l: i64, j: i64) -> Result<YFunction> {
    check(l, j, l)?;
    if l == 0 {
        return Ok(thalf(1) + thalf(-1));
    }
    Ok(k_from_row(l, j, &d_row_recursive(l - 1)?, true))
}

/// `C_j^{(l)}`, `0 <= j <= l`.
pub fn c_coeff(l: i64, j: i64) -> Result<YFunction> {
    check(l, j, l)?;
    Ok(qt_binom(l, j)? * poch(zm(-1, -(j - 1)), j) * poch(zm(1, l - 2 * j), j)
        / (poch(zm(0, l - 2 * j + 1), j) * poch(zm(0, -j), j)))
}

/// `A_j^{(l)}`, `0 <= j <= l - 1`.
pub fn a_coeff(l: i64, j: i64) -> Result<YFunction> {
    check(l, j, l - 1)?;
    Ok(qt_binom(l, j)? * om(0, l - j) / om(0, l) * poch(zm(-1, -(j - 1)), j)
        * poch(zm(1, l - 2 * j), j)
        / (poch(zm(0, -j), j) * poch(zm(0, l - 2 * j), j)))
}

/// `B_j^{(l)}`, `0 <= j <= l - 1`.
pub fn b_coeff(l: i64, j: i64) -> Result<YFunction> {
    check(l, j, l - 1)?;
    let k = l - j;
    Ok(Scalar::monomial(Monomial::tqz(0, j, 0)) * qt_binom(l, j)? * om(0, k) / om(0, l)
        * poch(zm(-1, -(k - 1)), k)
        * poch(zm(1, -(l - 2 * j - 1)), k - 1)
        / (poch(zm(0, -(l - 2 * j - 1)), k) * poch(zm(0, -(k - 1)), k - 1)))
}

/// `A_j^{(l)}` through the shifted binomial `{l-1 j}`.
pub fn a_coeff_shifted(l: i64, j: i64) -> Result<YFunction> {
    check(l, j, l - 1)?;
    Ok(shifted_qt_binom(l - 1, j)? * poch(zm(-1, -(j - 1)), j) * poch(zm(1, l - 2 * j), j)
        / (poch(zm(0, -j), j) * poch(zm(0, l - 2 * j), j)))
}

/// `B_j^{(l)}` through the shifted binomial `{l-1 j}`.
pub fn b_coeff_shifted(l: i64, j: i64) -> Result<YFunction> {
    check(l, j, l - 1)?;
    let k = l - j;
    Ok(Scalar::monomial(Monomial::tqz(0, j, 0)) * shifted_qt_binom(l - 1, j)?
        * poch(zm(-1, -(k - 1)), k)
        * poch(zm(1, -(l - 2 * j - 1)), k - 1)
        / (poch(zm(0, -(l - 2 * j - 1)), k) * poch(zm(0, -(k - 1)), k - 1)))
}

/// `c(Y) = (1 - t Y^2)/(1 - Y^2) = t (1 - t^{-1} z)/(1 - z)`.
pub fn c_of_y() -> YFunction {
    Scalar::t() * omz(-1, 0) / omz(0, 0)
}

/// `F_l(Y) = (1 - t)(1 - t Y^2 q^l)/((1 - t q^l)(1 - Y^2))`.
pub fn f_of_y(l: i64) -> YFunction {
    let z = Scalar::z();
    let one = Scalar::one();
    om(1, 0) * (&one - Scalar::monomial(Monomial::tqz(1, l, 0)) / &z) / (om(1, l) * (&one - &one / &z))
}

/// Normalization of `eta^{-j} eta^{l-j}` on `E_m`, as a function of `z`:
/// `t^{-(l-2j)/2} (t^{-1}z q^{l-2j};q)_j/(z q^{l-2j};q)_j (z;q)_{l-j}/(t^{-1}z;q)_{l-j}`.
pub fn norm_p(l: i64, j: i64) -> YFunction {
    thalf(-(l - 2 * j)) * poch(zm(-1, l - 2 * j), j) / poch(zm(0, l - 2 * j), j) * poch(zm(0, 0), l - j)
        / poch(zm(-1, 0), l - j)
}

/// Normalization of `eta^{l-j} eta^{-j}` on `E_{-m}`, as a function of `z`
/// evaluated at the `E_m` point.
pub fn norm_n(l: i64, j: i64) -> YFunction {
    thalf(l - 2 * j) * poch(zm(-1, -(l - 2 * j) + 1), l - j) / poch(zm(0, -(l - 2 * j) + 1), l - j)
        * poch(zm(0, 1), j)
        / poch(zm(-1, 1), j)
}

fn ev_substitution(at: EvPoint) -> Substitution {
    let img = match at {
        EvPoint::Numeric(m) => Monomial::new(2, 2 * m, 0, 0),
        EvPoint::Symbolic => Monomial::new(2, 0, 1, 0),
    };
    Substitution::new().bind(Var::Z, 1, img)
}

/// `ev_m`: `Y -> t^{-1/2} q^{-m/2}`, i.e. `z -> t q^m`.
pub fn ev(f: &YFunction, at: EvPoint) -> Result<Scalar> {
    f.substitute(&ev_substitution(at))
}

/// Specializes `s -> q^m`.
pub fn specialize_s(f: &Scalar, m: i64) -> Result<Scalar> {
    f.substitute(&Substitution::new().bind(Var::S, 1, Monomial::new(0, 2 * m, 0, 0)))
}

fn poch_s(t: i64, q: i64, len: i64) -> Scalar {
    poch(Monomial::new(2 * t, 2 * q, 1, 0), len)
}

/// `c_j^{(l)}(q^m)` written directly in `s = q^m`.
pub fn c_in_qm(l: i64, j: i64) -> Result<Scalar> {
    check(l, j, l)?;
    Ok(qt_binom(l, j)? * poch_s(0, -(j - 1), j) / poch_s(1, -j, j) * poch_s(2, l - 2 * j, j)
        / poch_s(1, l - 2 * j + 1, j))
}

fn oms(t: i64, q: i64) -> Scalar {
    Scalar::one_minus(Monomial::new(2 * t, 2 * q, 1, 0))
}

/// `a_j^{(l)}(q^m)` written directly in `s = q^m`.
pub fn a_in_qm(l: i64, j: i64) -> Result<Scalar> {
    check(l, j, l - 1)?;
    Ok(c_in_qm(l, j)? * om(0, l - j) / om(0, l) * oms(1, l - j) / oms(1, l - 2 * j))
}

/// `b_j^{(l)}(q^m)` written directly in `s = q^m`.
pub fn b_in_qm(l: i64, j: i64) -> Result<Scalar> {
    check(l, j, l - 1)?;
    Ok(c_in_qm(l, l - j)? * Scalar::monomial(Monomial::tqz(0, j, 0)) * om(0, l - j) / om(0, l)
        * oms(1, -(l - j))
        / oms(2, -(l - 2 * j)))
}
