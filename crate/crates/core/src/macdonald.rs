//! Closed forms for `E_m`, `P_m`, q-Pochhammer symbols and q,t-binomials,
//! plus an independent recursive constructor for `E_m`.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::polyrep::{apply_t1, eigen_z, z_at};
use crate::qtfield::{Monomial, Scalar};

/// `(f; q)_j = (1 - f)(1 - f q) ... (1 - f q^{j-1})`.
pub fn pochhammer(f: &Scalar, j: u32) -> Scalar {
    if let Some((sign, m)) = f.as_signed_monomial() {
        return (0..j as i64)
            .map(|i| {
                let mi = m * Monomial::tqz(0, i, 0);
                if sign > 0 {
                    Scalar::one_minus(mi)
                } else {
                    Scalar::one_plus(mi)
                }
            })
            .product();
    }
    (0..j as i64)
        .map(|i| Scalar::one() - f * &Scalar::monomial(Monomial::tqz(0, i, 0)))
        .product()
}

/// `(m; q)_j` for a monomial `m`.
pub fn poch(m: Monomial, j: i64) -> Scalar {
    assert!(j >= 0, "Pochhammer length must be nonnegative");
    (0..j).map(|i| Scalar::one_minus(m * Monomial::tqz(0, i, 0))).product()
}

/// `1 - t^a q^b`.
pub(crate) fn om(t: i64, q: i64) -> Scalar {
    Scalar::one_minus(Monomial::tqz(t, q, 0))
}

fn qq_over_tq(n: i64) -> Scalar {
    poch(Monomial::tqz(0, 1, 0), n) / poch(Monomial::tqz(1, 0, 0), n)
}

fn check_range(l: i64, j: i64) -> Result<()> {
    if l < 0 || j < 0 || j > l {
        Err(Error::IndexOutOfRange(format!("need 0 <= j <= l, got l={l}, j={j}")))
    } else {
        Ok(())
    }
}

/// q,t-binomial `[l j]`.
pub fn qt_binom(l: i64, j: i64) -> Result<Scalar> {
    check_range(l, j)?;
    Ok(qq_over_tq(l) / (qq_over_tq(j) * qq_over_tq(l - j)))
}

/// Shifted q,t-binomial `{l j} = [l j] (1 - t q^{l-j}) / (1 - t q^l)`.
pub fn shifted_qt_binom(l: i64, j: i64) -> Result<Scalar> {
    Ok(qt_binom(l, j)? * om(1, l - j) / om(1, l))
}

fn e_cache() -> &'static RwLock<HashMap<i64, LaurentPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<i64, LaurentPoly>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Electronic Macdonald polynomial `E_m` from its closed form.
pub fn e_poly(m: i64) -> LaurentPoly {
    if let Some(p) = e_cache().read().unwrap().get(&m) {
        return p.clone();
    }
    let p = if m == 0 {
        LaurentPoly::one()
    } else if m < 0 {
        let l = -m;
        LaurentPoly::from_terms((0..=l).map(|j| {
            let c = qt_binom(l, j).unwrap() * om(1, j) / om(1, l);
            (l - 2 * j, c)
        }))
    } else {
        let l = m;
        LaurentPoly::from_terms((0..l).map(|j| {
            let c = qt_binom(l - 1, j).unwrap()
                * Scalar::monomial(Monomial::tqz(0, l - 1 - j, 0))
                * om(1, j)
                / om(1, l - 1);
            (-l + 2 * j + 2, c)
        }))
    };
    e_cache().write().unwrap().insert(m, p.clone());
    p
}

/// Bosonic Macdonald polynomial `P_m` from its closed form.
pub fn p_poly(m: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return Err(Error::NegativeIndex(m));
    }
    Ok(LaurentPoly::from_terms(
        (0..=m).map(|j| (m - 2 * j, qt_binom(m, j).unwrap())),
    ))
}

/// `E_m` built by the intertwiner recursion from `E_0 = 1`, `E_1 = x`:
/// `E_{-r} = t^{1/2} tau_1 E_r` and `E_{r+1} = t^{-1/2} x T_1 E_{-r}`, with
/// `tau_1 = T_1 + t^{-1/2}(1 - t)/(1 - Y^{-2})`.
pub fn e_poly_recursive(m: i64) -> LaurentPoly {
    let target = m.abs();
    let u = Scalar::u();
    let uinv = Scalar::one() / &u;
    let mut pos = LaurentPoly::one();
    let mut r = 0;
    loop {
        // pos = E_r
        if m == r {
            return pos;
        }
        let neg = if r == 0 {
            LaurentPoly::one()
        } else {
            let zr = z_at(&eigen_z(r));
            let f = &uinv * &om(1, 0) / (Scalar::one() - zr);
            (&apply_t1(&pos) + &pos.scale(&f)).scale(&u)
        };
        if m == -r || r > target {
            return neg;
        }
        pos = apply_t1(&neg).shift(1).scale(&uinv);
        r += 1;
    }
}

/// `P_m = E_{-m} + t(1 - q^m)/(1 - t q^m) E_m`.
pub fn p_from_e_sum(m: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return Err(Error::NegativeIndex(m));
    }
    let c = Scalar::t() * om(0, m) / om(1, m);
    Ok(&e_poly(-m) + &e_poly(m).scale(&c))
}

/// `t^{1/2}(T_1 + t^{-1/2}) E_m`. For `m = 0` this is `(1 + t) P_0`.
pub fn p_from_e_symmetrizer(m: i64) -> Result<LaurentPoly> {
    if m < 0 {
        return Err(Error::NegativeIndex(m));
    }
    let e = e_poly(m);
    Ok(&apply_t1(&e).scale(&Scalar::u()) + &e)
}

/// `P_m` from `E_{±m}`, requiring the sum route and the symmetrizer route to
/// agree.
pub fn p_from_e(m: i64) -> Result<LaurentPoly> {
    let a = p_from_e_sum(m)?;
    let mut b = p_from_e_symmetrizer(m)?;
    if m == 0 {
        b = b.scale(&(Scalar::one() / (Scalar::one() + Scalar::t())));
    }
    if a != b {
        return Err(Error::Internal(format!("symmetrizer routes disagree for P_{m}")));
    }
    Ok(a)
}
