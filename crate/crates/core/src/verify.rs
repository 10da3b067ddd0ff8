//! Verification suites: operator relations, the eta ladder, the D/K
//! recursions, the A/B/C coefficients, product oracles, GL_2 and Pieri.
//!
//! Every suite is a list of independent cells run through rayon; each cell
//! is sequential and deterministic.

use std::fmt;

use rayon::prelude::*;

use crate::coeffs::{
    a_coeff, a_in_qm, b_coeff, b_in_qm, c_coeff, c_in_qm, d_coeff, d_coeff_recursive, d_neg_coeff,
    d_neg_coeff_recursive, ev, k_coeff, k_from_d, norm_n, norm_p, EvPoint,
};
use crate::error::{Error, Result};
use crate::etacalc::{build_e_one0, build_one0_e_one0};
use crate::laurent::LaurentPoly;
use crate::macdonald::{e_poly, p_poly};
use crate::polyrep::{
    apply_eta, apply_eta_inv, apply_eta_pi, apply_eta_power, apply_eta_s1, apply_t1, apply_t1_inv,
    apply_tau1, apply_tau1_via_t1, apply_taupi, apply_taupi_via_xt1, apply_tpi, apply_tpi_inv,
    apply_x, apply_x_inv, apply_y, apply_y_function, eigen_y, from_e_basis, to_e_basis, EVector,
};
use crate::products::{
    brute_force_product, expand_e_p, expand_eneg_p, expand_p_p, gl2_brute_force, gl2_e,
    gl2_expand_products, pieri_holds, Basis, Gl2Kind, MParam, Partition2, PieriNormalizer,
};
use crate::qtfield::{Monomial, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Relations,
    Ladders,
    Dk,
    Abc,
    Products,
    Gl2,
    Pieri,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Relations,
        Suite::Ladders,
        Suite::Dk,
        Suite::Abc,
        Suite::Products,
        Suite::Gl2,
        Suite::Pieri,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Relations => "relations",
            Suite::Ladders => "ladders",
            Suite::Dk => "dk",
            Suite::Abc => "abc",
            Suite::Products => "products",
            Suite::Gl2 => "gl2",
            Suite::Pieri => "pieri",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    /// Error text when the check could not be evaluated.
    pub detail: Option<String>,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{v} {} {}", self.suite, self.name)?;
        if let Some(d) = &self.detail {
            write!(f, " ({d})")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub results: Vec<CheckResult>,
    /// Free-form findings, e.g. which Pieri normalizer held.
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> usize {
        self.results.iter().filter(|r| r.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.results.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn extend(&mut self, o: Report) {
        self.results.extend(o.results);
        self.notes.extend(o.notes);
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub lmax: i64,
    pub mmax: i64,
}

type Cell = (String, Box<dyn Fn() -> Result<bool> + Send + Sync>);

fn cell<F: Fn() -> Result<bool> + Send + Sync + 'static>(name: String, f: F) -> Cell {
    (name, Box::new(f))
}

fn run_cells(suite: Suite, cells: Vec<Cell>) -> Report {
    let results = cells
        .into_par_iter()
        .map(|(name, f)| match f() {
            Ok(passed) => CheckResult { suite, name, passed, detail: None },
            Err(e) => CheckResult { suite, name, passed: false, detail: Some(e.to_string()) },
        })
        .collect();
    Report { results, notes: Vec::new() }
}

pub fn run(suite: Suite, lim: Limits) -> Report {
    match suite {
        Suite::Relations => relations(lim.lmax),
        Suite::Ladders => ladders(lim.lmax, lim.mmax),
        Suite::Dk => dk(lim.lmax),
        Suite::Abc => {
            let mut r = abc(lim.lmax);
            r.extend(vanishing(lim.lmax, lim.mmax));
            r
        }
        Suite::Products => products(lim.lmax, lim.mmax),
        Suite::Gl2 => gl2(lim.lmax, lim.mmax),
        Suite::Pieri => pieri(lim.lmax, lim.mmax),
    }
}

pub fn run_all(lim: Limits) -> Report {
    let mut r = Report::default();
    for s in Suite::ALL {
        r.extend(run(s, lim));
    }
    r
}

// ---------------------------------------------------------------- relations

fn xk(k: i64) -> LaurentPoly {
    LaurentPoly::monomial(k, Scalar::one())
}

fn on_e<F: Fn(&LaurentPoly) -> LaurentPoly>(f: F, e: &EVector) -> Result<EVector> {
    to_e_basis(&f(&from_e_basis(e)))
}

fn y_e(e: &EVector) -> Result<EVector> {
    on_e(apply_y, e)
}

/// `Y^{-1} = T_1^{-1} T_pi^{-1}`.
fn y_inv_e(e: &EVector) -> Result<EVector> {
    on_e(|f| apply_t1_inv(&apply_tpi_inv(f)), e)
}

fn t1_e(e: &EVector) -> Result<EVector> {
    on_e(apply_t1, e)
}

fn one0_e(e: &EVector) -> Result<EVector> {
    Ok(t1_e(e)?.add(&e.scale(&(Scalar::one() / Scalar::u()))))
}

fn zfn(num: &[(i64, i64, i64)], den: &[(i64, i64, i64)], t_half: i64) -> Scalar {
    let f = |v: &[(i64, i64, i64)]| -> Scalar {
        v.iter().map(|&(a, b, c)| Scalar::one_minus(Monomial::tqz(a, b, c))).product()
    };
    Scalar::monomial(Monomial::new(t_half, 0, 0, 0)) * f(num) / f(den)
}

fn v_half() -> Scalar {
    Scalar::monomial(Monomial::new(0, 1, 0, 0))
}

/// DAHA relations on `span{x^k : |k| <= n + 2}` and `span{E_k : |k| <= n}`.
pub fn relations(n: i64) -> Report {
    let kmax = n + 2;
    let mut cells: Vec<Cell> = Vec::new();
    for k in -kmax..=kmax {
        cells.push(cell(format!("(T1-t^(1/2))(T1+t^(-1/2)) x^{k} = 0"), move || {
            let u = Scalar::u();
            let f = xk(k);
            let g = &apply_t1(&f) + &f.scale(&(Scalar::one() / &u));
            Ok((&apply_t1(&g) - &g.scale(&u)).is_zero())
        }));
        cells.push(cell(format!("T1 X T1 x^{k} = X^-1 x^{k}"), move || {
            Ok(apply_t1(&apply_x(&apply_t1(&xk(k)))) == apply_x_inv(&xk(k)))
        }));
        cells.push(cell(format!("Tpi X Tpi^-1 x^{k} = q^(1/2) X^-1 x^{k}"), move || {
            let lhs = apply_tpi(&apply_x(&apply_tpi_inv(&xk(k))));
            Ok(lhs == apply_x_inv(&xk(k)).scale(&v_half()))
        }));
        cells.push(cell(format!("Tpi^2 x^{k} = x^{k}"), move || {
            Ok(apply_tpi(&apply_tpi(&xk(k))) == xk(k))
        }));
        cells.push(cell(format!("Y T1^-1 x^{k} = Tpi x^{k}"), move || {
            Ok(apply_y(&apply_t1_inv(&xk(k))) == apply_tpi(&xk(k)))
        }));
        cells.push(cell(format!("T1 Y^-1 T1 x^{k} = Y x^{k}"), move || {
            let lhs = apply_t1(&apply_t1_inv(&apply_tpi_inv(&apply_t1(&xk(k)))));
            Ok(lhs == apply_y(&xk(k)))
        }));
    }
    for k in -n..=n {
        let ek = move || EVector::unit(k);
        cells.push(cell(format!("Y E_{k} = eigenvalue E_{k}"), move || {
            let e = e_poly(k);
            Ok(apply_y(&e) == e.scale(&Scalar::monomial(eigen_y(k))))
        }));
        cells.push(cell(format!("tau1 E_{k}: table = T1 route"), move || {
            Ok(apply_tau1(&ek())? == apply_tau1_via_t1(&ek())?)
        }));
        cells.push(cell(format!("taupi E_{k}: table = X T1 route"), move || {
            Ok(apply_taupi(&ek()) == apply_taupi_via_xt1(&ek())?)
        }));
        cells.push(cell(format!("tau1 Y E_{k} = Y^-1 tau1 E_{k}"), move || {
            Ok(apply_tau1(&y_e(&ek())?)? == y_inv_e(&apply_tau1(&ek())?)?)
        }));
        cells.push(cell(format!("taupi Y E_{k} = q^(-1/2) Y^-1 taupi E_{k}"), move || {
            let rhs = y_inv_e(&apply_taupi(&ek()))?.scale(&(Scalar::one() / v_half()));
            Ok(apply_taupi(&y_e(&ek())?) == rhs)
        }));
        cells.push(cell(format!("tau1^2 E_{k} = t^-1 (1-tY^2)(1-tY^-2)/((1-Y^2)(1-Y^-2)) E_{k}"), move || {
            let g = zfn(&[(1, 0, -1), (1, 0, 1)], &[(0, 0, -1), (0, 0, 1)], -2);
            Ok(apply_tau1(&apply_tau1(&ek())?)? == apply_y_function(&g, &ek())?)
        }));
        cells.push(cell(format!("taupi^2 E_{k} = E_{k}"), move || {
            Ok(apply_taupi(&apply_taupi(&ek())) == ek())
        }));
        cells.push(cell(format!("T1 1_0 E_{k} = t^(1/2) 1_0 E_{k}"), move || {
            let o = one0_e(&ek())?;
            Ok(t1_e(&o)? == o.scale(&Scalar::u()))
        }));
        cells.push(cell(format!("1_0 T1 E_{k} = t^(1/2) 1_0 E_{k}"), move || {
            Ok(one0_e(&t1_e(&ek())?)? == one0_e(&ek())?.scale(&Scalar::u()))
        }));
        let g10 = || zfn(&[(1, 0, 1)], &[(0, 0, 1)], -1);
        cells.push(cell(format!("1_0 tau1 E_{k} = 1_0 t^(-1/2)(1-tY^-2)/(1-Y^-2) E_{k}"), move || {
            Ok(one0_e(&apply_tau1(&ek())?)? == one0_e(&apply_y_function(&g10(), &ek())?)?)
        }));
        cells.push(cell(format!("tau1 1_0 E_{k} = t^(-1/2)(1-tY^-2)/(1-Y^-2) 1_0 E_{k}"), move || {
            let o = one0_e(&ek())?;
            Ok(apply_tau1(&o)? == apply_y_function(&g10(), &o)?)
        }));
        cells.push(cell(format!("1_0^2 E_{k} = (t^(1/2)+t^(-1/2)) 1_0 E_{k}"), move || {
            let o = one0_e(&ek())?;
            Ok(one0_e(&o)? == o.scale(&(Scalar::u() + Scalar::one() / Scalar::u())))
        }));
        cells.push(cell(format!("1_0 E_{k} = (tau1 + t^(1/2)(1-t^-1 Y^-2)/(1-Y^-2)) E_{k}"), move || {
            let g = zfn(&[(-1, 0, 1)], &[(0, 0, 1)], 1);
            Ok(one0_e(&ek())? == apply_tau1(&ek())?.add(&apply_y_function(&g, &ek())?))
        }));
        cells.push(cell(format!("eta_pi^2 E_{k} = E_{k}"), move || {
            Ok(apply_eta_pi(&apply_eta_pi(&ek())) == ek())
        }));
        cells.push(cell(format!("eta E_{k} = eta_pi eta_s1 E_{k}"), move || {
            Ok(apply_eta(&ek()) == apply_eta_pi(&apply_eta_s1(&ek())?))
        }));
        cells.push(cell(format!("eta^-1 E_{k} = eta_s1 eta_pi E_{k}"), move || {
            Ok(apply_eta_inv(&ek()) == apply_eta_s1(&apply_eta_pi(&ek()))?)
        }));
        if k != 0 {
            cells.push(cell(format!("eta_s1^2 E_{k} = E_{k}"), move || {
                Ok(apply_eta_s1(&apply_eta_s1(&ek())?)? == ek())
            }));
            cells.push(cell(format!("eta_s1 1_0 E_{k} = 1_0 E_{k}"), move || {
                let o = one0_e(&ek())?;
                Ok(apply_eta_s1(&o)? == o)
            }));
        }
        if k != 0 && k != 1 {
            cells.push(cell(format!("eta eta_s1 E_{k} = eta_s1 eta^-1 E_{k}"), move || {
                Ok(apply_eta(&apply_eta_s1(&ek())?) == apply_eta_s1(&apply_eta_inv(&ek()))?)
            }));
        }
        cells.push(cell(format!("eta Y E_{k} = q^(1/2) Y eta E_{k}"), move || {
            Ok(apply_eta(&y_e(&ek())?) == y_e(&apply_eta(&ek()))?.scale(&v_half()))
        }));
        cells.push(cell(format!("eta_pi Y E_{k} = q^(-1/2) Y^-1 eta_pi E_{k}"), move || {
            let rhs = y_inv_e(&apply_eta_pi(&ek()))?.scale(&(Scalar::one() / v_half()));
            Ok(apply_eta_pi(&y_e(&ek())?) == rhs)
        }));
        cells.push(cell(format!("eta_s1 Y E_{k} = Y^-1 eta_s1 E_{k}"), move || {
            Ok(apply_eta_s1(&y_e(&ek())?)? == y_inv_e(&apply_eta_s1(&ek())?)?)
        }));
        cells.push(cell(format!("1_0 E_{k} = (1+eta_s1) t^(-1/2)(1-tY^2)/(1-Y^2) E_{k}"), move || {
            let g = apply_y_function(&zfn(&[(1, 0, -1)], &[(0, 0, -1)], -1), &ek())?;
            Ok(one0_e(&ek())? == g.add(&apply_eta_s1(&g)?))
        }));
        cells.push(cell(format!("1_0 eta_s1 E_{k} = 1_0 t^-1 (1-tY^-2)/(1-t^-1 Y^-2) E_{k}"), move || {
            let g = zfn(&[(1, 0, 1)], &[(-1, 0, 1)], -2);
            Ok(one0_e(&apply_eta_s1(&ek())?)? == one0_e(&apply_y_function(&g, &ek())?)?)
        }));
    }
    run_cells(Suite::Relations, cells)
}

// ------------------------------------------------------------------ ladders

/// Normalizations of `eta^{-j} eta^{l-j}` on `E_m` and `eta^{l-j} eta^{-j}` on
/// `E_{-m}` against step-by-step ladder application, plus the one-sided
/// inverse laws of `eta`.
pub fn ladders(lmax: i64, mmax: i64) -> Report {
    let mut cells: Vec<Cell> = Vec::new();
    for l in 0..=lmax {
        for j in 0..=l {
            for m in 1..=mmax {
                cells.push(cell(format!("eta^-{j} eta^{} E_{m}", l - j), move || {
                    let got = apply_eta_power(&apply_eta_power(&EVector::unit(m), l - j), -j);
                    let want = ev(&norm_p(l, j), EvPoint::Numeric(m))?;
                    Ok(got == EVector::from_terms([(m + l - 2 * j, want)]))
                }));
                cells.push(cell(format!("eta^{} eta^-{j} E_-{m}", l - j), move || {
                    let got = apply_eta_power(&apply_eta_power(&EVector::unit(-m), -j), l - j);
                    let want = ev(&norm_n(l, j), EvPoint::Numeric(m))?;
                    Ok(got == EVector::from_terms([(-m + l - 2 * j, want)]))
                }));
            }
        }
    }
    let n = mmax.max(lmax);
    for k in -n..=n {
        if k <= 0 || k >= 2 {
            cells.push(cell(format!("eta eta^-1 E_{k} = E_{k}"), move || {
                Ok(apply_eta(&apply_eta_inv(&EVector::unit(k))) == EVector::unit(k))
            }));
        }
        if k != 0 {
            cells.push(cell(format!("eta^-1 eta E_{k} = E_{k}"), move || {
                Ok(apply_eta_inv(&apply_eta(&EVector::unit(k))) == EVector::unit(k))
            }));
        }
    }
    run_cells(Suite::Ladders, cells)
}

// ----------------------------------------------------------------------- dk

/// Closed forms of `D`, `D^{(-l)}` and `K` against the recursions and the
/// eta-module expansions.
pub fn dk(lmax: i64) -> Report {
    let mut cells: Vec<Cell> = Vec::new();
    for l in 0..=lmax {
        for j in 0..=l {
            cells.push(cell(format!("D_{j}^({l}) closed = recursion"), move || {
                Ok(d_coeff(l, j)? == d_coeff_recursive(l, j)?)
            }));
            cells.push(cell(format!("K_{j}^({l}) closed = from D"), move || {
                Ok(k_coeff(l, j)? == k_from_d(l, j)?)
            }));
            if l >= 1 {
                cells.push(cell(format!("D_{j}^(-{l}) closed = recursion"), move || {
                    Ok(d_neg_coeff(l, j)? == d_neg_coeff_recursive(l, j)?)
                }));
            }
        }
        cells.push(cell(format!("E_{} 1_0 entries are D^({l})", l + 1), move || {
            let e = build_e_one0(l + 1);
            let mut ok = e.len() == (l + 1) as usize;
            for j in 0..=l {
                ok &= e.get(l + 1 - 2 * j) == d_coeff(l, j)?;
            }
            Ok(ok)
        }));
        if l >= 1 {
            cells.push(cell(format!("E_-{l} 1_0 entries are D^(-{l})"), move || {
                let e = build_e_one0(-l);
                let mut ok = e.len() == (l + 1) as usize;
                for j in 0..=l {
                    ok &= e.get(-(l - 2 * j)) == d_neg_coeff(l, j)?;
                }
                Ok(ok)
            }));
        }
        cells.push(cell(format!("1_0 E_{l} 1_0 entries are K^({l})"), move || {
            let e = build_one0_e_one0(l);
            let mut ok = true;
            for j in 0..=l {
                ok &= e.get(l - 2 * j) == k_coeff(l, j)?;
            }
            Ok(ok && e.len() <= (l + 1) as usize)
        }));
    }
    run_cells(Suite::Dk, cells)
}

// ---------------------------------------------------------------------- abc

/// `K` to `C`, and `ev_m` of the Y-forms against the `q^m` forms.
pub fn abc(lmax: i64) -> Report {
    let mut cells: Vec<Cell> = Vec::new();
    for l in 1..=lmax {
        for j in 0..=l {
            cells.push(cell(format!("t^(-1/2) C_{j}^({l}) = K_{j}^({l}) norm"), move || {
                let lhs = c_coeff(l, j)? / Scalar::u();
                Ok(lhs == k_coeff(l, j)? * norm_p(l, j))
            }));
            cells.push(cell(format!("ev C_{j}^({l}) = c_{j}^({l})(q^m)"), move || {
                Ok(ev(&c_coeff(l, j)?, EvPoint::Symbolic)? == c_in_qm(l, j)?)
            }));
            if j < l {
                cells.push(cell(format!("ev A_{j}^({l}) = a_{j}^({l})(q^m)"), move || {
                    Ok(ev(&a_coeff(l, j)?, EvPoint::Symbolic)? == a_in_qm(l, j)?)
                }));
                cells.push(cell(format!("ev B_{j}^({l}) = b_{j}^({l})(q^m)"), move || {
                    Ok(ev(&b_coeff(l, j)?, EvPoint::Symbolic)? == b_in_qm(l, j)?)
                }));
            }
        }
    }
    run_cells(Suite::Abc, cells)
}

/// `ev_m(A) = 0` when `m+l-2j < 0`, `ev_m(B) = 0` when `-m+l-2j > 0`,
/// `ev_m(C) = 0` when `m+l-2j < 0`.
pub fn vanishing(lmax: i64, mmax: i64) -> Report {
    let mut cells: Vec<Cell> = Vec::new();
    for l in 1..=lmax {
        for m in 1..=mmax {
            cells.push(cell(format!("vanishing l={l} m={m}"), move || {
                let at = EvPoint::Numeric(m);
                let mut ok = true;
                for j in 0..=l {
                    if m + l - 2 * j < 0 {
                        ok &= ev(&c_coeff(l, j)?, at)?.is_zero();
                        if j < l {
                            ok &= ev(&a_coeff(l, j)?, at)?.is_zero();
                        }
                    }
                    if j < l && -m + l - 2 * j > 0 {
                        ok &= ev(&b_coeff(l, j)?, at)?.is_zero();
                    }
                }
                Ok(ok)
            }));
        }
    }
    run_cells(Suite::Abc, cells)
}

// ----------------------------------------------------------------- products

/// Closed-form expansions against brute-force multiplication: `E_l P_m` and
/// `P_l P_m` for `1 <= l <= lmax`, `E_{-l} P_m` for `0 <= l < lmax`.
pub fn products(lmax: i64, mmax: i64) -> Report {
    let mut cells: Vec<Cell> = Vec::new();
    // largest cells first so the pool stays busy
    for l in (1..=lmax).rev() {
        for m in (1..=mmax).rev() {
            cells.push(cell(format!("E_{l} P_{m}"), move || {
                let bf = brute_force_product(&e_poly(l), &p_poly(m)?, Basis::E)?;
                Ok(bf == expand_e_p(l, MParam::Numeric(m))?)
            }));
            cells.push(cell(format!("P_{l} P_{m}"), move || {
                let bf = brute_force_product(&p_poly(l)?, &p_poly(m)?, Basis::P)?;
                Ok(bf == expand_p_p(l, MParam::Numeric(m))?)
            }));
            let ln = l - 1;
            cells.push(cell(format!("E_-{ln} P_{m}"), move || {
                let bf = brute_force_product(&e_poly(-ln), &p_poly(m)?, Basis::E)?;
                Ok(bf == expand_eneg_p(ln, MParam::Numeric(m))?)
            }));
        }
    }
    run_cells(Suite::Products, cells)
}

// ---------------------------------------------------------------------- gl2

/// Round trip `x1 = x, x2 = 1/x` for `|mu_i| <= 5`, and the GL_2 product
/// rules against bivariate multiplication for `nu1-nu2 <= lmax`,
/// `mu1-mu2 <= mmax`.
pub fn gl2(lmax: i64, mmax: i64) -> Report {
    let mut cells: Vec<Cell> = Vec::new();
    for a in -5..=5i64 {
        cells.push(cell(format!("E_({a},b) -> E_(a-b), |b| <= 5"), move || {
            Ok((-5..=5).all(|b| {
                let f = gl2_e(a, b);
                f.has_integer_exponents() && f.to_sl2() == e_poly(a - b)
            }))
        }));
    }
    for l in 0..=lmax {
        for m in 0..=mmax {
            for (n2, m2) in [(0, 0), (1, -1), (-1, 2)] {
                let nu = (n2 + l, n2);
                let mu = (m2 + m, m2);
                for kind in [Gl2Kind::Pp, Gl2Kind::Ep] {
                    let tag = match kind {
                        Gl2Kind::Pp => "P",
                        Gl2Kind::Ep => "E",
                    };
                    cells.push(cell(format!("{tag}_{nu:?} P_{mu:?}"), move || {
                        Ok(gl2_expand_products(nu, mu, kind)? == gl2_brute_force(nu, mu, kind)?)
                    }));
                }
            }
        }
    }
    run_cells(Suite::Gl2, cells)
}

// -------------------------------------------------------------------- pieri

/// Two-row Pieri comparison over all horizontal strips `lambda/mu` with
/// `|lambda/mu| <= lmax` and `mu1 - mu2 <= mmax`. Passes only when exactly
/// one candidate normalizer works throughout; the report names it.
pub fn pieri(lmax: i64, mmax: i64) -> Report {
    let mut strips = Vec::new();
    for m in 0..=mmax {
        for mu2 in 0..=1 {
            let mu = Partition2 { l1: m + mu2, l2: mu2 };
            for a2 in 0..=m {
                for a1 in 0..=lmax - a2 {
                    strips.push((Partition2 { l1: mu.l1 + a1, l2: mu.l2 + a2 }, mu));
                }
            }
        }
    }
    let holding: Vec<(PieriNormalizer, std::result::Result<bool, Error>)> = PieriNormalizer::ALL
        .into_par_iter()
        .map(|n| {
            let r = strips
                .iter()
                .try_fold(true, |acc, (lambda, mu)| Ok(acc && pieri_holds(*lambda, *mu, n)?));
            (n, r)
        })
        .collect();
    let mut report = Report::default();
    let mut winners = Vec::new();
    for (n, r) in &holding {
        let (passed, detail) = match r {
            Ok(b) => (*b, None),
            Err(e) => (false, Some(e.to_string())),
        };
        if passed {
            winners.push(*n);
        }
        report.notes.push(format!(
            "normalizer {} {} on {} strips{}",
            n.name(),
            if passed { "holds" } else { "fails" },
            strips.len(),
            detail.map(|d| format!(" ({d})")).unwrap_or_default()
        ));
    }
    let passed = winners.len() == 1;
    report.results.push(CheckResult {
        suite: Suite::Pieri,
        name: format!("exactly one normalizer holds for |strip| <= {lmax}, m <= {mmax}"),
        passed,
        detail: (!passed).then(|| format!("{} normalizers hold", winners.len())),
    });
    if let [n] = winners[..] {
        report.notes.push(format!("normalizer used: {}", n.name()));
    }
    report
}
