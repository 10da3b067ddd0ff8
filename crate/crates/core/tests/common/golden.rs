//! Worked tables for small cases, transcribed by hand. Each table function
//! records `Case`s comparing a computed value with its transcription.

use super::notation::val;
use macdaha::coeffs::{
    a_coeff, b_coeff, c_coeff, d_coeff, ev, k_coeff, y_binom, EvPoint,
};
use macdaha::etacalc::build_e_one0;
use macdaha::macdonald::{e_poly, p_poly, qt_binom, shifted_qt_binom};
use macdaha::products::{expand_e_p, expand_eneg_p, expand_p_p};
use macdaha::{Basis, Expansion, Index, Label, MParam, Scalar};

pub struct Case {
    pub what: String,
    pub got: String,
    pub want: String,
}

impl Case {
    /// Both sides in canonical text form.
    pub fn ok(&self) -> bool {
        self.got == self.want
    }
}

fn check(out: &mut Vec<Case>, what: &str, got: &Scalar, want: &str) {
    out.push(Case { what: what.to_string(), got: got.to_string(), want: val(want).to_string() });
}

fn check_len(out: &mut Vec<Case>, what: &str, got: usize, want: usize) {
    out.push(Case { what: format!("{what} length"), got: got.to_string(), want: want.to_string() });
}

pub fn qt_binomials(out: &mut Vec<Case>) {
    let table = [
        (0, 0, "1"),
        (1, 0, "1"),
        (1, 1, "1"),
        (2, 0, "1"),
        (2, 1, "(1-q^2)(1-t)/(1-q)(1-tq)"),
        (2, 2, "1"),
        (3, 0, "1"),
        (3, 1, "(1-t)(1-q^3)/(1-q)(1-tq^2)"),
        (3, 2, "(1-t)(1-q^3)/(1-q)(1-tq^2)"),
        (3, 3, "1"),
    ];
    for (k, j, w) in table {
        check(out, &format!("[{k} {j}]"), &qt_binom(k, j).unwrap(), w);
    }
}

pub fn shifted_qt_binomials(out: &mut Vec<Case>) {
    let table = [
        (0, 0, "1"),
        (1, 0, "1"),
        (1, 1, "(1-t)/(1-tq)"),
        (2, 0, "1"),
        (2, 1, "(1-q^2)(1-t)/(1-q)(1-tq^2)"),
        (2, 2, "(1-t)/(1-tq^2)"),
        (3, 0, "1"),
        (3, 1, "(1-t)(1-q^3)/(1-q)(1-tq^3)"),
        // [3 2](1-tq)/(1-tq^3), keeping the factor (1-q^3)/(1-tq^3)
        (3, 2, "(1-t)(1-q^3)(1-tq)/(1-q)(1-tq^2)(1-tq^3)"),
        (3, 3, "(1-t)/(1-tq^3)"),
    ];
    for (k, j, w) in table {
        check(out, &format!("{{{k} {j}}}"), &shifted_qt_binom(k, j).unwrap(), w);
    }
}

pub fn y_binomials_both_forms(out: &mut Vec<Case>) {
    let table: [(i64, i64, &str, Option<&str>); 10] = [
        (0, 0, "1", None),
        (1, 0, "(1-t^{-1}Y^{-2}q)/(1-Y^{-2}q)", Some("t^{-1} * (1-tY^2q^{-1})/(1-Y^2q^{-1})")),
        (1, 1, "(1-tY^{-2}q^{-1})/(1-Y^{-2}q^{-1})", Some("t * (1-t^{-1}Y^2q)/(1-Y^2q)")),
        (
            2,
            0,
            "(1-t^{-1}Y^{-2}q)(1-t^{-1}Y^{-2}q^2)/(1-Y^{-2}q)(1-Y^{-2}q^2)",
            Some("t^{-2} * (1-tY^2q^{-1})(1-tY^2q^{-2})/(1-Y^2q^{-1})(1-Y^2q^{-2})"),
        ),
        (
            2,
            1,
            "(1-t^{-1}Y^{-2})/(1-Y^{-2}q) * (1-tY^{-2})/(1-Y^{-2}q^{-1})",
            Some("(1-tY^2)/(1-Y^2q^{-1}) * (1-t^{-1}Y^2)/(1-Y^2q)"),
        ),
        (
            2,
            2,
            "(1-tY^{-2}q^{-2})(1-tY^{-2}q^{-1})/(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1})",
            Some("t^2 * (1-t^{-1}Y^2q^2)(1-t^{-1}Y^2q)/(1-Y^2q^2)(1-Y^2q)"),
        ),
        (
            3,
            0,
            "(1-t^{-1}Y^{-2}q)(1-t^{-1}Y^{-2}q^2)(1-t^{-1}Y^{-2}q^3)/(1-Y^{-2}q)(1-Y^{-2}q^2)(1-Y^{-2}q^3)",
            None,
        ),
        (
            3,
            1,
            "(1-t^{-1}Y^{-2})(1-t^{-1}Y^{-2}q)/(1-Y^{-2}q)(1-Y^{-2}q^2) * (1-tY^{-2}q)/(1-Y^{-2}q^{-1})",
            None,
        ),
        (
            3,
            2,
            "(1-t^{-1}Y^{-2}q^{-1})/(1-Y^{-2}q) * (1-tY^{-2}q^{-1})(1-tY^{-2})/(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1})",
            None,
        ),
        (
            3,
            3,
            "(1-tY^{-2}q^{-3})(1-tY^{-2}q^{-2})(1-tY^{-2}q^{-1})/(1-Y^{-2}q^{-3})(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1})",
            None,
        ),
    ];
    for (l, j, a, b) in table {
        let got = y_binom(l, j).unwrap();
        check(out, &format!("({l} {j})_Y"), &got, a);
        if let Some(b) = b {
            check(out, &format!("({l} {j})_Y flipped"), &got, b);
        }
    }
}

pub fn d_coefficients(out: &mut Vec<Case>) {
    let table: [(i64, i64, &str, &str); 6] = [
        (0, 0, "t^{-1/2}", "t^{-1/2}"),
        (
            1,
            0,
            "t^{-1} * (1-tY^2q^{-1})/(1-Y^2q^{-1})",
            "t^{-1} * t * (1-t^{-1}Y^{-2}q)/(1-Y^{-2}q)",
        ),
        (
            1,
            1,
            "t^{-1} * qt * (1-t)/(1-tq) * (1-t^{-1}Y^2)/(1-Y^2q)",
            "t^{-1} * (1-t)/(1-tq) * (1-tY^{-2})/(1-Y^{-2}q^{-1})",
        ),
        (
            2,
            0,
            "t^{-3/2} * (1-tY^2q^{-2})(1-tY^2q^{-1})/(1-Y^2q^{-2})(1-Y^2q^{-1})",
            "t^{-3/2} * t^2 * (1-t^{-1}Y^{-2}q)(1-t^{-1}Y^{-2}q^2)/(1-Y^{-2}q)(1-Y^{-2}q^2)",
        ),
        (
            2,
            1,
            "t^{-3/2} * qt * (1-q^2)(1-t)/(1-q)(1-tq^2) * (1-tY^2)/(1-Y^2q^{-1}) * (1-t^{-1}Y^2q^{-1})/(1-Y^2q)",
            "t^{-3/2} * t * (1-q^2)(1-t)/(1-q)(1-tq^2) * (1-t^{-1}Y^{-2})/(1-Y^{-2}q) * (1-tY^{-2}q)/(1-Y^{-2}q^{-1})",
        ),
        (
            2,
            2,
            "t^{-3/2} * q^2t^2 * (1-t)/(1-tq^2) * (1-t^{-1}Y^2)(1-t^{-1}Y^2q)/(1-Y^2q)(1-Y^2q^2)",
            "t^{-3/2} * (1-t)/(1-tq^2) * (1-tY^{-2}q^{-1})(1-tY^{-2})/(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1})",
        ),
    ];
    for (l, j, a, b) in table {
        let got = d_coeff(l, j).unwrap();
        check(out, &format!("D_{j}^({l})"), &got, a);
        check(out, &format!("D_{j}^({l}) second form"), &got, b);
    }
}

pub fn k_coefficients(out: &mut Vec<Case>) {
    let tail = "(1-t^{-1}Y^{-2})/(1-Y^{-2})";
    let table: Vec<(i64, i64, String)> = vec![
        (0, 0, "t^{1/2}+t^{-1/2}".into()),
        (1, 0, tail.into()),
        (1, 1, format!("t^{{-1}} * (1-tY^{{-2}}q^{{-1}})/(1-t^{{-1}}Y^{{-2}}q^{{-1}}) * {tail}")),
        (2, 0, format!("t^{{-1/2}} * t * (1-t^{{-1}}Y^{{-2}}q)/(1-Y^{{-2}}q) * {tail}")),
        (
            2,
            1,
            "t^{-1/2} * (1-q^2)(1-t)/(1-q)(1-tq) * (1-tY^{-2})/(1-Y^{-2}q)(1-Y^{-2}q^{-1}) * (1-t^{-1}Y^{-2})".into(),
        ),
        (
            2,
            2,
            format!("t^{{-1/2}} * t^{{-1}} * (1-tY^{{-2}}q^{{-2}})(1-tY^{{-2}}q^{{-1}})/(1-Y^{{-2}}q^{{-1}})(1-t^{{-1}}Y^{{-2}}q^{{-2}}) * {tail}"),
        ),
        (
            3,
            0,
            format!("t^{{-1}} * t^2 * (1-t^{{-1}}Y^{{-2}}q)(1-t^{{-1}}Y^{{-2}}q^2)(1-t^{{-1}}Y^{{-2}}q^3)/(1-Y^{{-2}}q)(1-Y^{{-2}}q^2)(1-Y^{{-2}}q^3) * (1-Y^{{-2}}q^3)/(1-t^{{-1}}Y^{{-2}}q^3) * {tail}"),
        ),
        (
            3,
            1,
            format!("t^{{-1}} * t * (1-t)(1-q^3)/(1-q)(1-tq^2) * (1-t^{{-1}}Y^{{-2}})(1-t^{{-1}}Y^{{-2}}q)/(1-Y^{{-2}}q)(1-Y^{{-2}}q^2) * (1-tY^{{-2}}q)/(1-Y^{{-2}}q^{{-1}}) * (1-Y^{{-2}}q)/(1-t^{{-1}}Y^{{-2}}q) * {tail}"),
        ),
        (
            3,
            2,
            format!("t^{{-1}} * (1-t)(1-q^3)/(1-q)(1-tq^2) * (1-t^{{-1}}Y^{{-2}}q^{{-1}})/(1-Y^{{-2}}q) * (1-tY^{{-2}}q^{{-1}})(1-tY^{{-2}})/(1-Y^{{-2}}q^{{-2}})(1-Y^{{-2}}q^{{-1}}) * (1-Y^{{-2}}q^{{-1}})/(1-t^{{-1}}Y^{{-2}}q^{{-1}}) * {tail}"),
        ),
        (
            3,
            3,
            format!("t^{{-1}} * t^{{-1}} * (1-tY^{{-2}}q^{{-3}})(1-tY^{{-2}}q^{{-2}})(1-tY^{{-2}}q^{{-1}})/(1-Y^{{-2}}q^{{-3}})(1-Y^{{-2}}q^{{-2}})(1-Y^{{-2}}q^{{-1}}) * (1-Y^{{-2}}q^{{-3}})/(1-t^{{-1}}Y^{{-2}}q^{{-3}}) * {tail}"),
        ),
    ];
    for (l, j, w) in table {
        check(out, &format!("K_{j}^({l})"), &k_coeff(l, j).unwrap(), &w);
    }
}

/// `t^{-(l-2j)/2} K_j^{(l)}` times the ratio of Pochhammers equals
/// `t^{-1/2} C_j^{(l)}`; the worked values are the right-hand sides.
pub fn k_to_c_worked_values(out: &mut Vec<Case>) {
    let table = [
        (1, 0, "t^{-1/2}"),
        (1, 1, "t^{-1/2} (1-t^{-1}Y^{-2})/(1-Y^{-2}) * (1-tY^{-2}q^{-1})/(1-Y^{-2}q^{-1})"),
        (2, 0, "t^{-1/2}"),
        (2, 1, "t^{-1/2} (1-q^2)(1-t)/(1-q)(1-tq) * (1-tY^{-2})(1-t^{-1}Y^{-2})/(1-Y^{-2}q)(1-Y^{-2}q^{-1})"),
        (
            2,
            2,
            "t^{-1/2} (1-tY^{-2}q^{-2})(1-tY^{-2}q^{-1})/(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1}) * (1-t^{-1}Y^{-2}q^{-1})(1-t^{-1}Y^{-2})/(1-Y^{-2}q^{-1})(1-Y^{-2})",
        ),
    ];
    let u_inv = val("t^{-1/2}");
    for (l, j, w) in table {
        let got = &u_inv * &c_coeff(l, j).unwrap();
        check(out, &format!("t^(-1/2) C_{j}^({l})"), &got, w);
    }
}

pub fn e_and_p_polynomials(out: &mut Vec<Case>) {
    let e_table: [(i64, &[(i64, &str)]); 6] = [
        (-2, &[(-2, "1"), (0, "(1-t)(1-q^2)/(1-q)(1-q^2t)"), (2, "(1-t)/(1-q^2t)")]),
        (-1, &[(-1, "1"), (1, "(1-t)/(1-qt)")]),
        (0, &[(0, "1")]),
        (1, &[(1, "1")]),
        (2, &[(2, "1"), (0, "q (1-t)/(1-qt)")]),
        (
            3,
            &[
                (3, "1"),
                (1, "(1-t)q/(1-tq) + (1-t)q^2/(1-tq^2) * (1-t)/(1-tq)"),
                (-1, "(1-t)q^2/(1-tq^2)"),
            ],
        ),
    ];
    for (n, terms) in e_table {
        let e = e_poly(n);
        check_len(out, &format!("E_{n}"), e.len(), terms.len());
        for (k, w) in terms {
            check(out, &format!("E_{n} [x^{k}]"), &e.coeff(*k), w);
        }
    }
    let p_table: [(i64, &[(i64, &str)]); 5] = [
        (0, &[(0, "1")]),
        (1, &[(1, "1"), (-1, "1")]),
        (2, &[(2, "1"), (-2, "1"), (0, "(1-q^2)(1-t)/(1-q)(1-qt)")]),
        (
            3,
            &[(3, "1"), (-3, "1"), (1, "(1-q^3)(1-t)/(1-q^2t)(1-q)"), (-1, "(1-q^3)(1-t)/(1-q^2t)(1-q)")],
        ),
        (
            4,
            &[
                (4, "1"),
                (-4, "1"),
                (2, "(1-q^4)(1-t)/(1-q^3t)(1-q)"),
                (-2, "(1-q^4)(1-t)/(1-q^3t)(1-q)"),
                (0, "(1-q^4)(1-q^3)(1-qt)(1-t)/(1-q^3t)(1-q^2t)(1-q^2)(1-q)"),
            ],
        ),
    ];
    for (n, terms) in p_table {
        let p = p_poly(n).unwrap();
        check_len(out, &format!("P_{n}"), p.len(), terms.len());
        for (k, w) in terms {
            check(out, &format!("P_{n} [x^{k}]"), &p.coeff(*k), w);
        }
    }
}

fn e_lab(mc: i64, off: i64) -> Label {
    Label::Sl2(Basis::E, Index::symbolic(mc, off))
}

fn p_lab(mc: i64, off: i64) -> Label {
    Label::Sl2(Basis::P, Index::symbolic(mc, off))
}

fn check_expansion(out: &mut Vec<Case>, what: &str, got: &Expansion, want: &[(Label, &str)]) {
    check_len(out, what, got.len(), want.len());
    for (lab, w) in want {
        check(out, &format!("{what} at {lab}"), &got.get(lab), w);
    }
}

pub fn e_times_p_in_q_powers(out: &mut Vec<Case>) {
    let cases: [(i64, Vec<(Label, &str)>); 3] = [
        (1, vec![(e_lab(1, 1), "1"), (e_lab(-1, 1), "(1-q^m)/(1-tq^m)")]),
        (
            2,
            vec![
                (e_lab(1, 2), "1"),
                (e_lab(1, 0), "(1-t)/(1-tq) * (1-q^m)/(1-tq^{m-1}) * (1-t^2q^m)/(1-tq^m)"),
                (
                    e_lab(-1, 2),
                    "(1-q^{m-1})/(1-tq^{m-1}) * (1-q^m)/(1-tq^m) * (1-t^2q^{m-1})/(1-tq^{m-1})",
                ),
                (e_lab(-1, 0), "q (1-t)/(1-tq) * (1-q^m)/(1-tq^{m+1})"),
            ],
        ),
        (
            3,
            vec![
                (e_lab(1, 3), "1"),
                (
                    e_lab(1, 1),
                    "(1-t)(1-q^2)/(1-q)(1-tq^2) * (1-q^m)/(1-tq^{m-1}) * (1-t^2q^{m+1})/(1-tq^{m+1})",
                ),
                (
                    e_lab(1, -1),
                    "(1-t)/(1-tq^2) * (1-q^{m-1})(1-q^m)/(1-tq^{m-2})(1-tq^{m-1}) * (1-t^2q^{m-1})(1-t^2q^m)/(1-tq^{m-1})(1-tq^m)",
                ),
                (
                    e_lab(-1, 3),
                    "(1-q^{m-2})(1-q^{m-1})(1-q^m)/(1-tq^{m-2})(1-tq^{m-1})(1-tq^m) * (1-t^2q^{m-2})(1-t^2q^{m-1})/(1-tq^{m-2})(1-tq^{m-1})",
                ),
                (
                    e_lab(-1, 1),
                    "q (1-t)(1-q^2)/(1-q)(1-tq^2) * (1-q^{m-1})(1-q^m)/(1-tq^m)(1-tq^{m+1}) * (1-t^2q^m)/(1-tq^{m-1})",
                ),
                (e_lab(-1, -1), "q^2 (1-t)/(1-tq^2) * (1-q^m)/(1-tq^{m+2})"),
            ],
        ),
    ];
    for (l, want) in cases {
        let got = expand_e_p(l, MParam::Symbolic).unwrap();
        check_expansion(out, &format!("E_{l} P_m"), &got, &want);
    }
}

pub fn e_neg_times_p_in_q_powers(out: &mut Vec<Case>) {
    let cases: [(i64, Vec<(Label, &str)>); 3] = [
        (0, vec![(e_lab(-1, 0), "1"), (e_lab(1, 0), "t (1-q^m)/(1-tq^m)")]),
        (
            1,
            vec![
                (e_lab(-1, -1), "1"),
                (e_lab(-1, 1), "(1-t)/(1-tq) * (1-q^m)/(1-tq^{m-1}) * (1-t^2q^m)/(1-tq^m)"),
                (
                    e_lab(1, -1),
                    "t (1-q^{m-1})/(1-tq^{m-1}) * (1-q^m)/(1-tq^m) * (1-t^2q^{m-1})/(1-tq^{m-1})",
                ),
                (e_lab(1, 1), "tq (1-t)/(1-tq) * (1-q^m)/(1-tq^{m+1})"),
            ],
        ),
        (
            2,
            vec![
                (e_lab(-1, -2), "1"),
                (
                    e_lab(-1, 0),
                    "(1-t)(1-q^2)/(1-q)(1-tq^2) * (1-q^m)/(1-tq^{m-1}) * (1-t^2q^{m+1})/(1-tq^{m+1})",
                ),
                (
                    e_lab(-1, 2),
                    "(1-t)/(1-tq^2) * (1-q^{m-1})(1-q^m)/(1-tq^{m-2})(1-tq^{m-1}) * (1-t^2q^{m-1})(1-t^2q^m)/(1-tq^{m-1})(1-tq^m)",
                ),
                (
                    e_lab(1, -2),
                    "t (1-q^{m-2})(1-q^{m-1})(1-q^m)/(1-tq^{m-2})(1-tq^{m-1})(1-tq^m) * (1-t^2q^{m-2})(1-t^2q^{m-1})/(1-tq^{m-2})(1-tq^{m-1})",
                ),
                (
                    e_lab(1, 0),
                    "tq (1-t)(1-q^2)/(1-q)(1-tq^2) * (1-q^{m-1})(1-q^m)/(1-tq^{m-1})(1-tq^m) * (1-t^2q^m)/(1-tq^{m+1})",
                ),
                (e_lab(1, 2), "tq^2 (1-t)/(1-tq^2) * (1-q^m)/(1-tq^{m+2})"),
            ],
        ),
    ];
    for (l, want) in cases {
        let got = expand_eneg_p(l, MParam::Symbolic).unwrap();
        check_expansion(out, &format!("E_-{l} P_m"), &got, &want);
    }
}

pub fn p_times_p_in_q_powers(out: &mut Vec<Case>) {
    let cases: [(i64, Vec<(Label, &str)>); 3] = [
        (1, vec![(p_lab(1, 1), "1"), (p_lab(1, -1), "(1-q^m)/(1-tq^m) * (1-t^2q^{m-1})/(1-tq^{m-1})")]),
        (
            2,
            vec![
                (p_lab(1, 2), "1"),
                (p_lab(1, 0), "(1-q^2)(1-t)/(1-tq)(1-q) * (1-q^m)/(1-tq^{m+1}) * (1-t^2q^m)/(1-tq^{m-1})"),
                (
                    p_lab(1, -2),
                    "(1-q^{m-1})(1-q^m)/(1-tq^{m-1})(1-tq^m) * (1-t^2q^{m-2})(1-t^2q^{m-1})/(1-tq^{m-2})(1-tq^{m-1})",
                ),
            ],
        ),
        (
            3,
            vec![
                (p_lab(1, 3), "1"),
                (
                    p_lab(1, 1),
                    "(1-t)(1-q^3)/(1-q)(1-tq^2) * (1-q^m)/(1-tq^{m+2}) * (1-t^2q^{m+1})/(1-tq^{m-1})",
                ),
                (
                    p_lab(1, -1),
                    "(1-t)(1-q^3)/(1-q)(1-tq^2) * (1-q^{m-1})(1-q^m)/(1-tq^m)(1-tq^{m+1}) * (1-t^2q^{m-1})(1-t^2q^m)/(1-tq^{m-2})(1-tq^{m-1})",
                ),
                (
                    p_lab(1, -3),
                    "(1-q^{m-2})(1-q^{m-1})(1-q^m)/(1-tq^{m-2})(1-tq^{m-1})(1-tq^m) * (1-t^2q^{m-3})(1-t^2q^{m-2})(1-t^2q^{m-1})/(1-tq^{m-3})(1-tq^{m-2})(1-tq^{m-1})",
                ),
            ],
        ),
    ];
    for (l, want) in cases {
        let got = expand_p_p(l, MParam::Symbolic).unwrap();
        check_expansion(out, &format!("P_{l} P_m"), &got, &want);
    }
}

/// Y-forms of the product coefficients, compared before evaluation.
pub fn product_coefficients_as_y_functions(out: &mut Vec<Case>) {
    let a = [
        (1, 0, "1"),
        (2, 0, "1"),
        (2, 1, "(1-t)/(1-tq) * (1-t^{-1}Y^{-2})/(1-Y^{-2}q^{-1}) * (1-tY^{-2})/(1-Y^{-2})"),
        (3, 1, "(1-q^2)(1-t)/(1-q)(1-tq^2) * (1-t^{-1}Y^{-2})/(1-Y^{-2}q^{-1}) * (1-tY^{-2}q)/(1-Y^{-2}q)"),
        (
            3,
            2,
            "(1-t)/(1-tq^2) * (1-t^{-1}Y^{-2}q^{-1})(1-t^{-1}Y^{-2})/(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1}) * (1-tY^{-2}q^{-1})(1-tY^{-2})/(1-Y^{-2}q^{-1})(1-Y^{-2})",
        ),
    ];
    for (l, j, w) in a {
        check(out, &format!("A_{j}^({l})"), &a_coeff(l, j).unwrap(), w);
    }
    let b = [
        (1, 0, "(1-t^{-1}Y^{-2})/(1-Y^{-2})"),
        (2, 0, "(1-t^{-1}Y^{-2}q^{-1})/(1-Y^{-2}q^{-1}) * (1-t^{-1}Y^{-2})/(1-Y^{-2}) * (1-tY^{-2}q^{-1})/(1-Y^{-2}q^{-1})"),
        (2, 1, "q (1-t)/(1-tq) * (1-t^{-1}Y^{-2})/(1-Y^{-2}q)"),
        (
            3,
            0,
            "(1-t^{-1}Y^{-2}q^{-2})(1-t^{-1}Y^{-2}q^{-1})(1-t^{-1}Y^{-2})/(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1})(1-Y^{-2}) * (1-tY^{-2}q^{-2})(1-tY^{-2}q^{-1})/(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1})",
        ),
        (
            3,
            1,
            "q (1-q^2)(1-t)/(1-q)(1-tq^2) * (1-t^{-1}Y^{-2}q^{-1})(1-t^{-1}Y^{-2})/(1-Y^{-2})(1-Y^{-2}q) * (1-tY^{-2})/(1-Y^{-2}q^{-1})",
        ),
        (3, 2, "q^2 (1-t)/(1-tq^2) * (1-t^{-1}Y^{-2})/(1-Y^{-2}q^2)"),
    ];
    for (l, j, w) in b {
        check(out, &format!("B_{j}^({l})"), &b_coeff(l, j).unwrap(), w);
    }
    let c = [
        (1, 1, "(1-t^{-1}Y^{-2})/(1-Y^{-2}) * (1-tY^{-2}q^{-1})/(1-Y^{-2}q^{-1})"),
        (2, 1, "(1-q^2)(1-t)/(1-q)(1-tq) * (1-t^{-1}Y^{-2})/(1-Y^{-2}q) * (1-tY^{-2})/(1-Y^{-2}q^{-1})"),
        (
            2,
            2,
            "(1-t^{-1}Y^{-2}q^{-1})(1-t^{-1}Y^{-2})/(1-Y^{-2}q^{-1})(1-Y^{-2}) * (1-tY^{-2}q^{-2})(1-tY^{-2}q^{-1})/(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1})",
        ),
        (3, 1, "(1-t)(1-q^3)/(1-q)(1-tq^2) * (1-t^{-1}Y^{-2})/(1-Y^{-2}q^2) * (1-tY^{-2}q)/(1-Y^{-2}q^{-1})"),
        (
            3,
            2,
            "(1-t)(1-q^3)/(1-q)(1-tq^2) * (1-t^{-1}Y^{-2}q^{-1})(1-t^{-1}Y^{-2})/(1-Y^{-2})(1-Y^{-2}q) * (1-tY^{-2}q^{-1})(1-tY^{-2})/(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1})",
        ),
        (
            3,
            3,
            "(1-t^{-1}Y^{-2}q^{-2})(1-t^{-1}Y^{-2}q^{-1})(1-t^{-1}Y^{-2})/(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1})(1-Y^{-2}) * (1-tY^{-2}q^{-3})(1-tY^{-2}q^{-2})(1-tY^{-2}q^{-1})/(1-Y^{-2}q^{-3})(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1})",
        ),
    ];
    for (l, j, w) in c {
        check(out, &format!("C_{j}^({l})"), &c_coeff(l, j).unwrap(), w);
    }
}

/// `ev_m` of a Y-form is the q^m-form: `E_1 P_m` and `E_0 P_m`.
pub fn ev_of_y_form_gives_q_power_form(out: &mut Vec<Case>) {
    let y = val("(1-t^{-1}Y^{-2})/(1-Y^{-2})");
    check(out, "ev_m", &ev(&y, EvPoint::Symbolic).unwrap(), "(1-q^m)/(1-tq^m)");
}

pub fn eta_expansions_of_e_one0(out: &mut Vec<Case>) {
    let e1 = build_e_one0(1);
    check_len(out, "E_1 1_0", e1.len(), 1);
    check(out, "E_1 1_0 at eta^1", &e1.get(1), "t^{-1/2}");

    let e2 = build_e_one0(2);
    check_len(out, "E_2 1_0", e2.len(), 2);
    check(out, "E_2 1_0 at eta^2", &e2.get(2), "t^{-1} (1-tY^2q^{-1})/(1-Y^2q^{-1})");
    check(out, "E_2 1_0 at eta^0", &e2.get(0), "t^{-1} qt (1-t)(1-t^{-1}Y^2)/(1-tq)(1-Y^2q)");

    let e3 = build_e_one0(3);
    check_len(out, "E_3 1_0", e3.len(), 3);
    check(out, 
        "E_3 1_0 at eta^3",
        &e3.get(3),
        "t^{-3/2} (1-tY^2q^{-2})(1-tY^2q^{-1})/(1-Y^2q^{-2})(1-Y^2q^{-1})",
    );
    check(out, 
        "E_3 1_0 at eta^-1",
        &e3.get(-1),
        "t^{-3/2} (1-t)/(1-tq^2) * (1-tY^{-2})(1-tY^{-2}q^{-1})/(1-Y^{-2}q^{-2})(1-Y^{-2}q^{-1})",
    );
    // t^{-3/2}: D_1^{(2)} and the ladder agree
    check(out, 
        "E_3 1_0 at eta^1",
        &e3.get(1),
        "t^{-3/2} (1-t)(1-q^2)/(1-tq^2)(1-q) * q (1-tY^2)(1-tqY^{-2})/(1-Y^2q)(1-Y^{-2}q)",
    );
}

pub type Table = fn(&mut Vec<Case>);

pub const TABLES: [(&str, Table); 13] = [
    ("q-t binomials", qt_binomials),
    ("shifted q-t binomials", shifted_qt_binomials),
    ("Y-binomials", y_binomials_both_forms),
    ("D coefficients", d_coefficients),
    ("K coefficients", k_coefficients),
    ("K to C", k_to_c_worked_values),
    ("E and P polynomials", e_and_p_polynomials),
    ("E_l P_m", e_times_p_in_q_powers),
    ("E_-l P_m", e_neg_times_p_in_q_powers),
    ("P_l P_m", p_times_p_in_q_powers),
    ("A, B, C as Y-functions", product_coefficients_as_y_functions),
    ("ev of a Y-form", ev_of_y_form_gives_q_power_form),
    ("E_l 1_0", eta_expansions_of_e_one0),
];
