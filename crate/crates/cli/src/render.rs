//! Text and LaTeX rendering.

use macdaha::LaurentPoly;

/// Canonical text form of a Laurent polynomial in `x`, highest power first.
pub fn poly_text(p: &LaurentPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let parts: Vec<String> = p
        .terms()
        .map(|(k, c)| {
            let x = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            match (c.is_one(), x.is_empty()) {
                (true, true) => "1".into(),
                (true, false) => x,
                (false, true) => format!("({c})"),
                (false, false) => format!("({c})*{x}"),
            }
        })
        .collect();
    parts.join(" + ")
}

pub fn poly_latex(p: &LaurentPoly) -> String {
    p.to_latex()
}
