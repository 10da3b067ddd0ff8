//! JSON documents. Every document parses back into core objects and
//! re-serializes byte for byte.

use macdaha::etacalc::EtaElement;
use macdaha::{Basis, Error, Expansion, Index, Label, LaurentPoly, Poly, Result, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frac {
    pub num: String,
    pub den: String,
}

impl Frac {
    pub fn of(c: &Scalar) -> Frac {
        let (n, d) = c.to_fraction();
        Frac { num: n.to_string(), den: d.to_string() }
    }

    pub fn scalar(&self) -> Result<Scalar> {
        let n: Poly = self.num.parse()?;
        let d: Poly = self.den.parse()?;
        Scalar::from_fraction(n, d)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub exp: i64,
    pub coeff: Frac,
}

/// `E_n` or `P_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub kind: String,
    pub index: i64,
    pub terms: Vec<PolyTerm>,
}

impl PolyDoc {
    pub fn new(kind: &str, index: i64, p: &LaurentPoly) -> PolyDoc {
        let terms = p.terms().map(|(k, c)| PolyTerm { exp: k, coeff: Frac::of(c) }).collect();
        PolyDoc { kind: kind.into(), index, terms }
    }

    pub fn poly(&self) -> Result<LaurentPoly> {
        let mut p = LaurentPoly::zero();
        for t in &self.terms {
            p.add_term(t.exp, t.coeff.scalar()?);
        }
        Ok(p)
    }
}

/// A single coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffDoc {
    pub kind: String,
    pub name: String,
    pub l: i64,
    pub j: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ev: Option<i64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub symbolic_m: bool,
    pub value: Frac,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelDoc {
    pub basis: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub index: Option<IndexDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<[i64; 2]>,
}

/// `m_coeff * m + offset`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexDoc {
    pub m: i64,
    pub offset: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelTerm {
    pub label: LabelDoc,
    pub coeff: Frac,
}

fn basis_name(b: Basis) -> String {
    b.to_string()
}

fn basis_of(s: &str) -> Result<Basis> {
    match s {
        "E" => Ok(Basis::E),
        "P" => Ok(Basis::P),
        _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
    }
}

impl LabelDoc {
    pub fn of(l: &Label) -> LabelDoc {
        match *l {
            Label::Sl2(b, i) => LabelDoc {
                basis: basis_name(b),
                index: Some(IndexDoc { m: i.m_coeff, offset: i.offset }),
                pair: None,
            },
            Label::Gl2(b, x, y) => LabelDoc { basis: basis_name(b), index: None, pair: Some([x, y]) },
        }
    }

    pub fn label(&self) -> Result<Label> {
        let b = basis_of(&self.basis)?;
        match (self.index, self.pair) {
            (Some(i), None) => Ok(Label::Sl2(b, Index::symbolic(i.m, i.offset))),
            (None, Some([x, y])) => Ok(Label::Gl2(b, x, y)),
            _ => Err(Error::Parse("label needs exactly one of index, pair".into())),
        }
    }
}

pub fn terms_of(e: &Expansion) -> Vec<LabelTerm> {
    e.terms().iter().map(|(l, c)| LabelTerm { label: LabelDoc::of(l), coeff: Frac::of(c) }).collect()
}

pub fn expansion_of(terms: &[LabelTerm]) -> Result<Expansion> {
    let mut e = Expansion::zero();
    for t in terms {
        e.add_term(t.label.label()?, t.coeff.scalar()?);
    }
    Ok(e)
}

/// A product expansion, optionally with the brute-force result.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDoc {
    pub kind: String,
    pub left: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<Vec<i64>>,
    pub terms: Vec<LabelTerm>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<Vec<LabelTerm>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaTerm {
    pub eta: i64,
    pub coeff: Frac,
}

/// `E_l(X) 1_0` or `1_0 E_l(X) 1_0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EtaDoc {
    pub kind: String,
    pub l: i64,
    pub smashed: bool,
    pub terms: Vec<EtaTerm>,
}

impl EtaDoc {
    pub fn new(l: i64, smashed: bool, e: &EtaElement) -> EtaDoc {
        EtaDoc {
            kind: "eta".into(),
            l,
            smashed,
            terms: e.iter().map(|(k, g)| EtaTerm { eta: k, coeff: Frac::of(g) }).collect(),
        }
    }

    pub fn element(&self) -> Result<EtaElement> {
        let mut e = EtaElement::zero();
        for t in &self.terms {
            e.add_term(t.eta, t.coeff.scalar()?);
        }
        Ok(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckDoc {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Summary of a verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub kind: String,
    pub suites: Vec<String>,
    pub lmax: i64,
    pub mmax: i64,
    pub checks: usize,
    pub passed: usize,
    pub failed: usize,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub results: Option<Vec<CheckDoc>>,
}

/// Any document the binary emits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Doc {
    Poly(PolyDoc),
    Coeff(CoeffDoc),
    Product(ProductDoc),
    Eta(EtaDoc),
    Verify(VerifyDoc),
}

fn perr(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

impl Doc {
    pub fn to_json(&self) -> String {
        match self {
            Doc::Poly(d) => serde_json::to_string(d),
            Doc::Coeff(d) => serde_json::to_string(d),
            Doc::Product(d) => serde_json::to_string(d),
            Doc::Eta(d) => serde_json::to_string(d),
            Doc::Verify(d) => serde_json::to_string(d),
        }
        .expect("documents serialize")
    }

    /// Parses a document and rebuilds it through the core types, so that
    /// coefficients come back in canonical form.
    pub fn parse(s: &str) -> Result<Doc> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(perr)?;
        let kind = v.get("kind").and_then(|k| k.as_str()).unwrap_or_default().to_string();
        Ok(match kind.as_str() {
            "E" | "P" => {
                let d: PolyDoc = serde_json::from_value(v).map_err(perr)?;
                Doc::Poly(PolyDoc::new(&d.kind, d.index, &d.poly()?))
            }
            "coeff" => {
                let mut d: CoeffDoc = serde_json::from_value(v).map_err(perr)?;
                d.value = Frac::of(&d.value.scalar()?);
                Doc::Coeff(d)
            }
            "EP" | "EnegP" | "PP" | "GL2PP" | "GL2EP" => {
                let mut d: ProductDoc = serde_json::from_value(v).map_err(perr)?;
                d.terms = terms_of(&expansion_of(&d.terms)?);
                if let Some(o) = &d.oracle {
                    d.oracle = Some(terms_of(&expansion_of(o)?));
                }
                Doc::Product(d)
            }
            "eta" => {
                let d: EtaDoc = serde_json::from_value(v).map_err(perr)?;
                Doc::Eta(EtaDoc::new(d.l, d.smashed, &d.element()?))
            }
            "verify" => Doc::Verify(serde_json::from_value(v).map_err(perr)?),
            other => return Err(Error::Parse(format!("unknown document kind {other:?}"))),
        })
    }
}
