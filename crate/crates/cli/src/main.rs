//! `macdaha`: polynomials, coefficients, product expansions, eta-expansions
//! and verification suites from the command line.
//!
//! Exit codes: 0 success, 2 usage error, 3 verification failure.

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use macdaha::coeffs::{a_coeff, b_coeff, c_coeff, d_coeff, d_neg_coeff, ev, k_coeff, y_binom};
use macdaha::etacalc::{build_e_one0, build_one0_e_one0};
use macdaha::macdonald::{e_poly, p_poly, qt_binom};
use macdaha::products::{
    brute_force_product, expand_e_p, expand_eneg_p, expand_p_p, gl2_brute_force, gl2_expand_products, Gl2Kind,
};
use macdaha::verify::{self, Limits, Report, Suite};
use macdaha::{Basis, EvPoint, Expansion, MParam, Scalar};
use macdaha_cli::json::{self, CheckDoc, CoeffDoc, Doc, EtaDoc, PolyDoc, ProductDoc, VerifyDoc};
use macdaha_cli::render::{poly_latex, poly_text};

const USAGE: u8 = 2;
const FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "macdaha", version, about = "Exact rank-one DAHA calculus")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolyKind {
    #[value(name = "E")]
    E,
    #[value(name = "P")]
    P,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ProdKind {
    #[value(name = "EP")]
    Ep,
    #[value(name = "EnegP")]
    EnegP,
    #[value(name = "PP")]
    Pp,
    #[value(name = "GL2PP")]
    Gl2Pp,
    #[value(name = "GL2EP")]
    Gl2Ep,
}

impl ProdKind {
    fn name(self) -> &'static str {
        match self {
            ProdKind::Ep => "EP",
            ProdKind::EnegP => "EnegP",
            ProdKind::Pp => "PP",
            ProdKind::Gl2Pp => "GL2PP",
            ProdKind::Gl2Ep => "GL2EP",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CoeffName {
    #[value(name = "D")]
    D,
    #[value(name = "Dneg")]
    Dneg,
    #[value(name = "K")]
    K,
    #[value(name = "A")]
    A,
    #[value(name = "B")]
    B,
    #[value(name = "C")]
    C,
    #[value(name = "Ybinom")]
    Ybinom,
    #[value(name = "qtbinom")]
    Qtbinom,
}

impl CoeffName {
    fn name(self) -> &'static str {
        match self {
            CoeffName::D => "D",
            CoeffName::Dneg => "Dneg",
            CoeffName::K => "K",
            CoeffName::A => "A",
            CoeffName::B => "B",
            CoeffName::C => "C",
            CoeffName::Ybinom => "Ybinom",
            CoeffName::Qtbinom => "qtbinom",
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// E_n or P_n as a Laurent polynomial in x.
    Poly {
        #[arg(value_enum, ignore_case = true)]
        kind: PolyKind,
        #[arg(allow_negative_numbers = true)]
        index: i64,
    },
    /// Product expansion. GL2 kinds take pairs such as `3,1`.
    Prod {
        #[arg(value_enum, ignore_case = true)]
        kind: ProdKind,
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: Option<String>,
        /// Keep m symbolic, writing s = q^m.
        #[arg(long)]
        symbolic_m: bool,
        /// Also multiply out and expand by elimination; exit 3 if they differ.
        #[arg(long)]
        oracle: bool,
    },
    /// A single coefficient (l, j).
    Coeff {
        #[arg(value_enum, ignore_case = true)]
        name: CoeffName,
        l: i64,
        j: i64,
        /// Evaluate at Y = t^{-1/2} q^{-m/2}.
        #[arg(long, allow_negative_numbers = true, conflicts_with = "symbolic_m")]
        ev: Option<i64>,
        /// Evaluate with q^m kept as a symbol.
        #[arg(long)]
        symbolic_m: bool,
    },
    /// Run verification suites.
    Verify {
        /// relations, ladders, dk, abc, products, gl2, pieri or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4, allow_negative_numbers = true)]
        lmax: i64,
        /// Defaults to lmax.
        #[arg(long, allow_negative_numbers = true)]
        mmax: Option<i64>,
        /// Worker threads for independent cells.
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// E_l(X) 1_0 as a sum of eta^k g_k(Y) 1_0.
    Eta {
        #[arg(allow_negative_numbers = true)]
        l: i64,
        /// Print 1_0 E_l(X) 1_0 instead.
        #[arg(long)]
        smashed: bool,
    },
    /// Read a JSON document on stdin and print it in canonical form.
    Canon,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<macdaha::Error> for Failure {
    fn from(e: macdaha::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = std::result::Result<String, Failure>;

fn usage<T>(msg: impl Into<String>) -> std::result::Result<T, Failure> {
    Err(Failure::Usage(msg.into()))
}

fn max_degree() -> std::result::Result<i64, Failure> {
    match std::env::var("MAC_MAX_DEGREE") {
        Err(_) => Ok(64),
        Ok(s) => match s.trim().parse::<i64>() {
            Ok(n) if n >= 0 => Ok(n),
            _ => usage(format!("MAC_MAX_DEGREE must be a nonnegative integer, got {s:?}")),
        },
    }
}

fn cap(values: &[i64]) -> std::result::Result<(), Failure> {
    let limit = max_degree()?;
    match values.iter().find(|v| v.abs() > limit) {
        Some(v) => usage(format!("index {v} exceeds MAC_MAX_DEGREE={limit}")),
        None => Ok(()),
    }
}

fn int(s: &str) -> std::result::Result<i64, Failure> {
    s.trim().parse().or_else(|_| usage(format!("expected an integer, got {s:?}")))
}

fn pair(s: &str) -> std::result::Result<(i64, i64), Failure> {
    match s.split_once(',') {
        Some((a, b)) => Ok((int(a)?, int(b)?)),
        None => usage(format!("expected a pair a,b, got {s:?}")),
    }
}

fn scalar_out(c: &Scalar, fmt: Format) -> String {
    match fmt {
        Format::Latex => c.to_latex(),
        _ => c.to_string(),
    }
}

fn expansion_out(e: &Expansion, fmt: Format) -> String {
    match fmt {
        Format::Latex => e.to_latex(),
        _ => e.to_string(),
    }
}

fn cmd_poly(kind: PolyKind, n: i64, fmt: Format) -> Out {
    cap(&[n])?;
    let (name, p) = match kind {
        PolyKind::E => ("E", e_poly(n)),
        PolyKind::P => ("P", p_poly(n)?),
    };
    Ok(match fmt {
        Format::Text => poly_text(&p),
        Format::Latex => poly_latex(&p),
        Format::Json => Doc::Poly(PolyDoc::new(name, n, &p)).to_json(),
    })
}

fn cmd_prod(kind: ProdKind, left: &str, right: Option<&str>, symbolic: bool, oracle: bool, fmt: Format) -> Out {
    let gl2 = matches!(kind, ProdKind::Gl2Pp | ProdKind::Gl2Ep);
    if symbolic && (gl2 || oracle) {
        return usage("--symbolic-m applies to EP, EnegP and PP without --oracle");
    }
    let right = match (right, symbolic) {
        (None, true) => return prod_symbolic(kind, left, fmt),
        (None, false) => return usage("missing right factor (or pass --symbolic-m)"),
        (Some(_), true) => return usage("give either m or --symbolic-m, not both"),
        (Some(r), false) => r,
    };
    let (lv, rv, got, brute) = if gl2 {
        let (nu, mu) = (pair(left)?, pair(right)?);
        cap(&[nu.0, nu.1, mu.0, mu.1])?;
        let gk = if kind == ProdKind::Gl2Pp { Gl2Kind::Pp } else { Gl2Kind::Ep };
        let got = gl2_expand_products(nu, mu, gk)?;
        let brute = if oracle { Some(gl2_brute_force(nu, mu, gk)?) } else { None };
        (vec![nu.0, nu.1], vec![mu.0, mu.1], got, brute)
    } else {
        let (l, m) = (int(left)?, int(right)?);
        cap(&[l, m])?;
        let mp = MParam::Numeric(m);
        let got = match kind {
            ProdKind::Ep => expand_e_p(l, mp)?,
            ProdKind::EnegP => expand_eneg_p(l, mp)?,
            _ => expand_p_p(l, mp)?,
        };
        let brute = if oracle {
            Some(match kind {
                ProdKind::Ep => brute_force_product(&e_poly(l), &p_poly(m)?, Basis::E)?,
                ProdKind::EnegP => brute_force_product(&e_poly(-l), &p_poly(m)?, Basis::E)?,
                _ => brute_force_product(&p_poly(l)?, &p_poly(m)?, Basis::P)?,
            })
        } else {
            None
        };
        (vec![l], vec![m], got, brute)
    };
    let verdict = brute.as_ref().map(|b| if *b == got { "EQUAL" } else { "DIFFER" });
    let text = match fmt {
        Format::Json => Doc::Product(ProductDoc {
            kind: kind.name().into(),
            left: lv,
            right: Some(rv),
            terms: json::terms_of(&got),
            oracle: brute.as_ref().map(json::terms_of),
            verdict: verdict.map(String::from),
        })
        .to_json(),
        _ => {
            let mut s = expansion_out(&got, fmt);
            if let (Some(b), Some(v)) = (&brute, verdict) {
                s.push_str(&format!("\noracle: {}\n{v}", expansion_out(b, fmt)));
            }
            s
        }
    };
    if verdict == Some("DIFFER") {
        return Err(Failure::Verification(text));
    }
    Ok(text)
}

fn prod_symbolic(kind: ProdKind, left: &str, fmt: Format) -> Out {
    let l = int(left)?;
    cap(&[l])?;
    let got = match kind {
        ProdKind::Ep => expand_e_p(l, MParam::Symbolic)?,
        ProdKind::EnegP => expand_eneg_p(l, MParam::Symbolic)?,
        _ => expand_p_p(l, MParam::Symbolic)?,
    };
    Ok(match fmt {
        Format::Json => Doc::Product(ProductDoc {
            kind: kind.name().into(),
            left: vec![l],
            right: None,
            terms: json::terms_of(&got),
            oracle: None,
            verdict: None,
        })
        .to_json(),
        _ => expansion_out(&got, fmt),
    })
}

fn cmd_coeff(name: CoeffName, l: i64, j: i64, at: Option<i64>, symbolic: bool, fmt: Format) -> Out {
    cap(&[l, j])?;
    if let Some(m) = at {
        cap(&[m])?;
    }
    let value = if name == CoeffName::Qtbinom {
        if at.is_some() || symbolic {
            return usage("qtbinom does not involve Y; drop --ev/--symbolic-m");
        }
        qt_binom(l, j)?
    } else {
        let f = match name {
            CoeffName::D => d_coeff(l, j)?,
            CoeffName::Dneg => d_neg_coeff(l, j)?,
            CoeffName::K => k_coeff(l, j)?,
            CoeffName::A => a_coeff(l, j)?,
            CoeffName::B => b_coeff(l, j)?,
            CoeffName::C => c_coeff(l, j)?,
            _ => y_binom(l, j)?,
        };
        match (at, symbolic) {
            (Some(m), _) => ev(&f, EvPoint::Numeric(m))?,
            (None, true) => ev(&f, EvPoint::Symbolic)?,
            (None, false) => f,
        }
    };
    Ok(match fmt {
        Format::Json => Doc::Coeff(CoeffDoc {
            kind: "coeff".into(),
            name: name.name().into(),
            l,
            j,
            ev: at,
            symbolic_m: symbolic,
            value: json::Frac::of(&value),
        })
        .to_json(),
        _ => scalar_out(&value, fmt),
    })
}

fn suites(name: &str) -> std::result::Result<Vec<Suite>, Failure> {
    if name == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    name.split(',')
        .map(|s| Suite::from_name(s.trim()).ok_or_else(|| Failure::Usage(format!("unknown suite {s:?}"))))
        .collect()
}

fn cmd_verify(suite: &str, lmax: i64, mmax: Option<i64>, jobs: Option<usize>, fmt: Format) -> Out {
    let mmax = mmax.unwrap_or(lmax);
    if lmax < 1 || mmax < 1 {
        return usage("--lmax and --mmax must be >= 1");
    }
    cap(&[lmax, mmax])?;
    let list = suites(suite)?;
    let lim = Limits { lmax, mmax };
    let go = || {
        let mut r = Report::default();
        for s in &list {
            r.extend(verify::run(*s, lim));
        }
        r
    };
    let report = match jobs {
        Some(0) => return usage("--jobs must be >= 1"),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?
            .install(go),
        None => go(),
    };
    let mut doc = VerifyDoc {
        kind: "verify".into(),
        suites: list.iter().map(|s| s.name().to_string()).collect(),
        lmax,
        mmax,
        checks: report.results.len(),
        passed: report.passed(),
        failed: report.failed(),
        notes: report.notes.clone(),
        results: None,
    };
    let text = if fmt == Format::Json {
        doc.results = Some(
            report
                .results
                .iter()
                .map(|c| CheckDoc {
                    suite: c.suite.name().into(),
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        );
        Doc::Verify(doc).to_json()
    } else {
        let mut lines: Vec<String> = report.results.iter().map(|c| c.to_string()).collect();
        lines.extend(report.notes.iter().map(|n| format!("note: {n}")));
        lines.push(Doc::Verify(doc).to_json());
        lines.join("\n")
    };
    if report.all_passed() {
        Ok(text)
    } else {
        Err(Failure::Verification(text))
    }
}

fn cmd_eta(l: i64, smashed: bool, fmt: Format) -> Out {
    cap(&[l])?;
    if l == 0 && !smashed {
        return usage("eta 0 needs --smashed");
    }
    let e = if smashed { build_one0_e_one0(l) } else { build_e_one0(l) };
    Ok(match fmt {
        Format::Text => e.to_string(),
        Format::Latex => e.to_latex(),
        Format::Json => Doc::Eta(EtaDoc::new(l, smashed, &e)).to_json(),
    })
}

fn cmd_canon(fmt: Format) -> Out {
    let mut input = String::new();
    std::io::stdin().read_to_string(&mut input).map_err(|e| Failure::Usage(e.to_string()))?;
    let doc = Doc::parse(&input)?;
    if fmt == Format::Json {
        return Ok(doc.to_json());
    }
    Ok(match doc {
        Doc::Poly(d) => {
            let p = d.poly()?;
            if fmt == Format::Latex {
                poly_latex(&p)
            } else {
                poly_text(&p)
            }
        }
        Doc::Coeff(d) => scalar_out(&d.value.scalar()?, fmt),
        Doc::Product(d) => expansion_out(&json::expansion_of(&d.terms)?, fmt),
        Doc::Eta(d) => {
            let e = d.element()?;
            if fmt == Format::Latex {
                e.to_latex()
            } else {
                e.to_string()
            }
        }
        Doc::Verify(d) => Doc::Verify(d).to_json(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let fmt = cli.format;
    let out = match &cli.cmd {
        Cmd::Poly { kind, index } => cmd_poly(*kind, *index, fmt),
        Cmd::Prod { kind, left, right, symbolic_m, oracle } => {
            cmd_prod(*kind, left, right.as_deref(), *symbolic_m, *oracle, fmt)
        }
        Cmd::Coeff { name, l, j, ev, symbolic_m } => cmd_coeff(*name, *l, *j, *ev, *symbolic_m, fmt),
        Cmd::Verify { suite, lmax, mmax, jobs } => cmd_verify(suite, *lmax, *mmax, *jobs, fmt),
        Cmd::Eta { l, smashed } => cmd_eta(*l, *smashed, fmt),
        Cmd::Canon => cmd_canon(fmt),
    };
    match out {
        Ok(s) => {
            println!("{s}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
        Err(Failure::Verification(s)) => {
            println!("{s}");
            ExitCode::from(FAILED)
        }
    }
}
