//! The `goodsemi/1` JSON interchange format.
//!
//! Every file is a single UTF-8 JSON object carrying `"format": "goodsemi/1"`
//! and a `"kind"` of `semigroup`, `ideal`, `polynomial`, or `report`.
//! Unknown fields are rejected. Printing always emits the canonical form:
//! validated objects, lexicographically sorted point lists, graded-lex
//! sorted polynomial terms, and inline parents, so parse ∘ print is the
//! identity on everything this crate produces.

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::catalog::{from_small, HuntFailure, HuntParams, HuntReport};
use crate::duality::SymmetryReport;
use crate::lattice::{Point, Window};
use crate::poincare::PoincarePolynomial;
use crate::semigroup::{GoodSemigroup, Ideal, SmallElements};
use crate::{Error, Result};

/// The format tag every file must carry.
pub const FORMAT_VERSION: &str = "goodsemi/1";

/// A parsed interchange file.
#[derive(Debug, Clone, PartialEq)]
pub enum Document {
    Semigroup(GoodSemigroup),
    Ideal(Ideal),
    Polynomial(PoincarePolynomial),
    Report(HuntReport),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSemigroup {
    format: String,
    kind: String,
    s: usize,
    gamma: Vec<i64>,
    small: Vec<Vec<i64>>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawParent {
    Path(String),
    Inline(RawSemigroup),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdeal {
    format: String,
    kind: String,
    s: usize,
    mu: Vec<i64>,
    gamma: Vec<i64>,
    small: Vec<Vec<i64>>,
    parent: RawParent,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    exp: Vec<i64>,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPolynomial {
    format: String,
    kind: String,
    s: usize,
    terms: Vec<RawTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawWindow {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawParams {
    s: usize,
    gamma_max: Vec<i64>,
    mu_box: RawWindow,
    gamma_box: RawWindow,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFailure {
    semigroup: RawSemigroup,
    ideal: RawIdeal,
    report: SymmetryReport,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawReport {
    format: String,
    kind: String,
    params: RawParams,
    tested: u64,
    failures: Vec<RawFailure>,
}

/// Parses one interchange file.
///
/// `base_dir` resolves a relative `parent` path in ideal files; pass the
/// directory the text was read from. Syntax errors carry the line and
/// column; structural problems (wrong format tag, unknown kind, unknown
/// fields) are document errors; objects that fail the axioms surface the
/// validator's report.
pub fn parse(text: &str, base_dir: Option<&Path>) -> Result<Document> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let format = value
        .get("format")
        .and_then(|f| f.as_str())
        .ok_or_else(|| Error::Document("missing \"format\" field".into()))?;
    if format != FORMAT_VERSION {
        return Err(Error::Document(format!(
            "unsupported format {format:?}, expected {FORMAT_VERSION:?}"
        )));
    }
    let kind = value
        .get("kind")
        .and_then(|k| k.as_str())
        .ok_or_else(|| Error::Document("missing \"kind\" field".into()))?;
    match kind {
        "semigroup" => Ok(Document::Semigroup(semigroup_from_raw(decode(value)?)?)),
        "ideal" => Ok(Document::Ideal(ideal_from_raw(decode(value)?, base_dir)?)),
        "polynomial" => Ok(Document::Polynomial(polynomial_from_raw(decode(value)?)?)),
        "report" => Ok(Document::Report(report_from_raw(decode(value)?, base_dir)?)),
        other => Err(Error::Document(format!(
            "unknown kind {other:?}, expected semigroup, ideal, polynomial, or report"
        ))),
    }
}

/// Renders the canonical form of a document, ending in a newline.
pub fn print(doc: &Document) -> String {
    let mut out = match doc {
        Document::Semigroup(s) => serde_json::to_string_pretty(&semigroup_to_raw(s)),
        Document::Ideal(e) => serde_json::to_string_pretty(&ideal_to_raw(e)),
        Document::Polynomial(p) => serde_json::to_string_pretty(&polynomial_to_raw(p)),
        Document::Report(r) => serde_json::to_string_pretty(&report_to_raw(r)),
    }
    .expect("interchange structs serialize infallibly");
    out.push('\n');
    out
}

fn decode<T: serde::de::DeserializeOwned>(value: serde_json::Value) -> Result<T> {
    serde_json::from_value(value).map_err(|e| Error::Document(e.to_string()))
}

fn point_from(coords: &[i64], s: usize, what: &str) -> Result<Point> {
    if coords.len() != s {
        return Err(Error::Document(format!(
            "{what} has {} coordinates, expected {s}",
            coords.len()
        )));
    }
    Ok(Point::new(coords.to_vec()))
}

fn points_from(rows: &[Vec<i64>], s: usize, what: &str) -> Result<BTreeSet<Point>> {
    rows.iter().map(|row| point_from(row, s, what)).collect()
}

fn semigroup_from_raw(raw: RawSemigroup) -> Result<GoodSemigroup> {
    let gamma = point_from(&raw.gamma, raw.s, "gamma")?;
    let small = points_from(&raw.small, raw.s, "a small element")?;
    from_small(raw.s, gamma, small)
}

fn semigroup_to_raw(s: &GoodSemigroup) -> RawSemigroup {
    RawSemigroup {
        format: FORMAT_VERSION.into(),
        kind: "semigroup".into(),
        s: s.dim(),
        gamma: s.conductor().coords().to_vec(),
        small: s.small().iter().map(|p| p.coords().to_vec()).collect(),
    }
}

fn ideal_from_raw(raw: RawIdeal, base_dir: Option<&Path>) -> Result<Ideal> {
    let parent = match raw.parent {
        RawParent::Inline(inner) => {
            if inner.kind != "semigroup" {
                return Err(Error::Document(format!(
                    "inline parent must have kind \"semigroup\", found {:?}",
                    inner.kind
                )));
            }
            if inner.format != FORMAT_VERSION {
                return Err(Error::Document(format!(
                    "inline parent has unsupported format {:?}",
                    inner.format
                )));
            }
            semigroup_from_raw(inner)?
        }
        RawParent::Path(rel) => {
            let path: PathBuf = match base_dir {
                Some(dir) => dir.join(&rel),
                None => PathBuf::from(&rel),
            };
            let text = std::fs::read_to_string(&path)?;
            match parse(&text, path.parent())? {
                Document::Semigroup(s) => s,
                _ => {
                    return Err(Error::Document(format!(
                        "parent file {rel:?} does not contain a semigroup"
                    )))
                }
            }
        }
    };
    let mu = point_from(&raw.mu, raw.s, "mu")?;
    let gamma = point_from(&raw.gamma, raw.s, "gamma")?;
    let small = points_from(&raw.small, raw.s, "a small element")?;
    if parent.dim() != raw.s {
        return Err(Error::Document(format!(
            "parent has dimension {}, ideal declares {}",
            parent.dim(),
            raw.s
        )));
    }
    Ideal::from_parts(&Arc::new(parent), mu, gamma, small).map_err(Error::Invalid)
}

fn ideal_to_raw(e: &Ideal) -> RawIdeal {
    RawIdeal {
        format: FORMAT_VERSION.into(),
        kind: "ideal".into(),
        s: e.dim(),
        mu: e.minimum().coords().to_vec(),
        gamma: e.conductor().coords().to_vec(),
        small: e.small().iter().map(|p| p.coords().to_vec()).collect(),
        parent: RawParent::Inline(semigroup_to_raw(e.parent())),
    }
}

fn polynomial_from_raw(raw: RawPolynomial) -> Result<PoincarePolynomial> {
    let mut terms = Vec::with_capacity(raw.terms.len());
    for t in &raw.terms {
        terms.push((point_from(&t.exp, raw.s, "an exponent")?, t.coeff));
    }
    PoincarePolynomial::from_terms(raw.s, terms)
}

fn polynomial_to_raw(p: &PoincarePolynomial) -> RawPolynomial {
    RawPolynomial {
        format: FORMAT_VERSION.into(),
        kind: "polynomial".into(),
        s: p.dim(),
        terms: p
            .graded_terms()
            .into_iter()
            .map(|(exp, coeff)| RawTerm {
                exp: exp.coords().to_vec(),
                coeff,
            })
            .collect(),
    }
}

fn report_from_raw(raw: RawReport, base_dir: Option<&Path>) -> Result<HuntReport> {
    let s = raw.params.s;
    let params = HuntParams {
        dim: s,
        gamma_max: point_from(&raw.params.gamma_max, s, "gamma_max")?,
        mu_box: window_from(&raw.params.mu_box, s, "mu_box")?,
        gamma_box: window_from(&raw.params.gamma_box, s, "gamma_box")?,
    };
    let mut failures = Vec::with_capacity(raw.failures.len());
    for f in raw.failures {
        failures.push(HuntFailure {
            semigroup: semigroup_from_raw(f.semigroup)?,
            ideal: ideal_from_raw(f.ideal, base_dir)?,
            report: f.report,
        });
    }
    Ok(HuntReport {
        params,
        tested: raw.tested,
        failures,
        elapsed: Duration::ZERO,
    })
}

fn window_from(raw: &RawWindow, s: usize, what: &str) -> Result<Window> {
    Window::new(point_from(&raw.lo, s, what)?, point_from(&raw.hi, s, what)?)
}

fn report_to_raw(r: &HuntReport) -> RawReport {
    RawReport {
        format: FORMAT_VERSION.into(),
        kind: "report".into(),
        params: RawParams {
            s: r.params.dim,
            gamma_max: r.params.gamma_max.coords().to_vec(),
            mu_box: window_to_raw(&r.params.mu_box),
            gamma_box: window_to_raw(&r.params.gamma_box),
        },
        tested: r.tested,
        failures: r
            .failures
            .iter()
            .map(|f| RawFailure {
                semigroup: semigroup_to_raw(&f.semigroup),
                ideal: ideal_to_raw(&f.ideal),
                report: f.report.clone(),
            })
            .collect(),
    }
}

fn window_to_raw(w: &Window) -> RawWindow {
    RawWindow {
        lo: w.lo().coords().to_vec(),
        hi: w.hi().coords().to_vec(),
    }
}
