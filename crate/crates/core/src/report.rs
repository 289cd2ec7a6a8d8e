//! Machine-readable output shared by the CLI and the C interface, plus the
//! textual form syntax accepted on the command line.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::RationalMatrix;
use crate::poly::HomogPoly;
use crate::recurrence::{LinearRecurrence, MiningTable};
use crate::spectra::VerificationReport;
use crate::stern::SternRow;

/// Bumped whenever the shape of any payload changes.
pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub results: Value,
}

impl ReportDocument {
    pub fn new(command: &str, parameters: BTreeMap<String, Value>, results: Value) -> Self {
        ReportDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            parameters,
            results,
        }
    }

    pub fn render(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn parse(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// Builds a parameter map from `(key, value)` pairs.
pub fn params<const N: usize>(pairs: [(&str, Value); N]) -> BTreeMap<String, Value> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

pub fn row_results(row: &SternRow) -> Value {
    json!({
        "n": row.index(),
        "length": row.len(),
        "entries": strings(&row.to_vec()),
    })
}

pub fn sequence_results(values: &[BigRational], agree: Option<bool>) -> Value {
    let mut v = json!({ "values": strings(values) });
    if let Some(a) = agree {
        v["paths_agree"] = Value::Bool(a);
    }
    v
}

pub fn matrix_results(m: &RationalMatrix) -> Value {
    let rows: Vec<Vec<String>> = m.to_rows().iter().map(|r| strings(r)).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": rows })
}

pub fn verify_results(reports: &[VerificationReport]) -> Value {
    json!({
        "all_passed": reports.iter().all(VerificationReport::passed),
        "reports": serde_json::to_value(reports).expect("reports serialize"),
    })
}

pub fn mine_results(table: &MiningTable) -> Value {
    let mut v = serde_json::to_value(table).expect("tables serialize");
    v["passed"] = Value::Bool(table.passed());
    v
}

/// Parses a degree-`r` form.
///
/// Accepted: a monomial written as factors `x`, `y`, `x^k`, `y^k`, optionally
/// separated by `*` (e.g. `x^3`, `x^2y`, `x^2*y^3`, `y^0x^1`), or
/// `coeffs=[c0,c1,...,cr]` with `c_a` the coefficient of `x^a y^(r-a)`;
/// coefficients may be integers or fractions `p/q`.
pub fn parse_form(spec: &str) -> Result<HomogPoly> {
    let s: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    if let Some(list) = s.strip_prefix("coeffs=") {
        let inner = list
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("expected coeffs=[...], got {spec:?}")))?;
        if inner.is_empty() {
            return Err(Error::Parse("coefficient list is empty".into()));
        }
        let coeffs = inner.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        return HomogPoly::new(coeffs);
    }
    let (mut a, mut b) = (0usize, 0usize);
    let mut chars = s.chars().peekable();
    let mut seen = false;
    while let Some(c) = chars.next() {
        let slot = match c {
            'x' => &mut a,
            'y' => &mut b,
            '*' if seen => continue,
            _ => return Err(Error::Parse(format!("unexpected {c:?} in form {spec:?}"))),
        };
        seen = true;
        let mut k = 1usize;
        if chars.peek() == Some(&'^') {
            chars.next();
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            k = digits
                .parse()
                .map_err(|_| Error::Parse(format!("missing exponent in form {spec:?}")))?;
        }
        *slot += k;
    }
    if !seen {
        return Err(Error::Parse(format!("empty form {spec:?}")));
    }
    Ok(HomogPoly::monomial(a + b, a))
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d == BigInt::from(0) {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    strings(xs).join(sep)
}

/// `ℓ=1, a=[7], n0=2` plus `b`, `c` when present.
pub fn recurrence_summary(rec: &LinearRecurrence) -> String {
    let mut s = format!(
        "ℓ={}, a=[{}], n0={}",
        rec.length(),
        join(&rec.coeffs, ", "),
        rec.start
    );
    if !rec.is_homogeneous() {
        s.push_str(&format!(", b={}, c={}", rec.affine, rec.alternating));
    }
    s
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn mine_text(t: &MiningTable, affine: bool) -> String {
    let mut out = format!(
        "r={} terms={} annihilator {} (degree {}, from n0={})\n",
        t.r, t.n_terms, t.annihilator, t.annihilator_degree, t.annihilator_start
    );
    for c in &t.classes {
        out.push_str(&format!(
            "{}: {}; bound {}: {}",
            c.monomial,
            recurrence_summary(&c.homogeneous),
            t.bound_homogeneous,
            verdict(c.within_bound)
        ));
        if let Some(s) = c.earliest_start {
            out.push_str(&format!("; earliest n0={s}"));
        }
        if !c.annihilator_verifies {
            out.push_str("; annihilator FAIL");
        }
        out.push('\n');
        if affine {
            match (&c.affine_alt, t.bound_affine_alt, c.affine_within_bound) {
                (Some(rec), Some(b), Some(ok)) => out.push_str(&format!(
                    "  affine: {}; bound {}: {}\n",
                    recurrence_summary(rec),
                    b,
                    verdict(ok)
                )),
                _ => out.push_str("  affine: odd r, same as homogeneous\n"),
            }
        }
    }
    out.push_str(verdict(t.passed()));
    out.push('\n');
    out
}

pub fn verify_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for rep in reports {
        let mults: Vec<String> = rep
            .multiplicities
            .iter()
            .map(|m| {
                format!(
                    "{} predicted {} computed {}/{}{}",
                    m.label,
                    m.predicted,
                    m.geometric,
                    m.algebraic,
                    if m.equal { "" } else { " (differs)" }
                )
            })
            .collect();
        let bad_dims: Vec<&str> = rep
            .dimensions
            .iter()
            .filter(|d| !d.ok)
            .map(|d| d.name.as_str())
            .collect();
        out.push_str(&format!(
            "r={}: {}; diagonalizable {}; dimensions {}; identities {}: {}\n",
            rep.r,
            mults.join("; "),
            verdict(rep.diagonalizability.holds()),
            if bad_dims.is_empty() {
                "PASS".to_string()
            } else {
                format!("FAIL ({})", bad_dims.join(", "))
            },
            verdict(rep.identities_hold()),
            verdict(rep.passed())
        ));
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    out.push_str(&format!(
        "{} reports, {} failed: {}\n",
        reports.len(),
        failed,
        verdict(failed == 0)
    ));
    out
}

pub fn csv_column(header: &str, start: usize, values: &[String]) -> String {
    let mut out = format!("index,{header}\n");
    for (i, v) in values.iter().enumerate() {
        out.push_str(&format!("{},{}\n", start + i, v));
    }
    out
}

pub fn matrix_csv(m: &RationalMatrix) -> String {
    m.to_rows()
        .iter()
        .map(|r| join(r, ",") + "\n")
        .collect()
}
