//! Output formats: human-readable text, JSON documents with a meta header,
//! and flat CSV. Exact values are always serialized as `p/q` strings (never
//! floats); decimal renderings are advisory extra columns.

use dirichlet_lambda::identity::{IdentityReport, Residual, Verdict};
use dirichlet_lambda::numeric::{decimal_of_rational, pi_power_to_real};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format {other:?} (expected json, csv or text)")),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Meta {
    pub tool: String,
    pub version: String,
    pub config: BTreeMap<String, String>,
}

impl Meta {
    pub fn new(config: BTreeMap<String, String>) -> Self {
        Self {
            tool: "dlam".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            config,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub meta: Meta,
    pub reports: Vec<IdentityReport>,
}

/// Decimal rendering of a residual at the requested digit count.
pub fn residual_decimal(r: &Residual, digits: u32) -> String {
    match r {
        Residual::Rational(q) => decimal_of_rational(q, digits as usize),
        Residual::Pi(p) => pi_power_to_real(p, digits).decimal(digits as usize),
    }
}

pub fn verify_text(doc: &VerifyDocument) -> String {
    let mut out = String::new();
    for r in &doc.reports {
        out.push_str(&r.text_line());
        out.push('\n');
    }
    let pass = doc.reports.iter().filter(|r| r.verdict == Verdict::Pass).count();
    let fail = doc.reports.iter().filter(|r| r.verdict == Verdict::Fail).count();
    let skip = doc.reports.iter().filter(|r| r.verdict == Verdict::Skipped).count();
    out.push_str(&format!(
        "{} cells: {} passed, {} failed, {} skipped\n",
        doc.reports.len(),
        pass,
        fail,
        skip
    ));
    out
}

fn params_field(params: &BTreeMap<String, String>) -> String {
    params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn parse_params(field: &str) -> Result<BTreeMap<String, String>, String> {
    let mut map = BTreeMap::new();
    if field.is_empty() {
        return Ok(map);
    }
    for kv in field.split(';') {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| format!("malformed params field {field:?}"))?;
        map.insert(k.to_string(), v.to_string());
    }
    Ok(map)
}

pub fn verify_csv(doc: &VerifyDocument, digits: u32) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["identity", "params", "residual", "verdict", "note", "elapsed_s", "decimal"])
        .map_err(|e| e.to_string())?;
    for r in &doc.reports {
        let residual = r.residual.as_ref().map(|x| x.to_string()).unwrap_or_default();
        let decimal = r
            .residual
            .as_ref()
            .map(|x| residual_decimal(x, digits))
            .unwrap_or_default();
        w.write_record([
            r.identity.as_str(),
            &params_field(&r.params),
            &residual,
            &r.verdict.to_string(),
            &r.note,
            &format!("{}", r.elapsed_s),
            &decimal,
        ])
        .map_err(|e| e.to_string())?;
    }
    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

/// Parse a CSV report file back into reports (inverse of [`verify_csv`];
/// the advisory decimal column is ignored).
pub fn parse_verify_csv(text: &str) -> Result<Vec<IdentityReport>, String> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for record in rdr.records() {
        let rec = record.map_err(|e| e.to_string())?;
        let residual = if rec[2].is_empty() {
            None
        } else {
            Some(rec[2].parse::<Residual>()?)
        };
        out.push(IdentityReport {
            identity: rec[0].to_string(),
            params: parse_params(&rec[1])?,
            residual,
            verdict: rec[3].parse()?,
            note: rec[4].to_string(),
            elapsed_s: rec[5].parse::<f64>().map_err(|e| e.to_string())?,
        });
    }
    Ok(out)
}

/// One row of the closed-form value table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValueRow {
    pub function: String,
    pub argument: i64,
    /// exact coefficient as `p/q`
    pub coefficient: String,
    pub pi_exponent: u32,
    pub decimal: String,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ValuesDocument {
    pub meta: Meta,
    pub reports: Vec<ValueRow>,
}

pub fn values_text(doc: &ValuesDocument) -> String {
    let mut out = String::from("function  argument  coefficient            pi^e  decimal\n");
    for r in &doc.reports {
        out.push_str(&format!(
            "{:<9} {:<9} {:<22} {:<5} {}\n",
            r.function, r.argument, r.coefficient, r.pi_exponent, r.decimal
        ));
    }
    out
}

pub fn values_csv(doc: &ValuesDocument) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["function", "argument", "coefficient", "pi_exponent", "decimal"])
        .map_err(|e| e.to_string())?;
    for r in &doc.reports {
        w.write_record([
            r.function.as_str(),
            &r.argument.to_string(),
            &r.coefficient,
            &r.pi_exponent.to_string(),
            &r.decimal,
        ])
        .map_err(|e| e.to_string())?;
    }
    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}

/// One row of the bench table.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchRow {
    pub representation: String,
    pub s: f64,
    pub a: f64,
    pub x_free: f64,
    pub terms: u64,
    pub wall_ms: f64,
    pub value: String,
    pub error_bound: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BenchDocument {
    pub meta: Meta,
    pub reports: Vec<BenchRow>,
}

pub fn bench_text(doc: &BenchDocument) -> String {
    let mut out =
        String::from("representation  s       a       x_free  terms    wall_ms   value (bound)\n");
    for r in &doc.reports {
        out.push_str(&format!(
            "{:<15} {:<7} {:<7} {:<7} {:<8} {:<9.3} {} ({:.2e})\n",
            r.representation, r.s, r.a, r.x_free, r.terms, r.wall_ms, r.value, r.error_bound
        ));
    }
    out
}

pub fn bench_csv(doc: &BenchDocument) -> Result<String, String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "representation",
        "s",
        "a",
        "x_free",
        "terms",
        "wall_ms",
        "value",
        "error_bound",
    ])
    .map_err(|e| e.to_string())?;
    for r in &doc.reports {
        w.write_record([
            r.representation.as_str(),
            &r.s.to_string(),
            &r.a.to_string(),
            &r.x_free.to_string(),
            &r.terms.to_string(),
            &r.wall_ms.to_string(),
            &r.value,
            &r.error_bound.to_string(),
        ])
        .map_err(|e| e.to_string())?;
    }
    String::from_utf8(w.into_inner().map_err(|e| e.to_string())?).map_err(|e| e.to_string())
}
