//! Identity-check reports.
//!
//! Every check reduces both sides of one identity instance to a single
//! [`PiPower`] (or plain rational) and records the exact residual LHS − RHS.
//! A report passes iff the residual is exactly zero. Sweeps may also skip a
//! cell whose parameters are excluded by the identity's hypothesis; the
//! exclusion is recorded in place of a residual.

use crate::pi_power::PiPower;
use crate::rational::{parse_rational, rational_string, BigRational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

/// Exact residual of one identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Residual {
    Pi(PiPower),
    Rational(BigRational),
}

impl Residual {
    pub fn is_zero(&self) -> bool {
        match self {
            Residual::Pi(p) => p.is_zero(),
            Residual::Rational(r) => r.is_zero(),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Residual::Pi(p) => write!(f, "{p}"),
            Residual::Rational(r) => write!(f, "{}", rational_string(r)),
        }
    }
}

impl FromStr for Residual {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains("*pi^") {
            Ok(Residual::Pi(s.parse()?))
        } else {
            Ok(Residual::Rational(parse_rational(s)?))
        }
    }
}

/// Outcome of one sweep cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Pass => write!(f, "pass"),
            Verdict::Fail => write!(f, "fail"),
            Verdict::Skipped => write!(f, "skipped"),
        }
    }
}

impl FromStr for Verdict {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pass" => Ok(Verdict::Pass),
            "fail" => Ok(Verdict::Fail),
            "skipped" => Ok(Verdict::Skipped),
            other => Err(format!("unknown verdict {other:?}")),
        }
    }
}

/// Record of one identity instance: which identity, the full parameter
/// assignment, the exact residual, and the verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    /// Stable identity id (kebab-case; see [`crate::identity::IdentityId`]).
    pub identity: String,
    /// Full parameter assignment, values rendered as exact `p/q` strings.
    pub params: BTreeMap<String, String>,
    /// Exact residual; `None` only for skipped cells.
    #[serde(
        serialize_with = "serialize_residual",
        deserialize_with = "deserialize_residual"
    )]
    pub residual: Option<Residual>,
    pub verdict: Verdict,
    /// Skip reason or other annotation; empty when unused.
    #[serde(default)]
    pub note: String,
    /// Wall time spent evaluating this cell, in seconds.
    pub elapsed_s: f64,
}

fn serialize_residual<S: serde::Serializer>(
    r: &Option<Residual>,
    s: S,
) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&r.to_string()),
        None => s.serialize_str(""),
    }
}

fn deserialize_residual<'de, D: serde::Deserializer<'de>>(
    d: D,
) -> Result<Option<Residual>, D::Error> {
    let s = String::deserialize(d)?;
    if s.is_empty() {
        return Ok(None);
    }
    s.parse().map(Some).map_err(serde::de::Error::custom)
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// One line of the structured text format:
    /// `identity | k=v,k=v | residual | verdict`.
    pub fn text_line(&self) -> String {
        let params = self
            .params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(",");
        let residual = self
            .residual
            .as_ref()
            .map(|r| r.to_string())
            .unwrap_or_else(|| "-".to_string());
        format!("{} | {} | {} | {}", self.identity, params, residual, self.verdict)
    }
}

/// Build a passed/failed report by timing the residual computation.
pub(crate) fn timed_report(
    identity: &str,
    params: &[(&str, String)],
    compute: impl FnOnce() -> Residual,
) -> IdentityReport {
    let start = Instant::now();
    let residual = compute();
    let elapsed_s = start.elapsed().as_secs_f64();
    let verdict = if residual.is_zero() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    IdentityReport {
        identity: identity.to_string(),
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        residual: Some(residual),
        verdict,
        note: String::new(),
        elapsed_s,
    }
}

pub(crate) fn skipped_report(
    identity: &str,
    params: &[(&str, String)],
    reason: &str,
) -> IdentityReport {
    IdentityReport {
        identity: identity.to_string(),
        params: params
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect(),
        residual: None,
        verdict: Verdict::Skipped,
        note: reason.to_string(),
        elapsed_s: 0.0,
    }
}
