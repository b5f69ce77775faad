//! Frozen JSON and CSV schemas shared by the CLI and downstream scripts.
//! See docs/formats.md at the repository root; field additions are
//! append-only.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use staircase_core::{FamilyParams, GradedSlice, Monomial, MuReport, StaircaseIdeal, MAX_EXPONENT};

use crate::CliError;

/// An ideal parsed from JSON, plus whether loading had to canonicalize.
pub struct LoadedIdeal {
    pub ideal: StaircaseIdeal,
    pub canonicalized: bool,
}

/// Shared ideal format: array of `[a, b]` exponent pairs in canonical
/// order.
pub fn ideal_to_json(ideal: &StaircaseIdeal) -> Value {
    Value::Array(ideal.gens().iter().map(|g| json!([g.a, g.b])).collect())
}

pub fn ideal_to_json_string(ideal: &StaircaseIdeal) -> String {
    ideal_to_json(ideal).to_string()
}

/// Accepts the bare array form or any object carrying the array under a
/// `"sum"` key (the `construct` output), canonicalizes, and reports
/// whether the input generator set changed.
pub fn parse_ideal(text: &str) -> Result<LoadedIdeal, CliError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| CliError::Invalid(format!("ideal JSON does not parse: {e}")))?;
    let array = match &value {
        Value::Array(_) => &value,
        Value::Object(map) => map
            .get("sum")
            .ok_or_else(|| CliError::Invalid("ideal JSON object has no \"sum\" field".into()))?,
        _ => {
            return Err(CliError::Invalid(
                "ideal JSON must be an array of [a, b] pairs".into(),
            ))
        }
    };
    let pairs: Vec<(u64, u64)> = serde_json::from_value(array.clone())
        .map_err(|e| CliError::Invalid(format!("ideal JSON must be [a, b] integer pairs: {e}")))?;
    for &(a, b) in &pairs {
        if a > MAX_EXPONENT || b > MAX_EXPONENT {
            return Err(CliError::Invalid(format!(
                "exponent {} exceeds the representable ceiling {MAX_EXPONENT}",
                a.max(b)
            )));
        }
    }
    let mut input: Vec<Monomial> = pairs.iter().map(|&(a, b)| Monomial::new(a, b)).collect();
    let ideal = StaircaseIdeal::normalize(input.iter().copied());
    input.sort_unstable();
    input.dedup();
    let canonicalized = input != ideal.gens();
    Ok(LoadedIdeal {
        ideal,
        canonicalized,
    })
}

#[derive(Serialize, Deserialize)]
struct ParamsJson {
    m: usize,
    p: Vec<u64>,
    a: Vec<u64>,
}

pub fn params_to_json(params: &FamilyParams) -> Value {
    json!({
        "m": params.m(),
        "p": params.p(),
        "a": params.a(),
    })
}

pub fn parse_params(text: &str) -> Result<FamilyParams, CliError> {
    let parsed: ParamsJson = serde_json::from_str(text)
        .map_err(|e| CliError::Invalid(format!("params JSON does not parse: {e}")))?;
    if parsed.m != parsed.p.len() {
        return Err(CliError::Invalid(format!(
            "params JSON: m = {} but p lists {} entries",
            parsed.m,
            parsed.p.len()
        )));
    }
    FamilyParams::new(parsed.p, parsed.a).map_err(CliError::from)
}

pub fn slice_to_json(slice: &GradedSlice) -> Value {
    json!({ "d": slice.d, "xexps": slice.xexps })
}

pub fn report_to_json(report: &MuReport) -> Value {
    json!({
        "k": report.k,
        "mu_computed": report.mu_computed,
        "mu_predicted": report.mu_predicted,
        "structure_ok": report.structure_ok,
        "cm_type": report.cm_type,
        "degree": report.degree,
    })
}

pub fn reports_to_json(reports: &[MuReport]) -> Value {
    Value::Array(reports.iter().map(report_to_json).collect())
}

pub const REPORT_CSV_HEADER: [&str; 6] = [
    "k",
    "mu_computed",
    "mu_predicted",
    "structure_ok",
    "cm_type",
    "degree",
];

pub fn reports_to_csv(reports: &[MuReport]) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(REPORT_CSV_HEADER)
        .map_err(|e| CliError::Invalid(format!("csv: {e}")))?;
    for r in reports {
        writer
            .write_record([
                r.k.to_string(),
                r.mu_computed.to_string(),
                r.mu_predicted.to_string(),
                r.structure_ok.to_string(),
                r.cm_type.to_string(),
                r.degree.to_string(),
            ])
            .map_err(|e| CliError::Invalid(format!("csv: {e}")))?;
    }
    finish_csv(writer)
}

/// One `search` result: the parameter point, the sign pattern of
/// consecutive count differences, and the count sequence itself.
pub struct SearchRow {
    pub params: FamilyParams,
    pub signs: String,
    pub mu: Vec<u64>,
}

pub const SEARCH_CSV_HEADER: [&str; 5] = ["m", "p", "a", "sign_pattern", "mu_sequence"];

fn join_spaced(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn search_rows_to_csv(rows: &[SearchRow]) -> Result<String, CliError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(SEARCH_CSV_HEADER)
        .map_err(|e| CliError::Invalid(format!("csv: {e}")))?;
    for row in rows {
        writer
            .write_record([
                row.params.m().to_string(),
                join_spaced(row.params.p()),
                join_spaced(row.params.a()),
                row.signs.clone(),
                join_spaced(&row.mu),
            ])
            .map_err(|e| CliError::Invalid(format!("csv: {e}")))?;
    }
    finish_csv(writer)
}

pub fn search_rows_to_json(rows: &[SearchRow]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| {
                json!({
                    "m": row.params.m(),
                    "p": row.params.p(),
                    "a": row.params.a(),
                    "signs": row.signs,
                    "mu": row.mu,
                })
            })
            .collect(),
    )
}

fn finish_csv(writer: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Invalid(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| CliError::Invalid(format!("csv: {e}")))
}
