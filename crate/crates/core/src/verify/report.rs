//! Check results, reports, and their JSON and CSV forms.

use serde::{Deserialize, Serialize};

use crate::constructors::GroupSpec;
use crate::error::{Error, Result};
use crate::growth::GrowthTable;

use super::corpus::Baseline;

pub const FORMAT_VERSION: &str = "growthlab-report/1";
pub const CSV_HEADER: [&str; 7] = ["check_id", "group", "status", "lhs", "rhs", "n", "witness"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Data-only output; never affects the exit status.
    Reported,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Reported => "reported",
        }
    }
}

/// Enough to rerun a failing case: the group, its corpus metadata, and the
/// case that broke.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub check_id: String,
    pub group: GroupSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub declared_generators: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub baseline: Option<Baseline>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    /// Generators of the subgroup `H` involved, in cycle notation.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<Vec<String>>,
    /// Generators of the normal subgroup `N` involved.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub normal: Option<Vec<String>>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub group: GroupSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub baseline: Option<Baseline>,
    pub status: Status,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub n: Option<u64>,
    pub witness: Option<Witness>,
    pub detail: String,
    pub timing_us: u64,
}

impl CheckResult {
    /// Group column of the CSV form: the spec, with the baseline appended
    /// in corpus syntax for relative checks.
    pub fn group_label(&self) -> String {
        match &self.baseline {
            Some(b) => format!("{} | base={b}", self.group),
            None => self.group.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GrowthReport {
    pub format_version: String,
    pub entries: Vec<CheckResult>,
    pub tables: Vec<GrowthTable>,
}

impl Default for GrowthReport {
    fn default() -> Self {
        Self {
            format_version: FORMAT_VERSION.to_string(),
            entries: Vec::new(),
            tables: Vec::new(),
        }
    }
}

impl GrowthReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.entries.iter().filter(|r| r.status == Status::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    /// Copy with every timing zeroed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        for e in &mut r.entries {
            e.timing_us = 0;
        }
        r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(Error::Parse(format!("unknown format {other:?}"))),
        }
    }
}

pub fn emit_report(report: &GrowthReport, format: Format) -> Result<Vec<u8>> {
    match format {
        Format::Json => to_json(report).map(String::into_bytes),
        Format::Csv => to_csv(report).map(String::into_bytes),
    }
}

pub fn to_json(report: &GrowthReport) -> Result<String> {
    let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Invalid(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn from_json(text: &str) -> Result<GrowthReport> {
    let report: GrowthReport = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if report.format_version != FORMAT_VERSION {
        return Err(Error::Parse(format!(
            "unsupported report format {:?}",
            report.format_version
        )));
    }
    Ok(report)
}

/// One row of the CSV form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub check_id: String,
    pub group: String,
    pub status: Status,
    pub lhs: Option<String>,
    pub rhs: Option<String>,
    pub n: Option<u64>,
    pub witness: Option<String>,
}

impl From<&CheckResult> for CsvRow {
    fn from(r: &CheckResult) -> Self {
        Self {
            check_id: r.check_id.clone(),
            group: r.group_label(),
            status: r.status,
            lhs: r.lhs.clone(),
            rhs: r.rhs.clone(),
            n: r.n,
            witness: r
                .witness
                .as_ref()
                .map(|w| serde_json::to_string(w).expect("witness serializes")),
        }
    }
}

pub fn to_csv(report: &GrowthReport) -> Result<String> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    let io = |e: csv::Error| Error::Invalid(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for r in &report.entries {
        w.serialize(CsvRow::from(r)).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Invalid(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Invalid(e.to_string()))
}

pub fn parse_csv(text: &str) -> Result<Vec<CsvRow>> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = r
        .headers()
        .map_err(|e| Error::Parse(e.to_string()))?
        .iter()
        .map(str::to_string)
        .collect();
    if header != CSV_HEADER {
        return Err(Error::Parse(format!("unexpected CSV header {header:?}")));
    }
    r.deserialize()
        .map(|row| row.map_err(|e| Error::Parse(e.to_string())))
        .collect()
}

pub fn parse_witness(text: &str) -> Result<Witness> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}
