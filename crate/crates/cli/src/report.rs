//! Report serialization: one flat record per check or identity verdict,
//! emitted as JSONL or CSV, followed by a summary line whose totals equal
//! the record counts. Big integers are rendered as decimal strings so any
//! JSON/CSV consumer can read them without precision loss.

use delannoy_core::{CheckRecord, IdentitySide, IdentityVerdict};
use serde::Serialize;

use crate::args::Format;

/// Flattened serialization of a CheckRecord or IdentityVerdict. Absent
/// fields are omitted from JSONL objects and left empty in CSV cells.
#[derive(Debug, Clone, Default, Serialize)]
pub struct ReportLine {
    pub check_id: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub e: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_residue: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_residue: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_valuation: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs_witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs_witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Trailing line with whole-run totals; `checked` equals the number of
/// report lines above it.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct SummaryLine {
    pub check_id: &'static str,
    pub checked: u64,
    pub held: u64,
    pub failed: u64,
    pub skipped: u64,
}

impl ReportLine {
    pub fn from_check(record: &CheckRecord, with_timing: bool) -> ReportLine {
        let params = &record.params;
        ReportLine {
            check_id: record.id.as_str().to_string(),
            n: params.n,
            m: params.m,
            p: params.p,
            e: params.e,
            x: params.x.as_ref().map(|x| {
                i64::try_from(x).expect("grid evaluation points fit a machine integer")
            }),
            sign: params.sign.map(|s| s.as_i8()),
            modulus: record.modulus.as_ref().map(|v| v.to_string()),
            lhs_residue: record.lhs_residue.as_ref().map(|v| v.to_string()),
            rhs_residue: record.rhs_residue.as_ref().map(|v| v.to_string()),
            lhs_valuation: record.lhs_valuation.map(|v| v.to_string()),
            bound: record.bound.map(|v| v.to_string()),
            holds: record.holds(),
            skipped: Some(record.skipped()),
            skip_reason: record.skip_reason().map(String::from),
            lhs_witness: record.lhs_witness.as_ref().map(|v| v.to_string()),
            rhs_witness: record.rhs_witness.as_ref().map(|v| v.to_string()),
            detail: record.detail.clone(),
            elapsed_ms: if with_timing { record.elapsed_ms } else { None },
            ..ReportLine::default()
        }
    }

    pub fn from_identity(verdict: &IdentityVerdict, with_timing: bool) -> ReportLine {
        let params = &verdict.params;
        let scalar = |side: &IdentitySide| side.as_scalar().map(|v| v.to_string());
        ReportLine {
            check_id: verdict.id.as_str().to_string(),
            n: params.n,
            m: params.m,
            sign: params.sign.map(|s| s.as_i8()),
            side: params.side.map(|s| s.as_str().to_string()),
            l: params.l,
            i: params.i,
            j: params.j,
            k: params.k,
            // scalar identities report both exact sides; polynomial
            // identities are compared coefficientwise and report the
            // verdict only (a mismatch is described in `detail`)
            lhs_residue: scalar(&verdict.lhs),
            rhs_residue: scalar(&verdict.rhs),
            holds: Some(verdict.holds),
            skipped: Some(false),
            detail: verdict.detail.clone(),
            elapsed_ms: if with_timing { verdict.elapsed_ms } else { None },
            ..ReportLine::default()
        }
    }
}

pub fn summarize_lines(lines: &[ReportLine]) -> SummaryLine {
    let mut summary = SummaryLine {
        check_id: "summary",
        checked: lines.len() as u64,
        held: 0,
        failed: 0,
        skipped: 0,
    };
    for line in lines {
        match line.holds {
            Some(true) => summary.held += 1,
            Some(false) => summary.failed += 1,
            None => summary.skipped += 1,
        }
    }
    summary
}

/// CSV column order; matches the JSONL key order, with the summary totals
/// in dedicated trailing columns (`skipped_count` to avoid colliding with
/// the per-record boolean).
const CSV_HEADER: &str = "check_id,n,m,p,e,x,sign,side,l,i,j,k,modulus,lhs_residue,rhs_residue,\
lhs_valuation,bound,holds,skipped,skip_reason,lhs_witness,rhs_witness,detail,elapsed_ms,\
checked,held,failed,skipped_count";

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn csv_cell<T: ToString>(value: &Option<T>) -> String {
    value
        .as_ref()
        .map(|v| csv_escape(&v.to_string()))
        .unwrap_or_default()
}

fn csv_row(line: &ReportLine) -> String {
    let cells = [
        csv_escape(&line.check_id),
        csv_cell(&line.n),
        csv_cell(&line.m),
        csv_cell(&line.p),
        csv_cell(&line.e),
        csv_cell(&line.x),
        csv_cell(&line.sign),
        csv_cell(&line.side),
        csv_cell(&line.l),
        csv_cell(&line.i),
        csv_cell(&line.j),
        csv_cell(&line.k),
        csv_cell(&line.modulus),
        csv_cell(&line.lhs_residue),
        csv_cell(&line.rhs_residue),
        csv_cell(&line.lhs_valuation),
        csv_cell(&line.bound),
        csv_cell(&line.holds),
        csv_cell(&line.skipped),
        csv_cell(&line.skip_reason),
        csv_cell(&line.lhs_witness),
        csv_cell(&line.rhs_witness),
        csv_cell(&line.detail),
        csv_cell(&line.elapsed_ms),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
    ];
    cells.join(",")
}

fn csv_summary_row(summary: &SummaryLine) -> String {
    let mut cells = vec![summary.check_id.to_string()];
    cells.resize(24, String::new());
    cells.push(summary.checked.to_string());
    cells.push(summary.held.to_string());
    cells.push(summary.failed.to_string());
    cells.push(summary.skipped.to_string());
    cells.join(",")
}

/// Renders the whole report — records then summary — as one string ready
/// to be written to a single sink.
pub fn render(lines: &[ReportLine], summary: &SummaryLine, format: Format) -> String {
    let mut out = String::new();
    match format {
        Format::Jsonl => {
            for line in lines {
                out.push_str(&serde_json::to_string(line).expect("report lines serialize"));
                out.push('\n');
            }
            out.push_str(&serde_json::to_string(summary).expect("summary serializes"));
            out.push('\n');
        }
        Format::Csv => {
            out.push_str(CSV_HEADER);
            out.push('\n');
            for line in lines {
                out.push_str(&csv_row(line));
                out.push('\n');
            }
            out.push_str(&csv_summary_row(summary));
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use delannoy_core::{check_divisibility_eq1, BigInt};

    #[test]
    fn check_record_round_trip() {
        let record = check_divisibility_eq1(4, 2, &BigInt::from(1));
        let line = ReportLine::from_check(&record, true);
        assert_eq!(line.check_id, "divisibility_eq1");
        assert_eq!(line.n, Some(4));
        assert_eq!(line.m, Some(2));
        assert_eq!(line.x, Some(1));
        assert_eq!(line.sign, Some(1));
        assert_eq!(line.modulus.as_deref(), Some("4"));
        assert_eq!(line.lhs_residue.as_deref(), Some("0"));
        assert_eq!(line.holds, Some(true));
        assert_eq!(line.skipped, Some(false));
        let json = serde_json::to_string(&line).unwrap();
        assert!(json.starts_with("{\"check_id\":\"divisibility_eq1\""));
        assert!(!json.contains("\"p\":"), "absent params must be omitted: {json}");
    }

    #[test]
    fn timing_suppression() {
        let mut record = check_divisibility_eq1(4, 2, &BigInt::from(1));
        record.elapsed_ms = Some(7);
        assert_eq!(ReportLine::from_check(&record, true).elapsed_ms, Some(7));
        assert_eq!(ReportLine::from_check(&record, false).elapsed_ms, None);
    }

    #[test]
    fn summary_counts_lines() {
        let mut held = ReportLine::default();
        held.holds = Some(true);
        let mut failed = ReportLine::default();
        failed.holds = Some(false);
        let skipped = ReportLine::default();
        let summary = summarize_lines(&[held.clone(), held, failed, skipped]);
        assert_eq!(summary.checked, 4);
        assert_eq!(summary.held, 2);
        assert_eq!(summary.failed, 1);
        assert_eq!(summary.skipped, 1);
    }

    #[test]
    fn csv_rows_have_fixed_arity() {
        let columns = CSV_HEADER.split(',').count();
        let record = check_divisibility_eq1(4, 2, &BigInt::from(-3));
        let line = ReportLine::from_check(&record, true);
        assert_eq!(csv_row(&line).split(',').count(), columns);
        let summary = summarize_lines(std::slice::from_ref(&line));
        assert_eq!(csv_summary_row(&summary).split(',').count(), columns);
    }

    #[test]
    fn csv_escaping() {
        assert_eq!(csv_escape("plain"), "plain");
        assert_eq!(csv_escape("a,b"), "\"a,b\"");
        assert_eq!(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    }
}
