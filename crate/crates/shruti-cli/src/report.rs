//! Deterministic plain/CSV/JSON rendering of tables and reports.

use crate::scale::FrequencyTable;
use serde_json::json;
use shruti_core::analysis::{
    AveragingConvention, DeviationReport, Rounding, SingerReport,
};
use shruti_core::{DistributionKind, ShrutiIndex};
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
    Json,
}

fn convention_name(c: AveragingConvention) -> &'static str {
    match c {
        AveragingConvention::Interior21 => "interior21",
        AveragingConvention::Interior22 => "interior22",
    }
}

/// Model value column: the exact ratio when it is what was compared,
/// otherwise the (possibly rounded) decimal.
fn model_column(row: &shruti_core::analysis::DeviationRow, rounding: Rounding) -> String {
    match (row.model_ratio, rounding) {
        (Some(r), Rounding::ExactModel) => r.to_string(),
        _ => format!("{:.3}", row.model_value),
    }
}

pub fn deviation_report_text(report: &DeviationReport, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            writeln!(out, "{:>2}  {:>9}  {:>9}  {:>10}", "z", "model", "reference", "diff_cents")
                .unwrap();
            for row in &report.rows {
                writeln!(
                    out,
                    "{:>2}  {:>9}  {:>9.3}  {:>10.2}",
                    row.index,
                    model_column(row, report.rounding),
                    row.reference_value,
                    row.diff_cents
                )
                .unwrap();
            }
            writeln!(
                out,
                "average ({}): {:.2}",
                convention_name(report.convention),
                report.average_cents
            )
            .unwrap();
        }
        OutputFormat::Csv => {
            out.push_str("z,model,reference,diff_cents\n");
            for row in &report.rows {
                writeln!(
                    out,
                    "{},{},{:.3},{:.2}",
                    row.index,
                    model_column(row, report.rounding),
                    row.reference_value,
                    row.diff_cents
                )
                .unwrap();
            }
            writeln!(out, "average,{},,{:.2}", convention_name(report.convention), report.average_cents)
                .unwrap();
        }
        OutputFormat::Json => {
            let rows: Vec<_> = report
                .rows
                .iter()
                .map(|row| {
                    json!({
                        "z": row.index.get(),
                        "model": model_column(row, report.rounding),
                        "model_value": row.model_value,
                        "reference": row.reference_value,
                        "diff_cents": row.diff_cents,
                    })
                })
                .collect();
            out = serde_json::to_string_pretty(&json!({
                "kind": report.kind.name(),
                "averaging": convention_name(report.convention),
                "average_cents": report.average_cents,
                "rows": rows,
            }))
            .unwrap();
            out.push('\n');
        }
    }
    out
}

pub fn frequency_table_text(table: &FrequencyTable, format: OutputFormat) -> String {
    let ratio_column = |z: u8| {
        let z = ShrutiIndex::new(z).unwrap();
        match table.kind.ratio(z) {
            Some(r) => r.to_string(),
            None => format!("{:.3}", table.kind.value(z)),
        }
    };
    let cents_column = |z: u8| {
        let z = ShrutiIndex::new(z).unwrap();
        1200.0 * table.kind.value(z).log2()
    };
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            writeln!(out, "{:>2}  {:>9}  {:>8}  {:>10}", "z", "ratio", "cents", "hz").unwrap();
            for &(z, hz) in &table.entries {
                writeln!(
                    out,
                    "{:>2}  {:>9}  {:>8.2}  {:>10.3}",
                    z,
                    ratio_column(z),
                    cents_column(z),
                    hz
                )
                .unwrap();
            }
        }
        OutputFormat::Csv => {
            out.push_str("z,ratio,cents,hz\n");
            for &(z, hz) in &table.entries {
                writeln!(out, "{},{},{:.2},{:.3}", z, ratio_column(z), cents_column(z), hz)
                    .unwrap();
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = table
                .entries
                .iter()
                .map(|&(z, hz)| {
                    json!({
                        "z": z,
                        "ratio": ratio_column(z),
                        "cents": cents_column(z),
                        "hz": hz,
                    })
                })
                .collect();
            out = serde_json::to_string_pretty(&json!({
                "kind": table.kind.name(),
                "tonic_hz": table.tonic_hz,
                "rows": rows,
            }))
            .unwrap();
            out.push('\n');
        }
    }
    out
}

/// Value listing for one distribution: degree, ratio (decimal for the
/// experimental reference), value, cents above unison.
pub fn value_table_text(kind: DistributionKind, format: OutputFormat) -> String {
    let rows: Vec<(u8, String, f64, f64)> = ShrutiIndex::all()
        .map(|z| {
            let value = kind.value(z);
            let ratio = match kind.ratio(z) {
                Some(r) => r.to_string(),
                None => format!("{value:.3}"),
            };
            (z.get(), ratio, value, 1200.0 * value.log2())
        })
        .collect();
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            writeln!(out, "{:>2}  {:>9}  {:>8}  {:>8}", "z", "ratio", "value", "cents").unwrap();
            for (z, ratio, value, cents) in rows {
                writeln!(out, "{z:>2}  {ratio:>9}  {value:>8.5}  {cents:>8.2}").unwrap();
            }
        }
        OutputFormat::Csv => {
            out.push_str("z,ratio,value,cents\n");
            for (z, ratio, value, cents) in rows {
                writeln!(out, "{z},{ratio},{value:.5},{cents:.2}").unwrap();
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(z, ratio, value, cents)| {
                    json!({ "z": z, "ratio": ratio, "value": value, "cents": cents })
                })
                .collect();
            out = serde_json::to_string_pretty(&json!({ "kind": kind.name(), "rows": rows }))
                .unwrap();
            out.push('\n');
        }
    }
    out
}

/// The four average deviations, one line per distribution.
pub fn averages_text(averages: &[(DistributionKind, f64)], format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            for (kind, avg) in averages {
                writeln!(out, "{:<20} {:>6.2}", kind.name(), avg).unwrap();
            }
        }
        OutputFormat::Csv => {
            out.push_str("kind,average_cents\n");
            for (kind, avg) in averages {
                writeln!(out, "{},{avg:.2}", kind.name()).unwrap();
            }
        }
        OutputFormat::Json => {
            let rows: Vec<_> = averages
                .iter()
                .map(|(kind, avg)| json!({ "kind": kind.name(), "average_cents": avg }))
                .collect();
            out = serde_json::to_string_pretty(&json!({ "averages": rows })).unwrap();
            out.push('\n');
        }
    }
    out
}

pub fn singer_report_text(report: &SingerReport, format: OutputFormat) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Plain => {
            writeln!(out, "{:<16} {:>6} {:>10}", "singer", "notes", "avg_cents").unwrap();
            for s in &report.per_singer {
                writeln!(out, "{:<16} {:>6} {:>10.3}", s.singer_id, s.note_count, s.average_cents)
                    .unwrap();
            }
            writeln!(out, "grand average: {:.3}", report.grand_average_cents).unwrap();
        }
        OutputFormat::Csv => {
            out.push_str("singer,notes,avg_cents\n");
            for s in &report.per_singer {
                writeln!(out, "{},{},{:.3}", s.singer_id, s.note_count, s.average_cents).unwrap();
            }
            writeln!(out, "grand,,{:.3}", report.grand_average_cents).unwrap();
        }
        OutputFormat::Json => {
            let singers: Vec<_> = report
                .per_singer
                .iter()
                .map(|s| {
                    json!({
                        "singer": s.singer_id,
                        "notes": s.note_count,
                        "avg_cents": s.average_cents,
                    })
                })
                .collect();
            out = serde_json::to_string_pretty(&json!({
                "kind": report.kind.name(),
                "singers": singers,
                "grand_average_cents": report.grand_average_cents,
            }))
            .unwrap();
            out.push('\n');
        }
    }
    out
}
