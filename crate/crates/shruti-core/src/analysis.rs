//! Deviation measurement against the experimental reference values
//! and the sung-performance comparison pipeline.

use crate::generator::{DistributionKind, ShrutiIndex};
use crate::ratio::{diff_cents, Ratio};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Degree values measured from recorded performances, at the three
/// decimal places in which they were published. Stored as constants,
/// never re-derived.
pub const EXPERIMENTAL_REFERENCE: [f64; 23] = [
    1.000, 1.048, 1.065, 1.117, 1.134, 1.189, 1.208, 1.227, 1.267, 1.328, 1.349, 1.399, 1.429,
    1.506, 1.579, 1.604, 1.630, 1.682, 1.739, 1.791, 1.824, 1.908, 2.000,
];

/// How the model value enters the cents comparison.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Rounding {
    /// Use the exact ratio.
    ExactModel,
    /// Round the model's decimal value to 3 places first. The
    /// published per-degree differences for the generalized
    /// distribution are reproducible only under this convention.
    ModelRounded3dp,
}

/// Divisor used for the table average. The published averages divide
/// the 23-row sum by 21 for the three historical distributions and by
/// 22 for the generalized one; both conventions are kept explicit.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum AveragingConvention {
    Interior21,
    Interior22,
}

impl AveragingConvention {
    pub fn divisor(self) -> f64 {
        match self {
            AveragingConvention::Interior21 => 21.0,
            AveragingConvention::Interior22 => 22.0,
        }
    }

    /// The convention under which each kind's published average
    /// reproduces.
    pub fn default_for(kind: DistributionKind) -> AveragingConvention {
        match kind {
            DistributionKind::Generalized => AveragingConvention::Interior22,
            _ => AveragingConvention::Interior21,
        }
    }
}

impl Rounding {
    /// Convention under which each kind's published per-degree
    /// differences reproduce.
    pub fn default_for(kind: DistributionKind) -> Rounding {
        match kind {
            DistributionKind::Generalized => Rounding::ModelRounded3dp,
            _ => Rounding::ExactModel,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DeviationRow {
    pub index: ShrutiIndex,
    /// Exact model ratio, when the kind has one.
    pub model_ratio: Option<Ratio>,
    /// Model value as compared (rounded when the convention says so).
    pub model_value: f64,
    pub reference_value: f64,
    pub diff_cents: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeviationReport {
    pub kind: DistributionKind,
    pub rounding: Rounding,
    pub convention: AveragingConvention,
    pub rows: Vec<DeviationRow>,
    pub average_cents: f64,
}

fn round_3dp(x: f64) -> f64 {
    libm::round(x * 1000.0) / 1000.0
}

/// Per-degree cents deviation of a model distribution from the
/// experimental reference, with each kind's published conventions.
pub fn deviation_table(kind: DistributionKind, rounding: Rounding) -> DeviationReport {
    deviation_table_with(kind, rounding, AveragingConvention::default_for(kind))
}

pub fn deviation_table_with(
    kind: DistributionKind,
    rounding: Rounding,
    convention: AveragingConvention,
) -> DeviationReport {
    assert!(
        kind != DistributionKind::ExperimentalReference,
        "deviation table needs a model distribution"
    );
    let rows: Vec<DeviationRow> = ShrutiIndex::all()
        .map(|z| {
            let ratio = kind.ratio(z);
            let model_value = match rounding {
                Rounding::ExactModel => kind.value(z),
                Rounding::ModelRounded3dp => round_3dp(kind.value(z)),
            };
            let reference_value = EXPERIMENTAL_REFERENCE[z.get() as usize - 1];
            DeviationRow {
                index: z,
                model_ratio: ratio,
                model_value,
                reference_value,
                diff_cents: diff_cents(model_value, reference_value).expect("positive values"),
            }
        })
        .collect();
    let sum: f64 = rows.iter().map(|r| r.diff_cents).sum();
    DeviationReport {
        kind,
        rounding,
        convention,
        average_cents: sum / convention.divisor(),
        rows,
    }
}

/// Errors from the sung-performance pipeline.
#[derive(Clone, Debug, PartialEq)]
pub enum AnalysisError {
    NoRecords,
    EmptyRecord { singer_id: String },
    TargetLengthMismatch { singer_id: String },
    ValueOutOfRange { singer_id: String, value: f64 },
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::NoRecords => f.write_str("no singer records supplied"),
            AnalysisError::EmptyRecord { singer_id } => {
                write!(f, "singer '{singer_id}' has no sung values")
            }
            AnalysisError::TargetLengthMismatch { singer_id } => {
                write!(f, "singer '{singer_id}': target indices do not match sung values")
            }
            AnalysisError::ValueOutOfRange { singer_id, value } => {
                write!(f, "singer '{singer_id}': sung value {value} outside (0.5, 4.0)")
            }
        }
    }
}

/// One performer's sung degree ratios relative to their tonic,
/// optionally labeled with intended degree indices.
#[derive(Clone, Debug, PartialEq)]
pub struct SingerRecord {
    pub singer_id: String,
    pub sung_values: Vec<f64>,
    pub target_indices: Option<Vec<ShrutiIndex>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingerAverage {
    pub singer_id: String,
    pub note_count: usize,
    pub average_cents: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SingerReport {
    pub kind: DistributionKind,
    pub per_singer: Vec<SingerAverage>,
    /// Unweighted mean of the per-singer averages.
    pub grand_average_cents: f64,
}

/// Octave-reduces `value` into [1, 2) by doubling or halving.
fn octave_reduce(mut value: f64) -> f64 {
    while value >= 2.0 {
        value /= 2.0;
    }
    while value < 1.0 {
        value *= 2.0;
    }
    value
}

/// Cents distance folded to the nearest octave, in [0, 600].
fn octave_folded_diff(a_cents: f64, b_cents: f64) -> f64 {
    let mut d = libm::fmod(a_cents - b_cents, 1200.0);
    if d < 0.0 {
        d += 1200.0;
    }
    if d > 600.0 {
        1200.0 - d
    } else {
        d
    }
}

/// Degree of `kind` closest in cents to an octave-reduced value, with
/// the distance. Ties break toward the lower degree.
pub fn nearest_shruti(value: f64, kind: DistributionKind) -> Option<(ShrutiIndex, f64)> {
    if !(value > 0.5 && value < 4.0) {
        return None;
    }
    let cents = 1200.0 * libm::log2(octave_reduce(value));
    let mut best: Option<(ShrutiIndex, f64)> = None;
    for z in ShrutiIndex::all() {
        let d = libm::fabs(cents - 1200.0 * libm::log2(kind.value(z)));
        if best.is_none_or(|(_, bd)| d < bd) {
            best = Some((z, d));
        }
    }
    best
}

/// Per-singer average cents deviation from a model distribution, plus
/// the unweighted grand average. Labeled notes compare against their
/// labeled degree; unlabeled notes against the nearest degree. Notes
/// weigh equally and octave shifts of sung values do not matter.
pub fn singer_report(
    records: &[SingerRecord],
    kind: DistributionKind,
) -> Result<SingerReport, AnalysisError> {
    if records.is_empty() {
        return Err(AnalysisError::NoRecords);
    }
    let mut per_singer = Vec::with_capacity(records.len());
    for record in records {
        if record.sung_values.is_empty() {
            return Err(AnalysisError::EmptyRecord {
                singer_id: record.singer_id.clone(),
            });
        }
        if let Some(targets) = &record.target_indices {
            if targets.len() != record.sung_values.len() {
                return Err(AnalysisError::TargetLengthMismatch {
                    singer_id: record.singer_id.clone(),
                });
            }
        }
        let mut sum = 0.0;
        for (i, &value) in record.sung_values.iter().enumerate() {
            if !(value > 0.5 && value < 4.0) || !value.is_finite() {
                return Err(AnalysisError::ValueOutOfRange {
                    singer_id: record.singer_id.clone(),
                    value,
                });
            }
            let sung_cents = 1200.0 * libm::log2(octave_reduce(value));
            sum += match &record.target_indices {
                Some(targets) => {
                    let target_cents = 1200.0 * libm::log2(kind.value(targets[i]));
                    octave_folded_diff(sung_cents, target_cents)
                }
                None => nearest_shruti(value, kind).expect("range checked above").1,
            };
        }
        per_singer.push(SingerAverage {
            singer_id: record.singer_id.clone(),
            note_count: record.sung_values.len(),
            average_cents: sum / record.sung_values.len() as f64,
        });
    }
    let grand = per_singer.iter().map(|s| s.average_cents).sum::<f64>() / per_singer.len() as f64;
    Ok(SingerReport {
        kind,
        per_singer,
        grand_average_cents: grand,
    })
}
