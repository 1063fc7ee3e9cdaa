//! Tonic-anchored frequency tables.

use shruti_core::{DistributionKind, ShrutiIndex};
use thiserror::Error;

pub const TONIC_MIN_HZ: f64 = 20.0;
pub const TONIC_MAX_HZ: f64 = 5000.0;

#[derive(Debug, Error, PartialEq)]
pub enum ScaleError {
    #[error("tonic {0} Hz outside the supported range {TONIC_MIN_HZ}..={TONIC_MAX_HZ} Hz")]
    TonicOutOfRange(f64),
}

/// The 23 degree frequencies of one distribution above a chosen tonic.
#[derive(Debug, Clone, PartialEq)]
pub struct FrequencyTable {
    pub tonic_hz: f64,
    pub kind: DistributionKind,
    /// (degree index, frequency in Hz), ascending.
    pub entries: Vec<(u8, f64)>,
}

/// Scales every degree value of `kind` by the tonic. Degree 1 is the
/// tonic itself, degree 23 its octave.
pub fn frequency_table(tonic_hz: f64, kind: DistributionKind) -> Result<FrequencyTable, ScaleError> {
    if !(TONIC_MIN_HZ..=TONIC_MAX_HZ).contains(&tonic_hz) {
        return Err(ScaleError::TonicOutOfRange(tonic_hz));
    }
    Ok(FrequencyTable {
        tonic_hz,
        kind,
        entries: ShrutiIndex::all()
            .map(|z| (z.get(), tonic_hz * kind.value(z)))
            .collect(),
    })
}
