//! Offline rendering of a frequency table to 16-bit mono PCM WAV.

use crate::scale::FrequencyTable;
use std::f64::consts::TAU;
use thiserror::Error;

/// Rendering parameters for the reference-tone WAV.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderSpec {
    pub sample_rate: u32,
    /// Seconds per note.
    pub note_duration: f64,
    /// Linear fade-in/out length in seconds, applied at both ends of
    /// every note.
    pub fade: f64,
    /// Peak amplitude as a fraction of full scale.
    pub amplitude: f64,
}

impl Default for RenderSpec {
    fn default() -> RenderSpec {
        RenderSpec {
            sample_rate: 44_100,
            note_duration: 1.0,
            fade: 0.01,
            amplitude: 0.8,
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum RenderError {
    #[error("sample rate {0} outside 8000..=192000 Hz")]
    SampleRateOutOfRange(u32),
    #[error("fade {fade}s does not fit twice into note duration {note_duration}s")]
    FadeTooLong { fade: f64, note_duration: f64 },
    #[error("amplitude {0} outside (0, 1]")]
    AmplitudeOutOfRange(f64),
}

impl RenderSpec {
    pub fn validate(&self) -> Result<(), RenderError> {
        if !(8_000..=192_000).contains(&self.sample_rate) {
            return Err(RenderError::SampleRateOutOfRange(self.sample_rate));
        }
        if !(self.fade > 0.0 && self.fade * 2.0 <= self.note_duration) {
            return Err(RenderError::FadeTooLong {
                fade: self.fade,
                note_duration: self.note_duration,
            });
        }
        if !(self.amplitude > 0.0 && self.amplitude <= 1.0) {
            return Err(RenderError::AmplitudeOutOfRange(self.amplitude));
        }
        Ok(())
    }

    pub fn samples_per_note(&self) -> usize {
        (self.note_duration * self.sample_rate as f64).round() as usize
    }
}

/// Renders the 23 degrees as consecutive sine tones and returns the
/// complete RIFF/WAVE byte stream. Deterministic for fixed inputs.
pub fn render_wav(table: &FrequencyTable, spec: &RenderSpec) -> Result<Vec<u8>, RenderError> {
    spec.validate()?;
    let per_note = spec.samples_per_note();
    let fade_samples = (spec.fade * spec.sample_rate as f64).round();
    let peak = spec.amplitude * 32767.0;

    let mut samples = Vec::with_capacity(per_note * table.entries.len());
    for &(_, freq) in &table.entries {
        let step = TAU * freq / spec.sample_rate as f64;
        for i in 0..per_note {
            let envelope = (i as f64 / fade_samples)
                .min((per_note - 1 - i) as f64 / fade_samples)
                .min(1.0);
            samples.push((peak * envelope * (step * i as f64).sin()).round() as i16);
        }
    }
    Ok(wrap_pcm16_mono(&samples, spec.sample_rate))
}

/// RIFF/WAVE container around raw 16-bit mono PCM samples.
fn wrap_pcm16_mono(samples: &[i16], sample_rate: u32) -> Vec<u8> {
    let data_len = (samples.len() * 2) as u32;
    let mut out = Vec::with_capacity(44 + samples.len() * 2);
    out.extend_from_slice(b"RIFF");
    out.extend_from_slice(&(36 + data_len).to_le_bytes());
    out.extend_from_slice(b"WAVE");
    out.extend_from_slice(b"fmt ");
    out.extend_from_slice(&16u32.to_le_bytes()); // fmt chunk size
    out.extend_from_slice(&1u16.to_le_bytes()); // PCM
    out.extend_from_slice(&1u16.to_le_bytes()); // mono
    out.extend_from_slice(&sample_rate.to_le_bytes());
    out.extend_from_slice(&(sample_rate * 2).to_le_bytes()); // byte rate
    out.extend_from_slice(&2u16.to_le_bytes()); // block align
    out.extend_from_slice(&16u16.to_le_bytes()); // bits per sample
    out.extend_from_slice(b"data");
    out.extend_from_slice(&data_len.to_le_bytes());
    for s in samples {
        out.extend_from_slice(&s.to_le_bytes());
    }
    out
}
