//! Scala `.scl` scale files: emission and parsing.
//!
//! The format lists a scale's degrees above an implicit 1/1: comment
//! lines start with `!`, then one description line, a degree count,
//! and one degree per line. A value containing a decimal point is
//! cents; `n/d` (or a bare integer, meaning `n/1`) is an exact ratio.

use shruti_core::{DistributionKind, Ratio, ShrutiIndex};
use std::fmt;
use thiserror::Error;

/// One scale degree as written in a `.scl` file.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SclValue {
    Ratio(Ratio),
    Cents(f64),
}

impl SclValue {
    pub fn cents(self) -> f64 {
        match self {
            SclValue::Ratio(r) => r.cents(),
            SclValue::Cents(c) => c,
        }
    }
}

impl fmt::Display for SclValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SclValue::Ratio(r) => write!(f, "{r}"),
            SclValue::Cents(c) => write!(f, "{c:.3}"),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum SclError {
    #[error("line {line}: malformed scale value '{text}'")]
    MalformedValue { line: usize, text: String },
    #[error("line {line}: ratio must be positive")]
    NonPositiveRatio { line: usize },
    #[error("line {line}: malformed degree count '{text}'")]
    MalformedCount { line: usize, text: String },
    #[error("degree count says {expected}, file has {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("missing description or degree count header")]
    MissingHeader,
}

/// A named scale of 22 intervals above the implicit unison, the last
/// being the octave.
#[derive(Debug, Clone, PartialEq)]
pub struct ScaleDocument {
    pub description: String,
    pub degrees: Vec<SclValue>,
}

impl ScaleDocument {
    /// Builds the document for one distribution: degrees z = 2..=23,
    /// exact ratios where the distribution has them (always, except
    /// the experimental reference), or cents when `as_cents` is set.
    pub fn from_kind(kind: DistributionKind, description: &str, as_cents: bool) -> ScaleDocument {
        let degrees = ShrutiIndex::all()
            .skip(1)
            .map(|z| match kind.ratio(z) {
                Some(r) if !as_cents => SclValue::Ratio(r),
                Some(r) => SclValue::Cents(r.cents()),
                None => SclValue::Cents(1200.0 * kind.value(z).log2()),
            })
            .collect();
        ScaleDocument {
            description: description.to_string(),
            degrees,
        }
    }

    /// Serializes to `.scl` text with `\n` line endings throughout.
    pub fn to_scl(&self) -> String {
        let mut out = String::new();
        out.push_str("! ");
        out.push_str(&self.description);
        out.push_str("\n!\n");
        out.push_str(&self.description);
        out.push('\n');
        out.push_str(&format!(" {}\n", self.degrees.len()));
        out.push_str("!\n");
        for degree in &self.degrees {
            out.push_str(&format!(" {degree}\n"));
        }
        out
    }
}

fn parse_value(token: &str, line: usize) -> Result<SclValue, SclError> {
    let malformed = || SclError::MalformedValue {
        line,
        text: token.to_string(),
    };
    if token.contains('.') {
        // Decimal point means cents, per the format.
        token
            .parse::<f64>()
            .ok()
            .filter(|c| c.is_finite())
            .map(SclValue::Cents)
            .ok_or_else(malformed)
    } else if let Some((num, den)) = token.split_once('/') {
        let num: u64 = num.parse().map_err(|_| malformed())?;
        let den: u64 = den.parse().map_err(|_| malformed())?;
        if num == 0 || den == 0 {
            return Err(SclError::NonPositiveRatio { line });
        }
        Ok(SclValue::Ratio(Ratio::new(num, den)))
    } else {
        let num: u64 = token.parse().map_err(|_| malformed())?;
        if num == 0 {
            return Err(SclError::NonPositiveRatio { line });
        }
        Ok(SclValue::Ratio(Ratio::new(num, 1)))
    }
}

/// Parses `.scl` text into its degree values. Line numbers in errors
/// are 1-based over the raw input.
pub fn parse_scl(text: &str) -> Result<Vec<SclValue>, SclError> {
    // (1-based line number, content) with comments stripped
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim_start().starts_with('!'));

    let _description = lines.next().ok_or(SclError::MissingHeader)?;
    let (count_line, count_text) = lines.next().ok_or(SclError::MissingHeader)?;
    let expected: usize =
        count_text
            .trim()
            .parse()
            .map_err(|_| SclError::MalformedCount {
                line: count_line,
                text: count_text.trim().to_string(),
            })?;

    let mut degrees = Vec::with_capacity(expected);
    for (line, content) in lines {
        let Some(token) = content.split_whitespace().next() else {
            continue; // blank line
        };
        degrees.push(parse_value(token, line)?);
    }
    if degrees.len() != expected {
        return Err(SclError::CountMismatch {
            expected,
            found: degrees.len(),
        });
    }
    Ok(degrees)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn emits_22_degrees_ending_on_the_octave() {
        for kind in DistributionKind::MODELS {
            let doc = ScaleDocument::from_kind(kind, "test", false);
            assert_eq!(doc.degrees.len(), 22);
            assert_eq!(*doc.degrees.last().unwrap(), SclValue::Ratio(Ratio::OCTAVE));
        }
    }

    #[test]
    fn known_degree_lines() {
        let doc = ScaleDocument::from_kind(DistributionKind::WesternCompilation, "wc", false);
        assert_eq!(doc.degrees[0].to_string(), "256/243");
        let doc = ScaleDocument::from_kind(DistributionKind::Generalized, "f", false);
        assert_eq!(doc.degrees[6].to_string(), "49/40");
    }

    #[test]
    fn round_trip_is_identity_on_ratios() {
        for kind in DistributionKind::MODELS {
            let doc = ScaleDocument::from_kind(kind, kind.name(), false);
            let parsed = parse_scl(&doc.to_scl()).unwrap();
            assert_eq!(parsed, doc.degrees);
        }
    }

    #[test]
    fn parses_cents_and_bare_integers() {
        let text = "desc\n 3\n 1200.0\n 2\n 3/2\n";
        let parsed = parse_scl(text).unwrap();
        assert_eq!(parsed[0], SclValue::Cents(1200.0));
        assert_eq!(parsed[1], SclValue::Ratio(Ratio::new(2, 1)));
        assert_eq!(parsed[2], SclValue::Ratio(Ratio::new(3, 2)));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_scl("desc\n 1\n 0/3\n"),
            Err(SclError::NonPositiveRatio { line: 3 })
        );
        assert_eq!(
            parse_scl("desc\n 2\n 3/2\n"),
            Err(SclError::CountMismatch { expected: 2, found: 1 })
        );
        assert!(matches!(
            parse_scl("desc\n 1\n x/y\n"),
            Err(SclError::MalformedValue { line: 3, .. })
        ));
        assert_eq!(parse_scl(""), Err(SclError::MissingHeader));
    }
}
