//! Ingest of sung-ratio records.
//!
//! One row per sung note: `singer_id,value[,target_index]`, UTF-8,
//! header row optional. Rows for the same singer are grouped in input
//! order.

use shruti_core::analysis::SingerRecord;
use shruti_core::ShrutiIndex;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SingerParseError {
    #[error("line {line}: expected 'singer_id,value[,target_index]', got '{text}'")]
    MalformedRow { line: usize, text: String },
    #[error("line {line}: bad sung value '{text}'")]
    BadValue { line: usize, text: String },
    #[error("line {line}: target index '{text}' outside 1..=23")]
    BadTargetIndex { line: usize, text: String },
    #[error("singer '{singer_id}': rows mix labeled and unlabeled notes")]
    MixedLabeling { singer_id: String },
    #[error("no singer rows in input")]
    Empty,
}

/// Parses the delimited singer format into per-singer records.
pub fn parse_singer_csv(text: &str) -> Result<Vec<SingerRecord>, SingerParseError> {
    let mut records: Vec<SingerRecord> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let row = raw.trim();
        if row.is_empty() || row.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = row.split(',').map(str::trim).collect();
        if !(2..=3).contains(&fields.len()) || fields[0].is_empty() {
            return Err(SingerParseError::MalformedRow {
                line,
                text: row.to_string(),
            });
        }
        let value: f64 = match fields[1].parse() {
            Ok(v) => v,
            Err(_) if line == 1 => continue, // header row
            Err(_) => {
                return Err(SingerParseError::BadValue {
                    line,
                    text: fields[1].to_string(),
                })
            }
        };
        let target = fields
            .get(2)
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<u8>()
                    .ok()
                    .and_then(ShrutiIndex::new)
                    .ok_or_else(|| SingerParseError::BadTargetIndex {
                        line,
                        text: t.to_string(),
                    })
            })
            .transpose()?;

        let record = match records.iter_mut().find(|r| r.singer_id == fields[0]) {
            Some(r) => r,
            None => {
                records.push(SingerRecord {
                    singer_id: fields[0].to_string(),
                    sung_values: Vec::new(),
                    target_indices: target.is_some().then(Vec::new),
                });
                records.last_mut().unwrap()
            }
        };
        match (&mut record.target_indices, target) {
            (Some(targets), Some(t)) => targets.push(t),
            (None, None) => {}
            _ => {
                return Err(SingerParseError::MixedLabeling {
                    singer_id: record.singer_id.clone(),
                })
            }
        }
        record.sung_values.push(value);
    }
    if records.is_empty() {
        return Err(SingerParseError::Empty);
    }
    Ok(records)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_labeled_and_unlabeled_rows() {
        let text = "singer_id,value,target_index\ns1,1.5,14\ns1,1.048,2\ns2,1.2\ns2,1.33\n";
        let records = parse_singer_csv(text).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0].singer_id, "s1");
        assert_eq!(records[0].sung_values, vec![1.5, 1.048]);
        assert_eq!(
            records[0].target_indices.as_ref().unwrap()[0],
            ShrutiIndex::new(14).unwrap()
        );
        assert_eq!(records[1].target_indices, None);
    }

    #[test]
    fn header_is_optional() {
        let records = parse_singer_csv("s1,1.5\n").unwrap();
        assert_eq!(records[0].sung_values, vec![1.5]);
    }

    #[test]
    fn rejects_bad_rows() {
        assert_eq!(parse_singer_csv(""), Err(SingerParseError::Empty));
        assert!(matches!(
            parse_singer_csv("s1,1.5\nonly_one_field\n"),
            Err(SingerParseError::MalformedRow { line: 2, .. })
        ));
        assert!(matches!(
            parse_singer_csv("s1,1.5\ns1,abc\n"),
            Err(SingerParseError::BadValue { line: 2, .. })
        ));
        assert!(matches!(
            parse_singer_csv("s1,1.5,24\n"),
            Err(SingerParseError::BadTargetIndex { line: 1, .. })
        ));
        assert_eq!(
            parse_singer_csv("s1,1.5,14\ns1,1.2\n"),
            Err(SingerParseError::MixedLabeling {
                singer_id: "s1".to_string()
            })
        );
    }
}
