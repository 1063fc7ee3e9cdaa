//! The `shruti` command-line tool.
//!
//! Exit codes: 0 success, 1 data errors (bad singer file, bad input),
//! 2 usage errors.

use crate::report::{
    averages_text, deviation_report_text, frequency_table_text, singer_report_text,
    value_table_text, OutputFormat,
};
use crate::scale::{frequency_table, TONIC_MAX_HZ, TONIC_MIN_HZ};
use crate::scl::ScaleDocument;
use crate::singers::parse_singer_csv;
use crate::wav::{render_wav, RenderSpec};
use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use shruti_core::analysis::{
    deviation_table_with, singer_report, AveragingConvention, Rounding,
};
use shruti_core::DistributionKind;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    /// Western Compilation
    Wc,
    /// Deval
    Deval,
    /// Nagoji Row
    Nagoji,
    /// Generalized distribution
    F,
    /// Experimental reference values
    Exp,
}

impl From<KindArg> for DistributionKind {
    fn from(k: KindArg) -> DistributionKind {
        match k {
            KindArg::Wc => DistributionKind::WesternCompilation,
            KindArg::Deval => DistributionKind::Deval,
            KindArg::Nagoji => DistributionKind::NagojiRow,
            KindArg::F => DistributionKind::Generalized,
            KindArg::Exp => DistributionKind::ExperimentalReference,
        }
    }
}

/// The four model distributions; commands that compare against the
/// experimental reference take these.
#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModelKindArg {
    Wc,
    Deval,
    Nagoji,
    F,
}

impl From<ModelKindArg> for DistributionKind {
    fn from(k: ModelKindArg) -> DistributionKind {
        match k {
            ModelKindArg::Wc => DistributionKind::WesternCompilation,
            ModelKindArg::Deval => DistributionKind::Deval,
            ModelKindArg::Nagoji => DistributionKind::NagojiRow,
            ModelKindArg::F => DistributionKind::Generalized,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RoundingArg {
    /// Compare the exact model value
    Exact,
    /// Round the model value to 3 decimals first
    #[value(name = "3dp")]
    ThreeDp,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AvgArg {
    Interior21,
    Interior22,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum FormatArg {
    #[default]
    Plain,
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> OutputFormat {
        match f {
            FormatArg::Plain => OutputFormat::Plain,
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

fn parse_tonic(s: &str) -> Result<f64, String> {
    let hz: f64 = s.parse().map_err(|_| format!("'{s}' is not a number"))?;
    if (TONIC_MIN_HZ..=TONIC_MAX_HZ).contains(&hz) {
        Ok(hz)
    } else {
        Err(format!("tonic must be {TONIC_MIN_HZ}..={TONIC_MAX_HZ} Hz"))
    }
}

fn parse_sample_rate(s: &str) -> Result<u32, String> {
    let rate: u32 = s.parse().map_err(|_| format!("'{s}' is not an integer"))?;
    if (8_000..=192_000).contains(&rate) {
        Ok(rate)
    } else {
        Err("sample rate must be 8000..=192000 Hz".to_string())
    }
}

#[derive(Parser)]
#[command(
    name = "shruti",
    version,
    about = "Exact 22-shruti scale tables, frequency charts, .scl export, and reference tones"
)]
struct Cli {
    /// Output format for tabular commands
    #[arg(long, global = true, value_enum, default_value = "plain")]
    format: FormatArg,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the 23 degree values of a distribution
    Table {
        #[arg(value_enum)]
        kind: KindArg,
    },
    /// Per-degree cents deviation of a model from the experimental values
    Compare {
        #[arg(value_enum)]
        kind: ModelKindArg,
        /// Model value convention; defaults to each kind's published one
        #[arg(long, value_enum)]
        rounding: Option<RoundingArg>,
        /// Averaging divisor; defaults to each kind's published one
        #[arg(long, value_enum)]
        avg: Option<AvgArg>,
    },
    /// Print the four average deviations
    Table5,
    /// Frequency table for a chosen tonic
    Freq {
        #[arg(value_enum)]
        kind: KindArg,
        /// Tonic in Hz
        #[arg(long, value_parser = parse_tonic)]
        tonic: f64,
    },
    /// Export a Scala .scl scale file
    Scl {
        #[arg(value_enum)]
        kind: KindArg,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Emit degrees as cents instead of exact ratios
        #[arg(long)]
        cents: bool,
    },
    /// Render the 23 degrees as reference sine tones to a WAV file
    Render {
        #[arg(value_enum)]
        kind: KindArg,
        /// Tonic in Hz
        #[arg(long, value_parser = parse_tonic)]
        tonic: f64,
        /// Output path; defaults to <kind>.wav
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seconds per note
        #[arg(long, default_value_t = 1.0)]
        dur: f64,
        /// Sample rate in Hz
        #[arg(long, default_value_t = 44_100, value_parser = parse_sample_rate)]
        rate: u32,
    },
    /// Score singer recordings against a distribution
    Analyze {
        /// Singer file: one `singer_id,value[,target_index]` row per note
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "f")]
        kind: KindArg,
    },
}

/// Runs the CLI against explicit arguments and streams; returns the
/// process exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{err}");
                    0
                }
                _ => {
                    let _ = write!(stderr, "{err}");
                    2
                }
            };
        }
    };
    let format = OutputFormat::from(cli.format);

    match cli.command {
        Command::Table { kind } => {
            let _ = write!(stdout, "{}", value_table_text(kind.into(), format));
            0
        }
        Command::Compare { kind, rounding, avg } => {
            let kind = DistributionKind::from(kind);
            let rounding = match rounding {
                Some(RoundingArg::Exact) => Rounding::ExactModel,
                Some(RoundingArg::ThreeDp) => Rounding::ModelRounded3dp,
                None => Rounding::default_for(kind),
            };
            let convention = match avg {
                Some(AvgArg::Interior21) => AveragingConvention::Interior21,
                Some(AvgArg::Interior22) => AveragingConvention::Interior22,
                None => AveragingConvention::default_for(kind),
            };
            let report = deviation_table_with(kind, rounding, convention);
            let _ = write!(stdout, "{}", deviation_report_text(&report, format));
            0
        }
        Command::Table5 => {
            let averages: Vec<_> = DistributionKind::MODELS
                .into_iter()
                .map(|kind| {
                    let report = deviation_table_with(
                        kind,
                        Rounding::default_for(kind),
                        AveragingConvention::default_for(kind),
                    );
                    (kind, report.average_cents)
                })
                .collect();
            let _ = write!(stdout, "{}", averages_text(&averages, format));
            0
        }
        Command::Freq { kind, tonic } => {
            let table = frequency_table(tonic, kind.into()).expect("tonic validated by clap");
            let _ = write!(stdout, "{}", frequency_table_text(&table, format));
            0
        }
        Command::Scl { kind, out, cents } => {
            let kind = DistributionKind::from(kind);
            let description = format!("22-shruti scale, {} distribution", kind.name());
            let doc = ScaleDocument::from_kind(kind, &description, cents);
            let text = doc.to_scl();
            match out {
                Some(path) => match std::fs::write(&path, text) {
                    Ok(()) => {
                        let _ = writeln!(stdout, "wrote {}", path.display());
                        0
                    }
                    Err(err) => {
                        let _ = writeln!(stderr, "error: cannot write {}: {err}", path.display());
                        1
                    }
                },
                None => {
                    let _ = write!(stdout, "{text}");
                    0
                }
            }
        }
        Command::Render { kind, tonic, out, dur, rate } => {
            let kind = DistributionKind::from(kind);
            let table = frequency_table(tonic, kind).expect("tonic validated by clap");
            let spec = RenderSpec {
                sample_rate: rate,
                note_duration: dur,
                ..RenderSpec::default()
            };
            let bytes = match render_wav(&table, &spec) {
                Ok(bytes) => bytes,
                Err(err) => {
                    let _ = writeln!(stderr, "error: {err}");
                    return 2;
                }
            };
            let path = out.unwrap_or_else(|| PathBuf::from(format!("{}.wav", kind.name())));
            match std::fs::write(&path, bytes) {
                Ok(()) => {
                    let _ = writeln!(stdout, "wrote {}", path.display());
                    0
                }
                Err(err) => {
                    let _ = writeln!(stderr, "error: cannot write {}: {err}", path.display());
                    1
                }
            }
        }
        Command::Analyze { input, kind } => {
            let text = match std::fs::read_to_string(&input) {
                Ok(text) => text,
                Err(err) => {
                    let _ = writeln!(stderr, "error: cannot read {}: {err}", input.display());
                    return 1;
                }
            };
            let records = match parse_singer_csv(&text) {
                Ok(records) => records,
                Err(err) => {
                    let _ = writeln!(stderr, "error: {err}");
                    return 1;
                }
            };
            match singer_report(&records, kind.into()) {
                Ok(report) => {
                    let _ = write!(stdout, "{}", singer_report_text(&report, format));
                    0
                }
                Err(err) => {
                    let _ = writeln!(stderr, "error: {err}");
                    1
                }
            }
        }
    }
}
