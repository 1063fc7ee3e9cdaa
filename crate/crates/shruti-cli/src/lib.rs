//! IO companion to `shruti-core`: tonic-anchored frequency tables,
//! Scala `.scl` scale files, tabular reports, offline WAV rendering,
//! singer CSV ingest, and the `shruti` command-line tool.

pub mod cli;
pub mod report;
pub mod scale;
pub mod scl;
pub mod singers;
pub mod wav;

pub use scale::{frequency_table, FrequencyTable};
pub use scl::{parse_scl, ScaleDocument, SclValue};
pub use wav::{render_wav, RenderSpec};
