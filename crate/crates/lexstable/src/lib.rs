//! IO, file formats, parallel drivers and reports around `lexstable-core`.
//!
//! This crate owns everything that touches the filesystem: ingestion of raw
//! tweet / mbox / JSON-lines sources into the canonical corpus format,
//! dictionary and trait-model loading, value tables and population statistics
//! on disk, CSV and SVG report emitters, run manifests and the `lexstable`
//! command-line tool.

pub mod canonical;
pub mod cli;
pub mod error;
pub mod files;
pub mod ingest;
pub mod manifest;
pub mod parallel;
pub mod report;
pub mod svg;

pub use error::Error;
pub use lexstable_core as core;
