//! Canonical corpus files: JSON lines with `author_id`, `timestamp`
//! (ISO-8601 UTC), `medium` and `text`, sorted by author then time.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use chrono::DateTime;
use lexstable_core::{Medium, Message};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ingest::{parse_messages, InputFormat, Parsed};

#[derive(Serialize)]
struct Record<'a> {
    author_id: &'a str,
    timestamp: String,
    medium: &'a str,
    text: &'a str,
}

/// `2014-03-01T12:00:00Z`.
pub fn format_timestamp(secs: i64) -> String {
    match DateTime::from_timestamp(secs, 0) {
        Some(t) => t.format("%Y-%m-%dT%H:%M:%SZ").to_string(),
        None => secs.to_string(),
    }
}

/// Stable sort into canonical order: author, then timestamp, then input order.
pub fn sort_canonical(messages: &mut [Message]) {
    messages.sort_by(|a, b| (a.author_id.as_str(), a.timestamp).cmp(&(b.author_id.as_str(), b.timestamp)));
}

/// Writes `messages` in the order given.
pub fn write_messages<W: Write>(mut out: W, messages: &[Message]) -> io::Result<()> {
    for m in messages {
        let rec = Record {
            author_id: &m.author_id,
            timestamp: format_timestamp(m.timestamp),
            medium: m.medium.as_str(),
            text: m.text(),
        };
        serde_json::to_writer(&mut out, &rec)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

pub fn write_corpus_file(path: &Path, messages: &[Message]) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    write_messages(BufWriter::new(file), messages).map_err(|e| Error::io(path, e))
}

/// Reads a canonical corpus file. Records lacking a `medium` key get
/// `default_medium`.
pub fn read_corpus_file(path: &Path, default_medium: &Medium) -> Result<Parsed> {
    let file = File::open(path).map_err(|e| Error::io(path, e))?;
    parse_messages(file, InputFormat::GenericJsonl, default_medium).map_err(|e| Error::io(path, e))
}
