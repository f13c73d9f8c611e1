//! Loading and saving dictionaries, trait models, per-author value tables
//! (CSV) and population statistics (JSON).

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use lexstable_core::stats::Distribution;
use lexstable_core::{Lexicon, PopulationStats, TraitModel, ValueTable};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn read_text(path: &Path) -> Result<String> {
    let bytes = fs::read(path).map_err(|e| Error::io(path, e))?;
    Ok(String::from_utf8_lossy(&bytes).into_owned())
}

pub fn write_text(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::io(path, e))
}

pub fn load_lexicon(path: &Path) -> Result<Lexicon> {
    Lexicon::parse(&read_text(path)?).map_err(|source| Error::Lexicon {
        path: path.into(),
        source,
    })
}

pub fn load_trait_model(path: &Path) -> Result<TraitModel> {
    TraitModel::parse(&read_text(path)?).map_err(|source| Error::Model {
        path: path.into(),
        source,
    })
}

/// Columns that describe a row rather than measure it.
pub const METADATA_COLUMNS: &[&str] = &["medium", "total_tokens"];

/// Writes `author_id,<metadata...>,<measures...>`. `metadata` holds one
/// `(header, values)` pair per metadata column.
pub fn write_table(path: &Path, table: &ValueTable, metadata: &[(&str, Vec<String>)]) -> Result<()> {
    let io = |e: csv::Error| Error::format(path, e.to_string());
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    let mut header = vec!["author_id"];
    header.extend(metadata.iter().map(|(h, _)| *h));
    header.extend(table.names());
    w.write_record(&header).map_err(io)?;
    for (row, id) in table.row_ids.iter().enumerate() {
        let mut rec = vec![id.clone()];
        rec.extend(metadata.iter().map(|(_, v)| v[row].clone()));
        rec.extend(table.columns.iter().map(|(_, v)| v[row].to_string()));
        w.write_record(&rec).map_err(io)?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

/// Reads a table written by [`write_table`]: the first column is the row id,
/// [`METADATA_COLUMNS`] are ignored and every other column must be numeric.
pub fn read_table(path: &Path) -> Result<ValueTable> {
    let fmt = |m: String| Error::format(path, m);
    let mut r = csv::Reader::from_path(path).map_err(|e| fmt(e.to_string()))?;
    let headers = r.headers().map_err(|e| fmt(e.to_string()))?.clone();
    if headers.is_empty() {
        return Err(fmt("empty header".into()));
    }
    let measure_cols: Vec<usize> = (1..headers.len())
        .filter(|&i| !METADATA_COLUMNS.contains(&&headers[i]))
        .collect();
    let mut table = ValueTable {
        row_ids: Vec::new(),
        columns: measure_cols.iter().map(|&i| (headers[i].to_string(), Vec::new())).collect(),
    };
    for (line, rec) in r.records().enumerate() {
        let rec = rec.map_err(|e| fmt(e.to_string()))?;
        table.row_ids.push(rec[0].to_string());
        for (slot, &i) in measure_cols.iter().enumerate() {
            let v: f64 = rec[i]
                .trim()
                .parse()
                .map_err(|_| fmt(format!("row {}: column '{}' is not a number: '{}'", line + 2, &headers[i], &rec[i])))?;
            table.columns[slot].1.push(v);
        }
    }
    Ok(table)
}

/// Per-trait summary as stored on disk.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Moments {
    pub n: usize,
    pub mean: f64,
    pub sd: f64,
}

impl From<&Distribution> for Moments {
    fn from(d: &Distribution) -> Self {
        Moments {
            n: d.n(),
            mean: d.mean(),
            sd: d.sd(),
        }
    }
}

pub fn moments_of(stats: &PopulationStats) -> BTreeMap<String, Moments> {
    stats.iter().map(|(n, d)| (n.to_string(), Moments::from(d))).collect()
}

pub fn population_of(table: &ValueTable) -> Result<PopulationStats> {
    let mut stats = PopulationStats::new();
    for (name, values) in &table.columns {
        stats.insert(name.clone(), values.clone())?;
    }
    Ok(stats)
}

pub fn write_stats(path: &Path, stats: &PopulationStats) -> Result<()> {
    let json = serde_json::to_string_pretty(&moments_of(stats)).expect("moments serialize");
    write_text(path, &(json + "\n"))
}

pub fn read_stats(path: &Path) -> Result<BTreeMap<String, Moments>> {
    serde_json::from_str(&read_text(path)?).map_err(|e| Error::format(path, e.to_string()))
}
