//! CSV reports for comparisons and stability curves.

use std::path::Path;

use lexstable_core::{MediaComparisonRow, StabilityCurve};

use crate::error::{Error, Result};

pub const COMPARISON_HEADER: [&str; 12] = [
    "name",
    "mean_a",
    "mean_b",
    "ratio",
    "cohens_d",
    "p_value",
    "ci_a_lo",
    "ci_a_hi",
    "ci_b_lo",
    "ci_b_hi",
    "large_effect",
    "significant",
];

pub const CURVE_HEADER: [&str; 9] = [
    "trait",
    "unit",
    "mode",
    "size",
    "n_observations",
    "mean_variability",
    "sd_variability",
    "p95_empirical",
    "p95_parametric",
];

/// Marker for undefined values (zero-baseline ratios, degenerate d or p).
pub const UNDEFINED: &str = "NA";

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| UNDEFINED.to_string(), |v| v.to_string())
}

fn to_csv<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv");
    for r in rows {
        w.write_record(r).expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf-8 csv")
}

pub fn comparison_csv(rows: &[MediaComparisonRow]) -> String {
    to_csv(
        &COMPARISON_HEADER,
        rows.iter().map(|r| {
            vec![
                r.name.clone(),
                r.mean_a.to_string(),
                r.mean_b.to_string(),
                opt(r.ratio),
                opt(r.cohens_d),
                opt(r.p_value),
                r.ci95_a.0.to_string(),
                r.ci95_a.1.to_string(),
                r.ci95_b.0.to_string(),
                r.ci95_b.1.to_string(),
                r.large_effect.to_string(),
                r.significant.to_string(),
            ]
        }),
    )
}

pub fn curves_csv(curves: &[StabilityCurve]) -> String {
    to_csv(
        &CURVE_HEADER,
        curves.iter().flat_map(|c| {
            c.points.iter().map(move |p| {
                vec![
                    c.trait_name.clone(),
                    c.unit.to_string(),
                    c.mode.to_string(),
                    p.size.to_string(),
                    p.n_observations.to_string(),
                    p.mean_variability.to_string(),
                    p.sd_variability.to_string(),
                    p.p95_empirical.to_string(),
                    p.p95_parametric.to_string(),
                ]
            })
        }),
    )
}

pub fn write(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}
