//! Population statistics: percentile ladders, effect sizes, Welch's t-test,
//! normal-approximation confidence intervals, renormalization between
//! populations and the cross-media comparison table built from them.

use alloc::string::String;
use alloc::vec::Vec;

use libm::sqrt;
use thiserror::Error;

use crate::special::student_t_two_sided;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("unknown trait '{0}'")]
    UnknownTrait(String),
    #[error("need at least {needed} values, got {got}")]
    TooFewValues { needed: usize, got: usize },
    #[error("degenerate groups: pooled standard deviation is zero")]
    DegenerateGroups,
    #[error("both groups have zero variance")]
    ZeroVariance,
    #[error("source standard deviation must be positive")]
    ZeroSourceSd,
    #[error("standard deviation must be non-negative")]
    NegativeSd,
    #[error("non-finite value in input")]
    NonFinite,
}

/// Mean accumulated as offsets from the first value, so a constant column
/// has exactly its constant as mean (and therefore zero variance).
fn mean(values: &[f64]) -> f64 {
    let first = values[0];
    first + values.iter().map(|v| v - first).sum::<f64>() / values.len() as f64
}

/// Sample variance with the n-1 denominator; zero for a single value.
fn variance(values: &[f64], mean: f64) -> f64 {
    if values.len() < 2 {
        return 0.0;
    }
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    ss / (values.len() - 1) as f64
}

fn require(values: &[f64], needed: usize) -> Result<(), StatsError> {
    if values.len() < needed {
        return Err(StatsError::TooFewValues {
            needed,
            got: values.len(),
        });
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    Ok(())
}

/// The sorted population of one trait.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    sorted: Vec<f64>,
    mean: f64,
    sd: f64,
}

impl Distribution {
    pub fn new(mut values: Vec<f64>) -> Result<Self, StatsError> {
        require(&values, 1)?;
        values.sort_by(f64::total_cmp);
        let m = mean(&values);
        let sd = sqrt(variance(&values, m));
        Ok(Distribution { sorted: values, mean: m, sd })
    }

    pub fn sorted(&self) -> &[f64] {
        &self.sorted
    }

    pub fn n(&self) -> usize {
        self.sorted.len()
    }

    pub fn mean(&self) -> f64 {
        self.mean
    }

    pub fn sd(&self) -> f64 {
        self.sd
    }

    /// Midrank percentile: `100 * (below + equal / 2) / n`.
    pub fn percentile_rank(&self, value: f64) -> f64 {
        let below = self.sorted.partition_point(|&v| v < value);
        let not_above = self.sorted.partition_point(|&v| v <= value);
        let equal = not_above - below;
        100.0 * (below as f64 + 0.5 * equal as f64) / self.sorted.len() as f64
    }
}

/// Per-trait population distributions, in insertion order.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PopulationStats {
    traits: Vec<(String, Distribution)>,
}

impl PopulationStats {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds or replaces the distribution for `name`.
    pub fn insert(&mut self, name: impl Into<String>, values: Vec<f64>) -> Result<(), StatsError> {
        let name = name.into();
        let dist = Distribution::new(values)?;
        match self.traits.iter_mut().find(|(n, _)| *n == name) {
            Some(slot) => slot.1 = dist,
            None => self.traits.push((name, dist)),
        }
        Ok(())
    }

    pub fn get(&self, name: &str) -> Result<&Distribution, StatsError> {
        self.traits
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, d)| d)
            .ok_or_else(|| StatsError::UnknownTrait(name.into()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &Distribution)> {
        self.traits.iter().map(|(n, d)| (n.as_str(), d))
    }

    pub fn len(&self) -> usize {
        self.traits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.traits.is_empty()
    }
}

/// Percentile of `value` within the population of `trait_name`, in [0, 100].
pub fn percentile_rank(stats: &PopulationStats, trait_name: &str, value: f64) -> Result<f64, StatsError> {
    Ok(stats.get(trait_name)?.percentile_rank(value))
}

/// Cohen's d with the pooled standard deviation.
pub fn cohens_d(a: &[f64], b: &[f64]) -> Result<f64, StatsError> {
    require(a, 2)?;
    require(b, 2)?;
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (ma, mb) = (mean(a), mean(b));
    let pooled = sqrt(((na - 1.0) * variance(a, ma) + (nb - 1.0) * variance(b, mb)) / (na + nb - 2.0));
    if pooled == 0.0 {
        return Err(StatsError::DegenerateGroups);
    }
    Ok((ma - mb) / pooled)
}

/// Welch's t statistic and Welch-Satterthwaite degrees of freedom.
pub fn welch_t(a: &[f64], b: &[f64]) -> Result<(f64, f64), StatsError> {
    require(a, 2)?;
    require(b, 2)?;
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (ma, mb) = (mean(a), mean(b));
    let qa = variance(a, ma) / na;
    let qb = variance(b, mb) / nb;
    if qa == 0.0 && qb == 0.0 {
        return Err(StatsError::ZeroVariance);
    }
    let t = (ma - mb) / sqrt(qa + qb);
    let df = (qa + qb) * (qa + qb) / (qa * qa / (na - 1.0) + qb * qb / (nb - 1.0));
    Ok((t, df))
}

/// Two-sided p-value of Welch's unequal-variance t-test.
pub fn welch_p(a: &[f64], b: &[f64]) -> Result<f64, StatsError> {
    let (t, df) = welch_t(a, b)?;
    Ok(student_t_two_sided(t, df))
}

/// `mean +/- 1.96 * s / sqrt(n)`.
pub fn mean_ci95(values: &[f64]) -> Result<(f64, f64), StatsError> {
    require(values, 2)?;
    let m = mean(values);
    let half = 1.96 * sqrt(variance(values, m) / values.len() as f64);
    Ok((m - half, m + half))
}

/// Maps `x` from the `(mean, sd)` of one population onto another's by
/// matching z-scores.
pub fn renormalize(x: f64, from: (f64, f64), to: (f64, f64)) -> Result<f64, StatsError> {
    if from.1 <= 0.0 {
        return Err(StatsError::ZeroSourceSd);
    }
    if to.1 < 0.0 {
        return Err(StatsError::NegativeSd);
    }
    Ok(to.0 + to.1 * ((x - from.0) / from.1))
}

/// Per-author values for a set of named measures (categories or traits).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ValueTable {
    pub row_ids: Vec<String>,
    pub columns: Vec<(String, Vec<f64>)>,
}

impl ValueTable {
    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns.iter().find(|(n, _)| n == name).map(|(_, v)| v.as_slice())
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.columns.iter().map(|(n, _)| n.as_str())
    }
}

/// Which side's mean is the unit for ratios (and for interval plots).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Baseline {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompareThresholds {
    /// `|d|` must exceed this to count as a large effect.
    pub large_effect: f64,
    /// `p` must be below this to count as significant.
    pub significance: f64,
}

impl Default for CompareThresholds {
    fn default() -> Self {
        CompareThresholds {
            large_effect: 0.8,
            significance: 0.001,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MediaComparisonRow {
    pub name: String,
    pub mean_a: f64,
    pub mean_b: f64,
    /// Non-baseline mean over baseline mean; `None` when the baseline mean is 0.
    pub ratio: Option<f64>,
    /// `None` when both groups are constant.
    pub cohens_d: Option<f64>,
    pub p_value: Option<f64>,
    pub ci95_a: (f64, f64),
    pub ci95_b: (f64, f64),
    pub large_effect: bool,
    pub significant: bool,
}

/// Compares every measure present in both tables. Rows come back ordered by
/// `|d|` descending; rows without a defined d go last.
pub fn compare_media(
    a: &ValueTable,
    b: &ValueTable,
    baseline: Baseline,
    thresholds: CompareThresholds,
) -> Result<Vec<MediaComparisonRow>, StatsError> {
    let mut rows = Vec::new();
    for (name, col_a) in &a.columns {
        let Some(col_b) = b.column(name) else { continue };
        require(col_a, 2)?;
        require(col_b, 2)?;
        let (mean_a, mean_b) = (mean(col_a), mean(col_b));
        let (num, den) = match baseline {
            Baseline::A => (mean_b, mean_a),
            Baseline::B => (mean_a, mean_b),
        };
        let ratio = (den != 0.0).then(|| num / den);
        let d = match cohens_d(col_a, col_b) {
            Ok(d) => Some(d),
            Err(StatsError::DegenerateGroups) => None,
            Err(e) => return Err(e),
        };
        let p = match welch_p(col_a, col_b) {
            Ok(p) => Some(p),
            Err(StatsError::ZeroVariance) => None,
            Err(e) => return Err(e),
        };
        rows.push(MediaComparisonRow {
            name: name.clone(),
            mean_a,
            mean_b,
            ratio,
            cohens_d: d,
            p_value: p,
            ci95_a: mean_ci95(col_a)?,
            ci95_b: mean_ci95(col_b)?,
            large_effect: d.is_some_and(|d| libm::fabs(d) > thresholds.large_effect),
            significant: p.is_some_and(|p| p < thresholds.significance),
        });
    }
    rows.sort_by(|x, y| match (x.cohens_d, y.cohens_d) {
        (Some(dx), Some(dy)) => libm::fabs(dy).total_cmp(&libm::fabs(dx)),
        (Some(_), None) => core::cmp::Ordering::Less,
        (None, Some(_)) => core::cmp::Ordering::Greater,
        (None, None) => core::cmp::Ordering::Equal,
    });
    Ok(rows)
}
