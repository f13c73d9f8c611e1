//! Subsampling stability protocol.
//!
//! For every eligible author the *full sample* is the most recent (or
//! earliest) `base_size` units of their writing. It is cut into subsamples of
//! each requested size, either as consecutive blocks or as random draws, and
//! every subsample's measures are compared with the full sample's in
//! population-percentile terms. The population ladder is the set of all
//! eligible authors' full-sample values.
//!
//! The pipeline is split into stages so a caller can run the per-author
//! stages on a thread pool: [`prepare_author`] and [`StabilityJob::observe`]
//! are independent per author, and [`StabilityJob::finish`] reduces their
//! outputs in author order, so results never depend on scheduling.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::corpus::{AuthorCorpus, Message};
use crate::lexicon::{CategoryCounts, FeatureVector, Lexicon};
use crate::rng::{derive_seed, DetRng, SeedPart};
use crate::stats::{PopulationStats, StatsError};
use crate::traits::{ModelError, ResolvedModel, TraitModel};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StabilityError {
    #[error("invalid plan: {0}")]
    InvalidPlan(String),
    #[error("ineligible author '{author}': has {available} {unit}, plan needs {needed}")]
    IneligibleAuthor {
        author: String,
        unit: Unit,
        available: usize,
        needed: usize,
    },
    #[error("need at least 2 eligible authors to build a percentile ladder, got {0}")]
    TooFewAuthors(usize),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Stats(#[from] StatsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unit {
    Messages,
    Words,
}

impl Unit {
    pub fn as_str(self) -> &'static str {
        match self {
            Unit::Messages => "messages",
            Unit::Words => "words",
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Random,
    Contiguous,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Random => "random",
            Mode::Contiguous => "contiguous",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which end of an author's timeline forms the full sample.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum FullSampleWindow {
    #[default]
    Latest,
    Earliest,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsamplePlan {
    unit: Unit,
    mode: Mode,
    base_size: usize,
    sizes: Vec<usize>,
    master_seed: u64,
    window: FullSampleWindow,
}

impl SubsamplePlan {
    /// Sizes must be positive, strictly ascending and at most `base_size / 2`
    /// so that at least two subsamples fit.
    pub fn new(unit: Unit, mode: Mode, base_size: usize, sizes: Vec<usize>, master_seed: u64) -> Result<Self, StabilityError> {
        let bad = |m: String| Err(StabilityError::InvalidPlan(m));
        if base_size == 0 {
            return bad("base size must be positive".to_string());
        }
        if sizes.is_empty() {
            return bad("no subsample sizes".to_string());
        }
        if sizes.contains(&0) {
            return bad("subsample sizes must be positive".to_string());
        }
        if sizes.windows(2).any(|w| w[0] >= w[1]) {
            return bad("subsample sizes must be strictly ascending".to_string());
        }
        if let Some(&s) = sizes.iter().find(|&&s| s > base_size / 2) {
            return bad(alloc::format!("size {s} exceeds base/2 ({})", base_size / 2));
        }
        Ok(SubsamplePlan {
            unit,
            mode,
            base_size,
            sizes,
            master_seed,
            window: FullSampleWindow::Latest,
        })
    }

    pub fn with_window(mut self, window: FullSampleWindow) -> Self {
        self.window = window;
        self
    }

    pub fn with_mode(mut self, mode: Mode) -> Self {
        self.mode = mode;
        self
    }

    pub fn unit(&self) -> Unit {
        self.unit
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn base_size(&self) -> usize {
        self.base_size
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn master_seed(&self) -> u64 {
        self.master_seed
    }

    pub fn window(&self) -> FullSampleWindow {
        self.window
    }

    /// Number of subsamples drawn at `size`, in both modes.
    pub fn subsample_count(&self, size: usize) -> usize {
        self.base_size / size
    }
}

/// Range of `corpus.messages()` forming the full sample.
pub fn full_sample_range(corpus: &AuthorCorpus, plan: &SubsamplePlan) -> Result<core::ops::Range<usize>, StabilityError> {
    let msgs = corpus.messages();
    let n = msgs.len();
    let base = plan.base_size;
    let ineligible = |available| StabilityError::IneligibleAuthor {
        author: corpus.author_id().to_string(),
        unit: plan.unit,
        available,
        needed: base,
    };
    match plan.unit {
        Unit::Messages => {
            if n < base {
                return Err(ineligible(n));
            }
            Ok(match plan.window {
                FullSampleWindow::Latest => n - base..n,
                FullSampleWindow::Earliest => 0..base,
            })
        }
        Unit::Words => {
            if corpus.total_words() < base {
                return Err(ineligible(corpus.total_words()));
            }
            let mut words = 0;
            match plan.window {
                FullSampleWindow::Latest => {
                    let mut start = n;
                    while words < base {
                        start -= 1;
                        words += msgs[start].word_count();
                    }
                    Ok(start..n)
                }
                FullSampleWindow::Earliest => {
                    let mut end = 0;
                    while words < base {
                        words += msgs[end].word_count();
                        end += 1;
                    }
                    Ok(0..end)
                }
            }
        }
    }
}

fn subsample_seed(plan: &SubsamplePlan, author_id: &str, size: usize, index: usize) -> u64 {
    derive_seed(
        plan.master_seed,
        &[SeedPart::Str(author_id), SeedPart::Int(size as u64), SeedPart::Int(index as u64)],
    )
}

/// Subsamples of the full sample at `size`, as ascending indices into the
/// full sample. `words[i]` is the word count of the i-th full-sample message.
pub fn subsample_indices(words: &[usize], plan: &SubsamplePlan, author_id: &str, size: usize) -> Vec<Vec<usize>> {
    let count = plan.subsample_count(size);
    let n = words.len();
    let mut out = Vec::with_capacity(count);
    match (plan.mode, plan.unit) {
        (Mode::Contiguous, Unit::Messages) => {
            for i in 0..count.min(n / size) {
                out.push((i * size..(i + 1) * size).collect());
            }
        }
        (Mode::Contiguous, Unit::Words) => {
            let mut next = 0;
            while out.len() < count {
                let start = next;
                let mut acc = 0;
                while next < n && acc < size {
                    acc += words[next];
                    next += 1;
                }
                if acc < size {
                    break;
                }
                out.push((start..next).collect());
            }
        }
        (Mode::Random, unit) => {
            let mut pool: Vec<usize> = (0..n).collect();
            for i in 0..count {
                let mut rng = DetRng::new(subsample_seed(plan, author_id, size, i));
                let mut taken = 0;
                let mut acc = 0;
                let target_reached = |taken: usize, acc: usize| match unit {
                    Unit::Messages => taken >= size,
                    Unit::Words => acc >= size,
                };
                while taken < n && !target_reached(taken, acc) {
                    let j = taken + rng.below((n - taken) as u64) as usize;
                    pool.swap(taken, j);
                    acc += words[pool[taken]];
                    taken += 1;
                }
                let mut chosen = pool[..taken].to_vec();
                chosen.sort_unstable();
                out.push(chosen);
            }
        }
    }
    out
}

/// The subsamples of `corpus` at `size`, each in chronological order.
pub fn make_subsamples<'c>(
    corpus: &'c AuthorCorpus,
    plan: &SubsamplePlan,
    size: usize,
) -> Result<Vec<Vec<&'c Message>>, StabilityError> {
    let range = full_sample_range(corpus, plan)?;
    let full = &corpus.messages()[range];
    let words: Vec<usize> = full.iter().map(Message::word_count).collect();
    Ok(subsample_indices(&words, plan, corpus.author_id(), size)
        .into_iter()
        .map(|idx| idx.into_iter().map(|i| &full[i]).collect())
        .collect())
}

/// `|percentile(sub) - percentile(full)|` against the population of `trait_name`.
pub fn trait_variability(full_value: f64, sub_value: f64, stats: &PopulationStats, trait_name: &str) -> Result<f64, StatsError> {
    let dist = stats.get(trait_name)?;
    Ok(libm::fabs(dist.percentile_rank(sub_value) - dist.percentile_rank(full_value)))
}

/// An author's full sample, scored once per message.
#[derive(Debug, Clone)]
pub struct PreparedAuthor {
    author_id: String,
    n_categories: usize,
    words: Vec<usize>,
    /// Sparse `(category position, count)` pairs; message `i` owns
    /// `hits[offsets[i]..offsets[i + 1]]`.
    hits: Vec<(u32, u32)>,
    offsets: Vec<usize>,
}

impl PreparedAuthor {
    pub fn author_id(&self) -> &str {
        &self.author_id
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[usize] {
        &self.words
    }

    /// Category counts of the given full-sample messages. Summation follows
    /// `indices` order.
    pub fn counts_of(&self, indices: impl IntoIterator<Item = usize>) -> CategoryCounts {
        let mut acc = CategoryCounts::zeros(self.n_categories);
        for i in indices {
            acc.tokens += self.words[i] as u64;
            for &(pos, c) in &self.hits[self.offsets[i]..self.offsets[i + 1]] {
                acc.counts[pos as usize] += c as u64;
            }
        }
        acc
    }

    /// Feature vector of the whole full sample.
    pub fn full_counts(&self) -> CategoryCounts {
        self.counts_of(0..self.len())
    }
}

/// Scores each message of `corpus`'s full sample.
pub fn prepare_author(corpus: &AuthorCorpus, plan: &SubsamplePlan, lexicon: &Lexicon) -> Result<PreparedAuthor, StabilityError> {
    let range = full_sample_range(corpus, plan)?;
    let full = &corpus.messages()[range];
    let mut words = Vec::with_capacity(full.len());
    let mut hits = Vec::new();
    let mut offsets = Vec::with_capacity(full.len() + 1);
    offsets.push(0);
    for m in full {
        let acc = lexicon.counts_for(m.text());
        words.push(acc.tokens as usize);
        hits.extend(
            acc.counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c > 0)
                .map(|(p, &c)| (p as u32, c as u32)),
        );
        offsets.push(hits.len());
    }
    Ok(PreparedAuthor {
        author_id: corpus.author_id().to_string(),
        n_categories: lexicon.len(),
        words,
        hits,
        offsets,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct VariabilityPoint {
    pub size: usize,
    pub n_observations: usize,
    /// Mean absolute percentile difference, in percentile points.
    pub mean_variability: f64,
    /// Sample standard deviation (n - 1) of the observed differences.
    pub sd_variability: f64,
    /// Nearest-rank 95th percentile of the observed differences.
    pub p95_empirical: f64,
    /// `mean + 1.645 * sd`.
    pub p95_parametric: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityCurve {
    pub trait_name: String,
    pub mode: Mode,
    pub unit: Unit,
    pub points: Vec<VariabilityPoint>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Statistic {
    Mean,
    P95Empirical,
}

/// Smallest size whose chosen statistic is at most `threshold`.
pub fn minimum_sample_size(curve: &StabilityCurve, threshold: f64, statistic: Statistic) -> Option<usize> {
    curve
        .points
        .iter()
        .find(|p| {
            let v = match statistic {
                Statistic::Mean => p.mean_variability,
                Statistic::P95Empirical => p.p95_empirical,
            };
            v <= threshold
        })
        .map(|p| p.size)
}

#[derive(Debug, Clone, PartialEq)]
pub struct StabilityReport {
    pub curves: Vec<StabilityCurve>,
    /// Full-sample values of every ranked author, per trait.
    pub population: PopulationStats,
    /// Authors that contributed to the ladder, in input order.
    pub authors: Vec<String>,
    /// Authors below the plan's base size.
    pub ineligible_authors: usize,
    /// Eligible authors whose full sample has no tokens.
    pub empty_authors: usize,
    /// Subsamples with no tokens, skipped.
    pub skipped_observations: usize,
}

/// Variabilities observed for one author: `[size][trait]` lists in subsample
/// order.
#[derive(Debug, Clone, PartialEq)]
pub struct AuthorObservations {
    pub variabilities: Vec<Vec<Vec<f64>>>,
    pub skipped: usize,
}

/// Ranked authors plus the shared population ladder.
#[derive(Debug, Clone)]
pub struct StabilityJob {
    plan: SubsamplePlan,
    measures: ResolvedModel,
    authors: Vec<PreparedAuthor>,
    full_values: Vec<Vec<f64>>,
    population: PopulationStats,
    ineligible_authors: usize,
    empty_authors: usize,
}

fn values_of(measures: &ResolvedModel, counts: CategoryCounts, out: &mut Vec<f64>) -> bool {
    match counts.into_features() {
        Ok(fv) => {
            measures.apply_into(FeatureVector::frequencies(&fv), out);
            true
        }
        Err(_) => false,
    }
}

impl StabilityJob {
    /// Builds the ladder from prepared authors. Ineligible authors are
    /// counted and dropped; any other preparation error is returned.
    pub fn from_prepared(
        prepared: Vec<Result<PreparedAuthor, StabilityError>>,
        plan: &SubsamplePlan,
        measures: ResolvedModel,
    ) -> Result<StabilityJob, StabilityError> {
        let mut authors = Vec::new();
        let mut full_values = Vec::new();
        let mut ineligible_authors = 0;
        let mut empty_authors = 0;
        for p in prepared {
            let author = match p {
                Ok(a) => a,
                Err(StabilityError::IneligibleAuthor { .. }) => {
                    ineligible_authors += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            let mut values = Vec::new();
            if values_of(&measures, author.full_counts(), &mut values) {
                full_values.push(values);
                authors.push(author);
            } else {
                empty_authors += 1;
            }
        }
        if authors.len() < 2 {
            return Err(StabilityError::TooFewAuthors(authors.len()));
        }
        let mut population = PopulationStats::new();
        for (t, name) in measures.trait_names().iter().enumerate() {
            population.insert(name.clone(), full_values.iter().map(|v| v[t]).collect())?;
        }
        Ok(StabilityJob {
            plan: plan.clone(),
            measures,
            authors,
            full_values,
            population,
            ineligible_authors,
            empty_authors,
        })
    }

    pub fn plan(&self) -> &SubsamplePlan {
        &self.plan
    }

    pub fn measures(&self) -> &ResolvedModel {
        &self.measures
    }

    pub fn population(&self) -> &PopulationStats {
        &self.population
    }

    pub fn authors(&self) -> &[PreparedAuthor] {
        &self.authors
    }

    /// Full-sample measure values of ranked author `index`, in trait order.
    pub fn full_values(&self, index: usize) -> &[f64] {
        &self.full_values[index]
    }

    /// Measure values for a set of the author's full-sample messages, or
    /// `None` if they contain no tokens.
    pub fn values_for(&self, index: usize, messages: &[usize]) -> Option<Vec<f64>> {
        let mut out = Vec::with_capacity(self.measures.len());
        values_of(&self.measures, self.authors[index].counts_of(messages.iter().copied()), &mut out).then_some(out)
    }

    /// Runs every subsample of ranked author `index`.
    pub fn observe(&self, index: usize) -> AuthorObservations {
        let author = &self.authors[index];
        let full = &self.full_values[index];
        let dists: Vec<_> = self.population.iter().map(|(_, d)| d).collect();
        let full_pct: Vec<f64> = dists.iter().zip(full).map(|(d, &v)| d.percentile_rank(v)).collect();
        let n_traits = self.measures.len();
        let mut skipped = 0;
        let mut values = Vec::with_capacity(n_traits);
        let mut variabilities = Vec::with_capacity(self.plan.sizes.len());
        for &size in &self.plan.sizes {
            let mut per_trait = alloc::vec![Vec::new(); n_traits];
            for idx in subsample_indices(&author.words, &self.plan, &author.author_id, size) {
                if !values_of(&self.measures, author.counts_of(idx), &mut values) {
                    skipped += 1;
                    continue;
                }
                for t in 0..n_traits {
                    per_trait[t].push(libm::fabs(dists[t].percentile_rank(values[t]) - full_pct[t]));
                }
            }
            variabilities.push(per_trait);
        }
        AuthorObservations { variabilities, skipped }
    }

    /// Reduces per-author observations (in ranked-author order) into curves.
    pub fn finish(self, observations: Vec<AuthorObservations>) -> StabilityReport {
        assert_eq!(observations.len(), self.authors.len(), "one observation set per author");
        let skipped_observations = observations.iter().map(|o| o.skipped).sum();
        let mut curves = Vec::with_capacity(self.measures.len());
        for (t, name) in self.measures.trait_names().iter().enumerate() {
            let points = self
                .plan
                .sizes
                .iter()
                .enumerate()
                .map(|(s, &size)| {
                    let obs: Vec<f64> = observations
                        .iter()
                        .flat_map(|o| o.variabilities[s][t].iter().copied())
                        .collect();
                    summarize(size, obs)
                })
                .collect();
            curves.push(StabilityCurve {
                trait_name: name.clone(),
                mode: self.plan.mode,
                unit: self.plan.unit,
                points,
            });
        }
        StabilityReport {
            curves,
            population: self.population,
            authors: self.authors.into_iter().map(|a| a.author_id).collect(),
            ineligible_authors: self.ineligible_authors,
            empty_authors: self.empty_authors,
            skipped_observations,
        }
    }
}

fn summarize(size: usize, mut obs: Vec<f64>) -> VariabilityPoint {
    let n = obs.len();
    if n == 0 {
        return VariabilityPoint {
            size,
            n_observations: 0,
            mean_variability: f64::NAN,
            sd_variability: f64::NAN,
            p95_empirical: f64::NAN,
            p95_parametric: f64::NAN,
        };
    }
    let mean = obs.iter().sum::<f64>() / n as f64;
    let sd = if n > 1 {
        libm::sqrt(obs.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1) as f64)
    } else {
        0.0
    };
    obs.sort_by(f64::total_cmp);
    let rank = (95 * n).div_ceil(100);
    VariabilityPoint {
        size,
        n_observations: n,
        mean_variability: mean,
        sd_variability: sd,
        p95_empirical: obs[rank.clamp(1, n) - 1],
        p95_parametric: mean + 1.645 * sd,
    }
}

/// Resolves `model` against `lexicon`, or uses the lexicon's categories as the
/// measures when no model is given.
pub fn resolve_measures(lexicon: &Lexicon, model: Option<&TraitModel>) -> Result<ResolvedModel, StabilityError> {
    Ok(match model {
        Some(m) => m.resolve(lexicon)?,
        None => ResolvedModel::categories(lexicon),
    })
}

/// Runs the whole protocol on one thread. Without a model, every lexicon
/// category is profiled as its own measure.
pub fn run_stability(
    corpora: &[AuthorCorpus],
    plan: &SubsamplePlan,
    lexicon: &Lexicon,
    model: Option<&TraitModel>,
) -> Result<StabilityReport, StabilityError> {
    let measures = resolve_measures(lexicon, model)?;
    let prepared = corpora.iter().map(|c| prepare_author(c, plan, lexicon)).collect();
    let job = StabilityJob::from_prepared(prepared, plan, measures)?;
    let observations = (0..job.authors.len()).map(|i| job.observe(i)).collect();
    Ok(job.finish(observations))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::Medium;
    use crate::synth::{generate_population, SyntheticSpec};
    use alloc::format;
    use alloc::vec;
    use proptest::prelude::*;

    fn corpus(n: usize, words_each: usize) -> AuthorCorpus {
        let msgs = (0..n)
            .map(|i| Message::new("a", i as i64, Medium::Email, "w ".repeat(words_each)))
            .collect();
        AuthorCorpus::new("a", Medium::Email, msgs)
    }

    fn plan(unit: Unit, mode: Mode, base: usize, sizes: &[usize]) -> SubsamplePlan {
        SubsamplePlan::new(unit, mode, base, sizes.to_vec(), 42).unwrap()
    }

    #[test]
    fn plan_validation() {
        assert!(SubsamplePlan::new(Unit::Messages, Mode::Random, 2000, vec![1500], 1).is_err());
        assert!(SubsamplePlan::new(Unit::Messages, Mode::Random, 2000, vec![50, 20], 1).is_err());
        assert!(SubsamplePlan::new(Unit::Messages, Mode::Random, 2000, vec![20, 20], 1).is_err());
        assert!(SubsamplePlan::new(Unit::Messages, Mode::Random, 2000, vec![], 1).is_err());
        assert!(SubsamplePlan::new(Unit::Messages, Mode::Random, 2000, vec![0, 5], 1).is_err());
        assert!(SubsamplePlan::new(Unit::Messages, Mode::Random, 2000, vec![1000], 1).is_ok());
        let e = SubsamplePlan::new(Unit::Messages, Mode::Random, 2000, vec![1500], 1).unwrap_err();
        assert!(format!("{e}").contains("exceeds base/2"));
    }

    #[test]
    fn contiguous_block_counts() {
        let c = corpus(100, 3);
        let p = plan(Unit::Messages, Mode::Contiguous, 100, &[5, 50]);
        let fives = make_subsamples(&c, &p, 5).unwrap();
        assert_eq!(fives.len(), 20);
        assert_eq!(make_subsamples(&c, &p, 50).unwrap().len(), 2);
        assert_eq!(fives[0][0].timestamp, 0);
        assert_eq!(fives[19][4].timestamp, 99);

        let c = corpus(7, 3);
        let p = plan(Unit::Messages, Mode::Contiguous, 7, &[3]);
        let blocks = make_subsamples(&c, &p, 3).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks.iter().map(Vec::len).sum::<usize>(), 6);
    }

    #[test]
    fn full_sample_is_most_recent() {
        let c = corpus(10, 2);
        let p = plan(Unit::Messages, Mode::Contiguous, 4, &[2]);
        assert_eq!(full_sample_range(&c, &p).unwrap(), 6..10);
        let p = p.with_window(FullSampleWindow::Earliest);
        assert_eq!(full_sample_range(&c, &p).unwrap(), 0..4);
        // words: 2 per message, need 5 -> three messages (crossing one included)
        let p = plan(Unit::Words, Mode::Contiguous, 5, &[2]);
        assert_eq!(full_sample_range(&c, &p).unwrap(), 7..10);
        let p = plan(Unit::Words, Mode::Contiguous, 21, &[2]);
        assert!(matches!(full_sample_range(&c, &p), Err(StabilityError::IneligibleAuthor { available: 20, .. })));
    }

    #[test]
    fn word_blocks_include_crossing_message() {
        let words = [3, 3, 3, 3, 3, 3, 3];
        let p = plan(Unit::Words, Mode::Contiguous, 20, &[5]);
        let blocks = subsample_indices(&words, &p, "a", 5);
        assert_eq!(blocks, vec![vec![0, 1], vec![2, 3], vec![4, 5]]);

        let p = plan(Unit::Words, Mode::Random, 20, &[5]);
        let draws = subsample_indices(&words, &p, "a", 5);
        assert_eq!(draws.len(), 4);
        for d in draws {
            assert_eq!(d.len(), 2);
            assert!(d[0] < d[1]);
        }
    }

    #[test]
    fn random_draws_are_seeded_per_author_size_index() {
        let words = vec![1; 100];
        let p = plan(Unit::Messages, Mode::Random, 100, &[10, 20]);
        let a = subsample_indices(&words, &p, "alice", 10);
        assert_eq!(a, subsample_indices(&words, &p, "alice", 10));
        assert_ne!(a, subsample_indices(&words, &p, "bob", 10));
        assert_eq!(a.len(), 10);
        assert_ne!(a[0], a[1]);
        for d in &a {
            assert_eq!(d.len(), 10);
            assert!(d.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn variability_examples() {
        let mut stats = PopulationStats::new();
        stats.insert("x", (0..100).map(|i| i as f64).collect()).unwrap();
        // value 35 sits at the 35.5th percentile, 50 at 50.5
        assert_eq!(trait_variability(35.0, 50.0, &stats, "x"), Ok(15.0));
        assert_eq!(trait_variability(12.0, 12.0, &stats, "x"), Ok(0.0));
        assert_eq!(trait_variability(10.0, 90.0, &stats, "x"), Ok(80.0));
        assert!(trait_variability(1.0, 2.0, &stats, "y").is_err());
    }

    fn point(size: usize, mean: f64) -> VariabilityPoint {
        VariabilityPoint {
            size,
            n_observations: 1,
            mean_variability: mean,
            sd_variability: 0.0,
            p95_empirical: mean + 5.0,
            p95_parametric: mean,
        }
    }

    #[test]
    fn minimum_size_examples() {
        let curve = StabilityCurve {
            trait_name: "t".into(),
            mode: Mode::Contiguous,
            unit: Unit::Messages,
            points: vec![point(20, 18.0), point(50, 12.0), point(200, 9.5), point(500, 6.0)],
        };
        assert_eq!(minimum_sample_size(&curve, 10.0, Statistic::Mean), Some(200));
        assert_eq!(minimum_sample_size(&curve, 11.0, Statistic::P95Empirical), Some(500));
        assert_eq!(minimum_sample_size(&curve, 5.0, Statistic::Mean), None);
        assert_eq!(minimum_sample_size(&curve, 100.0, Statistic::Mean), Some(20));
    }

    #[test]
    fn summary_statistics() {
        let p = summarize(5, (1..=20).map(|i| i as f64).collect());
        assert_eq!(p.mean_variability, 10.5);
        assert_eq!(p.p95_empirical, 19.0);
        assert!((p.sd_variability - libm::sqrt(35.0)).abs() < 1e-12);
        assert!((p.p95_parametric - (10.5 + 1.645 * libm::sqrt(35.0))).abs() < 1e-12);
        let one = summarize(5, vec![3.0]);
        assert_eq!((one.sd_variability, one.p95_empirical), (0.0, 3.0));
    }

    #[test]
    fn run_on_small_population() {
        let spec = SyntheticSpec::uniform(3, 60, 9);
        let (corpora, lex) = generate_population(&spec, 12, 0.2).unwrap();
        let p = plan(Unit::Messages, Mode::Random, 40, &[5, 10, 20]);
        let report = run_stability(&corpora, &p, &lex, None).unwrap();
        assert_eq!(report.curves.len(), 3);
        assert_eq!(report.authors.len(), 12);
        for c in &report.curves {
            assert_eq!(c.points.iter().map(|p| p.size).collect::<Vec<_>>(), [5, 10, 20]);
            assert_eq!(c.points[0].n_observations, 12 * 8);
            for pt in &c.points {
                assert!((0.0..=100.0).contains(&pt.mean_variability));
            }
        }
        assert_eq!(report, run_stability(&corpora, &p, &lex, None).unwrap());
    }

    #[test]
    fn single_author_cannot_be_ranked() {
        let spec = SyntheticSpec::uniform(3, 60, 9);
        let (mut corpora, lex) = generate_population(&spec, 2, 0.2).unwrap();
        corpora.truncate(1);
        let p = plan(Unit::Messages, Mode::Random, 40, &[5]);
        assert_eq!(run_stability(&corpora, &p, &lex, None), Err(StabilityError::TooFewAuthors(1)));
        // everyone below base size
        let p = plan(Unit::Messages, Mode::Random, 400, &[5]);
        assert_eq!(run_stability(&corpora, &p, &lex, None), Err(StabilityError::TooFewAuthors(0)));
    }

    proptest! {
        #[test]
        fn contiguous_blocks_disjoint_and_ordered(
            words in proptest::collection::vec(0usize..6, 4..80),
            size in 1usize..10,
            by_words in any::<bool>(),
        ) {
            let unit = if by_words { Unit::Words } else { Unit::Messages };
            let base = match unit { Unit::Messages => words.len(), Unit::Words => words.iter().sum() };
            prop_assume!(size <= base / 2);
            let p = plan(unit, Mode::Contiguous, base, &[size]);
            let blocks = subsample_indices(&words, &p, "a", size);
            let mut last: Option<usize> = None;
            for b in &blocks {
                prop_assert!(!b.is_empty());
                for &i in b {
                    prop_assert!(i < words.len());
                    prop_assert!(last.is_none_or(|l| i == l + 1 || (i > l)));
                    last = Some(i);
                }
                match unit {
                    Unit::Messages => prop_assert_eq!(b.len(), size),
                    Unit::Words => prop_assert!(b.iter().map(|&i| words[i]).sum::<usize>() >= size),
                }
            }
            prop_assert!(blocks.len() <= base / size);
        }
    }
}
