//! Core algorithms for measuring how stable a person's lexical profile is
//! across samples of their writing.
//!
//! The crate is `no_std` (it needs `alloc`) and contains no IO: text goes in
//! as `&str`, dictionaries and trait models are parsed from strings, and every
//! stochastic step runs on an explicitly seeded ChaCha8 stream.
//!
//! * [`tokenize`] and [`lexicon`] turn text into category frequencies.
//! * [`traits`] applies linear trait models over those frequencies.
//! * [`stats`] holds the population statistics: midrank percentiles,
//!   Cohen's d, Welch's t-test, confidence intervals and renormalization.
//! * [`stability`] runs the random / contiguous subsampling protocol.
//! * [`synth`] generates seeded synthetic populations with known rates.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod corpus;
pub mod lexicon;
pub mod rng;
pub mod special;
pub mod stability;
pub mod stats;
pub mod synth;
pub mod tokenize;
pub mod traits;

pub use corpus::{build_author_corpora, clean_text, AuthorCorpus, Medium, Message};
pub use lexicon::{score_features, CategoryCounts, CategoryId, FeatureVector, Lexicon, LexiconError, ScoreError};
pub use stability::{
    minimum_sample_size, run_stability, trait_variability, FullSampleWindow, Mode, StabilityCurve,
    StabilityError, StabilityReport, Statistic, SubsamplePlan, Unit, VariabilityPoint,
};
pub use stats::{
    cohens_d, compare_media, mean_ci95, percentile_rank, renormalize, welch_p, Baseline,
    CompareThresholds, MediaComparisonRow, PopulationStats, StatsError, ValueTable,
};
pub use synth::{generate_author, generate_population, SynthError, SyntheticSpec};
pub use tokenize::tokenize;
pub use traits::{infer_traits, ModelError, ResolvedModel, TraitModel, TraitScores, TraitSpec};
