//! Seeded synthetic authors with known category rates.
//!
//! Category `k` (1-based) owns the words `c<k>w<j>` for `j` in
//! `1..=vocab_per_category`, with the decimal digits spelled as letters
//! (`0` -> `a` ... `9` -> `j`) so every word survives tokenization intact:
//! `c1w3` is written `cbwd`. The companion lexicon lists each word under
//! exactly its own category, with no prefix entries.
//!
//! Per message `t`, each category's log-rate offset follows an AR(1) process
//! `eta_t = rho * eta_{t-1} + N(0, sigma^2)`, started from its stationary
//! distribution, and tokens are drawn from `softmax(ln(base_rates) + eta_t)`.
//! With `sigma = 0` the token stream is i.i.d.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::corpus::{AuthorCorpus, Medium, Message};
use crate::lexicon::Lexicon;
use crate::rng::{derive_seed, DetRng, SeedPart};

/// 2014-01-01T00:00:00Z; messages follow at one-minute intervals.
pub const SYNTH_EPOCH: i64 = 1_388_534_400;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SynthError {
    #[error("invalid synthetic spec: {0}")]
    InvalidSpec(String),
    #[error("a population needs at least 2 authors, got {0}")]
    TooFewAuthors(usize),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SyntheticSpec {
    pub n_categories: usize,
    pub vocab_per_category: usize,
    /// Probability of each category; must sum to 1 within 1e-9.
    pub base_rates: Vec<f64>,
    pub drift_rho: f64,
    pub drift_sigma: f64,
    /// Inclusive token-count bounds per message.
    pub msg_length: (usize, usize),
    pub n_messages: usize,
    pub seed: u64,
    pub medium: Medium,
}

impl SyntheticSpec {
    /// Equal category rates, no drift, 20 words per category and 5-25 tokens
    /// per message.
    pub fn uniform(n_categories: usize, n_messages: usize, seed: u64) -> Self {
        SyntheticSpec {
            n_categories,
            vocab_per_category: 20,
            base_rates: alloc::vec![1.0 / n_categories.max(1) as f64; n_categories],
            drift_rho: 0.0,
            drift_sigma: 0.0,
            msg_length: (5, 25),
            n_messages,
            seed,
            medium: Medium::Twitter,
        }
    }

    pub fn with_drift(mut self, rho: f64, sigma: f64) -> Self {
        self.drift_rho = rho;
        self.drift_sigma = sigma;
        self
    }

    pub fn validate(&self) -> Result<(), SynthError> {
        let bad = |m: String| Err(SynthError::InvalidSpec(m));
        if self.n_categories == 0 {
            return bad("n_categories must be >= 1".into());
        }
        if self.vocab_per_category == 0 {
            return bad("vocab_per_category must be >= 1".into());
        }
        if self.base_rates.len() != self.n_categories {
            return bad(format!(
                "base_rates has {} entries for {} categories",
                self.base_rates.len(),
                self.n_categories
            ));
        }
        if self.base_rates.iter().any(|r| !r.is_finite() || *r < 0.0) {
            return bad("base_rates must be finite and non-negative".into());
        }
        let sum: f64 = self.base_rates.iter().sum();
        if (sum - 1.0).abs() > 1e-9 {
            return bad(format!("base_rates sum to {sum}, not 1"));
        }
        if !(0.0..1.0).contains(&self.drift_rho) {
            return bad("drift_rho must be in [0, 1)".into());
        }
        if !(self.drift_sigma >= 0.0 && self.drift_sigma.is_finite()) {
            return bad("drift_sigma must be finite and >= 0".into());
        }
        let (lo, hi) = self.msg_length;
        if lo > hi {
            return bad("msg_length min exceeds max".into());
        }
        Ok(())
    }
}

fn spell_number(n: usize, out: &mut String) {
    for d in format!("{n}").bytes() {
        out.push((b'a' + (d - b'0')) as char);
    }
}

/// The word for `category` (1-based) and `index` (1-based).
pub fn synthetic_word(category: usize, index: usize) -> String {
    let mut w = String::from("c");
    spell_number(category, &mut w);
    w.push('w');
    spell_number(index, &mut w);
    w
}

pub fn category_name(category: usize) -> String {
    format!("cat{category}")
}

/// Lexicon matching [`generate_author`]'s vocabulary.
pub fn synthetic_lexicon(spec: &SyntheticSpec) -> Lexicon {
    let names: Vec<String> = (1..=spec.n_categories).map(category_name).collect();
    let categories: Vec<(u32, &str)> = names.iter().enumerate().map(|(i, n)| (i as u32 + 1, n.as_str())).collect();
    let ids: Vec<[u32; 1]> = (1..=spec.n_categories).map(|k| [k as u32]).collect();
    let mut entries: Vec<(String, &[u32])> = Vec::with_capacity(spec.n_categories * spec.vocab_per_category);
    for k in 1..=spec.n_categories {
        for j in 1..=spec.vocab_per_category {
            entries.push((synthetic_word(k, j), &ids[k - 1][..]));
        }
    }
    Lexicon::from_parts(&categories, &entries).expect("synthetic lexicon is well formed")
}

/// Generates one author's corpus, fully determined by `(spec.seed, author_id)`.
pub fn generate_author(spec: &SyntheticSpec, author_id: &str) -> Result<AuthorCorpus, SynthError> {
    spec.validate()?;
    let mut rng = DetRng::new(derive_seed(spec.seed, &[SeedPart::Str("author"), SeedPart::Str(author_id)]));
    let k = spec.n_categories;
    let vocab: Vec<Vec<String>> = (1..=k)
        .map(|c| (1..=spec.vocab_per_category).map(|j| synthetic_word(c, j)).collect())
        .collect();
    let log_base: Vec<f64> = spec.base_rates.iter().map(|&r| libm::log(r)).collect();
    let drifting = spec.drift_sigma > 0.0;
    let stationary_sd = spec.drift_sigma / libm::sqrt(1.0 - spec.drift_rho * spec.drift_rho);
    let mut eta = alloc::vec![0.0; k];
    let mut cumulative = alloc::vec![0.0; k];
    let mut messages = Vec::with_capacity(spec.n_messages);
    for t in 0..spec.n_messages {
        if drifting {
            for e in eta.iter_mut() {
                *e = if t == 0 {
                    stationary_sd * rng.normal()
                } else {
                    spec.drift_rho * *e + spec.drift_sigma * rng.normal()
                };
            }
        }
        if drifting || t == 0 {
            let peak = log_base
                .iter()
                .zip(&eta)
                .map(|(l, e)| l + e)
                .fold(f64::NEG_INFINITY, f64::max);
            let mut acc = 0.0;
            for (c, (l, e)) in cumulative.iter_mut().zip(log_base.iter().zip(&eta)) {
                acc += libm::exp(l + e - peak);
                *c = acc;
            }
            for c in cumulative.iter_mut() {
                *c /= acc;
            }
        }
        let len = rng.range_inclusive(spec.msg_length.0, spec.msg_length.1);
        let mut text = String::with_capacity(len * 8);
        for i in 0..len {
            let u = rng.uniform();
            let cat = cumulative.partition_point(|&c| c <= u).min(k - 1);
            let word = &vocab[cat][rng.below(spec.vocab_per_category as u64) as usize];
            if i > 0 {
                text.push(' ');
            }
            text.push_str(word);
        }
        messages.push(Message::new(author_id, SYNTH_EPOCH + 60 * t as i64, spec.medium.clone(), text));
    }
    Ok(AuthorCorpus::new(author_id, spec.medium.clone(), messages))
}

pub fn author_label(index: usize) -> String {
    format!("synth{index:05}")
}

/// Category rates for one author: `base * exp(jitter * N(0,1))`, renormalized.
pub fn author_rates(spec: &SyntheticSpec, author_id: &str, rate_jitter: f64) -> Vec<f64> {
    let mut rng = DetRng::new(derive_seed(spec.seed, &[SeedPart::Str("jitter"), SeedPart::Str(author_id)]));
    let mut rates: Vec<f64> = spec
        .base_rates
        .iter()
        .map(|&r| r * libm::exp(rate_jitter * rng.normal()))
        .collect();
    let sum: f64 = rates.iter().sum();
    for r in rates.iter_mut() {
        *r /= sum;
    }
    rates
}

/// Generates `n_authors` authors labelled `synth00000`, `synth00001`, ...
/// whose base rates are individually jittered, plus the matching lexicon.
pub fn generate_population(
    spec: &SyntheticSpec,
    n_authors: usize,
    rate_jitter: f64,
) -> Result<(Vec<AuthorCorpus>, Lexicon), SynthError> {
    spec.validate()?;
    if n_authors < 2 {
        return Err(SynthError::TooFewAuthors(n_authors));
    }
    if !(rate_jitter >= 0.0 && rate_jitter.is_finite()) {
        return Err(SynthError::InvalidSpec("rate_jitter must be finite and >= 0".into()));
    }
    let corpora = (0..n_authors)
        .map(|i| generate_population_member(spec, i, rate_jitter))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((corpora, synthetic_lexicon(spec)))
}

/// One member of [`generate_population`]; authors are independent of each
/// other, so callers may generate them in parallel.
pub fn generate_population_member(
    spec: &SyntheticSpec,
    index: usize,
    rate_jitter: f64,
) -> Result<AuthorCorpus, SynthError> {
    let id = author_label(index);
    let mut own = spec.clone();
    own.base_rates = author_rates(spec, &id, rate_jitter);
    generate_author(&own, &id)
}
