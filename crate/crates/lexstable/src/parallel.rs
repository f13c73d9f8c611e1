//! Thread-pool drivers for the per-author stages. Results are collected in
//! input order, so output never depends on the thread count.

use lexstable_core::stability::{prepare_author, resolve_measures, StabilityJob};
use lexstable_core::synth::{generate_population_member, synthetic_lexicon};
use lexstable_core::{
    score_features, AuthorCorpus, FeatureVector, Lexicon, ScoreError, StabilityReport, SubsamplePlan,
    SynthError, SyntheticSpec, TraitModel,
};
use rayon::prelude::*;
use rayon::ThreadPool;

use crate::error::Result;

pub fn thread_pool(threads: usize) -> Result<ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build()?)
}

pub fn run_stability(
    pool: &ThreadPool,
    corpora: &[AuthorCorpus],
    plan: &SubsamplePlan,
    lexicon: &Lexicon,
    model: Option<&TraitModel>,
) -> Result<StabilityReport> {
    let measures = resolve_measures(lexicon, model)?;
    pool.install(|| {
        let prepared = corpora.par_iter().map(|c| prepare_author(c, plan, lexicon)).collect();
        let job = StabilityJob::from_prepared(prepared, plan, measures)?;
        let observations = (0..job.authors().len()).into_par_iter().map(|i| job.observe(i)).collect();
        Ok(job.finish(observations))
    })
}

pub fn generate_population(
    pool: &ThreadPool,
    spec: &SyntheticSpec,
    n_authors: usize,
    rate_jitter: f64,
) -> Result<(Vec<AuthorCorpus>, Lexicon)> {
    spec.validate()?;
    if n_authors < 2 {
        return Err(SynthError::TooFewAuthors(n_authors).into());
    }
    let corpora = pool.install(|| {
        (0..n_authors)
            .into_par_iter()
            .map(|i| generate_population_member(spec, i, rate_jitter))
            .collect::<Result<Vec<_>, _>>()
    })?;
    Ok((corpora, synthetic_lexicon(spec)))
}

pub fn score_corpora(
    pool: &ThreadPool,
    corpora: &[AuthorCorpus],
    lexicon: &Lexicon,
) -> Vec<Result<FeatureVector, ScoreError>> {
    pool.install(|| corpora.par_iter().map(|c| score_features(c.messages(), lexicon)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use lexstable_core::{Mode, Unit};

    #[test]
    fn matches_sequential_driver() {
        let spec = SyntheticSpec::uniform(4, 80, 3).with_drift(0.9, 0.4);
        let pool = thread_pool(4).unwrap();
        let (corpora, lex) = generate_population(&pool, &spec, 9, 0.2).unwrap();
        assert_eq!((corpora.clone(), lex.clone()), lexstable_core::generate_population(&spec, 9, 0.2).unwrap());
        let plan = SubsamplePlan::new(Unit::Words, Mode::Random, 600, vec![50, 100, 300], 7).unwrap();
        let par = run_stability(&pool, &corpora, &plan, &lex, None).unwrap();
        let seq = lexstable_core::run_stability(&corpora, &plan, &lex, None).unwrap();
        assert_eq!(par, seq);
    }
}
