//! The `lexstable` command line.
//!
//! Exit codes: 0 success, 1 runtime failure, 2 usage error (bad flags or a
//! configuration rejected before any input is read).

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lexstable_core::{
    build_author_corpora, compare_media, minimum_sample_size, renormalize, AuthorCorpus, Baseline,
    CompareThresholds, FullSampleWindow, Lexicon, Medium, Mode, StabilityCurve, Statistic, SubsamplePlan,
    SyntheticSpec, TraitModel, Unit, ValueTable,
};
use rayon::prelude::*;

use crate::canonical::{read_corpus_file, sort_canonical, write_corpus_file};
use crate::error::Error;
use crate::files::{
    load_lexicon, load_trait_model, population_of, read_stats, read_table, write_stats, write_table, write_text,
};
use crate::ingest::{parse_messages, InputFormat, ParseReport};
use crate::manifest::RunManifest;
use crate::parallel::{self, thread_pool};
use crate::report::{comparison_csv, curves_csv, write};
use crate::svg;

#[derive(Debug, Parser)]
#[command(name = "lexstable", version, about = "Lexical feature scoring and sample-size stability analysis")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parse raw sources into a canonical corpus file
    Ingest(IngestArgs),
    /// Per-author category frequencies
    Score(ScoreArgs),
    /// Per-author trait scores from a linear trait model
    Traits(TraitsArgs),
    /// Compare two per-author value tables
    Compare(CompareArgs),
    /// Subsampling stability curves
    Stability(StabilityArgs),
    /// Map a value table from one population's mean/sd onto another's
    Renorm(RenormArgs),
    /// Generate a synthetic population and its dictionary
    Synth(SynthArgs),
}

#[derive(Debug, Args)]
pub struct Threads {
    /// Worker threads [default: available parallelism]
    #[arg(long, env = "LEXSTABLE_THREADS", value_parser = clap::value_parser!(u32).range(1..))]
    pub threads: Option<u32>,
}

impl Threads {
    fn resolve(&self) -> usize {
        match self.threads {
            Some(n) => n as usize,
            None => std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Debug, Args)]
pub struct Eligibility {
    /// Minimum messages per author
    #[arg(long, default_value_t = 1)]
    pub min_messages: usize,
    /// Minimum words per author
    #[arg(long, default_value_t = 0)]
    pub min_words: usize,
}

#[derive(Debug, Args)]
pub struct CorpusInput {
    /// Canonical corpus (JSON lines)
    #[arg(long)]
    pub corpus: PathBuf,
    /// Medium for records without a `medium` key
    #[arg(long, default_value = "other")]
    pub medium: String,
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    /// Input files; may be repeated
    #[arg(long = "input", short = 'i', required = true)]
    pub inputs: Vec<PathBuf>,
    #[arg(long, value_parser = parse_format)]
    pub format: InputFormat,
    #[arg(long)]
    pub medium: String,
    #[command(flatten)]
    pub eligibility: Eligibility,
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub threads: Threads,
}

fn parse_format(s: &str) -> Result<InputFormat, String> {
    s.parse()
}

#[derive(Debug, Args)]
pub struct ScoreArgs {
    #[command(flatten)]
    pub input: CorpusInput,
    #[arg(long)]
    pub lexicon: PathBuf,
    #[command(flatten)]
    pub eligibility: Eligibility,
    /// Per-author frequency table (CSV)
    #[arg(long)]
    pub out: PathBuf,
    /// Population mean/sd per category (JSON)
    #[arg(long)]
    pub stats_out: Option<PathBuf>,
    #[command(flatten)]
    pub threads: Threads,
}

#[derive(Debug, Args)]
pub struct TraitsArgs {
    #[command(flatten)]
    pub input: CorpusInput,
    #[arg(long)]
    pub lexicon: PathBuf,
    #[arg(long)]
    pub model: PathBuf,
    #[command(flatten)]
    pub eligibility: Eligibility,
    /// Per-author trait table (CSV)
    #[arg(long)]
    pub out: PathBuf,
    /// Population mean/sd per trait (JSON)
    #[arg(long)]
    pub stats_out: Option<PathBuf>,
    #[command(flatten)]
    pub threads: Threads,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long)]
    pub a: PathBuf,
    #[arg(long)]
    pub b: PathBuf,
    /// Side whose means are the unit for ratios and interval plots
    #[arg(long, value_enum, default_value_t = Side::B)]
    pub baseline: Side,
    #[arg(long, default_value = "a")]
    pub label_a: String,
    #[arg(long, default_value = "b")]
    pub label_b: String,
    /// |d| above this is a large effect
    #[arg(long, default_value_t = 0.8)]
    pub large_effect: f64,
    /// p below this is significant
    #[arg(long, default_value_t = 0.001)]
    pub significance: f64,
    #[arg(long)]
    pub out: PathBuf,
    /// Grouped bars of means relative to the baseline
    #[arg(long)]
    pub svg: Option<PathBuf>,
    /// 95% intervals relative to the baseline mean
    #[arg(long)]
    pub ci_svg: Option<PathBuf>,
    #[command(flatten)]
    pub threads: Threads,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitArg {
    Messages,
    Words,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Random,
    Contiguous,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum WindowArg {
    Latest,
    Earliest,
}

#[derive(Debug, Args)]
pub struct StabilityArgs {
    #[command(flatten)]
    pub input: CorpusInput,
    #[arg(long)]
    pub lexicon: PathBuf,
    /// Trait model; without one every lexicon category is profiled
    #[arg(long)]
    pub model: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = UnitArg::Messages)]
    pub unit: UnitArg,
    #[arg(long, value_enum, default_value_t = ModeArg::Both)]
    pub mode: ModeArg,
    /// Size of each author's full sample, in units
    #[arg(long)]
    pub base: usize,
    /// Comma-separated ascending subsample sizes
    #[arg(long, value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Which end of each timeline forms the full sample
    #[arg(long, value_enum, default_value_t = WindowArg::Latest)]
    pub window: WindowArg,
    /// Print the smallest size whose variability is at most this many percentile points
    #[arg(long)]
    pub threshold: Option<f64>,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub svg: Option<PathBuf>,
    #[command(flatten)]
    pub threads: Threads,
}

#[derive(Debug, Args)]
pub struct RenormArgs {
    /// Value table to map
    #[arg(long)]
    pub input: PathBuf,
    /// Source population statistics (JSON)
    #[arg(long)]
    pub from: PathBuf,
    /// Target population statistics (JSON)
    #[arg(long)]
    pub to: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct SynthArgs {
    #[arg(long)]
    pub authors: usize,
    /// Messages per author
    #[arg(long)]
    pub messages: usize,
    #[arg(long, default_value_t = 10)]
    pub categories: usize,
    #[arg(long, default_value_t = 20)]
    pub vocab: usize,
    #[arg(long, default_value_t = 5)]
    pub min_length: usize,
    #[arg(long, default_value_t = 25)]
    pub max_length: usize,
    #[arg(long, default_value_t = 0.0)]
    pub drift_rho: f64,
    #[arg(long, default_value_t = 0.0)]
    pub drift_sigma: f64,
    /// Log-normal spread of per-author category rates
    #[arg(long, default_value_t = 0.1)]
    pub jitter: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "twitter")]
    pub medium: String,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long)]
    pub lexicon_out: PathBuf,
    #[command(flatten)]
    pub threads: Threads,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Runtime(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Runtime(e)
    }
}

type CmdResult = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run(cli.command) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Ingest(a) => ingest(a),
        Command::Score(a) => score(a),
        Command::Traits(a) => traits(a),
        Command::Compare(a) => compare(a),
        Command::Stability(a) => stability(a),
        Command::Renorm(a) => renorm(a),
        Command::Synth(a) => synth(a),
    }
}

fn medium(name: &str) -> Medium {
    name.parse().unwrap_or_else(|e| match e {})
}

fn ingest(a: IngestArgs) -> CmdResult {
    let medium = medium(&a.medium);
    let pool = thread_pool(a.threads.resolve())?;
    let parsed = pool.install(|| {
        a.inputs
            .par_iter()
            .map(|path| {
                let file = std::fs::File::open(path).map_err(|e| Error::io(path, e))?;
                parse_messages(file, a.format, &medium).map_err(|e| Error::io(path, e))
            })
            .collect::<Result<Vec<_>, _>>()
    })?;
    let mut report = ParseReport::default();
    let mut messages = Vec::new();
    for p in parsed {
        report.merge(&p.report);
        messages.extend(p.messages);
    }
    let corpora = build_author_corpora(messages, a.eligibility.min_messages, a.eligibility.min_words);
    let mut kept: Vec<_> = corpora.into_iter().flat_map(AuthorCorpus::into_messages).collect();
    sort_canonical(&mut kept);
    write_corpus_file(&a.out, &kept)?;

    let mut m = RunManifest::new("ingest");
    m.flag("format", a.format.as_str())
        .flag("medium", medium.as_str())
        .flag("min_messages", a.eligibility.min_messages)
        .flag("min_words", a.eligibility.min_words)
        .flag("out", &a.out)
        .flag("threads", a.threads.resolve());
    for p in &a.inputs {
        m.input(p)?;
    }
    m.write_beside(&a.out)?;
    let summary = serde_json::json!({ "parse": report, "messages_written": kept.len() });
    println!("{summary}");
    Ok(())
}

fn load_corpora(input: &CorpusInput, eligibility: &Eligibility) -> Result<Vec<AuthorCorpus>, Error> {
    let parsed = read_corpus_file(&input.corpus, &medium(&input.medium))?;
    if parsed.report.skipped() > 0 {
        eprintln!(
            "warning: {}: skipped {} unusable records",
            input.corpus.display(),
            parsed.report.skipped()
        );
    }
    Ok(build_author_corpora(parsed.messages, eligibility.min_messages, eligibility.min_words))
}

/// Scores every corpus; returns the table of per-author values plus the
/// metadata columns. Authors without tokens are reported and left out.
fn score_table(
    threads: usize,
    corpora: &[AuthorCorpus],
    lexicon: &Lexicon,
    model: Option<&TraitModel>,
) -> Result<(ValueTable, Vec<(&'static str, Vec<String>)>), Error> {
    let pool = thread_pool(threads)?;
    let measures = lexstable_core::stability::resolve_measures(lexicon, model)?;
    let scored = parallel::score_corpora(&pool, corpora, lexicon);
    let mut table = ValueTable {
        row_ids: Vec::new(),
        columns: measures.trait_names().iter().map(|n| (n.clone(), Vec::new())).collect(),
    };
    let (mut media, mut tokens) = (Vec::new(), Vec::new());
    for (c, fv) in corpora.iter().zip(scored) {
        let Ok(fv) = fv else {
            eprintln!("warning: author '{}' has no tokens; left out", c.author_id());
            continue;
        };
        table.row_ids.push(c.author_id().to_string());
        media.push(c.medium().to_string());
        tokens.push(fv.total_tokens().to_string());
        for (col, v) in table.columns.iter_mut().zip(measures.apply(fv.frequencies())) {
            col.1.push(v);
        }
    }
    Ok((table, vec![("medium", media), ("total_tokens", tokens)]))
}

fn score(a: ScoreArgs) -> CmdResult {
    let lexicon = load_lexicon(&a.lexicon)?;
    let corpora = load_corpora(&a.input, &a.eligibility)?;
    let (table, meta) = score_table(a.threads.resolve(), &corpora, &lexicon, None)?;
    write_table(&a.out, &table, &meta)?;
    if let Some(p) = &a.stats_out {
        write_stats(p, &population_of(&table)?)?;
    }
    let mut m = RunManifest::new("score");
    m.flag("medium", &a.input.medium)
        .flag("min_messages", a.eligibility.min_messages)
        .flag("min_words", a.eligibility.min_words)
        .flag("out", &a.out)
        .flag("stats_out", &a.stats_out)
        .flag("threads", a.threads.resolve());
    m.input(&a.input.corpus)?.input(&a.lexicon)?;
    m.write_beside(&a.out)?;
    Ok(())
}

fn traits(a: TraitsArgs) -> CmdResult {
    let lexicon = load_lexicon(&a.lexicon)?;
    let model = load_trait_model(&a.model)?;
    model.resolve(&lexicon).map_err(Error::Inference)?;
    let corpora = load_corpora(&a.input, &a.eligibility)?;
    let (table, meta) = score_table(a.threads.resolve(), &corpora, &lexicon, Some(&model))?;
    write_table(&a.out, &table, &meta)?;
    if let Some(p) = &a.stats_out {
        write_stats(p, &population_of(&table)?)?;
    }
    let mut m = RunManifest::new("traits");
    m.flag("medium", &a.input.medium)
        .flag("min_messages", a.eligibility.min_messages)
        .flag("min_words", a.eligibility.min_words)
        .flag("out", &a.out)
        .flag("stats_out", &a.stats_out)
        .flag("threads", a.threads.resolve());
    m.input(&a.input.corpus)?.input(&a.lexicon)?.input(&a.model)?;
    m.write_beside(&a.out)?;
    Ok(())
}

fn compare(a: CompareArgs) -> CmdResult {
    if !(a.large_effect >= 0.0 && (0.0..=1.0).contains(&a.significance)) {
        return Err(Failure::Usage("--large-effect must be >= 0 and --significance in [0, 1]".into()));
    }
    let ta = read_table(&a.a)?;
    let tb = read_table(&a.b)?;
    let baseline = match a.baseline {
        Side::A => Baseline::A,
        Side::B => Baseline::B,
    };
    let thresholds = CompareThresholds {
        large_effect: a.large_effect,
        significance: a.significance,
    };
    let rows = compare_media(&ta, &tb, baseline, thresholds).map_err(Error::Stats)?;
    write(&a.out, &comparison_csv(&rows))?;
    let labels = [a.label_a.as_str(), a.label_b.as_str()];
    if let Some(p) = &a.svg {
        write(p, &svg::ratio_bars(&rows, baseline, labels))?;
    }
    if let Some(p) = &a.ci_svg {
        write(p, &svg::interval_plot(&rows, baseline, labels))?;
    }
    let flagged = rows.iter().filter(|r| r.large_effect && r.significant).count();
    println!("{} measures compared, {flagged} large and significant", rows.len());
    let mut m = RunManifest::new("compare");
    m.flag("baseline", format!("{:?}", a.baseline).to_lowercase())
        .flag("label_a", &a.label_a)
        .flag("label_b", &a.label_b)
        .flag("large_effect", a.large_effect)
        .flag("significance", a.significance)
        .flag("out", &a.out)
        .flag("svg", &a.svg)
        .flag("ci_svg", &a.ci_svg);
    m.input(&a.a)?.input(&a.b)?;
    m.write_beside(&a.out)?;
    Ok(())
}

fn stability(a: StabilityArgs) -> CmdResult {
    let unit = match a.unit {
        UnitArg::Messages => Unit::Messages,
        UnitArg::Words => Unit::Words,
    };
    let modes: &[Mode] = match a.mode {
        ModeArg::Random => &[Mode::Random],
        ModeArg::Contiguous => &[Mode::Contiguous],
        ModeArg::Both => &[Mode::Random, Mode::Contiguous],
    };
    let window = match a.window {
        WindowArg::Latest => FullSampleWindow::Latest,
        WindowArg::Earliest => FullSampleWindow::Earliest,
    };
    let plan = SubsamplePlan::new(unit, modes[0], a.base, a.sizes.clone(), a.seed)
        .map_err(|e| Failure::Usage(e.to_string()))?
        .with_window(window);
    if a.threshold.is_some_and(|t| !(0.0..=100.0).contains(&t)) {
        return Err(Failure::Usage("--threshold must be within [0, 100]".into()));
    }

    let lexicon = load_lexicon(&a.lexicon)?;
    let model = a.model.as_deref().map(load_trait_model).transpose()?;
    let corpora = load_corpora(
        &a.input,
        &Eligibility {
            min_messages: 1,
            min_words: 0,
        },
    )?;
    let pool = thread_pool(a.threads.resolve())?;
    let mut reports = Vec::new();
    for &mode in modes {
        let plan = plan.clone().with_mode(mode);
        reports.push(parallel::run_stability(&pool, &corpora, &plan, &lexicon, model.as_ref())?);
    }
    let first = &reports[0];
    if first.ineligible_authors > 0 || first.empty_authors > 0 {
        eprintln!(
            "note: {} authors profiled, {} below base size, {} without tokens",
            first.authors.len(),
            first.ineligible_authors,
            first.empty_authors
        );
    }
    // trait-major order: every mode of a trait before the next trait
    let n_traits = first.curves.len();
    let curves: Vec<StabilityCurve> = (0..n_traits)
        .flat_map(|t| reports.iter().map(move |r| r.curves[t].clone()))
        .collect();
    write(&a.out, &curves_csv(&curves))?;
    if let Some(p) = &a.svg {
        write(p, &svg::variability_chart(&curves))?;
    }
    if let Some(th) = a.threshold {
        let fmt = |v: Option<usize>| v.map_or_else(|| "none".to_string(), |s| s.to_string());
        let mut out = std::io::stdout().lock();
        let _ = writeln!(out, "trait\tmode\tmin_size_mean\tmin_size_p95");
        for c in &curves {
            let _ = writeln!(
                out,
                "{}\t{}\t{}\t{}",
                c.trait_name,
                c.mode,
                fmt(minimum_sample_size(c, th, Statistic::Mean)),
                fmt(minimum_sample_size(c, th, Statistic::P95Empirical))
            );
        }
    }

    let mut m = RunManifest::new("stability");
    m.flag("medium", &a.input.medium)
        .flag("unit", unit.as_str())
        .flag("mode", format!("{:?}", a.mode).to_lowercase())
        .flag("base", a.base)
        .flag("sizes", &a.sizes)
        .flag("seed", a.seed)
        .flag("window", format!("{:?}", a.window).to_lowercase())
        .flag("threshold", a.threshold)
        .flag("out", &a.out)
        .flag("svg", &a.svg)
        .flag("threads", a.threads.resolve());
    m.input(&a.input.corpus)?.input(&a.lexicon)?;
    if let Some(p) = &a.model {
        m.input(p)?;
    }
    m.write_beside(&a.out)?;
    Ok(())
}

fn renorm(a: RenormArgs) -> CmdResult {
    let mut table = read_table(&a.input)?;
    let from = read_stats(&a.from)?;
    let to = read_stats(&a.to)?;
    for (name, values) in table.columns.iter_mut() {
        let (Some(f), Some(t)) = (from.get(name), to.get(name)) else {
            return Err(Error::format(&a.input, format!("column '{name}' missing from the statistics files")).into());
        };
        for v in values.iter_mut() {
            *v = renormalize(*v, (f.mean, f.sd), (t.mean, t.sd))
                .map_err(|e| Error::format(&a.from, format!("{name}: {e}")))?;
        }
    }
    write_table(&a.out, &table, &[])?;
    let mut m = RunManifest::new("renorm");
    m.flag("out", &a.out);
    m.input(&a.input)?.input(&a.from)?.input(&a.to)?;
    m.write_beside(&a.out)?;
    Ok(())
}

fn synth(a: SynthArgs) -> CmdResult {
    let spec = SyntheticSpec {
        n_categories: a.categories,
        vocab_per_category: a.vocab,
        base_rates: vec![1.0 / a.categories.max(1) as f64; a.categories],
        drift_rho: a.drift_rho,
        drift_sigma: a.drift_sigma,
        msg_length: (a.min_length, a.max_length),
        n_messages: a.messages,
        seed: a.seed,
        medium: medium(&a.medium),
    };
    spec.validate().map_err(|e| Failure::Usage(e.to_string()))?;
    if a.authors < 2 {
        return Err(Failure::Usage("--authors must be at least 2".into()));
    }
    if !(a.jitter >= 0.0 && a.jitter.is_finite()) {
        return Err(Failure::Usage("--jitter must be finite and >= 0".into()));
    }
    let pool = thread_pool(a.threads.resolve())?;
    let (corpora, lexicon) = parallel::generate_population(&pool, &spec, a.authors, a.jitter)?;
    let messages: Vec<_> = corpora.into_iter().flat_map(AuthorCorpus::into_messages).collect();
    write_corpus_file(&a.out, &messages)?;
    write_text(&a.lexicon_out, &lexicon.to_dic_string())?;

    let mut m = RunManifest::new("synth");
    m.flag("authors", a.authors)
        .flag("messages", a.messages)
        .flag("categories", a.categories)
        .flag("vocab", a.vocab)
        .flag("min_length", a.min_length)
        .flag("max_length", a.max_length)
        .flag("drift_rho", a.drift_rho)
        .flag("drift_sigma", a.drift_sigma)
        .flag("jitter", a.jitter)
        .flag("seed", a.seed)
        .flag("medium", &a.medium)
        .flag("out", &a.out)
        .flag("lexicon_out", &a.lexicon_out)
        .flag("threads", a.threads.resolve());
    m.write_beside(&a.out)?;
    Ok(())
}

/// Used by tests that want the parsed configuration without running it.
pub fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
    Cli::try_parse_from(std::iter::once("lexstable").chain(args.iter().copied()))
}

