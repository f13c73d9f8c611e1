//! LIWC-style category dictionaries and category frequency scoring.
//!
//! Dictionary file format (UTF-8 text):
//!
//! ```text
//! # comment
//! %
//! 1	pronoun
//! 2	posemo
//! %
//! i	1
//! happ*	2
//! we	1	2
//! ```
//!
//! The category block is delimited by lines holding only `%`; each category
//! line is `<id><TAB><name>`. Entry lines are `<word><TAB><id>[<TAB><id>...]`
//! and a trailing `*` turns the word into a prefix entry. Lines whose first
//! non-blank character is `#` are comments; blank lines are ignored.
//!
//! A token matches its exact entry if one exists, otherwise the longest
//! matching prefix entry. Frequencies are percentages of all tokens, including
//! tokens the dictionary does not know.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::{self, Write};

use thiserror::Error;

use crate::corpus::Message;
use crate::tokenize::for_each_token;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CategoryId(pub u32);

impl fmt::Display for CategoryId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexiconErrorKind {
    MissingCategoryBlock,
    UnterminatedCategoryBlock,
    BadCategoryLine,
    BadCategoryId(String),
    DuplicateCategoryId(CategoryId),
    DuplicateCategoryName(String),
    UnknownCategory(CategoryId),
    EmptyWord,
    NoCategories,
}

impl fmt::Display for LexiconErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::MissingCategoryBlock => f.write_str("expected '%' to open the category block"),
            Self::UnterminatedCategoryBlock => f.write_str("category block is never closed with '%'"),
            Self::BadCategoryLine => f.write_str("category line must be '<id><TAB><name>'"),
            Self::BadCategoryId(s) => write!(f, "invalid category id '{s}'"),
            Self::DuplicateCategoryId(id) => write!(f, "duplicate category id {id}"),
            Self::DuplicateCategoryName(name) => write!(f, "duplicate category name '{name}'"),
            Self::UnknownCategory(id) => write!(f, "reference to undeclared category {id}"),
            Self::EmptyWord => f.write_str("empty word or prefix"),
            Self::NoCategories => f.write_str("entry lists no categories"),
        }
    }
}

/// Parse failure. `line` is 1-based; 0 means the error is not tied to a line
/// (for lexicons built in memory).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("lexicon line {line}: {kind}")]
pub struct LexiconError {
    pub line: usize,
    pub kind: LexiconErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScoreError {
    #[error("empty sample: no tokens to score")]
    EmptySample,
}

/// An immutable category dictionary.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lexicon {
    categories: Vec<(CategoryId, String)>,
    /// word -> sorted category positions
    exact: BTreeMap<String, Vec<usize>>,
    /// sorted by prefix, prefixes unique
    prefixes: Vec<(String, Vec<usize>)>,
    max_prefix_len: usize,
}

struct RawEntry {
    line: usize,
    word: String,
    ids: Vec<CategoryId>,
}

impl Lexicon {
    pub fn parse(src: &str) -> Result<Lexicon, LexiconError> {
        #[derive(PartialEq)]
        enum State {
            Start,
            Categories,
            Entries,
        }
        let mut state = State::Start;
        let mut categories = Vec::new();
        let mut entries = Vec::new();
        let mut block_opened_at = 0;
        for (idx, raw) in src.lines().enumerate() {
            let line = idx + 1;
            let err = |kind| LexiconError { line, kind };
            let text = raw.trim_end_matches('\r');
            let trimmed = text.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            match state {
                State::Start => {
                    if trimmed != "%" {
                        return Err(err(LexiconErrorKind::MissingCategoryBlock));
                    }
                    block_opened_at = line;
                    state = State::Categories;
                }
                State::Categories => {
                    if trimmed == "%" {
                        state = State::Entries;
                        continue;
                    }
                    let mut parts = trimmed.split('\t').map(str::trim).filter(|p| !p.is_empty());
                    let (Some(id), Some(name), None) = (parts.next(), parts.next(), parts.next()) else {
                        return Err(err(LexiconErrorKind::BadCategoryLine));
                    };
                    let id = parse_id(id).map_err(err)?;
                    categories.push((line, id, name.to_string()));
                }
                State::Entries => {
                    let mut parts = trimmed.split('\t').map(str::trim).filter(|p| !p.is_empty());
                    let word = parts.next().unwrap_or_default();
                    let ids = parts.map(parse_id).collect::<Result<Vec<_>, _>>().map_err(err)?;
                    entries.push(RawEntry {
                        line,
                        word: word.to_string(),
                        ids,
                    });
                }
            }
        }
        match state {
            State::Start => Err(LexiconError {
                line: 0,
                kind: LexiconErrorKind::MissingCategoryBlock,
            }),
            State::Categories => Err(LexiconError {
                line: block_opened_at,
                kind: LexiconErrorKind::UnterminatedCategoryBlock,
            }),
            State::Entries => Self::assemble(categories, entries),
        }
    }

    /// Builds a lexicon in memory. `entries` words ending in `*` are prefixes.
    pub fn from_parts<W: AsRef<str>>(
        categories: &[(u32, &str)],
        entries: &[(W, &[u32])],
    ) -> Result<Lexicon, LexiconError> {
        let categories = categories
            .iter()
            .map(|&(id, name)| (0, CategoryId(id), name.to_string()))
            .collect();
        let entries = entries
            .iter()
            .map(|(w, ids)| RawEntry {
                line: 0,
                word: w.as_ref().to_string(),
                ids: ids.iter().copied().map(CategoryId).collect(),
            })
            .collect();
        Self::assemble(categories, entries)
    }

    fn assemble(
        declared: Vec<(usize, CategoryId, String)>,
        entries: Vec<RawEntry>,
    ) -> Result<Lexicon, LexiconError> {
        let mut categories: Vec<(CategoryId, String)> = Vec::with_capacity(declared.len());
        let mut position: BTreeMap<CategoryId, usize> = BTreeMap::new();
        for (line, id, name) in declared {
            if position.contains_key(&id) {
                return Err(LexiconError {
                    line,
                    kind: LexiconErrorKind::DuplicateCategoryId(id),
                });
            }
            if categories.iter().any(|(_, n)| *n == name) {
                return Err(LexiconError {
                    line,
                    kind: LexiconErrorKind::DuplicateCategoryName(name),
                });
            }
            position.insert(id, categories.len());
            categories.push((id, name));
        }

        let mut exact: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        let mut prefixes: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for RawEntry { line, word, ids } in entries {
            let err = |kind| LexiconError { line, kind };
            let (stem, is_prefix) = match word.strip_suffix('*') {
                Some(stem) => (stem, true),
                None => (word.as_str(), false),
            };
            let stem = stem.to_lowercase();
            if stem.is_empty() {
                return Err(err(LexiconErrorKind::EmptyWord));
            }
            if ids.is_empty() {
                return Err(err(LexiconErrorKind::NoCategories));
            }
            let target = if is_prefix { &mut prefixes } else { &mut exact };
            let slot = target.entry(stem).or_default();
            for id in ids {
                let pos = *position
                    .get(&id)
                    .ok_or_else(|| err(LexiconErrorKind::UnknownCategory(id)))?;
                slot.push(pos);
            }
        }
        for set in exact.values_mut().chain(prefixes.values_mut()) {
            set.sort_unstable();
            set.dedup();
        }
        let max_prefix_len = prefixes.keys().map(String::len).max().unwrap_or(0);
        Ok(Lexicon {
            categories,
            exact,
            prefixes: prefixes.into_iter().collect(),
            max_prefix_len,
        })
    }

    pub fn categories(&self) -> &[(CategoryId, String)] {
        &self.categories
    }

    pub fn len(&self) -> usize {
        self.categories.len()
    }

    pub fn is_empty(&self) -> bool {
        self.categories.is_empty()
    }

    pub fn entry_count(&self) -> usize {
        self.exact.len() + self.prefixes.len()
    }

    pub fn position_of_id(&self, id: CategoryId) -> Option<usize> {
        self.categories.iter().position(|(c, _)| *c == id)
    }

    pub fn position_of_name(&self, name: &str) -> Option<usize> {
        self.categories.iter().position(|(_, n)| n == name)
    }

    pub fn category_names(&self) -> impl Iterator<Item = &str> {
        self.categories.iter().map(|(_, n)| n.as_str())
    }

    /// Category positions a lowercase token counts towards.
    pub fn lookup(&self, token: &str) -> &[usize] {
        if let Some(set) = self.exact.get(token) {
            return set;
        }
        let mut end = token.len().min(self.max_prefix_len);
        while end > 0 {
            if token.is_char_boundary(end) {
                let head = &token[..end];
                if let Ok(i) = self.prefixes.binary_search_by(|(p, _)| p.as_str().cmp(head)) {
                    return &self.prefixes[i].1;
                }
            }
            end -= 1;
        }
        &[]
    }

    /// Adds the tokens of `text` to `acc`.
    pub fn count_text(&self, text: &str, acc: &mut CategoryCounts) {
        debug_assert_eq!(acc.counts.len(), self.len());
        for_each_token(text, |tok| {
            acc.tokens += 1;
            for &pos in self.lookup(tok) {
                acc.counts[pos] += 1;
            }
        });
    }

    pub fn counts_for(&self, text: &str) -> CategoryCounts {
        let mut acc = CategoryCounts::zeros(self.len());
        self.count_text(text, &mut acc);
        acc
    }

    /// Serializes to the dictionary file format. Entries are written sorted,
    /// so `parse(to_dic_string())` reproduces an equal lexicon.
    pub fn to_dic_string(&self) -> String {
        let mut out = String::new();
        out.push_str("%\n");
        for (id, name) in &self.categories {
            let _ = writeln!(out, "{id}\t{name}");
        }
        out.push_str("%\n");
        let exact = self.exact.iter().map(|(w, s)| (w.as_str(), "", s));
        let prefix = self.prefixes.iter().map(|(w, s)| (w.as_str(), "*", s));
        let mut all: Vec<_> = exact.chain(prefix).collect();
        all.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
        for (word, star, set) in all {
            let _ = write!(out, "{word}{star}");
            for &pos in set {
                let _ = write!(out, "\t{}", self.categories[pos].0);
            }
            out.push('\n');
        }
        out
    }
}

fn parse_id(s: &str) -> Result<CategoryId, LexiconErrorKind> {
    s.parse::<u32>()
        .map(CategoryId)
        .map_err(|_| LexiconErrorKind::BadCategoryId(s.to_string()))
}

/// Raw category counts that may cover zero tokens. Counts are additive across
/// texts, which is what subsample scoring relies on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryCounts {
    pub counts: Vec<u64>,
    pub tokens: u64,
}

impl CategoryCounts {
    pub fn zeros(n_categories: usize) -> Self {
        CategoryCounts {
            counts: alloc::vec![0; n_categories],
            tokens: 0,
        }
    }

    pub fn add(&mut self, other: &CategoryCounts) {
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.tokens += other.tokens;
    }

    pub fn into_features(self) -> Result<FeatureVector, ScoreError> {
        FeatureVector::from_counts(self.counts, self.tokens)
    }
}

/// Category counts and percent frequencies for a non-empty sample, aligned
/// with the lexicon's category order.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureVector {
    counts: Vec<u64>,
    total_tokens: u64,
    frequencies: Vec<f64>,
}

impl FeatureVector {
    pub fn from_counts(counts: Vec<u64>, total_tokens: u64) -> Result<Self, ScoreError> {
        if total_tokens == 0 {
            return Err(ScoreError::EmptySample);
        }
        let total = total_tokens as f64;
        let frequencies = counts.iter().map(|&c| 100.0 * c as f64 / total).collect();
        Ok(FeatureVector {
            counts,
            total_tokens,
            frequencies,
        })
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total_tokens(&self) -> u64 {
        self.total_tokens
    }

    /// Percentages of total tokens, 0 to 100.
    pub fn frequencies(&self) -> &[f64] {
        &self.frequencies
    }

    pub fn frequency(&self, position: usize) -> f64 {
        self.frequencies[position]
    }
}

/// Scores the concatenation of `messages` against `lexicon`.
pub fn score_features(messages: &[Message], lexicon: &Lexicon) -> Result<FeatureVector, ScoreError> {
    let mut acc = CategoryCounts::zeros(lexicon.len());
    for m in messages {
        lexicon.count_text(m.text(), &mut acc);
    }
    acc.into_features()
}
