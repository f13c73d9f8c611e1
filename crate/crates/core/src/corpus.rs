//! Messages, per-author corpora, text cleaning and the exclusion rules that
//! do not need IO (retweet detection, reply quote stripping).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::tokenize::count_tokens;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Medium {
    Twitter,
    Email,
    Blog,
    Forum,
    Wiki,
    Other(String),
}

impl Medium {
    pub fn as_str(&self) -> &str {
        match self {
            Medium::Twitter => "twitter",
            Medium::Email => "email",
            Medium::Blog => "blog",
            Medium::Forum => "forum",
            Medium::Wiki => "wiki",
            Medium::Other(name) => name,
        }
    }
}

impl fmt::Display for Medium {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Medium {
    type Err = core::convert::Infallible;

    /// Names are matched case-insensitively; anything unrecognised becomes
    /// [`Medium::Other`] with the name kept verbatim.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let m = match s.to_ascii_lowercase().as_str() {
            "twitter" => Medium::Twitter,
            "email" => Medium::Email,
            "blog" => Medium::Blog,
            "forum" => Medium::Forum,
            "wiki" => Medium::Wiki,
            _ => Medium::Other(s.to_string()),
        };
        Ok(m)
    }
}

/// One timestamped utterance by one author.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Message {
    pub author_id: String,
    /// Seconds since the Unix epoch, UTC.
    pub timestamp: i64,
    pub medium: Medium,
    text: String,
    word_count: usize,
}

impl Message {
    /// `text` is stored as given; callers are expected to have run
    /// [`clean_text`] already. The word count is computed here so that it can
    /// never disagree with the tokenizer.
    pub fn new(author_id: impl Into<String>, timestamp: i64, medium: Medium, text: impl Into<String>) -> Self {
        let text = text.into();
        let word_count = count_tokens(&text);
        Message {
            author_id: author_id.into(),
            timestamp,
            medium,
            text,
            word_count,
        }
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn word_count(&self) -> usize {
        self.word_count
    }
}

/// A person's messages in one medium, in chronological order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuthorCorpus {
    author_id: String,
    medium: Medium,
    messages: Vec<Message>,
    total_words: usize,
}

impl AuthorCorpus {
    /// Sorts `messages` by timestamp. The sort is stable, so equal timestamps
    /// keep their input order.
    pub fn new(author_id: impl Into<String>, medium: Medium, mut messages: Vec<Message>) -> Self {
        messages.sort_by_key(|m| m.timestamp);
        let total_words = messages.iter().map(Message::word_count).sum();
        AuthorCorpus {
            author_id: author_id.into(),
            medium,
            messages,
            total_words,
        }
    }

    pub fn author_id(&self) -> &str {
        &self.author_id
    }

    pub fn medium(&self) -> &Medium {
        &self.medium
    }

    pub fn messages(&self) -> &[Message] {
        &self.messages
    }

    pub fn total_messages(&self) -> usize {
        self.messages.len()
    }

    pub fn total_words(&self) -> usize {
        self.total_words
    }

    pub fn into_messages(self) -> Vec<Message> {
        self.messages
    }
}

/// Groups messages by `(author_id, medium)` and keeps the groups with at least
/// `min_messages` messages and `min_words` words. Output is ordered by author
/// then medium. A `min_messages` of zero is treated as one.
pub fn build_author_corpora(messages: Vec<Message>, min_messages: usize, min_words: usize) -> Vec<AuthorCorpus> {
    let min_messages = min_messages.max(1);
    let mut groups: BTreeMap<(String, Medium), Vec<Message>> = BTreeMap::new();
    for m in messages {
        groups
            .entry((m.author_id.clone(), m.medium.clone()))
            .or_default()
            .push(m);
    }
    groups
        .into_iter()
        .map(|((author, medium), msgs)| AuthorCorpus::new(author, medium, msgs))
        .filter(|c| c.total_messages() >= min_messages && c.total_words() >= min_words)
        .collect()
}

fn is_url(token: &str) -> bool {
    let lower = |p: &str| token.len() >= p.len() && token.as_bytes()[..p.len()].eq_ignore_ascii_case(p.as_bytes());
    lower("http://") || lower("https://") || lower("www.")
}

/// Normalizes raw message text ahead of tokenization.
///
/// URLs (`http://`, `https://`, `www.`) are dropped. For Twitter, `@mentions`
/// are dropped and hashtags lose their `#`. Whitespace is collapsed to single
/// spaces and trimmed. The function is idempotent.
pub fn clean_text(raw: &str, medium: &Medium) -> String {
    let twitter = *medium == Medium::Twitter;
    let mut out = String::with_capacity(raw.len());
    for word in raw.split_whitespace() {
        let mut word = word;
        let keep = loop {
            if word.is_empty() || is_url(word) {
                break false;
            }
            if !twitter {
                break true;
            }
            if word.starts_with('@') {
                break false;
            }
            if word.starts_with('#') {
                word = word.trim_start_matches('#');
                continue;
            }
            break true;
        };
        if keep {
            if !out.is_empty() {
                out.push(' ');
            }
            out.push_str(word);
        }
    }
    out
}

/// Old-style retweets carry no metadata, only an `RT @user` prefix.
pub fn is_retweet_text(raw: &str) -> bool {
    raw.trim_start().starts_with("RT @")
}

fn is_attribution_line(trimmed: &str) -> bool {
    trimmed.len() >= "On wrote:".len() && trimmed.starts_with("On ") && trimmed.ends_with("wrote:")
}

/// Removes quoted and forwarded material from an email body.
///
/// Lines starting with `>` are dropped. Everything from the first line that is
/// `-----Original Message-----` (after trimming), an `On ... wrote:`
/// attribution, or exactly `-- ` (signature separator) onward is dropped.
pub fn strip_quoted_reply(body: &str) -> String {
    let mut kept: Vec<&str> = Vec::new();
    for line in body.split('\n') {
        let line = line.strip_suffix('\r').unwrap_or(line);
        let trimmed = line.trim();
        if line == "-- " || trimmed == "-----Original Message-----" || is_attribution_line(trimmed) {
            break;
        }
        if line.starts_with('>') {
            continue;
        }
        kept.push(line);
    }
    kept.join("\n")
}
