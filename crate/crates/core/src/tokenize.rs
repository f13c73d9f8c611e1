//! Word tokenizer shared by scoring and word counting.
//!
//! A token is a maximal run of Unicode letters, optionally joined by internal
//! apostrophes (`'` or `’`, both emitted as `'`). Everything is lowercased;
//! digits, punctuation and whitespace separate tokens.

use alloc::string::String;
use alloc::vec::Vec;

fn is_apostrophe(c: char) -> bool {
    c == '\'' || c == '\u{2019}'
}

/// Calls `f` once per token, in order. The `&str` passed to `f` is only valid
/// for the duration of the call.
pub fn for_each_token<F: FnMut(&str)>(text: &str, mut f: F) {
    let mut buf = String::new();
    let mut chars = text.chars().peekable();
    while let Some(c) = chars.next() {
        if c.is_alphabetic() {
            buf.extend(c.to_lowercase());
        } else if is_apostrophe(c)
            && !buf.is_empty()
            && chars.peek().is_some_and(|n| n.is_alphabetic())
        {
            buf.push('\'');
        } else if !buf.is_empty() {
            f(&buf);
            buf.clear();
        }
    }
    if !buf.is_empty() {
        f(&buf);
    }
}

pub fn tokenize(text: &str) -> Vec<String> {
    let mut out = Vec::new();
    for_each_token(text, |t| out.push(String::from(t)));
    out
}

pub fn count_tokens(text: &str) -> usize {
    let mut n = 0;
    for_each_token(text, |_| n += 1);
    n
}
