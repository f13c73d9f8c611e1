//! Raw source parsers: tweet JSON-lines, mbox mail folders and generic
//! JSON-lines. All of them clean text, apply the exclusion rules and account
//! for every record they drop.

use std::fmt;
use std::io::{self, BufRead, BufReader, Read};
use std::str::FromStr;

use chrono::{DateTime, NaiveDateTime};
use lexstable_core::corpus::{is_retweet_text, strip_quoted_reply};
use lexstable_core::{clean_text, Medium, Message};
use mailparse::{MailHeaderMap, ParsedMail};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    TweetsJsonl,
    Mbox,
    GenericJsonl,
}

impl InputFormat {
    pub fn as_str(self) -> &'static str {
        match self {
            InputFormat::TweetsJsonl => "tweets-jsonl",
            InputFormat::Mbox => "mbox",
            InputFormat::GenericJsonl => "generic-jsonl",
        }
    }
}

impl fmt::Display for InputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for InputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tweets-jsonl" => Ok(InputFormat::TweetsJsonl),
            "mbox" => Ok(InputFormat::Mbox),
            "generic-jsonl" => Ok(InputFormat::GenericJsonl),
            other => Err(format!("unknown format '{other}' (expected tweets-jsonl, mbox or generic-jsonl)")),
        }
    }
}

/// What happened to every record in a stream.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct ParseReport {
    pub records: usize,
    pub kept: usize,
    /// Records that could not be parsed at all.
    pub malformed: usize,
    /// Records lacking an author, timestamp or text.
    pub missing_fields: usize,
    pub retweets: usize,
    pub non_english: usize,
    /// Records whose text is empty after cleaning.
    pub empty: usize,
}

impl ParseReport {
    /// Records skipped as unusable: malformed or missing required fields.
    pub fn skipped(&self) -> usize {
        self.malformed + self.missing_fields
    }

    pub fn merge(&mut self, other: &ParseReport) {
        self.records += other.records;
        self.kept += other.kept;
        self.malformed += other.malformed;
        self.missing_fields += other.missing_fields;
        self.retweets += other.retweets;
        self.non_english += other.non_english;
        self.empty += other.empty;
    }
}

#[derive(Debug, Clone, Default)]
pub struct Parsed {
    pub messages: Vec<Message>,
    pub report: ParseReport,
}

enum Outcome {
    Keep(Message),
    Malformed,
    Missing,
    Retweet,
    NonEnglish,
    Empty,
}

impl Parsed {
    fn record(&mut self, outcome: Outcome) {
        let r = &mut self.report;
        r.records += 1;
        match outcome {
            Outcome::Keep(m) => {
                r.kept += 1;
                self.messages.push(m);
            }
            Outcome::Malformed => r.malformed += 1,
            Outcome::Missing => r.missing_fields += 1,
            Outcome::Retweet => r.retweets += 1,
            Outcome::NonEnglish => r.non_english += 1,
            Outcome::Empty => r.empty += 1,
        }
    }
}

/// Parses one stream. Only an unreadable stream is an error; bad records are
/// counted in the report.
pub fn parse_messages<R: Read>(reader: R, format: InputFormat, medium: &Medium) -> io::Result<Parsed> {
    match format {
        InputFormat::TweetsJsonl => parse_jsonl(reader, |v| tweet_record(v, medium)),
        InputFormat::GenericJsonl => parse_jsonl(reader, |v| generic_record(v, medium)),
        InputFormat::Mbox => parse_mbox(reader, medium),
    }
}

fn parse_jsonl<R: Read>(reader: R, mut convert: impl FnMut(&Value) -> Outcome) -> io::Result<Parsed> {
    let mut out = Parsed::default();
    let mut reader = BufReader::new(reader);
    let mut buf = Vec::new();
    loop {
        buf.clear();
        if reader.read_until(b'\n', &mut buf)? == 0 {
            break;
        }
        let line = String::from_utf8_lossy(&buf);
        if line.trim().is_empty() {
            continue;
        }
        let outcome = match serde_json::from_str::<Value>(&line) {
            Ok(v) if v.is_object() => convert(&v),
            _ => Outcome::Malformed,
        };
        out.record(outcome);
    }
    Ok(out)
}

/// Parses ISO-8601 / RFC 3339 instants, naive `YYYY-MM-DDTHH:MM:SS` (taken as
/// UTC) and the classic Twitter `created_at` layout.
pub fn parse_timestamp(s: &str) -> Option<i64> {
    let s = s.trim();
    if let Ok(t) = DateTime::parse_from_rfc3339(s) {
        return Some(t.timestamp());
    }
    if let Ok(t) = NaiveDateTime::parse_from_str(s, "%Y-%m-%dT%H:%M:%S") {
        return Some(t.and_utc().timestamp());
    }
    if let Ok(t) = DateTime::parse_from_str(s, "%a %b %d %H:%M:%S %z %Y") {
        return Some(t.timestamp());
    }
    None
}

fn timestamp_field(v: Option<&Value>) -> Option<i64> {
    match v? {
        Value::String(s) => parse_timestamp(s),
        Value::Number(n) => n.as_i64(),
        _ => None,
    }
}

fn string_field(v: Option<&Value>) -> Option<String> {
    match v? {
        Value::String(s) => Some(s.clone()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

fn finish(author: String, timestamp: i64, medium: Medium, raw: &str) -> Outcome {
    if medium == Medium::Twitter && is_retweet_text(raw) {
        return Outcome::Retweet;
    }
    let text = clean_text(raw, &medium);
    if text.is_empty() {
        return Outcome::Empty;
    }
    Outcome::Keep(Message::new(author, timestamp, medium, text))
}

fn tweet_record(v: &Value, medium: &Medium) -> Outcome {
    let author = string_field(v.pointer("/user/id_str")).or_else(|| string_field(v.get("author_id")));
    let timestamp = timestamp_field(v.get("created_at")).or_else(|| timestamp_field(v.get("timestamp")));
    let text = v.get("text").and_then(Value::as_str);
    let (Some(author), Some(timestamp), Some(text)) = (author, timestamp, text) else {
        return Outcome::Missing;
    };
    let marked = v.get("retweeted").and_then(Value::as_bool) == Some(true)
        || v.get("retweeted_status").is_some_and(|s| !s.is_null());
    if marked || is_retweet_text(text) {
        return Outcome::Retweet;
    }
    if let Some(lang) = v.get("lang").and_then(Value::as_str) {
        if lang != "en" {
            return Outcome::NonEnglish;
        }
    }
    finish(author, timestamp, medium.clone(), text)
}

fn generic_record(v: &Value, medium: &Medium) -> Outcome {
    let author = string_field(v.get("author_id"));
    let timestamp = timestamp_field(v.get("timestamp"));
    let text = v.get("text").and_then(Value::as_str);
    let (Some(author), Some(timestamp), Some(text)) = (author, timestamp, text) else {
        return Outcome::Missing;
    };
    let medium = match v.get("medium").and_then(Value::as_str) {
        Some(m) => m.parse().unwrap_or_else(|e| match e {}),
        None => medium.clone(),
    };
    finish(author, timestamp, medium, text)
}

/// Splits an mbox stream on `From ` separator lines (at the start of the
/// stream or after a blank line).
fn split_mbox(data: &str) -> Vec<&str> {
    let mut starts = Vec::new();
    let mut offset = 0;
    let mut prev_blank = true;
    for line in data.split_inclusive('\n') {
        if prev_blank && line.starts_with("From ") {
            starts.push(offset);
        }
        prev_blank = line.trim_end_matches(['\r', '\n']).is_empty();
        offset += line.len();
    }
    let mut out = Vec::with_capacity(starts.len());
    for (i, &s) in starts.iter().enumerate() {
        let end = starts.get(i + 1).copied().unwrap_or(data.len());
        let chunk = &data[s..end];
        // drop the separator line itself
        let body = chunk.split_once('\n').map(|(_, rest)| rest).unwrap_or("");
        out.push(body);
    }
    out
}

fn first_plain_part(mail: &ParsedMail<'_>) -> Option<String> {
    let mime = mail.ctype.mimetype.to_ascii_lowercase();
    if mime.starts_with("multipart/") {
        return mail.subparts.iter().find_map(first_plain_part);
    }
    if mime == "text/plain" {
        return mail.get_body().ok();
    }
    None
}

fn sender_address(raw: &str) -> Option<String> {
    let addr = match mailparse::addrparse(raw) {
        Ok(list) => list.iter().find_map(|a| match a {
            mailparse::MailAddr::Single(s) => Some(s.addr.clone()),
            mailparse::MailAddr::Group(g) => g.addrs.first().map(|s| s.addr.clone()),
        }),
        Err(_) => None,
    };
    let addr = addr.unwrap_or_else(|| raw.trim().to_string());
    (!addr.is_empty()).then(|| addr.to_lowercase())
}

/// Strips parenthesised comments such as the `(PDT)` trailing many Enron
/// `Date:` headers.
fn strip_comments(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    let mut depth = 0usize;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' if depth > 0 => depth -= 1,
            _ if depth == 0 => out.push(c),
            _ => {}
        }
    }
    out.trim().to_string()
}

fn mail_record(raw: &str, medium: &Medium) -> Outcome {
    let Ok(mail) = mailparse::parse_mail(raw.as_bytes()) else {
        return Outcome::Malformed;
    };
    let headers = mail.get_headers();
    let author = headers.get_first_value("From").and_then(|f| sender_address(&f));
    let timestamp = headers
        .get_first_value("Date")
        .and_then(|d| mailparse::dateparse(&strip_comments(&d)).ok());
    let (Some(author), Some(timestamp)) = (author, timestamp) else {
        return Outcome::Missing;
    };
    let Some(body) = first_plain_part(&mail) else {
        return Outcome::Empty;
    };
    finish(author, timestamp, medium.clone(), &strip_quoted_reply(&body))
}

fn parse_mbox<R: Read>(mut reader: R, medium: &Medium) -> io::Result<Parsed> {
    let mut bytes = Vec::new();
    reader.read_to_end(&mut bytes)?;
    let data = String::from_utf8_lossy(&bytes);
    let mut out = Parsed::default();
    for chunk in split_mbox(&data) {
        out.record(mail_record(chunk, medium));
    }
    Ok(out)
}
