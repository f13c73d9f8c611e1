use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn lexstable(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lexstable"))
        .current_dir(dir)
        .args(args)
        .env_remove("LEXSTABLE_THREADS")
        .output()
        .unwrap()
}

fn ok(dir: &Path, args: &[&str]) -> String {
    let out = lexstable(dir, args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name).to_str().unwrap().to_string()
}

fn manifest(dir: &Path) -> serde_json::Value {
    serde_json::from_str(&fs::read_to_string(dir.join("run_manifest.json")).unwrap()).unwrap()
}

const TWEETS: &str = r#"{"user":{"id_str":"ann"},"created_at":"Sat Mar 01 12:00:00 +0000 2014","text":"I am happy today @bob","lang":"en"}
{"user":{"id_str":"ann"},"created_at":"Sat Mar 01 11:00:00 +0000 2014","text":"RT @bob happy happy"}
{"user":{"id_str":"ann"},"created_at":"Sat Mar 01 10:00:00 +0000 2014","text":"we are #happy http://x.co"}
{"user":{"id_str":"bob"},"created_at":"Sat Mar 01 10:00:00 +0000 2014","text":"ich bin froh","lang":"de"}
{"user":{"id_str":"bob"},"created_at":"Sat Mar 01 09:00:00 +0000 2014","text":"I am here"}
{"user":{"id_str":"bob"},"text":"no timestamp"}
not json at all
"#;

#[test]
fn ingest_score_traits_pipeline() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    fs::write(dir.join("tweets.jsonl"), TWEETS).unwrap();
    let summary = ok(
        dir,
        &["ingest", "-i", "tweets.jsonl", "--format", "tweets-jsonl", "--medium", "twitter", "--out", "corpus.jsonl"],
    );
    let summary: serde_json::Value = serde_json::from_str(&summary).unwrap();
    assert_eq!(summary["parse"]["retweets"], 1);
    assert_eq!(summary["parse"]["non_english"], 1);
    assert_eq!(summary["parse"]["missing_fields"], 1);
    assert_eq!(summary["parse"]["malformed"], 1);
    assert_eq!(summary["messages_written"], 3);
    let corpus = fs::read_to_string(dir.join("corpus.jsonl")).unwrap();
    assert_eq!(
        corpus,
        concat!(
            r#"{"author_id":"ann","timestamp":"2014-03-01T10:00:00Z","medium":"twitter","text":"we are happy"}"#,
            "\n",
            r#"{"author_id":"ann","timestamp":"2014-03-01T12:00:00Z","medium":"twitter","text":"I am happy today"}"#,
            "\n",
            r#"{"author_id":"bob","timestamp":"2014-03-01T09:00:00Z","medium":"twitter","text":"I am here"}"#,
            "\n",
        )
    );
    let m = manifest(dir);
    assert_eq!(m["command"], "ingest");
    assert!(m["input_digests"]["tweets.jsonl"].as_str().unwrap().starts_with("sha256:"));

    ok(dir, &["score", "--corpus", "corpus.jsonl", "--lexicon", &fixture("toy.dic"), "--out", "freq.csv", "--stats-out", "freq.json"]);
    assert_eq!(
        fs::read_to_string(dir.join("freq.csv")).unwrap(),
        "author_id,medium,total_tokens,pronoun,posemo\nann,twitter,7,28.571428571428573,28.571428571428573\nbob,twitter,3,33.333333333333336,0\n"
    );
    let stats: serde_json::Value = serde_json::from_str(&fs::read_to_string(dir.join("freq.json")).unwrap()).unwrap();
    assert_eq!(stats["posemo"]["n"], 2);

    ok(dir, &["traits", "--corpus", "corpus.jsonl", "--lexicon", &fixture("toy.dic"), "--model", &fixture("toy_posemo.model"), "--out", "traits.csv"]);
    let traits = fs::read_to_string(dir.join("traits.csv")).unwrap();
    assert!(traits.starts_with("author_id,medium,total_tokens,t\nann,twitter,7,17.28"), "{traits}");
    assert!(traits.ends_with("bob,twitter,3,3\n"), "{traits}");

    // eligibility thresholds drop bob
    ok(dir, &["score", "--corpus", "corpus.jsonl", "--lexicon", &fixture("toy.dic"), "--min-messages", "2", "--out", "ann.csv"]);
    assert_eq!(fs::read_to_string(dir.join("ann.csv")).unwrap().lines().count(), 2);
}

#[test]
fn ingest_mbox_and_generic() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    fs::write(
        dir.join("mail.mbox"),
        "From a@x Mon May 14 16:39:00 2001\nDate: Mon, 14 May 2001 16:39:00 -0700\nFrom: A <A@x.com>\n\nI agree.\n> previous quoted line\n-- \nsig\n",
    )
    .unwrap();
    fs::write(
        dir.join("posts.jsonl"),
        concat!(
            r#"{"author_id":"p","timestamp":"2014-03-01T12:00:00Z","text":"one"}"#, "\n",
            r#"{"author_id":"p","timestamp":"2014-03-01T12:01:00Z","text":"two"}"#, "\n",
            r#"{"author_id":"p","timestamp":"2014-03-01T12:02:00Z","text":"three"}"#, "\n",
            r#"{"author_id":"p","text":"four"}"#, "\n",
        ),
    )
    .unwrap();
    ok(dir, &["ingest", "-i", "mail.mbox", "--format", "mbox", "--medium", "email", "--out", "mail.jsonl"]);
    assert_eq!(
        fs::read_to_string(dir.join("mail.jsonl")).unwrap(),
        "{\"author_id\":\"a@x.com\",\"timestamp\":\"2001-05-14T23:39:00Z\",\"medium\":\"email\",\"text\":\"I agree.\"}\n"
    );
    let s = ok(dir, &["ingest", "-i", "posts.jsonl", "--format", "generic-jsonl", "--medium", "blog", "--out", "posts.out"]);
    let s: serde_json::Value = serde_json::from_str(&s).unwrap();
    assert_eq!((s["messages_written"].as_u64(), s["parse"]["missing_fields"].as_u64()), (Some(3), Some(1)));
}

fn table(dir: &Path, name: &str, cols: &[(&str, &[f64])]) {
    let n = cols[0].1.len();
    let mut s = String::from("author_id");
    for (c, _) in cols {
        s += &format!(",{c}");
    }
    s += "\n";
    for i in 0..n {
        s += &format!("u{i}");
        for (_, v) in cols {
            s += &format!(",{}", v[i]);
        }
        s += "\n";
    }
    fs::write(dir.join(name), s).unwrap();
}

#[test]
fn compare_and_renorm() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    table(dir, "tw.csv", &[("x", &[0.7; 10]), ("y", &[1.0, 2.0, 3.0, 4.0, 5.0, 1.0, 2.0, 3.0, 4.0, 5.0])]);
    table(dir, "em.csv", &[("x", &[0.01; 10]), ("y", &[1.0, 2.0, 3.0, 4.0, 5.0, 1.5, 2.5, 3.5, 4.5, 5.5])]);
    ok(dir, &["compare", "--a", "tw.csv", "--b", "em.csv", "--out", "cmp.csv", "--svg", "bars.svg", "--ci-svg", "ci.svg"]);
    let csv = fs::read_to_string(dir.join("cmp.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "name,mean_a,mean_b,ratio,cohens_d,p_value,ci_a_lo,ci_a_hi,ci_b_lo,ci_b_hi,large_effect,significant"
    );
    let rows: Vec<Vec<&str>> = lines.map(|l| l.split(',').collect()).collect();
    let x = rows.iter().find(|r| r[0] == "x").unwrap();
    assert!((x[3].parse::<f64>().unwrap() - 70.0).abs() < 1e-9);
    assert_eq!((x[4], x[5]), ("NA", "NA"));
    assert!(fs::read_to_string(dir.join("bars.svg")).unwrap().starts_with("<svg"));
    assert!(fs::read_to_string(dir.join("ci.svg")).unwrap().contains("</svg>"));

    fs::write(dir.join("from.json"), r#"{"y": {"n": 10, "mean": 0.0, "sd": 1.0}}"#).unwrap();
    fs::write(dir.join("to.json"), r#"{"y": {"n": 10, "mean": 10.0, "sd": 2.0}}"#).unwrap();
    table(dir, "z.csv", &[("y", &[1.0, -0.5])]);
    ok(dir, &["renorm", "--input", "z.csv", "--from", "from.json", "--to", "to.json", "--out", "r.csv"]);
    assert_eq!(fs::read_to_string(dir.join("r.csv")).unwrap(), "author_id,y\nu0,12\nu1,9\n");

    fs::write(dir.join("flat.json"), r#"{"y": {"n": 10, "mean": 0.0, "sd": 0.0}}"#).unwrap();
    let out = lexstable(dir, &["renorm", "--input", "z.csv", "--from", "flat.json", "--to", "to.json", "--out", "r2.csv"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn synth_then_stability_rows_and_threshold() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    ok(dir, &["synth", "--authors", "12", "--messages", "120", "--categories", "4", "--seed", "3", "--out", "c.jsonl", "--lexicon-out", "s.dic"]);
    let out = ok(
        dir,
        &["stability", "--corpus", "c.jsonl", "--lexicon", "s.dic", "--base", "100", "--sizes", "5,10,50", "--out", "curves.csv", "--threshold", "15"],
    );
    let csv = fs::read_to_string(dir.join("curves.csv")).unwrap();
    assert_eq!(csv.lines().count(), 1 + 4 * 3 * 2);
    assert!(csv.starts_with("trait,unit,mode,size,n_observations,mean_variability,sd_variability,p95_empirical,p95_parametric\n"));
    assert!(out.starts_with("trait\tmode\tmin_size_mean\tmin_size_p95\n"));
    assert_eq!(out.lines().count(), 1 + 4 * 2);
    let m = manifest(dir);
    assert_eq!(m["flags"]["sizes"], serde_json::json!([5, 10, 50]));
    assert_eq!(m["input_digests"].as_object().unwrap().len(), 2);
}

#[test]
fn threads_from_environment() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_lexstable"));
        cmd.current_dir(dir)
            .args(["synth", "--authors", "3", "--messages", "5", "--out", "c.jsonl", "--lexicon-out", "s.dic"])
            .args(extra);
        match env {
            Some(v) => cmd.env("LEXSTABLE_THREADS", v),
            None => cmd.env_remove("LEXSTABLE_THREADS"),
        };
        let st = cmd.status().unwrap();
        (st.code(), manifest(dir)["flags"]["threads"].clone())
    };
    assert_eq!(run(Some("3"), &[]), (Some(0), serde_json::json!(3)));
    assert_eq!(run(Some("3"), &["--threads", "5"]), (Some(0), serde_json::json!(5)));
    let out = Command::new(env!("CARGO_BIN_EXE_lexstable"))
        .current_dir(dir)
        .args(["synth", "--authors", "3", "--messages", "5", "--out", "c.jsonl", "--lexicon-out", "s.dic", "--threads", "0"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let tmp = tempfile::tempdir().unwrap();
    let dir = tmp.path();
    for sub in ["ingest", "score", "traits", "compare", "stability", "renorm", "synth"] {
        let out = lexstable(dir, &[sub, "--help"]);
        assert_eq!(out.status.code(), Some(0), "{sub} --help");
        assert!(!out.stdout.is_empty());
    }
    assert_eq!(lexstable(dir, &["score", "--no-such-flag"]).status.code(), Some(2));
    assert_eq!(lexstable(dir, &["frobnicate"]).status.code(), Some(2));
    assert_eq!(lexstable(dir, &[]).status.code(), Some(2));

    // plan errors are caught before the (missing) inputs are touched
    let out = lexstable(
        dir,
        &["stability", "--corpus", "missing.jsonl", "--lexicon", "missing.dic", "--base", "2000", "--sizes", "1500", "--out", "x.csv"],
    );
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("size 1500 exceeds base/2"));

    let out = lexstable(dir, &["score", "--corpus", "missing.jsonl", "--lexicon", &fixture("toy.dic"), "--out", "x.csv"]);
    assert_eq!(out.status.code(), Some(1));

    fs::write(dir.join("bad.dic"), "%\n1\ta\n%\nword\t9\n").unwrap();
    fs::write(dir.join("c.jsonl"), "").unwrap();
    let out = lexstable(dir, &["score", "--corpus", "c.jsonl", "--lexicon", "bad.dic", "--out", "x.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 4"));

    let out = lexstable(dir, &["synth", "--authors", "1", "--messages", "5", "--out", "c.jsonl", "--lexicon-out", "s.dic"]);
    assert_eq!(out.status.code(), Some(2));
}
