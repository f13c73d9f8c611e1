//! `run_manifest.json`: the resolved configuration of a run plus content
//! hashes of its inputs. Holds no timestamps, so reruns reproduce it.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub const MANIFEST_NAME: &str = "run_manifest.json";

#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub version: String,
    pub flags: BTreeMap<String, serde_json::Value>,
    pub input_digests: BTreeMap<String, String>,
}

impl RunManifest {
    pub fn new(command: &str) -> Self {
        RunManifest {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            flags: BTreeMap::new(),
            input_digests: BTreeMap::new(),
        }
    }

    pub fn flag(&mut self, name: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("flag values serialize");
        self.flags.insert(name.to_string(), v);
        self
    }

    pub fn input(&mut self, path: &Path) -> Result<&mut Self> {
        let digest = sha256_file(path)?;
        self.input_digests.insert(path.display().to_string(), digest);
        Ok(self)
    }

    /// Writes the manifest next to `primary_output`.
    pub fn write_beside(&self, primary_output: &Path) -> Result<PathBuf> {
        let dir = primary_output.parent().filter(|p| !p.as_os_str().is_empty()).unwrap_or(Path::new("."));
        let path = dir.join(MANIFEST_NAME);
        let json = serde_json::to_string_pretty(self).expect("manifest serializes") + "\n";
        std::fs::write(&path, json).map_err(|e| Error::io(&path, e))?;
        Ok(path)
    }
}

pub fn sha256_file(path: &Path) -> Result<String> {
    let bytes = std::fs::read(path).map_err(|e| Error::io(path, e))?;
    let digest = Sha256::digest(&bytes);
    let mut hex = String::with_capacity(71);
    hex.push_str("sha256:");
    for b in digest {
        let _ = write!(hex, "{b:02x}");
    }
    Ok(hex)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_of_known_content() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("x");
        std::fs::write(&p, "abc").unwrap();
        assert_eq!(
            sha256_file(&p).unwrap(),
            "sha256:ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }

    #[test]
    fn manifest_lands_beside_output() {
        let dir = tempfile::tempdir().unwrap();
        let input = dir.path().join("in.txt");
        std::fs::write(&input, "abc").unwrap();
        let mut m = RunManifest::new("score");
        m.flag("threads", 4).input(&input).unwrap();
        let path = m.write_beside(&dir.path().join("out.csv")).unwrap();
        let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        assert_eq!(v["command"], "score");
        assert_eq!(v["flags"]["threads"], 4);
        assert_eq!(v["input_digests"].as_object().unwrap().len(), 1);
    }
}
