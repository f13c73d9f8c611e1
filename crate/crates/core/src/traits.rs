//! Linear trait models over category frequencies.
//!
//! Model file format:
//!
//! ```text
//! # comment
//! model toy-big5
//! trait openness intercept=0.5
//!   posemo 0.25
//!   pronoun -0.1
//! ```
//!
//! Weights multiply category frequencies in percent units (0 to 100), so a
//! coefficient fitted against proportions (0 to 1) must be divided by 100
//! before it is written here.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use thiserror::Error;

use crate::lexicon::{FeatureVector, Lexicon};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("model line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("model line {line}: duplicate trait '{name}'")]
    DuplicateTrait { line: usize, name: String },
    #[error("empty model: no traits declared")]
    EmptyModel,
    #[error("model references categories missing from the lexicon: {}", .0.join(", "))]
    UnresolvedCategories(Vec<String>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraitSpec {
    pub name: String,
    pub intercept: f64,
    /// `(category name, coefficient)` in file order.
    pub weights: Vec<(String, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraitModel {
    pub name: String,
    pub traits: Vec<TraitSpec>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TraitScores {
    pub model_name: String,
    /// One value per trait, in model order.
    pub values: Vec<(String, f64)>,
}

impl TraitScores {
    pub fn get(&self, trait_name: &str) -> Option<f64> {
        self.values.iter().find(|(n, _)| n == trait_name).map(|&(_, v)| v)
    }
}

fn parse_real(s: &str, line: usize) -> Result<f64, ModelError> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(ModelError::Parse {
            line,
            message: alloc::format!("invalid number '{s}'"),
        }),
    }
}

impl TraitModel {
    pub fn parse(src: &str) -> Result<TraitModel, ModelError> {
        let mut name: Option<String> = None;
        let mut traits: Vec<TraitSpec> = Vec::new();
        let mut seen = BTreeSet::new();
        for (idx, raw) in src.lines().enumerate() {
            let line = idx + 1;
            let perr = |message: &str| ModelError::Parse {
                line,
                message: message.to_string(),
            };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let indented = raw.starts_with([' ', '\t']);
            let mut fields = trimmed.split_whitespace();
            if indented {
                let current = traits.last_mut().ok_or_else(|| perr("weight line outside a trait"))?;
                let (Some(cat), Some(w), None) = (fields.next(), fields.next(), fields.next()) else {
                    return Err(perr("weight line must be '<category_name> <real>'"));
                };
                if current.weights.iter().any(|(c, _)| c == cat) {
                    return Err(ModelError::Parse {
                        line,
                        message: alloc::format!("category '{cat}' weighted twice in trait '{}'", current.name),
                    });
                }
                current.weights.push((cat.to_string(), parse_real(w, line)?));
                continue;
            }
            match fields.next() {
                Some("model") => {
                    let (Some(n), None) = (fields.next(), fields.next()) else {
                        return Err(perr("expected 'model <name>'"));
                    };
                    if name.is_some() {
                        return Err(perr("model name declared twice"));
                    }
                    name = Some(n.to_string());
                }
                Some("trait") => {
                    if name.is_none() {
                        return Err(perr("'trait' before 'model' line"));
                    }
                    let (Some(tname), Some(icpt), None) = (fields.next(), fields.next(), fields.next()) else {
                        return Err(perr("expected 'trait <name> intercept=<real>'"));
                    };
                    let icpt = icpt
                        .strip_prefix("intercept=")
                        .ok_or_else(|| perr("expected 'intercept=<real>'"))?;
                    let intercept = parse_real(icpt, line)?;
                    if !seen.insert(tname.to_string()) {
                        return Err(ModelError::DuplicateTrait {
                            line,
                            name: tname.to_string(),
                        });
                    }
                    traits.push(TraitSpec {
                        name: tname.to_string(),
                        intercept,
                        weights: Vec::new(),
                    });
                }
                _ => return Err(perr("expected 'model', 'trait' or an indented weight line")),
            }
        }
        let name = name.ok_or(ModelError::Parse {
            line: 0,
            message: "missing 'model <name>' line".to_string(),
        })?;
        if traits.is_empty() {
            return Err(ModelError::EmptyModel);
        }
        Ok(TraitModel { name, traits })
    }

    pub fn trait_names(&self) -> impl Iterator<Item = &str> {
        self.traits.iter().map(|t| t.name.as_str())
    }

    pub fn to_model_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "model {}", self.name);
        for t in &self.traits {
            let _ = writeln!(out, "trait {} intercept={}", t.name, t.intercept);
            for (c, w) in &t.weights {
                let _ = writeln!(out, "  {c} {w}");
            }
        }
        out
    }

    /// Binds category names to lexicon positions. Fails listing every name the
    /// lexicon does not declare.
    pub fn resolve(&self, lexicon: &Lexicon) -> Result<ResolvedModel, ModelError> {
        let mut missing = Vec::new();
        let mut weights = Vec::with_capacity(self.traits.len());
        for t in &self.traits {
            let mut resolved = Vec::with_capacity(t.weights.len());
            for (cat, w) in &t.weights {
                match lexicon.position_of_name(cat) {
                    Some(pos) => resolved.push((pos, *w)),
                    None if !missing.contains(cat) => missing.push(cat.clone()),
                    None => {}
                }
            }
            weights.push(resolved);
        }
        if !missing.is_empty() {
            return Err(ModelError::UnresolvedCategories(missing));
        }
        Ok(ResolvedModel {
            model_name: self.name.clone(),
            trait_names: self.traits.iter().map(|t| t.name.clone()).collect(),
            intercepts: self.traits.iter().map(|t| t.intercept).collect(),
            weights,
        })
    }
}

/// A model bound to one lexicon, ready to evaluate frequency vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct ResolvedModel {
    model_name: String,
    trait_names: Vec<String>,
    intercepts: Vec<f64>,
    weights: Vec<Vec<(usize, f64)>>,
}

impl ResolvedModel {
    /// Treats every lexicon category as a trait whose value is its frequency.
    pub fn categories(lexicon: &Lexicon) -> ResolvedModel {
        let n = lexicon.len();
        ResolvedModel {
            model_name: "categories".to_string(),
            trait_names: lexicon.category_names().map(str::to_string).collect(),
            intercepts: alloc::vec![0.0; n],
            weights: (0..n).map(|i| alloc::vec![(i, 1.0)]).collect(),
        }
    }

    pub fn model_name(&self) -> &str {
        &self.model_name
    }

    pub fn trait_names(&self) -> &[String] {
        &self.trait_names
    }

    pub fn len(&self) -> usize {
        self.trait_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trait_names.is_empty()
    }

    /// Evaluates every trait on percent frequencies, writing into `out`.
    pub fn apply_into(&self, frequencies: &[f64], out: &mut Vec<f64>) {
        out.clear();
        for (icpt, ws) in self.intercepts.iter().zip(&self.weights) {
            let mut v = *icpt;
            for &(pos, w) in ws {
                v += w * frequencies[pos];
            }
            out.push(v);
        }
    }

    pub fn apply(&self, frequencies: &[f64]) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.len());
        self.apply_into(frequencies, &mut out);
        out
    }
}

/// `value(trait) = intercept + sum(weight_c * frequency_c)`.
pub fn infer_traits(fv: &FeatureVector, model: &TraitModel, lexicon: &Lexicon) -> Result<TraitScores, ModelError> {
    let resolved = model.resolve(lexicon)?;
    let values = resolved.apply(fv.frequencies());
    Ok(TraitScores {
        model_name: model.name.clone(),
        values: resolved.trait_names.into_iter().zip(values).collect(),
    })
}
