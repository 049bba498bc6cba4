//! JSON documents for fuzzy sets and diagnostic configurations.
//!
//! ```json
//! {
//!   "dim": 1,
//!   "levels": [
//!     { "alpha": 0.5, "set": { "type": "interval", "a": 0.0, "b": 2.0 } },
//!     { "alpha": 1.0, "set": { "type": "interval", "a": 0.0, "b": 1.0 } }
//!   ]
//! }
//! ```
//!
//! Polygon sets are written `{"type": "polygon", "vertices": [[x, y], ...]}`.
//! Floats are written in shortest round-trip form, so `parse_fuzzy(emit_fuzzy(u))`
//! reproduces `u` bit for bit.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fuzzy::{FuzzyError, LevelFuzzySet};
use crate::geometry::{CompactSet, GeometryError, Interval, Point2, Polygon};
use crate::metric::{check_grid, MetricError, PExponent};

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("schema violation at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("invalid set at `{path}`: {source}")]
    InvalidSet {
        path: String,
        #[source]
        source: GeometryError,
    },
    #[error("{0}")]
    Invariant(#[from] FuzzyError),
    #[error("invalid config: {0}")]
    Config(String),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzyDocument {
    pub dim: u8,
    pub levels: Vec<LevelDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelDocument {
    pub alpha: f64,
    pub set: SetDocument,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum SetDocument {
    Interval { a: f64, b: f64 },
    Polygon { vertices: Vec<[f64; 2]> },
}

impl SetDocument {
    fn dim(&self) -> u8 {
        match self {
            SetDocument::Interval { .. } => 1,
            SetDocument::Polygon { .. } => 2,
        }
    }

    fn to_set(&self) -> Result<CompactSet, GeometryError> {
        match self {
            SetDocument::Interval { a, b } => Interval::new(*a, *b).map(CompactSet::Interval),
            SetDocument::Polygon { vertices } => {
                Polygon::new(vertices.iter().map(|&v| Point2::from(v)).collect())
                    .map(CompactSet::Polygon)
            }
        }
    }

    fn from_set(set: &CompactSet) -> Self {
        match set {
            CompactSet::Interval(i) => SetDocument::Interval { a: i.a, b: i.b },
            CompactSet::Polygon(p) => SetDocument::Polygon {
                vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
            },
        }
    }
}

impl FuzzyDocument {
    pub fn from_fuzzy(u: &LevelFuzzySet) -> Self {
        FuzzyDocument {
            dim: u.dim() as u8,
            levels: u
                .levels()
                .iter()
                .map(|l| LevelDocument {
                    alpha: l.alpha,
                    set: SetDocument::from_set(&l.set),
                })
                .collect(),
        }
    }

    pub fn to_fuzzy(&self) -> Result<LevelFuzzySet, DocumentError> {
        if !(1..=2).contains(&self.dim) {
            return Err(DocumentError::Schema {
                path: "dim".into(),
                message: format!("dimension must be 1 or 2, got {}", self.dim),
            });
        }
        let levels = self
            .levels
            .iter()
            .enumerate()
            .map(|(i, level)| {
                let path = format!("levels[{i}].set");
                if level.set.dim() != self.dim {
                    return Err(DocumentError::Schema {
                        path,
                        message: format!(
                            "set of dimension {} in a document with dim {}",
                            level.set.dim(),
                            self.dim
                        ),
                    });
                }
                let set = level
                    .set
                    .to_set()
                    .map_err(|source| DocumentError::InvalidSet { path, source })?;
                Ok((level.alpha, set))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LevelFuzzySet::new(levels)?)
    }
}

fn deserialize<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, DocumentError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| DocumentError::Schema {
        path: e.path().to_string(),
        message: e.inner().to_string(),
    })
}

pub fn parse_fuzzy(text: &str) -> Result<LevelFuzzySet, DocumentError> {
    deserialize::<FuzzyDocument>(text)?.to_fuzzy()
}

pub fn emit_fuzzy(u: &LevelFuzzySet) -> String {
    serde_json::to_string_pretty(&FuzzyDocument::from_fuzzy(u))
        .expect("fuzzy documents always serialize")
}

fn default_spacing() -> f64 {
    0.01
}

/// Parameters of a family diagnosis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagnoseConfig {
    pub p: f64,
    pub h_grid: Vec<f64>,
    pub bound_threshold: f64,
    pub eps: f64,
    /// Polygon boundary sampling pitch.
    #[serde(default = "default_spacing")]
    pub spacing: f64,
}

impl DiagnoseConfig {
    pub fn exponent(&self) -> Result<PExponent, DocumentError> {
        PExponent::new(self.p).map_err(|e| DocumentError::Config(e.to_string()))
    }

    pub fn validate(&self) -> Result<(), DocumentError> {
        self.exponent()?;
        check_grid(&self.h_grid).map_err(|e: MetricError| DocumentError::Config(e.to_string()))?;
        let positive = [
            ("bound_threshold", self.bound_threshold),
            ("eps", self.eps),
            ("spacing", self.spacing),
        ];
        for (name, value) in positive {
            if !(value > 0.0 && value.is_finite()) {
                return Err(DocumentError::Config(format!(
                    "{name} must be positive, got {value}"
                )));
            }
        }
        Ok(())
    }
}

pub fn parse_config(text: &str) -> Result<DiagnoseConfig, DocumentError> {
    let config: DiagnoseConfig = deserialize(text)?;
    config.validate()?;
    Ok(config)
}
