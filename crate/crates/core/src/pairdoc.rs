//! JSON documents naming a symmetric pair, either inline or from the
//! catalog.
//!
//! ```json
//! {"g": {"family": "B", "rank": 2}, "k_simple_roots": [[1, -1], [1, 1]]}
//! {"catalog": "sphere-even(2)"}
//! ```

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::rootsystem::{Family, RootSystem, SimpleType};
use crate::symmspace::{build_pair, lookup, SymmetricPair};
use crate::weight::{parse_rational, q, Weight, Q};

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
enum Coord {
    Int(i64),
    Text(String),
}

impl Coord {
    fn value(&self) -> Result<Q> {
        match self {
            Coord::Int(n) => Ok(q(*n)),
            Coord::Text(s) => parse_rational(s),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
struct TypeDoc {
    family: String,
    rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
enum Doc {
    Catalog {
        catalog: String,
    },
    Inline {
        g: TypeDoc,
        k_simple_roots: Vec<Vec<Coord>>,
    },
}

/// Where a pair comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceSpec {
    Catalog(String),
    Inline {
        g_type: SimpleType,
        k_simple_roots: Vec<Weight>,
    },
}

impl SpaceSpec {
    /// Parses a pair document.
    pub fn from_json(text: &str) -> Result<SpaceSpec> {
        let doc: Doc = serde_json::from_str(text).map_err(|e| {
            Error::Parse(format!(
                "expected {{\"catalog\": name}} or {{\"g\": {{\"family\", \"rank\"}}, \"k_simple_roots\": [...]}}: {e}"
            ))
        })?;
        match doc {
            Doc::Catalog { catalog } => Ok(SpaceSpec::Catalog(catalog)),
            Doc::Inline { g, k_simple_roots } => {
                let mut letters = g.family.trim().chars();
                let family = match (letters.next(), letters.next()) {
                    (Some(c), None) => Family::from_letter(c.to_ascii_uppercase()),
                    _ => None,
                }
                .ok_or_else(|| Error::Parse(format!("unknown family {:?}", g.family)))?;
                let g_type = SimpleType::new(family, g.rank)?;
                let k_simple_roots = k_simple_roots
                    .iter()
                    .map(|row| Ok(Weight(row.iter().map(Coord::value).collect::<Result<_>>()?)))
                    .collect::<Result<_>>()?;
                Ok(SpaceSpec::Inline {
                    g_type,
                    k_simple_roots,
                })
            }
        }
    }

    /// A short label for reports: the catalog name, or `G/[K-simple roots]`.
    pub fn label(&self) -> String {
        match self {
            SpaceSpec::Catalog(name) => name.clone(),
            SpaceSpec::Inline {
                g_type,
                k_simple_roots,
            } => {
                let roots: Vec<String> = k_simple_roots.iter().map(ToString::to_string).collect();
                format!("{g_type}/[{}]", roots.join(", "))
            }
        }
    }

    /// Validates and builds the pair.
    pub fn resolve(&self) -> Result<SymmetricPair> {
        match self {
            SpaceSpec::Catalog(name) => lookup(name)?.build(),
            SpaceSpec::Inline {
                g_type,
                k_simple_roots,
            } => build_pair(RootSystem::new(*g_type), k_simple_roots.clone()),
        }
    }
}
