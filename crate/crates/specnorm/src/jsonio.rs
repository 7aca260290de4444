//! JSON documents for spaces and morphisms.
//!
//! A space document is `{"name", "points", "specializations"}`; point order
//! fixes the canonical iteration order and unknown keys are rejected. A
//! morphism document is `{"source", "target", "map"}` where each endpoint is
//! an inline space document or a path string resolved relative to the
//! morphism file. Emission is canonical: the specialization list contains
//! exactly the cover pairs in canonical order.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::morphism::OwnedMorphism;
use crate::space::SpectralSpace;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceDoc {
    pub name: String,
    pub points: Vec<String>,
    pub specializations: Vec<(String, String)>,
}

impl SpaceDoc {
    pub fn to_space(&self) -> Result<SpectralSpace> {
        SpectralSpace::build(&self.name, &self.points, &self.specializations)
    }

    pub fn from_space(space: &SpectralSpace) -> SpaceDoc {
        SpaceDoc {
            name: space.name().to_owned(),
            points: space.point_names().to_vec(),
            specializations: space
                .cover_pairs()
                .into_iter()
                .map(|(a, b)| {
                    (
                        space.point_name(a).to_owned(),
                        space.point_name(b).to_owned(),
                    )
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceRef {
    Path(String),
    Inline(SpaceDoc),
}

impl SpaceRef {
    fn resolve(&self, base: Option<&Path>) -> Result<SpectralSpace> {
        match self {
            SpaceRef::Inline(doc) => doc.to_space(),
            SpaceRef::Path(p) => {
                let path = match base {
                    Some(b) if Path::new(p).is_relative() => b.join(p),
                    _ => PathBuf::from(p),
                };
                load_space(&path)
            }
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub source: SpaceRef,
    pub target: SpaceRef,
    pub map: BTreeMap<String, String>,
}

pub fn parse_space_json(text: &str, context: &str) -> Result<SpectralSpace> {
    let doc: SpaceDoc =
        serde_json::from_str(text).map_err(|e| Error::Schema(format!("{context}: {e}")))?;
    doc.to_space()
}

pub fn load_space(path: &Path) -> Result<SpectralSpace> {
    let text = std::fs::read_to_string(path)?;
    parse_space_json(&text, &path.display().to_string())
}

pub fn parse_morphism_json(
    text: &str,
    name: &str,
    context: &str,
    base: Option<&Path>,
) -> Result<OwnedMorphism> {
    let doc: MorphismDoc =
        serde_json::from_str(text).map_err(|e| Error::Schema(format!("{context}: {e}")))?;
    let source = doc.source.resolve(base)?;
    let target = doc.target.resolve(base)?;
    let assignments: Vec<(String, String)> = doc.map.into_iter().collect();
    OwnedMorphism::build(name, source, target, &assignments)
}

pub fn load_morphism(path: &Path) -> Result<OwnedMorphism> {
    let text = std::fs::read_to_string(path)?;
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("morphism");
    parse_morphism_json(&text, name, &path.display().to_string(), path.parent())
}

pub fn space_json(space: &SpectralSpace) -> String {
    let mut text = serde_json::to_string_pretty(&SpaceDoc::from_space(space))
        .expect("space documents serialize");
    text.push('\n');
    text
}
