//! Bundled example categories and the JSON category file format.
//!
//! See `catalogs/SCHEMA.md` in this crate for the file layout.

mod format;

use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::fusion::{CategorySpec, FusionError};

use format::CategoryFile;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog key {key:?}; available: {}", available.join(", "))]
    KeyNotFound { key: String, available: Vec<String> },
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("invalid category file: {0}")]
    Invalid(String),
    #[error(transparent)]
    Fusion(#[from] FusionError),
}

/// A bundled category with a note on where its data comes from.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub key: String,
    pub spec: CategorySpec,
    pub provenance: String,
}

const BUNDLED: &[(&str, &str)] = &[
    ("vec_z2", include_str!("../../catalogs/vec_z2.json")),
    ("vec_z3_q", include_str!("../../catalogs/vec_z3_q.json")),
    ("rep_z2", include_str!("../../catalogs/rep_z2.json")),
    ("rep_s3", include_str!("../../catalogs/rep_s3.json")),
    ("fibonacci", include_str!("../../catalogs/fibonacci.json")),
    ("ising", include_str!("../../catalogs/ising.json")),
    ("semion", include_str!("../../catalogs/semion.json")),
];

/// Keys of the bundled catalogs.
pub fn keys() -> Vec<&'static str> {
    BUNDLED.iter().map(|(k, _)| *k).collect()
}

/// Parses a category from JSON text. The result is not validated.
pub fn parse_spec(text: &str) -> Result<CategorySpec, CatalogError> {
    Ok(parse_entry(text)?.0)
}

fn parse_entry(text: &str) -> Result<(CategorySpec, Option<String>), CatalogError> {
    let file: CategoryFile = serde_json::from_str(text)?;
    let spec = CategorySpec::from_raw(file.to_raw()?)?;
    Ok((spec, file.provenance))
}

/// A scalar in the file format's `{"order", "terms"}` encoding.
pub fn scalar_to_json(c: &crate::exactnum::Cyclotomic) -> serde_json::Value {
    serde_json::to_value(format::ScalarJson::from_cyclotomic(c)).expect("scalars always serialize")
}

/// Serializes a category to the JSON format with canonical scalars.
pub fn to_json(spec: &CategorySpec) -> String {
    CategoryFile::from_raw(spec.raw(), None).to_json()
}

pub fn builtin_entry(key: &str) -> Result<CatalogEntry, CatalogError> {
    let (_, text) = BUNDLED.iter().find(|(k, _)| *k == key).ok_or_else(|| CatalogError::KeyNotFound {
        key: key.to_string(),
        available: keys().iter().map(|s| s.to_string()).collect(),
    })?;
    let (spec, provenance) = parse_entry(text)?;
    Ok(CatalogEntry { key: key.to_string(), spec, provenance: provenance.unwrap_or_default() })
}

pub fn builtin(key: &str) -> Result<CategorySpec, CatalogError> {
    Ok(builtin_entry(key)?.spec)
}

pub fn load_spec(path: &Path) -> Result<CategorySpec, CatalogError> {
    let text = std::fs::read_to_string(path).map_err(|source| CatalogError::Io { path: path.into(), source })?;
    parse_spec(&text)
}

pub fn save_spec(spec: &CategorySpec, path: &Path) -> Result<(), CatalogError> {
    std::fs::write(path, to_json(spec)).map_err(|source| CatalogError::Io { path: path.into(), source })
}

/// Resolves a bundled key, a `<key>.json` file in one of `dirs`, or a path.
pub fn resolve(name: &str, dirs: &[PathBuf]) -> Result<CategorySpec, CatalogError> {
    if BUNDLED.iter().any(|(k, _)| *k == name) {
        return builtin(name);
    }
    for d in dirs {
        let p = d.join(format!("{name}.json"));
        if p.is_file() {
            return load_spec(&p);
        }
    }
    let p = Path::new(name);
    if p.is_file() {
        return load_spec(p);
    }
    Err(CatalogError::KeyNotFound {
        key: name.to_string(),
        available: keys().iter().map(|s| s.to_string()).collect(),
    })
}
