use std::fs;
use std::path::Path;

use serde::de::DeserializeOwned;

use crate::error::{Error, Result};
use crate::model::{Instance, Realization, RealizationDoc};

/// Parses JSON, reporting the failing field path together with line and column.
pub fn parse_json<T: DeserializeOwned>(text: &str) -> Result<T> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        if path == "." {
            Error::Json(inner.to_string())
        } else {
            Error::Json(format!("{path}: {inner}"))
        }
    })?;
    de.end().map_err(|e| Error::Json(e.to_string()))?;
    Ok(value)
}

pub fn save_instance(instance: &Instance) -> String {
    serde_json::to_string_pretty(instance).expect("instances always serialize")
}

pub fn load_instance(text: &str) -> Result<Instance> {
    parse_json(text)
}

pub fn save_realization(realization: &Realization) -> String {
    serde_json::to_string_pretty(&realization.to_doc()).expect("realizations always serialize")
}

pub fn load_realization(instance: &Instance, text: &str) -> Result<Realization> {
    let doc: RealizationDoc = parse_json(text)?;
    Realization::from_doc(instance, doc)
}

pub fn read_file(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|source| Error::Io { path: path.to_path_buf(), source })
}
