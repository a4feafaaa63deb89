//! Link records and where they come from.

use std::num::NonZeroU32;
use std::path::Path;

use hvs_core::{RatMatrix, SeifertMatrix};
use serde::{Deserialize, Serialize};

use crate::catalog;
use crate::format::ExactMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkRecord {
    pub name: String,
    pub seifert: ExactMatrix,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<NonZeroU32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub tags: Vec<String>,
    /// Monodromy h for the stage-isolated route.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monodromy: Option<ExactMatrix>,
    /// Variation V paired with `monodromy`; defaults to (Sᵀ)⁻¹.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variation: Option<ExactMatrix>,
}

impl LinkRecord {
    pub fn new(name: impl Into<String>, s: &RatMatrix) -> Self {
        LinkRecord {
            name: name.into(),
            seifert: ExactMatrix(s.clone()),
            components: None,
            tags: Vec::new(),
            monodromy: None,
            variation: None,
        }
    }

    pub fn seifert_matrix(&self) -> SeifertMatrix {
        SeifertMatrix::new(self.seifert.0.clone()).expect("square by construction").named(self.name.clone())
    }

    /// (h, V) for the monodromy route.
    pub fn monodromy_pair(&self) -> Result<(RatMatrix, RatMatrix), String> {
        let h = self.monodromy.as_ref().ok_or_else(|| "record has no monodromy matrix".to_string())?;
        let v = match &self.variation {
            Some(v) => v.0.clone(),
            None => self
                .seifert
                .0
                .transpose()
                .inverse()
                .ok_or_else(|| "Seifert matrix is singular, so a variation matrix is required".to_string())?,
        };
        Ok((h.0.clone(), v))
    }
}

/// Parses a document holding an array of records. Errors carry line and column.
pub fn parse_records(text: &str, origin: &str) -> Result<Vec<LinkRecord>, String> {
    serde_json::from_str(text).map_err(|e| {
        let msg = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        let msg = msg.strip_suffix(&suffix).unwrap_or(&msg);
        format!("{}:{}:{}: {}", origin, e.line(), e.column(), msg)
    })
}

/// Records named by a source: a file path, `-` for standard input, or
/// `catalog:NAME`. A `#NAME` suffix on a path selects one record.
pub fn load(source: &str) -> Result<Vec<LinkRecord>, String> {
    if let Some(name) = source.strip_prefix("catalog:") {
        return catalog::lookup(name).map(|r| vec![r]);
    }
    let (path, select) = match source.rsplit_once('#') {
        Some((p, n)) if !n.is_empty() => (p, Some(n)),
        _ => (source, None),
    };
    let text = if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| format!("<stdin>: {}", e))?
    } else {
        std::fs::read_to_string(Path::new(path)).map_err(|e| format!("{}: {}", path, e))?
    };
    let origin = if path == "-" { "<stdin>" } else { path };
    let records = parse_records(&text, origin)?;
    match select {
        None => Ok(records),
        Some(n) => records
            .into_iter()
            .find(|r| r.name == n)
            .map(|r| vec![r])
            .ok_or_else(|| format!("{}: no record named {:?}", path, n)),
    }
}

/// Exactly one record from a source.
pub fn load_one(source: &str) -> Result<LinkRecord, String> {
    let mut records = load(source)?;
    match records.len() {
        1 => Ok(records.remove(0)),
        n => Err(format!("{}: expected exactly one record, found {}; select one with PATH#NAME", source, n)),
    }
}
