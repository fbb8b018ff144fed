//! JSON serialization of triangulations.
//!
//! Format: `{"dimension": n, "simplices": k, "gluings": [{"a": [i, j],
//! "b": [i2, j2], "map": [m0, …, mn]}, …]}` with gluings stored in
//! canonical sorted order. Parsing is strict: structural violations are
//! rejected with the validate diagnostics.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

use super::{Gluing, Pseudomanifold};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TriangulationJson {
    dimension: usize,
    simplices: usize,
    gluings: Vec<Gluing>,
}

impl Pseudomanifold {
    /// Serialize to the JSON triangulation format.
    pub fn to_json(&self) -> String {
        let doc = TriangulationJson {
            dimension: self.dimension(),
            simplices: self.simplex_count(),
            gluings: self.gluings().to_vec(),
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
        s.push('\n');
        s
    }

    /// Parse the JSON triangulation format, rejecting malformed syntax
    /// and structurally invalid data.
    pub fn from_json(text: &str) -> Result<Pseudomanifold> {
        let doc: TriangulationJson = serde_json::from_str(text)
            .map_err(|e| Error::Precondition(format!("malformed JSON: {e}")))?;
        let diags = Pseudomanifold::validate_raw(doc.dimension, doc.simplices, &doc.gluings);
        if !diags.is_empty() {
            return Err(Error::Invalid(diags));
        }
        Pseudomanifold::new(doc.dimension, doc.simplices, doc.gluings)
    }
}
