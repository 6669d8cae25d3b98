//! JSON document format for algebras.
//!
//! ```json
//! { "name": "C2", "size": 2, "elements": ["0", "1"],
//!   "operations": [ { "name": "mul", "arity": 2, "table": [0, 1, 1, 0] } ] }
//! ```

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{FiniteAlgebra, Operation};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    name: String,
    size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    elements: Option<Vec<String>>,
    operations: Vec<OperationDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OperationDoc {
    name: String,
    arity: usize,
    table: Vec<usize>,
}

impl FiniteAlgebra {
    /// Parses an algebra document. Errors carry the offending JSON path.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let de = &mut serde_json::Deserializer::from_str(text);
        let doc: AlgebraDoc = serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            Error::input(format!("{path}: {}", e.into_inner()))
        })?;
        let ops = doc
            .operations
            .into_iter()
            .map(|o| Operation::new(o.name, o.arity, o.table))
            .collect();
        FiniteAlgebra::new(doc.name, doc.size, doc.elements, ops)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::input(format!("cannot read {}: {e}", path.display())))?;
        FiniteAlgebra::from_json_str(&text)
    }

    pub fn to_json_string(&self) -> String {
        let doc = AlgebraDoc {
            name: self.name().to_string(),
            size: self.size(),
            elements: Some(self.element_names().to_vec()),
            operations: self
                .operations()
                .iter()
                .map(|o| OperationDoc {
                    name: o.name.clone(),
                    arity: o.arity,
                    table: o.table.clone(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("algebra documents always serialize")
    }
}
