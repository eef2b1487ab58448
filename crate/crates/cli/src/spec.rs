//! Body specification files: `{"a0": real, "cos": [...], "sin": [...]}`.

use planar_equilibria::TrigPolySupport;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Raw contents of a body specification file.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BodySpec {
    pub a0: f64,
    pub cos: Vec<f64>,
    pub sin: Vec<f64>,
}

impl BodySpec {
    pub fn from_support(p: &TrigPolySupport) -> Self {
        Self { a0: p.a0(), cos: p.cos_coeffs().to_vec(), sin: p.sin_coeffs().to_vec() }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain numbers serialize")
    }

    /// Checks the schema constraints and builds the support function.
    pub fn into_support(self) -> Result<TrigPolySupport, CliError> {
        if self.cos.len() != self.sin.len() {
            return Err(CliError::Schema(format!(
                "\"cos\" has {} entries but \"sin\" has {}",
                self.cos.len(),
                self.sin.len()
            )));
        }
        if !self.a0.is_finite() || self.cos.iter().chain(&self.sin).any(|v| !v.is_finite()) {
            return Err(CliError::Schema("all coefficients must be finite".into()));
        }
        TrigPolySupport::new(self.a0, self.cos, self.sin).map_err(CliError::from)
    }
}

/// Parses a UTF-8 JSON body specification.
pub fn parse_body_spec(bytes: &[u8]) -> Result<TrigPolySupport, CliError> {
    let text = std::str::from_utf8(bytes).map_err(|e| CliError::Parse {
        line: 0,
        column: 0,
        message: format!("input is not UTF-8: {e}"),
    })?;
    let spec: BodySpec = serde_json::from_str(text).map_err(|e| {
        if e.is_data() {
            CliError::Schema(e.to_string())
        } else {
            CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() }
        }
    })?;
    spec.into_support()
}
