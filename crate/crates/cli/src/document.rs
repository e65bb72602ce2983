//! Polynomial input documents.
//!
//! The canonical form is JSON, `{"coeffs": [[re, im], ...]}`, with `a_0`
//! first. The inline form used by `--coeffs` is `re,im;re,im;...`; an entry
//! with a single number is real.

use std::io::Read;
use std::path::Path;

use polyzero_core::{PolyError, Polynomial};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolynomialDocument {
    pub coeffs: Vec<[f64; 2]>,
}

impl PolynomialDocument {
    pub fn from_polynomial(p: &Polynomial) -> Self {
        Self { coeffs: p.coeffs().iter().map(|c| [c.re, c.im]).collect() }
    }

    pub fn to_polynomial(&self) -> Result<Polynomial, CliError> {
        let pairs: Vec<(f64, f64)> = self.coeffs.iter().map(|c| (c[0], c[1])).collect();
        Polynomial::from_pairs(&pairs).map_err(poly_error)
    }
}

fn poly_error(e: PolyError) -> CliError {
    CliError::Input(format!("invalid polynomial: {e}"))
}

pub fn parse_json(text: &str) -> Result<Polynomial, CliError> {
    let doc: PolynomialDocument =
        serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid polynomial document: {e}")))?;
    doc.to_polynomial()
}

pub fn parse_inline(text: &str) -> Result<Polynomial, CliError> {
    let mut pairs = Vec::new();
    for (j, entry) in text.split(';').map(str::trim).enumerate() {
        if entry.is_empty() {
            continue;
        }
        let parts: Vec<&str> = entry.split(',').map(str::trim).collect();
        let num = |s: &str| -> Result<f64, CliError> {
            s.parse::<f64>().map_err(|_| CliError::Input(format!("coefficient a_{j}: cannot parse '{s}'")))
        };
        let pair = match parts.as_slice() {
            [re] => (num(re)?, 0.0),
            [re, im] => (num(re)?, num(im)?),
            _ => return Err(CliError::Input(format!("coefficient a_{j}: expected 're,im', got '{entry}'"))),
        };
        pairs.push(pair);
    }
    Polynomial::from_pairs(&pairs).map_err(poly_error)
}

/// Reads a polynomial from `--coeffs`, a file, or stdin (no path or `-`).
pub fn load(coeffs: Option<&str>, path: Option<&Path>) -> Result<Polynomial, CliError> {
    if let Some(inline) = coeffs {
        return parse_inline(inline);
    }
    let text = match path {
        Some(p) if p != Path::new("-") => {
            std::fs::read_to_string(p).map_err(|e| CliError::Input(format!("cannot read {}: {e}", p.display())))?
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Input(format!("cannot read stdin: {e}")))?;
            buf
        }
    };
    parse_json(&text)
}
