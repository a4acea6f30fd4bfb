//! Input loading: file path, inline JSON, or stdin; matrix documents and
//! spectral specs over either field. When a document carries both a matrix
//! and spectral data, the spectral spec is authoritative.

use std::io::Read;

use adreal_core::matrices::{MatrixC, MatrixDocument, MatrixH};
use adreal_core::scalars::{GaussianRational, Scalar};
use adreal_core::spectral::{
    jordan_form_c, jordan_form_h, JordanDataC, JordanDataH, SpectralError, SpectralSpecDocument,
};

use crate::{Failure, FieldArg};

pub fn read_source(input: Option<&str>) -> Result<String, Failure> {
    match input {
        None | Some("-") => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| Failure::input(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
        Some(text) if text.trim_start().starts_with('{') => Ok(text.to_string()),
        Some(path) => std::fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {path}: {e}"))),
    }
}

pub fn parse_hints(hint: Option<&str>) -> Result<Vec<GaussianRational>, Failure> {
    let Some(raw) = hint else {
        return Ok(Vec::new());
    };
    raw.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            GaussianRational::parse(s).map_err(|e| Failure::input(format!("bad hint {s:?}: {e}")))
        })
        .collect()
}

/// A classified-ready input: the element and its Jordan data over one of
/// the two fields.
pub enum Loaded {
    C { x: MatrixC, jd: JordanDataC },
    H { x: MatrixH, jd: JordanDataH },
}

pub fn map_spectral_error(e: SpectralError) -> Failure {
    match e {
        SpectralError::NonSplittingSpectrum { .. } => Failure::refusal(e.to_string()),
        _ => Failure::input(e.to_string()),
    }
}

/// Parse a document as matrix or spectral spec and produce Jordan data.
pub fn load(
    source: &str,
    field_override: Option<FieldArg>,
    hints: &[GaussianRational],
) -> Result<Loaded, Failure> {
    let value: serde_json::Value =
        serde_json::from_str(source).map_err(|e| Failure::input(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Failure::input("top-level JSON must be an object"))?;

    let field_str = match field_override {
        Some(FieldArg::C) => "C".to_string(),
        Some(FieldArg::H) => "H".to_string(),
        None => obj
            .get("field")
            .and_then(|f| f.as_str())
            .ok_or_else(|| Failure::input("document has no \"field\" tag and no --field given"))?
            .to_string(),
    };

    if obj.contains_key("data") {
        let mut doc: SpectralSpecDocument = serde_json::from_value(value.clone())
            .map_err(|e| Failure::input(format!("bad spectral spec: {e}")))?;
        doc.field = field_str.clone();
        return match field_str.as_str() {
            "C" => {
                let jd = doc.to_jordan_data_c().map_err(map_spectral_error)?;
                let x = jd.canonical_form();
                Ok(Loaded::C { x, jd })
            }
            "H" => {
                let jd = doc.to_jordan_data_h().map_err(map_spectral_error)?;
                let x = jd.canonical_form();
                Ok(Loaded::H { x, jd })
            }
            other => Err(Failure::input(format!("unknown field tag {other:?}"))),
        };
    }

    if obj.contains_key("entries") {
        let doc: MatrixDocument = serde_json::from_value(value)
            .map_err(|e| Failure::input(format!("bad matrix document: {e}")))?;
        return match field_str.as_str() {
            "C" => {
                let x = doc
                    .to_matrix_c()
                    .map_err(|e| Failure::input(e.to_string()))?;
                let jd = jordan_form_c(&x, hints).map_err(map_spectral_error)?;
                Ok(Loaded::C { x, jd })
            }
            "H" => {
                let x = doc
                    .to_matrix_h()
                    .map_err(|e| Failure::input(e.to_string()))?;
                let jd = jordan_form_h(&x, hints).map_err(map_spectral_error)?;
                Ok(Loaded::H { x, jd })
            }
            other => Err(Failure::input(format!("unknown field tag {other:?}"))),
        };
    }

    Err(Failure::input(
        "document must contain \"entries\" (matrix) or \"data\" (spectral spec)",
    ))
}
