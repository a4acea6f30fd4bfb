//! The spectral-spec JSON document: an alternative input path that names a
//! matrix by its Jordan data directly, bypassing eigenvalue computation.
//!
//! ```json
//! { "field": "C", "data": [ { "lambda": "1*i", "partition": [[2, 1]] } ] }
//! ```

use serde::{Deserialize, Serialize};

use super::{EigenvalueClass, FieldTag, JordanDataC, JordanDataH, SpectralDatum, SpectralError};
use crate::partitions::Partition;
use crate::scalars::{GaussianRational, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralSpecDocument {
    pub field: String,
    pub data: Vec<SpectralSpecEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralSpecEntry {
    pub lambda: String,
    pub partition: Vec<(usize, usize)>,
}

impl SpectralSpecDocument {
    pub fn field_tag(&self) -> Result<FieldTag, SpectralError> {
        match self.field.as_str() {
            "C" => Ok(FieldTag::C),
            "H" => Ok(FieldTag::H),
            other => Err(SpectralError::InvalidSpec(format!(
                "unknown field tag {other:?}"
            ))),
        }
    }

    fn parse_data(&self, field: FieldTag) -> Result<Vec<SpectralDatum>, SpectralError> {
        self.data
            .iter()
            .map(|entry| {
                let lambda = GaussianRational::parse(&entry.lambda)
                    .map_err(|e| SpectralError::InvalidSpec(e.to_string()))?;
                let partition = Partition::new(entry.partition.clone())
                    .map_err(|e| SpectralError::InvalidSpec(e.to_string()))?;
                if partition.is_empty() {
                    return Err(SpectralError::InvalidSpec(format!(
                        "empty partition at lambda {}",
                        entry.lambda
                    )));
                }
                Ok(SpectralDatum {
                    class: EigenvalueClass::new(field, lambda),
                    partition,
                })
            })
            .collect()
    }

    pub fn to_jordan_data_c(&self) -> Result<JordanDataC, SpectralError> {
        if self.field_tag()? != FieldTag::C {
            return Err(SpectralError::InvalidSpec(
                "spectral spec is not over C".into(),
            ));
        }
        let data = self.parse_data(FieldTag::C)?;
        let n = data.iter().map(SpectralDatum::multiplicity).sum();
        JordanDataC::canonical(FieldTag::C, n, data)
    }

    pub fn to_jordan_data_h(&self) -> Result<JordanDataH, SpectralError> {
        if self.field_tag()? != FieldTag::H {
            return Err(SpectralError::InvalidSpec(
                "spectral spec is not over H".into(),
            ));
        }
        let data = self.parse_data(FieldTag::H)?;
        let n = data.iter().map(SpectralDatum::multiplicity).sum();
        JordanDataH::canonical(FieldTag::H, n, data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_assembles() {
        let doc: SpectralSpecDocument = serde_json::from_str(
            r#"{ "field": "H", "data": [ { "lambda": "1*i", "partition": [[2, 1]] } ] }"#,
        )
        .unwrap();
        let jd = doc.to_jordan_data_h().unwrap();
        assert_eq!(jd.n, 2);
        assert_eq!(jd.data[0].class.rep(), &GaussianRational::i());
    }

    #[test]
    fn canonicalizes_h_class_reps() {
        let doc = SpectralSpecDocument {
            field: "H".into(),
            data: vec![SpectralSpecEntry {
                lambda: "1-2*i".into(),
                partition: vec![(1, 1)],
            }],
        };
        let jd = doc.to_jordan_data_h().unwrap();
        assert_eq!(jd.data[0].class.rep().to_string(), "1+2*i");
    }

    #[test]
    fn rejects_duplicate_classes_and_bad_fields() {
        let doc = SpectralSpecDocument {
            field: "H".into(),
            data: vec![
                SpectralSpecEntry {
                    lambda: "1-2*i".into(),
                    partition: vec![(1, 1)],
                },
                SpectralSpecEntry {
                    lambda: "1+2*i".into(),
                    partition: vec![(1, 1)],
                },
            ],
        };
        assert!(doc.to_jordan_data_h().is_err());
        let doc = SpectralSpecDocument {
            field: "Q".into(),
            data: vec![],
        };
        assert!(doc.field_tag().is_err());
    }
}
