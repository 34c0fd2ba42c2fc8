use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::word::{canonical_relator, Letter, Word};
use super::FpError;

pub const PRESENTATION_SCHEMA_VERSION: u32 = 1;

/// A finitely presented group `<x_0, ..., x_{n-1} | relators>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub label: String,
    pub num_generators: usize,
    pub relators: Vec<Word>,
}

impl Presentation {
    pub fn new(label: impl Into<String>, num_generators: usize, relators: Vec<Word>) -> Result<Self, FpError> {
        let p = Presentation {
            label: label.into(),
            num_generators,
            relators,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<(), FpError> {
        for (i, r) in self.relators.iter().enumerate() {
            if let Some(l) = r.iter().find(|l| l.generator() >= self.num_generators) {
                return Err(FpError::GeneratorOutOfRange {
                    relator: i,
                    generator: l.generator(),
                    num_generators: self.num_generators,
                });
            }
        }
        Ok(())
    }

    /// Cyclically reduces every relator, drops trivial ones and duplicates
    /// (up to rotation and inversion), and sorts by length then content.
    pub fn preprocessed(&self) -> Presentation {
        let mut seen = HashSet::new();
        let mut relators: Vec<Word> = Vec::new();
        for r in &self.relators {
            let c = canonical_relator(r);
            if !c.is_empty() && seen.insert(c.clone()) {
                relators.push(c);
            }
        }
        relators.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Presentation {
            label: self.label.clone(),
            num_generators: self.num_generators,
            relators,
        }
    }

    pub fn total_length(&self) -> usize {
        self.relators.iter().map(Vec::len).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&PresentationDoc::from(self)).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, FpError> {
        let doc: PresentationDoc = serde_json::from_str(text).map_err(|e| FpError::Json(e.to_string()))?;
        doc.try_into()
    }
}

/// JSON form. Letters are signed 1-based integers: `k` is generator `k-1`,
/// `-k` its inverse.
#[derive(Serialize, Deserialize)]
struct PresentationDoc {
    schema_version: u32,
    label: String,
    num_generators: usize,
    relators: Vec<Vec<i64>>,
}

impl From<&Presentation> for PresentationDoc {
    fn from(p: &Presentation) -> Self {
        PresentationDoc {
            schema_version: PRESENTATION_SCHEMA_VERSION,
            label: p.label.clone(),
            num_generators: p.num_generators,
            relators: p
                .relators
                .iter()
                .map(|r| r.iter().map(|l| l.to_signed()).collect())
                .collect(),
        }
    }
}

impl TryFrom<PresentationDoc> for Presentation {
    type Error = FpError;

    fn try_from(doc: PresentationDoc) -> Result<Self, FpError> {
        if doc.schema_version != PRESENTATION_SCHEMA_VERSION {
            return Err(FpError::Json(format!(
                "unsupported schema_version {}",
                doc.schema_version
            )));
        }
        let relators = doc
            .relators
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&s| Letter::from_signed(s).ok_or_else(|| FpError::Json("letter 0".into())))
                    .collect::<Result<Word, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(doc.label, doc.num_generators, relators)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &[i64]) -> Word {
        s.iter().map(|&x| Letter::from_signed(x).unwrap()).collect()
    }

    #[test]
    fn json_round_trip() {
        let p = Presentation::new("S3", 2, vec![w(&[1, 1]), w(&[2, 2]), w(&[1, 2, 1, 2, 1, 2])]).unwrap();
        let back = Presentation::from_json(&p.to_json()).unwrap();
        assert_eq!(p, back);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(Presentation::new("bad", 1, vec![w(&[2])]).is_err());
        let text = r#"{"schema_version":1,"label":"x","num_generators":1,"relators":[[0]]}"#;
        assert!(Presentation::from_json(text).is_err());
    }

    #[test]
    fn preprocessing_dedups_up_to_rotation() {
        let p = Presentation::new(
            "p",
            2,
            vec![
                w(&[1, 2, 2]),
                w(&[2, 1, 2]),
                w(&[-2, -2, -1]),
                w(&[1, -1]),
                w(&[-1, 2, 1]),
            ],
        )
        .unwrap();
        let q = p.preprocessed();
        assert_eq!(q.relators, vec![w(&[2]), w(&[1, 2, 2])]);
    }
}
