//! JSON documents for games, sequences and algorithm traces.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::alg1::Alg1Trace;
use crate::alg2::{Alg2Trace, PruneReason};
use crate::coalition::{Coalition, CoalitionSet, SubsetSequence};
use crate::error::Error;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum DocError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unsupported schema_version {found} (expected {SCHEMA_VERSION})")]
    SchemaVersion { found: u32 },

    #[error("{field}[{index}]: {source}")]
    Entry {
        field: &'static str,
        index: usize,
        source: Error,
    },

    #[error(transparent)]
    Model(#[from] Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameDocument {
    pub schema_version: u32,
    pub n: usize,
    pub coalitions: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDocument {
    pub schema_version: u32,
    pub n: usize,
    pub sequence: Vec<Vec<usize>>,
}

/// A document with an attached trace, serialized side by side.
#[derive(Debug, Clone, Serialize)]
pub struct WithTrace<'a, D: Serialize> {
    #[serde(flatten)]
    pub doc: &'a D,
    pub trace: Value,
}

fn check_version(found: u32) -> Result<(), DocError> {
    if found == SCHEMA_VERSION {
        Ok(())
    } else {
        Err(DocError::SchemaVersion { found })
    }
}

fn coalitions(
    field: &'static str,
    n: usize,
    raw: &[Vec<usize>],
) -> Result<Vec<Coalition>, DocError> {
    crate::coalition::check_population(n)?;
    raw.iter()
        .enumerate()
        .map(|(index, voters)| {
            if voters.is_empty() {
                return Err(DocError::Entry {
                    field,
                    index,
                    source: Error::EmptyCoalition { index },
                });
            }
            Coalition::from_voters(n, voters).map_err(|source| DocError::Entry {
                field,
                index,
                source,
            })
        })
        .collect()
}

impl GameDocument {
    pub fn from_set(cs: &CoalitionSet) -> Self {
        GameDocument {
            schema_version: SCHEMA_VERSION,
            n: cs.n(),
            coalitions: cs.to_lists(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocError> {
        let doc: GameDocument = serde_json::from_str(text)?;
        check_version(doc.schema_version)?;
        Ok(doc)
    }

    /// The coalition set, not yet validated.
    pub fn to_set(&self) -> Result<CoalitionSet, DocError> {
        let items = coalitions("coalitions", self.n, &self.coalitions)?;
        Ok(CoalitionSet::from_coalitions(self.n, items)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

impl SequenceDocument {
    pub fn from_sequence(seq: &SubsetSequence) -> Self {
        SequenceDocument {
            schema_version: SCHEMA_VERSION,
            n: seq.n(),
            sequence: seq.to_lists(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, DocError> {
        let doc: SequenceDocument = serde_json::from_str(text)?;
        check_version(doc.schema_version)?;
        Ok(doc)
    }

    /// The sequence as written; validity is checked separately.
    pub fn to_sequence(&self) -> Result<SubsetSequence, DocError> {
        let sets = coalitions("sequence", self.n, &self.sequence)?;
        Ok(SubsetSequence::from_coalitions(self.n, sets)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }
}

/// Either kind of document, told apart by its list field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Game(GameDocument),
    Sequence(SequenceDocument),
}

impl Document {
    pub fn parse(text: &str) -> Result<Self, DocError> {
        let value: Value = serde_json::from_str(text)?;
        if value.get("sequence").is_some() {
            let doc: SequenceDocument = serde_json::from_value(value)?;
            check_version(doc.schema_version)?;
            Ok(Document::Sequence(doc))
        } else {
            let doc: GameDocument = serde_json::from_value(value)?;
            check_version(doc.schema_version)?;
            Ok(Document::Game(doc))
        }
    }
}

pub fn coalition_json(c: Coalition) -> Value {
    json!(c.to_vec())
}

fn list_json(items: &[Coalition]) -> Value {
    Value::Array(items.iter().map(|c| coalition_json(*c)).collect())
}

pub fn alg1_trace_json(trace: &Alg1Trace) -> Value {
    json!({
        "backstop": trace.backstop,
        "initial_remaining": list_json(&trace.initial_remaining),
        "initial_discarded": list_json(&trace.initial_discarded),
        "iterations": trace.steps.iter().map(|s| json!({
            "k": s.k,
            "candidates": list_json(&s.candidates),
            "chosen": coalition_json(s.chosen),
            "removed": list_json(&s.removed),
            "remaining": list_json(&s.remaining),
            "discarded": list_json(&s.discarded),
        })).collect::<Vec<_>>(),
        "leftovers": list_json(&trace.leftovers),
    })
}

pub fn alg2_trace_json(trace: &Alg2Trace) -> Value {
    json!({
        "iterations": trace.steps.iter().map(|s| json!({
            "k": s.k,
            "paths": s.path_count,
            "added": list_json(&s.added),
            "pruned": s.pruned.iter().map(|p| match p.reason {
                PruneReason::Duplicate => json!({
                    "coalition": coalition_json(p.coalition),
                    "reason": "duplicate",
                }),
                PruneReason::Superset(of) => json!({
                    "coalition": coalition_json(p.coalition),
                    "reason": "superset",
                    "of": coalition_json(of),
                }),
            }).collect::<Vec<_>>(),
            "collection": list_json(&s.collection),
        })).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn game_round_trip() {
        let doc = GameDocument::from_set(&instances::job_market());
        let text = doc.to_json();
        let back = GameDocument::parse(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), text);
        assert_eq!(back.to_set().unwrap(), instances::job_market());
    }

    #[test]
    fn sequence_round_trip() {
        let doc = SequenceDocument::from_sequence(&instances::s2());
        let back = SequenceDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(back.to_sequence().unwrap(), instances::s2());
    }

    #[test]
    fn errors_name_the_entry() {
        let err = GameDocument::parse(r#"{"schema_version":1,"n":3,"coalitions":[[1],[2,4]]}"#)
            .unwrap()
            .to_set()
            .unwrap_err();
        assert_eq!(
            err.to_string(),
            "coalitions[1]: voter index 4 is outside 1..=3"
        );
        let err = GameDocument::parse(r#"{"schema_version":2,"n":3,"coalitions":[]}"#).unwrap_err();
        assert!(matches!(err, DocError::SchemaVersion { found: 2 }));
        let err = GameDocument::parse("{\"n\":").unwrap_err();
        assert!(err.to_string().contains("line 1"), "{err}");
    }

    #[test]
    fn document_kind_detection() {
        let seq = SequenceDocument::from_sequence(&instances::s1()).to_json();
        assert!(matches!(
            Document::parse(&seq).unwrap(),
            Document::Sequence(_)
        ));
        let game = GameDocument::from_set(&instances::job_market()).to_json();
        assert!(matches!(Document::parse(&game).unwrap(), Document::Game(_)));
    }

    #[test]
    fn traced_documents_parse_back() {
        let doc = SequenceDocument::from_sequence(&instances::s1());
        let text = serde_json::to_string(&WithTrace {
            doc: &doc,
            trace: json!({"x": 1}),
        })
        .unwrap();
        assert_eq!(SequenceDocument::parse(&text).unwrap(), doc);
    }
}
