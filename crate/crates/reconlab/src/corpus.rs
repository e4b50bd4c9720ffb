//! Built-in corpus of known digraphs: the C_8 matrix and the five
//! hypomorphic-but-nonisomorphic pairs. Matrices live in `corpus/*.adjm`
//! with their figure provenance; a load-time gate checks every pair is
//! hypomorphic and non-isomorphic, so a failure points at a transcription
//! error rather than propagating bad data.

use thiserror::Error;

use crate::adjm::parse_adjm;
use crate::canon::are_isomorphic;
use crate::deck::{same_deck, Flavor};
use crate::digraph::Digraph;

const C8_TEXT: &str = include_str!("../corpus/c8.adjm");
const FIG7_TEXT: &str = include_str!("../corpus/fig7.adjm");
const FIG8_TEXT: &str = include_str!("../corpus/fig8.adjm");

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum CorpusRole {
    Single,
    Pair,
}

#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub id: &'static str,
    pub role: CorpusRole,
    pub digraphs: Vec<Digraph>,
    /// Source figure of the transcription.
    pub provenance: &'static str,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("unknown corpus id {0:?}")]
    UnknownId(String),
    #[error("corpus entry {id}: transcription gate failed: {reason}")]
    GateFailed { id: &'static str, reason: String },
    #[error("corpus data does not parse: {0}")]
    Parse(#[from] crate::adjm::AdjmError),
}

pub const CORPUS_IDS: [&str; 6] = [
    "c8",
    "fig7-pair1",
    "fig7-pair2",
    "fig7-pair3",
    "fig8-pair1",
    "fig8-pair2",
];

fn load_named(text: &str, name: &str) -> Result<Digraph, CorpusError> {
    let blocks = parse_adjm(text, false)?;
    blocks
        .into_iter()
        .find(|b| b.name.as_deref() == Some(name))
        .map(|b| b.digraph)
        .ok_or_else(|| CorpusError::UnknownId(name.to_string()))
}

/// Fetches and gate-checks one corpus entry.
pub fn corpus_get(id: &str) -> Result<CorpusEntry, CorpusError> {
    let entry = match id {
        "c8" => CorpusEntry {
            id: "c8",
            role: CorpusRole::Single,
            digraphs: vec![load_named(C8_TEXT, "c8")?],
            provenance: "Figure 5",
        },
        "fig7-pair1" | "fig7-pair2" | "fig7-pair3" => {
            let id_static: &'static str = match id {
                "fig7-pair1" => "fig7-pair1",
                "fig7-pair2" => "fig7-pair2",
                _ => "fig7-pair3",
            };
            CorpusEntry {
                id: id_static,
                role: CorpusRole::Pair,
                digraphs: vec![
                    load_named(FIG7_TEXT, &format!("{id}-d"))?,
                    load_named(FIG7_TEXT, &format!("{id}-e"))?,
                ],
                provenance: "Figure 7",
            }
        }
        "fig8-pair1" | "fig8-pair2" => {
            let id_static: &'static str =
                if id == "fig8-pair1" { "fig8-pair1" } else { "fig8-pair2" };
            CorpusEntry {
                id: id_static,
                role: CorpusRole::Pair,
                digraphs: vec![
                    load_named(FIG8_TEXT, &format!("{id}-d"))?,
                    load_named(FIG8_TEXT, &format!("{id}-e"))?,
                ],
                provenance: "Figure 8",
            }
        }
        other => return Err(CorpusError::UnknownId(other.to_string())),
    };
    validate(&entry)?;
    Ok(entry)
}

fn validate(entry: &CorpusEntry) -> Result<(), CorpusError> {
    match entry.role {
        CorpusRole::Single => {
            if entry.digraphs.len() != 1 {
                return Err(CorpusError::GateFailed {
                    id: entry.id,
                    reason: "single entry must hold one digraph".into(),
                });
            }
        }
        CorpusRole::Pair => {
            let [d, e] = &entry.digraphs[..] else {
                return Err(CorpusError::GateFailed {
                    id: entry.id,
                    reason: "pair entry must hold two digraphs".into(),
                });
            };
            if !same_deck(d, e, Flavor::Card) {
                return Err(CorpusError::GateFailed {
                    id: entry.id,
                    reason: "members are not hypomorphic".into(),
                });
            }
            if are_isomorphic(d, e) {
                return Err(CorpusError::GateFailed {
                    id: entry.id,
                    reason: "members are isomorphic".into(),
                });
            }
        }
    }
    Ok(())
}
