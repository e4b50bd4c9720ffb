//! Exhaustive enumeration of small graphs, digraphs and tournaments up to
//! isomorphism, deck-collision scanning with checkpoint/resume, and the
//! collision-pair classifier.
//!
//! Generation extends canonical (n-1)-vertex parents by one vertex and
//! deduplicates children by canonical code, level by level, so the labeled
//! space is never materialized. The host stream is sorted by canonical
//! code, which makes every downstream report deterministic.

use std::collections::hash_map::DefaultHasher;
use std::collections::{BTreeMap, BTreeSet};
use std::hash::{Hash, Hasher};
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::analysis::{has_iso_pasted_pair, AnalysisError};
use crate::canon::{canonical_form, CanonCode};
use crate::deck::{Dadeck, Deck, Flavor};
use crate::digraph::Digraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Graph,
    Digraph,
    Tournament,
}

impl Kind {
    pub fn default_ceiling(&self) -> usize {
        match self {
            Kind::Graph => 8,
            Kind::Digraph => 6,
            Kind::Tournament => 8,
        }
    }

    fn symmetric(&self) -> bool {
        matches!(self, Kind::Graph)
    }
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kind::Graph => write!(f, "graph"),
            Kind::Digraph => write!(f, "digraph"),
            Kind::Tournament => write!(f, "tournament"),
        }
    }
}

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("order {n} exceeds the {kind} ceiling {ceiling}")]
    CeilingExceeded { n: usize, kind: Kind, ceiling: usize },
    #[error("scan interrupted by {0} limit")]
    LimitHit(&'static str),
    #[error("checkpoint i/o: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Analysis(#[from] AnalysisError),
    #[error(transparent)]
    Deck(#[from] crate::deck::DeckError),
}

/// Scan configuration. `ceiling` overrides the per-kind default; `limits`
/// cut the scan off without pretending completeness.
#[derive(Debug, Clone)]
pub struct ScanConfig {
    pub n: usize,
    pub kind: Kind,
    pub mode: Flavor,
    pub ceiling: Option<usize>,
    pub max_hosts: Option<usize>,
    pub time_limit: Option<Duration>,
    pub checkpoint: Option<PathBuf>,
}

impl ScanConfig {
    pub fn new(n: usize, kind: Kind, mode: Flavor) -> ScanConfig {
        ScanConfig {
            n,
            kind,
            mode,
            ceiling: None,
            max_hosts: None,
            time_limit: None,
            checkpoint: None,
        }
    }

    fn check_ceiling(&self) -> Result<(), SearchError> {
        let ceiling = self.ceiling.unwrap_or(self.kind.default_ceiling());
        if self.n > ceiling {
            return Err(SearchError::CeilingExceeded { n: self.n, kind: self.kind, ceiling });
        }
        Ok(())
    }
}

/// Exactly one representative per isomorphism class, sorted by canonical
/// code.
pub fn enumerate_small(cfg: &ScanConfig) -> Result<Vec<Digraph>, SearchError> {
    cfg.check_ceiling()?;
    let symmetric = cfg.kind.symmetric();
    let mut level: BTreeSet<CanonCode> =
        std::iter::once(canonical_form(&Digraph::empty(1, symmetric)).code).collect();
    for size in 2..=cfg.n {
        let mut next: BTreeSet<CanonCode> = BTreeSet::new();
        for parent_code in &level {
            let parent = parent_code.decode(symmetric);
            for child in extend_by_one(&parent, size, cfg.kind) {
                next.insert(canonical_form(&child).code);
            }
        }
        level = next;
    }
    Ok(level.into_iter().map(|c| c.decode(symmetric)).collect())
}

/// All attachments of a new vertex to the parent, per kind.
fn extend_by_one(parent: &Digraph, size: usize, kind: Kind) -> Vec<Digraph> {
    let k = size - 1;
    let new = k;
    let mut out = Vec::new();
    match kind {
        Kind::Graph => {
            for bits in 0u32..1 << k {
                let mut arcs: Vec<(usize, usize)> = parent.arcs().collect();
                for w in 0..k {
                    if bits >> w & 1 == 1 {
                        arcs.push((new, w));
                        arcs.push((w, new));
                    }
                }
                out.push(Digraph::build(size, &arcs, true).unwrap());
            }
        }
        Kind::Digraph => {
            for bits in 0u32..1 << (2 * k) {
                let mut arcs: Vec<(usize, usize)> = parent.arcs().collect();
                for w in 0..k {
                    if bits >> (2 * w) & 1 == 1 {
                        arcs.push((new, w));
                    }
                    if bits >> (2 * w + 1) & 1 == 1 {
                        arcs.push((w, new));
                    }
                }
                out.push(Digraph::build(size, &arcs, false).unwrap());
            }
        }
        Kind::Tournament => {
            for bits in 0u32..1 << k {
                let mut arcs: Vec<(usize, usize)> = parent.arcs().collect();
                for w in 0..k {
                    if bits >> w & 1 == 1 {
                        arcs.push((new, w));
                    } else {
                        arcs.push((w, new));
                    }
                }
                out.push(Digraph::build(size, &arcs, false).unwrap());
            }
        }
    }
    out
}

/// Hosts sharing one deck (dadeck): the key retains the full canonical
/// serialization, members are pairwise non-isomorphic host codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionClass {
    pub deck_key: Vec<u8>,
    pub deck_key_hash: u64,
    pub members: Vec<CanonCode>,
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub n: usize,
    pub kind: Kind,
    pub mode: Flavor,
    pub hosts: usize,
    pub classes: Vec<CollisionClass>,
    pub complete: bool,
}

fn deck_key(host: &Digraph, mode: Flavor) -> Result<Vec<u8>, SearchError> {
    Ok(match mode {
        Flavor::Card => Deck::of(host)?.key(),
        Flavor::Dacard => Dadeck::of(host)?.key(),
    })
}

fn hash64(bytes: &[u8]) -> u64 {
    let mut h = DefaultHasher::new();
    bytes.hash(&mut h);
    h.finish()
}

/// Buckets every enumerated host by its deck key and returns the classes
/// with at least two members. An existing checkpoint log is trusted for
/// hosts it already covers; newly computed keys are appended to it.
pub fn deck_collision_scan(cfg: &ScanConfig) -> Result<ScanReport, SearchError> {
    let start = Instant::now();
    let hosts = enumerate_small(cfg)?;
    let total = hosts.len();
    let mut done: BTreeMap<String, Vec<u8>> = BTreeMap::new();
    if let Some(path) = &cfg.checkpoint {
        if path.exists() {
            let file = std::fs::File::open(path)
                .map_err(|e| SearchError::Checkpoint(e.to_string()))?;
            for line in std::io::BufReader::new(file).lines() {
                let line = line.map_err(|e| SearchError::Checkpoint(e.to_string()))?;
                if let Some((host_hex, key_hex)) = line.split_once(' ') {
                    if let Some(key) = hex_to_bytes(key_hex) {
                        done.insert(host_hex.to_string(), key);
                    }
                }
            }
        }
    }
    let mut log = match &cfg.checkpoint {
        Some(path) => Some(
            std::fs::OpenOptions::new()
                .create(true)
                .append(true)
                .open(path)
                .map_err(|e| SearchError::Checkpoint(e.to_string()))?,
        ),
        None => None,
    };

    let mut buckets: BTreeMap<Vec<u8>, Vec<CanonCode>> = BTreeMap::new();
    let mut processed = 0usize;
    let mut complete = true;
    for host in &hosts {
        if let Some(limit) = cfg.max_hosts {
            if processed >= limit {
                complete = false;
                break;
            }
        }
        if let Some(limit) = cfg.time_limit {
            if start.elapsed() > limit {
                complete = false;
                break;
            }
        }
        let code = canonical_form(host).code;
        let hex = code.to_hex();
        let key = match done.get(&hex) {
            Some(key) => key.clone(),
            None => {
                let key = deck_key(host, cfg.mode)?;
                if let Some(log) = log.as_mut() {
                    writeln!(log, "{} {}", hex, bytes_to_hex(&key))
                        .map_err(|e| SearchError::Checkpoint(e.to_string()))?;
                }
                key
            }
        };
        buckets.entry(key).or_default().push(code);
        processed += 1;
    }
    if let Some(log) = log.as_mut() {
        log.flush().map_err(|e| SearchError::Checkpoint(e.to_string()))?;
    }

    let mut classes: Vec<CollisionClass> = buckets
        .into_iter()
        .filter(|(_, members)| members.len() >= 2)
        .map(|(key, mut members)| {
            members.sort_unstable();
            CollisionClass { deck_key_hash: hash64(&key), deck_key: key, members }
        })
        .collect();
    classes.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(ScanReport {
        n: cfg.n,
        kind: cfg.kind,
        mode: cfg.mode,
        hosts: total,
        classes,
        complete,
    })
}

fn bytes_to_hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn hex_to_bytes(s: &str) -> Option<Vec<u8>> {
    if s.len() % 2 != 0 {
        return None;
    }
    (0..s.len() / 2)
        .map(|i| u8::from_str_radix(&s[2 * i..2 * i + 2], 16).ok())
        .collect()
}

/// One classified collision pair: hosts sharing a deck, whether some card
/// pair is pasted isomorphically in both, and whether they share a dadeck.
#[derive(Debug, Clone)]
pub struct ClassifiedPair {
    pub first: CanonCode,
    pub second: CanonCode,
    pub iso_pasted: bool,
    pub da_hypomorphic: bool,
}

#[derive(Debug, Clone)]
pub struct ClassifierReport {
    pub scan: ScanReport,
    pub pairs: Vec<ClassifiedPair>,
    /// Pairs in class (i) that are nevertheless da-hypomorphic. Expected
    /// empty; any entry answers the classifier's question negatively.
    pub violations: Vec<ClassifiedPair>,
}

/// Classifies every card-collision pair by the presence of an
/// isomorphically pasted card pair, and checks that every class-(i) pair
/// fails dacard hypomorphy.
pub fn classify_collision_pairs(cfg: &ScanConfig) -> Result<ClassifierReport, SearchError> {
    assert_eq!(cfg.mode, Flavor::Card);
    assert_eq!(cfg.kind, Kind::Digraph);
    let scan = deck_collision_scan(cfg)?;
    let mut pairs = Vec::new();
    let mut violations = Vec::new();
    for class in &scan.classes {
        for i in 0..class.members.len() {
            for j in i + 1..class.members.len() {
                let d = class.members[i].decode(false);
                let e = class.members[j].decode(false);
                let iso_pasted = has_iso_pasted_pair(&d, &e)?;
                let da_hypomorphic = crate::deck::same_deck(&d, &e, Flavor::Dacard);
                let pair = ClassifiedPair {
                    first: class.members[i].clone(),
                    second: class.members[j].clone(),
                    iso_pasted,
                    da_hypomorphic,
                };
                if pair.iso_pasted && pair.da_hypomorphic {
                    violations.push(pair.clone());
                }
                pairs.push(pair);
            }
        }
    }
    Ok(ClassifierReport { scan, pairs, violations })
}
