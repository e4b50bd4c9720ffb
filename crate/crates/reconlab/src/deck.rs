//! Decks and dadecks: the multisets of vertex-deleted cards of a host,
//! stored as sorted canonical codes so equality is plain list equality and
//! the serialization doubles as a collision-scan key.

use thiserror::Error;

use crate::canon::{canonical_form, CanonCode};
use crate::digraph::{DegreeTriple, Digraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Card,
    Dacard,
}

impl std::fmt::Display for Flavor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Flavor::Card => write!(f, "card"),
            Flavor::Dacard => write!(f, "dacard"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DeckError {
    #[error("deck of a host on {0} vertices needs at least 2")]
    HostTooSmall(usize),
    #[error("card has {card} vertices, deck host has {host}")]
    CardSizeMismatch { card: usize, host: usize },
    #[error("card not present in the deck")]
    CardNotInDeck,
    #[error("kelly sum {sum} not divisible by {div}: illegitimate deck")]
    NonIntegralKelly { sum: usize, div: usize },
    #[error("pattern must be smaller than the host ({pattern} vs {host})")]
    PatternTooLarge { pattern: usize, host: usize },
    #[error("operation requires host order >= {need}, got {got}")]
    HostOrderTooSmall { need: usize, got: usize },
    #[error("operation requires graph mode")]
    NotGraphMode,
    #[error("operation requires a symmetric (graph) deck")]
    NotGraphDeck,
}

/// Multiset of cards of one host. `cards` is sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Deck {
    host_n: usize,
    graph_mode: bool,
    cards: Vec<CanonCode>,
}

/// Multiset of dacards: cards paired with the deleted vertex's degree
/// triple. Entries are sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Dadeck {
    host_n: usize,
    graph_mode: bool,
    entries: Vec<(CanonCode, DegreeTriple)>,
}

impl Deck {
    pub fn of(host: &Digraph) -> Result<Deck, DeckError> {
        if host.order() < 2 {
            return Err(DeckError::HostTooSmall(host.order()));
        }
        let mut cards: Vec<CanonCode> = host
            .vertices()
            .map(|v| canonical_form(&host.delete_vertex(v)).code)
            .collect();
        cards.sort_unstable();
        Ok(Deck { host_n: host.order(), graph_mode: host.is_graph_mode(), cards })
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn graph_mode(&self) -> bool {
        self.graph_mode
    }

    pub fn cards(&self) -> &[CanonCode] {
        &self.cards
    }

    pub fn contains(&self, card: &CanonCode) -> bool {
        self.cards.binary_search(card).is_ok()
    }

    /// Distinct cards with multiplicities, in sorted order.
    pub fn distinct_cards(&self) -> Vec<(CanonCode, usize)> {
        let mut out: Vec<(CanonCode, usize)> = Vec::new();
        for c in &self.cards {
            match out.last_mut() {
                Some((prev, m)) if prev == c => *m += 1,
                _ => out.push((c.clone(), 1)),
            }
        }
        out
    }

    /// One card code per line.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        for c in &self.cards {
            s.push_str(&c.to_hex());
            s.push('\n');
        }
        s
    }

    pub fn key(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for c in &self.cards {
            out.extend_from_slice(c.as_bytes());
        }
        out
    }
}

impl Dadeck {
    pub fn of(host: &Digraph) -> Result<Dadeck, DeckError> {
        if host.order() < 2 {
            return Err(DeckError::HostTooSmall(host.order()));
        }
        let mut entries: Vec<(CanonCode, DegreeTriple)> = host
            .vertices()
            .map(|v| (canonical_form(&host.delete_vertex(v)).code, host.degree_triple(v)))
            .collect();
        entries.sort_unstable();
        Ok(Dadeck { host_n: host.order(), graph_mode: host.is_graph_mode(), entries })
    }

    pub fn host_n(&self) -> usize {
        self.host_n
    }

    pub fn graph_mode(&self) -> bool {
        self.graph_mode
    }

    pub fn entries(&self) -> &[(CanonCode, DegreeTriple)] {
        &self.entries
    }

    pub fn contains(&self, card: &CanonCode, dt: DegreeTriple) -> bool {
        self.entries.binary_search(&(card.clone(), dt)).is_ok()
    }

    /// Distinct dacards with multiplicities, in sorted order.
    pub fn distinct_entries(&self) -> Vec<((CanonCode, DegreeTriple), usize)> {
        let mut out: Vec<((CanonCode, DegreeTriple), usize)> = Vec::new();
        for e in &self.entries {
            match out.last_mut() {
                Some((prev, m)) if prev == e => *m += 1,
                _ => out.push((e.clone(), 1)),
            }
        }
        out
    }

    /// Host degree-triple multiset, sorted. The attached triples are exactly
    /// the triples of the host's vertices.
    pub fn triple_multiset(&self) -> Vec<DegreeTriple> {
        let mut ts: Vec<DegreeTriple> = self.entries.iter().map(|(_, t)| *t).collect();
        ts.sort_unstable();
        ts
    }

    /// Forgets the triples.
    pub fn forget(&self) -> Deck {
        let mut cards: Vec<CanonCode> = self.entries.iter().map(|(c, _)| c.clone()).collect();
        cards.sort_unstable();
        Deck { host_n: self.host_n, graph_mode: self.graph_mode, cards }
    }

    /// One line per dacard: card code then the triple.
    pub fn serialize(&self) -> String {
        let mut s = String::new();
        for (c, t) in &self.entries {
            s.push_str(&format!("{} {} {} {}\n", c.to_hex(), t.a, t.b, t.c));
        }
        s
    }

    pub fn key(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for (c, t) in &self.entries {
            out.extend_from_slice(c.as_bytes());
            out.push(t.a as u8);
            out.push(t.b as u8);
            out.push(t.c as u8);
        }
        out
    }
}

/// Hypomorphy test: multiset equality of decks (dadecks).
pub fn same_deck(d: &Digraph, e: &Digraph, flavor: Flavor) -> bool {
    if d.order() != e.order() || d.order() < 2 {
        return false;
    }
    match flavor {
        Flavor::Card => Deck::of(d).unwrap() == Deck::of(e).unwrap(),
        Flavor::Dacard => Dadeck::of(d).unwrap() == Dadeck::of(e).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;

    fn dp3() -> Digraph {
        Digraph::build(3, &[(0, 1), (1, 2)], false).unwrap()
    }

    #[test]
    fn deck_of_dp3_has_two_arcs_and_one_empty() {
        let deck = Deck::of(&dp3()).unwrap();
        assert_eq!(deck.cards().len(), 3);
        let distinct = deck.distinct_cards();
        assert_eq!(distinct.len(), 2);
        let arc_like: Vec<usize> = deck
            .cards()
            .iter()
            .map(|c| c.decode(false).arc_entry_count())
            .collect();
        assert_eq!(arc_like.iter().sum::<usize>(), 2);
    }

    #[test]
    fn deck_too_small_host_rejected() {
        let k1 = Digraph::empty(1, false);
        assert_eq!(Deck::of(&k1), Err(DeckError::HostTooSmall(1)));
    }

    #[test]
    fn same_deck_on_relabelings() {
        let g = dp3();
        let h = g.relabel(&[2, 0, 1]);
        assert!(same_deck(&g, &h, Flavor::Card));
        assert!(same_deck(&g, &h, Flavor::Dacard));
        let cyc = Digraph::build(3, &[(0, 1), (1, 2), (2, 0)], false).unwrap();
        assert!(!same_deck(&g, &cyc, Flavor::Card));
    }

    #[test]
    fn dadeck_forget_matches_deck() {
        let g = dp3();
        assert_eq!(Dadeck::of(&g).unwrap().forget(), Deck::of(&g).unwrap());
    }

    #[test]
    fn dadeck_triples_are_host_triples() {
        let g = dp3();
        let mut expect: Vec<DegreeTriple> = g.vertices().map(|v| g.degree_triple(v)).collect();
        expect.sort_unstable();
        assert_eq!(Dadeck::of(&g).unwrap().triple_multiset(), expect);
    }

    #[test]
    fn serialization_round_trips_card_codes() {
        let g = dp3();
        let deck = Deck::of(&g).unwrap();
        for line in deck.serialize().lines() {
            let code = CanonCode::from_hex(line).unwrap();
            assert!(deck.contains(&code));
            assert!(are_isomorphic(
                &code.decode(false),
                &code.decode(false).relabel(&[1, 0])
            ));
        }
    }
}
