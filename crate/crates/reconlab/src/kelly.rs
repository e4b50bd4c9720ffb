//! Subgraph and induced-subgraph counting, directly and from a deck.
//!
//! Direct counts are the oracle primitive: `count_copies` enumerates
//! embeddings by backtracking and divides by the pattern's automorphism
//! count. The deck route recovers host counts by summing per-card counts
//! and dividing, and per-vertex counts by subtraction against one card.

use crate::canon::{all_isomorphisms, CanonCode};
use crate::deck::{Deck, DeckError};
use crate::digraph::Digraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountMode {
    /// `S(F, G)`: arcs of F must be present in the image.
    Subgraph,
    /// `s(F, G)`: arcs and non-arcs must both be respected.
    Induced,
}

/// Number of injective maps `V(F) -> V(G)` preserving arcs (and, in induced
/// mode, non-arcs), restricted so that `pin` (if given) is in the image.
fn embeddings(f: &Digraph, g: &Digraph, mode: CountMode, pin: Option<usize>) -> usize {
    let nf = f.order();
    let ng = g.order();
    if nf > ng {
        return 0;
    }
    let mut map = vec![usize::MAX; nf];
    let mut used = vec![false; ng];
    let mut count = 0usize;
    fn rec(
        f: &Digraph,
        g: &Digraph,
        mode: CountMode,
        pin: Option<usize>,
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        count: &mut usize,
    ) {
        let nf = f.order();
        if v == nf {
            if pin.is_none_or(|p| map.contains(&p)) {
                *count += 1;
            }
            return;
        }
        for w in 0..g.order() {
            if used[w] {
                continue;
            }
            let ok = (0..v).all(|u| {
                let fwd = f.has_arc(u, v);
                let bwd = f.has_arc(v, u);
                let gfwd = g.has_arc(map[u], w);
                let gbwd = g.has_arc(w, map[u]);
                match mode {
                    CountMode::Subgraph => (!fwd || gfwd) && (!bwd || gbwd),
                    CountMode::Induced => fwd == gfwd && bwd == gbwd,
                }
            });
            if ok {
                map[v] = w;
                used[w] = true;
                rec(f, g, mode, pin, v + 1, map, used, count);
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
    }
    rec(f, g, mode, pin, 0, &mut map, &mut used, &mut count);
    count
}

/// `S(F, G)` or `s(F, G)`: distinct copies of the pattern in the host.
pub fn count_copies(f: &Digraph, g: &Digraph, mode: CountMode) -> usize {
    let aut = all_isomorphisms(f, f).len();
    embeddings(f, g, mode, None) / aut
}

/// `S(F, G, v)` or `s(F, G, v)`: copies containing the vertex `v`.
pub fn count_copies_at(f: &Digraph, g: &Digraph, v: usize, mode: CountMode) -> usize {
    let aut = all_isomorphisms(f, f).len();
    embeddings(f, g, mode, Some(v)) / aut
}

/// Host count recovered from the deck alone: sum the per-card counts and
/// divide by `host_n - |F|`. A non-integral division signals a deck that no
/// host can have produced.
pub fn kelly_count(
    f: &Digraph,
    deck: &Deck,
    mode: CountMode,
    at_card: Option<&CanonCode>,
) -> Result<usize, DeckError> {
    if f.order() >= deck.host_n() {
        return Err(DeckError::PatternTooLarge { pattern: f.order(), host: deck.host_n() });
    }
    let total = kelly_host_count(f, deck, mode)?;
    match at_card {
        None => Ok(total),
        Some(code) => {
            if !deck.contains(code) {
                return Err(DeckError::CardNotInDeck);
            }
            let in_card = count_copies(f, &code.decode(deck.graph_mode()), mode);
            Ok(total - in_card)
        }
    }
}

fn kelly_host_count(f: &Digraph, deck: &Deck, mode: CountMode) -> Result<usize, DeckError> {
    let mut sum = 0usize;
    for code in deck.cards() {
        sum += count_copies(f, &code.decode(deck.graph_mode()), mode);
    }
    let div = deck.host_n() - f.order();
    if sum % div != 0 {
        return Err(DeckError::NonIntegralKelly { sum, div });
    }
    Ok(sum / div)
}

/// `(unpaired arc count, biarc count)` of the host, recovered from the deck
/// by induced Kelly counts of the two 2-vertex patterns.
pub fn arc_census(deck: &Deck) -> Result<(usize, usize), DeckError> {
    if deck.host_n() < 3 {
        return Err(DeckError::HostOrderTooSmall { need: 3, got: deck.host_n() });
    }
    let single = Digraph::build(2, &[(0, 1)], false).unwrap();
    let biarc = Digraph::build(2, &[(0, 1), (1, 0)], false).unwrap();
    let unpaired = kelly_count(&single, deck, CountMode::Induced, None)?;
    let biarcs = kelly_count(&biarc, deck, CountMode::Induced, None)?;
    Ok((unpaired, biarcs))
}
