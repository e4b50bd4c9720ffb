//! Theorem-level checkers: S-isomorphism, the pasted-isomorphically
//! dichotomy, the da-reconstructibility certifier, and the pair
//! classification report.

use thiserror::Error;

use crate::canon::{are_isomorphic, canonical_form, CanonCode};
use crate::deck::{same_deck, Dadeck, Deck, Flavor};
use crate::digraph::Digraph;
use crate::params::{da_pair_invariants, dacard_ndt_profile, DA_INVARIANT_NAMES};
use crate::pasting::{
    enumerate_pastings, pasted_isomorphically, unique_dapasting, Alignment, DeckRef, Pasting,
    PastingCard, PastingError, UniquePasting,
};

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("vertex counts differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("hosts do not share a {0} deck")]
    DeckMismatch(Flavor),
    #[error("dichotomy violated in dacard flavor: mixed table on a dadeck-equal pair")]
    DichotomyViolation(Box<DichotomyVerdict>),
    #[error("certifier hypotheses held but the dapastings of the bioriented dacards split into {0} classes")]
    CertifierCrossCheckFailed(usize),
    #[error(transparent)]
    Pasting(#[from] PastingError),
    #[error(transparent)]
    Deck(#[from] crate::deck::DeckError),
}

/// Witness that two digraphs differ only by reversing one unpaired arc:
/// `f + uv` is isomorphic to the first and `f + vu` to the second.
#[derive(Debug, Clone)]
pub struct SIsoWitness {
    pub f: Digraph,
    pub u: usize,
    pub v: usize,
}

#[derive(Debug, Clone)]
pub enum SIsomorphism {
    Isomorphic,
    Witness(SIsoWitness),
    None,
}

impl SIsomorphism {
    pub fn holds(&self) -> bool {
        !matches!(self, SIsomorphism::None)
    }
}

/// S-isomorphism test: isomorphic, or related by one arc reversal.
pub fn s_isomorphism(d: &Digraph, e: &Digraph) -> Result<SIsomorphism, AnalysisError> {
    if d.order() != e.order() {
        return Err(AnalysisError::OrderMismatch(d.order(), e.order()));
    }
    if are_isomorphic(d, e) {
        return Ok(SIsomorphism::Isomorphic);
    }
    for (u, v) in d.unpaired_arcs().collect::<Vec<_>>() {
        let f = d.remove_arcs_between(u, v);
        if are_isomorphic(&f.add_arc(v, u), e) {
            return Ok(SIsomorphism::Witness(SIsoWitness { f, u, v }));
        }
    }
    Ok(SIsomorphism::None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum DichotomyOutcome {
    AllPairs,
    NoPairs,
}

/// Per card-pair table of the pasted-isomorphically relation between two
/// deck-equal hosts.
#[derive(Debug, Clone)]
pub struct DichotomyVerdict {
    pub flavor: Flavor,
    /// One row per unordered pair of distinct-vertex cards, with the
    /// pasted-isomorphically outcome.
    pub table: Vec<((PastingCard, PastingCard), bool)>,
    /// Constant table value, when the table is constant.
    pub verdict: Option<DichotomyOutcome>,
    pub isomorphic: bool,
    /// Set when the scan stopped at the first true entry.
    pub fast_exit: bool,
}

/// Unordered pairs of cards of a common deck obtained by deleting distinct
/// vertices, deduplicated by value.
fn distinct_vertex_card_pairs(host: &Digraph, flavor: Flavor) -> Vec<(PastingCard, PastingCard)> {
    let n = host.order();
    let card_at = |v: usize| -> PastingCard {
        let code = canonical_form(&host.delete_vertex(v)).code;
        match flavor {
            Flavor::Card => PastingCard::card(code),
            Flavor::Dacard => PastingCard::dacard(code, host.degree_triple(v)),
        }
    };
    let cards: Vec<PastingCard> = (0..n).map(card_at).collect();
    let mut pairs: Vec<(PastingCard, PastingCard)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut pair = (cards[i].clone(), cards[j].clone());
            if pair.1 < pair.0 {
                std::mem::swap(&mut pair.0, &mut pair.1);
            }
            if !pairs.contains(&pair) {
                pairs.push(pair);
            }
        }
    }
    pairs.sort_unstable();
    pairs
}

/// Evaluates pasted-isomorphically for every pair of distinct-vertex cards
/// in the common deck. In dacard flavor the all-or-nothing dichotomy and
/// its agreement with isomorphy are asserted; a violation is reported as an
/// error rather than patched over. In card flavor the table is reported as
/// is. With `fast` set the scan stops at the first true entry.
pub fn iso_characterization(
    g: &Digraph,
    h: &Digraph,
    flavor: Flavor,
    fast: bool,
) -> Result<DichotomyVerdict, AnalysisError> {
    if !same_deck(g, h, flavor) {
        return Err(AnalysisError::DeckMismatch(flavor));
    }
    let reference = DeckRef::of(g, flavor)?;
    let mut table = Vec::new();
    let mut fast_exit = false;
    for (a, b) in distinct_vertex_card_pairs(g, flavor) {
        let hit = pasted_isomorphically(&a, &b, &reference, g, h)?.is_some();
        table.push(((a, b), hit));
        if fast && hit {
            fast_exit = true;
            break;
        }
    }
    let constant = table.iter().all(|(_, v)| *v) || table.iter().all(|(_, v)| !*v);
    let verdict = if fast_exit {
        Some(DichotomyOutcome::AllPairs)
    } else if constant && !table.is_empty() {
        Some(if table[0].1 { DichotomyOutcome::AllPairs } else { DichotomyOutcome::NoPairs })
    } else {
        None
    };
    let isomorphic = are_isomorphic(g, h);
    let result = DichotomyVerdict { flavor, table, verdict, isomorphic, fast_exit };
    if flavor == Flavor::Dacard {
        let dichotomy_ok = result.fast_exit || result.verdict.is_some();
        let matches_isomorphy = match result.verdict {
            Some(DichotomyOutcome::AllPairs) => result.isomorphic,
            Some(DichotomyOutcome::NoPairs) => !result.isomorphic,
            None => false,
        };
        if !dichotomy_ok || !matches_isomorphy {
            return Err(AnalysisError::DichotomyViolation(Box::new(result)));
        }
    }
    Ok(result)
}

/// Certificate that a digraph is determined by its dadeck: a card pair of
/// the underlying graph with no isomorphic card outside the pair and a
/// unique pasting, plus the cross-check that the bioriented dacards paste
/// uniquely up to labeled isomorphism.
#[derive(Debug, Clone)]
pub struct DaCertificate {
    pub card_a: CanonCode,
    pub card_b: CanonCode,
    pub vertex_a: usize,
    pub vertex_b: usize,
    pub alignment: Alignment,
    /// Number of labeled-isomorphism classes of dapastings of the
    /// bioriented dacards; 1 after a successful cross-check.
    pub dapasting_classes: usize,
}

/// Searches card pairs of the underlying graph in canonical code order and
/// certifies the first pair satisfying both hypotheses. Absence of a
/// certificate proves nothing.
pub fn certify_da_reconstructible(d: &Digraph) -> Result<Option<DaCertificate>, AnalysisError> {
    let u_graph = d.underlying_graph();
    let n = u_graph.order();
    if n < 2 {
        return Ok(None);
    }
    let deck = Deck::of(&u_graph)?;
    let reference = DeckRef::Card(deck.clone());
    let cards: Vec<CanonCode> = (0..n)
        .map(|v| canonical_form(&u_graph.delete_vertex(v)).code)
        .collect();
    let count_of = |code: &CanonCode| cards.iter().filter(|c| *c == code).count();

    let mut candidates: Vec<(CanonCode, CanonCode, usize, usize)> = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            let (mut a, mut b) = (cards[x].clone(), cards[y].clone());
            let (mut vx, mut vy) = (x, y);
            if b < a {
                std::mem::swap(&mut a, &mut b);
                std::mem::swap(&mut vx, &mut vy);
            }
            // hypothesis (i): no card outside the multiset {A, B} is
            // isomorphic to a member of it
            let ok = if a == b {
                count_of(&a) == 2
            } else {
                count_of(&a) == 1 && count_of(&b) == 1
            };
            if ok && !candidates.iter().any(|(ca, cb, _, _)| *ca == a && *cb == b) {
                candidates.push((a, b, vx, vy));
            }
        }
    }
    candidates.sort_unstable();

    for (a_code, b_code, vx, vy) in candidates {
        let a = PastingCard::card(a_code.clone());
        let b = PastingCard::card(b_code.clone());
        let unique = match unique_dapasting(&a, &b, &reference) {
            Ok(UniquePasting::Unique(al)) => al,
            Ok(UniquePasting::Ambiguous(_)) => continue,
            Err(PastingError::NoValidPasting) => continue,
            // hosts too small for degree labels cannot certify
            Err(PastingError::GraphHostTooSmall) => return Ok(None),
            Err(e) => return Err(e.into()),
        };
        // cross-check: all dapastings of the bioriented dacards are
        // pairwise labeled-isomorphic
        let dd = Dadeck::of(d)?;
        let oa = PastingCard::dacard(
            canonical_form(&d.delete_vertex(vx)).code,
            d.degree_triple(vx),
        );
        let ob = PastingCard::dacard(
            canonical_form(&d.delete_vertex(vy)).code,
            d.degree_triple(vy),
        );
        let classes = enumerate_pastings(&oa, &ob, &DeckRef::Dacard(dd))?.len();
        if classes != 1 {
            return Err(AnalysisError::CertifierCrossCheckFailed(classes));
        }
        return Ok(Some(DaCertificate {
            card_a: a_code,
            card_b: b_code,
            vertex_a: vx,
            vertex_b: vy,
            alignment: unique,
            dapasting_classes: classes,
        }));
    }
    Ok(None)
}

/// Full classification of a pair of equal-order digraphs.
#[derive(Debug, Clone)]
pub struct PairReport {
    pub hypomorphic: bool,
    pub da_hypomorphic: bool,
    pub isomorphic: bool,
    pub s_isomorphic: bool,
    /// A card pair of the common deck pasted isomorphically in both hosts,
    /// with the shared pasting.
    pub iso_pasted_card_pair: Option<(PastingCard, PastingCard, Pasting)>,
    /// Name of the first invariant separating the pair when it is
    /// hypomorphic but not da-hypomorphic.
    pub distinguishing_da_invariant: Option<String>,
}

pub fn pair_report(d: &Digraph, e: &Digraph) -> Result<PairReport, AnalysisError> {
    if d.order() != e.order() {
        return Err(AnalysisError::OrderMismatch(d.order(), e.order()));
    }
    let hypomorphic = d.order() >= 2 && same_deck(d, e, Flavor::Card);
    let da_hypomorphic = d.order() >= 2 && same_deck(d, e, Flavor::Dacard);
    let isomorphic = are_isomorphic(d, e);
    let s_isomorphic = s_isomorphism(d, e)?.holds();

    let mut iso_pasted = None;
    if hypomorphic {
        let reference = DeckRef::Card(Deck::of(d)?);
        for (a, b) in distinct_vertex_card_pairs(d, Flavor::Card) {
            if let Some(p) = pasted_isomorphically(&a, &b, &reference, d, e)? {
                iso_pasted = Some((a, b, p));
                break;
            }
        }
    }

    let mut distinguishing = None;
    if hypomorphic && !da_hypomorphic {
        let inv_d = da_pair_invariants(d);
        let inv_e = da_pair_invariants(e);
        let collections: [(&str, bool); 6] = [
            (DA_INVARIANT_NAMES[0], inv_d.tail_triple_head_second != inv_e.tail_triple_head_second),
            (DA_INVARIANT_NAMES[1], inv_d.tail_first_head_triple != inv_e.tail_first_head_triple),
            (DA_INVARIANT_NAMES[2], inv_d.tail_first_head_second != inv_e.tail_first_head_second),
            (DA_INVARIANT_NAMES[3], inv_d.tail_triple_head_indegree != inv_e.tail_triple_head_indegree),
            (DA_INVARIANT_NAMES[4], inv_d.tail_outdegree_head_triple != inv_e.tail_outdegree_head_triple),
            (DA_INVARIANT_NAMES[5], inv_d.vertex_triple_ndq != inv_e.vertex_triple_ndq),
        ];
        distinguishing = collections
            .iter()
            .find(|(_, differs)| *differs)
            .map(|(name, _)| name.to_string());
        if distinguishing.is_none() && dacard_ndt_profile(d) != dacard_ndt_profile(e) {
            distinguishing = Some(DA_INVARIANT_NAMES[6].to_string());
        }
    }

    Ok(PairReport {
        hypomorphic,
        da_hypomorphic,
        isomorphic,
        s_isomorphic,
        iso_pasted_card_pair: iso_pasted,
        distinguishing_da_invariant: distinguishing,
    })
}

/// The two hosts admit isomorphic completions through a shared pasting
/// while being non-isomorphic; used by the search-module classifier.
pub fn has_iso_pasted_pair(d: &Digraph, e: &Digraph) -> Result<bool, AnalysisError> {
    Ok(pair_report(d, e)?.iso_pasted_card_pair.is_some())
}

/// External-set-preserving isomorphism: completions `c1`, `c2` with
/// external pairs `e1`, `e2` admit an isomorphism carrying one external
/// set to the other. Tested by comparing canonical forms with the
/// externals marked by one shared color.
pub fn completions_externally_isomorphic(
    c1: &Digraph,
    e1: (usize, usize),
    c2: &Digraph,
    e2: (usize, usize),
) -> bool {
    if c1.order() != c2.order() {
        return false;
    }
    crate::canon::canonical_rows_marked(c1, e1) == crate::canon::canonical_rows_marked(c2, e2)
}
