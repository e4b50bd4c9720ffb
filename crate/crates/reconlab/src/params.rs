//! Vertex parameters recovered from a card plus the deck, neighbor degree
//! profiles, and the dacard route to the neighborhood degree quintuple.
//!
//! Every from-deck computation here has a direct counterpart computed on
//! the host; the test suites treat the direct value as ground truth and the
//! from-deck value as the claim under test.

use thiserror::Error;

use crate::canon::CanonCode;
use crate::deck::{Dadeck, Deck, DeckError};
use crate::digraph::{DegreeTriple, Digraph};
use crate::kelly::{kelly_count, CountMode};

/// Neighborhood degree triple of a vertex: degree triples of its
/// out-neighbors, in-neighbors and strong neighbors, each sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ndt {
    pub out: Vec<DegreeTriple>,
    pub inn: Vec<DegreeTriple>,
    pub strong: Vec<DegreeTriple>,
}

/// Neighborhood degree quintuple: csdon and cidon run over out-neighbors
/// (second degrees, indegrees), cfdin and codin over in-neighbors (first
/// degrees, outdegrees), ctdsn over strong neighbors (third degrees). All
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ndq {
    pub csdon: Vec<usize>,
    pub cidon: Vec<usize>,
    pub cfdin: Vec<usize>,
    pub codin: Vec<usize>,
    pub ctdsn: Vec<usize>,
}

/// Direct per-vertex profiles.
pub fn neighbor_profiles(d: &Digraph, v: usize) -> (Ndt, Ndq) {
    let (out, inn, strong) = d.neighbor_classes(v);
    let t = |w: &usize| d.degree_triple(*w);
    let mut ndt = Ndt {
        out: out.iter().map(t).collect(),
        inn: inn.iter().map(t).collect(),
        strong: strong.iter().map(t).collect(),
    };
    ndt.out.sort_unstable();
    ndt.inn.sort_unstable();
    ndt.strong.sort_unstable();
    let mut ndq = Ndq {
        csdon: out.iter().map(|&w| d.degree_triple(w).second()).collect(),
        cidon: out.iter().map(|&w| d.degree_triple(w).indegree()).collect(),
        cfdin: inn.iter().map(|&w| d.degree_triple(w).first()).collect(),
        codin: inn.iter().map(|&w| d.degree_triple(w).outdegree()).collect(),
        ctdsn: strong.iter().map(|&w| d.degree_triple(w).third()).collect(),
    };
    ndq.csdon.sort_unstable();
    ndq.cidon.sort_unstable();
    ndq.cfdin.sort_unstable();
    ndq.codin.sort_unstable();
    ndq.ctdsn.sort_unstable();
    (ndt, ndq)
}

/// `ip(2, G, v)`: induced paths of length two starting at `v`, or with `w`
/// given, induced `v`-`w` paths of length two. Graph mode only.
pub fn induced_path2_counts(
    g: &Digraph,
    v: usize,
    w: Option<usize>,
) -> Result<usize, DeckError> {
    if !g.is_graph_mode() {
        return Err(DeckError::NotGraphMode);
    }
    let n = g.order();
    match w {
        None => {
            let mut count = 0;
            for x in 0..n {
                if x == v || !g.has_arc(v, x) {
                    continue;
                }
                for y in 0..n {
                    if y == v || y == x {
                        continue;
                    }
                    if g.has_arc(x, y) && !g.has_arc(v, y) {
                        count += 1;
                    }
                }
            }
            Ok(count)
        }
        Some(w) => {
            if v == w || g.has_arc(v, w) {
                return Ok(0);
            }
            Ok((0..n)
                .filter(|&x| x != v && x != w && g.has_arc(v, x) && g.has_arc(x, w))
                .count())
        }
    }
}

/// Star orbit counts for the star on `m` vertices: copies with `v` at the
/// center and copies with `v` among the ends.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct StarCounts {
    pub m: usize,
    pub center: usize,
    pub ends: usize,
}

/// Everything recoverable about the deleted vertex from one card plus the
/// deck: split degree always; degree, neighborhood degree sequence, star
/// orbit counts and `ip(2, G, v)` in graph mode; the full triple when the
/// degree pair is supplied externally.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexParams {
    pub split_degree: (usize, usize),
    pub degree: Option<usize>,
    pub neighborhood_degrees: Option<Vec<usize>>,
    pub star_counts: Vec<StarCounts>,
    pub induced_p2: Option<usize>,
    pub triple: Option<DegreeTriple>,
}

fn binomial(n: usize, r: usize) -> usize {
    if r > n {
        return 0;
    }
    let mut acc = 1usize;
    for k in 0..r {
        acc = acc * (n - k) / (k + 1);
    }
    acc
}

/// Host degree sequence of a graph deck: per card, the deleted vertex's
/// degree is the edge-count difference.
fn host_degrees(deck: &Deck) -> Result<Vec<usize>, DeckError> {
    let biarcs = crate::kelly::arc_census(deck)?.1;
    Ok(deck
        .cards()
        .iter()
        .map(|c| biarcs - c.decode(true).edge_count())
        .collect())
}

pub fn vertex_params_from_card(
    card: &CanonCode,
    deck: &Deck,
    given_dep: Option<(usize, usize)>,
) -> Result<VertexParams, DeckError> {
    if deck.host_n() < 3 {
        return Err(DeckError::HostOrderTooSmall { need: 3, got: deck.host_n() });
    }
    if card.order() + 1 != deck.host_n() {
        return Err(DeckError::CardSizeMismatch { card: card.order(), host: deck.host_n() });
    }
    if !deck.contains(card) {
        return Err(DeckError::CardNotInDeck);
    }
    let census = crate::kelly::arc_census(deck)?;
    let card_graph = card.decode(deck.graph_mode());
    let card_census = card_graph.census();
    let split_degree = (census.0 - card_census.0, census.1 - card_census.1);
    let triple = given_dep.map(|(od, id)| {
        let c = split_degree.1;
        DegreeTriple::new(od - c, id - c, c)
    });

    if !deck.graph_mode() {
        return Ok(VertexParams {
            split_degree,
            degree: None,
            neighborhood_degrees: None,
            star_counts: Vec::new(),
            induced_p2: None,
            triple,
        });
    }

    let n = deck.host_n();
    let degree = split_degree.1;
    let degrees = host_degrees(deck)?;
    let card_degrees: Vec<usize> = {
        let cg = &card_graph;
        cg.vertices().map(|w| cg.degree_triple(w).third()).collect()
    };
    // #neighbors of v with host degree k =
    //   #{w in card: deg < k} - #{w != v in host: deg < k}
    let mut nd = Vec::new();
    for k in 1..n {
        let in_card = card_degrees.iter().filter(|&&d| d < k).count();
        let in_host = degrees.iter().filter(|&&d| d < k).count() - usize::from(degree < k);
        for _ in 0..in_card.saturating_sub(in_host) {
            nd.push(k);
        }
    }

    let mut star_counts = Vec::new();
    for m in 3..n {
        let star = star_graph(m);
        let at_v = kelly_count(&star, deck, CountMode::Subgraph, Some(card))?;
        let center = binomial(degree, m - 1);
        star_counts.push(StarCounts { m, center, ends: at_v - center });
    }

    // ip(2,G,v) = S(K_{1,2},G,v,theta2) - 2 S(K3,G,v); theta2 equals the
    // sum of (deg - 1) over v's neighbors
    let induced_p2 = {
        let theta2 = if n > 3 {
            star_counts[0].ends
        } else {
            nd.iter().map(|&k| k - 1).sum()
        };
        let k3_at_v = if n > 3 {
            let k3 = Digraph::build(3, &[(0, 1), (1, 2), (2, 0)], true).unwrap();
            kelly_count(&k3, deck, CountMode::Subgraph, Some(card))?
        } else {
            // a 3-vertex host has a triangle at v exactly when every card
            // is a single edge
            usize::from(deck.cards().iter().all(|c| c.decode(true).edge_count() == 1))
        };
        Some(theta2 - 2 * k3_at_v)
    };

    Ok(VertexParams {
        split_degree,
        degree: Some(degree),
        neighborhood_degrees: Some(nd),
        star_counts,
        induced_p2,
        triple,
    })
}

fn star_graph(m: usize) -> Digraph {
    let edges: Vec<(usize, usize)> = (1..m).map(|i| (0, i)).collect();
    Digraph::build(m, &edges, true).unwrap()
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NdqError {
    #[error("host order {0} too small for threshold data")]
    HostTooSmall(usize),
    #[error("dacard not present in the dadeck")]
    DacardNotInDadeck,
    #[error("no neighbor-class assignment is consistent with the dadeck")]
    Inconsistent,
    #[error("quintuple underdetermined: {0} consistent candidates")]
    Underdetermined(usize),
}

/// The deleted vertex's quintuple reconstructed from its dacard and the
/// dadeck alone.
///
/// Every card vertex carried its host triple minus one of `0`, `(1,0,0)`,
/// `(0,1,0)`, `(0,0,1)` according to its adjacency with the deleted vertex.
/// The reconstruction enumerates all group-level assignments of card
/// vertices to the four classes that transport the card's triple multiset
/// onto the host's (known from the attached triples) with the class sizes
/// prescribed by the dacard's triple. When every consistent assignment
/// yields the same quintuple it is returned; when the instance is
/// underdetermined that is reported rather than guessed away.
pub fn ndq_from_dacard(
    card: &CanonCode,
    dt: DegreeTriple,
    dadeck: &Dadeck,
) -> Result<Ndq, NdqError> {
    if dadeck.host_n() < 3 {
        return Err(NdqError::HostTooSmall(dadeck.host_n()));
    }
    if !dadeck.contains(card, dt) {
        return Err(NdqError::DacardNotInDadeck);
    }
    let card_graph = card.decode(dadeck.graph_mode());
    let card_triples: Vec<DegreeTriple> =
        card_graph.vertices().map(|w| card_graph.degree_triple(w)).collect();

    // remaining host triples, as sorted multiset
    let mut host = dadeck.triple_multiset();
    let pos = host.binary_search(&dt).expect("triple present");
    host.remove(pos);

    let mut groups: Vec<(DegreeTriple, usize)> = Vec::new();
    {
        let mut ts = card_triples.clone();
        ts.sort_unstable();
        for t in ts {
            match groups.last_mut() {
                Some((prev, m)) if *prev == t => *m += 1,
                _ => groups.push((t, 1)),
            }
        }
    }

    let mut remaining = Multiset::new(&host);
    let mut answers: Vec<Ndq> = Vec::new();
    let mut acc: Vec<(DegreeTriple, usize, usize, usize)> = Vec::new();
    assign(
        &groups,
        0,
        dt.a,
        dt.b,
        dt.c,
        &mut remaining,
        &mut acc,
        &mut answers,
    );
    answers.sort_unstable();
    answers.dedup();
    match answers.len() {
        0 => Err(NdqError::Inconsistent),
        1 => Ok(answers.pop().unwrap()),
        k => Err(NdqError::Underdetermined(k)),
    }
}

struct Multiset {
    items: Vec<(DegreeTriple, isize)>,
}

impl Multiset {
    fn new(sorted: &[DegreeTriple]) -> Multiset {
        let mut items: Vec<(DegreeTriple, isize)> = Vec::new();
        for &t in sorted {
            match items.last_mut() {
                Some((prev, m)) if *prev == t => *m += 1,
                _ => items.push((t, 1)),
            }
        }
        Multiset { items }
    }

    fn take(&mut self, t: DegreeTriple, k: usize) -> bool {
        if k == 0 {
            return true;
        }
        match self.items.binary_search_by_key(&t, |&(x, _)| x) {
            Ok(i) if self.items[i].1 >= k as isize => {
                self.items[i].1 -= k as isize;
                true
            }
            _ => false,
        }
    }

    fn put(&mut self, t: DegreeTriple, k: usize) {
        if k == 0 {
            return;
        }
        match self.items.binary_search_by_key(&t, |&(x, _)| x) {
            Ok(i) => self.items[i].1 += k as isize,
            Err(i) => self.items.insert(i, (t, k as isize)),
        }
    }

    fn is_empty(&self) -> bool {
        self.items.iter().all(|&(_, m)| m == 0)
    }
}

fn bump(t: DegreeTriple, which: usize) -> DegreeTriple {
    match which {
        0 => DegreeTriple::new(t.a + 1, t.b, t.c),
        1 => DegreeTriple::new(t.a, t.b + 1, t.c),
        _ => DegreeTriple::new(t.a, t.b, t.c + 1),
    }
}

#[allow(clippy::too_many_arguments)]
fn assign(
    groups: &[(DegreeTriple, usize)],
    i: usize,
    rem_out: usize,
    rem_in: usize,
    rem_strong: usize,
    remaining: &mut Multiset,
    acc: &mut Vec<(DegreeTriple, usize, usize, usize)>,
    answers: &mut Vec<Ndq>,
) {
    if i == groups.len() {
        if rem_out == 0 && rem_in == 0 && rem_strong == 0 && remaining.is_empty() {
            let mut ndq = Ndq {
                csdon: Vec::new(),
                cidon: Vec::new(),
                cfdin: Vec::new(),
                codin: Vec::new(),
                ctdsn: Vec::new(),
            };
            for &(t, n_out, n_in, n_str) in acc.iter() {
                // out-neighbor host triple: t + (0,1,0); in: t + (1,0,0); strong: t + (0,0,1)
                for _ in 0..n_out {
                    ndq.csdon.push(t.b + 1);
                    ndq.cidon.push(t.b + 1 + t.c);
                }
                for _ in 0..n_in {
                    ndq.cfdin.push(t.a + 1);
                    ndq.codin.push(t.a + 1 + t.c);
                }
                for _ in 0..n_str {
                    ndq.ctdsn.push(t.c + 1);
                }
            }
            ndq.csdon.sort_unstable();
            ndq.cidon.sort_unstable();
            ndq.cfdin.sort_unstable();
            ndq.codin.sort_unstable();
            ndq.ctdsn.sort_unstable();
            answers.push(ndq);
        }
        return;
    }
    let (t, size) = groups[i];
    for n_out in 0..=size.min(rem_out) {
        for n_in in 0..=(size - n_out).min(rem_in) {
            for n_str in 0..=(size - n_out - n_in).min(rem_strong) {
                let n_non = size - n_out - n_in - n_str;
                let moves = [
                    (bump(t, 1), n_out),
                    (bump(t, 0), n_in),
                    (bump(t, 2), n_str),
                    (t, n_non),
                ];
                let mut taken = 0;
                let mut ok = true;
                for &(target, k) in &moves {
                    if remaining.take(target, k) {
                        taken += 1;
                    } else {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    acc.push((t, n_out, n_in, n_str));
                    assign(
                        groups,
                        i + 1,
                        rem_out - n_out,
                        rem_in - n_in,
                        rem_strong - n_str,
                        remaining,
                        acc,
                        answers,
                    );
                    acc.pop();
                }
                for &(target, k) in moves.iter().take(taken) {
                    remaining.put(target, k);
                }
            }
        }
    }
}

/// The six da-reconstructible collections: five run over unpaired arcs
/// `v -> w`, pairing a statistic of the tail with one of the head; the
/// sixth collects `(dt(v), ndq(v))` over all vertices. All sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DaPairInvariants {
    pub tail_triple_head_second: Vec<(DegreeTriple, usize)>,
    pub tail_first_head_triple: Vec<(usize, DegreeTriple)>,
    pub tail_first_head_second: Vec<(usize, usize)>,
    pub tail_triple_head_indegree: Vec<(DegreeTriple, usize)>,
    pub tail_outdegree_head_triple: Vec<(usize, DegreeTriple)>,
    pub vertex_triple_ndq: Vec<(DegreeTriple, Ndq)>,
}

pub const DA_INVARIANT_NAMES: [&str; 7] = [
    "tail_triple_head_second",
    "tail_first_head_triple",
    "tail_first_head_second",
    "tail_triple_head_indegree",
    "tail_outdegree_head_triple",
    "vertex_triple_ndq",
    "dacard_ndt_profile",
];

pub fn da_pair_invariants(d: &Digraph) -> DaPairInvariants {
    let ts: Vec<DegreeTriple> = d.vertices().map(|v| d.degree_triple(v)).collect();
    let mut inv = DaPairInvariants {
        tail_triple_head_second: Vec::new(),
        tail_first_head_triple: Vec::new(),
        tail_first_head_second: Vec::new(),
        tail_triple_head_indegree: Vec::new(),
        tail_outdegree_head_triple: Vec::new(),
        vertex_triple_ndq: Vec::new(),
    };
    for (v, w) in d.unpaired_arcs() {
        inv.tail_triple_head_second.push((ts[v], ts[w].second()));
        inv.tail_first_head_triple.push((ts[v].first(), ts[w]));
        inv.tail_first_head_second.push((ts[v].first(), ts[w].second()));
        inv.tail_triple_head_indegree.push((ts[v], ts[w].indegree()));
        inv.tail_outdegree_head_triple.push((ts[v].outdegree(), ts[w]));
    }
    for v in d.vertices() {
        inv.vertex_triple_ndq.push((ts[v], neighbor_profiles(d, v).1));
    }
    inv.tail_triple_head_second.sort_unstable();
    inv.tail_first_head_triple.sort_unstable();
    inv.tail_first_head_second.sort_unstable();
    inv.tail_triple_head_indegree.sort_unstable();
    inv.tail_outdegree_head_triple.sort_unstable();
    inv.vertex_triple_ndq.sort_unstable();
    inv
}

/// Per-dacard profile used as the last-resort separator: for each vertex,
/// its triple paired with the sorted NDT collection of the card's vertices,
/// computed inside the card.
pub fn dacard_ndt_profile(d: &Digraph) -> Vec<(DegreeTriple, Vec<Ndt>)> {
    let mut out = Vec::new();
    for v in d.vertices() {
        let card = d.delete_vertex(v);
        let mut ndts: Vec<Ndt> =
            card.vertices().map(|w| neighbor_profiles(&card, w).0).collect();
        ndts.sort_unstable();
        out.push((d.degree_triple(v), ndts));
    }
    out.sort_unstable();
    out
}
