//! Pastings and dapastings of two cards as members of a reference deck.
//!
//! A pasting is a digraph with two distinguished non-adjacent external
//! vertices whose deletions yield the two cards, such that adding at most
//! one arc or biarc between the externals produces a host with the
//! reference deck. The reference is part of the pasting's identity: the
//! same body can be a pasting against one deck and not another.

use thiserror::Error;

use crate::canon::{all_isomorphisms, are_isomorphic, canonical_form, CanonCode};
use crate::deck::{Dadeck, Deck, Flavor};
use crate::digraph::{DegreeTriple, Digraph};
use crate::kelly::arc_census;
use crate::label::{Label, LabeledDigraph};
use crate::params::{induced_path2_counts, neighbor_profiles, Ndq};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PastingError {
    #[error("external vertices must be distinct")]
    SameVertex,
    #[error("external vertices must be non-adjacent in the body")]
    AdjacentExternals,
    #[error("graph-flavor degree labels need a host of order >= 3")]
    GraphHostTooSmall,
    #[error("card has {card} vertices, reference host has {host}")]
    CardSizeMismatch { card: usize, host: usize },
    #[error("dacard flavor requires degree triples on both cards")]
    MissingTriple,
    #[error("no valid pasting of the two cards against the reference")]
    NoValidPasting,
    #[error("host deck does not match the reference")]
    DeckMismatch,
    #[error("census mismatch against the reference: {0}")]
    InvalidAgainstRef(String),
    #[error("pasting has no completion with the reference deck")]
    NoCompletion,
    #[error("digraph is not a completion of the pasting")]
    NotACompletion,
    #[error(transparent)]
    Deck(#[from] crate::deck::DeckError),
}

/// Reference deck of a pasting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeckRef {
    Card(Deck),
    Dacard(Dadeck),
}

impl DeckRef {
    pub fn host_n(&self) -> usize {
        match self {
            DeckRef::Card(d) => d.host_n(),
            DeckRef::Dacard(d) => d.host_n(),
        }
    }

    pub fn graph_mode(&self) -> bool {
        match self {
            DeckRef::Card(d) => d.graph_mode(),
            DeckRef::Dacard(d) => d.graph_mode(),
        }
    }

    pub fn flavor(&self) -> Flavor {
        match self {
            DeckRef::Card(_) => Flavor::Card,
            DeckRef::Dacard(_) => Flavor::Dacard,
        }
    }

    pub fn of(host: &Digraph, flavor: Flavor) -> Result<DeckRef, crate::deck::DeckError> {
        Ok(match flavor {
            Flavor::Card => DeckRef::Card(Deck::of(host)?),
            Flavor::Dacard => DeckRef::Dacard(Dadeck::of(host)?),
        })
    }

    /// `(unpaired, biarc)` census of any host with this deck, when
    /// determinable: from the attached triples for dadecks, by Kelly counts
    /// for decks on hosts of order >= 3.
    fn census(&self) -> Option<(usize, usize)> {
        match self {
            DeckRef::Dacard(d) => {
                let ts = d.triple_multiset();
                let unpaired: usize = ts.iter().map(|t| t.a).sum();
                let biarc_ends: usize = ts.iter().map(|t| t.c).sum();
                Some((unpaired, biarc_ends / 2))
            }
            DeckRef::Card(d) => arc_census(d).ok(),
        }
    }

    fn matches(&self, host: &Digraph) -> bool {
        match self {
            DeckRef::Card(d) => Deck::of(host).as_ref() == Ok(d),
            DeckRef::Dacard(d) => Dadeck::of(host).as_ref() == Ok(d),
        }
    }
}

/// A card or dacard handed to the pasting machinery; `dt` is the deleted
/// vertex's triple and is required in dacard flavor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PastingCard {
    pub code: CanonCode,
    pub dt: Option<DegreeTriple>,
}

impl PastingCard {
    pub fn card(code: CanonCode) -> Self {
        PastingCard { code, dt: None }
    }

    pub fn dacard(code: CanonCode, dt: DegreeTriple) -> Self {
        PastingCard { code, dt: Some(dt) }
    }
}

/// Alignment of two cards: `psi[w]` is the vertex of B aligned with vertex
/// `w` of A; `psi[v_star] = u_star` by convention, and away from `v_star`
/// it restricts to an isomorphism from A - v_star to B - u_star.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Alignment {
    pub v_star: usize,
    pub u_star: usize,
    pub psi: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ArcPrescription {
    None,
    SingleUv,
    SingleVu,
    Biarc,
    SingleUnoriented,
}

#[derive(Debug, Clone)]
pub struct Pasting {
    body: LabeledDigraph,
    externals: (usize, usize),
    flavor: Flavor,
    reference: DeckRef,
    cards: (PastingCard, PastingCard),
    alignment: Option<Alignment>,
}

impl PartialEq for Pasting {
    fn eq(&self, other: &Self) -> bool {
        self.flavor == other.flavor
            && self.reference == other.reference
            && self.body.canonical_code() == other.body.canonical_code()
    }
}
impl Eq for Pasting {}

impl Pasting {
    pub fn body(&self) -> &LabeledDigraph {
        &self.body
    }

    /// `(u, v)`: deleting `u` recovers card A, deleting `v` recovers card B.
    pub fn externals(&self) -> (usize, usize) {
        self.externals
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn reference(&self) -> &DeckRef {
        &self.reference
    }

    pub fn cards(&self) -> &(PastingCard, PastingCard) {
        &self.cards
    }

    pub fn alignment(&self) -> Option<&Alignment> {
        self.alignment.as_ref()
    }

    pub fn labeled_code(&self) -> Vec<u8> {
        self.body.canonical_code()
    }

    /// Rebuilds a pasting from its serialized parts: the stripped body, the
    /// two externals with their labels, and the reference deck. The cards
    /// are recovered by deleting the externals; validity (some completion
    /// reaches the reference) is checked.
    pub fn from_parts(
        body: Digraph,
        externals: (usize, usize),
        labels: [(usize, Label); 2],
        reference: DeckRef,
    ) -> Result<Pasting, PastingError> {
        let (u, v) = externals;
        if u == v {
            return Err(PastingError::SameVertex);
        }
        let flavor = reference.flavor();
        let label_of = |x: usize| labels.iter().find(|(w, _)| *w == x).map(|(_, l)| *l);
        let (Some(lu), Some(lv)) = (label_of(u), label_of(v)) else {
            return Err(PastingError::InvalidAgainstRef(
                "label lines do not cover both externals".into(),
            ));
        };
        let card_of = |x: usize, label: Label| -> Result<PastingCard, PastingError> {
            let code = canonical_form(&body.delete_vertex(x)).code;
            match (flavor, label) {
                (Flavor::Dacard, Label::ETriple(t)) => Ok(PastingCard::dacard(code, t)),
                (Flavor::Dacard, _) => Err(PastingError::MissingTriple),
                (Flavor::Card, _) => Ok(PastingCard::card(code)),
            }
        };
        let a = card_of(u, lu)?;
        let b = card_of(v, lv)?;
        let labeled = LabeledDigraph::new(body, &[(u, lu), (v, lv)])
            .map_err(|_| PastingError::AdjacentExternals)?;
        let p = Pasting {
            body: labeled,
            externals,
            flavor,
            reference,
            cards: (a, b),
            alignment: None,
        };
        completions(&p)?;
        Ok(p)
    }
}

fn external_labels(
    a: &PastingCard,
    b: &PastingCard,
    reference: &DeckRef,
) -> Result<(Label, Label), PastingError> {
    match reference.flavor() {
        Flavor::Dacard => {
            let ta = a.dt.ok_or(PastingError::MissingTriple)?;
            let tb = b.dt.ok_or(PastingError::MissingTriple)?;
            Ok((Label::ETriple(ta), Label::ETriple(tb)))
        }
        Flavor::Card if reference.graph_mode() => {
            if reference.host_n() < 3 {
                return Err(PastingError::GraphHostTooSmall);
            }
            let edges = reference.census().ok_or(PastingError::GraphHostTooSmall)?.1;
            let da = edges - a.code.decode(true).edge_count();
            let db = edges - b.code.decode(true).edge_count();
            Ok((Label::EDegree(da), Label::EDegree(db)))
        }
        Flavor::Card => Ok((Label::E, Label::E)),
    }
}

/// The pasting obtained from a host by deleting all arcs between `u` and
/// `v` and labeling them per the flavor. The host is a completion by
/// construction.
pub fn pasting_from_host(
    host: &Digraph,
    u: usize,
    v: usize,
    flavor: Flavor,
) -> Result<Pasting, PastingError> {
    if u == v {
        return Err(PastingError::SameVertex);
    }
    let reference = DeckRef::of(host, flavor)?;
    let a = match flavor {
        Flavor::Card => PastingCard::card(canonical_form(&host.delete_vertex(u)).code),
        Flavor::Dacard => PastingCard::dacard(
            canonical_form(&host.delete_vertex(u)).code,
            host.degree_triple(u),
        ),
    };
    let b = match flavor {
        Flavor::Card => PastingCard::card(canonical_form(&host.delete_vertex(v)).code),
        Flavor::Dacard => PastingCard::dacard(
            canonical_form(&host.delete_vertex(v)).code,
            host.degree_triple(v),
        ),
    };
    let (la, lb) = external_labels(&a, &b, &reference)?;
    let stripped = host.remove_arcs_between(u, v);
    let body = LabeledDigraph::new(stripped, &[(u, la), (v, lb)])
        .expect("externals are non-adjacent after stripping");
    Ok(Pasting { body, externals: (u, v), flavor, reference, cards: (a, b), alignment: None })
}

/// Completion candidates allowed by the flavor and mode, paired with the
/// census delta they realize.
fn completion_family(body: &Digraph, u: usize, v: usize, graph_mode: bool) -> Vec<Digraph> {
    if graph_mode {
        vec![body.clone(), body.add_biarc(u, v)]
    } else {
        vec![
            body.clone(),
            body.add_arc(u, v),
            body.add_arc(v, u),
            body.add_biarc(u, v),
        ]
    }
}

fn is_valid_completion(y: &Digraph, u: usize, v: usize, p: &PastingRequest) -> bool {
    if p.reference.flavor() == Flavor::Dacard {
        let (Some(ta), Some(tb)) = (p.a.dt, p.b.dt) else {
            return false;
        };
        if y.degree_triple(u) != ta || y.degree_triple(v) != tb {
            return false;
        }
    }
    p.reference.matches(y)
}

struct PastingRequest<'r> {
    a: &'r PastingCard,
    b: &'r PastingCard,
    reference: &'r DeckRef,
}

/// All pastings of A and B as members of the reference, pairwise
/// non-labeled-isomorphic, in a deterministic order. An empty result means
/// the two cards cannot be co-realized against the reference.
pub fn enumerate_pastings(
    a: &PastingCard,
    b: &PastingCard,
    reference: &DeckRef,
) -> Result<Vec<Pasting>, PastingError> {
    Ok(enumerate_alignments(a, b, reference)?.0)
}

/// Valid alignment triples and the deduplicated pastings they realize.
pub fn enumerate_alignments(
    a: &PastingCard,
    b: &PastingCard,
    reference: &DeckRef,
) -> Result<(Vec<Pasting>, Vec<Alignment>), PastingError> {
    let host_n = reference.host_n();
    for card in [a, b] {
        if card.code.order() + 1 != host_n {
            return Err(PastingError::CardSizeMismatch {
                card: card.code.order(),
                host: host_n,
            });
        }
    }
    if reference.flavor() == Flavor::Dacard && (a.dt.is_none() || b.dt.is_none()) {
        return Err(PastingError::MissingTriple);
    }
    let graph_mode = reference.graph_mode();
    let big_a = a.code.decode(graph_mode);
    let big_b = b.code.decode(graph_mode);
    let n_card = big_a.order();
    let (la, lb) = external_labels(a, b, reference)?;
    let ref_census = reference.census();
    let request = PastingRequest { a, b, reference };

    let mut found: Vec<Pasting> = Vec::new();
    let mut codes: Vec<Vec<u8>> = Vec::new();
    let mut alignments: Vec<Alignment> = Vec::new();

    for v_star in 0..n_card {
        let a_rem = big_a.delete_vertex(v_star);
        for u_star in 0..n_card {
            let b_rem = big_b.delete_vertex(u_star);
            for psi in all_isomorphisms(&a_rem, &b_rem) {
                // body: vertices of A plus the new external u = n_card;
                // v = v_star; u's arcs copied from u_star through psi
                let mut arcs: Vec<(usize, usize)> = big_a.arcs().collect();
                let u_new = n_card;
                for w in 0..n_card {
                    if w == v_star {
                        continue;
                    }
                    let w_rem = w - usize::from(w > v_star);
                    let b_img = psi[w_rem] + usize::from(psi[w_rem] >= u_star);
                    if big_b.has_arc(u_star, b_img) {
                        arcs.push((u_new, w));
                    }
                    if big_b.has_arc(b_img, u_star) {
                        arcs.push((w, u_new));
                    }
                }
                let body = Digraph::build(n_card + 1, &arcs, false)
                    .expect("pasting body construction")
                    .with_graph_mode(graph_mode && arcs_symmetric(&arcs));
                if graph_mode && !body.is_graph_mode() {
                    continue;
                }
                if let Some((ru, rb)) = ref_census {
                    let (bu, bb) = body.census();
                    let delta = (ru as isize - bu as isize, rb as isize - bb as isize);
                    if !matches!(delta, (0, 0) | (1, 0) | (0, 1)) {
                        continue;
                    }
                }
                let valid = completion_family(&body, u_new, v_star, graph_mode)
                    .iter()
                    .any(|y| is_valid_completion(y, u_new, v_star, &request));
                if !valid {
                    continue;
                }
                let mut psi_full = vec![0usize; n_card];
                psi_full[v_star] = u_star;
                for w in 0..n_card {
                    if w != v_star {
                        let w_rem = w - usize::from(w > v_star);
                        psi_full[w] = psi[w_rem] + usize::from(psi[w_rem] >= u_star);
                    }
                }
                let alignment = Alignment { v_star, u_star, psi: psi_full };
                alignments.push(alignment.clone());
                let labeled =
                    LabeledDigraph::new(body, &[(u_new, la), (v_star, lb)])
                        .expect("externals non-adjacent by construction");
                let code = labeled.canonical_code();
                if !codes.contains(&code) {
                    codes.push(code);
                    found.push(Pasting {
                        body: labeled,
                        externals: (u_new, v_star),
                        flavor: reference.flavor(),
                        reference: reference.clone(),
                        cards: (a.clone(), b.clone()),
                        alignment: Some(alignment),
                    });
                }
            }
        }
    }
    found.sort_by(|p, q| p.labeled_code().cmp(&q.labeled_code()));
    alignments.sort_unstable();
    alignments.dedup();
    Ok((found, alignments))
}

fn arcs_symmetric(arcs: &[(usize, usize)]) -> bool {
    arcs.iter().all(|&(i, j)| arcs.contains(&(j, i)))
}

/// The forced number and type of arcs to add between the externals to reach
/// a completion, read off the census difference (and, in dacard flavor, the
/// external triple deltas).
pub fn completion_requirements(p: &Pasting) -> Result<ArcPrescription, PastingError> {
    let presc = completion_requirements_raw(p)?;
    // in graph mode the symmetric pair is one edge
    if p.reference.graph_mode() && presc == ArcPrescription::Biarc {
        return Ok(ArcPrescription::SingleUv);
    }
    Ok(presc)
}

fn completion_requirements_raw(p: &Pasting) -> Result<ArcPrescription, PastingError> {
    let (u, v) = p.externals;
    let body = p.body.base();
    let (bu, bb) = body.census();
    let census = p.reference.census();
    if p.flavor == Flavor::Dacard {
        let ta = p.cards.0.dt.ok_or(PastingError::MissingTriple)?;
        let tb = p.cards.1.dt.ok_or(PastingError::MissingTriple)?;
        let pu = body.degree_triple(u);
        let pv = body.degree_triple(v);
        let du = triple_delta(ta, pu);
        let dv = triple_delta(tb, pv);
        let presc = match (du, dv) {
            (Some((0, 0, 0)), Some((0, 0, 0))) => ArcPrescription::None,
            (Some((1, 0, 0)), Some((0, 1, 0))) => ArcPrescription::SingleUv,
            (Some((0, 1, 0)), Some((1, 0, 0))) => ArcPrescription::SingleVu,
            (Some((0, 0, 1)), Some((0, 0, 1))) => ArcPrescription::Biarc,
            _ => {
                return Err(PastingError::InvalidAgainstRef(format!(
                    "external triples {ta} and {tb} unreachable from {pu} and {pv}"
                )))
            }
        };
        if let Some((ru, rb)) = census {
            let expect = match presc {
                ArcPrescription::None => (0, 0),
                ArcPrescription::Biarc => (0, 1),
                _ => (1, 0),
            };
            if (ru as isize - bu as isize, rb as isize - bb as isize)
                != (expect.0, expect.1)
            {
                return Err(PastingError::InvalidAgainstRef(format!(
                    "census ({ru},{rb}) vs body ({bu},{bb}) contradicts triple deltas"
                )));
            }
        }
        return Ok(presc);
    }
    let (ru, rb) = census.ok_or_else(|| {
        PastingError::InvalidAgainstRef("census not determinable from reference".into())
    })?;
    match (ru as isize - bu as isize, rb as isize - bb as isize) {
        (0, 0) => Ok(ArcPrescription::None),
        (0, 1) => Ok(ArcPrescription::Biarc),
        (1, 0) => Ok(ArcPrescription::SingleUnoriented),
        (du, db) => Err(PastingError::InvalidAgainstRef(format!(
            "census delta ({du},{db}) cannot be realized between two externals"
        ))),
    }
}

fn triple_delta(target: DegreeTriple, from: DegreeTriple) -> Option<(isize, isize, isize)> {
    let d = (
        target.a as isize - from.a as isize,
        target.b as isize - from.b as isize,
        target.c as isize - from.c as isize,
    );
    matches!(d, (0, 0, 0) | (1, 0, 0) | (0, 1, 0) | (0, 0, 1)).then_some(d)
}

/// All completions of the pasting, up to isomorphism, in canonical order.
/// Dacard-flavor pastings are expected to yield exactly one; that is
/// asserted by the test suites, not assumed here.
pub fn completions(p: &Pasting) -> Result<Vec<Digraph>, PastingError> {
    let (u, v) = p.externals;
    let request = PastingRequest { a: &p.cards.0, b: &p.cards.1, reference: &p.reference };
    let mut seen: Vec<CanonCode> = Vec::new();
    let mut out: Vec<Digraph> = Vec::new();
    for y in completion_family(p.body.base(), u, v, p.reference.graph_mode()) {
        if is_valid_completion(&y, u, v, &request) {
            let code = canonical_form(&y).code;
            if !seen.contains(&code) {
                seen.push(code);
                out.push(y);
            }
        }
    }
    if out.is_empty() {
        return Err(PastingError::NoCompletion);
    }
    let mut pairs: Vec<(CanonCode, Digraph)> = seen.into_iter().zip(out).collect();
    pairs.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(pairs.into_iter().map(|(_, g)| g).collect())
}

/// Whether `h` is a completion of the pasting, up to isomorphism.
pub fn is_pasting_in(p: &Pasting, h: &Digraph) -> bool {
    completions(p)
        .map(|cs| cs.iter().any(|c| are_isomorphic(c, h)))
        .unwrap_or(false)
}

/// Whether the card pair is pasted isomorphically in the two hosts: some
/// pasting of (A, B) against the reference is a pasting in both. Since the
/// enumeration is deduplicated by labeled isomorphism, a shared member is
/// exactly a labeled-isomorphic pair of pastings, one in each host.
pub fn pasted_isomorphically(
    a: &PastingCard,
    b: &PastingCard,
    reference: &DeckRef,
    g: &Digraph,
    h: &Digraph,
) -> Result<Option<Pasting>, PastingError> {
    if !reference.matches(g) || !reference.matches(h) {
        return Err(PastingError::DeckMismatch);
    }
    for p in enumerate_pastings(a, b, reference)? {
        if is_pasting_in(&p, g) && is_pasting_in(&p, h) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UniquePasting {
    /// Exactly one alignment triple realizes a valid pasting.
    Unique(Alignment),
    /// More than one triple survives.
    Ambiguous(usize),
}

/// Strict uniqueness of the alignment triple `(v_star, u_star, psi)` across
/// all valid pastings of the pair against the reference.
pub fn unique_dapasting(
    a: &PastingCard,
    b: &PastingCard,
    reference: &DeckRef,
) -> Result<UniquePasting, PastingError> {
    let (_, alignments) = enumerate_alignments(a, b, reference)?;
    match alignments.len() {
        0 => Err(PastingError::NoValidPasting),
        1 => Ok(UniquePasting::Unique(alignments.into_iter().next().unwrap())),
        k => Ok(UniquePasting::Ambiguous(k)),
    }
}

/// One verified identity in a pasting parameter report.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub holds: bool,
    pub detail: String,
}

/// Verification record for a pasting against one of its completions: the
/// triple-multiset identity, the external dt/ndq arithmetic for the four
/// adjacency cases, and in graph mode the edge-count/ip/triangle clauses.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PastingParameterReport {
    pub case: ArcPrescription,
    pub checks: Vec<IdentityCheck>,
    pub all_hold: bool,
}

fn remove_one(mult: &mut Vec<usize>, value: usize) -> bool {
    match mult.iter().position(|&x| x == value) {
        Some(i) => {
            mult.remove(i);
            true
        }
        None => false,
    }
}

fn predicted_external(
    completion: &Digraph,
    x: usize,
    other: usize,
) -> (DegreeTriple, Ndq) {
    let t = completion.degree_triple(x);
    let (_, mut q) = neighbor_profiles(completion, x);
    let to = completion.has_arc(x, other);
    let from = completion.has_arc(other, x);
    let ot = completion.degree_triple(other);
    let predicted_t = match (to, from) {
        (false, false) => t,
        (true, false) => DegreeTriple::new(t.a - 1, t.b, t.c),
        (false, true) => DegreeTriple::new(t.a, t.b - 1, t.c),
        (true, true) => DegreeTriple::new(t.a, t.b, t.c - 1),
    };
    match (to, from) {
        (false, false) => {}
        (true, false) => {
            // other was an out-neighbor of x
            assert!(remove_one(&mut q.csdon, ot.second()));
            assert!(remove_one(&mut q.cidon, ot.indegree()));
        }
        (false, true) => {
            assert!(remove_one(&mut q.cfdin, ot.first()));
            assert!(remove_one(&mut q.codin, ot.outdegree()));
        }
        (true, true) => {
            assert!(remove_one(&mut q.ctdsn, ot.third()));
        }
    }
    (predicted_t, q)
}

/// Verifies the pasting parameter identities against a completion host.
pub fn pasting_parameter_report(
    p: &Pasting,
    g: &Digraph,
) -> Result<PastingParameterReport, PastingError> {
    if !is_pasting_in(p, g) {
        return Err(PastingError::NotACompletion);
    }
    // work on the concrete completion isomorphic to g that contains the body
    let completion = completions(p)?
        .into_iter()
        .find(|c| are_isomorphic(c, g))
        .expect("is_pasting_in verified membership");
    let (u, v) = p.externals;
    let body = p.body.base();
    let mut checks: Vec<IdentityCheck> = Vec::new();

    let case = match (completion.has_arc(u, v), completion.has_arc(v, u)) {
        (false, false) => ArcPrescription::None,
        (true, false) => ArcPrescription::SingleUv,
        (false, true) => ArcPrescription::SingleVu,
        (true, true) => ArcPrescription::Biarc,
    };

    // triple multiset of the completion minus the externals' triples equals
    // the body's multiset over non-external vertices
    {
        let mut host_ts: Vec<DegreeTriple> =
            completion.vertices().map(|w| completion.degree_triple(w)).collect();
        host_ts.sort_unstable();
        let mut minus = host_ts.clone();
        for x in [u, v] {
            let t = completion.degree_triple(x);
            let pos = minus.binary_search(&t).expect("own triple present");
            minus.remove(pos);
        }
        let mut body_ts: Vec<DegreeTriple> = body
            .vertices()
            .filter(|&w| w != u && w != v)
            .map(|w| body.degree_triple(w))
            .collect();
        body_ts.sort_unstable();
        checks.push(IdentityCheck {
            name: "triple_multiset_minus_externals".into(),
            holds: minus == body_ts,
            detail: format!("{minus:?} vs {body_ts:?}"),
        });
    }

    // external dt and ndq arithmetic for the adjacency case at hand
    for (x, other, tag) in [(u, v, "u"), (v, u, "v")] {
        let (pt, pq) = predicted_external(&completion, x, other);
        let direct_t = body.degree_triple(x);
        let direct_q = neighbor_profiles(body, x).1;
        checks.push(IdentityCheck {
            name: format!("external_{tag}_triple"),
            holds: pt == direct_t,
            detail: format!("predicted {pt}, direct {direct_t}"),
        });
        checks.push(IdentityCheck {
            name: format!("external_{tag}_ndq"),
            holds: pq == direct_q,
            detail: format!("predicted {pq:?}, direct {direct_q:?}"),
        });
    }

    // graph-mode clauses
    if completion.is_graph_mode() {
        let k3 = Digraph::build(3, &[(0, 1), (1, 2), (2, 0)], true).unwrap();
        let s_k3 = |host: &Digraph, x: usize| {
            crate::kelly::count_copies_at(&k3, host, x, crate::kelly::CountMode::Subgraph)
        };
        let eg = completion.edge_count();
        let ep = body.edge_count();
        if eg == ep {
            for (x, tag) in [(u, "u"), (v, "v")] {
                let ip_g = induced_path2_counts(&completion, x, None)?;
                let ip_p = induced_path2_counts(body, x, None)?;
                checks.push(IdentityCheck {
                    name: format!("ip2_{tag}_equal_edges"),
                    holds: ip_g == ip_p,
                    detail: format!("{ip_g} vs {ip_p}"),
                });
                checks.push(IdentityCheck {
                    name: format!("k3_{tag}_equal_edges"),
                    holds: s_k3(&completion, x) == s_k3(body, x),
                    detail: format!("{} vs {}", s_k3(&completion, x), s_k3(body, x)),
                });
            }
        } else {
            // eg == ep + 1: the edge uv was added
            let du = completion.degree_triple(u).third();
            let dv = completion.degree_triple(v).third();
            for (x, other, deg_other, tag) in [(u, v, dv, "u"), (v, u, du, "v")] {
                let ip_g = induced_path2_counts(&completion, x, None)? as isize;
                let ip_p = induced_path2_counts(body, x, None)? as isize;
                let ip_pair = induced_path2_counts(body, x, Some(other))? as isize;
                let rhs = ip_p - 2 * ip_pair + deg_other as isize - 1;
                checks.push(IdentityCheck {
                    name: format!("ip2_{tag}_one_more_edge"),
                    holds: ip_g == rhs,
                    detail: format!("{ip_g} vs {ip_p} - 2*{ip_pair} + {deg_other} - 1"),
                });
                let k3_g = s_k3(&completion, x) as isize;
                let k3_p = s_k3(body, x) as isize;
                checks.push(IdentityCheck {
                    name: format!("k3_{tag}_one_more_edge"),
                    holds: k3_g == k3_p + ip_pair,
                    detail: format!("{k3_g} vs {k3_p} + {ip_pair}"),
                });
            }
        }
    }

    let all_hold = checks.iter().all(|c| c.holds);
    Ok(PastingParameterReport { case, checks, all_hold })
}
