//! Pinned facts about the built-in corpus beyond the acceptance criteria:
//! per-operation values on C_8, the enumeration route to the two famous
//! dapastings, and the card-flavor table on a six-vertex pair.

use reconlab::analysis::iso_characterization;
use reconlab::canon::canonical_form;
use reconlab::corpus::corpus_get;
use reconlab::deck::{Dadeck, Deck, Flavor};
use reconlab::digraph::{DegreeTriple, Digraph};
use reconlab::kelly::arc_census;
use reconlab::label::labeled_isomorphic;
use reconlab::params::{ndq_from_dacard, neighbor_profiles, vertex_params_from_card};
use reconlab::pasting::{
    completion_requirements, enumerate_pastings, pasting_from_host, unique_dapasting,
    ArcPrescription, DeckRef, PastingCard, UniquePasting,
};

fn c8() -> Digraph {
    corpus_get("c8").unwrap().digraphs.remove(0)
}

#[test]
fn c8_card_at_v1_has_21_arc_entries() {
    assert_eq!(c8().delete_vertex(0).arc_entry_count(), 21);
}

#[test]
fn c8_census_recovered_from_deck() {
    let deck = Deck::of(&c8()).unwrap();
    assert_eq!(arc_census(&deck).unwrap(), (12, 8));
}

#[test]
fn c8_split_degree_from_card() {
    let host = c8();
    let deck = Deck::of(&host).unwrap();
    let card = canonical_form(&host.delete_vertex(0)).code;
    let p = vertex_params_from_card(&card, &deck, Some((4, 3))).unwrap();
    assert_eq!(p.split_degree, (3, 2));
    assert_eq!(p.triple, Some(DegreeTriple::new(2, 1, 2)));
}

#[test]
fn c8_neighbor_profiles_have_prescribed_sizes() {
    let host = c8();
    let (ndt, ndq) = neighbor_profiles(&host, 0);
    assert_eq!(ndt.out.len(), 2);
    assert_eq!(ndt.inn.len(), 1);
    assert_eq!(ndt.strong.len(), 2);
    assert_eq!(ndq.csdon.len(), 2);
    assert_eq!(ndq.cfdin.len(), 1);
    assert_eq!(ndq.ctdsn.len(), 2);
}

#[test]
fn c8_quintuple_reconstructs_from_its_dacard() {
    let host = c8();
    let dadeck = Dadeck::of(&host).unwrap();
    for v in 0..8 {
        let card = canonical_form(&host.delete_vertex(v)).code;
        let got = ndq_from_dacard(&card, host.degree_triple(v), &dadeck).unwrap();
        assert_eq!(got, neighbor_profiles(&host, v).1, "vertex {v}");
    }
}

#[test]
fn c8_dapastings_arise_from_enumeration_with_27_and_26_arcs() {
    let host = c8();
    let reference = DeckRef::Dacard(Dadeck::of(&host).unwrap());
    let dacard = |v: usize| {
        PastingCard::dacard(
            canonical_form(&host.delete_vertex(v)).code,
            host.degree_triple(v),
        )
    };
    // v3 = index 2, v1 = index 0, v5 = index 4; the two dacard pairs are
    // identical as dacards yet realize non-isomorphic dapastings
    assert_eq!(dacard(0), dacard(4));
    let ps_v1 = enumerate_pastings(&dacard(2), &dacard(0), &reference).unwrap();
    let with_27: Vec<_> = ps_v1
        .iter()
        .filter(|p| p.body().base().arc_entry_count() == 27)
        .collect();
    assert!(!with_27.is_empty(), "no 27-arc dapasting enumerated");
    let from_host_26 = pasting_from_host(&host, 2, 4, Flavor::Dacard).unwrap();
    assert_eq!(from_host_26.body().base().arc_entry_count(), 26);
    assert!(
        ps_v1
            .iter()
            .any(|p| labeled_isomorphic(p.body(), from_host_26.body())),
        "the 26-arc dapasting is a dapasting of the same dacard pair"
    );
    for p in &with_27 {
        assert!(!labeled_isomorphic(p.body(), from_host_26.body()));
    }
}

#[test]
fn c8_biarc_prescription_for_the_v3_v5_pasting() {
    let host = c8();
    let p = pasting_from_host(&host, 2, 4, Flavor::Dacard).unwrap();
    assert_eq!(completion_requirements(&p).unwrap(), ArcPrescription::Biarc);
    // the stripped arc ran v1 -> v3, i.e. from external v to external u
    let q = pasting_from_host(&host, 2, 0, Flavor::Dacard).unwrap();
    assert_eq!(
        completion_requirements(&q).unwrap(),
        ArcPrescription::SingleVu
    );
}

#[test]
fn card_flavor_table_on_fig8_pair1_has_true_entries_despite_nonisomorphy() {
    let entry = corpus_get("fig8-pair1").unwrap();
    let [d, e] = &entry.digraphs[..] else { unreachable!() };
    let verdict = iso_characterization(d, e, Flavor::Card, false).unwrap();
    assert!(!verdict.isomorphic);
    assert!(
        verdict.table.iter().any(|(_, hit)| *hit),
        "expected at least one isomorphically pasted card pair"
    );
}

#[test]
fn star_cards_have_ambiguous_pastings() {
    // cards 3K1 (center deleted) and K_{1,2} (leaf deleted) of the star on
    // four vertices: several alignment triples realize the valid pasting
    let k13 = Digraph::build(4, &[(0, 1), (0, 2), (0, 3)], true).unwrap();
    let reference = DeckRef::Card(Deck::of(&k13).unwrap());
    let a = PastingCard::card(canonical_form(&k13.delete_vertex(0)).code);
    let b = PastingCard::card(canonical_form(&k13.delete_vertex(1)).code);
    match unique_dapasting(&a, &b, &reference).unwrap() {
        UniquePasting::Ambiguous(k) => assert!(k >= 2, "got {k} triples"),
        other => panic!("expected ambiguity, got {other:?}"),
    }
}
