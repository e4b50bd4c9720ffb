//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Exhaustive claims are run exhaustively at the stated orders; the
//! direct computation is always the oracle and the from-deck or pasting
//! route is the claim under test.

use reconlab::analysis::{
    certify_da_reconstructible, completions_externally_isomorphic, iso_characterization,
    pair_report, s_isomorphism, DichotomyOutcome, SIsomorphism,
};
use reconlab::canon::{are_isomorphic, canonical_form, CanonCode};
use reconlab::corpus::corpus_get;
use reconlab::deck::{same_deck, Dadeck, Deck, Flavor};
use reconlab::digraph::Digraph;
use reconlab::kelly::{arc_census, count_copies, count_copies_at, kelly_count, CountMode};
use reconlab::label::labeled_isomorphic;
use reconlab::params::{
    induced_path2_counts, ndq_from_dacard, neighbor_profiles, vertex_params_from_card, NdqError,
};
use reconlab::pasting::{
    completions, enumerate_pastings, pasting_from_host, pasting_parameter_report, DeckRef,
    PastingCard,
};
use reconlab::search::{classify_collision_pairs, deck_collision_scan, enumerate_small, Kind, ScanConfig};

fn pass(criterion: &str, detail: &str) {
    println!("[{criterion}] PASS: {detail}");
}

fn corpus_pairs() -> Vec<(&'static str, Digraph, Digraph)> {
    ["fig7-pair1", "fig7-pair2", "fig7-pair3", "fig8-pair1", "fig8-pair2"]
        .into_iter()
        .map(|id| {
            let entry = corpus_get(id).unwrap();
            let mut it = entry.digraphs.into_iter();
            (entry.id, it.next().unwrap(), it.next().unwrap())
        })
        .collect()
}

fn all_hosts(kind: Kind, n: usize) -> Vec<Digraph> {
    enumerate_small(&ScanConfig::new(n, kind, Flavor::Card)).unwrap()
}

#[test]
fn criterion_01_corpus_validation() {
    for (id, d, e) in corpus_pairs() {
        assert!(same_deck(&d, &e, Flavor::Card), "[criterion 1] FAIL: {id} not hypomorphic");
        assert!(!are_isomorphic(&d, &e), "[criterion 1] FAIL: {id} members isomorphic");
        assert!(
            !same_deck(&d, &e, Flavor::Dacard),
            "[criterion 1] FAIL: {id} unexpectedly da-hypomorphic"
        );
    }
    pass("criterion 1", "all five corpus pairs hypomorphic, non-isomorphic, non-da-hypomorphic");
}

#[test]
fn criterion_02_corpus_split_by_iso_pasted_pairs() {
    for (id, d, e) in corpus_pairs() {
        let report = pair_report(&d, &e).unwrap();
        let s_iso = matches!(s_isomorphism(&d, &e).unwrap(), SIsomorphism::Witness(_));
        if id.starts_with("fig8") {
            assert!(
                report.iso_pasted_card_pair.is_some(),
                "[criterion 2] FAIL: {id} has no isomorphically pasted card pair"
            );
            assert!(s_iso, "[criterion 2] FAIL: {id} has no s-isomorphism witness");
        } else {
            assert!(
                report.iso_pasted_card_pair.is_none(),
                "[criterion 2] FAIL: {id} unexpectedly has an isomorphically pasted card pair"
            );
            assert!(!s_iso, "[criterion 2] FAIL: {id} unexpectedly s-isomorphic");
        }
    }
    pass(
        "criterion 2",
        "fig8 pairs: iso-pasted card pair and s-iso witness; fig7 pairs: neither",
    );
}

#[test]
fn criterion_03_c8_dapasting_pair() {
    let c8 = corpus_get("c8").unwrap().digraphs.remove(0);
    // vertices are 0-indexed: v1 = 0, v3 = 2, v5 = 4
    let p1 = pasting_from_host(&c8, 2, 0, Flavor::Dacard).unwrap();
    let p2 = pasting_from_host(&c8, 2, 4, Flavor::Dacard).unwrap();
    assert_eq!(
        p1.body().base().arc_entry_count(),
        27,
        "[criterion 3] FAIL: (v3,v1) dapasting arc count"
    );
    assert_eq!(
        p2.body().base().arc_entry_count(),
        26,
        "[criterion 3] FAIL: (v3,v5) dapasting arc count"
    );
    assert!(
        !labeled_isomorphic(p1.body(), p2.body()),
        "[criterion 3] FAIL: the two dapastings are labeled-isomorphic"
    );
    for (tag, p) in [("v3,v1", &p1), ("v3,v5", &p2)] {
        let cs = completions(p).unwrap();
        assert_eq!(cs.len(), 1, "[criterion 3] FAIL: ({tag}) completion not unique");
        assert!(
            are_isomorphic(&cs[0], &c8),
            "[criterion 3] FAIL: ({tag}) completion is not the host"
        );
    }
    let orbits = reconlab::canon::automorphism_orbits(&c8);
    assert!(
        orbits.iter().any(|b| b.contains(&0) && b.contains(&4)),
        "[criterion 3] FAIL: no automorphism moves v1 to v5"
    );
    // the two dacard pairs are identical as dacards
    let dacard = |v: usize| (canonical_form(&c8.delete_vertex(v)).code, c8.degree_triple(v));
    assert_eq!(dacard(0), dacard(4), "[criterion 3] FAIL: dacards at v1 and v5 differ");
    pass("criterion 3", "27 vs 26 arcs, non-isomorphic dapastings, unique completions, v1~v5");
}

#[test]
fn criterion_04_unique_completion_and_external_isomorphy() {
    let mut pastings_checked = 0usize;
    let mut pairs_checked = 0usize;
    for n in 2..=5usize {
        for host in all_hosts(Kind::Digraph, n) {
            let dadeck = DeckRef::Dacard(Dadeck::of(&host).unwrap());
            // group vertex pairs by dacard-pair value for the cross-host test
            let mut by_pair: Vec<(Vec<u8>, Vec<(usize, usize)>)> = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    let from_host = pasting_from_host(&host, u, v, Flavor::Dacard).unwrap();
                    let cs = completions(&from_host).unwrap();
                    assert_eq!(
                        cs.len(),
                        1,
                        "[criterion 4] FAIL: from-host dapasting of n={n} host has {} completions",
                        cs.len()
                    );
                    assert!(are_isomorphic(&cs[0], &host), "[criterion 4] FAIL: wrong completion");
                    pastings_checked += 1;

                    let mut key = canonical_form(&host.delete_vertex(u)).code.as_bytes().to_vec();
                    key.extend_from_slice(canonical_form(&host.delete_vertex(v)).code.as_bytes());
                    let tu = host.degree_triple(u);
                    let tv = host.degree_triple(v);
                    key.extend_from_slice(&[tu.a as u8, tu.b as u8, tu.c as u8]);
                    key.extend_from_slice(&[tv.a as u8, tv.b as u8, tv.c as u8]);
                    match by_pair.iter_mut().find(|(k, _)| *k == key) {
                        Some((_, list)) => list.push((u, v)),
                        None => by_pair.push((key, vec![(u, v)])),
                    }

                    // every enumerated dapasting of the pair completes
                    // uniquely, and distinct classes never share an
                    // externally isomorphic completion
                    let a = PastingCard::dacard(
                        canonical_form(&host.delete_vertex(u)).code,
                        host.degree_triple(u),
                    );
                    let b = PastingCard::dacard(
                        canonical_form(&host.delete_vertex(v)).code,
                        host.degree_triple(v),
                    );
                    let ps = enumerate_pastings(&a, &b, &dadeck).unwrap();
                    assert!(!ps.is_empty(), "[criterion 4] FAIL: from-host pair not re-enumerated");
                    assert!(
                        ps.iter().any(|p| labeled_isomorphic(p.body(), from_host.body())),
                        "[criterion 4] FAIL: enumeration misses the from-host dapasting (soundness)"
                    );
                    let with_completions: Vec<_> = ps
                        .iter()
                        .map(|p| {
                            let cs = completions(p).unwrap();
                            assert_eq!(cs.len(), 1, "[criterion 4] FAIL: non-unique completion");
                            (p, cs.into_iter().next().unwrap())
                        })
                        .collect();
                    for i in 0..with_completions.len() {
                        for j in i + 1..with_completions.len() {
                            let (pi, ci) = &with_completions[i];
                            let (pj, cj) = &with_completions[j];
                            // deduplicated list: pairwise non-labeled-isomorphic,
                            // so their completions must not be externally isomorphic
                            assert!(
                                !completions_externally_isomorphic(
                                    ci,
                                    pi.externals(),
                                    cj,
                                    pj.externals()
                                ),
                                "[criterion 4] FAIL: distinct dapastings with externally isomorphic completions"
                            );
                            pairs_checked += 1;
                        }
                    }
                }
            }
            // same dacard pair from different vertex pairs: labeled isomorphism
            // of the stripped hosts must match external-set-preserving isomorphy
            for (_, list) in by_pair.iter().filter(|(_, l)| l.len() > 1) {
                for i in 0..list.len() {
                    for j in i + 1..list.len() {
                        let (u1, v1) = list[i];
                        let (u2, v2) = list[j];
                        let p1 = pasting_from_host(&host, u1, v1, Flavor::Dacard).unwrap();
                        let p2 = pasting_from_host(&host, u2, v2, Flavor::Dacard).unwrap();
                        let lhs = labeled_isomorphic(p1.body(), p2.body());
                        let rhs = completions_externally_isomorphic(
                            &host,
                            (u1, v1),
                            &host,
                            (u2, v2),
                        );
                        assert_eq!(
                            lhs, rhs,
                            "[criterion 4] FAIL: labeled isomorphism disagrees with external-set isomorphy on n={n} host"
                        );
                        pairs_checked += 1;
                    }
                }
            }
        }
    }
    pass(
        "criterion 4",
        &format!("{pastings_checked} dapastings all completed uniquely; {pairs_checked} pair equivalences"),
    );
}

#[test]
fn criterion_05_dichotomy_matches_isomorphy() {
    // no dadeck collisions exist at n <= 5 (asserted below), so the
    // dadeck-equal pairs are exactly the isomorphic ones; the dichotomy and
    // its agreement with isomorphy are asserted inside iso_characterization
    for n in 2..=5usize {
        let cfg = ScanConfig::new(n, Kind::Digraph, Flavor::Dacard);
        let report = deck_collision_scan(&cfg).unwrap();
        assert!(
            report.classes.is_empty(),
            "[criterion 5] FAIL: dadeck collision at n={n}: {:?} (would answer DARC negatively)",
            report.classes
        );
    }
    let mut tables = 0usize;
    for n in 2..=5usize {
        for host in all_hosts(Kind::Digraph, n) {
            // a relabeled copy is the dadeck-equal partner
            let perm: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
            let other = host.relabel(&perm);
            let verdict = iso_characterization(&host, &other, Flavor::Dacard, false)
                .unwrap_or_else(|e| {
                    panic!("[criterion 5] FAIL: dichotomy violation on n={n} host: {e}")
                });
            assert_eq!(
                verdict.verdict,
                Some(DichotomyOutcome::AllPairs),
                "[criterion 5] FAIL: isomorphic pair without all-pairs verdict"
            );
            tables += 1;
        }
    }
    pass(
        "criterion 5",
        &format!("no dadeck collisions at n<=5; {tables} dichotomy tables constant and matching isomorphy"),
    );
}

/// Direct star-orbit counts: copies of the star on `m` vertices containing
/// `v`, split by whether `v` is the center.
fn star_orbit_counts_direct(g: &Digraph, v: usize, m: usize) -> (usize, usize) {
    let n = g.order();
    let mut center = 0usize;
    let mut ends = 0usize;
    let subsets = |k: usize, from: Vec<usize>| -> Vec<Vec<usize>> {
        fn rec(k: usize, from: &[usize], at: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if acc.len() == k {
                out.push(acc.clone());
                return;
            }
            if at >= from.len() {
                return;
            }
            acc.push(from[at]);
            rec(k, from, at + 1, acc, out);
            acc.pop();
            rec(k, from, at + 1, acc, out);
        }
        let mut out = Vec::new();
        rec(k, &from, 0, &mut Vec::new(), &mut out);
        out
    };
    for c in 0..n {
        let nbrs: Vec<usize> = (0..n).filter(|&w| w != c && g.has_arc(c, w)).collect();
        for leaves in subsets(m - 1, nbrs) {
            if c == v {
                center += 1;
            } else if leaves.contains(&v) {
                ends += 1;
            }
        }
    }
    (center, ends)
}

#[test]
fn criterion_06_oracle_equivalence() {
    // (a) Kelly counts, digraphs n <= 5 and graphs n <= 6, all patterns on
    // up to 3 (digraph) / 4 (graph) vertices, both modes, with and without
    // a card pin
    let digraph_patterns: Vec<Digraph> = (1..=3)
        .flat_map(|k| all_hosts(Kind::Digraph, k))
        .collect();
    let mut kelly_checked = 0usize;
    for n in 2..=5usize {
        for host in all_hosts(Kind::Digraph, n) {
            let deck = Deck::of(&host).unwrap();
            for f in digraph_patterns.iter().filter(|f| f.order() < n) {
                for mode in [CountMode::Subgraph, CountMode::Induced] {
                    let direct = count_copies(f, &host, mode);
                    let from_deck = kelly_count(f, &deck, mode, None).unwrap_or_else(|e| {
                        panic!("[criterion 6] FAIL: kelly division on legit deck: {e}")
                    });
                    assert_eq!(direct, from_deck, "[criterion 6] FAIL: kelly host count");
                    for v in 0..n {
                        let card = canonical_form(&host.delete_vertex(v)).code;
                        let direct_at = count_copies_at(f, &host, v, mode);
                        let from_deck_at =
                            kelly_count(f, &deck, mode, Some(&card)).unwrap();
                        assert_eq!(
                            direct_at, from_deck_at,
                            "[criterion 6] FAIL: kelly at-card count"
                        );
                    }
                    kelly_checked += 1;
                }
            }
            let (unpaired, biarcs) = host.census();
            assert_eq!(
                arc_census(&deck).ok(),
                if n >= 3 { Some((unpaired, biarcs)) } else { None },
                "[criterion 6] FAIL: arc census from deck"
            );
        }
    }
    let graph_patterns: Vec<Digraph> = (1..=4)
        .flat_map(|k| all_hosts(Kind::Graph, k))
        .collect();
    for n in 2..=6usize {
        for host in all_hosts(Kind::Graph, n) {
            let deck = Deck::of(&host).unwrap();
            for f in graph_patterns.iter().filter(|f| f.order() < n) {
                for mode in [CountMode::Subgraph, CountMode::Induced] {
                    assert_eq!(
                        count_copies(f, &host, mode),
                        kelly_count(f, &deck, mode, None).unwrap(),
                        "[criterion 6] FAIL: graph kelly"
                    );
                    kelly_checked += 1;
                }
            }
        }
    }

    // (b) per-vertex parameter extraction for graphs n <= 6
    let mut params_checked = 0usize;
    for n in 3..=6usize {
        for host in all_hosts(Kind::Graph, n) {
            let deck = Deck::of(&host).unwrap();
            for v in 0..n {
                let card = canonical_form(&host.delete_vertex(v)).code;
                let t = host.degree_triple(v);
                let p = vertex_params_from_card(&card, &deck, Some(t.degree_pair())).unwrap();
                let degree = t.third();
                assert_eq!(p.degree, Some(degree), "[criterion 6] FAIL: degree from card");
                assert_eq!(p.split_degree, t.split_degree(), "[criterion 6] FAIL: spd");
                assert_eq!(p.triple, Some(t), "[criterion 6] FAIL: triple from dep");
                let mut nd_direct: Vec<usize> = (0..n)
                    .filter(|&w| host.has_arc(v, w))
                    .map(|w| host.degree_triple(w).third())
                    .collect();
                nd_direct.sort_unstable();
                assert_eq!(
                    p.neighborhood_degrees,
                    Some(nd_direct),
                    "[criterion 6] FAIL: neighborhood degree sequence"
                );
                for sc in &p.star_counts {
                    let (center, ends) = star_orbit_counts_direct(&host, v, sc.m);
                    assert_eq!(
                        (sc.center, sc.ends),
                        (center, ends),
                        "[criterion 6] FAIL: star orbit counts m={}",
                        sc.m
                    );
                }
                assert_eq!(
                    p.induced_p2,
                    Some(induced_path2_counts(&host, v, None).unwrap()),
                    "[criterion 6] FAIL: ip(2) from deck"
                );
                params_checked += 1;
            }
        }
    }

    // (c) quintuple reconstruction from the dacard: digraphs n <= 5 and
    // graphs n <= 6, every vertex; the direct profile is the oracle
    let mut ndq_total = 0usize;
    let mut ndq_underdetermined: Vec<String> = Vec::new();
    let mut ndq_wrong: Vec<String> = Vec::new();
    for (kind, max_n) in [(Kind::Digraph, 5usize), (Kind::Graph, 6usize)] {
        for n in 3..=max_n {
            for host in all_hosts(kind, n) {
                let dadeck = Dadeck::of(&host).unwrap();
                for v in 0..n {
                    let card = canonical_form(&host.delete_vertex(v)).code;
                    let dt = host.degree_triple(v);
                    let direct = neighbor_profiles(&host, v).1;
                    ndq_total += 1;
                    match ndq_from_dacard(&card, dt, &dadeck) {
                        Ok(got) => {
                            if got != direct {
                                ndq_wrong.push(format!(
                                    "{kind} n={n} host={} v={v}: reconstructed {got:?}, direct {direct:?}",
                                    canonical_form(&host).code.to_hex()
                                ));
                            }
                        }
                        Err(NdqError::Underdetermined(k)) => {
                            ndq_underdetermined.push(format!(
                                "{kind} n={n} host={} v={v} dt={dt}: {k} consistent candidates, direct {direct:?}",
                                canonical_form(&host).code.to_hex()
                            ));
                        }
                        Err(e) => panic!("[criterion 6] FAIL: ndq reconstruction error: {e}"),
                    }
                }
            }
        }
    }
    println!(
        "[criterion 6] kelly checks: {kelly_checked}; param extractions: {params_checked}; \
         ndq instances: {ndq_total} ({} underdetermined, {} wrong-unique)",
        ndq_underdetermined.len(),
        ndq_wrong.len()
    );
    assert!(ndq_wrong.is_empty(), "[criterion 6] FAIL: unique ndq answers that mismatch the oracle:\n{}", ndq_wrong.join("\n"));
    if !ndq_underdetermined.is_empty() {
        for line in ndq_underdetermined.iter().take(8) {
            println!("[criterion 6] counterexample: {line}");
        }
        panic!(
            "[criterion 6] FAIL: ndq_from_dacard is underdetermined on {} of {} instances; \
             the dacard and dadeck do not pin the quintuple (first instances above, none patched)",
            ndq_underdetermined.len(),
            ndq_total
        );
    }
    pass("criterion 6", "kelly, parameter extraction and ndq reconstruction all match direct enumeration");
}

#[test]
fn criterion_07_pasting_parameter_identities() {
    let mut reports = 0usize;
    // digraph hosts n <= 5, both flavors, all vertex pairs, host as completion
    for n in 2..=5usize {
        for host in all_hosts(Kind::Digraph, n) {
            for flavor in [Flavor::Card, Flavor::Dacard] {
                for u in 0..n {
                    for v in u + 1..n {
                        let p = pasting_from_host(&host, u, v, flavor).unwrap();
                        let r = pasting_parameter_report(&p, &host).unwrap();
                        assert!(
                            r.all_hold,
                            "[criterion 7] FAIL: identity broken on digraph n={n}: {:?}",
                            r.checks.iter().filter(|c| !c.holds).collect::<Vec<_>>()
                        );
                        reports += 1;
                    }
                }
            }
        }
    }
    // graph hosts n <= 6 exercise the edge-count/ip/triangle clauses in
    // both the equal-edges and one-more-edge cases
    for n in 3..=6usize {
        for host in all_hosts(Kind::Graph, n) {
            for u in 0..n {
                for v in u + 1..n {
                    let p = pasting_from_host(&host, u, v, Flavor::Card).unwrap();
                    let r = pasting_parameter_report(&p, &host).unwrap();
                    assert!(
                        r.all_hold,
                        "[criterion 7] FAIL: graph identity broken on n={n}: {:?}",
                        r.checks.iter().filter(|c| !c.holds).collect::<Vec<_>>()
                    );
                    reports += 1;
                }
            }
        }
    }
    // enumerated dapastings against each of their completions
    for n in 2..=4usize {
        for host in all_hosts(Kind::Digraph, n) {
            let dadeck = DeckRef::Dacard(Dadeck::of(&host).unwrap());
            for u in 0..n {
                for v in u + 1..n {
                    let a = PastingCard::dacard(
                        canonical_form(&host.delete_vertex(u)).code,
                        host.degree_triple(u),
                    );
                    let b = PastingCard::dacard(
                        canonical_form(&host.delete_vertex(v)).code,
                        host.degree_triple(v),
                    );
                    for p in enumerate_pastings(&a, &b, &dadeck).unwrap() {
                        for c in completions(&p).unwrap() {
                            let r = pasting_parameter_report(&p, &c).unwrap();
                            assert!(r.all_hold, "[criterion 7] FAIL: enumerated dapasting identity");
                            reports += 1;
                        }
                    }
                }
            }
        }
    }
    // the criterion-3 dapastings
    let c8 = corpus_get("c8").unwrap().digraphs.remove(0);
    for (u, v) in [(2usize, 0usize), (2, 4)] {
        let p = pasting_from_host(&c8, u, v, Flavor::Dacard).unwrap();
        let r = pasting_parameter_report(&p, &c8).unwrap();
        assert!(r.all_hold, "[criterion 7] FAIL: c8 dapasting identities");
        reports += 1;
    }
    pass("criterion 7", &format!("{reports} pasting parameter reports, all identities hold"));
}

#[test]
fn criterion_08_hunt_reproduction() {
    // digraph n=5 card scan contains both 5-vertex corpus pairs
    let cfg = ScanConfig::new(5, Kind::Digraph, Flavor::Card);
    let scan = deck_collision_scan(&cfg).unwrap();
    assert!(scan.complete, "[criterion 8] FAIL: scan incomplete");
    let find_pair = |d: &Digraph, e: &Digraph| -> bool {
        let cd = canonical_form(d).code;
        let ce = canonical_form(e).code;
        scan.classes
            .iter()
            .any(|c| c.members.contains(&cd) && c.members.contains(&ce))
    };
    for id in ["fig7-pair1", "fig7-pair2"] {
        let entry = corpus_get(id).unwrap();
        assert!(
            find_pair(&entry.digraphs[0], &entry.digraphs[1]),
            "[criterion 8] FAIL: {id} not rediscovered in the n=5 scan"
        );
    }
    // graph scans n = 4..7 card mode are empty
    for n in 4..=7usize {
        let report = deck_collision_scan(&ScanConfig::new(n, Kind::Graph, Flavor::Card)).unwrap();
        assert!(
            report.classes.is_empty(),
            "[criterion 8] FAIL: graph deck collision at n={n} (a counterexample!): {:?}",
            report.classes
        );
    }
    // digraph n=5 dacard scan is empty
    let dacard = deck_collision_scan(&ScanConfig::new(5, Kind::Digraph, Flavor::Dacard)).unwrap();
    assert!(
        dacard.classes.is_empty(),
        "[criterion 8] FAIL: dadeck collision at n=5 (a DARC counterexample!): {:?}",
        dacard.classes
    );
    pass(
        "criterion 8",
        &format!(
            "n=5 card scan has {} classes incl. both 5-vertex corpus pairs; graph 4..7 and dacard n=5 scans empty",
            scan.classes.len()
        ),
    );
}

#[test]
fn criterion_09_collision_pair_classification() {
    let cfg = ScanConfig::new(5, Kind::Digraph, Flavor::Card);
    let report = classify_collision_pairs(&cfg).unwrap();
    assert!(
        report.violations.is_empty(),
        "[criterion 9] FAIL: iso-pasted yet da-hypomorphic pairs found: {:?}",
        report.violations
    );
    let class_i = report.pairs.iter().filter(|p| p.iso_pasted).count();
    let class_ii = report.pairs.len() - class_i;
    // corpus injection: fig8 pairs classify into (i), fig7 pairs into (ii)
    for (id, d, e) in corpus_pairs() {
        let has = pair_report(&d, &e).unwrap().iso_pasted_card_pair.is_some();
        if id.starts_with("fig8") {
            assert!(has, "[criterion 9] FAIL: {id} should classify into class (i)");
        } else {
            assert!(!has, "[criterion 9] FAIL: {id} should classify into class (ii)");
        }
        let da = same_deck(&d, &e, Flavor::Dacard);
        assert!(!(has && da), "[criterion 9] FAIL: corpus violation on {id}");
    }
    pass(
        "criterion 9",
        &format!(
            "{} collision pairs at n=5 ({class_i} iso-pasted, {class_ii} not); every iso-pasted pair fails dacard hypomorphy",
            report.pairs.len()
        ),
    );
}

#[test]
fn criterion_10_da_certificate_on_six_vertices() {
    // search 6-vertex graphs for a host whose biorientation certifies
    let hosts = all_hosts(Kind::Graph, 6);
    let mut certified: Vec<(CanonCode, usize, usize)> = Vec::new();
    for g in &hosts {
        let d = g.clone(); // all-biarc biorientation
        if let Some(cert) = certify_da_reconstructible(&d).unwrap() {
            certified.push((canonical_form(g).code, cert.vertex_a, cert.vertex_b));
        }
    }
    assert!(
        !certified.is_empty(),
        "[criterion 10] FAIL: no 6-vertex graph admits a certificate: every 5-vertex card \
         has a nontrivial automorphism, so at least two alignment triples realize any valid \
         pasting and strict uniqueness is unattainable at this order (first order with rigid \
         cards is 7; see the n=7 demonstration test)"
    );
    pass(
        "criterion 10",
        &format!("{} six-vertex hosts certified", certified.len()),
    );
}

/// Not an acceptance criterion: the certifier machinery demonstrably
/// succeeds at the first order where rigid cards exist.
#[test]
fn da_certificate_demonstration_at_seven_vertices() {
    let hosts = all_hosts(Kind::Graph, 7);
    let mut found = 0usize;
    for g in &hosts {
        // mixed biorientation: orient the two lexicographically first edges
        // as unpaired arcs, keep the rest as biarcs
        let edges: Vec<(usize, usize)> = g
            .arcs()
            .filter(|&(i, j)| i < j)
            .collect();
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        for (k, &(i, j)) in edges.iter().enumerate() {
            if k < 2 {
                arcs.push((i, j));
            } else {
                arcs.push((i, j));
                arcs.push((j, i));
            }
        }
        let d = Digraph::build(7, &arcs, false).unwrap();
        if d.is_biorientation(g).unwrap() {
            if let Some(cert) = certify_da_reconstructible(&d).unwrap() {
                assert_eq!(cert.dapasting_classes, 1);
                found += 1;
                if found >= 2 {
                    break;
                }
            }
        }
    }
    assert!(found > 0, "no 7-vertex certificate found");
    println!("[demonstration] {found} seven-vertex biorientations certified");
}
