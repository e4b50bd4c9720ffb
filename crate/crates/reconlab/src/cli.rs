//! Command-line surface. `run_command` executes one invocation and returns
//! the exit status and the rendered report, so the whole surface is
//! testable without spawning processes.
//!
//! Exit codes: 0 verified/true, 1 verified-false/none-found, 2
//! falsification of an asserted theorem (never expected), 3 usage or input
//! error.

use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};

use crate::adjm::{parse_adjm, parse_pasting_block, serialize_adjm, serialize_pasting_block};
use crate::analysis::{
    certify_da_reconstructible, iso_characterization, pair_report, s_isomorphism, AnalysisError,
    SIsomorphism,
};
use crate::canon::canonical_form;
use crate::corpus::{corpus_get, CorpusRole, CORPUS_IDS};
use crate::deck::{Dadeck, Deck, Flavor};
use crate::digraph::Digraph;
use crate::label::labeled_isomorphic;
use crate::pasting::{
    completion_requirements, completions, enumerate_pastings, pasting_from_host, ArcPrescription,
    DeckRef, Pasting, PastingCard, PastingError,
};
use crate::search::{classify_collision_pairs, deck_collision_scan, Kind, ScanConfig, SearchError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Card,
    Dacard,
}

impl From<ModeArg> for Flavor {
    fn from(m: ModeArg) -> Flavor {
        match m {
            ModeArg::Card => Flavor::Card,
            ModeArg::Dacard => Flavor::Dacard,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Graph,
    Digraph,
    Tournament,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Kind {
        match k {
            KindArg::Graph => Kind::Graph,
            KindArg::Digraph => Kind::Digraph,
            KindArg::Tournament => Kind::Tournament,
        }
    }
}

#[derive(Parser)]
#[command(name = "reconlab", disable_version_flag = true)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: FormatArg,
    /// Seed echoed into reports; scans themselves are deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the deck or dadeck of a digraph.
    Deck {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "card")]
        mode: ModeArg,
        /// Load the input as an undirected graph.
        #[arg(long)]
        graph: bool,
    },
    /// Test two digraphs for deck (dadeck) equality.
    Compare {
        a: PathBuf,
        b: PathBuf,
        #[arg(long, value_enum, default_value = "card")]
        mode: ModeArg,
        #[arg(long)]
        graph: bool,
    },
    /// Enumerate the pastings of two cards of a host against its deck.
    Paste {
        /// Host whose deck is the reference.
        #[arg(long)]
        deck_of: PathBuf,
        /// Two host vertices; their cards are pasted.
        #[arg(long, num_args = 2)]
        cards: Vec<usize>,
        #[arg(long, value_enum, default_value = "card")]
        flavor: ModeArg,
        #[arg(long)]
        graph: bool,
    },
    /// Read a serialized pasting and report its prescription and completions.
    Complete {
        #[arg(long)]
        pasting: PathBuf,
        /// Host whose deck the pasting is bound to.
        #[arg(long)]
        ref_deck_of: PathBuf,
        #[arg(long, value_enum, default_value = "card")]
        flavor: ModeArg,
        #[arg(long)]
        graph: bool,
    },
    /// Test whether a card pair is pasted isomorphically in two hosts.
    PastedIso {
        g: PathBuf,
        h: PathBuf,
        #[arg(long, num_args = 2)]
        cards: Vec<usize>,
        #[arg(long, value_enum, default_value = "card")]
        flavor: ModeArg,
        #[arg(long)]
        graph: bool,
    },
    /// Full pasted-isomorphically table of two deck-equal hosts.
    Dichotomy {
        g: PathBuf,
        h: PathBuf,
        #[arg(long, value_enum, default_value = "dacard")]
        mode: ModeArg,
        /// Stop at the first isomorphically pasted pair.
        #[arg(long)]
        fast: bool,
        #[arg(long)]
        graph: bool,
    },
    /// Search for a dadeck-determination certificate.
    Certify { input: PathBuf },
    /// Test two digraphs for S-isomorphism.
    SIso { d: PathBuf, e: PathBuf },
    /// Classify a pair of digraphs (corpus entry or two files).
    Verify {
        #[arg(long)]
        corpus: Option<String>,
        files: Vec<PathBuf>,
    },
    /// Exhaustive deck-collision scan over small hosts.
    Hunt {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(short)]
        n: usize,
        #[arg(long, value_enum, default_value = "card")]
        mode: ModeArg,
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Also classify collision pairs by isomorphically pasted card
        /// pairs versus dacard hypomorphy.
        #[arg(long)]
        classify: bool,
        #[arg(long)]
        ceiling: Option<usize>,
        #[arg(long)]
        max_hosts: Option<usize>,
        #[arg(long)]
        time_limit_secs: Option<u64>,
    },
    /// List corpus entries, or dump one as an adjacency-matrix document.
    Corpus { id: Option<String> },
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_FALSIFIED: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

/// Parses and runs one invocation. The first argv element is the program
/// name, as in `std::env::args`.
pub fn run_command<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.to_string());
        }
    };
    match dispatch(&cli) {
        Ok((code, report)) => (code, report),
        Err(e) => (e.exit_code(), format!("error: {e}\n")),
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Adjm(#[from] crate::adjm::AdjmError),
    #[error(transparent)]
    Corpus(#[from] crate::corpus::CorpusError),
    #[error(transparent)]
    Deck(#[from] crate::deck::DeckError),
    #[error(transparent)]
    Pasting(#[from] PastingError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error("{0}")]
    Input(String),
    #[error("theorem falsified: {0}")]
    Falsified(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Falsified(_) => EXIT_FALSIFIED,
            _ => EXIT_USAGE,
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> CliError {
        match e {
            AnalysisError::DichotomyViolation(_) | AnalysisError::CertifierCrossCheckFailed(_) => {
                CliError::Falsified(e.to_string())
            }
            other => CliError::Input(other.to_string()),
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn load_one(path: &Path, graph: bool) -> Result<Digraph, CliError> {
    let blocks = parse_adjm(&read_file(path)?, graph)?;
    Ok(blocks.into_iter().next().unwrap().digraph)
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serialization");
    s.push('\n');
    s
}

#[derive(serde::Serialize)]
struct DeckReportJson {
    n: usize,
    mode: Flavor,
    graph: bool,
    entries: Vec<String>,
}

#[derive(serde::Serialize)]
struct CompareReportJson {
    mode: Flavor,
    same_deck: bool,
    isomorphic: bool,
}

#[derive(serde::Serialize)]
struct AlignmentJson {
    v_star: usize,
    u_star: usize,
    psi: Vec<usize>,
}

#[derive(serde::Serialize)]
struct PastingJson {
    body: String,
    prescription: ArcPrescription,
    completions: Vec<String>,
    alignment: Option<AlignmentJson>,
}

#[derive(serde::Serialize)]
struct PasteReportJson {
    flavor: Flavor,
    count: usize,
    pastings: Vec<PastingJson>,
}

#[derive(serde::Serialize)]
struct PastedIsoJson {
    pasted_isomorphically: bool,
    witness: Option<PastingJson>,
}

#[derive(serde::Serialize)]
struct DichotomyRowJson {
    card_a: String,
    card_b: String,
    pasted_isomorphically: bool,
}

#[derive(serde::Serialize)]
struct DichotomyReportJson {
    mode: Flavor,
    verdict: Option<crate::analysis::DichotomyOutcome>,
    isomorphic: bool,
    fast_exit: bool,
    table: Vec<DichotomyRowJson>,
}

#[derive(serde::Serialize)]
struct CertifyReportJson {
    certified: bool,
    card_a: Option<String>,
    card_b: Option<String>,
    vertex_a: Option<usize>,
    vertex_b: Option<usize>,
    alignment: Option<AlignmentJson>,
}

#[derive(serde::Serialize)]
struct SIsoReportJson {
    relation: String,
    witness: Option<SIsoWitnessJson>,
}

#[derive(serde::Serialize)]
struct SIsoWitnessJson {
    f: String,
    u: usize,
    v: usize,
}

#[derive(serde::Serialize)]
struct PairReportJson {
    id: Option<String>,
    hypomorphic: bool,
    da_hypomorphic: bool,
    isomorphic: bool,
    s_isomorphic: bool,
    iso_pasted_card_pair: Option<IsoPastedJson>,
    distinguishing_da_invariant: Option<String>,
}

#[derive(serde::Serialize)]
struct IsoPastedJson {
    card_a: String,
    card_b: String,
    pasting_body: String,
}

#[derive(serde::Serialize)]
struct HuntClassJson {
    deck_key_hash: String,
    members: Vec<String>,
}

#[derive(serde::Serialize)]
struct ClassifiedPairJson {
    first: String,
    second: String,
    iso_pasted: bool,
    da_hypomorphic: bool,
}

#[derive(serde::Serialize)]
struct HuntReportJson {
    kind: Kind,
    n: usize,
    mode: Flavor,
    seed: Option<u64>,
    hosts: usize,
    complete: bool,
    classes: Vec<HuntClassJson>,
    classifier_pairs: Option<Vec<ClassifiedPairJson>>,
    classifier_violations: Option<Vec<ClassifiedPairJson>>,
}

fn pasting_json(p: &Pasting) -> Result<PastingJson, CliError> {
    let (u, v) = p.externals();
    let labels = [
        (u, p.body().label(u).expect("external label")),
        (v, p.body().label(v).expect("external label")),
    ];
    let body = serialize_pasting_block(p.body().base(), (u, v), labels);
    let prescription = completion_requirements(p)?;
    let completions = completions(p)?
        .iter()
        .map(|c| serialize_adjm(None, c))
        .collect();
    Ok(PastingJson {
        body,
        prescription,
        completions,
        alignment: p.alignment().map(|a| AlignmentJson {
            v_star: a.v_star,
            u_star: a.u_star,
            psi: a.psi.clone(),
        }),
    })
}

fn pasting_text(p: &PastingJson) -> String {
    let mut s = String::new();
    s.push_str(&p.body);
    s.push_str(&format!("prescription: {:?}\n", p.prescription));
    for (i, c) in p.completions.iter().enumerate() {
        s.push_str(&format!("completion {}:\n{}", i + 1, c));
    }
    if let Some(a) = &p.alignment {
        s.push_str(&format!(
            "alignment: v*={} u*={} psi={:?}\n",
            a.v_star, a.u_star, a.psi
        ));
    }
    s
}

fn card_pair_for(host: &Digraph, vertices: &[usize], flavor: Flavor) -> Result<(PastingCard, PastingCard), CliError> {
    let [i, j] = vertices else {
        return Err(CliError::Input("--cards takes exactly two vertex indices".into()));
    };
    for &v in [i, j].into_iter() {
        if v >= host.order() {
            return Err(CliError::Input(format!(
                "vertex {v} out of range for host order {}",
                host.order()
            )));
        }
    }
    if i == j {
        return Err(CliError::Input("card vertices must be distinct".into()));
    }
    let make = |v: usize| {
        let code = canonical_form(&host.delete_vertex(v)).code;
        match flavor {
            Flavor::Card => PastingCard::card(code),
            Flavor::Dacard => PastingCard::dacard(code, host.degree_triple(v)),
        }
    };
    Ok((make(*i), make(*j)))
}

fn dispatch(cli: &Cli) -> Result<(i32, String), CliError> {
    let fmt = cli.format;
    match &cli.command {
        Command::Deck { input, mode, graph } => {
            let g = load_one(input, *graph)?;
            let flavor: Flavor = (*mode).into();
            let entries: Vec<String> = match flavor {
                Flavor::Card => Deck::of(&g)?
                    .serialize()
                    .lines()
                    .map(str::to_string)
                    .collect(),
                Flavor::Dacard => Dadeck::of(&g)?
                    .serialize()
                    .lines()
                    .map(str::to_string)
                    .collect(),
            };
            let report = DeckReportJson { n: g.order(), mode: flavor, graph: *graph, entries };
            let out = match fmt {
                FormatArg::Json => json(&report),
                FormatArg::Text => {
                    let mut s = format!("deck of host on {} vertices ({} mode)\n", report.n, report.mode);
                    for e in &report.entries {
                        s.push_str(e);
                        s.push('\n');
                    }
                    s
                }
            };
            Ok((EXIT_OK, out))
        }
        Command::Compare { a, b, mode, graph } => {
            let ga = load_one(a, *graph)?;
            let gb = load_one(b, *graph)?;
            let flavor: Flavor = (*mode).into();
            let same = crate::deck::same_deck(&ga, &gb, flavor);
            let report = CompareReportJson {
                mode: flavor,
                same_deck: same,
                isomorphic: crate::canon::are_isomorphic(&ga, &gb),
            };
            let out = match fmt {
                FormatArg::Json => json(&report),
                FormatArg::Text => format!(
                    "same {} deck: {}\nisomorphic: {}\n",
                    report.mode, report.same_deck, report.isomorphic
                ),
            };
            Ok((if same { EXIT_OK } else { EXIT_FALSE }, out))
        }
        Command::Paste { deck_of, cards, flavor, graph } => {
            let host = load_one(deck_of, *graph)?;
            let flavor: Flavor = (*flavor).into();
            let (a, b) = card_pair_for(&host, cards, flavor)?;
            let reference = DeckRef::of(&host, flavor)?;
            let ps = enumerate_pastings(&a, &b, &reference)?;
            let mut pastings = Vec::new();
            for p in &ps {
                pastings.push(pasting_json(p)?);
            }
            let report = PasteReportJson { flavor, count: pastings.len(), pastings };
            let out = match fmt {
                FormatArg::Json => json(&report),
                FormatArg::Text => {
                    let mut s = format!("{} pasting(s)\n", report.count);
                    for (i, p) in report.pastings.iter().enumerate() {
                        s.push_str(&format!("--- pasting {} ---\n{}", i + 1, pasting_text(p)));
                    }
                    s
                }
            };
            Ok((if report.count > 0 { EXIT_OK } else { EXIT_FALSE }, out))
        }
        Command::Complete { pasting, ref_deck_of, flavor, graph } => {
            let block = parse_pasting_block(&read_file(pasting)?)?;
            let host = load_one(ref_deck_of, *graph)?;
            let flavor: Flavor = (*flavor).into();
            let reference = DeckRef::of(&host, flavor)?;
            let body = if *graph {
                block.digraph.with_graph_mode(true)
            } else {
                block.digraph
            };
            let p = Pasting::from_parts(body, block.externals, block.labels, reference)?;
            let pj = pasting_json(&p)?;
            let out = match fmt {
                FormatArg::Json => json(&pj),
                FormatArg::Text => pasting_text(&pj),
            };
            Ok((EXIT_OK, out))
        }
        Command::PastedIso { g, h, cards, flavor, graph } => {
            let gg = load_one(g, *graph)?;
            let gh = load_one(h, *graph)?;
            let flavor: Flavor = (*flavor).into();
            let (a, b) = card_pair_for(&gg, cards, flavor)?;
            let reference = DeckRef::of(&gg, flavor)?;
            let witness = crate::pasting::pasted_isomorphically(&a, &b, &reference, &gg, &gh)?;
            let report = PastedIsoJson {
                pasted_isomorphically: witness.is_some(),
                witness: witness.as_ref().map(pasting_json).transpose()?,
            };
            let out = match fmt {
                FormatArg::Json => json(&report),
                FormatArg::Text => match &report.witness {
                    Some(w) => format!("pasted isomorphically: true\n{}", pasting_text(w)),
                    None => "pasted isomorphically: false\n".to_string(),
                },
            };
            Ok((
                if report.pasted_isomorphically { EXIT_OK } else { EXIT_FALSE },
                out,
            ))
        }
        Command::Dichotomy { g, h, mode, fast, graph } => {
            let gg = load_one(g, *graph)?;
            let gh = load_one(h, *graph)?;
            let flavor: Flavor = (*mode).into();
            let verdict = iso_characterization(&gg, &gh, flavor, *fast)?;
            let table: Vec<DichotomyRowJson> = verdict
                .table
                .iter()
                .map(|((a, b), hit)| DichotomyRowJson {
                    card_a: a.code.to_hex(),
                    card_b: b.code.to_hex(),
                    pasted_isomorphically: *hit,
                })
                .collect();
            let report = DichotomyReportJson {
                mode: flavor,
                verdict: verdict.verdict,
                isomorphic: verdict.isomorphic,
                fast_exit: verdict.fast_exit,
                table,
            };
            let out = match fmt {
                FormatArg::Json => json(&report),
                FormatArg::Text => {
                    let mut s = format!(
                        "verdict: {:?}\nisomorphic: {}\n",
                        report.verdict, report.isomorphic
                    );
                    for row in &report.table {
                        s.push_str(&format!(
                            "{} x {} -> {}\n",
                            &row.card_a, &row.card_b, row.pasted_isomorphically
                        ));
                    }
                    s
                }
            };
            Ok((EXIT_OK, out))
        }
        Command::Certify { input } => {
            let d = load_one(input, false)?;
            let cert = certify_da_reconstructible(&d)?;
            let report = match &cert {
                Some(c) => CertifyReportJson {
                    certified: true,
                    card_a: Some(c.card_a.to_hex()),
                    card_b: Some(c.card_b.to_hex()),
                    vertex_a: Some(c.vertex_a),
                    vertex_b: Some(c.vertex_b),
                    alignment: Some(AlignmentJson {
                        v_star: c.alignment.v_star,
                        u_star: c.alignment.u_star,
                        psi: c.alignment.psi.clone(),
                    }),
                },
                None => CertifyReportJson {
                    certified: false,
                    card_a: None,
                    card_b: None,
                    vertex_a: None,
                    vertex_b: None,
                    alignment: None,
                },
            };
            let out = match fmt {
                FormatArg::Json => json(&report),
                FormatArg::Text => match &cert {
                    Some(c) => format!(
                        "certified: cards {} and {} (vertices {} and {}), unique alignment v*={} u*={}\n",
                        c.card_a.to_hex(),
                        c.card_b.to_hex(),
                        c.vertex_a,
                        c.vertex_b,
                        c.alignment.v_star,
                        c.alignment.u_star
                    ),
                    None => "no certificate found (this proves nothing)\n".to_string(),
                },
            };
            Ok((if report.certified { EXIT_OK } else { EXIT_FALSE }, out))
        }
        Command::SIso { d, e } => {
            let gd = load_one(d, false)?;
            let ge = load_one(e, false)?;
            let rel = s_isomorphism(&gd, &ge)?;
            let report = match &rel {
                SIsomorphism::Isomorphic => {
                    SIsoReportJson { relation: "isomorphic".into(), witness: None }
                }
                SIsomorphism::Witness(w) => SIsoReportJson {
                    relation: "witness".into(),
                    witness: Some(SIsoWitnessJson {
                        f: serialize_adjm(None, &w.f),
                        u: w.u,
                        v: w.v,
                    }),
                },
                SIsomorphism::None => SIsoReportJson { relation: "none".into(), witness: None },
            };
            let out = match fmt {
                FormatArg::Json => json(&report),
                FormatArg::Text => match &report.witness {
                    Some(w) => format!(
                        "s-isomorphic via arc reversal at ({}, {})\n{}",
                        w.u, w.v, w.f
                    ),
                    None => format!("{}\n", report.relation),
                },
            };
            Ok((
                if report.relation == "none" { EXIT_FALSE } else { EXIT_OK },
                out,
            ))
        }
        Command::Verify { corpus, files } => {
            let (id, d, e) = match (corpus, &files[..]) {
                (Some(id), []) => {
                    let entry = corpus_get(id)?;
                    match entry.role {
                        CorpusRole::Pair => {
                            let mut it = entry.digraphs.into_iter();
                            (Some(id.clone()), it.next().unwrap(), it.next().unwrap())
                        }
                        CorpusRole::Single => {
                            return verify_c8(&entry.digraphs[0], fmt);
                        }
                    }
                }
                (None, [a, b]) => (None, load_one(a, false)?, load_one(b, false)?),
                _ => {
                    return Err(CliError::Input(
                        "verify takes --corpus <id> or two adjacency files".into(),
                    ))
                }
            };
            let r = pair_report(&d, &e)?;
            let report = PairReportJson {
                id,
                hypomorphic: r.hypomorphic,
                da_hypomorphic: r.da_hypomorphic,
                isomorphic: r.isomorphic,
                s_isomorphic: r.s_isomorphic,
                iso_pasted_card_pair: r.iso_pasted_card_pair.as_ref().map(|(a, b, p)| {
                    IsoPastedJson {
                        card_a: a.code.to_hex(),
                        card_b: b.code.to_hex(),
                        pasting_body: serialize_adjm(None, p.body().base()),
                    }
                }),
                distinguishing_da_invariant: r.distinguishing_da_invariant.clone(),
            };
            let out = match fmt {
                FormatArg::Json => json(&report),
                FormatArg::Text => {
                    let mut s = String::new();
                    if let Some(id) = &report.id {
                        s.push_str(&format!("pair: {id}\n"));
                    }
                    s.push_str(&format!(
                        "hypomorphic: {}\nda_hypomorphic: {}\nisomorphic: {}\ns_isomorphic: {}\n",
                        report.hypomorphic,
                        report.da_hypomorphic,
                        report.isomorphic,
                        report.s_isomorphic
                    ));
                    match &report.iso_pasted_card_pair {
                        Some(w) => s.push_str(&format!(
                            "iso-pasted card pair: {} x {}\n",
                            w.card_a, w.card_b
                        )),
                        None => s.push_str("iso-pasted card pair: none\n"),
                    }
                    if let Some(inv) = &report.distinguishing_da_invariant {
                        s.push_str(&format!("distinguishing da-invariant: {inv}\n"));
                    }
                    s
                }
            };
            Ok((EXIT_OK, out))
        }
        Command::Hunt {
            kind,
            n,
            mode,
            checkpoint,
            classify,
            ceiling,
            max_hosts,
            time_limit_secs,
        } => {
            let mut cfg = ScanConfig::new(*n, (*kind).into(), (*mode).into());
            cfg.checkpoint = checkpoint.clone();
            cfg.ceiling = *ceiling;
            cfg.max_hosts = *max_hosts;
            cfg.time_limit = time_limit_secs.map(Duration::from_secs);
            let (scan, classifier) = if *classify {
                if cfg.mode != Flavor::Card || cfg.kind != Kind::Digraph {
                    return Err(CliError::Input(
                        "--classify requires --kind digraph --mode card".into(),
                    ));
                }
                let report = classify_collision_pairs(&cfg)?;
                (report.scan.clone(), Some((report.pairs, report.violations)))
            } else {
                (deck_collision_scan(&cfg)?, None)
            };
            let to_json = |p: &crate::search::ClassifiedPair| ClassifiedPairJson {
                first: p.first.to_hex(),
                second: p.second.to_hex(),
                iso_pasted: p.iso_pasted,
                da_hypomorphic: p.da_hypomorphic,
            };
            let report = HuntReportJson {
                kind: scan.kind,
                n: scan.n,
                mode: scan.mode,
                seed: cli.seed,
                hosts: scan.hosts,
                complete: scan.complete,
                classes: scan
                    .classes
                    .iter()
                    .map(|c| HuntClassJson {
                        deck_key_hash: format!("{:016x}", c.deck_key_hash),
                        members: c.members.iter().map(|m| m.to_hex()).collect(),
                    })
                    .collect(),
                classifier_pairs: classifier
                    .as_ref()
                    .map(|(pairs, _)| pairs.iter().map(to_json).collect()),
                classifier_violations: classifier
                    .as_ref()
                    .map(|(_, v)| v.iter().map(to_json).collect()),
            };
            let out = match fmt {
                FormatArg::Json => json(&report),
                FormatArg::Text => {
                    let mut s = format!(
                        "scanned {} {}(s) on {} vertices ({} mode): {} collision class(es){}\n",
                        report.hosts,
                        report.kind,
                        report.n,
                        report.mode,
                        report.classes.len(),
                        if report.complete { "" } else { " [incomplete]" }
                    );
                    for class in &report.classes {
                        s.push_str(&format!(
                            "class {}: {}\n",
                            class.deck_key_hash,
                            class.members.join(" ")
                        ));
                    }
                    if let Some(vs) = &report.classifier_violations {
                        if vs.is_empty() {
                            s.push_str("classifier: every iso-pasted collision pair fails dacard hypomorphy\n");
                        } else {
                            for v in vs {
                                s.push_str(&format!(
                                    "VIOLATION: {} and {} are iso-pasted yet da-hypomorphic\n",
                                    v.first, v.second
                                ));
                            }
                        }
                    }
                    s
                }
            };
            let code = if !report.complete {
                EXIT_FALSE
            } else {
                EXIT_OK
            };
            Ok((code, out))
        }
        Command::Corpus { id } => match id {
            None => {
                let out = match fmt {
                    FormatArg::Json => json(&CORPUS_IDS.to_vec()),
                    FormatArg::Text => {
                        let mut s = String::new();
                        for id in CORPUS_IDS {
                            let entry = corpus_get(id)?;
                            s.push_str(&format!(
                                "{id}: {:?}, {} vertices ({})\n",
                                entry.role,
                                entry.digraphs[0].order(),
                                entry.provenance
                            ));
                        }
                        s
                    }
                };
                Ok((EXIT_OK, out))
            }
            Some(id) => {
                let entry = corpus_get(id)?;
                let mut s = String::new();
                for (i, g) in entry.digraphs.iter().enumerate() {
                    let suffix = match entry.role {
                        CorpusRole::Single => String::new(),
                        CorpusRole::Pair => if i == 0 { "-d" } else { "-e" }.to_string(),
                    };
                    s.push_str(&serialize_adjm(Some(&format!("{id}{suffix}")), g));
                    s.push('\n');
                }
                Ok((EXIT_OK, s))
            }
        },
    }
}

#[derive(serde::Serialize)]
struct C8ReportJson {
    id: String,
    arcs: usize,
    census_unpaired: usize,
    census_biarcs: usize,
    v1_v5_share_orbit: bool,
    dapasting_v3_v1_arcs: usize,
    dapasting_v3_v5_arcs: usize,
    dapastings_labeled_isomorphic: bool,
    both_complete_to_host: bool,
    unique_completions: bool,
}

/// The single-entry verification: the two dapastings of the identical
/// dacard pairs differ in arc count, are not labeled-isomorphic, and both
/// complete uniquely back to the host.
fn verify_c8(c8: &Digraph, fmt: FormatArg) -> Result<(i32, String), CliError> {
    let p1 = pasting_from_host(c8, 2, 0, Flavor::Dacard)?;
    let p2 = pasting_from_host(c8, 2, 4, Flavor::Dacard)?;
    let c1 = completions(&p1)?;
    let c2 = completions(&p2)?;
    let orbits = crate::canon::automorphism_orbits(c8);
    let report = C8ReportJson {
        id: "c8".into(),
        arcs: c8.arc_entry_count(),
        census_unpaired: c8.census().0,
        census_biarcs: c8.census().1,
        v1_v5_share_orbit: orbits.iter().any(|b| b.contains(&0) && b.contains(&4)),
        dapasting_v3_v1_arcs: p1.body().base().arc_entry_count(),
        dapasting_v3_v5_arcs: p2.body().base().arc_entry_count(),
        dapastings_labeled_isomorphic: labeled_isomorphic(p1.body(), p2.body()),
        both_complete_to_host: c1.iter().any(|c| crate::canon::are_isomorphic(c, c8))
            && c2.iter().any(|c| crate::canon::are_isomorphic(c, c8)),
        unique_completions: c1.len() == 1 && c2.len() == 1,
    };
    let ok = report.arcs == 28
        && report.v1_v5_share_orbit
        && report.dapasting_v3_v1_arcs == 27
        && report.dapasting_v3_v5_arcs == 26
        && !report.dapastings_labeled_isomorphic
        && report.both_complete_to_host
        && report.unique_completions;
    let out = match fmt {
        FormatArg::Json => json(&report),
        FormatArg::Text => format!(
            "c8: arcs={} census=({},{}) v1~v5 orbit={} dapasting arcs=({},{}) labeled-isomorphic={} unique completions={} complete to host={}\n",
            report.arcs,
            report.census_unpaired,
            report.census_biarcs,
            report.v1_v5_share_orbit,
            report.dapasting_v3_v1_arcs,
            report.dapasting_v3_v5_arcs,
            report.dapastings_labeled_isomorphic,
            report.unique_completions,
            report.both_complete_to_host,
        ),
    };
    Ok((if ok { EXIT_OK } else { EXIT_FALSIFIED }, out))
}
