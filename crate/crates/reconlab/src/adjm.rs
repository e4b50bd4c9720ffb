//! Adjacency-matrix text format.
//!
//! A document holds one or more blocks separated by blank lines. Each block
//! is an optional `name: <id>` line, an optional order line holding the
//! single integer `n`, then `n` rows of `n` space-separated 0/1 entries.
//! `#` starts a comment. Pastings serialize as a block followed by an
//! `externals: u v` line and one `label <v>: ...` line per external.

use thiserror::Error;

use crate::digraph::{DegreeTriple, Digraph, GraphError};
use crate::label::Label;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AdjmError {
    #[error("line {line}: entry {entry:?} is not 0 or 1")]
    BadEntry { line: usize, entry: String },
    #[error("line {line}: row has {got} entries, expected {want}")]
    NotSquare { line: usize, got: usize, want: usize },
    #[error("line {line}: loop on the diagonal")]
    DiagonalLoop { line: usize },
    #[error("block starting at line {line}: expected {want} rows, found {got}")]
    MissingRows { line: usize, want: usize, got: usize },
    #[error("line {line}: matrix is not symmetric but graph mode was requested")]
    NotSymmetric { line: usize },
    #[error("empty document")]
    Empty,
    #[error("line {line}: malformed {what} line")]
    Malformed { line: usize, what: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// One parsed block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: Option<String>,
    pub digraph: Digraph,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Parses a document into named digraphs. With `graph_mode` set every
/// block must be symmetric and is loaded as a graph.
pub fn parse_adjm(text: &str, graph_mode: bool) -> Result<Vec<Block>, AdjmError> {
    let lines: Vec<(usize, String)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l).trim().to_string()))
        .collect();
    let mut blocks = Vec::new();
    let mut i = 0usize;
    while i < lines.len() {
        while i < lines.len() && lines[i].1.is_empty() {
            i += 1;
        }
        if i >= lines.len() {
            break;
        }
        let block_start = lines[i].0;
        let mut name = None;
        if let Some(rest) = lines[i].1.strip_prefix("name:") {
            name = Some(rest.trim().to_string());
            i += 1;
            while i < lines.len() && lines[i].1.is_empty() {
                i += 1;
            }
            if i >= lines.len() {
                return Err(AdjmError::Malformed { line: block_start, what: "block" });
            }
        }
        // optional explicit order line
        let mut declared_n: Option<usize> = None;
        {
            let toks: Vec<&str> = lines[i].1.split_whitespace().collect();
            if toks.len() == 1 {
                if let Ok(n) = toks[0].parse::<usize>() {
                    if n > 1 {
                        declared_n = Some(n);
                        i += 1;
                    }
                }
            }
        }
        let mut rows: Vec<(usize, Vec<u8>)> = Vec::new();
        let want = loop {
            if i >= lines.len() || lines[i].1.is_empty() {
                match declared_n {
                    Some(n) if rows.len() < n => {
                        return Err(AdjmError::MissingRows {
                            line: block_start,
                            want: n,
                            got: rows.len(),
                        })
                    }
                    Some(n) => break n,
                    None => break rows.len(),
                }
            }
            let (line_no, content) = (&lines[i].0, &lines[i].1);
            let mut row = Vec::new();
            for tok in content.split_whitespace() {
                match tok {
                    "0" => row.push(0u8),
                    "1" => row.push(1u8),
                    other => {
                        return Err(AdjmError::BadEntry {
                            line: *line_no,
                            entry: other.to_string(),
                        })
                    }
                }
            }
            rows.push((*line_no, row));
            i += 1;
            if let Some(n) = declared_n {
                if rows.len() == n {
                    break n;
                }
            }
        };
        if rows.is_empty() {
            return Err(AdjmError::Empty);
        }
        if rows.len() != want {
            return Err(AdjmError::MissingRows { line: block_start, want, got: rows.len() });
        }
        let n = want;
        let mut arcs = Vec::new();
        for (r, (line_no, row)) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(AdjmError::NotSquare { line: *line_no, got: row.len(), want: n });
            }
            for (c, &bit) in row.iter().enumerate() {
                if bit == 1 {
                    if r == c {
                        return Err(AdjmError::DiagonalLoop { line: *line_no });
                    }
                    arcs.push((r, c));
                }
            }
        }
        let digraph = Digraph::build(n, &arcs, false)?;
        let digraph = if graph_mode {
            if !digraph.is_arc_set_symmetric() {
                return Err(AdjmError::NotSymmetric { line: block_start });
            }
            digraph.with_graph_mode(true)
        } else {
            digraph
        };
        blocks.push(Block { name, digraph });
    }
    if blocks.is_empty() {
        return Err(AdjmError::Empty);
    }
    Ok(blocks)
}

/// Canonical rendering of one block.
pub fn serialize_adjm(name: Option<&str>, g: &Digraph) -> String {
    let mut s = String::new();
    if let Some(n) = name {
        s.push_str(&format!("name: {n}\n"));
    }
    let n = g.order();
    s.push_str(&format!("{n}\n"));
    for i in 0..n {
        let row: Vec<&str> = (0..n).map(|j| if g.has_arc(i, j) { "1" } else { "0" }).collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

/// A pasting body on disk: matrix block, externals line, label lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PastingBlock {
    pub digraph: Digraph,
    pub externals: (usize, usize),
    pub labels: [(usize, Label); 2],
}

pub fn serialize_pasting_block(
    g: &Digraph,
    externals: (usize, usize),
    labels: [(usize, Label); 2],
) -> String {
    let mut s = serialize_adjm(None, g);
    s.push_str(&format!("externals: {} {}\n", externals.0, externals.1));
    for (v, l) in labels {
        s.push_str(&format!("label {v}: {l}\n"));
    }
    s
}

fn parse_label(text: &str) -> Option<Label> {
    let t = text.trim();
    if t == "e" {
        return Some(Label::E);
    }
    let inner = t.strip_prefix("(e,")?.strip_suffix(')')?;
    let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
    match parts[..] {
        [k] => {
            let k = k.parse().ok()?;
            Some(Label::EDegree(k))
        }
        _ => {
            let inner = inner.trim().strip_prefix('(')?.strip_suffix(')')?;
            let nums: Vec<usize> =
                inner.split(',').map(|x| x.trim().parse().ok()).collect::<Option<_>>()?;
            match nums[..] {
                [a, b, c] => Some(Label::ETriple(DegreeTriple::new(a, b, c))),
                _ => None,
            }
        }
    }
}

pub fn parse_pasting_block(text: &str) -> Result<PastingBlock, AdjmError> {
    let matrix_text: String = text
        .lines()
        .filter(|l| {
            let t = strip_comment(l).trim();
            !t.starts_with("externals:") && !t.starts_with("label ")
        })
        .map(|l| format!("{l}\n"))
        .collect();
    let blocks = parse_adjm(&matrix_text, false)?;
    let digraph = blocks[0].digraph.clone();
    let mut externals = None;
    let mut labels: Vec<(usize, Label)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = strip_comment(raw).trim();
        if let Some(rest) = line.strip_prefix("externals:") {
            let parts: Vec<usize> = rest
                .split_whitespace()
                .map(|t| t.parse().ok())
                .collect::<Option<_>>()
                .ok_or(AdjmError::Malformed { line: i + 1, what: "externals" })?;
            if parts.len() != 2 {
                return Err(AdjmError::Malformed { line: i + 1, what: "externals" });
            }
            externals = Some((parts[0], parts[1]));
        } else if let Some(rest) = line.strip_prefix("label ") {
            let (v, l) = rest
                .split_once(':')
                .ok_or(AdjmError::Malformed { line: i + 1, what: "label" })?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| AdjmError::Malformed { line: i + 1, what: "label" })?;
            let l = parse_label(l).ok_or(AdjmError::Malformed { line: i + 1, what: "label" })?;
            labels.push((v, l));
        }
    }
    let externals = externals.ok_or(AdjmError::Malformed { line: 0, what: "externals" })?;
    if labels.len() != 2 {
        return Err(AdjmError::Malformed { line: 0, what: "label" });
    }
    Ok(PastingBlock { digraph, externals, labels: [labels[0], labels[1]] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_dp3_with_order_line() {
        let blocks = parse_adjm("3\n0 1 0\n0 0 1\n0 0 0\n", false).unwrap();
        assert_eq!(blocks.len(), 1);
        let g = &blocks[0].digraph;
        assert_eq!(g.order(), 3);
        assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_without_order_line_and_with_comments_and_names() {
        let text = "# a path\nname: dp3\n0 1 0\n0 0 1  # middle row\n0 0 0\n\nname: arc\n0 1\n0 0\n";
        let blocks = parse_adjm(text, false).unwrap();
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].name.as_deref(), Some("dp3"));
        assert_eq!(blocks[1].name.as_deref(), Some("arc"));
        assert_eq!(blocks[1].digraph.order(), 2);
    }

    #[test]
    fn rejects_loops_bad_entries_and_ragged_rows() {
        assert_eq!(
            parse_adjm("2\n0 1\n1 1\n", false),
            Err(AdjmError::DiagonalLoop { line: 3 })
        );
        assert!(matches!(
            parse_adjm("0 2\n0 0\n", false),
            Err(AdjmError::BadEntry { entry, .. }) if entry == "2"
        ));
        assert!(matches!(
            parse_adjm("0 1 0\n0 0\n", false),
            Err(AdjmError::NotSquare { .. }) | Err(AdjmError::MissingRows { .. })
        ));
    }

    #[test]
    fn graph_mode_requires_symmetry() {
        assert!(matches!(
            parse_adjm("0 1\n0 0\n", true),
            Err(AdjmError::NotSymmetric { .. })
        ));
        let blocks = parse_adjm("0 1\n1 0\n", true).unwrap();
        assert!(blocks[0].digraph.is_graph_mode());
    }

    #[test]
    fn round_trip_preserves_digraph() {
        let g = Digraph::build(4, &[(0, 3), (3, 1), (1, 0), (2, 3)], false).unwrap();
        let text = serialize_adjm(Some("x"), &g);
        let back = parse_adjm(&text, false).unwrap();
        assert_eq!(back[0].digraph, g);
        assert_eq!(back[0].name.as_deref(), Some("x"));
        assert_eq!(serialize_adjm(Some("x"), &back[0].digraph), text);
    }

    #[test]
    fn pasting_block_round_trip() {
        let g = Digraph::build(3, &[(0, 1), (1, 2)], false).unwrap();
        let labels = [
            (0, Label::ETriple(DegreeTriple::new(1, 0, 0))),
            (2, Label::EDegree(1)),
        ];
        let text = serialize_pasting_block(&g, (0, 2), labels);
        let block = parse_pasting_block(&text).unwrap();
        assert_eq!(block.digraph, g);
        assert_eq!(block.externals, (0, 2));
        assert_eq!(block.labels, labels);
        let bare = serialize_pasting_block(&g, (0, 2), [(0, Label::E), (2, Label::E)]);
        assert_eq!(
            parse_pasting_block(&bare).unwrap().labels,
            [(0, Label::E), (2, Label::E)]
        );
    }
}
