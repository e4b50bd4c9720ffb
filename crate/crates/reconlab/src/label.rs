//! Partially labeled digraphs and label-preserving isomorphism.
//!
//! Labels mark the external vertices of a pasting: a bare `e`, a degree
//! annotation `(e, k)` for graph cards, or a full degree triple annotation
//! for dacards. At most two vertices carry labels and they must be
//! non-adjacent.

use thiserror::Error;

use crate::canon::{canonical_rows, pack_code};
use crate::digraph::{DegreeTriple, Digraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    E,
    EDegree(usize),
    ETriple(DegreeTriple),
}

impl Label {
    fn encode(&self, out: &mut Vec<u8>) {
        match self {
            Label::E => out.push(1),
            Label::EDegree(k) => {
                out.push(2);
                out.push(*k as u8);
            }
            Label::ETriple(t) => {
                out.push(3);
                out.push(t.a as u8);
                out.push(t.b as u8);
                out.push(t.c as u8);
            }
        }
    }
}

impl std::fmt::Display for Label {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Label::E => write!(f, "e"),
            Label::EDegree(k) => write!(f, "(e,{k})"),
            Label::ETriple(t) => write!(f, "(e,{t})"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LabelError {
    #[error("more than two labeled vertices")]
    TooManyLabels,
    #[error("labeled vertices {0} and {1} are adjacent")]
    AdjacentLabels(usize, usize),
    #[error("vertex {0} out of range")]
    BadVertex(usize),
}

/// A digraph with up to two labeled, pairwise non-adjacent vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledDigraph {
    base: Digraph,
    labels: Vec<Option<Label>>,
}

impl LabeledDigraph {
    pub fn new(base: Digraph, labeled: &[(usize, Label)]) -> Result<Self, LabelError> {
        if labeled.len() > 2 {
            return Err(LabelError::TooManyLabels);
        }
        let mut labels = vec![None; base.order()];
        for &(v, l) in labeled {
            if v >= base.order() {
                return Err(LabelError::BadVertex(v));
            }
            labels[v] = Some(l);
        }
        let marked: Vec<usize> = (0..base.order()).filter(|&v| labels[v].is_some()).collect();
        if let [u, v] = marked[..] {
            if base.has_arc(u, v) || base.has_arc(v, u) {
                return Err(LabelError::AdjacentLabels(u, v));
            }
        }
        Ok(LabeledDigraph { base, labels })
    }

    pub fn base(&self) -> &Digraph {
        &self.base
    }

    pub fn label(&self, v: usize) -> Option<Label> {
        self.labels[v]
    }

    pub fn labeled_vertices(&self) -> Vec<(usize, Label)> {
        (0..self.base.order())
            .filter_map(|v| self.labels[v].map(|l| (v, l)))
            .collect()
    }

    /// Canonical code of the labeled digraph. Equal codes exactly when a
    /// label-preserving isomorphism exists. The code embeds the label
    /// values in canonical vertex order, so it lives in a different
    /// namespace than plain digraph codes.
    pub fn canonical_code(&self) -> Vec<u8> {
        let n = self.base.order();
        let mut distinct: Vec<Option<Label>> = self.labels.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let colors: Vec<u32> = self
            .labels
            .iter()
            .map(|l| distinct.binary_search(l).unwrap() as u32)
            .collect();
        let (rows, witness) = canonical_rows(&self.base, &colors);
        let mut inv = vec![0usize; n];
        for (v, &p) in witness.iter().enumerate() {
            inv[p] = v;
        }
        let mut out = vec![n as u8];
        for p in 0..n {
            match self.labels[inv[p]] {
                None => out.push(0),
                Some(l) => l.encode(&mut out),
            }
        }
        out.extend_from_slice(pack_code(n, &rows).as_bytes());
        out
    }
}

/// Label-preserving isomorphism test.
pub fn labeled_isomorphic(p: &LabeledDigraph, q: &LabeledDigraph) -> bool {
    p.base.order() == q.base.order() && p.canonical_code() == q.canonical_code()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Digraph {
        Digraph::build(3, &[(0, 1), (1, 2)], true).unwrap()
    }

    #[test]
    fn label_invariants_enforced() {
        let tri = Digraph::build(3, &[(0, 1), (1, 2), (2, 0)], true).unwrap();
        assert_eq!(
            LabeledDigraph::new(tri, &[(0, Label::E), (1, Label::E)]),
            Err(LabelError::AdjacentLabels(0, 1))
        );
        let g = path3();
        assert!(LabeledDigraph::new(g, &[(0, Label::E), (2, Label::E)]).is_ok());
    }

    #[test]
    fn bare_e_ends_of_path_match_any_relabeling() {
        let p = LabeledDigraph::new(path3(), &[(0, Label::E), (2, Label::E)]).unwrap();
        let other = path3().relabel(&[2, 1, 0]);
        let q = LabeledDigraph::new(other, &[(0, Label::E), (2, Label::E)]).unwrap();
        assert!(labeled_isomorphic(&p, &q));
    }

    #[test]
    fn triple_labels_must_match_exactly() {
        let t1 = Label::ETriple(DegreeTriple::new(1, 0, 0));
        let t2 = Label::ETriple(DegreeTriple::new(0, 1, 0));
        let p = LabeledDigraph::new(path3(), &[(0, t1), (2, t2)]).unwrap();
        let q = LabeledDigraph::new(path3(), &[(0, t1), (2, t1)]).unwrap();
        let r = LabeledDigraph::new(path3(), &[(0, t2), (2, t1)]).unwrap();
        assert!(!labeled_isomorphic(&p, &q));
        assert!(labeled_isomorphic(&p, &r));
    }

    #[test]
    fn label_positions_matter_against_structure() {
        // star center labeled vs leaf labeled
        let star = Digraph::build(3, &[(1, 0), (1, 2)], true).unwrap();
        let center = LabeledDigraph::new(star.clone(), &[(1, Label::E)]).unwrap();
        let leaf = LabeledDigraph::new(star, &[(0, Label::E)]).unwrap();
        assert!(!labeled_isomorphic(&center, &leaf));
    }
}
