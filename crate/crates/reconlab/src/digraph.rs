//! Loop-free directed graphs on a small vertex set, with graphs as the
//! symmetric special case.
//!
//! Vertices are `0..n`. Arcs are ordered pairs. A pair of opposite arcs is a
//! biarc; an arc whose reverse is absent is unpaired. Everything downstream
//! (decks, pastings, scans) is built on top of this type, so it stays small
//! and immutable: every operation returns a fresh value.

use std::fmt;

use thiserror::Error;

/// Hard cap on vertex count. Rows are stored as `u16` bitmasks and all
/// search code assumes this bound.
pub const MAX_VERTICES: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    LoopArc(usize),
    #[error("vertex {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("vertex counts differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("order {0} exceeds the supported maximum {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("operation requires order >= {need}, got {got}")]
    TooSmall { need: usize, got: usize },
}

/// Degree triple `(a, b, c)` of a vertex: counts of out-neighbors (unpaired
/// out-arcs), in-neighbors (unpaired in-arcs) and strong neighbors (biarcs).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct DegreeTriple {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl DegreeTriple {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        DegreeTriple { a, b, c }
    }

    /// First degree: number of out-neighbors.
    pub fn first(&self) -> usize {
        self.a
    }

    /// Second degree: number of in-neighbors.
    pub fn second(&self) -> usize {
        self.b
    }

    /// Third degree: number of strong neighbors.
    pub fn third(&self) -> usize {
        self.c
    }

    /// Outdegree `od = a + c`.
    pub fn outdegree(&self) -> usize {
        self.a + self.c
    }

    /// Indegree `id = b + c`.
    pub fn indegree(&self) -> usize {
        self.b + self.c
    }

    /// Degree pair `dep = (od, id)`.
    pub fn degree_pair(&self) -> (usize, usize) {
        (self.outdegree(), self.indegree())
    }

    /// Split degree `spd = (a + b, c)`.
    pub fn split_degree(&self) -> (usize, usize) {
        (self.a + self.b, self.c)
    }

    /// Total number of adjacent vertices.
    pub fn total(&self) -> usize {
        self.a + self.b + self.c
    }
}

impl fmt::Display for DegreeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

/// A loop-free digraph. `symmetric` records graph mode: the arc set is then
/// closed under reversal and undirected edges are stored as biarcs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    rows: Vec<u16>,
    symmetric: bool,
}

impl Digraph {
    /// Builds a digraph from an arc list. With `symmetric` set the arc list
    /// is symmetrized (graph mode).
    pub fn build(
        n: usize,
        arcs: &[(usize, usize)],
        symmetric: bool,
    ) -> Result<Digraph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        let mut rows = vec![0u16; n];
        for &(i, j) in arcs {
            if i >= n {
                return Err(GraphError::IndexOutOfRange { index: i, order: n });
            }
            if j >= n {
                return Err(GraphError::IndexOutOfRange { index: j, order: n });
            }
            if i == j {
                return Err(GraphError::LoopArc(i));
            }
            rows[i] |= 1 << j;
            if symmetric {
                rows[j] |= 1 << i;
            }
        }
        Ok(Digraph { n, rows, symmetric })
    }

    /// Empty digraph on `n` vertices.
    pub fn empty(n: usize, symmetric: bool) -> Digraph {
        assert!(n <= MAX_VERTICES);
        Digraph { n, rows: vec![0; n], symmetric }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn is_graph_mode(&self) -> bool {
        self.symmetric
    }

    /// Reinterprets the same arc set with a different mode flag.
    /// Graph mode requires an arc set closed under reversal.
    pub fn with_graph_mode(&self, symmetric: bool) -> Digraph {
        if symmetric {
            debug_assert!(self.is_arc_set_symmetric());
        }
        Digraph { n: self.n, rows: self.rows.clone(), symmetric }
    }

    pub fn is_arc_set_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.has_arc(i, j) == self.has_arc(j, i)))
    }

    pub fn has_arc(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    /// All arcs as ordered pairs, row-major.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| (0..self.n).filter(move |&j| self.has_arc(i, j)).map(move |j| (i, j)))
    }

    /// Number of arc entries (a biarc counts twice).
    pub fn arc_entry_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum()
    }

    /// Unpaired arcs only.
    pub fn unpaired_arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs().filter(move |&(i, j)| !self.has_arc(j, i))
    }

    /// `(unpaired arc count, biarc count)` counted directly.
    pub fn census(&self) -> (usize, usize) {
        let total = self.arc_entry_count();
        let paired_entries: usize = self
            .arcs()
            .filter(|&(i, j)| self.has_arc(j, i))
            .count();
        (total - paired_entries, paired_entries / 2)
    }

    /// Undirected edge count; meaningful for graph-mode values.
    pub fn edge_count(&self) -> usize {
        debug_assert!(self.symmetric);
        self.arc_entry_count() / 2
    }

    pub fn add_arc(&self, i: usize, j: usize) -> Digraph {
        assert!(i < self.n && j < self.n && i != j);
        let mut rows = self.rows.clone();
        rows[i] |= 1 << j;
        let still_symmetric = self.symmetric && rows[j] >> i & 1 == 1;
        Digraph { n: self.n, rows, symmetric: still_symmetric }
    }

    /// Adds a biarc (or, in graph mode, an edge).
    pub fn add_biarc(&self, i: usize, j: usize) -> Digraph {
        assert!(i < self.n && j < self.n && i != j);
        let mut rows = self.rows.clone();
        rows[i] |= 1 << j;
        rows[j] |= 1 << i;
        Digraph { n: self.n, rows, symmetric: self.symmetric }
    }

    /// Removes every arc between `i` and `j`, regardless of direction.
    pub fn remove_arcs_between(&self, i: usize, j: usize) -> Digraph {
        assert!(i < self.n && j < self.n);
        let mut rows = self.rows.clone();
        rows[i] &= !(1 << j);
        rows[j] &= !(1 << i);
        Digraph { n: self.n, rows, symmetric: self.symmetric }
    }

    /// Deletes vertex `x`; the remaining vertices are reindexed preserving
    /// their order.
    pub fn delete_vertex(&self, x: usize) -> Digraph {
        assert!(x < self.n, "vertex {x} out of range for order {}", self.n);
        let mut rows = Vec::with_capacity(self.n - 1);
        for i in (0..self.n).filter(|&i| i != x) {
            let r = self.rows[i];
            let low = r & ((1u16 << x) - 1);
            let high = (r >> (x + 1)) << x;
            rows.push(low | high);
        }
        Digraph { n: self.n - 1, rows, symmetric: self.symmetric }
    }

    /// Degree triple of `x`.
    pub fn degree_triple(&self, x: usize) -> DegreeTriple {
        assert!(x < self.n);
        let out = self.rows[x];
        let mut inn = 0u16;
        for j in 0..self.n {
            if self.has_arc(j, x) {
                inn |= 1 << j;
            }
        }
        let strong = (out & inn).count_ones() as usize;
        DegreeTriple {
            a: out.count_ones() as usize - strong,
            b: inn.count_ones() as usize - strong,
            c: strong,
        }
    }

    /// Out-only, in-only and strong neighbor sets of `x`.
    pub fn neighbor_classes(&self, x: usize) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let mut out = Vec::new();
        let mut inn = Vec::new();
        let mut strong = Vec::new();
        for w in 0..self.n {
            if w == x {
                continue;
            }
            match (self.has_arc(x, w), self.has_arc(w, x)) {
                (true, true) => strong.push(w),
                (true, false) => out.push(w),
                (false, true) => inn.push(w),
                (false, false) => {}
            }
        }
        (out, inn, strong)
    }

    /// Applies a permutation: vertex `i` of `self` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Digraph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u16; self.n];
        for (i, j) in self.arcs() {
            rows[perm[i]] |= 1 << perm[j];
        }
        Digraph { n: self.n, rows, symmetric: self.symmetric }
    }

    /// Underlying graph: an edge wherever at least one arc exists.
    pub fn underlying_graph(&self) -> Digraph {
        let mut rows = vec![0u16; self.n];
        for (i, j) in self.arcs() {
            rows[i] |= 1 << j;
            rows[j] |= 1 << i;
        }
        Digraph { n: self.n, rows, symmetric: true }
    }

    /// Whether `self` is a biorientation of the graph `g`: an arc or biarc
    /// exactly where `g` has an edge, vertex for vertex.
    pub fn is_biorientation(&self, g: &Digraph) -> Result<bool, GraphError> {
        if self.n != g.n {
            return Err(GraphError::OrderMismatch(self.n, g.n));
        }
        Ok(self.underlying_graph().rows == g.rows)
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Digraph(n={}, symmetric={})", self.n, self.symmetric)?;
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", if self.has_arc(i, j) { " 1" } else { " 0" })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
