//! Canonical forms, isomorphism and automorphism orbits.
//!
//! The canonizer runs degree-triple seeded partition refinement, then
//! backtracks over refinement-compatible orderings and keeps the
//! lexicographically least adjacency encoding. Vertex colors let the same
//! search handle labeled digraphs: a color-respecting ordering is required,
//! so two colored digraphs get equal canonical rows exactly when a
//! color-preserving isomorphism exists.

use std::fmt;

use crate::digraph::Digraph;

/// Total-order-comparable canonical code: one length byte, then the
/// canonical adjacency matrix packed row-major, MSB first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonCode(Vec<u8>);

impl CanonCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }

    pub fn from_hex(s: &str) -> Option<CanonCode> {
        if s.len() % 2 != 0 {
            return None;
        }
        let bytes = (0..s.len() / 2)
            .map(|i| u8::from_str_radix(&s[2 * i..2 * i + 2], 16).ok())
            .collect::<Option<Vec<u8>>>()?;
        let n = *bytes.first()? as usize;
        if bytes.len() != 1 + (n * n + 7) / 8 {
            return None;
        }
        Some(CanonCode(bytes))
    }

    /// Rebuilds the canonical representative digraph.
    pub fn decode(&self, symmetric: bool) -> Digraph {
        let n = self.order();
        let mut arcs = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let k = i * n + j;
                if self.0[1 + k / 8] >> (7 - k % 8) & 1 == 1 {
                    arcs.push((i, j));
                }
            }
        }
        Digraph::build(n, &arcs, false)
            .expect("canonical code decodes to a valid digraph")
            .with_graph_mode(symmetric)
    }
}

impl fmt::Debug for CanonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonCode({})", self.to_hex())
    }
}

/// Canonical form of a digraph: the code plus one permutation realizing it
/// (vertex `v` of the input maps to position `witness[v]`).
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    pub code: CanonCode,
    pub witness: Vec<usize>,
}

pub fn canonical_form(g: &Digraph) -> CanonicalForm {
    let (rows, witness) = canonical_rows(g, &vec![0u32; g.order()]);
    CanonicalForm { code: pack_code(g.order(), &rows), witness }
}

/// An arc-preserving bijection from `d` to `e`, if one exists. Consistent
/// with canonical code equality.
pub fn isomorphism(d: &Digraph, e: &Digraph) -> Option<Vec<usize>> {
    if d.order() != e.order() || d.arc_entry_count() != e.arc_entry_count() {
        return None;
    }
    let fd = canonical_form(d);
    let fe = canonical_form(e);
    if fd.code != fe.code {
        return None;
    }
    let mut inv_e = vec![0usize; e.order()];
    for (v, &p) in fe.witness.iter().enumerate() {
        inv_e[p] = v;
    }
    let map: Vec<usize> = fd.witness.iter().map(|&p| inv_e[p]).collect();
    debug_assert!(is_isomorphism(d, e, &map));
    Some(map)
}

pub fn are_isomorphic(d: &Digraph, e: &Digraph) -> bool {
    d.order() == e.order() && canonical_form(d).code == canonical_form(e).code
}

fn is_isomorphism(d: &Digraph, e: &Digraph, map: &[usize]) -> bool {
    d.order() == e.order()
        && d.arc_entry_count() == e.arc_entry_count()
        && d.arcs().all(|(i, j)| e.has_arc(map[i], map[j]))
}

/// Orbits of the automorphism group, as a partition of the vertex set.
/// Blocks are sorted and ordered by their minimum element.
///
/// Two vertices are in one orbit exactly when marking either of them yields
/// the same colored canonical form.
pub fn automorphism_orbits(g: &Digraph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut marked_codes: Vec<Vec<u16>> = Vec::with_capacity(n);
    for v in 0..n {
        let mut colors = vec![0u32; n];
        colors[v] = 1;
        marked_codes.push(canonical_rows(g, &colors).0);
    }
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    let mut assigned = vec![false; n];
    for v in 0..n {
        if assigned[v] {
            continue;
        }
        let mut block = vec![v];
        assigned[v] = true;
        for w in v + 1..n {
            if !assigned[w] && marked_codes[w] == marked_codes[v] {
                block.push(w);
                assigned[w] = true;
            }
        }
        blocks.push(block);
    }
    blocks
}

/// All isomorphisms from `a` to `b`, by backtracking with degree-triple
/// pruning. Intended for the small graphs that appear inside alignments.
pub fn all_isomorphisms(a: &Digraph, b: &Digraph) -> Vec<Vec<usize>> {
    let n = a.order();
    if n != b.order() || a.arc_entry_count() != b.arc_entry_count() {
        return Vec::new();
    }
    let ta: Vec<_> = (0..n).map(|v| a.degree_triple(v)).collect();
    let tb: Vec<_> = (0..n).map(|v| b.degree_triple(v)).collect();
    {
        let mut sa = ta.clone();
        let mut sb = tb.clone();
        sa.sort_unstable();
        sb.sort_unstable();
        if sa != sb {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        a: &Digraph,
        b: &Digraph,
        ta: &[crate::digraph::DegreeTriple],
        tb: &[crate::digraph::DegreeTriple],
        v: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = a.order();
        if v == n {
            out.push(map.clone());
            return;
        }
        for w in 0..n {
            if used[w] || ta[v] != tb[w] {
                continue;
            }
            let ok = (0..v).all(|u| {
                a.has_arc(u, v) == b.has_arc(map[u], w) && a.has_arc(v, u) == b.has_arc(w, map[u])
            });
            if ok {
                map[v] = w;
                used[w] = true;
                rec(a, b, ta, tb, v + 1, map, used, out);
                used[w] = false;
                map[v] = usize::MAX;
            }
        }
    }
    rec(a, b, &ta, &tb, 0, &mut map, &mut used, &mut out);
    out
}

/// Canonical rows with the two given vertices marked by one shared color:
/// equal results exactly when an isomorphism maps one marked set to the
/// other.
pub fn canonical_rows_marked(g: &Digraph, pair: (usize, usize)) -> Vec<u16> {
    let mut colors = vec![0u32; g.order()];
    colors[pair.0] = 1;
    colors[pair.1] = 1;
    canonical_rows(g, &colors).0
}

/// Canonical adjacency rows and the witness permutation, under the given
/// vertex colors. Rows use reversed bit order so `Vec<u16>` comparison
/// matches bit-string comparison.
pub(crate) fn canonical_rows(g: &Digraph, colors: &[u32]) -> (Vec<u16>, Vec<usize>) {
    let n = g.order();
    if n == 0 {
        return (Vec::new(), Vec::new());
    }
    let init = refine(g, seed_colors(g, colors));
    let mut search = Search {
        g,
        n,
        best: None,
        best_witness: Vec::new(),
        generators: Vec::new(),
    };
    search.descend(init, &mut Vec::new());
    (search.best.unwrap(), search.best_witness)
}

pub(crate) fn pack_code(n: usize, rows: &[u16]) -> CanonCode {
    let mut bytes = vec![0u8; 1 + (n * n + 7) / 8];
    bytes[0] = n as u8;
    for (p, row) in rows.iter().enumerate() {
        for q in 0..n {
            // canonical_rows stores bit (n-1-q) for position q
            if row >> (n - 1 - q) & 1 == 1 {
                let k = p * n + q;
                bytes[1 + k / 8] |= 1 << (7 - k % 8);
            }
        }
    }
    CanonCode(bytes)
}

/// Initial colors fold the caller's colors with degree triples. Ranks are
/// assigned by sorted (color, triple) value, so they are stable under
/// isomorphism.
fn seed_colors(g: &Digraph, colors: &[u32]) -> Vec<u32> {
    let n = g.order();
    let keys: Vec<(u32, crate::digraph::DegreeTriple)> =
        (0..n).map(|v| (colors[v], g.degree_triple(v))).collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap() as u32)
        .collect()
}

/// One-dimensional refinement to an equitable partition: vertices are
/// repeatedly split by (color, per-class unpaired-out/unpaired-in/biarc
/// counts) until stable. Returned colors are ranks `0..k`.
fn refine(g: &Digraph, mut colors: Vec<u32>) -> Vec<u32> {
    let n = g.order();
    loop {
        let class_count = colors.iter().max().map_or(0, |&m| m as usize + 1);
        let mut sigs: Vec<(u32, Vec<(u8, u8, u8)>)> = Vec::with_capacity(n);
        for v in 0..n {
            let mut per_class = vec![(0u8, 0u8, 0u8); class_count];
            for w in 0..n {
                if w == v {
                    continue;
                }
                let cell = &mut per_class[colors[w] as usize];
                match (g.has_arc(v, w), g.has_arc(w, v)) {
                    (true, true) => cell.2 += 1,
                    (true, false) => cell.0 += 1,
                    (false, true) => cell.1 += 1,
                    (false, false) => {}
                }
            }
            sigs.push((colors[v], per_class));
        }
        let mut sorted = sigs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        let next: Vec<u32> = sigs
            .iter()
            .map(|s| sorted.binary_search(s).unwrap() as u32)
            .collect();
        if next == colors {
            return colors;
        }
        colors = next;
    }
}

struct Search<'a> {
    g: &'a Digraph,
    n: usize,
    best: Option<Vec<u16>>,
    best_witness: Vec<usize>,
    generators: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn descend(&mut self, colors: Vec<u32>, prefix: &mut Vec<usize>) {
        let target = self.pick_target_cell(&colors);
        match target {
            None => self.leaf(&colors),
            Some(cell) => {
                let mut tried: Vec<usize> = Vec::new();
                for &u in &cell {
                    // orbit pruning: skip u if a prefix-fixing automorphism
                    // already maps a tried candidate to it
                    let mut uf: Vec<usize> = (0..self.n).collect();
                    for gi in 0..self.generators.len() {
                        if prefix.iter().all(|&v| self.generators[gi][v] == v) {
                            for v in 0..self.n {
                                let w = self.generators[gi][v];
                                union(&mut uf, v, w);
                            }
                        }
                    }
                    let ru = find(&mut uf, u);
                    if tried.iter().any(|&w| find(&mut uf, w) == ru) {
                        continue;
                    }
                    tried.push(u);
                    let mut next = Vec::with_capacity(self.n);
                    for (v, &cv) in colors.iter().enumerate() {
                        next.push(if v == u { 2 * cv } else { 2 * cv + 1 });
                    }
                    prefix.push(u);
                    self.descend(refine(self.g, next), prefix);
                    prefix.pop();
                }
            }
        }
    }

    fn pick_target_cell(&self, colors: &[u32]) -> Option<Vec<usize>> {
        let class_count = colors.iter().max().map_or(0, |&m| m as usize + 1);
        for c in 0..class_count as u32 {
            let cell: Vec<usize> = (0..self.n).filter(|&v| colors[v] == c).collect();
            if cell.len() > 1 {
                return Some(cell);
            }
        }
        None
    }

    fn leaf(&mut self, colors: &[u32]) {
        // discrete partition: color ranks are the canonical positions
        let witness: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let mut inv = vec![0usize; self.n];
        for (v, &p) in witness.iter().enumerate() {
            inv[p] = v;
        }
        let mut rows = vec![0u16; self.n];
        for p in 0..self.n {
            let mut row = 0u16;
            for q in 0..self.n {
                if self.g.has_arc(inv[p], inv[q]) {
                    row |= 1 << (self.n - 1 - q);
                }
            }
            rows[p] = row;
        }
        match &self.best {
            None => {
                self.best = Some(rows);
                self.best_witness = witness;
            }
            Some(best) => {
                if rows < *best {
                    self.best = Some(rows);
                    self.best_witness = witness;
                } else if rows == *best {
                    let mut best_inv = vec![0usize; self.n];
                    for (v, &p) in self.best_witness.iter().enumerate() {
                        best_inv[p] = v;
                    }
                    let auto: Vec<usize> = witness.iter().map(|&p| best_inv[p]).collect();
                    if auto.iter().enumerate().any(|(v, &w)| v != w) {
                        debug_assert!(is_isomorphism(self.g, self.g, &auto));
                        self.generators.push(auto);
                    }
                }
            }
        }
    }
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

fn union(uf: &mut [usize], x: usize, y: usize) {
    let rx = find(uf, x);
    let ry = find(uf, y);
    if rx != ry {
        uf[rx.max(ry)] = rx.min(ry);
    }
}
