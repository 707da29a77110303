//! Finite simple graphs on up to 32 vertices, stored as per-vertex bitsets.
//!
//! Vertices are `0..n` internally; all textual formats (edge lists, monomial
//! variables) are 1-based to match the `x1..xn` naming of the ambient ring.
//! Invariants: the adjacency relation is symmetric and irreflexive.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

pub const MAX_VERTICES: usize = 32;

/// Largest vertex count for which brute-force canonical forms are feasible.
pub const MAX_CANONICAL_VERTICES: usize = 8;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count {0} out of range 1..={MAX_VERTICES}")]
    BadVertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0} not allowed")]
    Loop(usize),
    #[error("induced subgraph needs a nonempty vertex set")]
    EmptyKeep,
    #[error("isomorphism dedupe supports n <= {MAX_CANONICAL_VERTICES}, got {0}")]
    EnumerationTooLarge(usize),
    #[error("graph6: empty input")]
    Graph6Empty,
    #[error("graph6: invalid byte {byte:#04x} at offset {offset}")]
    Graph6InvalidByte { byte: u8, offset: usize },
    #[error(
        "graph6: truncated input, expected {expected} data bytes after the size byte, got {got}"
    )]
    Graph6Truncated { expected: usize, got: usize },
    #[error("graph6: trailing data starting at offset {offset}")]
    Graph6Trailing { offset: usize },
    #[error("graph6: nonzero padding bits in final byte at offset {offset}")]
    Graph6Padding { offset: usize },
    #[error("graph6: vertex count {0} unsupported (this toolkit handles 1..={MAX_VERTICES})")]
    Graph6BadVertexCount(usize),
    #[error("edge list parse error at line {line}: {msg}")]
    EdgeListParse { line: usize, msg: String },
}

fn bits(mask: u32) -> impl Iterator<Item = usize> {
    std::iter::successors(if mask == 0 { None } else { Some(mask) }, |m| {
        let next = m & (m - 1);
        if next == 0 {
            None
        } else {
            Some(next)
        }
    })
    .map(|m| m.trailing_zeros() as usize)
}

// ============================================================================
// VertexSet
// ============================================================================

/// A set of vertices as a 32-bit bitset.
///
/// The `Ord` impl compares ascending vertex sequences lexicographically
/// ({x1,x3} < {x2}), which is the canonical order used for cover lists.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn from_indices(vs: &[usize]) -> Self {
        let mut m = 0u32;
        for &v in vs {
            debug_assert!(v < MAX_VERTICES);
            m |= 1 << v;
        }
        VertexSet(m)
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        bits(self.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut a, mut b) = (self.0, other.0);
        while a != 0 && b != 0 {
            let (ta, tb) = (a.trailing_zeros(), b.trailing_zeros());
            match ta.cmp(&tb) {
                Ordering::Equal => {
                    a &= a - 1;
                    b &= b - 1;
                }
                ord => return ord,
            }
        }
        // a prefix sorts before its extensions
        (a != 0).cmp(&(b != 0))
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{}", v + 1)?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// ============================================================================
// Odd girth
// ============================================================================

/// Length of a shortest odd cycle; `Infinite` exactly for bipartite graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum OddGirth {
    Finite(u32),
    Infinite,
}

impl OddGirth {
    /// `self > bound`, with `Infinite` exceeding every bound.
    pub fn exceeds(self, bound: i64) -> bool {
        match self {
            OddGirth::Infinite => true,
            OddGirth::Finite(g) => i64::from(g) > bound,
        }
    }

    pub fn as_option(self) -> Option<u32> {
        match self {
            OddGirth::Finite(g) => Some(g),
            OddGirth::Infinite => None,
        }
    }
}

impl fmt::Display for OddGirth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OddGirth::Finite(g) => write!(f, "{g}"),
            OddGirth::Infinite => write!(f, "infinity"),
        }
    }
}

// ============================================================================
// Graph
// ============================================================================

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u32>,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadVertexCount(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        debug_assert!(v < self.n);
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edges as pairs (u, v) with u < v, in column-major upper-triangle order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        pair_order(self.n)
            .filter(|&(i, j)| self.has_edge(i, j))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).0;
        let adj = (0..self.n)
            .map(|v| full & !self.adj[v] & !(1u32 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// True when some proper 2-coloring exists (componentwise BFS).
    pub fn is_bipartite(&self) -> bool {
        let mut color = vec![-1i8; self.n];
        for s in 0..self.n {
            if color[s] >= 0 {
                continue;
            }
            color[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for w in bits(self.adj[v]) {
                    if color[w] < 0 {
                        color[w] = 1 - color[v];
                        queue.push_back(w);
                    } else if color[w] == color[v] {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Length of a shortest odd cycle, via BFS on the bipartite double cover:
    /// the shortest odd closed walk through any vertex is an odd cycle.
    pub fn odd_girth(&self) -> OddGirth {
        let mut best: Option<u32> = None;
        for s in 0..self.n {
            // state 2v+parity
            let mut dist = vec![u32::MAX; 2 * self.n];
            dist[2 * s] = 0;
            let mut queue = VecDeque::from([2 * s]);
            while let Some(state) = queue.pop_front() {
                let (v, parity) = (state / 2, state % 2);
                for w in bits(self.adj[v]) {
                    let next = 2 * w + (1 - parity);
                    if dist[next] == u32::MAX {
                        dist[next] = dist[state] + 1;
                        queue.push_back(next);
                    }
                }
            }
            let odd = dist[2 * s + 1];
            if odd != u32::MAX {
                best = Some(best.map_or(odd, |b| b.min(odd)));
            }
        }
        match best {
            Some(g) => OddGirth::Finite(g),
            None => OddGirth::Infinite,
        }
    }

    /// Chordality test: maximum cardinality search followed by verification
    /// that the reverse selection order is a perfect elimination ordering.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        let mut weight = vec![0usize; n];
        let mut picked = vec![false; n];
        let mut selection = Vec::with_capacity(n);
        for _ in 0..n {
            let mut v = usize::MAX;
            for u in 0..n {
                if !picked[u] && (v == usize::MAX || weight[u] > weight[v]) {
                    v = u;
                }
            }
            picked[v] = true;
            selection.push(v);
            for u in bits(self.adj[v]) {
                if !picked[u] {
                    weight[u] += 1;
                }
            }
        }
        let elim: Vec<usize> = selection.into_iter().rev().collect();
        let mut pos = vec![0usize; n];
        for (idx, &v) in elim.iter().enumerate() {
            pos[v] = idx;
        }
        for (idx, &v) in elim.iter().enumerate() {
            let later: u32 = bits(self.adj[v])
                .filter(|&u| pos[u] > idx)
                .map(|u| 1u32 << u)
                .sum();
            if later == 0 {
                continue;
            }
            let w = bits(later).min_by_key(|&u| pos[u]).unwrap();
            // every later neighbor of v other than w must already see w
            if later & !(1 << w) & !self.adj[w] != 0 {
                return false;
            }
        }
        true
    }

    /// A gap is a pair of disjoint edges whose four endpoints induce exactly
    /// those two edges.
    pub fn is_gap_free(&self) -> bool {
        let edges = self.edges();
        for (k, &(u1, v1)) in edges.iter().enumerate() {
            for &(u2, v2) in &edges[k + 1..] {
                if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                    continue;
                }
                let crossed = self.has_edge(u1, u2)
                    || self.has_edge(u1, v2)
                    || self.has_edge(v1, u2)
                    || self.has_edge(v1, v2);
                if !crossed {
                    return false;
                }
            }
        }
        true
    }

    /// All minimal vertex covers, as complements of maximal independent sets
    /// (maximal cliques of the complement, Bron-Kerbosch with pivoting).
    /// Sorted in canonical order. An edgeless graph has the single cover {}.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        let comp = self.complement();
        let mut cliques = Vec::new();
        bron_kerbosch(&comp, 0, self.vertex_set().0, 0, &mut cliques);
        let full = self.vertex_set().0;
        let mut covers: Vec<VertexSet> =
            cliques.into_iter().map(|c| VertexSet(full & !c)).collect();
        covers.sort();
        covers
    }

    /// Subgraph induced on `keep`, plus the map new index -> old index.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        if keep.is_empty() {
            return Err(GraphError::EmptyKeep);
        }
        let map: Vec<usize> = keep.iter().collect();
        if let Some(&v) = map.iter().find(|&&v| v >= self.n) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut g = Graph::empty(map.len())?;
        for (a, &va) in map.iter().enumerate() {
            for (b, &vb) in map.iter().enumerate().skip(a + 1) {
                if self.has_edge(va, vb) {
                    g.adj[a] |= 1 << b;
                    g.adj[b] |= 1 << a;
                }
            }
        }
        Ok((g, map))
    }

    // ------------------------------------------------------------------
    // Canonical forms and enumeration
    // ------------------------------------------------------------------

    /// Upper-triangle adjacency bits as a word, first pair in the most
    /// significant position. Numeric order on words equals lexicographic
    /// order on graph6 strings of equal size.
    pub fn edge_word(&self) -> u64 {
        let nbits = self.n * (self.n - 1) / 2;
        let mut word = 0u64;
        for (k, (i, j)) in pair_order(self.n).enumerate() {
            if self.has_edge(i, j) {
                word |= 1 << (nbits - 1 - k);
            }
        }
        word
    }

    pub fn from_edge_word(n: usize, word: u64) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        let nbits = n * (n - 1) / 2;
        for (k, (i, j)) in pair_order(n).enumerate() {
            if word >> (nbits - 1 - k) & 1 == 1 {
                g.adj[i] |= 1 << j;
                g.adj[j] |= 1 << i;
            }
        }
        Ok(g)
    }

    /// Lexicographically least relabeling of the graph, by brute force over
    /// all permutations (hence the n <= 8 limit). Isomorphic graphs and only
    /// those share a canonical form.
    pub fn canonical_form(&self) -> Graph {
        assert!(
            self.n <= MAX_CANONICAL_VERTICES,
            "canonical_form is brute force and limited to n <= {MAX_CANONICAL_VERTICES}"
        );
        let n = self.n;
        let nbits = n * (n - 1) / 2;
        let pairs: Vec<(usize, usize)> = pair_order(n).collect();
        let mut best = self.edge_word();
        for_each_permutation(n, |q| {
            // q[k] = original vertex placed at new label k
            let mut word = 0u64;
            let mut smaller = false;
            for (k, &(i, j)) in pairs.iter().enumerate() {
                let shift = nbits - 1 - k;
                let bit = u64::from(self.has_edge(q[i], q[j]));
                if !smaller {
                    let best_bit = best >> shift & 1;
                    if bit > best_bit {
                        return;
                    }
                    if bit < best_bit {
                        smaller = true;
                    }
                }
                word |= bit << shift;
            }
            if smaller {
                best = word;
            }
        });
        Graph::from_edge_word(n, best).expect("canonical relabeling stays in range")
    }

    // ------------------------------------------------------------------
    // graph6
    // ------------------------------------------------------------------

    /// Encode in graph6 format (single-byte size, 6-bit groups offset by 63).
    pub fn to_graph6(&self) -> String {
        let nbits = self.n * (self.n - 1) / 2;
        let word = self.edge_word();
        let mut out = String::new();
        out.push((self.n as u8 + 63) as char);
        let ngroups = nbits.div_ceil(6);
        for g in 0..ngroups {
            let mut val = 0u8;
            for b in 0..6 {
                let k = 6 * g + b;
                if k < nbits && word >> (nbits - 1 - k) & 1 == 1 {
                    val |= 1 << (5 - b);
                }
            }
            out.push((val + 63) as char);
        }
        out
    }

    /// Decode a graph6 string. Strict: rejects bad bytes, wrong lengths and
    /// nonzero padding, reporting the byte offset.
    pub fn from_graph6(s: &str) -> Result<Self, GraphError> {
        let bytes = s.as_bytes();
        if bytes.is_empty() {
            return Err(GraphError::Graph6Empty);
        }
        for (offset, &b) in bytes.iter().enumerate() {
            if !(63..=126).contains(&b) {
                return Err(GraphError::Graph6InvalidByte { byte: b, offset });
            }
        }
        if bytes[0] == 126 {
            // multi-byte size form, only needed for n > 62
            return Err(GraphError::Graph6BadVertexCount(63));
        }
        let n = (bytes[0] - 63) as usize;
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::Graph6BadVertexCount(n));
        }
        let nbits = n * (n - 1) / 2;
        let ngroups = nbits.div_ceil(6);
        let data = &bytes[1..];
        if data.len() < ngroups {
            return Err(GraphError::Graph6Truncated {
                expected: ngroups,
                got: data.len(),
            });
        }
        if data.len() > ngroups {
            return Err(GraphError::Graph6Trailing {
                offset: 1 + ngroups,
            });
        }
        let mut g = Graph::empty(n)?;
        for (k, (i, j)) in pair_order(n).enumerate() {
            let val = data[k / 6] - 63;
            if val >> (5 - k % 6) & 1 == 1 {
                g.adj[i] |= 1 << j;
                g.adj[j] |= 1 << i;
            }
        }
        // bits past nbits in the last group must be zero
        if ngroups > 0 {
            let val = data[ngroups - 1] - 63;
            let used = nbits - 6 * (ngroups - 1);
            if val & ((1 << (6 - used)) - 1) != 0 {
                return Err(GraphError::Graph6Padding { offset: ngroups });
            }
        }
        Ok(g)
    }

    // ------------------------------------------------------------------
    // Edge list text format
    // ------------------------------------------------------------------

    /// Parse the plain text format: first line is the vertex count, each
    /// following nonempty line one edge "u v" with 1-based endpoints.
    pub fn from_edge_list_text(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, header) = lines.next().ok_or(GraphError::EdgeListParse {
            line: 1,
            msg: "missing vertex count".into(),
        })?;
        let n: usize = header.parse().map_err(|_| GraphError::EdgeListParse {
            line,
            msg: format!("expected vertex count, got {header:?}"),
        })?;
        let mut g = Graph::empty(n).map_err(|e| GraphError::EdgeListParse {
            line,
            msg: e.to_string(),
        })?;
        for (line, l) in lines {
            let mut it = l.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
                let tok = tok.ok_or(GraphError::EdgeListParse {
                    line,
                    msg: format!("expected \"u v\", got {l:?}"),
                })?;
                tok.parse::<usize>().map_err(|_| GraphError::EdgeListParse {
                    line,
                    msg: format!("bad vertex {tok:?}"),
                })
            };
            let u = parse(it.next())?;
            let v = parse(it.next())?;
            if it.next().is_some() {
                return Err(GraphError::EdgeListParse {
                    line,
                    msg: format!("expected \"u v\", got {l:?}"),
                });
            }
            if u == 0 || v == 0 {
                return Err(GraphError::EdgeListParse {
                    line,
                    msg: "vertices are 1-based".into(),
                });
            }
            g.add_edge(u - 1, v - 1)
                .map_err(|e| GraphError::EdgeListParse {
                    line,
                    msg: e.to_string(),
                })?;
        }
        Ok(g)
    }

    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Upper-triangle pairs in column-major order:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
/// This is the bit order of the graph6 format.
fn pair_order(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j)))
}

fn bron_kerbosch(g: &Graph, r: u32, mut p: u32, mut x: u32, out: &mut Vec<u32>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    let pivot = bits(p | x)
        .max_by_key(|&u| (p & g.adj[u]).count_ones())
        .expect("p | x nonempty");
    let mut cand = p & !g.adj[pivot];
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        let vb = 1u32 << v;
        bron_kerbosch(g, r | vb, p & g.adj[v], x & g.adj[v], out);
        p &= !vb;
        x |= vb;
        cand &= !vb;
    }
}

/// Heap's algorithm; calls `f` with each permutation of 0..n.
fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

// ============================================================================
// Enumeration
// ============================================================================

/// Stream all graphs on exactly `n` vertices in a deterministic order.
///
/// With `dedupe_iso` set, one representative per isomorphism class is
/// produced (each in canonical form, ascending by edge word); this needs
/// n <= 8. Without it, all 2^(n(n-1)/2) labeled graphs stream lazily in
/// edge-word order.
pub fn enumerate_graphs(
    n: usize,
    dedupe_iso: bool,
) -> Result<Box<dyn Iterator<Item = Graph> + Send>, GraphError> {
    if n == 0 || n > MAX_VERTICES {
        return Err(GraphError::BadVertexCount(n));
    }
    if !dedupe_iso {
        let nbits = n * (n - 1) / 2;
        if nbits > 32 {
            // 2^nbits iterator would outlive the universe; keep parity with
            // the dedupe limit instead of pretending to support it
            return Err(GraphError::EnumerationTooLarge(n));
        }
        return Ok(Box::new(
            (0..1u64 << nbits).map(move |w| Graph::from_edge_word(n, w).expect("in range")),
        ));
    }
    if n > MAX_CANONICAL_VERTICES {
        return Err(GraphError::EnumerationTooLarge(n));
    }
    // grow representatives one vertex at a time: every class on m+1 vertices
    // arises from some class on m vertices by attaching the new vertex
    let mut level: BTreeSet<u64> = BTreeSet::new();
    level.insert(0); // K1
    for m in 1..n {
        let mut next = BTreeSet::new();
        for &word in &level {
            let g = Graph::from_edge_word(m, word).expect("in range");
            for mask in 0..1u32 << m {
                let mut h = Graph::empty(m + 1).expect("in range");
                h.adj[..m].copy_from_slice(&g.adj);
                for v in bits(mask) {
                    h.adj[v] |= 1 << m;
                    h.adj[m] |= 1 << v;
                }
                next.insert(h.canonical_form().edge_word());
            }
        }
        level = next;
    }
    Ok(Box::new(level.into_iter().map(move |w| {
        Graph::from_edge_word(n, w).expect("in range")
    })))
}

// ============================================================================
// Families
// ============================================================================

/// Cycle on n >= 3 vertices.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least 3 vertices");
    let mut edges: Vec<(usize, usize)> = (0..n - 1).map(|i| (i, i + 1)).collect();
    edges.push((n - 1, 0));
    Graph::from_edges(n, &edges).expect("valid cycle")
}

/// Path on n >= 1 vertices.
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).expect("valid path")
}

/// Complete graph on n >= 1 vertices.
pub fn complete(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = pair_order(n).collect();
    Graph::from_edges(n, &edges).expect("valid complete graph")
}

/// Complete bipartite graph with parts of sizes a, b >= 1.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    assert!(a >= 1 && b >= 1, "both parts must be nonempty");
    let edges: Vec<(usize, usize)> = (0..a)
        .flat_map(|i| (0..b).map(move |j| (i, a + j)))
        .collect();
    Graph::from_edges(a + b, &edges).expect("valid complete bipartite graph")
}

/// Fixture: two triangles {x1,x2,x3} and {x5,x6,x7} joined by the path
/// x3-x4-x5. The disjoint edges x1x2 and x6x7 form a gap, which makes this
/// the stock counterexample for colon-ideal identities that need gap-freeness.
pub fn example42() -> Graph {
    Graph::from_edges(
        7,
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (4, 6),
            (5, 6),
        ],
    )
    .expect("valid fixture")
}
