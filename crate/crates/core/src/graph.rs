//! Simple labeled graphs on up to 128 vertices with bitset adjacency.
//!
//! Vertices are `0..n` in the API; the text and JSON ingestion formats use
//! 1-based labels and [`crate::parse`] converts at the boundary. All values
//! are immutable after construction and every operation is a pure function,
//! so graphs are freely shared across threads.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default vertex cap: one bitset word.
pub const DEFAULT_VERTEX_CAP: usize = 64;
/// Hard ceiling of the fixed-width bitset representation.
pub const MAX_VERTEX_CAP: usize = 128;

type Word = u128;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {vertex}: simple graphs have no loops")]
    Loop { vertex: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error(
        "{n} vertices exceeds the default cap of {DEFAULT_VERTEX_CAP}; \
         use Graph::new_large to lift it (hard ceiling {MAX_VERTEX_CAP})"
    )]
    TooManyVertices { n: usize },
    #[error("{n} vertices exceeds the hard bitset ceiling of {MAX_VERTEX_CAP}")]
    ExceedsHardCap { n: usize },
    #[error("vertex set is not contained in the graph's vertex range 0..{n}")]
    SetOutOfRange { n: usize },
}

/// A subset of the vertices `0..n` of some ambient graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Word);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u128) -> Self {
        VertexSet(mask)
    }

    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTEX_CAP);
        if n == 128 {
            VertexSet(!0)
        } else {
            VertexSet((1 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn mask(self) -> u128 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 128 && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    /// Vertices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    /// Smallest member, if any.
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

/// A labeled simple graph on vertices `0..n`, adjacency as one bitset row per
/// vertex. Invariants: no loops, symmetric adjacency.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<Word>,
}

/// Result of [`Graph::induced_subgraph`]: the relabeled graph together with
/// the label map back into the parent (`labels[new] = old`).
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl Graph {
    /// Empty graph on `n` vertices. Rejects `n > 64` by default.
    pub fn new(n: usize) -> Result<Graph, GraphError> {
        if n > DEFAULT_VERTEX_CAP {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Empty graph on `n` vertices with the size cap lifted to the bitset
    /// ceiling of 128.
    pub fn new_large(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTEX_CAP {
            return Err(GraphError::ExceedsHardCap { n });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an undirected edge. Errors on loops, duplicates, and vertices out
    /// of range.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop { vertex: u });
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge { u, v });
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// Decodes a graph from the bitmask over vertex pairs in lexicographic
    /// order `(0,1), (0,2), .., (0,n-1), (1,2), ..`; bit `k` set means the
    /// k-th pair is an edge. This is the enumeration scheme used by the
    /// exhaustive verifier, so a mask printed in a failure report can be fed
    /// straight back in. Requires `C(n,2) <= 64`.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Graph, GraphError> {
        let mut g = Graph::new(n)?;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if bit < 64 && mask >> bit & 1 == 1 {
                    g.add_edge(u, v)?;
                }
                bit += 1;
            }
        }
        Ok(g)
    }

    /// Inverse of [`Graph::from_edge_mask`].
    pub fn edge_mask(&self) -> u64 {
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        mask
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.n {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        if s.is_subset_of(VertexSet::full(self.n)) {
            Ok(())
        } else {
            Err(GraphError::SetOutOfRange { n: self.n })
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `u < v`, lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut bits = self.adj[u] >> (u + 1) << (u + 1);
            while bits != 0 {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Same vertex set, complemented edge set.
    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n).mask();
        let adj = (0..self.n)
            .map(|v| !self.adj[v] & full & !(1 << v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Maximal connected vertex sets, ordered by smallest member. Singletons
    /// are the isolated vertices.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(VertexSet::full(self.n))
    }

    /// Connected components of the subgraph induced on `s`, without building
    /// the induced graph.
    pub fn components_within(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut remaining = s.mask();
        let mut out = Vec::new();
        while remaining != 0 {
            let start = remaining.trailing_zeros() as usize;
            let mut comp: Word = 1 << start;
            let mut frontier: Word = comp;
            while frontier != 0 {
                let mut next: Word = 0;
                let mut f = frontier;
                while f != 0 {
                    let v = f.trailing_zeros() as usize;
                    f &= f - 1;
                    next |= self.adj[v];
                }
                next &= remaining & !comp;
                comp |= next;
                frontier = next;
            }
            remaining &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn component_count_within(&self, s: VertexSet) -> usize {
        self.components_within(s).len()
    }

    /// Number of isolated vertices.
    pub fn isolated_count(&self) -> usize {
        self.adj.iter().filter(|&&row| row == 0).count()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// No cycles at all: every component is a tree.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.components().len() == self.n
    }

    /// Subgraph induced on `s`, relabeled to `0..|s|` with the label map
    /// recorded (ascending original labels).
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<InducedSubgraph, GraphError> {
        self.check_set(s)?;
        let labels: Vec<usize> = s.iter().collect();
        let k = labels.len();
        let mut adj = vec![0 as Word; k];
        for (a, &u) in labels.iter().enumerate() {
            for (b, &v) in labels.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        Ok(InducedSubgraph {
            graph: Graph { n: k, adj },
            labels,
        })
    }

    /// Number of edges of the subgraph induced on `s`.
    pub fn edge_count_within(&self, s: VertexSet) -> usize {
        let m = s.mask();
        s.iter()
            .map(|v| (self.adj[v] & m).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn degree_within(&self, v: usize, s: VertexSet) -> usize {
        (self.adj[v] & s.mask()).count_ones() as usize
    }

    /// Chordality via maximum cardinality search: build an elimination order,
    /// then verify it is perfect. A graph is chordal iff every cycle longer
    /// than 3 has a chord, iff such an order exists.
    pub fn is_chordal(&self) -> bool {
        let n = self.n;
        if n <= 2 {
            return true;
        }
        let mut weight = vec![0usize; n];
        let mut visited: Word = 0;
        // (vertex, neighbors visited before it, visit time)
        let mut visits: Vec<(usize, Word, usize)> = Vec::with_capacity(n);
        let mut visit_time = vec![usize::MAX; n];
        for t in 0..n {
            let mut best = usize::MAX;
            for v in 0..n {
                if visited >> v & 1 == 0 && (best == usize::MAX || weight[v] > weight[best]) {
                    best = v;
                }
            }
            let v = best;
            visits.push((v, self.adj[v] & visited, t));
            visit_time[v] = t;
            visited |= 1 << v;
            let mut nb = self.adj[v] & !visited;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                weight[w] += 1;
            }
        }
        // Reversed visit order is the candidate perfect elimination order:
        // for each vertex, its earlier-visited neighbors minus the latest one
        // must all be adjacent to that latest one.
        for &(_, earlier, _) in &visits {
            if earlier == 0 {
                continue;
            }
            let mut latest = usize::MAX;
            let mut bits = earlier;
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                if latest == usize::MAX || visit_time[w] > visit_time[latest] {
                    latest = w;
                }
            }
            let rest = earlier & !(1 << latest);
            if rest & !self.adj[latest] != 0 {
                return false;
            }
        }
        true
    }

    /// True iff some 4-subset induces a chordless 4-cycle. Looks for a
    /// nonadjacent pair with two nonadjacent common neighbors.
    pub fn has_induced_c4(&self) -> bool {
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    continue;
                }
                let common = self.adj[u] & self.adj[v];
                if common.count_ones() < 2 {
                    continue;
                }
                let mut bits = common;
                while bits != 0 {
                    let x = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    if common & !self.adj[x] & !(1 << x) != 0 {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Serialization mirror of the JSON ingestion format: 1-based edge labels.
#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.n(),
            edges: g.edges().iter().map(|&(u, v)| [u + 1, v + 1]).collect(),
        }
    }
}
