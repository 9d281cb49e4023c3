//! Induced-subgraph census: counts of cliques, complete bipartite graphs,
//! short chordless cycles, 4-wheels, and the exceptional 5-vertex pattern
//! consumed by the linear-strand formulas.
//!
//! Counting is exhaustive subset enumeration with edge-count pruning; the
//! pattern sizes involved make brute force exact and fast. A subset is
//! counted once, never once per automorphism or bipartition.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

use crate::comb::for_each_combination;
use crate::graph::{Graph, VertexSet};
use crate::Count;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("induced cycle counting supports lengths 3..=5, got {len}")]
    UnsupportedCycleLength { len: usize },
    #[error("pattern graphs are limited to 5 vertices, got {n}")]
    PatternTooLarge { n: usize },
}

/// A fixed small pattern (at most 5 vertices) in canonical form.
#[derive(Debug, Clone)]
pub struct Pattern {
    pub name: String,
    pub graph: Graph,
    canon: u32,
}

impl Pattern {
    pub fn new(name: impl Into<String>, graph: Graph) -> Result<Pattern, CensusError> {
        if graph.n() > 5 {
            return Err(CensusError::PatternTooLarge { n: graph.n() });
        }
        let canon = canonical_code(&graph);
        Ok(Pattern {
            name: name.into(),
            graph,
            canon,
        })
    }

    pub fn size(&self) -> usize {
        self.graph.n()
    }
}

/// The 5-vertex, 7-edge pattern whose complement is a 3-vertex path plus a
/// disjoint edge. With vertices `(a,b,c,d,e) = (0,1,2,3,4)` its edges are
/// `ab, ac, cd, bd, ce, be, ed`.
pub fn pattern_d_graph() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (2, 3), (1, 3), (2, 4), (1, 4), (4, 3)])
        .expect("fixed pattern is a valid simple graph")
}

fn pair_bit(u: usize, v: usize, n: usize) -> u32 {
    // bit index of the pair (u, v), u < v, in lexicographic order
    debug_assert!(u < v && v < n);
    let before: usize = (0..u).map(|r| n - 1 - r).sum();
    (before + (v - u - 1)) as u32
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

/// Canonical form of a graph on at most 5 vertices: the minimum
/// upper-triangle edge code over all vertex relabelings. Two small graphs are
/// isomorphic iff their codes agree.
pub fn canonical_code(g: &Graph) -> u32 {
    let n = g.n();
    debug_assert!(n <= 5);
    let mut best = u32::MAX;
    for perm in permutations(n) {
        let mut code = 0u32;
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    let (a, b) = if perm[u] < perm[v] {
                        (perm[u], perm[v])
                    } else {
                        (perm[v], perm[u])
                    };
                    code |= 1 << pair_bit(a, b, n);
                }
            }
        }
        best = best.min(code);
    }
    best
}

/// Number of `|pattern|`-subsets inducing a graph isomorphic to the pattern.
/// This is the generic engine the specialized counters are checked against.
pub fn count_induced_isomorphic(g: &Graph, pattern: &Pattern) -> Count {
    let k = pattern.size();
    if k > g.n() {
        return 0;
    }
    let target_edges = pattern.graph.edge_count();
    let mut count: Count = 0;
    for_each_combination(g.n(), k, |subset| {
        let s: VertexSet = subset.iter().copied().collect();
        if g.edge_count_within(s) != target_edges {
            return;
        }
        let ind = g.induced_subgraph(s).expect("subset within range").graph;
        if canonical_code(&ind) == pattern.canon {
            count += 1;
        }
    });
    count
}

/// Number of r-subsets inducing a complete graph (`k_r`). Counts via ordered
/// extension, so each clique is seen exactly once.
pub fn count_cliques(g: &Graph, r: usize) -> Count {
    if r == 0 || r > g.n() {
        return if r == 0 { 1 } else { 0 };
    }
    fn extend(g: &Graph, candidates: u128, need: usize) -> Count {
        if need == 0 {
            return 1;
        }
        if (candidates.count_ones() as usize) < need {
            return 0;
        }
        let mut total: Count = 0;
        let mut bits = candidates;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            // only candidates above v remain in `bits`, so no clique repeats
            total += extend(g, bits & g.neighbors(v).mask(), need - 1);
        }
        total
    }
    extend(g, VertexSet::full(g.n()).mask(), r)
}

/// Whether `s` induces a complete bipartite graph; returns the smaller part
/// size on success. Checks that the complement within `s` splits into exactly
/// two components, both independent in the complement's complement, i.e.
/// cliques of the complement.
fn complete_bipartite_split(g: &Graph, s: VertexSet) -> Option<(usize, usize)> {
    // complement components within s, computed directly from g: two vertices
    // are complement-adjacent iff distinct and not g-adjacent
    let mask = s.mask();
    let mut remaining = mask;
    let mut comps: Vec<u128> = Vec::new();
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let mut comp: u128 = 1 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next: u128 = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= !g.neighbors(v).mask() & mask & !(1 << v);
            }
            next &= !comp;
            comp |= next;
            frontier = next;
        }
        remaining &= !comp;
        comps.push(comp);
        if comps.len() > 2 {
            return None;
        }
    }
    if comps.len() != 2 {
        return None;
    }
    // each part must be independent in g (complete in the complement)
    for &comp in &comps {
        let mut bits = comp;
        while bits != 0 {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            if g.neighbors(v).mask() & comp != 0 {
                return None;
            }
        }
    }
    let a = comps[0].count_ones() as usize;
    let b = comps[1].count_ones() as usize;
    Some((a.min(b), a.max(b)))
}

/// Number of induced copies of the complete bipartite graph `K_{a,b}`
/// (`k_{a,b}`); symmetric in `a` and `b`, a subset is counted once.
pub fn count_complete_bipartite(g: &Graph, a: usize, b: usize) -> Count {
    if a == 0 || b == 0 || a + b > g.n() {
        return 0;
    }
    let (a, b) = (a.min(b), a.max(b));
    let target_edges = a * b;
    let mut count: Count = 0;
    for_each_combination(g.n(), a + b, |subset| {
        let s: VertexSet = subset.iter().copied().collect();
        if g.edge_count_within(s) != target_edges {
            return;
        }
        if complete_bipartite_split(g, s) == Some((a, b)) {
            count += 1;
        }
    });
    count
}

/// Sum of `k_{a, s-a}` over `a = 2 .. floor(s/2)` in a single subset pass;
/// this is the bipartite correction block of the linear-strand lower bound.
pub fn count_bipartite_with_min_part_2(g: &Graph, s: usize) -> Count {
    if s < 4 || s > g.n() {
        return 0;
    }
    let mut count: Count = 0;
    for_each_combination(g.n(), s, |subset| {
        let set: VertexSet = subset.iter().copied().collect();
        if let Some((a, _)) = complete_bipartite_split(g, set) {
            if a >= 2 {
                count += 1;
            }
        }
    });
    count
}

/// Number of `len`-subsets inducing a chordless cycle (`c_len`); census scope
/// is lengths 3 through 5.
pub fn count_induced_cycles(g: &Graph, len: usize) -> Result<Count, CensusError> {
    if !(3..=5).contains(&len) {
        return Err(CensusError::UnsupportedCycleLength { len });
    }
    if len > g.n() {
        return Ok(0);
    }
    let mut count: Count = 0;
    for_each_combination(g.n(), len, |subset| {
        let s: VertexSet = subset.iter().copied().collect();
        // 2-regular on <= 5 vertices forces a single cycle
        if subset.iter().all(|&v| g.degree_within(v, s) == 2) {
            count += 1;
        }
    });
    Ok(count)
}

/// Number of 5-subsets inducing a 4-wheel (`w_4`): a 4-cycle plus a hub
/// adjacent to all four rim vertices, 8 edges. Equivalently the complement
/// within the subset is two disjoint edges plus an isolated vertex.
pub fn count_wheels_w4(g: &Graph) -> Count {
    if g.n() < 5 {
        return 0;
    }
    let mut count: Count = 0;
    for_each_combination(g.n(), 5, |subset| {
        let s: VertexSet = subset.iter().copied().collect();
        if g.edge_count_within(s) == 8 && subset.iter().all(|&v| g.degree_within(v, s) >= 3) {
            count += 1;
        }
    });
    count
}

/// Number of 5-subsets inducing the pattern of [`pattern_d_graph`]: 7 edges
/// whose complement is a 3-vertex path plus a disjoint edge.
pub fn count_pattern_d(g: &Graph) -> Count {
    if g.n() < 5 {
        return 0;
    }
    let comp = g.complement();
    let mut count: Count = 0;
    for_each_combination(g.n(), 5, |subset| {
        let s: VertexSet = subset.iter().copied().collect();
        if g.edge_count_within(s) != 7 {
            return;
        }
        // complement has 3 edges; sizes {3,2} force P3 + K2
        let comps = comp.components_within(s);
        if comps.len() == 2 {
            let mut sizes: Vec<usize> = comps.iter().map(|c| c.len()).collect();
            sizes.sort();
            if sizes == [2, 3] {
                count += 1;
            }
        }
    });
    count
}

/// The fixed census consumed by the exact small-index formulas.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    /// clique counts `k_r`, keyed by r as a string
    pub k: BTreeMap<String, Count>,
    /// complete bipartite counts, keyed `"a,b"` with `a <= b`
    pub k_bipartite: BTreeMap<String, Count>,
    pub c4: Count,
    pub w4: Count,
    pub d: Count,
}

pub fn census_report(g: &Graph) -> CensusReport {
    let mut k = BTreeMap::new();
    for r in 2..=5usize {
        k.insert(r.to_string(), count_cliques(g, r));
    }
    let mut k_bipartite = BTreeMap::new();
    k_bipartite.insert("2,2".to_string(), count_complete_bipartite(g, 2, 2));
    k_bipartite.insert("2,3".to_string(), count_complete_bipartite(g, 2, 3));
    CensusReport {
        k,
        k_bipartite,
        c4: count_induced_cycles(g, 4).expect("4 is in scope"),
        w4: count_wheels_w4(g),
        d: count_pattern_d(g),
    }
}
