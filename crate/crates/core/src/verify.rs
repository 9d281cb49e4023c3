//! Exhaustive cross-validation: every identity, bound, and equivalence the
//! engine promises, checked on one graph or on all labeled graphs up to a
//! vertex count.
//!
//! Graphs are enumerated by edge mask (see [`Graph::from_edge_mask`]), so a
//! failing case is reported as an `(n, mask)` pair that reproduces it.

use rayon::prelude::*;
use thiserror::Error;

use crate::betti::{
    beta_2_4_exact, beta_3_5_exact, has_linear_resolution, linear_strand_components,
    linear_strand_no_c4, lower_bound, triangle_lower_bound, upper_bound, HochsterOracle,
};
use crate::census::{
    count_cliques, count_complete_bipartite, count_induced_cycles, count_induced_isomorphic,
    count_pattern_d, count_wheels_w4, pattern_d_graph, Pattern,
};
use crate::comb::for_each_combination;
use crate::generate;
use crate::graph::{Graph, VertexSet};
use crate::homology::Field;
use crate::Count;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("check `{check}` failed on n = {n}, edge mask {mask:#x}: {details}")]
pub struct Violation {
    pub n: usize,
    pub mask: u64,
    pub check: String,
    pub details: String,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    pub max_n: usize,
    /// Alternate field compared against the rationals on the linear strand.
    pub field: Field,
    pub cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_n: 5,
            field: Field::Prime(2),
            cap: crate::betti::DEFAULT_ORACLE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifySummary {
    /// `(n, graphs checked)` per vertex count.
    pub per_n: Vec<(usize, u64)>,
}

impl VerifySummary {
    pub fn total(&self) -> u64 {
        self.per_n.iter().map(|&(_, c)| c).sum()
    }
}

/// Chordality oracle by definition: no subset of size >= 4 induces a
/// chordless cycle (2-regular connected induced subgraph).
pub fn is_chordal_exhaustive(g: &Graph) -> bool {
    for size in 4..=g.n() {
        let mut found = false;
        for_each_combination(g.n(), size, |subset| {
            if found {
                return;
            }
            let s: VertexSet = subset.iter().copied().collect();
            if subset.iter().all(|&v| g.degree_within(v, s) == 2) {
                let ind = g.induced_subgraph(s).expect("subset in range").graph;
                if ind.is_connected() {
                    found = true;
                }
            }
        });
        if found {
            return false;
        }
    }
    true
}

/// Induced-4-cycle oracle by definition: some 4-subset induces exactly four
/// edges forming a 2-regular graph.
pub fn has_induced_c4_exhaustive(g: &Graph) -> bool {
    let mut found = false;
    for_each_combination(g.n(), 4, |subset| {
        if found {
            return;
        }
        let s: VertexSet = subset.iter().copied().collect();
        if subset.iter().all(|&v| g.degree_within(v, s) == 2) {
            found = true;
        }
    });
    found
}

struct Checker<'g> {
    g: &'g Graph,
    mask: u64,
}

impl Checker<'_> {
    fn fail(&self, check: &str, details: String) -> Violation {
        Violation {
            n: self.g.n(),
            mask: self.mask,
            check: check.to_string(),
            details,
        }
    }

    fn ensure(&self, ok: bool, check: &str, details: impl FnOnce() -> String) -> Result<(), Violation> {
        if ok {
            Ok(())
        } else {
            Err(self.fail(check, details()))
        }
    }
}

/// Runs every cross-check on one graph: structural graph identities, census
/// agreement with the generic pattern counter, every strand formula against
/// the Hochster oracle, the bound sandwich, the linear-resolution
/// equivalence, and strand equality across fields.
pub fn cross_check(g: &Graph, alt_field: Field, cap: usize) -> Result<(), Violation> {
    let n = g.n();
    let c = Checker { g, mask: g.edge_mask() };

    // structural graph identities
    let comp = g.complement();
    c.ensure(comp.complement() == *g, "complement involution", || String::new())?;
    c.ensure(
        g.edge_count() + comp.edge_count() == n * n.saturating_sub(1) / 2,
        "edge count duality",
        || format!("{} + {}", g.edge_count(), comp.edge_count()),
    )?;
    let degree_sum: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
    c.ensure(degree_sum == 2 * g.edge_count(), "degree sum", || {
        format!("sum {} vs 2|E| {}", degree_sum, 2 * g.edge_count())
    })?;
    let comps = g.components();
    let covered: usize = comps.iter().map(|s| s.len()).sum();
    let disjoint = comps
        .iter()
        .enumerate()
        .all(|(a, x)| comps.iter().skip(a + 1).all(|y| x.intersection(*y).is_empty()));
    c.ensure(covered == n && disjoint, "components partition", || {
        format!("{} vertices covered of {n}", covered)
    })?;
    c.ensure(
        g.is_chordal() == is_chordal_exhaustive(g),
        "chordality vs exhaustive cycle search",
        || format!("fast says {}", g.is_chordal()),
    )?;
    c.ensure(
        g.has_induced_c4() == has_induced_c4_exhaustive(g),
        "induced 4-cycle vs exhaustive search",
        || format!("fast says {}", g.has_induced_c4()),
    )?;

    // census counters vs the generic canonical-form engine
    let named: Vec<(&str, Graph, Count)> = vec![
        ("k2", generate::complete(2).unwrap(), count_cliques(g, 2)),
        ("k3", generate::complete(3).unwrap(), count_cliques(g, 3)),
        ("k4", generate::complete(4).unwrap(), count_cliques(g, 4)),
        ("k5", generate::complete(5).unwrap(), count_cliques(g, 5)),
        ("k22", generate::complete_bipartite(2, 2).unwrap(), count_complete_bipartite(g, 2, 2)),
        ("k23", generate::complete_bipartite(2, 3).unwrap(), count_complete_bipartite(g, 2, 3)),
        ("k14", generate::complete_bipartite(1, 4).unwrap(), count_complete_bipartite(g, 1, 4)),
        ("c3", generate::cycle(3).unwrap(), count_induced_cycles(g, 3).unwrap()),
        ("c4", generate::cycle(4).unwrap(), count_induced_cycles(g, 4).unwrap()),
        ("c5", generate::cycle(5).unwrap(), count_induced_cycles(g, 5).unwrap()),
        ("w4", generate::wheel(4).unwrap(), count_wheels_w4(g)),
        ("d", pattern_d_graph(), count_pattern_d(g)),
    ];
    for (name, pattern_graph, specialized) in named {
        let pattern = Pattern::new(name, pattern_graph).expect("pattern fits");
        let generic = count_induced_isomorphic(g, &pattern);
        c.ensure(specialized == generic, "census vs generic counter", || {
            format!("{name}: specialized {specialized}, generic {generic}")
        })?;
    }
    c.ensure(
        count_cliques(g, 2) == g.edge_count() as Count,
        "k2 equals edge count",
        || String::new(),
    )?;

    // oracle tables over the rationals and the alternate field
    let oracle = HochsterOracle::new(Field::Rationals)
        .with_cap(cap)
        .compute(g)
        .map_err(|e| c.fail("oracle", e.to_string()))?;
    c.ensure(
        oracle.get(0, 2) == g.edge_count() as Count,
        "beta_{0,2} equals edge count",
        || format!("{} vs {}", oracle.get(0, 2), g.edge_count()),
    )?;
    c.ensure(
        oracle.iter().all(|((_, j), _)| j as usize <= n),
        "entries vanish beyond n",
        || String::new(),
    )?;

    let top_i = n.saturating_sub(2) as u32;
    for i in 0..=top_i {
        let o = oracle.linear(i);
        let components = linear_strand_components(g, i);
        c.ensure(components == o, "component formula vs oracle", || {
            format!("i = {i}: formula {components}, oracle {o}")
        })?;
        if let Some(v) = linear_strand_no_c4(g, i) {
            c.ensure(v == o, "no-4-cycle formula vs oracle", || {
                format!("i = {i}: formula {v}, oracle {o}")
            })?;
        }
        let (lo, hi) = (lower_bound(g, i), upper_bound(g, i));
        c.ensure(lo <= o && o <= hi, "bound sandwich", || {
            format!("i = {i}: [{lo}, {hi}] vs oracle {o}")
        })?;
        if i <= 2 {
            c.ensure(lo == o, "lower bound tight at i <= 2", || {
                format!("i = {i}: lower {lo}, oracle {o}")
            })?;
        }
    }
    c.ensure(beta_2_4_exact(g) == oracle.linear(2), "beta_{2,4} vs oracle", || {
        format!("{} vs {}", beta_2_4_exact(g), oracle.linear(2))
    })?;
    c.ensure(beta_3_5_exact(g) == oracle.linear(3), "beta_{3,5} vs oracle", || {
        format!("{} vs {}", beta_3_5_exact(g), oracle.linear(3))
    })?;

    c.ensure(
        has_linear_resolution(g) == oracle.off_strand_vanishes(),
        "linear resolution vs off-strand vanishing",
        || format!("chordal complement {}", has_linear_resolution(g)),
    )?;

    if alt_field != Field::Rationals {
        let alt = HochsterOracle::new(alt_field)
            .with_cap(cap)
            .compute(g)
            .map_err(|e| c.fail("alternate-field oracle", e.to_string()))?;
        for i in 0..=top_i {
            c.ensure(
                alt.linear(i) == oracle.linear(i),
                "strand is characteristic independent",
                || format!("i = {i}: {} vs {} over {alt_field}", alt.linear(i), oracle.linear(i)),
            )?;
        }
    }

    c.ensure(
        triangle_lower_bound(g) <= count_cliques(g, 3),
        "triangle bound",
        || format!("{} > {}", triangle_lower_bound(g), count_cliques(g, 3)),
    )?;
    Ok(())
}

/// Runs [`cross_check`] on every labeled graph with 1 to `max_n` vertices.
pub fn verify_exhaustive(opts: VerifyOptions) -> Result<VerifySummary, Violation> {
    let mut per_n = Vec::new();
    for n in 1..=opts.max_n {
        let bits = n * (n - 1) / 2;
        let total: u64 = 1 << bits;
        (0..total).into_par_iter().try_for_each(|mask| {
            let g = Graph::from_edge_mask(n, mask).expect("mask within range");
            cross_check(&g, opts.field, opts.cap)
        })?;
        per_n.push((n, total));
    }
    Ok(VerifySummary { per_n })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exhaustive_through_four_vertices() {
        let summary = verify_exhaustive(VerifyOptions {
            max_n: 4,
            ..VerifyOptions::default()
        })
        .unwrap();
        assert_eq!(summary.per_n, vec![(1, 1), (2, 2), (3, 8), (4, 64)]);
        assert_eq!(summary.total(), 75);
    }

    #[test]
    fn exhaustive_oracles_on_known_graphs() {
        assert!(is_chordal_exhaustive(&generate::complete(5).unwrap()));
        assert!(!is_chordal_exhaustive(&generate::cycle(4).unwrap()));
        assert!(!is_chordal_exhaustive(&generate::cycle(6).unwrap()));
        assert!(is_chordal_exhaustive(&generate::random_tree(7, 1).unwrap()));
        assert!(has_induced_c4_exhaustive(&generate::cycle(4).unwrap()));
        assert!(!has_induced_c4_exhaustive(&generate::complete(5).unwrap()));
    }

    #[test]
    fn violations_format_a_reproducer() {
        let v = Violation {
            n: 4,
            mask: 0b1011,
            check: "demo".to_string(),
            details: "details".to_string(),
        };
        assert!(v.to_string().contains("n = 4"));
        assert!(v.to_string().contains("0xb"));
    }
}
