//! Closed forms and identities for the linear strand `beta_{i,i+2}`.
//!
//! The component-count identity is exact for every graph; the degree/clique
//! formula is exact when the graph has no induced 4-cycle (and always at
//! i = 0, 1); the census-driven expressions are exact at i = 2 and i = 3; the
//! remaining indices are sandwiched between the lower bound here and the
//! lex-segment upper bound in [`super::lex`].

use serde::{Deserialize, Serialize};

use super::{lex::upper_bound, BettiTable, EngineError, HochsterOracle};
use crate::census::{count_bipartite_with_min_part_2, count_cliques, count_complete_bipartite, count_pattern_d, count_wheels_w4};
use crate::comb::{binomial, for_each_combination};
use crate::graph::{Graph, VertexSet};
use crate::homology::Field;
use crate::Count;

/// Sum of `C(deg v, k)` over all vertices.
fn degree_binomial_sum(g: &Graph, k: u64) -> Count {
    let mut total: Count = 0;
    for v in g.vertices() {
        let deg = g.degree(v).expect("vertex in range") as u64;
        total = total
            .checked_add(binomial(deg, k))
            .expect("degree-binomial sum exceeds 64-bit count range");
    }
    total
}

/// Exact `beta_{i,i+2}` computed purely graph-theoretically: over every
/// (i+2)-subset, count the components of the complemented induced subgraph,
/// minus one.
pub fn linear_strand_components(g: &Graph, i: u32) -> Count {
    let size = i as usize + 2;
    if size > g.n() {
        return 0;
    }
    let comp = g.complement();
    let mut total: Count = 0;
    for_each_combination(g.n(), size, |subset| {
        let s: VertexSet = subset.iter().copied().collect();
        total += (comp.component_count_within(s) - 1) as Count;
    });
    total
}

/// `beta_{i,i+2}` as degree binomials minus the clique count. Exact when `g`
/// has no induced 4-cycle, and for every graph at i = 0 or 1; returns `None`
/// outside that applicability range.
pub fn linear_strand_no_c4(g: &Graph, i: u32) -> Option<Count> {
    if i > 1 && g.has_induced_c4() {
        return None;
    }
    let sum = degree_binomial_sum(g, i as u64 + 1);
    let cliques = count_cliques(g, i as usize + 2);
    Some(
        sum.checked_sub(cliques)
            .expect("clique count cannot exceed the degree-binomial sum"),
    )
}

/// Exact `beta_{2,4}` for any simple graph, from the degree sequence and the
/// 4-vertex census.
pub fn beta_2_4_exact(g: &Graph) -> Count {
    let sum = degree_binomial_sum(g, 3);
    let k4 = count_cliques(g, 4);
    let k22 = count_complete_bipartite(g, 2, 2);
    (sum + k22)
        .checked_sub(k4)
        .expect("each 4-clique contributes four degree terms")
}

/// Exact `beta_{3,5}` for any simple graph, from the degree sequence and the
/// 5-vertex census.
pub fn beta_3_5_exact(g: &Graph) -> Count {
    let sum = degree_binomial_sum(g, 4);
    let k5 = count_cliques(g, 5);
    let k23 = count_complete_bipartite(g, 2, 3);
    let w4 = count_wheels_w4(g);
    let d = count_pattern_d(g);
    (sum + k23 + w4 + d)
        .checked_sub(k5)
        .expect("each 5-clique contributes five degree terms")
}

/// Lower bound on `beta_{i,i+2}`: the no-4-cycle expression plus the induced
/// complete-bipartite corrections with both parts of size at least 2, clamped
/// at zero.
pub fn lower_bound(g: &Graph, i: u32) -> Count {
    let sum = degree_binomial_sum(g, i as u64 + 1);
    let cliques = count_cliques(g, i as usize + 2);
    let bipartite = count_bipartite_with_min_part_2(g, i as usize + 2);
    (sum + bipartite).saturating_sub(cliques)
}

/// `beta_{i,i+2}` of the edge ideal of the complete graph `K_n`.
pub fn closed_form_complete(n: usize, i: u32) -> Count {
    (i as Count + 1)
        .checked_mul(binomial(n as u64, i as u64 + 2))
        .expect("complete-graph strand value exceeds 64-bit count range")
}

/// `beta_{i,i+2}` of the edge ideal of the complete bipartite graph `K_{a,b}`.
pub fn closed_form_complete_bipartite(a: usize, b: usize, i: u32) -> Count {
    let k = i as u64 + 2;
    binomial((a + b) as u64, k) - binomial(a as u64, k) - binomial(b as u64, k)
}

/// One row of a strand report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandRow {
    pub i: u32,
    /// Hochster oracle value; absent when the graph exceeds the oracle cap.
    pub oracle: Option<Count>,
    /// Degree/clique formula; absent where inapplicable (induced 4-cycle and
    /// i >= 2).
    pub formula_no_c4: Option<Count>,
    /// Census formula value, populated only on the i = 2 row.
    pub beta24: Option<Count>,
    /// Census formula value, populated only on the i = 3 row.
    pub beta35: Option<Count>,
    pub lower: Count,
    pub upper: Count,
    /// Whether the lower bound meets the oracle; absent without an oracle.
    pub lower_tight: Option<bool>,
}

/// Per-index comparison of every strand method on one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrandReport {
    pub n: usize,
    /// Field characteristic used for the oracle column (0 = rationals).
    pub field: u64,
    pub rows: Vec<StrandRow>,
}

/// Builds the strand report for `i = 0 ..= min(max_i, n-2)`. The oracle
/// column is filled when `n` is within `cap`; a mismatch between the oracle
/// and any applicable exact formula is reported as an invariant violation,
/// never silently rendered.
pub fn strand_report(
    g: &Graph,
    field: Field,
    cap: usize,
    max_i: Option<u32>,
) -> Result<StrandReport, EngineError> {
    let n = g.n();
    let table: Option<BettiTable> = if n <= cap && n <= 63 {
        Some(HochsterOracle::new(field).with_cap(cap).compute(g)?)
    } else {
        None
    };
    let top = match max_i {
        Some(m) => m.min(n.saturating_sub(2) as u32),
        None => n.saturating_sub(2) as u32,
    };
    let mut rows = Vec::new();
    for i in 0..=top {
        if n < 2 {
            break;
        }
        let oracle = table.as_ref().map(|t| t.linear(i));
        let formula_no_c4 = linear_strand_no_c4(g, i);
        let beta24 = (i == 2).then(|| beta_2_4_exact(g));
        let beta35 = (i == 3).then(|| beta_3_5_exact(g));
        let lower = lower_bound(g, i);
        let upper = upper_bound(g, i);
        if let Some(oracle) = oracle {
            let mismatch = |what: &str, value: Count| EngineError::InvariantViolation {
                check: format!("strand row i = {i}"),
                details: format!("{what} = {value} but oracle = {oracle}"),
            };
            if let Some(v) = formula_no_c4 {
                if v != oracle {
                    return Err(mismatch("no-4-cycle formula", v));
                }
            }
            if let Some(v) = beta24 {
                if v != oracle {
                    return Err(mismatch("beta_{2,4} formula", v));
                }
            }
            if let Some(v) = beta35 {
                if v != oracle {
                    return Err(mismatch("beta_{3,5} formula", v));
                }
            }
            if !(lower <= oracle && oracle <= upper) {
                return Err(EngineError::InvariantViolation {
                    check: format!("strand row i = {i}"),
                    details: format!("bounds [{lower}, {upper}] do not sandwich oracle {oracle}"),
                });
            }
        }
        rows.push(StrandRow {
            i,
            oracle,
            formula_no_c4,
            beta24,
            beta35,
            lower,
            upper,
            lower_tight: oracle.map(|o| o == lower),
        });
    }
    Ok(StrandReport {
        n,
        field: field.characteristic(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::betti::betti_table_hochster;
    use crate::generate;

    #[test]
    fn components_formula_examples() {
        // K_{a,b}: C(a+b, i+2) - C(a, i+2) - C(b, i+2)
        let k23 = generate::complete_bipartite(2, 3).unwrap();
        assert_eq!(linear_strand_components(&k23, 1), 9);
        for i in 0..=3 {
            assert_eq!(
                linear_strand_components(&k23, i),
                closed_form_complete_bipartite(2, 3, i)
            );
        }
        // the single 4-subset of C4 has a two-component complement
        assert_eq!(linear_strand_components(&generate::cycle(4).unwrap(), 2), 1);
        // empty sum once i + 2 exceeds n
        assert_eq!(linear_strand_components(&k23, 9), 0);
    }

    #[test]
    fn no_c4_formula_examples() {
        // at i = 0 the expression collapses to the edge count
        for seed in 0..5 {
            let g = generate::gnp(7, 0.5, seed).unwrap();
            assert_eq!(linear_strand_no_c4(&g, 0), Some(g.edge_count() as Count));
        }
        // K3 at i = 1: three wedges minus one triangle
        assert_eq!(linear_strand_no_c4(&generate::complete(3).unwrap(), 1), Some(2));
        assert_eq!(closed_form_complete(3, 1), 2);
        // P4 at i = 1
        assert_eq!(linear_strand_no_c4(&generate::path(4).unwrap(), 1), Some(2));
        // inapplicable past i = 1 with an induced 4-cycle
        let c4 = generate::cycle(4).unwrap();
        assert_eq!(linear_strand_no_c4(&c4, 1), Some(4));
        assert_eq!(linear_strand_no_c4(&c4, 2), None);
    }

    #[test]
    fn beta_2_4_examples() {
        assert_eq!(beta_2_4_exact(&generate::cycle(4).unwrap()), 1);
        assert_eq!(beta_2_4_exact(&generate::complete(4).unwrap()), 3);
        assert_eq!(closed_form_complete(4, 2), 3);
        let tree = generate::random_tree(10, 3).unwrap();
        assert_eq!(beta_2_4_exact(&tree), degree_binomial_sum(&tree, 3));
    }

    #[test]
    fn beta_3_5_examples() {
        assert_eq!(beta_3_5_exact(&generate::wheel(4).unwrap()), 2);
        assert_eq!(beta_3_5_exact(&generate::complete(5).unwrap()), 4);
        assert_eq!(closed_form_complete(5, 3), 4);
        assert_eq!(beta_3_5_exact(&generate::complete_bipartite(2, 3).unwrap()), 1);
        assert_eq!(closed_form_complete_bipartite(2, 3, 3), 1);
    }

    #[test]
    fn lower_bound_examples() {
        let c4 = generate::cycle(4).unwrap();
        assert_eq!(lower_bound(&c4, 2), 1);
        // equals the no-4-cycle formula on graphs without induced 4-cycles
        let tree = generate::random_tree(9, 11).unwrap();
        for i in 0..=7 {
            assert_eq!(Some(lower_bound(&tree, i)), linear_strand_no_c4(&tree, i));
        }
        // and the oracle at i <= 1
        for seed in 0..5 {
            let g = generate::gnp(6, 0.5, 40 + seed).unwrap();
            let t = betti_table_hochster(&g, Field::Rationals).unwrap();
            for i in 0..=1 {
                assert_eq!(lower_bound(&g, i), t.linear(i));
            }
        }
    }

    #[test]
    fn closed_forms() {
        let expect = [6, 8, 3, 0];
        for (i, &e) in expect.iter().enumerate() {
            assert_eq!(closed_form_complete(4, i as u32), e);
        }
        assert_eq!(closed_form_complete(2, 0), 1);
        assert_eq!(closed_form_complete(5, 9), 0);
        let expect_23 = [6, 9, 5, 1];
        for (i, &e) in expect_23.iter().enumerate() {
            assert_eq!(closed_form_complete_bipartite(2, 3, i as u32), e);
            assert_eq!(closed_form_complete_bipartite(3, 2, i as u32), e);
        }
        assert_eq!(closed_form_complete_bipartite(1, 1, 0), 1);
        assert_eq!(closed_form_complete_bipartite(1, 1, 1), 0);
    }

    #[test]
    fn strand_report_on_k23() {
        let g = generate::complete_bipartite(2, 3).unwrap();
        let report = strand_report(&g, Field::Rationals, 14, None).unwrap();
        let oracles: Vec<Count> = report.rows.iter().map(|r| r.oracle.unwrap()).collect();
        assert_eq!(oracles, vec![6, 9, 5, 1]);
        for row in &report.rows {
            assert!(row.lower <= row.oracle.unwrap());
            assert!(row.oracle.unwrap() <= row.upper);
            if row.i <= 2 {
                assert_eq!(row.lower_tight, Some(true));
            }
        }
        assert_eq!(report.rows[2].beta24, Some(5));
        assert_eq!(report.rows[3].beta35, Some(1));
    }

    #[test]
    fn strand_report_beyond_cap_has_no_oracle() {
        let g = generate::path(16).unwrap();
        let report = strand_report(&g, Field::Rationals, 14, Some(3)).unwrap();
        assert_eq!(report.rows.len(), 4);
        assert!(report.rows.iter().all(|r| r.oracle.is_none()));
        assert!(report.rows.iter().all(|r| r.formula_no_c4.is_some()));
    }
}
