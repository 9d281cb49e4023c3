//! The brute-force Betti oracle via Hochster's formula.
//!
//! For each vertex subset S of size j, the degree-(j-i-2) reduced homology of
//! the clique complex of the complemented induced subgraph contributes to
//! `beta_{i,j}`. Subsets are independent, so the sum parallelizes; counts are
//! merged by addition, which keeps the result identical for any thread count.

use rayon::prelude::*;
use std::collections::BTreeMap;

use super::{BettiTable, EngineError};
use crate::complex::clique_complex;
use crate::graph::{Graph, VertexSet};
use crate::homology::{reduced_homology_dims, Field};
use crate::Count;

/// Default cap on the oracle's vertex count; the subset sum is exponential.
pub const DEFAULT_ORACLE_CAP: usize = 14;

/// Configured Hochster oracle.
#[derive(Debug, Clone, Copy)]
pub struct HochsterOracle {
    pub field: Field,
    pub cap: usize,
}

impl HochsterOracle {
    pub fn new(field: Field) -> HochsterOracle {
        HochsterOracle {
            field,
            cap: DEFAULT_ORACLE_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> HochsterOracle {
        self.cap = cap;
        self
    }

    /// Full graded Betti table of the edge ideal of `g`.
    pub fn compute(&self, g: &Graph) -> Result<BettiTable, EngineError> {
        let n = g.n();
        if n > self.cap || n > 63 {
            return Err(EngineError::OracleCapExceeded {
                n,
                cap: self.cap.min(63),
            });
        }
        let field = self.field;
        let merged: BTreeMap<(u32, u32), Count> = (0u64..1u64 << n)
            .into_par_iter()
            .fold(BTreeMap::new, |mut acc: BTreeMap<(u32, u32), Count>, mask| {
                accumulate_subset(g, field, mask, &mut acc);
                acc
            })
            .reduce(BTreeMap::new, |mut a, b| {
                for (k, v) in b {
                    *a.entry(k).or_insert(0) += v;
                }
                a
            });
        Ok(BettiTable::new(n, merged))
    }
}

fn accumulate_subset(g: &Graph, field: Field, mask: u64, acc: &mut BTreeMap<(u32, u32), Count>) {
    let j = mask.count_ones();
    if j < 2 {
        return;
    }
    let s = VertexSet::from_mask(mask as u128);
    // If some member is isolated in the induced subgraph, the complemented
    // subgraph has a dominating vertex, its clique complex is a cone, and
    // every reduced homology group vanishes. This prunes most subsets of
    // sparse graphs and is exact over every field.
    let mut bits = mask;
    while bits != 0 {
        let v = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        if g.neighbors(v).mask() & s.mask() == 0 {
            return;
        }
    }
    let induced = g.induced_subgraph(s).expect("mask within range").graph;
    let complex = clique_complex(&induced.complement());
    let dims = reduced_homology_dims(&complex, field);
    for (d, count) in dims.iter() {
        if count == 0 || d < 0 {
            continue;
        }
        let i = j as i64 - d as i64 - 2;
        if i >= 0 {
            *acc.entry((i as u32, j)).or_insert(0) += count;
        }
    }
}

/// Convenience wrapper with the default cap.
pub fn betti_table_hochster(g: &Graph, field: Field) -> Result<BettiTable, EngineError> {
    HochsterOracle::new(field).compute(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate;

    #[test]
    fn single_edge_is_principal() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let t = betti_table_hochster(&g, Field::Rationals).unwrap();
        assert_eq!(t.get(0, 2), 1);
        assert_eq!(t.iter().count(), 1);
    }

    #[test]
    fn complete_graph_linear_strand() {
        // beta_{i,i+2} for K4 is (6, 8, 3), nothing off the strand
        let t = betti_table_hochster(&generate::complete(4).unwrap(), Field::Rationals).unwrap();
        assert_eq!(t.linear(0), 6);
        assert_eq!(t.linear(1), 8);
        assert_eq!(t.linear(2), 3);
        assert!(t.off_strand_vanishes());
    }

    #[test]
    fn four_cycle_table() {
        let t = betti_table_hochster(&generate::cycle(4).unwrap(), Field::Rationals).unwrap();
        assert_eq!(t.get(0, 2), 4);
        assert_eq!(t.get(1, 3), 4);
        assert_eq!(t.get(2, 4), 1);
        assert_eq!(t.iter().count(), 3);
    }

    #[test]
    fn empty_graph_has_zero_ideal() {
        let t = betti_table_hochster(&Graph::new(3).unwrap(), Field::Rationals).unwrap();
        assert!(t.is_empty());
    }

    #[test]
    fn cap_is_enforced() {
        let g = Graph::from_edges(15, [(0, 1)]).unwrap();
        let err = betti_table_hochster(&g, Field::Rationals).unwrap_err();
        assert!(matches!(err, EngineError::OracleCapExceeded { n: 15, cap: 14 }));
        assert!(err.to_string().contains("--cap"));
        // lifting the cap admits the graph
        let t = HochsterOracle::new(Field::Rationals)
            .with_cap(15)
            .compute(&g)
            .unwrap();
        assert_eq!(t.get(0, 2), 1);
    }

    #[test]
    fn cone_pruning_changes_nothing() {
        // same sum with the pruning disabled, i.e. summing raw homology
        for seed in 0..10 {
            let g = generate::gnp(6, 0.45, 500 + seed).unwrap();
            let fast = betti_table_hochster(&g, Field::Rationals).unwrap();
            let mut slow: BTreeMap<(u32, u32), Count> = BTreeMap::new();
            for mask in 0u64..1 << g.n() {
                let j = mask.count_ones();
                if j < 2 {
                    continue;
                }
                let s = VertexSet::from_mask(mask as u128);
                let ind = g.induced_subgraph(s).unwrap().graph;
                let dims = reduced_homology_dims(&clique_complex(&ind.complement()), Field::Rationals);
                for (d, count) in dims.iter() {
                    if count == 0 || d < 0 {
                        continue;
                    }
                    let i = j as i64 - d as i64 - 2;
                    if i >= 0 {
                        *slow.entry((i as u32, j)).or_insert(0) += count;
                    }
                }
            }
            assert_eq!(fast, BettiTable::new(g.n(), slow), "seed {seed}");
        }
    }
}
